"""A small ball in the tree the Goeritz group acts on.

White vertices (primitive pairs, or triples at p = 3) have valence 2 or 3;
black vertices (primitive disks) have infinite valence, so only their
neighbours reached through short coset representatives are listed.
"""
from collections import Counter

from lensgoeritz.tree import BLACK, WHITE, check_tree, enumerate_ball, quotient_check


def main():
    for p in (2, 3, 4):
        ball = enumerate_ball(p, 3, 3)
        white = Counter(ball.valences(WHITE).values())
        black = Counter(ball.valences(BLACK).values())
        print(f"p = {p}: {len(ball.vertices)} vertices, tree: {check_tree(ball).ok}, "
              f"quotient: {quotient_check(ball).reason}")
        print(f"  interior white valences {dict(white)}, black (truncated) {dict(black)}")
    print("\nedges at the base vertex for p = 3, representatives of length <= 1:")
    for line in enumerate_ball(3, 1, 1).edge_lines():
        print("  " + line)


if __name__ == "__main__":
    main()
