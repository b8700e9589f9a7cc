"""Which words in the free group on x, y are primitive?

Two independent deciders, Whitehead descent and the balanced-word test,
are run side by side, together with the two cheap necessary conditions.
"""
from lensgoeritz.f2core import (christoffel, cyclic_reduce, is_primitive_christoffel,
                                is_primitive_whitehead, lemma22_filter, oz_shape_check,
                                parse_word)

WORDS = ["x", "xy^3", "xyxy^2", "xyxy^3", "(xy)^4", "xYxy", "xxyxY", "xy^2xy^3xy^2"]


def main():
    print(f"{'word':<16}{'whitehead':<14}{'balanced':<14}{'shape':<7}filter")
    for text in WORDS:
        w = parse_word(text)
        cw = cyclic_reduce(w)
        print(f"{str(w):<16}{is_primitive_whitehead(w).value.value:<14}"
              f"{is_primitive_christoffel(w).value.value:<14}"
              f"{'Pass' if oz_shape_check(cw) else 'Fail':<7}{lemma22_filter(cw).value.value}")

    # the descent records the automorphisms it applied
    v = is_primitive_whitehead(parse_word("xy^2xy^3xy^2"))
    print("\nwitness for xy^2xy^3xy^2:", v.witness)

    print("\nbalanced words with 3 x's:")
    for b in (1, 2, 4, 5, 7):
        print(f"  (3, {b}): {christoffel(3, b)}")


if __name__ == "__main__":
    main()
