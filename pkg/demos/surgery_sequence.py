"""Trace the disks met while surgering toward a semiprimitive disk in L(p, 1).

For each p the sequence starts at the primitive disk E_1 = x y^p and ends at
(xy)^p.  Only the disk next to last is again primitive, except when p = 3,
where the middle disk x y x y^2 is primitive too: that is the primitive triple.
"""
import sys

from lensgoeritz.surgery import triple_criterion, verify_sequence


def show(p):
    rep = verify_sequence(p)
    print(f"p = {p}")
    for e in rep.entries:
        print(f"  {e['label']:>3}  {e['word']:<20} {e['verdict']}")
    w, exists = triple_criterion(p)
    print(f"  third disk candidate {w}: {'primitive' if exists else 'not primitive'}")
    assert rep.ok


def main(argv):
    for p in map(int, argv or ["3", "5"]):
        show(p)


if __name__ == "__main__":
    main(sys.argv[1:])
