"""Exact rc and src on the standard families, with the certificates behind each value."""

import math

from rainbow_list import families as fam
from rainbow_list.exact import compute_param


def show(name, g):
    rc = compute_param(g, "rc")
    src = compute_param(g, "src")
    print(f"{name:<14} n={g.n:<3} m={g.m:<3} rc={rc.value} ({rc.lower.reason}/{rc.upper.reason})"
          f"  src={src.value} ({src.lower.reason}/{src.upper.reason})")
    return rc, src


if __name__ == "__main__":
    print("cycles: both values are ceil(n/2)")
    for n in range(4, 10):
        rc, src = show(f"C{n}", fam.cycle(n))
        assert rc.value == src.value == math.ceil(n / 2)

    print("\nwheels: src grows like n/3 while rc settles at 3")
    for n in range(3, 10):
        show(f"W{n}", fam.wheel(n))

    print("\nPetersen graph: diameter 2 but rc = 3 and src = 4")
    rc, src = show("P10", fam.petersen())
    print("witness for src = 4:", src.upper.data["colouring"])
