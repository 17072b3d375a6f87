"""Compare enumerated class counts with the brute-force oracles in tests/oracles.py.

Degree <= 4 searches all of Sym(D)^3; degree 6 fixes the first entry to one
element per cycle type and searches the rest.  Takes under a minute.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import oracles  # noqa: E402
from orbicover.enumeration import enumerate_cover_classes  # noqa: E402
from orbicover.orbifold import surviving_cases  # noqa: E402


def main():
    bad = 0
    for sig, degree in surviving_cases():
        start = time.perf_counter()
        if sig.genus == 1:
            expected, _ = oracles.torus_classes(sig.orders[0], degree)
        elif degree <= 4:
            expected, _ = oracles.sphere_classes_full(sig.orders, degree)
        else:
            expected = oracles.sphere_classes_reduced(sig.orders, degree)
        got = len(enumerate_cover_classes(sig, degree))
        bad += got != expected
        flag = "ok" if got == expected else "MISMATCH"
        print(f"{str(sig):18} D={degree}  enumerated {got:3}  oracle {expected:3}  {flag}"
              f"  ({time.perf_counter() - start:.1f}s)")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
