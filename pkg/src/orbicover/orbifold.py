"""
Orbifold signatures and Gauss-Bonnet bookkeeping.

Areas and cone angles are exact :class:`fractions.Fraction` coefficients of
pi, so ``Fraction(1, 3)`` means an area of pi/3 and ``Fraction(3)`` a cone
angle of 3*pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InvalidInputError

#: genus of the covering surface throughout the pipeline
SURFACE_GENUS = 2
MIN_DEGREE, MAX_DEGREE = 3, 12
#: (genus, number of orbifold points) pairs that can be flexibly covered by genus 2
ALLOWED_SHAPES = ((0, 4), (0, 5), (1, 1))


@dataclass(frozen=True, order=True)
class Signature:
    """``(g; r_1, ..., r_m)`` with the orders kept in ascending order."""

    genus: int
    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(sorted(int(r) for r in self.orders))
        if self.genus < 0:
            raise InvalidInputError(f"negative genus {self.genus}")
        if any(r < 2 for r in orders):
            raise InvalidInputError(f"orbifold orders must be >= 2, got {orders}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def parse(cls, text: str) -> Signature:
        """Parse the CLI grammar ``<genus>:<r1>,<r2>,...`` (also accepts ``(0; 2, 2, 2, 3)``)."""
        cleaned = text.strip().strip("()")
        sep = ":" if ":" in cleaned else ";"
        if sep not in cleaned:
            raise InvalidInputError(f"cannot parse signature {text!r}")
        genus, _, rest = cleaned.partition(sep)
        try:
            orders = tuple(int(r) for r in rest.split(",") if r.strip())
            return cls(int(genus), orders)
        except ValueError as exc:
            raise InvalidInputError(f"cannot parse signature {text!r}") from exc

    @classmethod
    def from_json(cls, data: dict) -> Signature:
        return cls(int(data["genus"]), tuple(data["orders"]))

    @property
    def num_points(self) -> int:
        return len(self.orders)

    @property
    def even_orders(self) -> tuple[int, ...]:
        return tuple(r for r in self.orders if r % 2 == 0)

    @property
    def is_triangular(self) -> bool:
        return self.genus == 0 and self.num_points == 3

    @property
    def is_hyperbolic(self) -> bool:
        return orbifold_area(self) > 0

    def to_json(self) -> dict:
        return {"genus": self.genus, "orders": list(self.orders)}

    def cli_form(self) -> str:
        return f"{self.genus}:" + ",".join(map(str, self.orders))

    def __str__(self) -> str:
        return f"({self.genus}; " + ", ".join(map(str, self.orders)) + ")"


@dataclass(frozen=True)
class ConeData:
    """Genus and cone angles (pi units) of a cone surface."""

    genus: int
    angles: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(sorted(Fraction(a) for a in self.angles)))

    @property
    def negatively_curved(self) -> bool:
        return bool(self.angles) and all(a > 2 for a in self.angles)


def orbifold_area(sig: Signature) -> Fraction:
    """Gauss-Bonnet area of a hyperbolic orbifold, in units of pi.  May be <= 0."""
    euler = 2 - 2 * sig.genus - sum(1 - Fraction(1, r) for r in sig.orders)
    return -2 * euler


def cone_surface_area(cone: ConeData) -> Fraction:
    """Gauss-Bonnet area of a cone surface, in units of pi."""
    euler = 2 - 2 * cone.genus - sum(1 - a / 2 for a in cone.angles)
    return -2 * euler


def genus_from_area(area: Fraction, angles: Sequence[Fraction]) -> Fraction:
    """Solve ``cone_surface_area(ConeData(h, angles)) == area`` for ``h``.

    Returned as a Fraction; callers decide what a non-integer means.
    """
    return (2 - sum(1 - Fraction(a) / 2 for a in angles) + Fraction(area) / 2) / 2


def max_cone_points(sig: Signature, degree: int, genus: int = SURFACE_GENUS) -> int:
    """Upper bound on the number of cone points of a flexible cover of this degree.

    Uses the largest even orbifold order ``r``: every cone angle is at least
    ``2(r+1)/r`` pi, which caps how many fit in the available area.
    """
    if not sig.even_orders:
        raise InvalidInputError(f"{sig} has no even order point; no flexible cover exists")
    r = max(sig.even_orders)
    bound = -r * (orbifold_area(sig) * degree - 4 * genus + 4) / 2
    return max(0, math.floor(bound))


def _sorted_orders(count: int, low: int, high: int) -> Iterator[tuple[int, ...]]:
    if count == 0:
        yield ()
        return
    for r in range(low, high + 1):
        for rest in _sorted_orders(count - 1, r, high):
            yield (r,) + rest


def candidate_signatures() -> list[tuple[Signature, int]]:
    """Every (signature, degree) pair passing the order, divisibility and area filters."""
    out = []
    for degree in range(MIN_DEGREE, MAX_DEGREE + 1):
        for genus, m in ALLOWED_SHAPES:
            for orders in _sorted_orders(m, 2, degree):
                if any(r % 2 and degree % r for r in orders):
                    continue
                sig = Signature(genus, orders)
                area = orbifold_area(sig)
                # hyperbolic, and the genus-2 area 4*pi exceeds degree * area
                if area > 0 and degree * area < 4:
                    out.append((sig, degree))
    return sorted(out)


@dataclass(frozen=True)
class TableRow:
    signature: Signature
    degrees: tuple[int, ...]
    area: Fraction

    def to_json(self) -> dict:
        return {
            "signature": self.signature.to_json(),
            "degrees": list(self.degrees),
            "area": fraction_json(self.area),
        }


def signature_table() -> list[TableRow]:
    """Candidate pairs grouped by signature, with areas."""
    grouped: dict[Signature, list[int]] = {}
    for sig, degree in candidate_signatures():
        grouped.setdefault(sig, []).append(degree)
    return [TableRow(sig, tuple(ds), orbifold_area(sig)) for sig, ds in sorted(grouped.items())]


def parity_exclusion(sig: Signature, degree: int) -> str | None:
    """Reason the pair cannot carry a flexible genus-2 cover, or ``None`` if it is kept.

    With an odd degree, every even-order point needs a cone point over it
    (an all-regular fiber over an even point forces an even degree).  If there
    are more even-order points than cone points available, the pair dies.
    """
    if degree % 2 == 0:
        return None
    n_max = max_cone_points(sig, degree)
    evens = len(sig.even_orders)
    if n_max < evens:
        return (
            f"odd degree {degree} allows at most {n_max} cone point(s) "
            f"but {sig} has {evens} even-order points"
        )
    return None


def surviving_cases() -> list[tuple[Signature, int]]:
    return [(sig, d) for sig, d in candidate_signatures() if parity_exclusion(sig, d) is None]


def fraction_json(value: Fraction) -> dict:
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def pi_string(value: Fraction) -> str:
    """``Fraction(2, 3)`` -> ``"2π/3"``."""
    value = Fraction(value)
    if value == 0:
        return "0"
    num = "π" if value.numerator == 1 else f"{value.numerator}π"
    return num if value.denominator == 1 else f"{num}/{value.denominator}"
