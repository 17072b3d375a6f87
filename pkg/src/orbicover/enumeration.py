"""
Monodromy tuples, local-degree profiles, and the enumeration of flexible
genus-2 covers of a fixed (signature, degree) up to conjugacy.

Sphere signatures ``(0; r1, r2, r3, r4)`` use tuples ``[s1, s2, s3, s4]`` with
``s1 s2 s3 = s4^-1``; entry ``i`` is the boundary loop around the ``i``-th
orbifold point in signature order.  The torus signature ``(1; r)`` uses
``[a, b, c]`` with ``a b a^-1 b^-1 = c``, where only ``c`` goes around the
orbifold point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Sequence

from .errors import InconsistencyError, InvalidInputError
from .orbifold import (
    SURFACE_GENUS,
    Signature,
    fraction_json,
    genus_from_area,
    orbifold_area,
)
from .perm import (
    CycleType,
    GroupSummary,
    Permutation,
    all_permutations,
    canonicalize_tuple,
    cycle_type,
    elements_with_cycle_type,
    is_transitive,
    subgroup_summary,
    tuple_conjugates,
)

SPHERE = "sphere"
TORUS = "torus"


def tuple_kind(sig: Signature) -> str:
    if sig.genus == 0 and sig.num_points == 4:
        return SPHERE
    if sig.genus == 1 and sig.num_points == 1:
        return TORUS
    raise InvalidInputError(f"no tuple model for signature {sig}")


def _raw_relation_holds(kind: str, raw: Sequence[tuple[int, ...]]) -> bool:
    if kind == SPHERE:
        s1, s2, s3, s4 = raw
        # s1 s2 s3 s4 = 1, evaluated pointwise (s4 acts first)
        return all(s1[s2[s3[s4[x]]]] == x for x in range(len(s1)))
    a, b, c = raw
    # a b a^-1 b^-1 = c  <=>  a b = c b a
    return all(a[b[x]] == c[b[a[x]]] for x in range(len(a)))


@dataclass(frozen=True, order=True)
class MonodromyTuple:
    """Boundary-loop images of a branched cover; the defining relation is checked on construction."""

    kind: str
    entries: tuple[Permutation, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        expected = {SPHERE: 4, TORUS: 3}.get(self.kind)
        if expected is None:
            raise InvalidInputError(f"unknown tuple kind {self.kind!r}")
        if len(entries) != expected:
            raise InvalidInputError(f"{self.kind} tuple needs {expected} entries, got {len(entries)}")
        if len({p.degree for p in entries}) != 1:
            raise InvalidInputError("tuple entries have different degrees")
        if not _raw_relation_holds(self.kind, [p.images for p in entries]):
            raise InvalidInputError(f"{self} does not satisfy the {self.kind} relation")

    @classmethod
    def parse(cls, text: str, degree: int, kind: str = SPHERE) -> MonodromyTuple:
        """Parse ``"[(0 1 2 3), (0 1)(2 3), (0 1)(2 3), (0 3 2 1)]"``."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        parts = [p for p in re.split(r",(?![^()]*\))", body) if p.strip()]
        return cls(kind, tuple(Permutation.from_cycles(p, degree) for p in parts))

    @property
    def degree(self) -> int:
        return self.entries[0].degree

    @property
    def branch_entries(self) -> tuple[Permutation, ...]:
        """The entries that loop around orbifold points, in signature order."""
        return self.entries if self.kind == SPHERE else self.entries[2:]

    def is_transitive(self) -> bool:
        return is_transitive(self.entries, self.degree)

    def canonical(self) -> MonodromyTuple:
        return MonodromyTuple(self.kind, canonicalize_tuple(self.entries))

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Concatenated image arrays; the sort key for deterministic output."""
        return tuple(p.images for p in self.entries)

    def to_json(self) -> list[list[int]]:
        return [p.to_json() for p in self.entries]

    def cycles_string(self) -> str:
        return ", ".join(str(p) for p in self.entries)

    def __str__(self) -> str:
        return "[" + self.cycles_string() + "]"


def _partitions(total: int, minimum: int) -> list[CycleType]:
    """Partitions of ``total`` into parts ``>= minimum``, each sorted ascending."""
    if total == 0:
        return [()]
    out = []
    for first in range(minimum, total + 1):
        for rest in _partitions(total - first, first):
            out.append((first,) + rest)
    return out


def cone_angles_over(parts: CycleType, order: int) -> tuple[Fraction, ...]:
    """Cone angles (pi units) above a point of the given order; regular points omitted."""
    return tuple(Fraction(2 * length, order) for length in parts if length != order)


@dataclass(frozen=True, order=True)
class LocalProfile:
    """One cycle type per orbifold point, in signature order (the fiber local degrees)."""

    signature: Signature
    degree: int
    parts: tuple[CycleType, ...]

    @property
    def cone_angles(self) -> tuple[Fraction, ...]:
        return tuple(
            sorted(a for r, p in zip(self.signature.orders, self.parts) for a in cone_angles_over(p, r))
        )

    @property
    def cover_genus(self) -> Fraction:
        return genus_from_area(self.degree * orbifold_area(self.signature), self.cone_angles)

    def canonical(self) -> LocalProfile:
        """Representative up to relabelling points of equal order: within each
        order, cycle types sorted descending so the branched point comes first."""
        orders = self.signature.orders
        parts = list(self.parts)
        for r in set(orders):
            idx = [i for i, o in enumerate(orders) if o == r]
            for i, p in zip(idx, sorted((parts[i] for i in idx), reverse=True)):
                parts[i] = p
        return LocalProfile(self.signature, self.degree, tuple(parts))

    def placements(self) -> list[LocalProfile]:
        """Every distinct assignment of these cycle types to points of matching order."""
        orders = self.signature.orders
        groups = sorted(set(orders))
        choices = []
        for r in groups:
            idx = [i for i, o in enumerate(orders) if o == r]
            choices.append((idx, sorted(set(permutations([self.parts[i] for i in idx])))))
        out = set()
        for combo in product(*(c for _, c in choices)):
            parts = [None] * len(orders)
            for (idx, _), arrangement in zip(choices, combo):
                for i, p in zip(idx, arrangement):
                    parts[i] = p
            out.add(LocalProfile(self.signature, self.degree, tuple(parts)))
        return sorted(out)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


def allowed_profiles(sig: Signature, degree: int) -> list[LocalProfile]:
    """Local-degree profiles of flexible genus-2 covers, up to relabelling equal-order points.

    Per point of order ``r``: every local degree ``L >= r`` (angle at least 2*pi);
    ``L > r`` is a cone point, allowed only over even ``r``.  Globally: at least
    one cone point, and the area identity must give genus exactly 2.
    """
    per_point = []
    for r in sig.orders:
        options = _partitions(degree, r)
        if r % 2:
            options = [p for p in options if all(length == r for length in p)]
        per_point.append(options)
    found = set()
    for parts in product(*per_point):
        profile = LocalProfile(sig, degree, tuple(parts))
        if not profile.cone_angles:
            continue
        if profile.cover_genus != SURFACE_GENUS:
            continue
        found.add(profile.canonical())
    return sorted(found)


@dataclass(frozen=True)
class CoverInvariants:
    genus: int
    cone_angles: tuple[Fraction, ...]
    flexible: bool


def cover_invariants(t: MonodromyTuple, sig: Signature) -> CoverInvariants:
    """Genus and cone angles of the cover a tuple defines, and whether it is flexible."""
    if tuple_kind(sig) != t.kind:
        raise InvalidInputError(f"{t.kind} tuple does not fit signature {sig}")
    angles = []
    flexible = sig.is_hyperbolic and not sig.is_triangular
    for r, s in zip(sig.orders, t.branch_entries):
        for length in cycle_type(s):
            if length == r:
                continue
            angles.append(Fraction(2 * length, r))
            # cone points must sit over even orders and exceed 2*pi
            if length < r or r % 2:
                flexible = False
    if not angles:
        flexible = False
    genus = genus_from_area(t.degree * orbifold_area(sig), angles)
    if genus.denominator != 1:
        raise InconsistencyError(f"non-integer cover genus {genus} for {t} over {sig}")
    return CoverInvariants(int(genus), tuple(sorted(angles)), flexible)


@dataclass(frozen=True)
class CoverClass:
    """A conjugacy class of monodromy tuples (equivalently, a cover up to equivalence)."""

    tuple: MonodromyTuple
    signature: Signature
    degree: int
    genus: int
    cone_angles: tuple[Fraction, ...]
    profile: LocalProfile
    group: GroupSummary
    transitive: bool
    flexible: bool

    @classmethod
    def from_tuple(cls, t: MonodromyTuple, sig: Signature) -> CoverClass:
        canonical = t.canonical()
        inv = cover_invariants(canonical, sig)
        parts = tuple(cycle_type(s) for s in canonical.branch_entries)
        return cls(
            tuple=canonical,
            signature=sig,
            degree=canonical.degree,
            genus=inv.genus,
            cone_angles=inv.cone_angles,
            profile=LocalProfile(sig, canonical.degree, parts),
            group=subgroup_summary(canonical.entries),
            transitive=canonical.is_transitive(),
            flexible=inv.flexible,
        )

    def to_json(self) -> dict:
        return {
            "signature": self.signature.to_json(),
            "degree": self.degree,
            "tuple": self.tuple.to_json(),
            "tuple_cycles": self.tuple.cycles_string(),
            "cone_angles_pi": [angle_json(a) for a in self.cone_angles],
            "genus": self.genus,
            "group": self.group.to_json(),
            "profiles": self.profile.to_json(),
        }


def angle_json(value: Fraction):
    return value.numerator if value.denominator == 1 else fraction_json(value)


def _chunks(items: list, count: int) -> list[list]:
    count = max(1, count)
    return [items[k::count] for k in range(count)]


def _sphere_solutions(placement: LocalProfile, first_entries: Iterable[Permutation]):
    p1, p2, p3, p4 = placement.parts
    degree = placement.degree
    second = [s.images for s in sorted(elements_with_cycle_type(p2, degree))]
    third = [s.images for s in sorted(elements_with_cycle_type(p3, degree))]
    for s1 in first_entries:
        a = s1.images
        for b in second:
            ab = tuple(a[x] for x in b)
            for c in third:
                # s4 = (s1 s2 s3)^-1
                abc = [ab[x] for x in c]
                s4 = [0] * degree
                for x, y in enumerate(abc):
                    s4[y] = x
                yield (a, b, c, tuple(s4))


def _torus_solutions(placement: LocalProfile, first_entries: Iterable[Permutation]):
    degree = placement.degree
    everything = all_permutations(degree)
    for a in first_entries:
        ai = a.inverse().images
        for b in everything:
            bi = b.inverse().images
            # c = a b a^-1 b^-1
            c = tuple(a.images[b.images[ai[bi[x]]]] for x in range(degree))
            yield (a.images, b.images, c)


def enumerate_cover_classes(sig: Signature, degree: int, partitions: int = 1) -> list[CoverClass]:
    """All conjugacy classes of transitive tuples realising a flexible genus-2 cover.

    Every placement of every allowed profile is enumerated, so the result is
    closed under the mapping class group action.  The loop over the first
    entry can be split into ``partitions`` independent chunks; the merged
    result does not depend on how it is split.
    """
    kind = tuple_kind(sig)
    placements = [pl for prof in allowed_profiles(sig, degree) for pl in prof.placements()]
    canonical: set[tuple[tuple[int, ...], ...]] = set()
    for placement in placements:
        if kind == SPHERE:
            candidates = sorted(elements_with_cycle_type(placement.parts[0], degree))
            solve, wanted = _sphere_solutions, placement.parts[3]
        else:
            candidates = list(all_permutations(degree))
            solve, wanted = _torus_solutions, placement.parts[0]
        for chunk in _chunks(candidates, partitions):
            canonical |= _classes_from(solve(placement, chunk), wanted, kind, degree)
    classes = [CoverClass.from_tuple(MonodromyTuple(kind, tuple(map(Permutation, raw))), sig) for raw in canonical]
    for c in classes:
        if not (c.transitive and c.flexible and c.genus == SURFACE_GENUS):
            raise InconsistencyError(f"enumerated class {c.tuple} is not a flexible genus-2 cover")
    return sorted(classes, key=lambda c: c.tuple.key())


def _classes_from(solutions, wanted: CycleType, kind: str, degree: int) -> set:
    """Canonical forms of the transitive solutions whose last entry has cycle type ``wanted``."""
    seen: set = set()
    reps: set = set()
    for raw in solutions:
        last = raw[-1]
        if raw in seen or cycle_type(Permutation(last)) != wanted:
            continue
        entries = tuple(Permutation(r) for r in raw)
        if not is_transitive(entries, degree):
            continue
        orbit = tuple_conjugates(entries)
        seen |= orbit
        reps.add(min(orbit))
    return reps


def count_by_placement(classes: Sequence[CoverClass]) -> dict[LocalProfile, int]:
    counts: dict[LocalProfile, int] = {}
    for c in classes:
        counts[c.profile] = counts.get(c.profile, 0) + 1
    return dict(sorted(counts.items()))
