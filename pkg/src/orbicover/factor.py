"""
Nested covers and the holonomy test.

A block system of a cover's monodromy group is the same thing as a
factorization ``p = q o r`` through an intermediate cover: ``q`` has degree
equal to the number of blocks and its monodromy is the induced action on
blocks, ``r`` has degree equal to the block size.  A flexible class that
factors through a smaller flexible cover ``r`` is not a holonomy cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enumeration import CoverClass, angle_json
from .errors import InconsistencyError
from .orbifold import MIN_DEGREE, Signature, orbifold_area
from .perm import CycleType, Partition, Permutation, block_systems


@dataclass(frozen=True)
class Factorization:
    blocks: Partition
    q_degree: int
    r_degree: int
    intermediate: Signature
    q_branch_data: tuple[CycleType, ...]
    # one entry per intermediate point (orbifold or regular): (order, r-local degrees, cone angles)
    r_local: tuple[tuple[int, tuple[int, ...], tuple[Fraction, ...]], ...]
    r_flexible: bool

    @property
    def r_cone_angles(self) -> tuple[Fraction, ...]:
        return tuple(sorted(a for _, _, angles in self.r_local for a in angles))

    def to_json(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "intermediate": self.intermediate.to_json(),
            "q_degree": self.q_degree,
            "r_degree": self.r_degree,
            "q_branch_data": [list(p) for p in self.q_branch_data],
            "r_cone_angles_pi": [angle_json(a) for a in self.r_cone_angles],
            "r_flexible": self.r_flexible,
        }


def _block_action(s: Permutation, blocks: Partition) -> tuple[int, ...]:
    where = {x: k for k, block in enumerate(blocks) for x in block}
    return tuple(where[s.images[block[0]]] for block in blocks)


def _factor(c: CoverClass, blocks: Partition) -> Factorization | None:
    """The factorization a block system induces, or ``None`` if ``q`` is not an orbifold cover."""
    sig, t = c.signature, c.tuple
    k = len(blocks)
    where = {x: n for n, block in enumerate(blocks) for x in block}
    branch_data = []
    ramification = 0
    r_local = []
    for r, s in zip(sig.orders, t.branch_entries):
        induced = Permutation(_block_action(s, blocks))
        lengths = []
        for cyc in induced.all_cycles():
            length = len(cyc)
            if r % length:
                return None
            lengths.append(length)
            ramification += length - 1
            order = r // length
            degrees, angles = [], []
            for point_cycle in s.all_cycles():
                if where[point_cycle[0]] in cyc:
                    local = len(point_cycle) // length
                    degrees.append(local)
                    if len(point_cycle) != r:
                        angles.append(Fraction(2 * len(point_cycle), r))
            r_local.append((order, tuple(sorted(degrees)), tuple(sorted(angles))))
        branch_data.append(tuple(sorted(lengths)))
    euler = k * (2 - 2 * sig.genus) - ramification
    if euler % 2:
        raise InconsistencyError(f"odd Euler characteristic for blocks {blocks} of {t}")
    intermediate = Signature((2 - euler) // 2, tuple(o for o, _, _ in r_local if o > 1))
    if orbifold_area(intermediate) != k * orbifold_area(sig):
        raise InconsistencyError(f"area is not multiplicative for blocks {blocks} of {t}")
    cones_ok = all(order % 2 == 0 for order, _, angles in r_local if angles)
    has_cone = any(angles for _, _, angles in r_local)
    r_degree = c.degree // k
    r_flexible = (
        cones_ok
        and has_cone
        and r_degree >= MIN_DEGREE
        and intermediate.is_hyperbolic
        and not intermediate.is_triangular
    )
    return Factorization(
        blocks=blocks,
        q_degree=k,
        r_degree=r_degree,
        intermediate=intermediate,
        q_branch_data=tuple(branch_data),
        r_local=tuple(r_local),
        r_flexible=r_flexible,
    )


def factorizations(c: CoverClass) -> list[Factorization]:
    """Every factorization through a nontrivial block system whose ``q`` is an orbifold cover."""
    out = []
    for blocks in block_systems(c.tuple.entries, c.degree):
        f = _factor(c, blocks)
        if f is not None:
            out.append(f)
    return out


@dataclass(frozen=True)
class HolonomyVerdict:
    holonomy: bool
    witness: Factorization | None

    def to_json(self) -> dict:
        return {
            "holonomy": self.holonomy,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def holonomy_classify(c: CoverClass) -> HolonomyVerdict:
    """Holonomy unless the class factors through a flexible cover of smaller degree."""
    for f in factorizations(c):
        if f.r_flexible and f.r_degree < c.degree:
            return HolonomyVerdict(False, f)
    return HolonomyVerdict(True, None)
