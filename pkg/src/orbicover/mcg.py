"""
Mapping class group action on monodromy tuples and signature-equivalence orbits.

Sphere moves are the half-twists ``H(i, j)`` exchanging points ``i`` and ``j``
and their squares ``F(i, j)``.  Each is stored as a rewrite table: for every
tuple position it touches (an offset from a base index, mod 4), a word in the
old entries read as a left-to-right product under composition.  Untouched
positions keep their entry.

Torus moves are the swap ``[a, b, c] -> [b, a, c^-1]`` and the two Dehn twists
``[a, b, c] -> [a, b a, c]`` and ``[a, b, c] -> [a b, b, c]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .enumeration import SPHERE, TORUS, CoverClass, MonodromyTuple, tuple_kind
from .errors import InconsistencyError, InvalidInputError
from .orbifold import Signature
from .perm import GroupSummary, Permutation, closure, product

Word = tuple[tuple[int, int], ...]
MoveTable = dict[int, Word]

#: rewrite tables keyed by (family, shape); the shape names the index pattern
#: relative to the base point i: +1 is (i, i+1), -1 is (i+1, i), +2 is (i, i+2),
#: -2 is (i+2, i)
MOVE_TABLES: dict[tuple[str, int], MoveTable] = {
    ("H", +1): {0: ((1, 1),), 1: ((1, -1), (0, 1), (1, 1))},
    ("F", +1): {
        0: ((1, -1), (0, 1), (1, 1)),
        1: ((1, -1), (0, -1), (1, 1), (0, 1), (1, 1)),
    },
    ("H", -1): {0: ((0, 1), (1, 1), (0, -1)), 1: ((0, 1),)},
    ("F", -1): {
        0: ((0, 1), (1, 1), (0, 1), (1, -1), (0, -1)),
        1: ((0, 1), (1, 1), (0, -1)),
    },
    ("H", +2): {
        0: ((2, 1),),
        1: ((0, 1), (1, 1), (0, -1)),
        2: ((0, 1),),
        3: ((2, 1), (3, 1), (2, -1)),
    },
    ("F", +2): {
        0: ((0, 1),),
        1: ((2, 1), (0, 1), (1, 1), (0, -1), (2, -1)),
        2: ((2, 1),),
        3: ((0, 1), (2, 1), (3, 1), (2, -1), (0, -1)),
    },
    ("H", -2): {
        0: ((2, 1),),
        1: ((2, -1), (1, 1), (2, 1)),
        2: ((0, 1),),
        3: ((0, -1), (3, 1), (0, 1)),
    },
    ("F", -2): {
        0: ((0, 1),),
        # the word for this entry must end in s_{i+2} s_i to square H(i+2, i)
        1: ((0, -1), (2, -1), (1, 1), (2, 1), (0, 1)),
        2: ((2, 1),),
        3: ((2, -1), (0, -1), (3, 1), (0, 1), (2, 1)),
    },
}


@dataclass(frozen=True, order=True)
class TupleMove:
    """A named generator of the mapping class group acting on tuples.

    ``family`` is ``"H"`` or ``"F"`` (with 1-based points ``i != j``) or one of
    the torus moves ``"swap"``, ``"twist_a"``, ``"twist_b"``.
    """

    family: str
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.family in ("H", "F"):
            if not (1 <= self.i <= 4 and 1 <= self.j <= 4 and self.i != self.j):
                raise InvalidInputError(f"bad move indices ({self.i}, {self.j})")
        elif self.family not in TORUS_MOVES:
            raise InvalidInputError(f"unknown move family {self.family!r}")

    @property
    def kind(self) -> str:
        return SPHERE if self.family in ("H", "F") else TORUS

    def table(self) -> tuple[int, MoveTable]:
        """The 0-based base index and rewrite table this sphere move uses."""
        if self.kind != SPHERE:
            raise InvalidInputError(f"{self} has no sphere table")
        i, j = self.i, self.j
        d = (j - i) % 4
        if d == 1:
            base, shape = i, +1
        elif d == 3:
            base, shape = j, -1
        elif i < j:
            base, shape = i, +2
        else:
            base, shape = j, -2
        return base - 1, MOVE_TABLES[(self.family, shape)]

    def admissible(self, sig: Signature) -> bool:
        if tuple_kind(sig) != self.kind:
            return False
        if self.family == "H":
            return sig.orders[self.i - 1] == sig.orders[self.j - 1]
        return True

    def __str__(self) -> str:
        if self.kind == SPHERE:
            return f"{self.family}({self.i},{self.j})"
        return self.family


def apply_word(entries: Sequence[Permutation], base: int, word: Word) -> Permutation:
    factors = []
    for offset, exponent in word:
        s = entries[(base + offset) % 4]
        factors.append(s if exponent == 1 else s.inverse())
    return product(factors)


def _swap(a: Permutation, b: Permutation, c: Permutation):
    return (b, a, c.inverse())


def _twist_a(a: Permutation, b: Permutation, c: Permutation):
    return (a, b * a, c)


def _twist_b(a: Permutation, b: Permutation, c: Permutation):
    return (a * b, b, c)


TORUS_MOVES: dict[str, Callable] = {"swap": _swap, "twist_a": _twist_a, "twist_b": _twist_b}


def apply_move(move: TupleMove, t: MonodromyTuple, sig: Signature | None = None) -> MonodromyTuple:
    """Rewrite ``t`` by ``move``; with ``sig`` given, admissibility is checked too."""
    if move.kind != t.kind:
        raise InvalidInputError(f"{move} does not act on {t.kind} tuples")
    if sig is not None and not move.admissible(sig):
        raise InvalidInputError(f"{move} is not an orbifold homeomorphism of {sig}")
    if t.kind == TORUS:
        return MonodromyTuple(TORUS, TORUS_MOVES[move.family](*t.entries))
    base, table = move.table()
    out = list(t.entries)
    for offset, word in table.items():
        out[(base + offset) % 4] = apply_word(t.entries, base, word)
    return MonodromyTuple(SPHERE, tuple(out))


def all_sphere_moves() -> list[TupleMove]:
    return [TupleMove(f, i, j) for f in ("H", "F") for i in range(1, 5) for j in range(1, 5) if i != j]


def admissible_moves(sig: Signature, torus_twists: bool = True) -> list[TupleMove]:
    if tuple_kind(sig) == TORUS:
        names = ("swap", "twist_a", "twist_b") if torus_twists else ("swap",)
        return [TupleMove(name) for name in names]
    return [m for m in all_sphere_moves() if m.admissible(sig)]


@dataclass(frozen=True)
class SignatureClass:
    """One mapping-class-group orbit of conjugacy classes."""

    representative: CoverClass
    members: tuple[CoverClass, ...]
    group: GroupSummary
    moves_used: tuple[str, ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "representative": self.representative.to_json(),
            "members": [m.tuple.to_json() for m in self.members],
            "group": self.group.to_json(),
        }


def signature_orbits(
    classes: Sequence[CoverClass], sig: Signature, torus_twists: bool = True
) -> list[SignatureClass]:
    """Partition ``classes`` into orbits under every admissible move.

    The class set must be closed under the action, and every move must keep
    the generated subgroup literally unchanged; either failure raises
    :class:`InconsistencyError`.
    """
    by_key = {c.tuple.key(): c for c in classes}
    moves = admissible_moves(sig, torus_twists)
    groups = {key: closure(c.tuple.entries) for key, c in by_key.items()}
    seen: set = set()
    orbits = []
    for start in sorted(by_key):
        if start in seen:
            continue
        seen.add(start)
        members = [start]
        queue = deque([start])
        while queue:
            key = queue.popleft()
            current = by_key[key].tuple
            for move in moves:
                try:
                    image = apply_move(move, current)
                except InvalidInputError as exc:
                    raise InconsistencyError(f"{move} broke the relation on {current}: {exc}") from exc
                if closure(image.entries) != groups[key]:
                    raise InconsistencyError(f"{move} changed the monodromy group of {current}")
                target = image.canonical().key()
                if target not in by_key:
                    raise InconsistencyError(f"{move} maps {current} outside the enumerated classes")
                if target not in seen:
                    seen.add(target)
                    members.append(target)
                    queue.append(target)
        member_classes = tuple(by_key[k] for k in sorted(members))
        summaries = {m.group for m in member_classes}
        if len(summaries) != 1:
            raise InconsistencyError(f"group invariant varies across the orbit of {member_classes[0].tuple}")
        orbits.append(
            SignatureClass(
                representative=member_classes[0],
                members=member_classes,
                group=member_classes[0].group,
                moves_used=tuple(str(m) for m in moves),
            )
        )
    return sorted(orbits, key=lambda o: o.representative.tuple.key())


def orbit_variant(orbit: SignatureClass) -> tuple:
    """The local-degree profile shared by the orbit, up to relabelling equal-order points."""
    variants = {m.profile.canonical().parts for m in orbit.members}
    if len(variants) != 1:
        raise InconsistencyError("orbit members have different profiles")
    return variants.pop()
