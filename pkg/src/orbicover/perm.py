"""
Permutations of ``{0, ..., D-1}`` and the small amount of group theory needed
to work with monodromy tuples.

Composition is a left action: ``compose(s, t)`` (also ``s * t``) is ``s o t``,
so ``t`` is applied first.  With this convention ``(0 1 2 3)(0 1) = (0 2 3)``.
Note that sympy multiplies in the opposite order.

Degrees here are tiny (at most 12, in practice at most 6), so everything is
plain Python on tuples of images.  Brute force over ``Sym(D)`` is used
wherever it keeps the code obviously correct.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial, gcd, prod
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError

CycleType = tuple[int, ...]
Partition = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True, slots=True)
class Permutation:
    """A bijection of ``{0, ..., D-1}`` stored as its image list."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidInputError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> Permutation:
        """Parse cycle notation such as ``"(0 2)(1 5)(3 4)"`` or the compact ``"(021)"``.

        The compact form (no separators inside a cycle) is only unambiguous for
        single-digit points, which covers every tuple used here.
        """
        images = list(range(degree))
        seen: set[int] = set()
        body = text.strip()
        if re.sub(r"\([^()]*\)", "", body).strip():
            raise InvalidInputError(f"malformed cycle notation: {text!r}")
        for cycle in re.findall(r"\(([^()]*)\)", body):
            cycle = cycle.strip()
            if not cycle:
                continue
            if re.search(r"[\s,]", cycle):
                points = [int(x) for x in re.split(r"[\s,]+", cycle)]
            else:
                points = [int(x) for x in cycle]
            for x in points:
                if not 0 <= x < degree or x in seen:
                    raise InvalidInputError(f"bad point {x} in {text!r} for degree {degree}")
                seen.add(x)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        return Permutation(_inverse(self.images))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        return [c for c in _cycles(self.images) if len(c) > 1]

    def all_cycles(self) -> list[tuple[int, ...]]:
        """Like :meth:`cycles` but fixed points are kept as 1-cycles."""
        return _cycles(self.images)

    def cycle_type(self) -> CycleType:
        return cycle_type(self)

    def order(self) -> int:
        n = 1
        for length in cycle_type(self):
            n = n * length // gcd(n, length)
        return n

    def to_json(self) -> list[int]:
        return list(self.images)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def _inverse(images: Sequence[int]) -> tuple[int, ...]:
    result = [0] * len(images)
    for i, v in enumerate(images):
        result[v] = i
    return tuple(result)


def _cycles(images: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = images[start]
        while j != start:
            cycle.append(j)
            seen[j] = True
            j = images[j]
        out.append(tuple(cycle))
    return out


def _check_same_degree(*perms: Permutation) -> int:
    degrees = {p.degree for p in perms}
    if len(degrees) != 1:
        raise InvalidInputError(f"degree mismatch: {sorted(degrees)}")
    return degrees.pop()


def compose(s: Permutation, t: Permutation) -> Permutation:
    """``s o t``: apply ``t`` first, then ``s``."""
    _check_same_degree(s, t)
    si = s.images
    return Permutation(tuple(si[x] for x in t.images))


def product(perms: Iterable[Permutation]) -> Permutation:
    """Left-to-right product ``p1 o p2 o ... o pn``."""
    perms = list(perms)
    if not perms:
        raise InvalidInputError("empty product has no degree")
    result = perms[-1]
    for p in reversed(perms[:-1]):
        result = compose(p, result)
    return result


def inverse(s: Permutation) -> Permutation:
    return s.inverse()


def conjugate(s: Permutation, g: Permutation) -> Permutation:
    """``g s g^-1``."""
    _check_same_degree(s, g)
    return Permutation(_conjugate_images(s.images, g.images))


def _conjugate_images(s: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(s)
    for x, y in enumerate(s):
        out[g[x]] = g[y]
    return tuple(out)


def cycle_type(s: Permutation) -> CycleType:
    """Sorted cycle lengths, fixed points included, so the parts sum to the degree."""
    return tuple(sorted(len(c) for c in _cycles(s.images)))


def validate_cycle_type(parts: Sequence[int], degree: int) -> CycleType:
    parts = tuple(sorted(parts))
    if not parts or any(p < 1 for p in parts) or sum(parts) != degree:
        raise InvalidInputError(f"{parts} is not a cycle type of degree {degree}")
    return parts


def count_with_cycle_type(parts: Sequence[int], degree: int) -> int:
    """Class size ``D! / prod(k^m_k m_k!)`` for cycle type with ``m_k`` parts of size ``k``."""
    parts = validate_cycle_type(parts, degree)
    mult = Counter(parts)
    return factorial(degree) // prod(k**m * factorial(m) for k, m in mult.items())


@lru_cache(maxsize=None)
def all_permutations(degree: int) -> tuple[Permutation, ...]:
    """Every element of ``Sym(degree)``, in lexicographic order of images."""
    return tuple(Permutation(p) for p in permutations(range(degree)))


@lru_cache(maxsize=None)
def elements_with_cycle_type(parts: CycleType, degree: int) -> frozenset[Permutation]:
    """All elements of ``Sym(degree)`` of the given cycle type.

    Built directly from the cycle type rather than by filtering ``Sym(degree)``;
    the filter is what the tests use as the oracle.
    """
    parts = validate_cycle_type(parts, degree)
    found: set[tuple[int, ...]] = set()

    def place(remaining: tuple[int, ...], lengths: Counter, images: list[int]):
        if not remaining:
            found.add(tuple(images))
            return
        # the cycle through the smallest unused point, written starting there
        first, others = remaining[0], remaining[1:]
        for length in [k for k, m in lengths.items() if m]:
            lengths[length] -= 1
            for tail in permutations(others, length - 1):
                cycle = (first,) + tail
                for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                    images[a] = b
                place(tuple(x for x in others if x not in tail), lengths, images)
            lengths[length] += 1

    place(tuple(range(degree)), Counter(parts), list(range(degree)))
    return frozenset(Permutation(p) for p in found)


def closure(gens: Sequence[Permutation]) -> frozenset[Permutation]:
    """The subgroup generated by ``gens``, by breadth-first right multiplication."""
    if not gens:
        raise InvalidInputError("need at least one generator")
    degree = _check_same_degree(*gens)
    gen_images = [g.images for g in gens]
    start = tuple(range(degree))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gen_images:
            y = tuple(x[i] for i in g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(Permutation(p) for p in seen)


@dataclass(frozen=True)
class GroupSummary:
    order: int
    element_orders: tuple[int, ...]
    is_abelian: bool
    is_cyclic: bool
    label: str = field(compare=False)

    @property
    def fingerprint(self) -> tuple[int, tuple[int, ...], bool]:
        """What separates groups for signature-equivalence purposes."""
        return (self.order, self.element_orders, self.is_abelian)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "cyclic": self.is_cyclic,
            "abelian": self.is_abelian,
            "label": self.label,
            "element_orders": dict(sorted(Counter(self.element_orders).items())),
        }


def _group_label(order: int, element_orders: Sequence[int], abelian: bool, cyclic: bool) -> str:
    if cyclic:
        return f"C{order}"
    if abelian:
        return f"abelian-{order}"
    counts = Counter(element_orders)
    half = order // 2
    # dihedral of order 2m: a cyclic subgroup of index 2 whose complement is all involutions
    if order % 2 == 0 and counts[half] > 0 and counts[2] >= half:
        return f"D{order}"
    return f"order-{order}"


def subgroup_summary(gens: Sequence[Permutation]) -> GroupSummary:
    group = closure(gens)
    element_orders = tuple(sorted(g.order() for g in group))
    abelian = all(compose(a, b) == compose(b, a) for a in gens for b in gens)
    cyclic = max(element_orders) == len(group)
    return GroupSummary(
        order=len(group),
        element_orders=element_orders,
        is_abelian=abelian,
        is_cyclic=cyclic,
        label=_group_label(len(group), element_orders, abelian, cyclic),
    )


def orbit(gens: Sequence[Permutation], point: int) -> frozenset[int]:
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def is_transitive(gens: Sequence[Permutation], degree: int) -> bool:
    if any(g.degree != degree for g in gens):
        raise InvalidInputError(f"generators must all have degree {degree}")
    if degree == 0:
        return True
    return len(orbit(gens, 0)) == degree


def _normalize_partition(blocks: Iterable[Iterable[int]]) -> Partition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def _minimal_block(gens: Sequence[Permutation], seed: Iterable[int], degree: int) -> Partition:
    """Finest invariant partition in which all of ``seed`` share a block (union-find closure)."""
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seed = list(seed)
    pending = deque()
    for a, b in zip(seed, seed[1:]):
        pending.append((a, b))
    while pending:
        a, b = pending.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        # invariance only needs checking for the newly joined pair
        for g in gens:
            pending.append((g.images[a], g.images[b]))
    classes: dict[int, list[int]] = {}
    for x in range(degree):
        classes.setdefault(find(x), []).append(x)
    return _normalize_partition(classes.values())


def block_systems(gens: Sequence[Permutation], degree: int) -> list[Partition]:
    """All nontrivial block systems of a transitive group, coarsest-first by block count.

    Every block containing 0 is the minimal block generated by some subset
    containing 0, so closing ``{0, x}`` and then joining blocks with further
    points reaches all of them.
    """
    if not is_transitive(gens, degree):
        raise InvalidInputError("block systems are only defined here for transitive actions")
    found: set[Partition] = set()
    frontier = deque()
    for x in range(1, degree):
        system = _minimal_block(gens, (0, x), degree)
        if system not in found:
            found.add(system)
            frontier.append(system)
    while frontier:
        system = frontier.popleft()
        block0 = next(b for b in system if 0 in b)
        for y in range(degree):
            if y in block0:
                continue
            bigger = _minimal_block(gens, block0 + (y,), degree)
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    nontrivial = [s for s in found if 1 < len(s) < degree]
    return sorted(nontrivial, key=lambda s: (len(s), s))


def _equal_partitions(points: tuple[int, ...], size: int) -> Iterator[list[tuple[int, ...]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for others in combinations(rest, size - 1):
        block = (first,) + others
        left = tuple(x for x in rest if x not in others)
        for tail in _equal_partitions(left, size):
            yield [block] + tail


def block_systems_exhaustive(gens: Sequence[Permutation], degree: int) -> list[Partition]:
    """Same contract as :func:`block_systems`, by checking every equal-size partition.

    Only sensible for small degrees (there are 25 candidates at degree 6).
    """
    if not is_transitive(gens, degree):
        raise InvalidInputError("block systems are only defined here for transitive actions")
    out = []
    for size in range(2, degree):
        if degree % size:
            continue
        for blocks in _equal_partitions(tuple(range(degree)), size):
            block_sets = {frozenset(b) for b in blocks}
            if all(frozenset(g.images[x] for x in b) in block_sets for g in gens for b in blocks):
                out.append(_normalize_partition(blocks))
    return sorted(out, key=lambda s: (len(s), s))


def tuple_conjugates(entries: Sequence[Permutation]) -> set[tuple[tuple[int, ...], ...]]:
    """Image tuples of every simultaneous conjugate ``g t_i g^-1`` of a tuple."""
    degree = _check_same_degree(*entries)
    raw = [p.images for p in entries]
    return {tuple(_conjugate_images(s, g) for s in raw) for g in permutations(range(degree))}


def canonicalize_tuple(entries: Sequence[Permutation]) -> tuple[Permutation, ...]:
    """Lexicographically least simultaneous conjugate of a tuple of permutations.

    Two tuples are simultaneously conjugate exactly when their canonical forms
    agree.  Brute force over all of ``Sym(D)``, pruning a conjugator as soon as
    its partial result is already larger than the best so far.
    """
    degree = _check_same_degree(*entries)
    raw = [p.images for p in entries]
    best: list[tuple[int, ...]] | None = None
    for g in permutations(range(degree)):
        candidate = []
        smaller = best is None
        for k, s in enumerate(raw):
            c = _conjugate_images(s, g)
            if not smaller:
                if c > best[k]:
                    break
                if c < best[k]:
                    smaller = True
            candidate.append(c)
        else:
            if smaller:
                best = candidate
    return tuple(Permutation(c) for c in best)


def are_conjugate(a: Sequence[Permutation], b: Sequence[Permutation]) -> bool:
    """Direct search for ``g`` with ``g a_i g^-1 = b_i`` for all ``i``."""
    if len(a) != len(b):
        return False
    degree = _check_same_degree(*a, *b)
    raw_a = [p.images for p in a]
    raw_b = [p.images for p in b]
    for g in permutations(range(degree)):
        if all(_conjugate_images(s, g) == t for s, t in zip(raw_a, raw_b)):
            return True
    return False
