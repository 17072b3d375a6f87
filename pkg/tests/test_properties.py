"""
Property suites (a)-(e).  None of them needs the full pipeline: classes come
straight from enumeration, and random inputs come from hypothesis.
"""

from functools import lru_cache
from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import perm_tuples, perms, sphere_tuples
from orbicover import fixtures
from orbicover.enumeration import LocalProfile, MonodromyTuple, allowed_profiles, enumerate_cover_classes
from orbicover.mcg import TupleMove, admissible_moves, all_sphere_moves, apply_move
from orbicover.orbifold import ConeData, cone_surface_area, orbifold_area
from orbicover.perm import (
    Permutation,
    block_systems,
    block_systems_exhaustive,
    canonicalize_tuple,
    closure,
    conjugate,
    is_transitive,
)

PROPERTY = settings(deadline=None, derandomize=True, database=None)


@lru_cache(maxsize=None)
def enumerated():
    return tuple((sig, c) for sig, degree in fixtures.SURVIVING for c in enumerate_cover_classes(sig, degree))


def _lexmin_oracle(entries):
    raw = [s.images for s in entries]
    degree = len(raw[0])
    return min(tuple(oracles.conj(x, g) for x in raw) for g in permutations(range(degree)))


@st.composite
def related_pairs(draw):
    """A tuple and a second tuple that is either a conjugate of it or a small edit of one."""
    a = draw(perm_tuples(min_degree=1, max_degree=6, length=(1, 4)))
    degree = a[0].degree
    g = draw(perms(degree))
    b = [conjugate(s, g) for s in a]
    if draw(st.booleans()):
        k = draw(st.integers(0, len(b) - 1))
        b[k] = draw(perms(degree))
    return a, tuple(b), g


# (a) canonical form: idempotent, conjugation invariant, lexmin, and agrees with brute-force conjugacy
@settings(PROPERTY, max_examples=1000)
@given(related_pairs())
def test_canonical_form(pair):
    a, b, g = pair
    ca = canonicalize_tuple(a)
    assert canonicalize_tuple(ca) == ca
    assert canonicalize_tuple([conjugate(s, g) for s in a]) == ca
    assert tuple(s.images for s in ca) == _lexmin_oracle(a)
    same = canonicalize_tuple(b) == ca
    assert same == oracles.naive_conjugate([s.images for s in a], [s.images for s in b])


# (b) random admissible move words keep the relation, transitivity and the generated group
@settings(PROPERTY, max_examples=500)
@given(st.data())
def test_admissible_moves_preserve_structure(data):
    sig, c = data.draw(st.sampled_from(enumerated()))
    word = data.draw(st.lists(st.sampled_from(admissible_moves(sig)), min_size=1, max_size=6))
    t, group = c.tuple, closure(c.tuple.entries)
    for move in word:
        t = apply_move(move, t, sig)  # the constructor re-checks the relation
        assert t.is_transitive()
        assert closure(t.entries) == group
    assert [p.cycle_type() for p in t.canonical().branch_entries] in [
        list(p.parts) for p in c.profile.placements()
    ]


@settings(PROPERTY, max_examples=200)
@given(sphere_tuples(), st.lists(st.sampled_from(all_sphere_moves()), min_size=1, max_size=6))
def test_any_sphere_move_preserves_relation(t, word):
    transitive = t.is_transitive()
    for move in word:
        t = apply_move(move, t)
        assert t.is_transitive() == transitive


# (c) H(i,j)^2 = F(i,j) for every ordered pair
@settings(PROPERTY, max_examples=200)
@given(sphere_tuples(min_degree=1, max_degree=6))
def test_half_twist_squares(t):
    for i, j in permutations(range(1, 5), 2):
        h = TupleMove("H", i, j)
        assert apply_move(h, apply_move(h, t)) == apply_move(TupleMove("F", i, j), t)
        assert apply_move(TupleMove("H", j, i), apply_move(h, t)) == t


# (d) block systems against the exhaustive equal-partition search
def test_block_systems_on_encountered_groups():
    seen = set()
    for sig, c in enumerated():
        candidates = [c.tuple] + [apply_move(m, c.tuple) for m in admissible_moves(sig)]
        for t in candidates:
            gens = t.entries
            if gens in seen:
                continue
            seen.add(gens)
            assert is_transitive(gens, t.degree)
            fast = set(block_systems(gens, t.degree))
            assert fast == set(block_systems_exhaustive(gens, t.degree))
            assert fast == oracles.naive_block_systems([g.images for g in gens], t.degree)
    assert len(seen) > 50


@settings(PROPERTY, max_examples=300)
@given(perm_tuples(min_degree=2, max_degree=6, length=(1, 3)))
def test_block_systems_on_random_transitive_groups(gens):
    degree = gens[0].degree
    if is_transitive(gens, degree):
        assert set(block_systems(gens, degree)) == set(block_systems_exhaustive(gens, degree))


# (e) exact area identity for every stored class and every admissible profile
def test_area_identity():
    for sig, c in enumerated():
        assert cone_surface_area(ConeData(c.genus, c.cone_angles)) == c.degree * orbifold_area(sig)
    for sig, degree in fixtures.SURVIVING:
        for p in allowed_profiles(sig, degree):
            assert cone_surface_area(ConeData(2, p.cone_angles)) == degree * orbifold_area(sig)
