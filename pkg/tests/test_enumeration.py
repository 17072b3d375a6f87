from fractions import Fraction
from itertools import product

import pytest

import oracles
from orbicover import fixtures
from orbicover.enumeration import (
    SPHERE,
    TORUS,
    CoverClass,
    LocalProfile,
    MonodromyTuple,
    allowed_profiles,
    count_by_placement,
    cover_invariants,
    enumerate_cover_classes,
)
from orbicover.errors import InvalidInputError
from orbicover.orbifold import cone_surface_area, ConeData, orbifold_area

S = fixtures.S
SMALL = [(S("0:2,2,2,3"), 3), (S("0:2,2,3,3"), 3), (S("0:2,3,3,3"), 3), (S("0:2,2,2,4"), 4)]
LARGE = [(S("0:2,2,2,3"), 6), (S("0:2,2,2,4"), 6)]


def _profile_oracle(sig, degree):
    """Every per-point cycle type from brute-force partitions, filtered by Riemann-Hurwitz."""
    def parts(n, low=1):
        if n == 0:
            yield ()
        for first in range(low, n + 1):
            for rest in parts(n - first, first):
                yield (first,) + rest

    options = [[p for p in parts(degree) if oracles.point_ok(p, r)] for r in sig.orders]
    out = set()
    for types in product(*options):
        if not oracles.flexible_ok(types, sig.orders):
            continue
        if oracles.cover_genus_rh(types, sig.orders, degree, sig.genus) == 2:
            out.add(LocalProfile(sig, degree, tuple(types)).canonical().parts)
    return out


@pytest.mark.parametrize("sig, degree", fixtures.SURVIVING, ids=str)
def test_profiles_match_published_and_oracle(sig, degree):
    got = {p.parts for p in allowed_profiles(sig, degree)}
    assert got == fixtures.PROFILES[(sig, degree)]
    assert got == _profile_oracle(sig, degree)


def test_excluded_pairs_have_no_profiles_at_odd_degree():
    # the parity argument in profile form: every excluded pair has no admissible profile
    for sig, degree in fixtures.EXCLUDED:
        assert allowed_profiles(sig, degree) == []


@pytest.mark.parametrize("sig, degree", SMALL, ids=str)
def test_small_degree_counts_against_full_search(sig, degree):
    classes, _ = oracles.sphere_classes_full(sig.orders, degree)
    assert len(enumerate_cover_classes(sig, degree)) == classes


@pytest.mark.parametrize("sig, degree", LARGE, ids=str)
def test_degree_six_counts_against_oracle(sig, degree):
    assert len(enumerate_cover_classes(sig, degree)) == oracles.sphere_classes_reduced(sig.orders, degree)


def test_torus_count_against_full_search():
    classes, raw = oracles.torus_classes(2, 3)
    assert (classes, raw) == (3, 18)
    assert len(enumerate_cover_classes(S("1:2"), 3)) == classes


def test_torus_third_class_is_two_transpositions():
    found = {tuple(sorted(s.cycle_type() for s in c.tuple.entries[:2]))
             for c in enumerate_cover_classes(S("1:2"), 3)}
    assert found == {((1, 2), (3,)), ((1, 2), (1, 2))}
    t = MonodromyTuple.parse(fixtures.representative("torus t2 (listing B)"), 3, TORUS)
    assert [s.cycle_type() for s in t.entries[:2]] == [(1, 2), (1, 2)]


@pytest.mark.parametrize(
    "sig, degree, profile, count",
    [(c.signature, c.degree, c.profile, c.classes) for c in fixtures.CASE_COUNTS
     if c.classes is not None and c.signature != S("1:2")],
    ids=str,
)
def test_branched_point_first_counts(sig, degree, profile, count):
    classes = enumerate_cover_classes(sig, degree)
    (wanted,) = [p for p in allowed_profiles(sig, degree) if profile is None or p.parts == profile]
    assert count_by_placement(classes)[wanted] == count


def test_degree_six_raw_position1_split():
    classes = enumerate_cover_classes(S("0:2,2,2,3"), 6)
    tally = {p.parts[0]: n for p, n in count_by_placement(classes).items() if p == p.canonical()}
    assert tally == {(3, 3): 9, (2, 4): 2}


@pytest.mark.parametrize("sig, degree", fixtures.SURVIVING, ids=str)
def test_stored_classes_are_valid(sig, degree):
    classes = enumerate_cover_classes(sig, degree)
    assert classes == sorted(classes, key=lambda c: c.tuple.key())
    for c in classes:
        assert c.transitive and c.flexible and c.genus == 2
        assert c.tuple == c.tuple.canonical()
        assert cone_surface_area(ConeData(2, c.cone_angles)) == degree * orbifold_area(sig)


@pytest.mark.parametrize("parts", [2, 3, 5])
def test_partitioning_does_not_change_output(parts):
    sig = S("0:2,2,2,3")
    base = enumerate_cover_classes(sig, 6)
    assert enumerate_cover_classes(sig, 6, partitions=parts) == base


@pytest.mark.parametrize("label, sig, degree, kind, text", fixtures.REPRESENTATIVES,
                         ids=[r[0] + " " + str(r[1]) for r in fixtures.REPRESENTATIVES])
def test_printed_representatives_are_enumerated(label, sig, degree, kind, text):
    t = MonodromyTuple.parse(text, degree, kind)
    keys = {c.tuple.key() for c in enumerate_cover_classes(sig, degree)}
    assert t.canonical().key() in keys


def test_relation_is_enforced():
    with pytest.raises(InvalidInputError):
        MonodromyTuple.parse("[(0 1 2), (0 1), (0 1), (0 1 2)]", 3)
    with pytest.raises(InvalidInputError):
        MonodromyTuple.parse("[(01), (12), (012)]", 3, TORUS)
    with pytest.raises(InvalidInputError):
        MonodromyTuple("pants", ())


def test_cover_invariants_example():
    t = MonodromyTuple.parse(fixtures.representative("deg4 t1"), 4)
    inv = cover_invariants(t, S("0:2,2,2,4"))
    assert (inv.genus, inv.cone_angles, inv.flexible) == (2, (Fraction(4),), True)
    with pytest.raises(InvalidInputError):
        cover_invariants(t, S("1:2"))


def test_json_shape():
    c = enumerate_cover_classes(S("0:2,2,2,4"), 6)[0]
    data = c.to_json()
    assert set(data) == {"signature", "degree", "tuple", "tuple_cycles", "cone_angles_pi", "genus",
                         "group", "profiles"}
    assert data["cone_angles_pi"] == [3] and data["genus"] == 2
    assert data["profiles"] == [[2, 2, 2], [2, 2, 2], [2, 2, 2], [6]]
    assert CoverClass.from_tuple(c.tuple, c.signature) == c


def test_placements_cover_equal_order_relabellings():
    p = LocalProfile(S("0:2,2,2,3"), 6, ((2, 4), (2, 2, 2), (2, 2, 2), (3, 3)))
    assert len(p.placements()) == 3
    assert all(q.canonical() == p for q in p.placements())
