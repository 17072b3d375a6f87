from fractions import Fraction

import pytest

from orbicover import fixtures
from orbicover.errors import InvalidInputError
from orbicover.orbifold import (
    ConeData,
    Signature,
    candidate_signatures,
    cone_surface_area,
    fraction_json,
    genus_from_area,
    max_cone_points,
    orbifold_area,
    parity_exclusion,
    pi_string,
    signature_table,
    surviving_cases,
)

S = Signature.parse


def test_parse_forms():
    assert S("0:2,3,2,2") == S("(0; 2, 2, 2, 3)") == Signature(0, (2, 2, 2, 3))
    assert S("1:2").cli_form() == "1:2"
    assert str(S("0:2,2,3,3")) == "(0; 2, 2, 3, 3)"
    assert Signature.from_json(S("0:2,2,2,4").to_json()) == S("0:2,2,2,4")


@pytest.mark.parametrize("text", ["", "0", "x:2", "0:1,2", "-1:2", "0:2,a"])
def test_parse_rejects(text):
    with pytest.raises(InvalidInputError):
        S(text)


@pytest.mark.parametrize(
    "sig, area",
    [("0:2,2,2,3", Fraction(1, 3)), ("0:2,2,2,4", Fraction(1, 2)), ("1:2", Fraction(1)),
     ("0:2,3,7", Fraction(1, 21)), ("0:2,2,2,2", Fraction(0))],
)
def test_areas(sig, area):
    assert orbifold_area(S(sig)) == area


def test_cone_surface_area_and_genus():
    cone = ConeData(2, (Fraction(3),))
    assert cone_surface_area(cone) == 3 * orbifold_area(S("1:2"))
    assert genus_from_area(Fraction(3), cone.angles) == 2
    assert genus_from_area(Fraction(2), (Fraction(3),)) == Fraction(7, 4)
    assert ConeData(2, (3, 4)).negatively_curved and not ConeData(2, (2, 3)).negatively_curved


def test_triangular_and_hyperbolic():
    assert S("0:2,3,7").is_triangular and not S("0:2,2,2,3").is_triangular
    assert S("0:2,2,2,3").is_hyperbolic and not S("0:2,2,2,2").is_hyperbolic


def test_table_matches_published():
    rows = {(r.signature, r.degrees, r.area) for r in signature_table()}
    assert rows == set(fixtures.TABLE1)
    assert len(candidate_signatures()) == 12


def test_table_rows_pass_their_filters():
    for sig, degree in candidate_signatures():
        assert all(r % 2 == 0 or degree % r == 0 for r in sig.orders)
        assert 0 < degree * orbifold_area(sig) < 4


def test_nmax_examples():
    assert max_cone_points(S("0:2,2,2,3"), 9) == 1
    with pytest.raises(InvalidInputError):
        max_cone_points(S("0:3,3,3,3"), 3)


def test_parity_exclusion():
    excluded = {(s, d) for s, d in candidate_signatures() if parity_exclusion(s, d)}
    assert excluded == set(fixtures.EXCLUDED)
    assert sorted(surviving_cases()) == sorted(fixtures.SURVIVING)
    assert parity_exclusion(S("0:2,2,2,4"), 6) is None


def test_formatting():
    assert pi_string(Fraction(2, 3)) == "2π/3"
    assert pi_string(Fraction(1)) == "π"
    assert fraction_json(Fraction(3, 5)) == {"num": 3, "den": 5}
