"""
Published values the pipeline is checked against.

Tuples are written in cycle notation exactly as printed and parsed with the
fixed composition convention.  Nothing here feeds the computation itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .orbifold import Signature

S = Signature.parse

#: (signature, degrees, area in pi units)
TABLE1 = (
    (S("0:2,2,2,3"), (3, 6, 9), Fraction(1, 3)),
    (S("0:2,2,3,3"), (3,), Fraction(2, 3)),
    (S("0:2,3,3,3"), (3,), Fraction(1)),
    (S("0:2,2,2,4"), (4, 5, 6, 7), Fraction(1, 2)),
    (S("0:2,2,2,5"), (5,), Fraction(3, 5)),
    (S("0:2,2,2,2,2"), (3,), Fraction(1)),
    (S("1:2"), (3,), Fraction(1)),
)

EXCLUDED = (
    (S("0:2,2,2,3"), 9),
    (S("0:2,2,2,4"), 5),
    (S("0:2,2,2,4"), 7),
    (S("0:2,2,2,5"), 5),
    (S("0:2,2,2,2,2"), 3),
)

SURVIVING = (
    (S("0:2,2,2,3"), 3),
    (S("0:2,2,2,3"), 6),
    (S("0:2,2,2,4"), 4),
    (S("0:2,2,2,4"), 6),
    (S("0:2,2,3,3"), 3),
    (S("0:2,3,3,3"), 3),
    (S("1:2"), 3),
)

#: local-degree profiles, one cycle type per point in signature order, branched point first
PROFILES = {
    (S("0:2,2,2,3"), 3): {((3,), (3,), (3,), (3,))},
    (S("0:2,2,3,3"), 3): {((3,), (3,), (3,), (3,))},
    (S("0:2,3,3,3"), 3): {((3,), (3,), (3,), (3,))},
    (S("1:2"), 3): {((3,),)},
    (S("0:2,2,2,4"), 4): {((4,), (2, 2), (2, 2), (4,))},
    (S("0:2,2,2,4"), 6): {((2, 2, 2), (2, 2, 2), (2, 2, 2), (6,))},
    (S("0:2,2,2,3"), 6): {
        ((3, 3), (2, 2, 2), (2, 2, 2), (3, 3)),
        ((2, 4), (2, 2, 2), (2, 2, 2), (3, 3)),
    },
}


@dataclass(frozen=True)
class CaseCounts:
    """Published conjugacy-class and orbit counts for one (signature, degree, profile).

    ``classes`` counts tuples with the branched cycle type in position 1;
    ``None`` means no count was published.
    """

    signature: Signature
    degree: int
    profile: tuple | None
    classes: int | None
    orbits: int


CASE_COUNTS = (
    CaseCounts(S("1:2"), 3, None, 2, 1),
    CaseCounts(S("0:2,2,2,3"), 3, None, 3, 1),
    CaseCounts(S("0:2,2,3,3"), 3, None, None, 2),
    CaseCounts(S("0:2,3,3,3"), 3, None, None, 1),
    CaseCounts(S("0:2,2,2,4"), 4, None, 3, 2),
    CaseCounts(S("0:2,2,2,4"), 6, None, 3, 1),
    CaseCounts(S("0:2,2,2,3"), 6, ((2, 4), (2, 2, 2), (2, 2, 2), (3, 3)), 2, 1),
    CaseCounts(S("0:2,2,2,3"), 6, ((3, 3), (2, 2, 2), (2, 2, 2), (3, 3)), 9, 3),
)

SIGNATURE_CLASSES = 12
NON_HOLONOMY = 3
FINAL_COUNT = 9

#: group labels of the degree-6 (3,3) orbits
GROUPS_33 = ("C6", "D6", "order-24")

#: printed representatives: (label, signature, degree, kind, text)
REPRESENTATIVES = (
    ("torus t1", S("1:2"), 3, "torus", "[(021),(01),(012)]"),
    ("torus t2 (listing A)", S("1:2"), 3, "torus", "[(01),(021),(021)]"),
    ("torus t2 (listing B)", S("1:2"), 3, "torus", "[(01),(12),(021)]"),
    ("torus t1 variant (02)", S("1:2"), 3, "torus", "[(021),(02),(012)]"),
    ("torus t1 variant (12)", S("1:2"), 3, "torus", "[(021),(12),(012)]"),
    ("deg3 a", S("0:2,2,2,3"), 3, "sphere", "[(0 1 2), (0 1 2), (0 2 1), (0 2 1)]"),
    ("deg3 b", S("0:2,2,2,3"), 3, "sphere", "[(0 1 2), (0 2 1), (0 1 2), (0 2 1)]"),
    ("deg3 c", S("0:2,2,2,3"), 3, "sphere", "[(0 1 2), (0 2 1), (0 2 1), (0 1 2)]"),
    ("deg3 a", S("0:2,2,3,3"), 3, "sphere", "[(0 1 2), (0 1 2), (0 2 1), (0 2 1)]"),
    ("deg3 b", S("0:2,2,3,3"), 3, "sphere", "[(0 1 2), (0 2 1), (0 1 2), (0 2 1)]"),
    ("deg3 a", S("0:2,3,3,3"), 3, "sphere", "[(0 1 2), (0 1 2), (0 2 1), (0 2 1)]"),
    ("deg4 t1", S("0:2,2,2,4"), 4, "sphere", "[(0 1 2 3), (0 1)(2 3), (0 1)(2 3), (0 3 2 1)]"),
    ("deg4 t2", S("0:2,2,2,4"), 4, "sphere", "[(0 1 2 3), (0 1)(2 3), (0 3)(1 2), (0 1 2 3)]"),
    ("deg4 t3", S("0:2,2,2,4"), 4, "sphere", "[(0 1 2 3), (0 2)(1 3), (0 2)(1 3), (0 3 2 1)]"),
    ("deg6/4 t1", S("0:2,2,2,4"), 6, "sphere", "[(0 2)(1 5)(3 4), (0 1)(2 4)(3 5), (0 3)(1 5)(2 4), (0 2 5 3 4 1)]"),
    ("deg6/4 t2", S("0:2,2,2,4"), 6, "sphere", "[(0 2)(1 5)(3 4), (0 2)(1 3)(4 5), (0 5)(1 3)(2 4), (0 5 1 2 4 3)]"),
    ("deg6/4 t3", S("0:2,2,2,4"), 6, "sphere", "[(0 2)(1 5)(3 4), (0 2)(1 3)(4 5), (0 3)(1 5)(2 4), (0 3 1 2 4 5)]"),
    ("deg6 (2,4) t1", S("0:2,2,2,3"), 6, "sphere", "[(0 1 4 5)(2 3), (0 3)(1 5)(2 4), (0 4)(1 5)(2 3), (0 5 3)(1 2 4)]"),
    ("deg6 (2,4) t2", S("0:2,2,2,3"), 6, "sphere", "[(0 1 4 5)(2 3), (0 4)(1 5)(2 3), (0 3)(1 5)(2 4), (0 5 3)(1 2 4)]"),
    ("deg6 (3,3) t1", S("0:2,2,2,3"), 6, "sphere", "[(0 3 1)(2 4 5), (0 2)(1 5)(3 4), (0 2)(1 5)(3 4), (0 1 3)(2 5 4)]"),
    ("deg6 (3,3) t2", S("0:2,2,2,3"), 6, "sphere", "[(0 3 1)(2 4 5), (0 1)(2 4)(3 5), (0 1)(2 4)(3 5), (0 1 3)(2 5 4)]"),
    ("deg6 (3,3) t3", S("0:2,2,2,3"), 6, "sphere", "[(0 3 1)(2 4 5), (0 1)(2 4)(3 5), (0 3)(1 2)(4 5), (0 3 2)(1 4 5)]"),
    ("deg6 (3,3) t4", S("0:2,2,2,3"), 6, "sphere", "[(0 3 1)(2 4 5), (0 1)(2 4)(3 5), (0 2)(1 4)(3 5), (0 2 5)(1 3 4)]"),
    ("deg6 (3,3) t5", S("0:2,2,2,3"), 6, "sphere", "[(0 3 1)(2 4 5), (0 1)(2 4)(3 5), (0 5)(1 2)(3 4), (0 5 1)(2 4 3)]"),
    ("deg6 (3,3) t6", S("0:2,2,2,3"), 6, "sphere", "[(0 3 1)(2 4 5), (0 4)(1 5)(2 3), (0 1)(2 4)(3 5), (0 3 2)(1 4 5)]"),
    ("deg6 (3,3) t7", S("0:2,2,2,3"), 6, "sphere", "[(0 3 1)(2 4 5), (0 4)(1 5)(2 3), (0 3)(1 5)(2 4), (0 1 4)(2 5 3)]"),
    ("deg6 (3,3) t8", S("0:2,2,2,3"), 6, "sphere", "[(0 3 1)(2 4 5), (0 4)(1 5)(2 3), (0 4)(1 5)(2 3), (0 1 3)(2 5 4)]"),
    ("deg6 (3,3) t9", S("0:2,2,2,3"), 6, "sphere", "[(0 3 1)(2 4 5), (0 4)(1 5)(2 3), (0 2)(1 4)(3 5), (0 3 1)(2 4 5)]"),
)


def representative(label: str, sig: Signature | None = None) -> str:
    for name, s, _, _, text in REPRESENTATIVES:
        if name == label and (sig is None or s == sig):
            return text
    raise KeyError(label)


@dataclass(frozen=True)
class MoveClaim:
    """``move . source`` as printed, optionally followed by a conjugacy claim.

    ``printed`` is the tuple shown as the move's result (``None`` if only the
    conjugacy claim is made); ``conjugate_to`` names a representative, and
    ``exact`` says the printed relation is equality rather than conjugacy.
    """

    signature: Signature
    degree: int
    move: tuple
    source: str
    printed: str | None
    conjugate_to: str | None
    exact: bool = False


T33 = "deg6 (3,3) t{}"
MOVE_CLAIMS = (
    MoveClaim(S("0:2,2,2,4"), 4, ("F", 2, 1), "deg4 t1",
              "[(0321),(03)(12),(01)(23),(0321)]", "deg4 t2"),
    MoveClaim(S("0:2,2,2,4"), 6, ("H", 2, 3), "deg6/4 t1",
              "[(0 2)(1 5)(3 4), (0 3)(1 5)(2 4), (0 1)(2 4)(3 5), (0 2 5 3 4 1)]", "deg6/4 t2"),
    MoveClaim(S("0:2,2,2,4"), 6, ("H", 1, 3), "deg6/4 t1",
              "[(0 3)(1 5)(2 4), (0 3)(1 4)(2 5), (0 2)(1 5)(3 4), (0 2 5 3 4 1)]", "deg6/4 t3"),
    MoveClaim(S("0:2,2,2,3"), 6, ("H", 3, 2), "deg6 (2,4) t1", None, "deg6 (2,4) t2", exact=True),
    MoveClaim(S("0:2,2,2,3"), 6, ("F", 1, 2), T33.format(2),
              "[(0 1 5)(2 3 4), (0 5)(1 2)(3 4), (0 1)(2 4)(3 5), (0 1 3)(2 5 4)]", T33.format(3)),
    MoveClaim(S("0:2,2,2,3"), 6, ("F", 1, 3), T33.format(2), None, T33.format(6), exact=True),
    MoveClaim(S("0:2,2,2,3"), 6, ("F", 2, 4), T33.format(2),
              "[(0 1 5)(2 3 4), (0 1)(2 4)(3 5), (0 4)(1 3)(2 5), (0 1 3)(2 5 4)]", T33.format(5)),
    MoveClaim(S("0:2,2,2,3"), 6, ("F", 1, 2), T33.format(4),
              "[(0 1 5)(2 3 4), (0 5)(1 2)(3 4), (0 2)(1 4)(3 5), (0 2 5)(1 3 4)]", T33.format(5)),
    MoveClaim(S("0:2,2,2,3"), 6, ("H", 2, 3), T33.format(4),
              "[(0 3 1)(2 4 5), (0 2)(1 4)(3 5), (0 1)(2 4)(3 5), (0 2 5)(1 3 4)]", T33.format(7)),
    MoveClaim(S("0:2,2,2,3"), 6, ("F", 1, 2), T33.format(8),
              "[(0 1 3)(2 5 4), (0 2)(1 4)(3 5), (0 2)(1 4)(3 5), (0 3 1)(2 4 5)]", T33.format(9)),
    MoveClaim(S("1:2"), 3, ("swap",), "torus t1", None, "torus t2 (listing A)", exact=True),
)

#: the cone-point table as printed: (degree, signature, cone angle multisets)
INTRO_TABLE = (
    (3, S("0:2,2,2,3"), ((3,),)),
    (3, S("0:2,2,3,3"), ((3, 3),)),
    (3, S("0:2,2,2,3"), ((3, 3, 3),)),
    (3, S("1:2"), ((3,),)),
    (4, S("0:2,2,2,4"), ((4,),)),
    (6, S("0:2,2,2,4"), ((3,),)),
    (6, S("0:2,2,2,3"), ((3, 3), (4,))),
)

#: the printed word for the s_{i+1} entry of F(i+2, i), as (offset, exponent) pairs
PRINTED_F_MINUS2_SECOND = ((0, -1), (2, -1), (1, 1), (2, 1), (1, 1))
