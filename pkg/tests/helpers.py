"""Cached pipeline objects and hypothesis strategies shared by the test modules."""

from __future__ import annotations

from functools import lru_cache

from hypothesis import strategies as st

from orbicover import PipelineConfig, run_pipeline
from orbicover.enumeration import SPHERE, MonodromyTuple
from orbicover.perm import Permutation, product


@lru_cache(maxsize=None)
def report():
    return run_pipeline(PipelineConfig(threads=1))


def stored_classes():
    return [c for case in report().cases for c in case.classes]


def perms(degree):
    return st.permutations(range(degree)).map(lambda images: Permutation(tuple(images)))


@st.composite
def sphere_tuples(draw, min_degree=2, max_degree=6):
    """Arbitrary [s1, s2, s3, s4] with s1 s2 s3 s4 = 1; not necessarily transitive."""
    degree = draw(st.integers(min_degree, max_degree))
    s1, s2, s3 = (draw(perms(degree)) for _ in range(3))
    return MonodromyTuple(SPHERE, (s1, s2, s3, product([s1, s2, s3]).inverse()))


@st.composite
def perm_tuples(draw, min_degree=1, max_degree=6, length=(1, 4)):
    degree = draw(st.integers(min_degree, max_degree))
    k = draw(st.integers(*length))
    return tuple(draw(perms(degree)) for _ in range(k))
