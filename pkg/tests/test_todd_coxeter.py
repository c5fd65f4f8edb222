import time
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, HealthCheck
import hypothesis.strategies as st

from zappatic.presentation import (
    Presentation, Stage, coxeter_presentation, coxeter_translate, e10_appendix_presentation,
    star_presentation,
)
from zappatic.todd_coxeter import (
    Status, enumerate_cosets, group_order, parabolic_index, prepare, run,
)
from zappatic.words import Generator, Word


def closure_size(gens):
    """Order of the permutation group generated by ``gens`` (tuples), by BFS."""
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    todo = [ident]
    while todo:
        p = todo.pop()
        for g in gens:
            q = tuple(g[i] for i in p)
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return len(seen)


def pres(ngens, rels, stage=Stage.STAR):
    gens = tuple(Generator(i) for i in range(1, ngens + 1))
    return Presentation(ngens, gens, tuple(rels), stage)


STRATS = ["hlt", "felsch"]


@pytest.mark.parametrize("strategy", STRATS)
def test_small_groups(strategy):
    assert group_order(pres(1, [Word.of(1, 1)]), strategy=strategy) == 2
    assert group_order(pres(1, [Word.of(1) ** 5]), strategy=strategy) == 5
    s3 = pres(2, [Word.of(1, 1), Word.of(2, 2), Word.of(1, 2) ** 3])
    assert group_order(s3, strategy=strategy) == 6
    a5 = pres(2, [Word.of(1) ** 2, Word.of(2) ** 3, Word.of(1, 2) ** 5])
    assert group_order(a5, strategy=strategy) == 60


def test_s3_matches_transposition_products():
    t12, t23 = (1, 0, 2), (0, 2, 1)
    assert closure_size([t12, t23]) == 6
    assert group_order(pres(2, [Word.of(1, 1), Word.of(2, 2), Word.of(1, 2) ** 3])) == 6


@pytest.mark.parametrize("strategy", STRATS)
@pytest.mark.parametrize("m", range(2, 9))
def test_dihedral(strategy, m):
    p = pres(2, [Word.of(1, 1), Word.of(2, 2), Word.of(1, 2) ** m])
    assert group_order(p, strategy=strategy) == 2 * m


def test_non_involution_generators():
    # <a, b | a^3, b^2, (ab)^2> = S_3 with a of order 3
    p = pres(2, [Word.of(1) ** 3, Word.of(2, 2), Word.of(1, 2) ** 2])
    assert group_order(p, strategy="hlt") == group_order(p, strategy="felsch") == 6


def test_limit_is_a_result_not_an_error():
    z2 = pres(2, [Word.of(1, 2, -1, -2)])
    res = enumerate_cosets(z2, max_cosets=1000)
    assert res.status is Status.LIMIT_EXCEEDED and res.index is None
    assert not res.completed
    assert res.to_dict()["status"] == "LIMIT_EXCEEDED"


@pytest.mark.parametrize("n", [6, 7, 8])
def test_coxeter_orders(n):
    assert group_order(coxeter_presentation(n)) == factorial(n)


def test_coxeter_translation_keeps_order():
    p = star_presentation(8)
    assert group_order(p, strategy="hlt") == group_order(coxeter_translate(p), strategy="hlt") == 40320


def test_parabolic_index():
    assert parabolic_index(coxeter_presentation(10)).index == 10
    assert parabolic_index(coxeter_presentation(6), omit=3).index == 6
    parabolic_index(coxeter_presentation(12))  # warm the compiled kernels
    t = time.perf_counter()
    assert parabolic_index(coxeter_presentation(40)).index == 40
    assert time.perf_counter() - t < 1.0
    with pytest.raises(ValueError):
        parabolic_index(coxeter_presentation(10), omit=6)


def test_table_growth_matches_fixed_limit():
    # orders past the initial allocation force several resizes mid-run
    p = coxeter_presentation(9)
    for strategy in ("hlt", "felsch"):
        assert enumerate_cosets(p, strategy=strategy).index == 362880
    assert not enumerate_cosets(p, max_cosets=100_000, strategy="hlt").completed


def test_subgroup_index():
    s3 = pres(2, [Word.of(1, 1), Word.of(2, 2), Word.of(1, 2) ** 3])
    assert enumerate_cosets(s3, [Word.of(1)]).index == 3
    assert enumerate_cosets(s3, [Word.of(1), Word.of(2)]).index == 1


def test_regular_representation_from_table():
    # the completed table is the regular action; its columns generate a group of the same order
    p = coxeter_presentation(6)
    res = enumerate_cosets(p, keep_table=True)
    table = res.table
    assert table.shape == (720, 5)
    gens = [tuple(int(c) - 1 for c in table[:, x]) for x in range(table.shape[1])]
    assert closure_size(gens) == 720


def test_argument_checks():
    p = coxeter_presentation(6)
    with pytest.raises(ValueError):
        enumerate_cosets(p, strategy="bfs")
    with pytest.raises(ValueError):
        enumerate_cosets(p, max_cosets=0)
    with pytest.raises(ValueError):
        enumerate_cosets(e10_appendix_presentation())
    with pytest.raises(ValueError):
        enumerate_cosets(pres(2, []))


def test_prepare_dedupes_and_detects_involutions():
    prep = prepare((Generator(1), Generator(2)),
                   [Word.of(1, 1), Word.of(2, 2), Word.of(1, 2, 1, 2), Word.of(2, 1, 2, 1),
                    Word.of(-1, -2, -1, -2), Word.of(1, 2, 1, 2, 1, 2)])
    assert prep.ncols == 2  # both generators are self-inverse columns
    # squares vanish on self-inverse columns; the two braids coincide up to rotation/inversion
    assert len(prep.relators) == 2


def test_run_without_generators():
    assert run((), []).index == 1


# -- strategy independence ----------------------------------------------------


@st.composite
def small_presentations(draw):
    k = draw(st.integers(2, 3))
    rels = [Word.of(i, i) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            m = draw(st.sampled_from([2, 2, 3, 3, 4, 5, 6]))
            rels.append(Word.of(i, j) ** m)
    extra = draw(st.lists(st.lists(st.integers(1, k), min_size=1, max_size=8), max_size=2))
    rels += [Word.of(*e) for e in extra]
    rels = [r for r in rels if r]
    sub = draw(st.lists(st.integers(1, k), max_size=2, unique=True))
    return pres(k, rels), [Word.of(g) for g in sub]


@settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_presentations())
def test_hlt_and_felsch_agree(case):
    p, sub = case
    a = enumerate_cosets(p, sub, max_cosets=20_000, strategy="hlt")
    b = enumerate_cosets(p, sub, max_cosets=20_000, strategy="felsch")
    if a.completed and b.completed:
        assert a.index == b.index
