"""Acceptance criteria, one or more tests per criterion.

The terminal summary prints a ``criterion k: PASS/FAIL`` line for every
test below (see conftest.py).  Criterion 2 is a known failure: the literal
transcription of the n = 10 appendix does not pin the parabolic index, and
``test_appendix_index_lower_bound`` proves the index is at least 100.
"""

import time
from math import factorial

import pytest
from hypothesis import HealthCheck, given, settings
import hypothesis.strategies as st

import test_todd_coxeter
import test_words
from conftest import raw_words, words
from zappatic.cli import EXIT_INCONCLUSIVE, EXIT_OK, main
from zappatic.deduction import Verdict, deduction_suite, is_consequence
from zappatic.invariants import (
    Existence,
    chern,
    curve_combinatorics,
    dual_of,
    existence_check,
    pluecker_dual,
)
from zappatic.presentation import (
    build_star_parts,
    coxeter_presentation,
    e10_appendix_presentation,
    path_order,
    quotient_star,
    star_presentation,
)
from zappatic.symverify import (
    Certificate,
    GeneratorAssignment,
    Permutation,
    check_homomorphism,
    evaluate,
    path_assignment,
    presentation_for,
    verify,
)
from zappatic.todd_coxeter import enumerate_cosets, parabolic_index
from zappatic.words import Word, commutator, triple

MINUTE = 60.0


# -- 1: order certification -------------------------------------------------


@pytest.mark.criterion(1)
@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_order_certified(n):
    t = time.perf_counter()
    v = verify(presentation_for(n), "order")
    elapsed = time.perf_counter() - t
    assert v.certificate is Certificate.CERTIFIED
    assert v.order == factorial(n)
    assert elapsed <= 5 * MINUTE


@pytest.mark.criterion(1)
@pytest.mark.slow
def test_order_n10_stretch(capsys):
    t = time.perf_counter()
    code = main(["verify", "--n", "10", "--max-cosets", "12000000"])
    elapsed = time.perf_counter() - t
    out = capsys.readouterr().out
    print(out, f"elapsed {elapsed:.0f}s")
    assert code in (EXIT_OK, EXIT_INCONCLUSIVE)
    if code == EXIT_OK:
        assert '"order": 3628800' in out
        assert elapsed <= 30 * MINUTE


# -- 2: appendix fixture ----------------------------------------------------


@pytest.mark.criterion(2)
@pytest.mark.xfail(strict=True, reason="literal appendix relators leave the parabolic index >= 100")
def test_appendix_parabolic_index():
    t = time.perf_counter()
    staged = parabolic_index(star_presentation(10), strategy="hlt")
    appendix = parabolic_index(quotient_star(e10_appendix_presentation()),
                               max_cosets=1_000_000, strategy="hlt")
    assert time.perf_counter() - t <= MINUTE
    assert staged.index == 10
    assert appendix.completed and appendix.index == staged.index


def test_staged_side_has_index_10():
    assert parabolic_index(star_presentation(10), strategy="hlt").index == 10


def test_appendix_index_lower_bound():
    # two homomorphisms of the appendix group to S_10 agree on the path and
    # differ on generator 5; their product acts on ordered pairs, and the
    # parabolic subgroup fixes (10, 10), so its index is at least the orbit size
    p = quotient_star(e10_appendix_presentation())
    base = path_assignment(10)
    models = []
    for five in [(1, 10), (2, 10)]:
        a = GeneratorAssignment(10, {**base, 5: Permutation.transposition(10, *five)})
        assert check_homomorphism(p, a).ok
        models.append(a)
    gens = [(models[0][g], models[1][g]) for g in models[0]]
    omit = path_order(10)[-1]
    for g in path_order(10):
        if g != omit:
            assert models[0][g](10) == 10 and models[1][g](10) == 10
    orbit, frontier = {(10, 10)}, [(10, 10)]
    while frontier:
        i, j = frontier.pop()
        for a, b in gens:
            q = (a(i), b(j))
            if q not in orbit:
                orbit.add(q)
                frontier.append(q)
    assert len(orbit) == 100
    # the long relator separates the two models
    from zappatic.presentation import long_relator
    assert evaluate(long_relator(10), models[0]).is_identity()
    assert not evaluate(long_relator(10), models[1]).is_identity()


# -- 3: surjection suite ----------------------------------------------------


def _part_relators(n):
    return [r for part in build_star_parts(n) for r in part.relators]


@pytest.mark.criterion(3)
@pytest.mark.parametrize("n", range(8, 17))
def test_star_parts_surject(n):
    a = path_assignment(n, include_five=True)
    assert all(evaluate(r, a).is_identity() for r in _part_relators(n))
    assert check_homomorphism(star_presentation(n), a).ok


@pytest.mark.criterion(3)
def test_coxeter_surjects():
    for n in range(6, 51):
        assert check_homomorphism(coxeter_presentation(n), path_assignment(n)).ok


def _swapped(a, g, h):
    amap = dict(a)
    amap[g], amap[h] = amap[h], amap[g]
    return GeneratorAssignment(a.n, amap)


@pytest.mark.criterion(3)
@pytest.mark.parametrize("n", [8, 9, 12])
def test_every_swap_breaks_a_star_relator(n):
    a = path_assignment(n, include_five=True)
    rels = _part_relators(n)
    gens = sorted(a)
    for i, g in enumerate(gens):
        for h in gens[i + 1:]:
            b = _swapped(a, g, h)
            assert not all(evaluate(r, b).is_identity() for r in rels), (g, h)


@pytest.mark.criterion(3)
@pytest.mark.parametrize("n", [6, 10, 30, 50])
def test_every_swap_breaks_a_coxeter_relator(n):
    p = coxeter_presentation(n)
    a = path_assignment(n)
    gens = path_order(n)
    for i, g in enumerate(gens):
        for h in gens[i + 1:]:
            assert not check_homomorphism(p, _swapped(a, g, h)).ok, (g, h)


# -- 4: deduction suite -----------------------------------------------------


@pytest.mark.criterion(4)
@pytest.mark.parametrize("n", [8, 9])
def test_derived_relators_are_consequences(n):
    rep = deduction_suite(n)
    assert rep.base_order == factorial(n)
    assert [r.verdict for r in rep.results] == [Verdict.CONSEQUENCE] * len(rep.results)
    if n == 9:
        assert commutator(5, 8) in [r.relator for r in rep.results]


@pytest.mark.criterion(4)
def test_deduction_negative_controls():
    # braid (7 8)^3 weakened to (7 8)^2: the braid is no longer a consequence
    p = coxeter_presentation(8)
    q = p.without(Word.of(7, 8) ** 3).with_relators([Word.of(7, 8) ** 2])
    d = is_consequence(q, Word.of(7, 8) ** 3)
    assert d.verdict is Verdict.NOT_CONSEQUENCE and d.base_order == 10080
    # the staged braid <7,8> swapped for a commutator changes the order
    relaxed = star_presentation(8).without(triple(7, 8)).with_relators([commutator(7, 8)])
    assert enumerate_cosets(relaxed, strategy="hlt").index == 2


# -- 5-7: invariants --------------------------------------------------------


@pytest.mark.criterion(5)
def test_invariant_rows_and_closed_forms():
    rows = {n: chern(curve_combinatorics(n)).factorial_normalized for n in (4, 5, 6)}
    assert rows == {4: (1, 4), 5: (4, 5), 6: (9, 7)}
    for n in range(4, 101):
        c = curve_combinatorics(n)
        assert c.g == n + 1
        assert 3 * chern(c).tau == factorial(n) * (n - 11)


@pytest.mark.criterion(6)
def test_existence_bound():
    for n in range(4, 101):
        expected = Existence.EXISTS_POSSIBLE if n <= 30 else Existence.NONEXISTENT
        assert existence_check(n).verdict is expected
        assert dual_of(curve_combinatorics(n)).dual_nodes == 30 - n


@pytest.mark.criterion(7)
def test_pluecker_cubic_oracles():
    nodal, cuspidal = pluecker_dual(3, 1, 0), pluecker_dual(3, 0, 1)
    assert nodal.m_star == 4 and cuspidal.m_star == 3
    assert (nodal.dual_nodes, nodal.dual_cusps) == (0, 3)
    assert (cuspidal.dual_nodes, cuspidal.dual_cusps) == (0, 1)
    back = pluecker_dual(4, 0, 3)
    assert (back.m_star, back.dual_nodes, back.dual_cusps) == (3, 1, 0)
    back = pluecker_dual(3, 0, 1)
    assert (back.m_star, back.dual_nodes, back.dual_cusps) == (3, 0, 1)


# -- 8: property suites -----------------------------------------------------


def _count_examples(body, *strategies):
    """Run ``body`` under hypothesis and return how many examples it saw."""
    seen = [0]

    @settings(max_examples=1000, deadline=None, database=None,
              suppress_health_check=[HealthCheck.too_slow])
    @given(st.tuples(*strategies))
    def run(args):
        seen[0] += 1
        body(*args)

    run()
    return seen[0]


def _inner(test):
    return test.hypothesis.inner_test


@pytest.mark.criterion(8)
def test_word_properties():
    counts = [
        _count_examples(_inner(test_words.test_reduction_is_idempotent), raw_words()),
        _count_examples(_inner(test_words.test_reduction_is_confluent),
                        raw_words(max_index=3, max_size=16), st.data()),
        _count_examples(_inner(test_words.test_commutator_identities),
                        words(max_size=8), words(max_size=8)),
        _count_examples(_inner(test_words.test_triple_identities),
                        words(max_size=8), words(max_size=8)),
    ]
    assert min(counts) >= 1000, counts


@pytest.mark.criterion(8)
def test_nested_word_properties():
    n = _count_examples(_inner(test_words.test_nested_word_laws), st.integers(7, 200), st.data())
    assert n >= 1000


@pytest.mark.criterion(8)
def test_strategy_independence():
    n = _count_examples(_inner(test_todd_coxeter.test_hlt_and_felsch_agree),
                        test_todd_coxeter.small_presentations())
    assert n >= 1000
