"""End-to-end acceptance checks, one test per criterion, each under a time budget."""

import time
from itertools import product
from pathlib import Path

import pytest

from demazure_support.charring import a2_demazure_dim_formula, demazure_character, demazure_character_from_word, dimension
from demazure_support.checks import check_parabolic_bounds
from demazure_support.rootsys import build_root_system
from demazure_support.supports import (
    Orbit,
    Variety,
    g_saturate,
    resolve,
    saturation_violations,
    support_A1,
    support_A2,
    support_w0J_symbolic,
)
from demazure_support.tables import build_table, render_text
from demazure_support.weyl import (
    all_elements,
    all_reduced_words,
    bruhat_leq,
    from_word,
    identity,
    long_element,
    longest_coset_rep,
    longest_element,
    parabolic_lower_bounds,
)

GOLDEN = Path(__file__).parent / "golden"
A2 = build_root_system("A", 2)
V = Variety
E = identity(2)
S_A, S_B = from_word([1], 2), from_word([2], 2)
S_AB, S_BA = from_word([1, 2], 2), from_word([2, 1], 2)
W0 = longest_element(2)


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def _singular_count(lam, p):
    # positive roots e_i - e_j with p | sum_{i<=k<j} (lam_k + 1)
    l1, l2 = lam
    return sum(1 for s in (l1 + 1, l2 + 1, l1 + l2 + 2) if s % p == 0)


def _expected_short_row(w, lam, p):
    top = V.FULL_U if p >= 3 else V.UAUB
    l1, l2 = lam
    if w == E:
        return top
    if w == S_A:
        return V.UA if (l1 + 1) % p == 0 else top
    if w == S_B:
        return V.UB if (l2 + 1) % p == 0 else top
    return {0: top, 1: V.UAUB, 3: V.ZERO}[_singular_count(lam, p)]


@pytest.mark.criterion(1, "Steinberg table for p in {3,5,7}")
def test_criterion_1_steinberg_table():
    golden = (GOLDEN / "steinberg.txt").read_text()
    with Budget(1.0):
        for p in (3, 5, 7):
            lam = (p - 1, p - 1)
            got = [support_A2(w, lam, p) for w in (E, S_A, S_B, S_AB, S_BA, W0)]
            assert got == [V.FULL_U, V.UA, V.UB, V.UAUB, V.UAUB, V.ZERO]
            assert render_text("steinberg", build_table("steinberg", p)) == golden


@pytest.mark.criterion(2, "A1 table for p in {2,3,5}, lambda <= 20")
def test_criterion_2_a1_table():
    s = from_word([1], 1)
    with Budget(1.0):
        for p in (2, 3, 5):
            for lam in range(21):
                assert support_A1(identity(1), lam, p) is V.FULL_U
                assert support_A1(s, lam, p) is (V.ZERO if (lam + 1) % p == 0 else V.FULL_U)
        assert render_text("a1", build_table("a1", 3)) == (GOLDEN / "a1.txt").read_text()


@pytest.mark.criterion(3, "A2 rows with length(w) != 2, p in {2,3,5}, entries <= 10")
def test_criterion_3_a2_short_rows():
    with Budget(5.0):
        for p in (2, 3, 5):
            for lam in product(range(11), repeat=2):
                for w in (E, S_A, S_B, W0):
                    assert support_A2(w, lam, p) is _expected_short_row(w, lam, p), (w, lam, p)
        for p in (3, 5):
            assert render_text("a2", build_table("a2", p)) == (GOLDEN / "a2.txt").read_text()
        assert render_text("a2p2", build_table("a2p2", 2)) == (GOLDEN / "a2p2.txt").read_text()


@pytest.mark.criterion(4, "length-two classifier: totality and spot values")
def test_criterion_4_length_two():
    with Budget(5.0):
        for p in (3, 5, 7):
            for lam in product(range(16), repeat=2):
                for w in all_elements(2):
                    assert isinstance(support_A2(w, lam, p), Variety)
            assert support_A2(S_AB, (p - 1, 0), p) is V.UA
            assert support_A2(S_AB, (0, p - 2), p) is V.UAUB


@pytest.mark.criterion(5, "dim H0(s_a s_b, lam) closed form, entries <= 12")
def test_criterion_5_dimension():
    with Budget(10.0):
        for lam in product(range(13), repeat=2):
            l1, l2 = lam
            d = dimension(demazure_character(A2, S_AB, lam))
            assert 2 * d == (l2 + 1) * (2 * l1 + l2 + 2)
            assert d == a2_demazure_dim_formula(lam)


@pytest.mark.criterion(6, "characters independent of reduced word, entries <= 8")
def test_criterion_6_reduced_words():
    with Budget(10.0):
        for w in all_elements(2):
            words = all_reduced_words(w)
            for lam in product(range(9), repeat=2):
                chars = {demazure_character_from_word(A2, word, lam) for word in words}
                assert len(chars) == 1, (w, lam)


@pytest.mark.criterion(7, "saturation monotone over all Bruhat pairs, entries <= 15")
def test_criterion_7_saturation_monotone():
    with Budget(10.0):
        found = []
        for p in (2, 3, 5, 7):
            for lam in product(range(16), repeat=2):
                found.extend((p, lam, v) for v in saturation_violations(A2, p, lam, order="bruhat"))
    if found:
        p, lam, (w1, w2, s1, s2) = found[0]
        pytest.fail(
            f"{len(found)} violations, first: p={p} lam={lam} w1={w1} < w2={w2} "
            f"but G·V(w2)={s2} not in G·V(w1)={s1}",
            pytrace=False,
        )


@pytest.mark.criterion(8, "B1-level non-monotonicity at the Steinberg weight, p=3")
def test_criterion_8_b_level_witness():
    big, small = support_A2(S_AB, (2, 2), 3), support_A2(S_B, (2, 2), 3)
    assert bruhat_leq(S_B, S_AB)
    assert not big.leq(small)
    assert g_saturate(big) is g_saturate(small) is Orbit.MIN


@pytest.mark.criterion(9, "parabolic bound lemma on W(A2), W(A3) and the A3 bound sets")
def test_criterion_9_parabolic_bounds():
    assert check_parabolic_bounds(2).passed
    assert check_parabolic_bounds(3).passed
    v = from_word([1, 2, 3], 3)
    bounds = parabolic_lower_bounds(v)
    assert {b.element for b in bounds} == {
        identity(3), from_word([1], 3), from_word([2], 3), from_word([3], 3), from_word([1, 3], 3)
    }
    s1s3 = from_word([1, 3], 3)
    assert [b.element for b in bounds if b.longest] == [s1s3]
    assert any(b.element == s1s3 and b.maximal for b in bounds)
    maximal = {b.I for b in parabolic_lower_bounds(from_word([1, 2], 3)) if b.maximal}
    assert maximal == {frozenset({1}), frozenset({2})}
    a, b = (long_element(I, 3) for I in maximal)
    assert not bruhat_leq(a, b) and not bruhat_leq(b, a)


@pytest.mark.criterion(10, "s_b s_a support equals the coset-rep formula when lam2 = 0")
def test_criterion_10_cross_validation():
    for p in (3, 5):
        for l1 in range(16):
            lam = (l1, 0)
            if l1 > 0:
                assert longest_coset_rep({2}, 2) == S_BA
            expected = resolve(A2, support_w0J_symbolic(A2, lam, p), p)
            assert support_A2(S_BA, lam, p) is expected, (lam, p)
