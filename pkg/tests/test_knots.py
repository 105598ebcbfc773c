import pytest
import sympy
from hypothesis import given, strategies as st

from pretzelknots.knots import (
    AnalysisDeclined, Family, PretzelKnot, alexander, assoc_equal, boundary_generators,
    check_words_match_seifert, is_prime_power, leading_coefficient, normalize, parse_knot,
    seifert_matrices,
)
from pretzelknots.verify import family_alexander

odd = st.integers(-12, 12).map(lambda n: 2 * n + 1)


def test_normalize_examples():
    J = normalize(7, -5, 7)
    assert J.params == (-5, 7, 7) and (J.p, J.q, J.r) == (-3, 3, 3) and not J.mirrored
    J = normalize(-3, -5, 7)
    assert J.params == (-7, 3, 5) and J.mirrored
    assert normalize(3, 5, 7).params == (3, 5, 7)
    assert normalize(-1, 5, 7).two_bridge


@given(odd, odd, odd)
def test_normalize_idempotent_and_symmetric(a, b, c):
    J = normalize(a, b, c)
    again = normalize(*J.params)
    assert again.params == J.params and not again.mirrored
    assert normalize(c, a, b).params == J.params
    assert sum(x < 0 for x in J.params) <= 1
    assert list(J.params[1:]) == sorted(J.params[1:]) and J.params[1] > 0


def test_parse_knot():
    assert parse_knot("P(-5,7,9)").params == (-5, 7, 9)
    assert parse_knot(" p( 3, -3, 3, -3, 7 ) ").family is Family.ALTERNATING_SIGN
    assert parse_knot("P(3,-3,7)").params == (-3, 3, 7)
    assert parse_knot("P(3,3,3,3,3)").family is Family.OTHER
    for bad in ["P(2,4,6)", "Q(1,2,3)", "P(3,x,5)", "P()"]:
        with pytest.raises(ValueError):
            parse_knot(bad)


def test_declined():
    with pytest.raises(AnalysisDeclined):
        boundary_generators(parse_knot("P(1,1,1)"))
    with pytest.raises(AnalysisDeclined):
        seifert_matrices(parse_knot("P(3,3,3,3,3)"))


def _sympy_alexander(S):
    t = sympy.symbols("t")
    M = sympy.Matrix(S.tolist())
    return sympy.Poly((t * M - M.T).det(), t).all_coeffs()[::-1]


@given(st.integers(-6, 6), st.integers(1, 6), st.integers(1, 6))
def test_alexander_vs_sympy(p, q, r):
    if p in (0, -1):
        return
    J = PretzelKnot.triple(p, q, r)
    S, _ = seifert_matrices(J)
    ours = alexander(J)
    ref = [int(c) for c in _sympy_alexander(S)]
    ref += [0] * (len(ours) - len(ref))
    assert ours == ref
    assert ours[-1] == leading_coefficient(J)


@given(st.integers(-6, 6), st.integers(1, 6), st.integers(1, 6))
def test_alexander_symmetric_and_normalized(p, q, r):
    if p in (0, -1):
        return
    D = alexander(PretzelKnot.triple(p, q, r))
    assert D == D[::-1] or D == [-x for x in D[::-1]]
    assert abs(sum(D)) == 1


def test_closed_form_leading_coefficient():
    for p in range(-6, 4):
        for q in range(1, 5):
            for r in range(q, 6):
                if p in (0, -1) or p > q:
                    continue
                J = PretzelKnot.triple(p, q, r)
                assert (J.p, J.q, J.r) == (p, q, r)
                assert leading_coefficient(J) == (p + q + 1) * (q + r + 1) - q * (q + 1)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("r", [1, 2, 5])
def test_family_alexander(k, r):
    J = PretzelKnot.alternating_family(k, r)
    assert assoc_equal(alexander(J), family_alexander(k))
    assert check_words_match_seifert(J)


@given(st.integers(-6, 6), st.integers(1, 6), st.integers(1, 6))
def test_words_abelianize_to_seifert(p, q, r):
    if p in (0, -1):
        return
    assert check_words_match_seifert(PretzelKnot.triple(p, q, r))


def test_genus_one_words():
    X, H, K = boundary_generators(parse_knot("P(-3,3,5)"))
    # alpha_H = (b^-1 a)^(q+1) a^p with (p, q, r) = (-2, 1, 2)
    assert [str(w) for w in H] == ["b^-1 a b^-1 a^-1", "b^3 a^-1 b"]
    assert [str(w) for w in K] == ["a b^-1 a^-1", "b^3 a^-1 b a^-1"]


def test_prime_power():
    assert [n for n in range(1, 30) if is_prime_power(n)] == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    with pytest.raises(ValueError):
        is_prime_power(0)
