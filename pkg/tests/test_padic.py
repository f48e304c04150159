import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from w2bound.padic import (
    Inconclusive,
    TruncatedSeries,
    newton_polygon,
    roots_from_polygon,
    roots_in_pZp_upper,
)

H = [[], [1, 5, 3], [0, 226, 3], [0, 78, 3]]
G = [[], [2, 1, 3], [2, 4, 3], [0, 237, 3]]


def test_example_series_bounds():
    h = TruncatedSeries.from_triples(7, H)
    g = TruncatedSeries.from_triples(7, G)
    assert roots_in_pZp_upper(h) == 2
    assert roots_in_pZp_upper(g) == 3
    assert roots_from_polygon(newton_polygon(h)) == 2
    assert roots_from_polygon(newton_polygon(g)) == 3
    slopes = [s.slope for s in newton_polygon(h)]
    assert slopes == [None, Fraction(-1), Fraction(0)]


def test_linear_series():
    # t + O(t^2) with unknown tail: one zero at most
    t = TruncatedSeries.from_triples(5, [[], [0, 1, None]])
    assert roots_in_pZp_upper(t) == 1


def test_isolated_valuations():
    # p^3 t + t^3: hull from (1, 3) to (3, 0) has slope -3/2, so at most 3 zeros
    s = TruncatedSeries.from_triples(5, [[], [3, 1, None], [], [0, 1, None]])
    assert roots_in_pZp_upper(s) == 3
    # brute force: zeros of 125 t + t^3 in 5Z mod 5^6 lift only from t = 0
    mod = 5 ** 6
    sols = [t for t in range(0, mod, 5) if (125 * t + t ** 3) % mod == 0]
    assert 0 in sols
    assert all(t % 25 == 0 for t in sols)


def test_inconclusive_without_unit():
    s = TruncatedSeries.from_triples(7, [[1, 1, 3], [2, 3, 4]])
    with pytest.raises(Inconclusive):
        roots_in_pZp_upper(s)


def test_indeterminate_segment():
    # c_1 only known to be O(p^1) and could sit below the chord (0, 2) -> (2, 0)
    s = TruncatedSeries.from_triples(5, [[2, 1, None], [1], [0, 1, None]])
    segs = newton_polygon(s)
    assert len(segs) == 1 and not segs[0].determinate
    # with c_1 = O(p^2) the chord is safe
    s2 = TruncatedSeries.from_triples(5, [[2, 1, None], [2], [0, 1, None]])
    assert newton_polygon(s2)[0].determinate


def test_imprecise_term_widens_bound():
    # p^2 + O(p) t + p t^2 + t^3: c_1 may reach the minimal weight 2, and with
    # c_1 = p the series p^2 + p t + ... does vanish at t = -p + O(p^2)
    s = TruncatedSeries.from_triples(7, [[2, 1, None], [1], [1, 1, None], [0, 1, None]])
    assert roots_in_pZp_upper(s) == 1
    # c_1 = O(p^2): every later term has weight >= 3, so no zeros
    s2 = TruncatedSeries.from_triples(7, [[2, 1, None], [2], [1, 1, None], [0, 1, None]])
    assert roots_in_pZp_upper(s2) == 0
    s3 = TruncatedSeries.from_triples(7, [[2, 1, None], [], [1, 1, None], [0, 1, None]])
    assert roots_in_pZp_upper(s3) == 0


def test_triple_validation():
    with pytest.raises(ValueError):
        TruncatedSeries.from_triples(5, [[0, 5, 3]])
    with pytest.raises(ValueError):
        TruncatedSeries.from_triples(5, [[3, 1, 2]])
    s = TruncatedSeries.from_triples(5, [[], [2], [1, 2, 4]])
    assert s.to_triples() == [[None, 0, None], [None, 0, 2], [1, 2, 4]]


@given(st.sampled_from([5, 7, 11]), st.data())
@settings(max_examples=100)
def test_unit_scaling_invariant(p, data):
    vals = data.draw(st.lists(st.integers(-p ** 4, p ** 4), min_size=2, max_size=7))
    s = TruncatedSeries.from_integers(p, vals)
    u = data.draw(st.integers(1, 1000).filter(lambda x: x % p))
    try:
        b = roots_in_pZp_upper(s)
    except Inconclusive:
        with pytest.raises(Inconclusive):
            roots_in_pZp_upper(s.scale_unit(u))
        return
    assert roots_in_pZp_upper(s.scale_unit(u)) == b


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("p", [5, 7])
def test_polynomial_bruteforce(p):
    """Products of (t - p r_i) with a cofactor whose constant term is a unit have
    exactly as many zeros in pZ_p as linear factors; the bound from the
    truncated coefficients must never fall below that count."""
    rng = random.Random(p)
    for _ in range(300):
        k = rng.randint(0, 3)
        poly = [rng.randrange(1, p)] + [rng.randrange(-p ** 3, p ** 3) for _ in range(rng.randint(0, 3))]
        for _ in range(k):
            r = rng.randrange(-p ** 2, p ** 2)
            poly = _poly_mul(poly, [-p * r, 1])
        prec = rng.randint(1, 4)
        s = TruncatedSeries.from_integers(p, poly, precision=prec)
        try:
            bound = roots_in_pZp_upper(s)
        except Inconclusive:
            continue
        # count zeros of the exact polynomial in pZ/p^K by brute force
        K = 5
        mod = p ** K
        zeros = {t for t in range(0, mod, p) if sum(c * t ** i for i, c in enumerate(poly)) % mod == 0}
        assert bound >= k
        if k == 0:
            assert not zeros
        exact = TruncatedSeries.from_integers(p, poly)
        assert roots_in_pZp_upper(exact) <= bound
        assert roots_in_pZp_upper(exact) >= k


@given(st.sampled_from([5, 7]), st.lists(st.integers(-2000, 2000), min_size=2, max_size=7))
def test_polygon_and_strassmann_agree(p, vals):
    s = TruncatedSeries.from_integers(p, vals)
    try:
        b = roots_in_pZp_upper(s)
    except Inconclusive:
        return
    assert roots_from_polygon(newton_polygon(s)) == b
