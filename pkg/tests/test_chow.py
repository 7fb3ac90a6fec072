from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splayed.chow import (
    Ambient,
    ChowClass,
    PaxPb,
    Pn,
    binomial_class,
    cap_fundamental,
    chern_der_log_snc,
    chern_splayed_combine,
    chern_tangent,
    parse_ambient,
)


def cls(N, coeffs):
    return ChowClass.from_list(Pn(N), coeffs)


# -- ring operations --------------------------------------------------------------


def test_geometric_series_inverts():
    V = Pn(4)
    one_plus_h = cls(4, [1, 1])
    series = cls(4, [(-1) ** k for k in range(5)])
    assert one_plus_h * series == ChowClass.one(V)
    assert one_plus_h.invert() == series


def test_invert_one():
    for V in (Pn(2), PaxPb(1, 2)):
        assert ChowClass.one(V).invert() == ChowClass.one(V)


def test_division_example():
    V = Pn(3)
    assert binomial_class(V, 4) / binomial_class(V, 2) == cls(3, [1, 2, 1])


def test_truncation_on_multiplication():
    H = ChowClass.hyperplane(Pn(2))
    assert (H * H * H).is_zero()
    V = PaxPb(1, 1)
    H1, H2 = ChowClass.hyperplane(V, 0), ChowClass.hyperplane(V, 1)
    assert (H1 * H1).is_zero()
    assert not (H1 * H2).is_zero()


def test_errors():
    with pytest.raises(ValueError):
        cls(2, [1]) + cls(3, [1])
    with pytest.raises((ValueError, ZeroDivisionError)):
        cls(2, [0, 1]).invert()
    with pytest.raises(ValueError):
        Ambient((0,))
    # terms beyond H^N are truncated away
    assert cls(2, [1, 0, 0, 1]) == cls(2, [1])


def test_parse_ambient():
    assert parse_ambient("P3") == Pn(3)
    assert parse_ambient("P2xP1") == PaxPb(2, 1)
    for bad in ("Q3", "P", "P1xP1xP1"):
        with pytest.raises(ValueError):
            parse_ambient(bad)


# -- Chern classes ------------------------------------------------------------------


def test_chern_tangent_examples():
    assert chern_tangent(Pn(1)) == cls(1, [1, 2])
    assert chern_tangent(Pn(3)) == cls(3, [1, 4, 6, 4])
    V = PaxPb(1, 1)
    expected = ChowClass(V, {(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 4})
    assert chern_tangent(V) == expected


def test_snc_examples():
    assert chern_der_log_snc(Pn(3), [1, 1]) == cls(3, [1, 2, 1])
    for N in (1, 2, 3, 4):
        assert chern_der_log_snc(Pn(N), [1]) == binomial_class(Pn(N), N)
    assert chern_der_log_snc(Pn(2), [1, 1, 1]) == ChowClass.one(Pn(2))
    with pytest.raises(ValueError):
        chern_der_log_snc(Pn(2), [])


def test_combine_examples():
    V = Pn(3)
    tv = chern_tangent(V)
    assert chern_splayed_combine(tv, tv, V) == tv
    c = binomial_class(V, 3)
    assert chern_splayed_combine(c, c, V) == cls(3, [1, 2, 1])
    with pytest.raises(ValueError):
        chern_splayed_combine(c, chern_tangent(Pn(2)))


def test_cap_fundamental_examples():
    V = Pn(2)
    assert cap_fundamental(ChowClass.one(V)).coeff(2) == 1
    c = cap_fundamental(chern_tangent(V))
    assert c.by_dimension() == [3, 3, 1]
    assert c.integral() == 3
    assert cap_fundamental(cls(3, [1, 2, 1])).integral() == 0


# -- properties -------------------------------------------------------------------


coeff = st.integers(-6, 6).map(Fraction)


@st.composite
def classes(draw, N=3, invertible=False):
    cs = draw(st.lists(coeff, min_size=N + 1, max_size=N + 1))
    if invertible and cs[0] == 0:
        cs[0] = Fraction(1)
    return cls(N, cs)


@st.composite
def product_classes(draw, a=2, b=1, invertible=False):
    V = PaxPb(a, b)
    c = {e: draw(coeff) for e in V.exponents()}
    if invertible and not c[(0, 0)]:
        c[(0, 0)] = Fraction(1)
    return ChowClass(V, c)


@given(classes(), classes(), classes())
def test_ring_axioms_pn(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ChowClass(p.ambient)


@given(product_classes(), product_classes(), product_classes())
def test_ring_axioms_product(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(classes(invertible=True))
def test_invert_properties(c):
    one = ChowClass.one(c.ambient)
    assert c * c.invert() == one
    assert c.invert().invert() == c


@given(product_classes(invertible=True))
def test_invert_on_products(c):
    assert c * c.invert() == ChowClass.one(c.ambient)


@given(st.integers(1, 8))
def test_euler_characteristic_of_pn(N):
    assert cap_fundamental(chern_tangent(Pn(N))).integral() == N + 1


def _bracketings(items):
    if len(items) == 1:
        yield items[0]
        return
    for k in range(1, len(items)):
        for left in _bracketings(items[:k]):
            for right in _bracketings(items[k:]):
                yield (left, right)


def _combine(tree, V):
    if isinstance(tree, tuple):
        return chern_splayed_combine(_combine(tree[0], V), _combine(tree[1], V), V)
    return chern_der_log_snc(V, [tree])


@settings(max_examples=40)
@given(st.sampled_from([2, 3]), st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_combine_any_bracketing_matches_snc(N, degrees):
    V = Pn(N)
    target = chern_der_log_snc(V, degrees)
    for tree in _bracketings(degrees):
        assert _combine(tree, V) == target
