"""Cyclotomic arithmetic against sympy polynomial-quotient oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfgal.cyclotomic import (CycloElt, FieldDescriptor, delta_apply, embed,
                                embed_preimage, inverse, is_prime, mul,
                                multiplicative_order, parse_rat,
                                primitive_root, rat_str, reduce_terms,
                                unit_apply)

from oracle_tools import (oracle_cyclo_inverse, oracle_cyclo_mul,
                          oracle_multiplicative_order, oracle_primitive_root,
                          oracle_zeta_power)

FIELDS = [(3, 1), (3, 2), (5, 1), (7, 1), (3, 3)]

frac = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def elements(p, n):
    deg = FieldDescriptor(p, n).degree
    return st.lists(frac, min_size=deg, max_size=deg).map(
        lambda cs: CycloElt(FieldDescriptor(p, n), cs))


# -- scalar utilities --------------------------------------------------------

def test_rat_str_round_trip():
    for s in ("0/1", "5/3", "-7/2", "4/1"):
        assert rat_str(parse_rat(s)) == s
    assert parse_rat("6") == Fraction(6)


def test_is_prime():
    assert [m for m in range(2, 30) if is_prime(m)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_primitive_root_is_smallest_mod_p_squared(p):
    pi = primitive_root(p)
    assert pi == oracle_primitive_root(p * p)
    assert oracle_multiplicative_order(pi, p * p) == p * (p - 1)


def test_primitive_root_pinned_values():
    assert primitive_root(3) == 2
    assert primitive_root(5) == 2
    assert primitive_root(7) == 3


@pytest.mark.parametrize("g,modulus", [(2, 9), (2, 25), (3, 49), (4, 9)])
def test_multiplicative_order_matches_sympy(g, modulus):
    assert multiplicative_order(g, modulus) == \
        oracle_multiplicative_order(g, modulus)


# -- field descriptor ---------------------------------------------------------

@pytest.mark.parametrize("p,n", FIELDS)
def test_descriptor_shape(p, n):
    f = FieldDescriptor(p, n)
    assert f.modulus == p ** n
    assert f.degree == p ** (n - 1) * (p - 1)
    # one multiplier serves the whole tower: order (p-1)p^(n-1) mod p^n
    assert oracle_multiplicative_order(f.multiplier, f.modulus) == f.degree


# -- power-basis reduction ----------------------------------------------------

@pytest.mark.parametrize("p,n", FIELDS)
def test_zeta_power_matches_oracle(p, n):
    f = FieldDescriptor(p, n)
    for e in range(p ** n):
        assert list(CycloElt.zeta_power(f, e).coeffs) == \
            oracle_zeta_power(p, n, e)


def test_reduce_terms_handles_arbitrary_exponents():
    f = FieldDescriptor(3, 1)
    # zeta^5 = zeta^2 = -1 - zeta
    assert reduce_terms(f, {5: 1}) == CycloElt(f, [-1, -1])
    assert reduce_terms(f, {0: 1, 1: 1, 2: 1}) == CycloElt.zero(f)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1)])
@given(data=st.data())
def test_mul_matches_sympy(p, n, data):
    x = data.draw(elements(p, n))
    y = data.draw(elements(p, n))
    got = mul(x, y)
    assert list(got.coeffs) == oracle_cyclo_mul(p, n, x.coeffs, y.coeffs)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1)])
@given(data=st.data())
def test_ring_axioms(p, n, data):
    x = data.draw(elements(p, n))
    y = data.draw(elements(p, n))
    z = data.draw(elements(p, n))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == CycloElt.zero(x.field)
    assert x * CycloElt.one(x.field) == x


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1)])
@given(data=st.data())
def test_inverse_matches_sympy(p, n, data):
    x = data.draw(elements(p, n).filter(bool))
    inv = inverse(x)
    assert x * inv == CycloElt.one(x.field)
    assert list(inv.coeffs) == oracle_cyclo_inverse(p, n, x.coeffs)


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        inverse(CycloElt.zero(FieldDescriptor(3, 1)))


# -- Galois operations --------------------------------------------------------

@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1)])
@given(data=st.data())
def test_unit_apply_is_ring_automorphism(p, n, data):
    f = FieldDescriptor(p, n)
    x = data.draw(elements(p, n))
    y = data.draw(elements(p, n))
    u = data.draw(st.sampled_from(
        [v for v in range(1, p ** n) if v % p != 0]))
    assert unit_apply(u, x + y) == unit_apply(u, x) + unit_apply(u, y)
    assert unit_apply(u, x * y) == unit_apply(u, x) * unit_apply(u, y)
    assert unit_apply(1, x) == x
    assert unit_apply(u, CycloElt.rational(f, Fraction(7, 3))) == \
        CycloElt.rational(f, Fraction(7, 3))


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1)])
def test_unit_apply_on_zeta_powers(p, n):
    f = FieldDescriptor(p, n)
    for u in (1, 1 + p, f.multiplier):
        for e in range(p ** n):
            assert unit_apply(u, CycloElt.zeta_power(f, e)) == \
                CycloElt.zeta_power(f, (u * e) % p ** n)


def test_delta_apply_is_multiplier_power():
    f = FieldDescriptor(3, 2)
    x = CycloElt.zeta_power(f, 1) + CycloElt.rational(f, 2)
    assert delta_apply(1, x) == unit_apply(f.multiplier, x)
    assert delta_apply(f.degree, x) == x        # full order returns to start


# -- tower embeddings ---------------------------------------------------------

@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 3)])
@given(data=st.data())
def test_embed_is_injective_ring_map(m, n, data):
    p = 3
    x = data.draw(elements(p, m))
    y = data.draw(elements(p, m))
    ex, ey = embed(m, n, x), embed(m, n, y)
    assert embed(m, n, x * y) == mul(ex, ey)
    assert embed(m, n, x + y) == ex + ey
    assert embed_preimage(m, n, ex) == x


def test_embed_sends_generator_to_power():
    # the level-m root of unity is the p^(n-m) power of the level-n one
    p, m, n = 3, 1, 2
    fm, fn = FieldDescriptor(p, m), FieldDescriptor(p, n)
    assert embed(m, n, CycloElt.zeta_power(fm, 1)) == \
        CycloElt.zeta_power(fn, p ** (n - m))


def test_embed_preimage_detects_outsiders():
    # the level-2 generator is not in the level-1 subfield
    assert embed_preimage(1, 2, CycloElt.zeta_power(FieldDescriptor(3, 2), 1)) is None
