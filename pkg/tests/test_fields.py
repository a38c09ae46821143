from itertools import product

import pytest

from gturan.fields import (
    MAX_FIELD_ORDER,
    field_add,
    field_inv,
    field_make,
    field_mul,
    field_pow,
    is_irreducible,
    multiplicative_order,
    norm_map,
    prime_power,
    primitive_element,
)


def _has_root(coeffs, p):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def test_prime_fields():
    f2 = field_make(2, 1)
    assert f2.order == 2 and len(f2.modulus) == 2
    f5 = field_make(5, 1)
    assert f5.order == 5
    for x, y in product(range(5), repeat=2):
        assert field_mul(f5, (x,), (y,)) == ((x * y) % 5,)


def test_gf9_modulus_is_smallest_rootless_quadratic():
    # monic quadratics x^2 + b x + c, smallest (b, c) first; irreducible iff rootless
    expected = next(
        (c, b, 1) for b in range(3) for c in range(3) if not _has_root((c, b, 1), 3)
    )
    assert field_make(3, 2).modulus == expected == (1, 0, 1)


def test_irreducibility_against_root_test():
    # for degree 2 and 3, irreducible <=> no root
    for p in (2, 3, 5):
        for m in (2, 3):
            for low in product(range(p), repeat=m):
                poly = list(low) + [1]
                assert is_irreducible(poly, p) == (not _has_root(poly, p))


def test_identities_and_lagrange():
    for p, m in [(2, 3), (3, 2), (5, 2), (2, 4), (7, 1)]:
        f = field_make(p, m)
        for x in f.elements():
            assert field_add(f, x, f.zero) == x
            assert field_mul(f, x, f.one) == x
            if any(x):
                assert field_pow(f, x, f.order - 1) == f.one
                assert field_mul(f, x, field_inv(f, x)) == f.one


def test_gf9_generator_order():
    f = field_make(3, 2)
    g = primitive_element(f)
    assert multiplicative_order(f, g) == 8
    assert field_pow(f, g, 8) == f.one
    assert len({field_pow(f, g, i) for i in range(8)}) == 8


def test_field_laws_small():
    f = field_make(2, 3)
    els = list(f.elements())
    for x, y, z in product(els, repeat=3):
        assert field_mul(f, x, field_add(f, y, z)) == field_add(
            f, field_mul(f, x, y), field_mul(f, x, z)
        )
        assert field_mul(f, field_mul(f, x, y), z) == field_mul(f, x, field_mul(f, y, z))


def test_norm_examples():
    f = field_make(3, 2)
    assert norm_map(f, f.zero, 3) == f.zero
    assert norm_map(f, f.one, 3) == f.one
    for x in f.elements():
        n = norm_map(f, x, 3)
        assert n == field_pow(f, x, 4)
        assert field_pow(f, n, 3) == n


def _small_towers():
    for p, m in [(2, 2), (2, 4), (2, 6), (3, 2), (3, 4), (2, 12), (5, 2), (3, 6)]:
        q_exps = [e for e in range(1, m) if m % e == 0]
        for e in q_exps:
            yield p, m, p**e


@pytest.mark.parametrize("p,m,q", list(_small_towers()))
def test_norm_multiplicative(p, m, q):
    f = field_make(p, m)
    assert f.order <= 2**12
    norms = [norm_map(f, x, q) for x in f.elements()]
    index = {x: i for i, x in enumerate(f.elements())}
    els = list(f.elements())
    if f.order <= 256:
        pairs = product(range(f.order), repeat=2)
    else:
        # exhaustive in x against a generator: N(g^i x) = N(g)^i N(x) follows from N(g x) = N(g) N(x)
        g = primitive_element(f)
        pairs = [(index[g], j) for j in range(f.order)]
    for i, j in pairs:
        prod = field_mul(f, els[i], els[j])
        assert norms[index[prod]] == field_mul(f, norms[i], norms[j])
    for n in norms:
        assert field_pow(f, n, q) == n


def test_errors():
    with pytest.raises(ValueError):
        field_make(4, 1)
    with pytest.raises(OverflowError):
        field_make(2, 21)
    assert 2**20 == MAX_FIELD_ORDER
    with pytest.raises(ValueError):
        norm_map(field_make(2, 4), field_make(2, 4).one, 3)
    with pytest.raises(ValueError):
        prime_power(12)
    assert prime_power(16) == (2, 4)
