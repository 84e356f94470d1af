import itertools
import json

import pytest

from oracles import field_mul, sympy_irreducible
from rankcode.gfq import GF, FieldMismatchError, default_modulus, field, is_irreducible

SMALL = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2)]


@pytest.mark.parametrize("q,m", SMALL + [(2, 8), (3, 4), (5, 3)])
def test_default_modulus_is_smallest_irreducible(q, m):
    mod = default_modulus(q, m)
    assert sympy_irreducible(mod, q)
    # product() runs through (c0, ..., c_{m-1}) in lexicographic order
    earlier = itertools.takewhile(lambda c: c + (1,) != mod, itertools.product(range(q), repeat=m))
    assert not any(sympy_irreducible(c + (1,), q) for c in earlier)


def test_known_moduli():
    assert default_modulus(2, 4) == (1, 0, 0, 1, 1)
    assert default_modulus(2, 16)[0] == 1 and sum(default_modulus(2, 16)) == 5


@pytest.mark.parametrize("q", [2, 3, 5])
def test_irreducibility_agrees_with_sympy(q):
    for deg in range(1, 5 if q < 5 else 4):
        for tail in itertools.product(range(q), repeat=deg):
            poly = tail + (1,)
            assert is_irreducible(poly, q) == sympy_irreducible(poly, q), poly


@pytest.mark.parametrize("q,m", SMALL)
def test_multiplication_matches_sympy(q, m):
    F = field(q, m)
    for a in F.elements():
        for b in F.elements():
            assert F.mul(a, b) == field_mul(a, b, q, m, F.modulus)


@pytest.mark.parametrize("q,m", [(2, 3), (3, 2), (2, 4), (2, 6), (3, 3)])
def test_field_axioms_exhaustive(q, m):
    F = field(q, m)
    els = list(F.elements())
    for a, b, c in itertools.product(els, repeat=3):
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a


def test_field_axioms_sampled(rng):
    F = field(2, 16)
    G = field(3, 7)
    for K in (F, G):
        a, b, c = (rng.integers(0, K.order, 10**4) for _ in range(3))
        for x, y, z in zip(a.tolist(), b.tolist(), c.tolist()):
            assert K.mul(x, K.add(y, z)) == K.add(K.mul(x, y), K.mul(x, z))
            assert K.mul(K.mul(x, y), z) == K.mul(x, K.mul(y, z))


def test_inverse_and_division():
    F = field(2, 4)
    for a in range(1, F.order):
        assert F.mul(a, F.inv(a)) == 1
        assert F.inv(a) == F.inv_euclid(a)
    G = field(3, 3)
    for a in range(1, G.order):
        assert G.inv(a) == G.inv_euclid(a)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.div(3, 0)


def test_inverse_agrees_with_search():
    F = field(3, 4)
    for a in range(1, F.order, 7):
        found = [b for b in F.elements() if F.mul(a, b) == 1]
        assert found == [F.inv(a)]


def test_multiplicative_group_cyclic_gf8():
    F = field(2, 3)
    table = {(a, b): field_mul(a, b, 2, 3, F.modulus) for a in range(8) for b in range(8)}
    gens = []
    for g in range(1, 8):
        seen, x = set(), 1
        for _ in range(7):
            x = table[(x, g)]
            seen.add(x)
        if len(seen) == 7:
            gens.append(g)
    assert gens, "no generator of the multiplicative group"
    g = gens[0]
    x = 1
    for e in range(1, 8):
        x = table[(x, g)]
        assert F.pow(g, e) == x
    assert x == 1


@pytest.mark.parametrize("q,m", SMALL)
def test_frobenius(q, m):
    F = field(q, m)
    for a in F.elements():
        assert F.frob(a, 0) == a
        assert F.frob(a, m) == a
        assert F.frob(a, 1) == F.pow(a, q)
        assert F.frob(F.frob(a, 1), -1) == a
        x = a
        for _ in range(m):
            x = F.frob(x, 1)
        assert x == a


def test_frobenius_linear_gf8():
    F = field(2, 3)
    for a, b in itertools.product(range(8), repeat=2):
        assert F.frob(F.add(a, b), 1) == F.add(F.frob(a, 1), F.frob(b, 1))


def test_trace():
    F = field(2, 3)
    assert F.trace(0) == 0
    assert any(F.trace(a) == 1 for a in F.elements())
    G = field(2, 4)
    for a in G.elements():
        assert G.trace(G.frob(a, 1)) == G.trace(a)
    H = field(3, 2)
    for a in H.elements():
        t = H.trace(a)
        assert 0 <= t < 3
        s = 0
        for i in range(H.m):
            s = H.add(s, H.frob(a, i))
        assert s == t


@pytest.mark.parametrize("q,m", [(2, 4), (2, 8), (3, 3), (5, 2)])
def test_trace_image_in_base_field(q, m):
    F = field(q, m)
    assert {F.trace(a) for a in F.elements()} == set(range(q))


def test_coordinates_roundtrip_and_format():
    F = field(2, 4)
    assert F.format(F.alpha) == "0100"
    for a in F.elements():
        assert F.parse(F.format(a)) == a
        assert F.from_coords(F.coords(a)) == a
    G = field(3, 2)
    assert G.format(5) == "21"
    assert G.parse("21") == 5


def test_descriptor_serialization():
    F = field(3, 5)
    d = json.loads(F.to_json())
    assert d == {"q": 3, "m": 5, "modulus": list(F.modulus)}
    assert GF.from_dict(d) == F


def test_bad_parameters():
    with pytest.raises(ValueError):
        GF(4, 2)
    with pytest.raises(ValueError):
        GF(7, 2)
    with pytest.raises(ValueError):
        GF(2, 33)
    with pytest.raises(ValueError):
        GF(2, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x + 1)^2


def test_field_element_wrapper():
    F = field(2, 4)
    a, b = F(3), F(9)
    assert (a + F(0)) == a
    assert (a * a.inverse()).value == 1
    assert (a / b) * b == a
    assert (a ** 15).value == 1
    assert a.frobenius(4) == a
    assert str(a) == "1100"
    with pytest.raises(FieldMismatchError):
        _ = a + field(2, 3)(1)
    with pytest.raises(ZeroDivisionError):
        _ = a / F(0)


def test_large_field_without_tables():
    F = field(2, 32)
    a, b = 0x12345678, 0x9ABCDEF1
    assert F.mul(a, F.inv(a)) == 1
    assert F.mul(a, b) == F.mul(b, a)
    assert F.frob(a, 32) == a
    G = field(5, 32)
    x = 123456789
    assert G.mul(x, G.inv(x)) == 1
