import itertools

import pytest

from pgcones import field_new, subfield
from pgcones.errors import NonPrimeCharacteristic, OddDegree, OrderTooLarge


def test_gf2_basics():
    f = field_new(2, 1)
    assert f.q == 2
    assert f.add[1, 1] == 0
    assert f.mul[1, 1] == 1


def test_gf4_frobenius_fixes_prime_field():
    f = field_new(2, 2)
    fixed = [x for x in range(4) if f.mul[x, x] == x]
    assert fixed == [0, 1]


def test_gf16_subfield_is_gf4():
    f = field_new(2, 4)
    # exhaustive: the fixed points of x -> x^4
    fixed = [x for x in range(16) if f.pow(x, 4) == x]
    assert len(fixed) == 4
    assert subfield(f) == fixed


@pytest.mark.parametrize("p,h", [(2, 1), (2, 2), (3, 1), (2, 3), (3, 2), (2, 4)])
def test_field_axioms_exhaustive(p, h):
    f = field_new(p, h)
    q = f.q
    for x, y in itertools.product(range(q), repeat=2):
        assert f.add[x, y] == f.add[y, x]
        assert f.mul[x, y] == f.mul[y, x]
        assert f.add[x, f.neg[x]] == 0
    for x, y, z in itertools.product(range(q), repeat=3):
        assert f.add[f.add[x, y], z] == f.add[x, f.add[y, z]]
        assert f.mul[f.mul[x, y], z] == f.mul[x, f.mul[y, z]]
        assert f.mul[x, f.add[y, z]] == f.add[f.mul[x, y], f.mul[x, z]]
    for x in range(1, q):
        assert f.mul[x, f.inv[x]] == 1


@pytest.mark.parametrize("p,h", [(2, 2), (2, 4), (3, 2), (5, 2)])
def test_frobenius_is_homomorphism(p, h):
    f = field_new(p, h)
    frob = [f.pow(x, p) for x in range(f.q)]
    for x, y in itertools.product(range(f.q), repeat=2):
        assert frob[f.add[x, y]] == f.add[frob[x], frob[y]]
        assert frob[f.mul[x, y]] == f.mul[frob[x], frob[y]]


def test_subfield_sizes_and_closure():
    assert subfield(field_new(2, 2)) == [0, 1]
    f9 = field_new(3, 2)
    s9 = subfield(f9)
    assert len(s9) == 3
    f16 = field_new(2, 4)
    s16 = set(subfield(f16))
    for x, y in itertools.product(s16, repeat=2):
        assert int(f16.add[x, y]) in s16
        assert int(f16.mul[x, y]) in s16


def test_subfield_is_itself_a_field():
    f = field_new(2, 4)
    s = subfield(f)
    nonzero = [x for x in s if x]
    for x in nonzero:
        assert int(f.inv[x]) in s


def test_errors():
    with pytest.raises(NonPrimeCharacteristic):
        field_new(4, 1)
    with pytest.raises(OrderTooLarge):
        field_new(2, 8)
    with pytest.raises(OddDegree):
        subfield(field_new(2, 3))


def test_enumeration_deterministic():
    a = field_new(2, 4)
    b = field_new(2, 4)
    assert (a.mul == b.mul).all()
    assert a.modulus == b.modulus


def test_untabled_order_finds_irreducible():
    f = field_new(7, 2)
    assert f.q == 49
    assert all(f.mul[x, f.inv[x]] == 1 for x in range(1, 49))
