import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclezeta.errors import DomainError
from cyclezeta.finite_fields import embedding, field


def test_canonical_moduli_f2():
    assert field(2, 1).modulus == (0, 1)
    assert field(2, 2).modulus == (1, 1, 1)  # t^2 + t + 1
    assert field(2, 3).modulus == (1, 1, 0, 1)  # t^3 + t + 1


def test_field_orders():
    assert field(3, 2).order == 9
    assert field(5, 1).order == 5


FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]


@pytest.mark.parametrize("p,m", FIELDS)
def test_field_axioms_exhaustive(p, m):
    F = field(p, m)
    elements = range(F.order)
    for a in elements:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # multiplicative group order
    for a in elements:
        if a:
            assert F.pow(a, F.order - 1) == 1


@given(st.sampled_from(FIELDS), st.data())
@settings(max_examples=60)
def test_field_ring_identities(pm, data):
    F = field(*pm)
    a = data.draw(st.integers(min_value=0, max_value=F.order - 1))
    b = data.draw(st.integers(min_value=0, max_value=F.order - 1))
    c = data.draw(st.integers(min_value=0, max_value=F.order - 1))
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_frobenius_fixes_prime_field():
    F = field(2, 3)
    for a in range(2):
        assert F.pow(a, 2) == a
    # Frobenius is additive
    for a in range(F.order):
        for b in range(F.order):
            assert F.pow(F.add(a, b), 2) == F.add(F.pow(a, 2), F.pow(b, 2))


def test_embedding_is_ring_map():
    fwd, back = embedding(2, 2, 4)
    sub, sup = field(2, 2), field(2, 4)
    for a in range(sub.order):
        for b in range(sub.order):
            assert fwd[sub.add(a, b)] == sup.add(fwd[a], fwd[b])
            assert fwd[sub.mul(a, b)] == sup.mul(fwd[a], fwd[b])
    assert len(set(fwd)) == sub.order
    for a in range(sub.order):
        assert back[fwd[a]] == a


def test_embedding_image_is_frobenius_fixed():
    fwd, _ = embedding(2, 2, 4)
    sup = field(2, 4)
    fixed = {a for a in range(sup.order) if sup.pow(a, 4) == a}
    assert set(fwd) == fixed


def test_embedding_rejects_non_subfield():
    with pytest.raises(DomainError):
        embedding(2, 2, 3)


def test_inverse_of_zero_rejected():
    with pytest.raises(DomainError):
        field(2, 2).inv(0)
