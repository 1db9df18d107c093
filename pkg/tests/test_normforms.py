import random

import pytest

from quadgenus.arith import Discriminant, DomainError, QuadInt
from quadgenus.lattice import GenTuple, apply_transform, contains, identity_matrix
from quadgenus.normforms import (
    MultiQuadraticForm,
    factor_witness,
    form_action,
    integral_tuple,
    norm_form,
    principal_norm_form,
    represent_from_fo,
)

D23 = Discriminant(-23)


def _random_disc(rng, lo=3, hi=500):
    while True:
        dv = -rng.randrange(lo, hi)
        if dv % 4 in (0, 1):
            return Discriminant(dv)


def _random_tuple(rng, d, m, bound=15):
    coeffs = []
    for _ in range(m):
        q = rng.randrange(-bound, bound + 1)
        p = rng.randrange(-bound, bound + 1)
        if (p - q * d.d) % 2:
            p += 1
        coeffs.append(QuadInt(p, q, d))
    return GenTuple(coeffs, d)


def test_principal_norm_form():
    for dv in (-23, -4, -84):
        d = Discriminant(dv)
        f = principal_norm_form(d)
        assert f.binary_triple() == (1, dv, (dv * dv - dv) // 4)
    assert principal_norm_form(Discriminant(-4)).binary_triple() == (1, -4, 5)


def test_norm_form_of_ideal_tuple():
    # (2, (1 - sqrt(-23))/2) -> 4x^2 + 2xy + 6y^2 = (a^2, ab, ac) at (2,1,3)
    x = GenTuple([QuadInt.from_int(2, D23), QuadInt(1, -1, D23)], D23)
    assert norm_form(x).binary_triple() == (4, 2, 6)


def test_evaluation_identity_random():
    rng = random.Random(20)
    for _ in range(200):
        d = _random_disc(rng)
        m = rng.randrange(1, 5)
        x = _random_tuple(rng, d, m)
        f = norm_form(x)
        z = [rng.randrange(-6, 7) for _ in range(m)]
        s = QuadInt(0, 0, d)
        for zi, ai in zip(z, x.coeffs):
            s = s + ai * zi
        assert f.evaluate(z) == s.norm()


def test_form_action_identity_and_scaling():
    f = principal_norm_form(D23)
    assert form_action(identity_matrix(2), f) == f
    doubled = form_action(((2, 0), (0, 2)), f)
    assert doubled.binary_triple() == tuple(4 * c for c in f.binary_triple())


def test_form_action_composite_example():
    # [[4,14],[0,1]] on x^2 - 23xy + 138y^2 gives 16x^2 + 20xy + 12y^2,
    # which is (4,5,3) after dividing by a*a' = 4
    f = principal_norm_form(D23)
    g = form_action(((4, 14), (0, 1)), f)
    assert g.binary_triple() == (16, 20, 12)


def test_form_action_dimension_mismatch():
    with pytest.raises(DomainError):
        form_action(identity_matrix(3), principal_norm_form(D23))


def test_naturality_random():
    rng = random.Random(21)
    for _ in range(200):
        d = _random_disc(rng)
        m = rng.randrange(1, 5)
        x = _random_tuple(rng, d, m)
        h = tuple(tuple(rng.randrange(-7, 8) for _ in range(m)) for _ in range(m))
        assert form_action(h, norm_form(x)) == norm_form(apply_transform(h, x))


def test_factor_witness_identity_and_scaling():
    x = integral_tuple(D23)
    assert factor_witness(x, x) == identity_matrix(2)
    tripled = GenTuple([c * 3 for c in x.coeffs], D23)
    h = factor_witness(x, tripled)
    assert h == ((3, 0), (0, 3))
    g = form_action(h, norm_form(x))
    assert g.binary_triple() == tuple(9 * c for c in norm_form(x).binary_triple())


def test_factor_witness_ideal_example():
    x = integral_tuple(D23)
    y = GenTuple([QuadInt.from_int(2, D23), QuadInt(1, -1, D23)], D23)
    h = factor_witness(x, y)
    assert h == ((2, 12), (0, 1))
    assert form_action(h, norm_form(x)).binary_triple() == (4, 2, 6)


def test_factor_witness_requires_containment():
    x = GenTuple([QuadInt.from_int(2, D23), QuadInt.omega(D23) * 2], D23)
    with pytest.raises(DomainError):
        factor_witness(x, integral_tuple(D23))


def test_value_containment_on_grid():
    # when y spans a sublattice of x, every value of norm_form(y) on a grid
    # is a value of norm_form(x)
    rng = random.Random(22)
    for _ in range(40):
        d = _random_disc(rng)
        x = _random_tuple(rng, d, 2, bound=6)
        h = tuple(tuple(rng.randrange(-4, 5) for _ in range(2)) for _ in range(2))
        y = apply_transform(h, x)
        assert contains(x, y)
        fx, fy = norm_form(x), norm_form(y)
        for z1 in range(-3, 4):
            for z2 in range(-3, 4):
                w = (h[0][0] * z1 + h[0][1] * z2, h[1][0] * z1 + h[1][1] * z2)
                assert fy.evaluate((z1, z2)) == fx.evaluate(w)


def test_represent_from_fo_examples():
    assert represent_from_fo(integral_tuple(D23)) == identity_matrix(2)
    y = GenTuple([QuadInt.from_int(2, D23), QuadInt(1, -1, D23)], D23)
    assert represent_from_fo(y) == ((2, 12), (0, 1))


def test_represent_from_fo_standard_basis_matrix():
    # (a, (b - sqrt d)/2) always yields exactly [[a, (b-d)/2], [0, 1]]
    rng = random.Random(23)
    done = 0
    while done < 60:
        d = _random_disc(rng)
        a = rng.randrange(1, 40)
        b = rng.randrange(-40, 40)
        if (b * b - d.d) % (4 * a):
            continue
        x = GenTuple([QuadInt.from_int(a, d), QuadInt(b, -1, d)], d)
        assert represent_from_fo(x) == ((a, (b - d.d) // 2), (0, 1))
        done += 1


def test_represent_from_fo_general_tuples():
    rng = random.Random(24)
    for _ in range(80):
        d = _random_disc(rng)
        m = rng.randrange(1, 5)
        x = _random_tuple(rng, d, m)
        h = represent_from_fo(x)
        mm = max(2, m)
        fo = norm_form(integral_tuple(d, mm))
        assert form_action(h, fo) == norm_form(x.padded(mm))


def test_multiform_equality_and_str():
    f = MultiQuadraticForm(2, {(0, 0): 4, (0, 1): 2, (1, 1): 6}, D23)
    g = MultiQuadraticForm(2, {(0, 0): 4, (0, 1): 2, (1, 1): 6}, D23)
    assert f == g
    assert str(f) == "+4*z1^2 +2*z1*z2 +6*z2^2"
    assert f.coeff(1, 0) == 2
