import random

import pytest

from quadgenus.arith import Discriminant, DomainError
from quadgenus.forms import (
    BinaryForm,
    compose_crt,
    enumerate_reduced,
    is_equivalent,
    principal_form,
    reduce_form,
)
from quadgenus.ideals import (
    OrderIdeal,
    compose_via_matrices,
    form_to_ideal,
    h_alpha,
    ideal_mul,
    ideal_to_form,
    tau_pair,
)
from quadgenus.lattice import apply_transform, mat_mul
from quadgenus.normforms import integral_tuple

D23 = Discriminant(-23)


def test_ideal_validation():
    OrderIdeal(2, 1, D23)
    OrderIdeal(4, 5, D23)
    with pytest.raises(DomainError):
        OrderIdeal(5, 1, D23)  # b^2 - d = 24 not divisible by 4a = 20
    with pytest.raises(DomainError):
        OrderIdeal(-2, 1, D23)
    with pytest.raises(DomainError):
        OrderIdeal(4, 2, Discriminant(-28))  # gcd(4, 2, 2) = 2


def test_ideal_equality_is_lattice_equality():
    assert OrderIdeal(4, 5, D23) == OrderIdeal(4, -19, D23)
    assert OrderIdeal(4, 5, D23) != OrderIdeal(4, 3, D23)
    assert OrderIdeal(2, 1, D23) != OrderIdeal(4, 5, D23)


def test_form_to_ideal_examples():
    assert form_to_ideal(BinaryForm(1, 1, 6, D23)) == OrderIdeal(1, 1, D23)
    assert form_to_ideal(BinaryForm(2, 1, 3, D23)) == OrderIdeal(2, 1, D23)
    assert form_to_ideal(BinaryForm(4, 5, 3, D23)) == OrderIdeal(4, 5, D23)


def test_ideal_to_form_examples():
    assert ideal_to_form(OrderIdeal(2, 1, D23)).triple() == (2, 1, 3)
    assert ideal_to_form(OrderIdeal(4, 5, D23)).triple() == (4, 5, 3)
    assert ideal_to_form(OrderIdeal(1, 1, D23)) == principal_form(D23)


def _random_ideal(rng, maxd=5000):
    while True:
        dv = -rng.randrange(3, maxd)
        if dv % 4 not in (0, 1):
            continue
        d = Discriminant(dv)
        forms = enumerate_reduced(d)
        f = rng.choice(forms)
        # shift b by a multiple of 2a: same ideal, different presentation
        k = rng.randrange(-4, 5)
        return OrderIdeal(f.a, f.b + 2 * k * f.a, d)


def test_dictionary_roundtrips_random():
    rng = random.Random(40)
    for _ in range(300):
        alpha = _random_ideal(rng)
        f = ideal_to_form(alpha)
        assert form_to_ideal(f) == alpha
        assert (f.a, f.b) == (alpha.a, alpha.b)  # exact fields, not just classes
        g = reduce_form(f)[0]
        assert ideal_to_form(form_to_ideal(g)) == g


def test_ideal_mul_unit():
    rng = random.Random(41)
    for _ in range(50):
        alpha = _random_ideal(rng)
        order = OrderIdeal(1, alpha.disc.d % 2, alpha.disc)
        content, prod = ideal_mul(alpha, order)
        assert content == 1
        assert prod == alpha


def test_ideal_mul_examples():
    alpha = OrderIdeal(2, 1, D23)
    content, sq = ideal_mul(alpha, alpha)
    assert content == 1
    assert (sq.a, sq.b) == (4, 5)
    content, nrm = ideal_mul(alpha, alpha.conjugate())
    assert content == 2  # alpha * conj(alpha) = norm(alpha) * order
    assert (nrm.a, nrm.b % 2) == (1, 1)


def test_norm_multiplicativity_concordant():
    import math

    rng = random.Random(42)
    checked = 0
    while checked < 200:
        a1 = _random_ideal(rng)
        forms = enumerate_reduced(a1.disc)
        f2 = rng.choice(forms)
        a2 = OrderIdeal(f2.a, f2.b + 2 * rng.randrange(-4, 5) * f2.a, a1.disc)
        if math.gcd(a1.a, a2.a, (a1.b + a2.b) // 2) != 1:
            continue
        content, prod = ideal_mul(a1, a2)
        assert content == 1
        assert prod.a == a1.a * a2.a
        checked += 1


def test_h_alpha_examples_and_coherence():
    assert h_alpha(OrderIdeal(2, 1, D23)) == ((2, 12), (0, 1))
    assert h_alpha(OrderIdeal(4, 5, D23)) == ((4, 14), (0, 1))
    assert h_alpha(OrderIdeal(1, 1, D23)) == ((1, 12), (0, 1))
    rng = random.Random(43)
    for _ in range(100):
        alpha = _random_ideal(rng)
        moved = apply_transform(h_alpha(alpha), integral_tuple(alpha.disc))
        assert moved == alpha.gen_tuple()


def test_tau_pair_square_example():
    alpha = OrderIdeal(2, 1, D23)
    tau1, tau2, bb, k1, k2 = tau_pair(alpha, alpha)
    assert (bb, k1, k2) == (5, 1, 1)
    assert tau1 == ((2, 1), (0, 1))
    assert tau2 == ((2, 1), (0, 1))
    assert mat_mul(h_alpha(alpha), tau1) == ((4, 14), (0, 1))


def test_tau_pair_principal():
    rng = random.Random(44)
    for _ in range(50):
        beta = _random_ideal(rng)
        d = beta.disc
        alpha = OrderIdeal(1, d.d % 2, d)
        tau1, tau2, bb, k1, k2 = tau_pair(alpha, beta)
        assert tau1 == ((beta.a, k1), (0, 1))
        assert (bb - beta.b) % (2 * beta.a) == 0
        assert alpha.b + 2 * k1 * alpha.a == bb


def test_tau_pair_moves_both_ideals_onto_product():
    import math

    rng = random.Random(45)
    checked = 0
    while checked < 150:
        a1 = _random_ideal(rng)
        forms = enumerate_reduced(a1.disc)
        f2 = rng.choice(forms)
        a2 = OrderIdeal(f2.a, f2.b + 2 * rng.randrange(-4, 5) * f2.a, a1.disc)
        if math.gcd(a1.a, a2.a, (a1.b + a2.b) // 2) != 1:
            continue
        tau1, tau2, bb, k1, k2 = tau_pair(a1, a2)
        gamma = OrderIdeal(a1.a * a2.a, bb, a1.disc)
        assert apply_transform(tau1, a1.gen_tuple()) == gamma.gen_tuple()
        assert apply_transform(tau2, a2.gen_tuple()) == gamma.gen_tuple()
        # the closed form of the composite matrix
        d = a1.disc.d
        assert mat_mul(h_alpha(a1), tau1) == (
            (a1.a * a2.a, (bb - d) // 2),
            (0, 1),
        )
        # and the product module really is gamma
        content, prod = ideal_mul(a1, a2)
        assert content == 1 and prod == gamma
        checked += 1


def test_tau_pair_rejects_non_concordant():
    alpha = OrderIdeal(2, 1, D23)
    with pytest.raises(DomainError, match="non-concordant"):
        tau_pair(alpha, alpha.conjugate())


def test_compose_via_matrices_square():
    f = BinaryForm(2, 1, 3, D23)
    assert compose_via_matrices(f, f).triple() == (2, -1, 3)


def test_compose_via_matrices_identity():
    for f in enumerate_reduced(D23):
        assert compose_via_matrices(f, principal_form(D23)) == f


def test_compose_routes_agree_random():
    rng = random.Random(46)
    checked = 0
    while checked < 250:
        dv = -rng.randrange(3, 5000)
        if dv % 4 not in (0, 1):
            continue
        d = Discriminant(dv)
        forms = enumerate_reduced(d)
        f, g = rng.choice(forms), rng.choice(forms)
        assert compose_via_matrices(f, g) == compose_crt(f, g)
        checked += 1


def test_commuting_square_random():
    # composing forms and multiplying ideals tell the same class story
    rng = random.Random(47)
    checked = 0
    while checked < 200:
        dv = -rng.randrange(3, 3000)
        if dv % 4 not in (0, 1):
            continue
        d = Discriminant(dv)
        forms = enumerate_reduced(d)
        f, g = rng.choice(forms), rng.choice(forms)
        _, prod = ideal_mul(form_to_ideal(f), form_to_ideal(g))
        assert is_equivalent(ideal_to_form(prod), compose_crt(f, g))
        checked += 1


def test_str_shapes():
    assert str(OrderIdeal(4, 5, D23)) == "[4, (-5+sqrt(-23))/2]"
    assert str(OrderIdeal(2, -1, D23)) == "[2, (1+sqrt(-23))/2]"
