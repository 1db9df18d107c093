"""Proper invertible ideals of a quadratic order in standard basis form.

An ideal is a*Z + ((-b + sqrt(d))/2)*Z with b^2 = d (mod 4a) and
gcd(a, b, (b^2-d)/(4a)) = 1; its linear polynomial is
a*x1 + ((b - sqrt(d))/2)*x2 (same lattice, fixed sign convention).
b only matters modulo 2a, so equality compares (a, b mod 2a).

The module carries the form <-> ideal dictionary, ideal multiplication
through the generic lattice product, and the explicit matrix composition
pipeline: h moving the order onto an ideal, the tau pair moving two ideals
onto their product, and binary form composition done entirely by matrix
substitution into the order's own norm form.
"""

from __future__ import annotations

import math

from .arith import DomainError, Discriminant, QuadInt, _check_same_disc
from .forms import (
    BinaryForm,
    composition_b,
    coprime_equivalent,
    is_concordant,
    reduce_form,
)
from .lattice import GenTuple, hnf_basis, mat_mul, module_mul
from .normforms import form_action, norm_form, principal_norm_form

__all__ = [
    "OrderIdeal",
    "form_to_ideal",
    "ideal_to_form",
    "ideal_mul",
    "h_alpha",
    "tau_pair",
    "compose_via_matrices",
]


class OrderIdeal:
    """Standard-basis ideal [a, (-b + sqrt(d))/2] of the order of
    discriminant d."""

    __slots__ = ("a", "b", "disc")

    def __init__(self, a: int, b: int, disc: Discriminant, check: bool = True):
        if check:
            if a <= 0:
                raise DomainError(f"ideal needs a > 0, got {a}")
            num = b * b - disc.d
            if num % (4 * a):
                raise DomainError(
                    f"invalid ideal [{a}, {b}]: b^2 - d not divisible by 4a"
                )
            if math.gcd(a, b, num // (4 * a)) != 1:
                raise DomainError(f"invalid ideal [{a}, {b}]: not proper/invertible")
        self.a = a
        self.b = b
        self.disc = disc

    @property
    def c(self) -> int:
        return (self.b * self.b - self.disc.d) // (4 * self.a)

    def gen_tuple(self) -> GenTuple:
        """The linear polynomial a*x1 + ((b - sqrt(d))/2)*x2."""
        return GenTuple(
            (QuadInt.from_int(self.a, self.disc), QuadInt(self.b, -1, self.disc)),
            self.disc,
        )

    def conjugate(self) -> OrderIdeal:
        return OrderIdeal(self.a, -self.b, self.disc, check=False)

    def norm(self) -> int:
        return self.a

    def __eq__(self, other):
        if isinstance(other, OrderIdeal):
            return (
                self.disc.d == other.disc.d
                and self.a == other.a
                and (self.b - other.b) % (2 * self.a) == 0
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b % (2 * self.a), self.disc.d))

    def __repr__(self):
        return f"OrderIdeal(a={self.a}, b={self.b}, d={self.disc.d})"

    def __str__(self):
        return f"[{self.a}, ({-self.b}+sqrt({self.disc.d}))/2]"


def form_to_ideal(f: BinaryForm) -> OrderIdeal:
    """The form's class as a standard-basis ideal: (a, b, c) -> [a, b]."""
    return OrderIdeal(f.a, f.b, f.disc, check=False)


def ideal_to_form(alpha: OrderIdeal) -> BinaryForm:
    """The form a*x^2 + b*xy + c*y^2: the ideal's norm form scaled by 1/a.

    Computed the long way round, by expanding the norm form of the
    generator polynomial and dividing out a; exact divisibility asserted.
    """
    q = norm_form(alpha.gen_tuple())
    a = alpha.a
    coeffs = q.binary_triple()
    assert all(x % a == 0 for x in coeffs), "ideal norm form not divisible by a"
    aa, ab, ac = (x // a for x in coeffs)
    return BinaryForm(aa, ab, ac, alpha.disc)


def ideal_mul(alpha: OrderIdeal, beta: OrderIdeal) -> tuple[int, OrderIdeal]:
    """Product as (content, primitive standard-basis ideal).

    The product lattice is content * [a, (-b+sqrt(d))/2]; the content is 1
    exactly in the concordant cases (for example alpha * conj(alpha) is
    norm(alpha) times the order). Output b is the least non-negative
    residue modulo 2a.
    """
    _check_same_disc(alpha.disc, beta.disc)
    prod = module_mul(alpha.gen_tuple(), beta.gen_tuple())
    basis = hnf_basis(prod)
    assert basis.rank == 2, "ideal product degenerated"
    (n, zero), (u, v) = basis.coord_rows()
    assert zero == 0 and n % v == 0 and u % v == 0, "ideal product is not an ideal"
    content = v
    a = n // v
    d = alpha.disc.d
    b = (2 * (u // v) + d) % (2 * a)
    return content, OrderIdeal(a, b, alpha.disc)


def h_alpha(alpha: OrderIdeal):
    """The matrix [[a, (b-d)/2], [0, 1]] carrying the order's generator
    tuple (1, omega) exactly onto the ideal's."""
    return ((alpha.a, (alpha.b - alpha.disc.d) // 2), (0, 1))


def tau_pair(alpha: OrderIdeal, beta: OrderIdeal):
    """(tau1, tau2, B, k1, k2) moving both ideals onto their product.

    B is the composite middle coefficient (least non-negative modulo
    2*a*a'), b + 2*k1*a = b' + 2*k2*a' = B, tau1 = [[a', k1], [0, 1]] and
    tau2 = [[a, k2], [0, 1]]. Only defined for concordant pairs; anything
    else must go through the composition repair first.
    """
    _check_same_disc(alpha.disc, beta.disc)
    g = math.gcd(alpha.a, beta.a, (alpha.b + beta.b) // 2)
    if g != 1:
        raise DomainError(
            "non-concordant pair: gcd(a, a', (b+b')/2) = "
            f"{g}; compose via the CRT/matrix routes, which repair this"
        )
    bb = composition_b(alpha.a, alpha.b, beta.a, beta.b, alpha.disc.d)
    k1, r1 = divmod(bb - alpha.b, 2 * alpha.a)
    k2, r2 = divmod(bb - beta.b, 2 * beta.a)
    assert r1 == 0 and r2 == 0
    tau1 = ((beta.a, k1), (0, 1))
    tau2 = ((alpha.a, k2), (0, 1))
    return tau1, tau2, bb, k1, k2


def compose_via_matrices(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Composition via matrix substitution into the order's norm form.

    Applies h_alpha then tau1 to the principal norm form, divides every
    coefficient by a*a' (exactly), and reduces. Agrees with compose_crt.
    """
    _check_same_disc(f.disc, g.disc)
    disc = f.disc
    if not is_concordant(f, g):
        g = coprime_equivalent(g, 2 * f.a * disc.d)
    alpha = form_to_ideal(f)
    beta = form_to_ideal(g)
    tau1 = tau_pair(alpha, beta)[0]
    carried = form_action(mat_mul(h_alpha(alpha), tau1), principal_norm_form(disc))
    aa = f.a * g.a
    triple = carried.binary_triple()
    assert all(x % aa == 0 for x in triple), "matrix composition not divisible by aa'"
    raw = BinaryForm(*(x // aa for x in triple), disc)
    return reduce_form(raw)[0]
