"""Primitive positive-definite binary quadratic forms of negative discriminant.

Reduction (with a determinant-1 change-of-variables witness), enumeration
of the reduced representatives, and Dirichlet/CRT composition. Composition
of a non-concordant pair first replaces the second form by an equivalent
one whose leading coefficient is coprime to 2*a*d, after which the three
composition congruences have a unique solution modulo 2*a*a'.
"""

from __future__ import annotations

import math

from .arith import DomainError, Discriminant, _check_same_disc
from .lattice import identity_matrix, mat_mul

__all__ = [
    "BinaryForm",
    "reduce_form",
    "enumerate_reduced",
    "principal_form",
    "form_inverse",
    "is_equivalent",
    "compose_crt",
    "is_concordant",
    "composition_b",
    "coprime_equivalent",
]


class BinaryForm:
    """a*x^2 + b*xy + c*y^2, primitive, a > 0, b^2 - 4ac = d < 0."""

    __slots__ = ("a", "b", "c", "disc")

    def __init__(self, a: int, b: int, c: int, disc: Discriminant, check: bool = True):
        if check:
            if b * b - 4 * a * c != disc.d:
                raise DomainError(
                    f"form ({a},{b},{c}) has discriminant {b * b - 4 * a * c}, "
                    f"expected {disc.d}"
                )
            if a <= 0:
                raise DomainError(f"form ({a},{b},{c}) is not positive definite")
            if math.gcd(a, b, c) != 1:
                raise DomainError(f"form ({a},{b},{c}) is not primitive")
        self.a = a
        self.b = b
        self.c = c
        self.disc = disc

    @classmethod
    def from_ab(cls, a: int, b: int, disc: Discriminant) -> BinaryForm:
        num = b * b - disc.d
        if a <= 0 or num % (4 * a):
            raise DomainError(f"no form ({a},{b},*) of discriminant {disc.d}")
        return cls(a, b, num // (4 * a), disc)

    def triple(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        return abs(b) <= a <= c and (b >= 0 or (abs(b) != a and a != c))

    def inverse(self) -> BinaryForm:
        return form_inverse(self)

    def __eq__(self, other):
        if isinstance(other, BinaryForm):
            return self.triple() == other.triple() and self.disc.d == other.disc.d
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.disc.d))

    def __repr__(self):
        return f"BinaryForm{self.triple()}"

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


def reduce_form(f: BinaryForm):
    """(reduced form, witness): the witness is a determinant-1 matrix whose
    substitution carries f onto the reduced form.

    Classical reduction: normalize b into (-a, a], then swap while a > c
    (or a == c with b < 0). The unique reduced representative satisfies
    |b| <= a <= c with b >= 0 on the boundary cases.
    """
    a, b, c = f.a, f.b, f.c
    w = identity_matrix(2)

    def normalize(a, b, c, w):
        r = (a - b) // (2 * a)
        if r:
            # x -> x + r*y
            w = mat_mul(w, ((1, r), (0, 1)))
            b, c = b + 2 * r * a, a * r * r + b * r + c
        return a, b, c, w

    a, b, c, w = normalize(a, b, c, w)
    while a > c or (a == c and b < 0):
        # x -> y, y -> -x swaps the outer coefficients and negates b
        w = mat_mul(w, ((0, 1), (-1, 0)))
        a, b, c = c, -b, a
        a, b, c, w = normalize(a, b, c, w)
    return BinaryForm(a, b, c, f.disc, check=False), w


def principal_form(disc: Discriminant) -> BinaryForm:
    """The identity class: (1, b0, (b0^2 - d)/4) with b0 = d mod 2."""
    b0 = disc.d % 2
    return BinaryForm(1, b0, (b0 * b0 - disc.d) // 4, disc, check=False)


def form_inverse(f: BinaryForm) -> BinaryForm:
    return reduce_form(BinaryForm(f.a, -f.b, f.c, f.disc, check=False))[0]


def is_equivalent(f: BinaryForm, g: BinaryForm) -> bool:
    _check_same_disc(f.disc, g.disc)
    return reduce_form(f)[0] == reduce_form(g)[0]


def enumerate_reduced(disc: Discriminant) -> list[BinaryForm]:
    """All reduced primitive forms of the discriminant, sorted by (a, b).

    The list length is the class number h(d).
    """
    d = disc.d
    out = []
    for a in range(1, math.isqrt(-d // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            if math.gcd(a, math.gcd(b, c)) != 1:
                continue
            out.append(BinaryForm(a, b, c, disc, check=False))
    return out


def is_concordant(f: BinaryForm, g: BinaryForm) -> bool:
    """gcd(a, a', (b + b')/2) == 1, the case direct composition handles."""
    return math.gcd(f.a, math.gcd(g.a, (f.b + g.b) // 2)) == 1


def coprime_equivalent(g: BinaryForm, n: int) -> BinaryForm:
    """An equivalent form whose leading coefficient is coprime to n.

    Scans primitively-represented values g(x, y) over squares of growing
    radius and moves the first hit to the leading position by a
    determinant-1 substitution. A primitive form represents values coprime
    to any fixed modulus, so the scan terminates.
    """
    n = abs(n)
    if math.gcd(g.a, n) == 1:
        return g
    for r in range(1, 4 * n + 2):
        for x in range(-r, r + 1):
            for y in range(-r, r + 1):
                if max(abs(x), abs(y)) != r or math.gcd(x, y) != 1:
                    continue
                val = g.a * x * x + g.b * x * y + g.c * y * y
                if math.gcd(val, n) != 1:
                    continue
                _, s, t = _xgcd_pair(x, y)
                # first column (x, y), determinant x*s' - y*r' = 1
                m = ((x, -t), (y, s))
                return _act_on_binary(m, g)
    raise AssertionError("primitive form failed to represent a coprime value")


def _xgcd_pair(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _act_on_binary(m, g: BinaryForm) -> BinaryForm:
    """Substitute the 2x2 matrix into g (rows are variable images)."""
    (p, q), (r, s) = m
    a, b, c = g.a, g.b, g.c
    a2 = a * p * p + b * p * r + c * r * r
    b2 = 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s
    c2 = a * q * q + b * q * s + c * s * s
    return BinaryForm(a2, b2, c2, g.disc)


def composition_b(a1: int, b1: int, a2: int, b2: int, d: int) -> int:
    """The unique B modulo 2*a1*a2 with B = b1 (mod 2*a1), B = b2 (mod 2*a2)
    and B^2 = d (mod 4*a1*a2), normalized to the least non-negative residue.

    Requires gcd(a1, a2, (b1 + b2)/2) == 1.
    """
    m1, m2 = 2 * a1, 2 * a2
    g, x, _ = _xgcd_pair(m1, m2)
    if (b2 - b1) % g:
        raise AssertionError("composition congruences are inconsistent")
    lcm = m1 // g * m2
    # CRT for the two linear congruences
    b0 = (b1 + (b2 - b1) // g * x % (m2 // g) * m1) % lcm
    mod = m1 * a2  # 2*a1*a2
    candidates = [
        bb for bb in range(b0, mod, lcm) if (bb * bb - d) % (2 * mod) == 0
    ]
    if len(candidates) != 1:
        raise AssertionError(
            f"expected exactly one composite middle coefficient, got {candidates}"
        )
    return candidates[0]


def compose_crt(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Composition via the congruence route, returned reduced."""
    _check_same_disc(f.disc, g.disc)
    d = f.disc.d
    if not is_concordant(f, g):
        g = coprime_equivalent(g, 2 * f.a * d)
    bb = composition_b(f.a, f.b, g.a, g.b, d)
    aa = f.a * g.a
    raw = BinaryForm(aa, bb, (bb * bb - d) // (4 * aa), f.disc)
    return reduce_form(raw)[0]
