"""Exact arithmetic in imaginary quadratic orders.

An element is stored as (p + q*sqrt(d))/2 with p = q*d (mod 2); the set of
such elements is exactly the order of discriminant d, so addition,
multiplication and conjugation are closed and every norm and trace is a
plain integer. All integers are arbitrary precision and nothing rounds.
"""

from __future__ import annotations

import math

__all__ = ["DomainError", "Discriminant", "QuadInt", "factorize"]


class DomainError(ValueError):
    """An input violates a domain precondition (bad discriminant, mixed
    discriminants, imprimitive form, and so on)."""


# --- integer factorization ---------------------------------------------------
#
# Trial division handles everything desk scale; Brent's variant of the
# Pollard rho cycle finder takes over for the occasional large cofactor.

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic for n < 3.3 * 10^24 with these witnesses
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    # n odd composite, no factor below the trial-division bound
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        y, c, m = seed, seed + 1, 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        seed += 2


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as a dict {prime: exponent}."""
    n = abs(n)
    if n <= 1:
        return {}
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 41
    while p * p <= n and p < 10_000:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        n = stack.pop()
        if n == 1:
            continue
        if _is_probable_prime(n):
            out[n] = out.get(n, 0) + 1
            continue
        root = math.isqrt(n)
        if root * root == n:
            stack += [root, root]
            continue
        g = _brent_rho(n)
        stack += [g, n // g]
    return dict(sorted(out.items()))


def _conductor_split(d: int) -> tuple[int, int]:
    """Write d < 0 as f**2 * dK with dK a fundamental discriminant."""
    s = 1
    k = 1
    for p, e in factorize(d).items():
        s *= p ** (e // 2)
        if e % 2:
            k *= p
    if -k % 4 == 1:
        return s, -k
    # d = 0 (mod 4) forces s even here
    assert s % 2 == 0
    return s // 2, -4 * k


class Discriminant:
    """A negative discriminant d = 0 or 1 (mod 4).

    Uniquely d = conductor**2 * fundamental; the split is computed lazily
    since most arithmetic only needs d itself. conductor == 1 means the
    maximal order.
    """

    __slots__ = ("d", "_split")

    def __init__(self, d: int):
        if d >= 0:
            raise DomainError(f"discriminant must be negative, got {d}")
        if d % 4 not in (0, 1):
            raise DomainError(f"discriminant must be 0 or 1 mod 4, got {d}")
        self.d = d
        self._split = None

    @property
    def conductor(self) -> int:
        if self._split is None:
            self._split = _conductor_split(self.d)
        return self._split[0]

    @property
    def fundamental(self) -> int:
        if self._split is None:
            self._split = _conductor_split(self.d)
        return self._split[1]

    def is_fundamental(self) -> bool:
        return self.conductor == 1

    def __eq__(self, other):
        if isinstance(other, Discriminant):
            return self.d == other.d
        return NotImplemented

    def __hash__(self):
        return hash(("Discriminant", self.d))

    def __repr__(self):
        return f"Discriminant({self.d})"


def _check_same_disc(a: Discriminant, b: Discriminant) -> None:
    if a.d != b.d:
        raise DomainError(f"discriminant mismatch: {a.d} vs {b.d}")


class QuadInt:
    """(p + q*sqrt(d))/2 with p = q*d (mod 2).

    The parity constraint makes trace p and norm (p^2 - q^2 d)/4 integers
    and the representation closed under ring operations. Values are
    immutable.
    """

    __slots__ = ("p", "q", "disc")

    def __init__(self, p: int, q: int, disc: Discriminant):
        if (p - q * disc.d) % 2 != 0:
            raise DomainError(
                f"parity violation: p={p}, q={q} need p = q*d (mod 2) for d={disc.d}"
            )
        self.p = p
        self.q = q
        self.disc = disc

    @classmethod
    def from_int(cls, n: int, disc: Discriminant) -> QuadInt:
        return cls(2 * n, 0, disc)

    @classmethod
    def omega(cls, disc: Discriminant) -> QuadInt:
        """The module generator (d - sqrt(d))/2; (1, omega) spans the order."""
        return cls(disc.d, -1, disc)

    @classmethod
    def sqrt_disc(cls, disc: Discriminant) -> QuadInt:
        return cls(0, 2, disc)

    @classmethod
    def from_coords(cls, u: int, v: int, disc: Discriminant) -> QuadInt:
        """The element u*1 + v*omega."""
        return cls(2 * u + v * disc.d, -v, disc)

    def coords(self) -> tuple[int, int]:
        """Coordinates (u, v) over the integral basis (1, omega)."""
        return (self.p + self.q * self.disc.d) // 2, -self.q

    def _coerce(self, other):
        if isinstance(other, QuadInt):
            _check_same_disc(self.disc, other.disc)
            return other
        if isinstance(other, int):
            return QuadInt(2 * other, 0, self.disc)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.p + o.p, self.q + o.q, self.disc)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.p - o.p, self.q - o.q, self.disc)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadInt(-self.p, -self.q, self.disc)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.p * other, self.q * other, self.disc)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.disc.d
        # (p1 + q1 s)(p2 + q2 s)/4 with s^2 = d; both halves are exact
        return QuadInt(
            (self.p * o.p + self.q * o.q * d) // 2,
            (self.p * o.q + self.q * o.p) // 2,
            self.disc,
        )

    __rmul__ = __mul__

    def norm(self) -> int:
        return (self.p * self.p - self.q * self.q * self.disc.d) // 4

    def trace(self) -> int:
        return self.p

    def conjugate(self) -> QuadInt:
        return QuadInt(self.p, -self.q, self.disc)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.q == 0 and self.p == 2 * other
        if isinstance(other, QuadInt):
            return (
                self.p == other.p
                and self.q == other.q
                and self.disc.d == other.disc.d
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.q, self.disc.d))

    def __repr__(self):
        return f"QuadInt(p={self.p}, q={self.q}, d={self.disc.d})"

    def __str__(self):
        if self.q == 0:
            return str(self.p // 2)
        if abs(self.q) == 1:
            mid = "+" if self.q > 0 else "-"
            return f"({self.p}{mid}sqrt({self.disc.d}))/2"
        return f"({self.p}{self.q:+d}*sqrt({self.disc.d}))/2"
