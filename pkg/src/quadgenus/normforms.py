"""Multi-variable norm forms of generator tuples and matrix actions on them.

The norm form of (a_1, ..., a_m) is N(sum a_i z_i), an integral quadratic
form in m variables: the z_i^2 coefficient is norm(a_i) and the z_i z_j
coefficient is trace(a_i * conj(a_j)). A matrix h acts by substituting
z_j -> sum_i h[j][i] z_i, and that action commutes with taking norm forms
of transformed tuples.
"""

from __future__ import annotations

from .arith import DomainError, Discriminant, QuadInt
from .lattice import GenTuple, check_matrix, solve_transform

__all__ = [
    "MultiQuadraticForm",
    "norm_form",
    "form_action",
    "factor_witness",
    "represent_from_fo",
    "integral_tuple",
    "principal_norm_form",
]


class MultiQuadraticForm:
    """sum_{i<=j} c[i,j] * z_i * z_j with integer coefficients."""

    __slots__ = ("m", "disc", "coeffs")

    def __init__(self, m: int, coeffs: dict, disc: Discriminant):
        self.m = m
        self.disc = disc
        full = {}
        for i in range(m):
            for j in range(i, m):
                full[(i, j)] = int(coeffs.get((i, j), 0))
        self.coeffs = full

    def coeff(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.coeffs[(i, j)]

    def evaluate(self, point) -> int:
        z = tuple(point)
        if len(z) != self.m:
            raise DomainError(f"point has {len(z)} coordinates, form has {self.m}")
        return sum(c * z[i] * z[j] for (i, j), c in self.coeffs.items())

    def binary_triple(self) -> tuple[int, int, int]:
        """(a, b, c) for a two-variable form."""
        if self.m != 2:
            raise DomainError(f"need a binary form, this one has {self.m} variables")
        return self.coeffs[(0, 0)], self.coeffs[(0, 1)], self.coeffs[(1, 1)]

    @classmethod
    def from_binary_triple(cls, a, b, c, disc: Discriminant) -> MultiQuadraticForm:
        return cls(2, {(0, 0): a, (0, 1): b, (1, 1): c}, disc)

    def __eq__(self, other):
        if isinstance(other, MultiQuadraticForm):
            return (
                self.m == other.m
                and self.disc.d == other.disc.d
                and self.coeffs == other.coeffs
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.disc.d, tuple(sorted(self.coeffs.items()))))

    def __str__(self):
        parts = []
        for (i, j), c in sorted(self.coeffs.items()):
            if c == 0:
                continue
            var = f"z{i + 1}^2" if i == j else f"z{i + 1}*z{j + 1}"
            parts.append(f"{c:+d}*{var}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"MultiQuadraticForm({self.m}, {self!s}, d={self.disc.d})"


def norm_form(x: GenTuple) -> MultiQuadraticForm:
    """The norm of the linear polynomial of x, as a quadratic form."""
    coeffs = {}
    cs = x.coeffs
    for i, a in enumerate(cs):
        coeffs[(i, i)] = a.norm()
        for j in range(i + 1, x.m):
            coeffs[(i, j)] = (a * cs[j].conjugate()).trace()
    return MultiQuadraticForm(x.m, coeffs, x.disc)


def form_action(h, f: MultiQuadraticForm) -> MultiQuadraticForm:
    """Substitute z_j -> sum_i h[j][i] z_i into f and re-expand."""
    rows = check_matrix(h, f.m)
    m = f.m
    # f = z^T A z with A the upper-triangular coefficient table;
    # the substituted form is h^T A h, re-folded to upper-triangular.
    b = [[0] * m for _ in range(m)]
    for (i, j), c in f.coeffs.items():
        if c == 0:
            continue
        ri, rj = rows[i], rows[j]
        for k in range(m):
            cik = c * ri[k]
            if cik:
                row = b[k]
                for l in range(m):
                    row[l] += cik * rj[l]
    coeffs = {}
    for i in range(m):
        coeffs[(i, i)] = b[i][i]
        for j in range(i + 1, m):
            coeffs[(i, j)] = b[i][j] + b[j][i]
    return MultiQuadraticForm(m, coeffs, f.disc)


def factor_witness(x: GenTuple, y: GenTuple):
    """Matrix h carrying the norm form of x onto the norm form of y.

    Requires the lattice of y to lie inside the lattice of x; verified by
    expanding the substituted form.
    """
    h = solve_transform(x, y)
    m = len(h)
    fx = norm_form(x.padded(m))
    fy = norm_form(y.padded(m))
    assert form_action(h, fx) == fy, "transform does not carry the norm form"
    return h


def integral_tuple(disc: Discriminant, m: int = 2) -> GenTuple:
    """(1, omega, 0, ..., 0): the order itself as an m-variable tuple."""
    if m < 2:
        raise DomainError("the order needs at least two generators")
    one = QuadInt.from_int(1, disc)
    zero = QuadInt(0, 0, disc)
    return GenTuple((one, QuadInt.omega(disc)) + (zero,) * (m - 2), disc)


def principal_norm_form(disc: Discriminant, m: int = 2) -> MultiQuadraticForm:
    """Norm form of the order: x^2 + d*xy + ((d^2-d)/4)*y^2, zero-padded."""
    return norm_form(integral_tuple(disc, m))


def represent_from_fo(f_source: GenTuple):
    """Matrix h expressing the norm form of f_source as an action on the
    order's own norm form."""
    m = max(2, f_source.m)
    return factor_witness(integral_tuple(f_source.disc, m), f_source.padded(m))
