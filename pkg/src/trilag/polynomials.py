"""Exact sparse trivariate polynomials and certified lower-bound machinery.

Everything here is rational arithmetic: no floats, no rounding modes, no
computer algebra system.  Two certified box lower bounds are provided:

  * monotone interval evaluation, monomial by monomial (cheap, loose);
  * the minimum tensor Bernstein coefficient after affine
    reparameterization of the box to the unit cube (sharper near zeros;
    corner coefficients equal exact corner values).

Both never overstate the true minimum on the box.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

ZERO = Fraction(0)


class Poly3:
    """Polynomial in x1,x2,x3 as a sparse map (i,j,k) -> rational coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None) -> None:
        canon = {}
        for mono, c in (coeffs or {}).items():
            c = Fraction(c)
            if c != 0:
                canon[tuple(mono)] = c
        self.coeffs = canon

    @staticmethod
    def constant(c) -> "Poly3":
        return Poly3({(0, 0, 0): Fraction(c)})

    @staticmethod
    def variable(axis: int) -> "Poly3":
        mono = [0, 0, 0]
        mono[axis] = 1
        return Poly3({tuple(mono): Fraction(1)})

    def __add__(self, other) -> "Poly3":
        if not isinstance(other, Poly3):
            other = Poly3.constant(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, ZERO) + c
        return Poly3(out)

    def __sub__(self, other) -> "Poly3":
        if not isinstance(other, Poly3):
            other = Poly3.constant(other)
        return self + (-other)

    def __neg__(self) -> "Poly3":
        return Poly3({m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other) -> "Poly3":
        if not isinstance(other, Poly3):
            return Poly3({m: c * Fraction(other) for m, c in self.coeffs.items()})
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = out.get(m, ZERO) + c1 * c2
        return Poly3(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly3":
        if e < 0:
            raise ValueError("negative power")
        out = Poly3.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly3) and self.coeffs == other.coeffs

    def degrees(self) -> tuple[int, int, int]:
        """Maximum exponent per variable (0,0,0 for constants)."""
        if not self.coeffs:
            return (0, 0, 0)
        return tuple(max(m[d] for m in self.coeffs) for d in range(3))

    def evaluate(self, x1, x2, x3):
        """Exact for Fraction/int arguments, float for floats."""
        exact = all(isinstance(v, (Fraction, int)) for v in (x1, x2, x3))
        if exact:
            x1, x2, x3 = Fraction(x1), Fraction(x2), Fraction(x3)
            total = ZERO
        else:
            x1, x2, x3 = float(x1), float(x2), float(x3)
            total = 0.0
        for (i, j, k), c in self.coeffs.items():
            total += (float(c) if not exact else c) * x1**i * x2**j * x3**k
        return total

    def sorted_terms(self):
        return sorted(self.coeffs.items())

    def __repr__(self) -> str:
        return f"Poly3({dict(self.sorted_terms())})"


def g_polynomial() -> Poly3:
    """The trivariate domination function g, expanded exactly."""
    x1, x2, x3 = (Poly3.variable(d) for d in range(3))
    one = Poly3.constant(1)
    cubic = one - x1**3 - x2**3 - x3**3
    inner = one - x1**2 - x2**2 - x3 * (one - x1 - x2)
    return Fraction(1, 6) * cubic - Fraction(1, 8) * (inner * inner)


def h_polynomial() -> Poly3:
    """h = 3/32 - g; nonnegativity of h on D is the certified claim."""
    return Poly3.constant(Fraction(3, 32)) - g_polynomial()


# ---------------------------------------------------------------------------
# rational interval arithmetic (sufficient for monomial-wise box bounds)
# ---------------------------------------------------------------------------

def interval_pow(lo: Fraction, hi: Fraction, e: int):
    """Range of t^e over [lo, hi]."""
    if e == 0:
        return Fraction(1), Fraction(1)
    if lo >= 0:
        return lo**e, hi**e
    if hi <= 0:
        return (lo**e, hi**e) if e % 2 == 1 else (hi**e, lo**e)
    # straddles zero
    if e % 2 == 1:
        return lo**e, hi**e
    return ZERO, max(lo**e, hi**e)


def interval_mul(a, b):
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


def monomial_range_on_box(c: Fraction, mono, lo, hi):
    """Range of c * x1^i x2^j x3^k over the box [lo, hi]^3 (componentwise)."""
    rng = (Fraction(1), Fraction(1))
    for d in range(3):
        if mono[d]:
            rng = interval_mul(rng, interval_pow(lo[d], hi[d], mono[d]))
    if c >= 0:
        return c * rng[0], c * rng[1]
    return c * rng[1], c * rng[0]


def interval_box_bounds(p: Poly3, lo, hi):
    """Certified (lower, upper) enclosure of p over the box."""
    total_lo, total_hi = ZERO, ZERO
    for mono, c in p.coeffs.items():
        a, b = monomial_range_on_box(c, mono, lo, hi)
        total_lo += a
        total_hi += b
    return total_lo, total_hi


# ---------------------------------------------------------------------------
# Bernstein coefficients on a box
# ---------------------------------------------------------------------------

def to_dense(p: Poly3, degs=None):
    """Nested-list coefficient tensor a[i][j][k]."""
    if degs is None:
        degs = p.degrees()
    n1, n2, n3 = degs
    a = [[[ZERO] * (n3 + 1) for _ in range(n2 + 1)] for _ in range(n1 + 1)]
    for (i, j, k), c in p.coeffs.items():
        a[i][j][k] = c
    return a


def _affine_matrix(n: int, left: Fraction, scale: Fraction):
    """Row i of the matrix mapping coefficients of p(t) to those of p(left + scale*t)."""
    return [
        [comb(k, i) * left ** (k - i) * scale**i if k >= i else ZERO for k in range(n + 1)]
        for i in range(n + 1)
    ]


def _bernstein_matrix(n: int):
    """Monomial-to-Bernstein conversion: b_i = sum_{j<=i} C(i,j)/C(n,j) * a_j."""
    return [
        [Fraction(comb(i, j), comb(n, j)) if j <= i else ZERO for j in range(n + 1)]
        for i in range(n + 1)
    ]


_BERNSTEIN_CACHE: dict[int, list[list[Fraction]]] = {}


def _bernstein_matrix_cached(n: int):
    if n not in _BERNSTEIN_CACHE:
        _BERNSTEIN_CACHE[n] = _bernstein_matrix(n)
    return _BERNSTEIN_CACHE[n]


def _apply_axis0(mat, a):
    n1 = len(a)
    return [
        [
            [
                sum((mat[i][k] * a[k][j][l] for k in range(n1) if mat[i][k]), ZERO)
                for l in range(len(a[0][0]))
            ]
            for j in range(len(a[0]))
        ]
        for i in range(n1)
    ]


def _apply_axis1(mat, a):
    n2 = len(a[0])
    return [
        [
            [
                sum((mat[j][k] * plane[k][l] for k in range(n2) if mat[j][k]), ZERO)
                for l in range(len(a[0][0]))
            ]
            for j in range(n2)
        ]
        for plane in a
    ]


def _apply_axis2(mat, a):
    n3 = len(a[0][0])
    return [
        [
            [
                sum((mat[l][k] * row[k] for k in range(n3) if mat[l][k]), ZERO)
                for l in range(n3)
            ]
            for row in plane
        ]
        for plane in a
    ]


def bernstein_coefficients(p: Poly3, lo, hi):
    """Tensor Bernstein coefficients of p reparameterized to the given box.

    The coefficient at a corner multi-index equals p at that box corner;
    the minimum over all coefficients is a certified lower bound for p on
    the box.
    """
    degs = p.degrees()
    a = to_dense(p, degs)
    for axis, apply in enumerate((_apply_axis0, _apply_axis1, _apply_axis2)):
        scale = hi[axis] - lo[axis]
        a = apply(_affine_matrix(degs[axis], lo[axis], scale), a)
        a = apply(_bernstein_matrix_cached(degs[axis]), a)
    return a


def bernstein_min(p: Poly3, lo, hi) -> Fraction:
    """Minimum Bernstein coefficient: a certified lower bound on the box."""
    coeffs = bernstein_coefficients(p, lo, hi)
    return min(min(min(row) for row in plane) for plane in coeffs)
