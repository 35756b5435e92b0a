"""Semantic checks tying the determinantal generators to actual common
roots: an exact gcd-based root oracle, planted-root substitution, sample
generators, and evaluation scans.

Sampling uses a fixed 64-bit linear congruential generator (Knuth's MMIX
constants: state <- state * 6364136223846793005 + 1442695040888963407
mod 2^64, top 32 bits drawn per step) so fixtures reproduce bit-for-bit
across platforms and implementations. Sampled rationals have numerator
uniform in [-20, 20] without 0 and denominator uniform in [1, 20].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence

from .cascade import CascadeMatrix
from .minors import GeneratorRecord, enumerate_generators
from .poly import Polynomial, Ring, Variable, format_rational, parse_rational

_LCG_MUL = 6364136223846793005
_LCG_ADD = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg64:
    """Deterministic 64-bit linear congruential generator."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u32(self) -> int:
        self.state = (self.state * _LCG_MUL + _LCG_ADD) & _MASK64
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (rejection-free modulo fold; the
        bias at 32 bits over desk-scale ranges is irrelevant here)."""
        return lo + self.next_u32() % (hi - lo + 1)

    def rational(self) -> Fraction:
        num = self.randint(1, 20) * (1 if self.randint(0, 1) else -1)
        den = self.randint(1, 20)
        return Fraction(num, den)


class CoefficientTuple:
    """An n x (d+1) grid of exact rationals specializing the a_i_j."""

    __slots__ = ("d", "n", "values")

    def __init__(self, d: int, n: int, values: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(v) for v in row) for row in values)
        if len(rows) != n or any(len(row) != d + 1 for row in rows):
            raise ValueError(f"values must form an {n} x {d + 1} grid")
        self.d = d
        self.n = n
        self.values = rows

    def assignment(self, ring: Ring) -> Dict[Variable, Fraction]:
        return {
            ring.coeff(i, j): self.values[i - 1][j]
            for i in range(1, self.n + 1)
            for j in range(self.d + 1)
        }

    def cleared(self) -> "CoefficientTuple":
        """Row-wise integer form: each row scaled by the positive lcm of
        its denominators. Each generator takes exactly one entry of every
        selected row per term, so it is homogeneous row by row and its
        vanishing is unchanged by the scaling."""
        rows = []
        for row in self.values:
            mult = lcm(*(v.denominator for v in row)) if row else 1
            rows.append([v * mult for v in row])
        return CoefficientTuple(self.d, self.n, rows)

    def row_polynomial(self, i: int) -> List[Fraction]:
        """Coefficients of f_i, leading first."""
        return list(self.values[i - 1])

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "values": [[format_rational(v) for v in row] for row in self.values],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CoefficientTuple":
        return cls(
            int(data["d"]),
            int(data["n"]),
            [[parse_rational(v) for v in row] for row in data["values"]],
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoefficientTuple)
            and (self.d, self.n, self.values) == (other.d, other.n, other.values)
        )

    def __repr__(self) -> str:
        return f"CoefficientTuple(d={self.d}, n={self.n}, {self.values!r})"


@dataclass(frozen=True)
class RootReport:
    has_affine_common_root: bool
    all_leading_zero: bool
    gcd_degree: int


def _poly_degree(coeffs: Sequence[Fraction]) -> int:
    for idx, c in enumerate(coeffs):
        if c:
            return len(coeffs) - 1 - idx
    return -1


def _poly_rem(u: List[Fraction], v: List[Fraction]) -> List[Fraction]:
    """Remainder of u mod v, both dense with leading coefficient first."""
    u = list(u)
    dv = _poly_degree(v)
    lead = v[len(v) - 1 - dv]
    while True:
        du = _poly_degree(u)
        if du < dv:
            return u[len(u) - 1 - du :] if du >= 0 else []
        shift = du - dv
        factor = u[len(u) - 1 - du] / lead
        for idx in range(dv + 1):
            u[len(u) - 1 - du + idx] -= factor * v[len(v) - 1 - dv + idx]


def univariate_gcd(polys: Sequence[Sequence[Fraction]]) -> List[Fraction]:
    """Monic gcd of the nonzero inputs over the rationals; [] when all are
    zero. A gcd of positive degree certifies a common root in the
    algebraic closure."""
    g: List[Fraction] = []
    for coeffs in polys:
        coeffs = [Fraction(c) for c in coeffs]
        if _poly_degree(coeffs) < 0:
            continue
        g = coeffs if not g else _gcd_pair(g, coeffs)
        if _poly_degree(g) == 0:
            break
    if not g:
        return []
    dg = _poly_degree(g)
    g = g[len(g) - 1 - dg :]
    lead = g[0]
    return [c / lead for c in g]


def _gcd_pair(u: List[Fraction], v: List[Fraction]) -> List[Fraction]:
    while _poly_degree(v) >= 0:
        u, v = v, _poly_rem(u, v)
    return u


def common_root_oracle(c: CoefficientTuple) -> RootReport:
    """Exact certificate: do the specialized polynomials share a root?

    Works through the univariate gcd, so roots are counted in the
    algebraic closure without any isolation.
    """
    rows = [c.row_polynomial(i) for i in range(1, c.n + 1)]
    if all(all(v == 0 for v in row) for row in rows):
        raise ValueError("degenerate input: the all-zero coefficient tuple")
    g = univariate_gcd(rows)
    gcd_degree = _poly_degree(g) if g else 0
    return RootReport(
        has_affine_common_root=gcd_degree >= 1,
        all_leading_zero=all(row[0] == 0 for row in rows),
        gcd_degree=gcd_degree,
    )


@dataclass
class MembershipReport:
    """Evaluation of every generator at one coefficient tuple."""

    root: RootReport
    vanishing: List[bool]  # aligned with the generator records
    records: List[GeneratorRecord]
    top_minors_all_vanish: bool
    biconditional_ok: bool


def membership_scan(c: CoefficientTuple, records: Optional[List[GeneratorRecord]] = None) -> MembershipReport:
    """Evaluate all generators at the tuple and cross-check the
    set-theoretic criterion: the depth-d minors all vanish exactly when
    the polynomials share a root or every leading coefficient is zero.

    Evaluation happens on the row-cleared integer tuple, which leaves
    vanishing untouched (see CoefficientTuple.cleared).
    """
    ring = Ring(c.d, c.n)
    if records is None:
        records = enumerate_generators(c.d, c.n, ring)
    assignment = {
        var: val.numerator for var, val in c.cleared().assignment(ring).items()
    }
    vanishing = [rec.poly.evaluate(assignment) == 0 for rec in records]
    top_all = all(
        vanish for rec, vanish in zip(records, vanishing) if rec.k == c.d
    )
    root = common_root_oracle(c)
    expected = root.has_affine_common_root or root.all_leading_zero
    return MembershipReport(
        root=root,
        vanishing=vanishing,
        records=records,
        top_minors_all_vanish=top_all,
        biconditional_ok=(top_all == expected),
    )


def planted_assignment(ring: Ring) -> Dict[Variable, Polynomial]:
    """a_i_j as the x^(d-j) coefficient of (x - r) * (b_i_0 x^(d-1) + ... +
    b_i_(d-1)): a_i_0 = b_i_0, a_i_j = b_i_j - r b_i_(j-1), a_i_d =
    -r b_i_(d-1)."""
    if not ring.with_aux:
        raise ValueError("need a ring with auxiliary symbols")
    d, n = ring.d, ring.n
    r = Polynomial.variable(ring, ring.root)
    out = {}
    for i in range(1, n + 1):
        b = [Polynomial.variable(ring, ring.aux(i, j)) for j in range(d)]
        out[ring.coeff(i, 0)] = b[0]
        for j in range(1, d):
            out[ring.coeff(i, j)] = b[j] - r * b[j - 1]
        out[ring.coeff(i, d)] = -(r * b[d - 1])
    return out


@dataclass
class PlantedReport:
    d: int
    n: int
    generators_checked: int
    nonzero_images: List[tuple]

    @property
    def ok(self) -> bool:
        return not self.nonzero_images


def planted_vanishing(d: int, n: int) -> PlantedReport:
    """Substitute the planted-root parametrization into every generator and
    record any image that fails to be the zero polynomial. A common root
    forces every cascade matrix to drop rank, so all images must vanish
    identically in r and the b variables."""
    ring = Ring(d, n)
    aux_ring = Ring(d, n, with_aux=True)
    sub = planted_assignment(aux_ring)
    report = PlantedReport(d, n, 0, [])
    for rec in enumerate_generators(d, n, ring):
        report.generators_checked += 1
        image = Polynomial(aux_ring, rec.poly.terms, _trusted=True).substitute(sub)
        if not image.is_zero:
            report.nonzero_images.append((rec.k, rec.selection.pairs))
    return report


def sample_planted(d: int, n: int, seed: int) -> CoefficientTuple:
    """A pseudo-random tuple whose polynomials all vanish at a sampled
    rational root r: each f_i = (x - r) * q_i with random q_i of degree
    d-1 and nonzero leading coefficient. Deterministic per seed."""
    rng = Lcg64(seed)
    r = rng.rational()
    rows = []
    for _ in range(n):
        q = [rng.rational() for _ in range(d)]
        coeffs = [q[0]]
        for j in range(1, d):
            coeffs.append(q[j] - r * q[j - 1])
        coeffs.append(-r * q[d - 1])
        rows.append(coeffs)
    return CoefficientTuple(d, n, rows)


def sample_random(d: int, n: int, seed: int) -> CoefficientTuple:
    """A pseudo-random tuple with every entry a nonzero sampled rational.
    Deterministic per seed; no vanishing is arranged."""
    rng = Lcg64(seed)
    return CoefficientTuple(d, n, [[rng.rational() for _ in range(d + 1)] for _ in range(n)])


def specialized_rows(matrix: CascadeMatrix, c: CoefficientTuple) -> List[List[Fraction]]:
    """The cascade matrix with the tuple's values filled in."""
    if (matrix.d, matrix.n) != (c.d, c.n):
        raise ValueError(f"tuple for (d={c.d}, n={c.n}) does not fit {matrix!r}")
    grid = []
    for (i, j) in matrix.rows():
        row = [Fraction(0)] * matrix.ncols
        for col, var in matrix.row_entries(i, j):
            row[col - 1] = c.values[var.i - 1][var.j]
        grid.append(row)
    return grid


def exact_rank(rows: List[List[Fraction]]) -> int:
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    grid = [list(row) for row in rows]
    if not grid:
        return 0
    ncols = len(grid[0])
    rank = 0
    row_at = 0
    for col in range(ncols):
        pivot = next((r for r in range(row_at, len(grid)) if grid[r][col]), None)
        if pivot is None:
            continue
        grid[row_at], grid[pivot] = grid[pivot], grid[row_at]
        head = grid[row_at][col]
        for r in range(row_at + 1, len(grid)):
            if grid[r][col]:
                factor = grid[r][col] / head
                for cc in range(col, ncols):
                    grid[r][cc] -= factor * grid[row_at][cc]
        row_at += 1
        rank += 1
        if row_at == len(grid):
            break
    return rank
