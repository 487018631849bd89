"""The inhomogeneous TASEP on a ring: chain construction and exact
stationary distributions.

Two solve paths are provided.  `stationary` solves one chain instance at a
rational parameter point by exact Gaussian elimination.  `symbolic_stationary`
recovers the full stationary polynomials over Z[x, y]: the stationary vector
is homogeneous of total degree C(n, 3) in x_1..x_{n-1}, y_1..y_{n-1}, so it
is determined by exact solves at finitely many integer points followed by a
fraction-free linear fit; the fit is then validated at fresh points.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import perms
from .perms import Perm
from .poly import Poly

_symbolic_cache: dict[int, dict[Perm, Poly]] = {}


@dataclass(frozen=True)
class RateParams:
    """One rational value per variable, x block and y block."""
    xvals: tuple
    yvals: tuple

    def __post_init__(self):
        object.__setattr__(self, "xvals", tuple(Fraction(v) for v in self.xvals))
        object.__setattr__(self, "yvals", tuple(Fraction(v) for v in self.yvals))
        if len(self.xvals) != len(self.yvals):
            raise ValueError("x and y blocks must have equal length")

    @property
    def n(self) -> int:
        return len(self.xvals)

    @classmethod
    def y_zero(cls, xvals) -> "RateParams":
        xvals = tuple(xvals)
        return cls(xvals, (Fraction(0),) * len(xvals))

    def all_rates_positive(self) -> bool:
        n = self.n
        return all(self.xvals[i - 1] - self.yvals[n - j] > 0
                   for i in range(1, n + 1) for j in range(i + 1, n + 1))


def transition_rate(i: int, j: int, n: int, params: RateParams) -> Fraction:
    """Rate for a weight-i particle on the left to swap with a weight-j
    particle on the right: x_i - y_{n+1-j} when i < j, else 0."""
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise ValueError(f"bad weights ({i}, {j}) for n={n}")
    if i < j:
        return params.xvals[i - 1] - params.yvals[n - j]
    return Fraction(0)


def rate_polynomial(i: int, j: int, n: int) -> Poly:
    """The same rate as an element of Z[x, y]."""
    if i < j:
        return Poly.x(n, i) - Poly.y(n, n + 1 - j)
    return Poly.zero(n)


def swap_moves(w: Perm):
    """Yield (position p, target state) for every allowed swap out of w,
    including the wrap pair (n, 1).  Positions are 0-indexed."""
    n = len(w)
    for p in range(n):
        q = (p + 1) % n
        if w[p] < w[q]:
            t = list(w)
            t[p], t[q] = t[q], t[p]
            yield p, tuple(t)


@dataclass
class ChainInstance:
    n: int
    params: RateParams
    states: list  # all n! permutations, lexicographic
    rates: dict   # (state, state) -> positive Fraction

    def generator_row_sum(self, w: Perm) -> Fraction:
        return sum((r for (u, _), r in self.rates.items() if u == w),
                   Fraction(0))


def build_chain(n: int, params: RateParams) -> ChainInstance:
    if params.n != n:
        raise ValueError("params size mismatch")
    states = list(perms.iter_perms(n))
    rates: dict = {}
    for w in states:
        for p, t in swap_moves(w):
            q = (p + 1) % n
            r = transition_rate(w[p], w[q], n, params)
            rates[(w, t)] = rates.get((w, t), Fraction(0)) + r
    return ChainInstance(n, params, states, rates)


def stationary(chain: ChainInstance) -> list:
    """The unique positive left null vector of the generator, normalized to
    sum 1.  Rejects chains whose null space dimension is not one."""
    states = chain.states
    N = len(states)
    idx = {s: i for i, s in enumerate(states)}
    # columns of A are states; row v of A holds the balance equation at v:
    # sum_u pi_u rate(u->v) - pi_v * outflow(v) = 0
    A = [[Fraction(0)] * N for _ in range(N)]
    for (u, v), r in chain.rates.items():
        A[idx[v]][idx[u]] += r
        A[idx[u]][idx[u]] -= r
    null = _nullspace(A)
    if len(null) != 1:
        raise ValueError(f"chain is reducible: null space dimension {len(null)}")
    vec = null[0]
    total = sum(vec, Fraction(0))
    if total == 0:
        raise ValueError("degenerate null vector")
    pi = [v / total for v in vec]
    if any(p <= 0 for p in pi):
        raise ValueError("stationary vector is not strictly positive")
    return pi


def _nullspace(A: list) -> list:
    """Right null space basis of a square rational matrix, by exact
    Gauss-Jordan elimination."""
    N = len(A)
    A = [row[:] for row in A]
    pivots: dict[int, int] = {}  # column -> row
    row = 0
    for col in range(N):
        piv = next((r for r in range(row, N) if A[r][col] != 0), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = A[row][col]
        A[row] = [v / inv for v in A[row]]
        for r in range(N):
            if r != row and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[row])]
        pivots[col] = row
        row += 1
    free = [c for c in range(N) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * N
        vec[fc] = Fraction(1)
        for col, r in pivots.items():
            vec[col] = -A[r][fc]
        basis.append(vec)
    return basis


def normalization_polynomial(n: int) -> Poly:
    """The identity-state target: product of (x_i - y_{n+1-j})^(j-i-1)
    over i < j."""
    out = Poly.const(n, 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (Poly.x(n, i) - Poly.y(n, n + 1 - j)) ** (j - i - 1)
    return out


def renormalize(pi: list, n: int, params: RateParams) -> list:
    """Scale pi so the identity-state entry equals the normalization
    product evaluated at params."""
    if any(p <= 0 for p in pi):
        raise ValueError("pi must be strictly positive")
    target = normalization_polynomial(n).evaluate(params.xvals, params.yvals)
    scale = target / pi[0]  # identity state is first in lexicographic order
    return [p * scale for p in pi]


def solve_renormalized(n: int, params: RateParams) -> dict:
    """Stationary solve plus renormalization, as a state -> value map."""
    chain = build_chain(n, params)
    psi = renormalize(stationary(chain), n, params)
    return dict(zip(chain.states, psi))


# -- symbolic solve via exact interpolation --------------------------------

def _homogeneous_exponents(nvars: int, degree: int):
    """All exponent vectors of the given length summing to the degree."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree, -1, -1):
        for rest in _homogeneous_exponents(nvars - 1, degree - first):
            yield (first,) + rest


def sample_integer_params(n: int, rng: random.Random, xlo: int = 50,
                          xhi: int = 120, ymax: int = 30) -> RateParams:
    """Random integer parameter point; x well above y keeps every rate
    strictly positive.  Integer points keep the rational elimination cheap;
    widen the ranges when a smaller identity-test failure bound is needed."""
    if ymax >= xlo:
        raise ValueError("ymax must stay below xlo to keep rates positive")
    xv = [rng.randint(xlo, xhi) for _ in range(n)]
    yv = [rng.randint(0, ymax) for _ in range(n)]
    return RateParams(xv, yv)


def _fit_coefficients(monos: list, points: list, values: list) -> list:
    """Solve the square Vandermonde system V c = b_k for every right-hand
    side simultaneously: fraction-free (Bareiss) forward elimination over
    the integers, then rational back substitution.  Returns one coefficient
    list per right-hand side."""
    M = len(monos)
    K = len(values[0])
    A: list[list[int]] = []
    for r in range(M):
        vrow = [math.prod(v ** e for v, e in zip(points[r], mono))
                for mono in monos]
        scale = math.lcm(*[values[r][k].denominator for k in range(K)])
        A.append([v * scale for v in vrow]
                 + [int(values[r][k] * scale) for k in range(K)])
    W = M + K
    prev = 1
    for col in range(M):
        piv = next((r for r in range(col, M) if A[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular interpolation system")
        A[col], A[piv] = A[piv], A[col]
        pc = A[col][col]
        for r in range(col + 1, M):
            Ar, Ac, f = A[r], A[col], A[r][col]
            if f:
                for c2 in range(col, W):
                    Ar[c2] = (Ar[c2] * pc - f * Ac[c2]) // prev
            elif prev != 1 or pc != 1:
                for c2 in range(col, W):
                    Ar[c2] = Ar[c2] * pc // prev
        prev = pc
    out = []
    for k in range(K):
        c = [Fraction(0)] * M
        for r in range(M - 1, -1, -1):
            s = Fraction(A[r][M + k])
            row = A[r]
            for j in range(r + 1, M):
                if row[j]:
                    s -= row[j] * c[j]
            c[r] = s / row[r]
        out.append(c)
    return out


def symbolic_stationary(n: int, max_n: int = 4) -> dict:
    """Renormalized stationary probabilities as exact polynomials in
    Z[x_1..x_n, y_1..y_n], for every state.

    Feasibility-bounded: the default cap is n = 4 (raise max_n to 5 at your
    own patience).  Results are cached per n.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > max_n:
        raise ValueError(f"symbolic solve capped at n={max_n}")
    cached = _symbolic_cache.get(n)
    if cached is not None:
        return cached

    degree = math.comb(n, 3)
    active = n - 1  # only x_1..x_{n-1}, y_1..y_{n-1} appear in the rates
    monos = list(_homogeneous_exponents(2 * active, degree))
    states = list(perms.iter_perms(n))
    rng = random.Random(20240 + n)

    points, values = [], []
    seen = set()
    while len(points) < len(monos):
        params = sample_integer_params(n, rng)
        pt = tuple(params.xvals[:active] + params.yvals[:active])
        if pt in seen:
            continue
        seen.add(pt)
        psi = solve_renormalized(n, params)
        points.append(pt)
        values.append([psi[s] for s in states])

    coeffs = _fit_coefficients(monos, points, values)
    out = {}
    for s, cs in zip(states, coeffs):
        terms = {}
        for mono, c in zip(monos, cs):
            if c:
                if c.denominator != 1:
                    raise ValueError("non-integer fitted coefficient")
                xe = mono[:active] + (0,) * (n - active)
                ye = mono[active:] + (0,) * (n - active)
                terms[xe + ye] = int(c)
        out[s] = Poly(n, terms)

    # validate the fit at fresh points before trusting it
    for _ in range(3):
        params = sample_integer_params(n, rng)
        psi = solve_renormalized(n, params)
        for s in states:
            got = out[s].evaluate(params.xvals, params.yvals)
            if got != psi[s]:
                raise AssertionError("interpolated stationary polynomial "
                                     f"disagrees with solver at {params}")
    _symbolic_cache[n] = out
    return out


def global_balance_residuals(psis: dict, n: int) -> dict:
    """Symbolic balance check: for each state v, inflow minus outflow of
    the polynomial stationary vector.  All residuals must be zero."""
    residuals = {}
    for v in psis:
        res = Poly.zero(n)
        for p, t in swap_moves(v):
            q = (p + 1) % n
            res = res - psis[v] * rate_polynomial(v[p], v[q], n)
        for u in psis:
            for p, t in swap_moves(u):
                if t == v:
                    q = (p + 1) % n
                    res = res + psis[u] * rate_polynomial(u[p], u[q], n)
        residuals[v] = res
    return residuals


# -- randomized identity testing -------------------------------------------

def sample_rational_params(n: int, rng: random.Random) -> RateParams:
    """Random rational parameter point with every rate strictly positive:
    y in [0, 1), x in [1, 2]."""
    def frac(lo_shift):
        den = rng.randint(2, 10 ** 6)
        return lo_shift + Fraction(rng.randint(0, den - 1), den)
    return RateParams([frac(1) for _ in range(n)],
                      [frac(0) for _ in range(n)])


def identity_check(lhs, rhs, n: int, trials: int = 5,
                   seed: int | None = 0) -> bool:
    """Compare two computational routes for a polynomial quantity.

    Each side is either a Poly or a callable taking (xvals, yvals) and
    returning a Fraction.  Two polynomials are compared canonically;
    otherwise both sides are evaluated at `trials` random rational points
    with all rates positive.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if isinstance(lhs, Poly) and isinstance(rhs, Poly):
        m = max(lhs.n, rhs.n)
        return lhs.embed(m) == rhs.embed(m)
    rng = random.Random(seed)
    for _ in range(trials):
        params = sample_rational_params(n, rng)
        a = _eval_route(lhs, params)
        b = _eval_route(rhs, params)
        if a != b:
            return False
    return True


def _eval_route(side, params: RateParams) -> Fraction:
    if isinstance(side, Poly):
        pad = side.n - params.n
        if pad < 0:
            raise ValueError("polynomial has fewer variables than params")
        return side.evaluate(params.xvals + (Fraction(0),) * pad,
                             params.yvals + (Fraction(0),) * pad)
    return side(params.xvals, params.yvals)
