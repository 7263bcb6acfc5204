"""Exact counting machinery: double-counting identities, closed forms for
the hyperplane counts, the coprime-residue congruence, Baer-cone sizes,
per-theorem parameter tables, feasibility screens and endpoint sign checks.

Everything here is integer/rational arithmetic; floating point is never
used, so every sign and divisibility decision is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import (DegenerateType, EmptyRange, HypothesisViolated,
                     NonSquareOrder)
from .pg import theta
from .spectra import Spectrum

THEOREM_IDS = ("baer", "unital", "hyperoval3", "hyperovalN", "maxarc")


def _sqrt_q(q: int) -> int:
    r = isqrt(q)
    if r * r != q:
        raise NonSquareOrder(f"q = {q} is not a square")
    return r


@dataclass(frozen=True)
class TypeParameters:
    """Three hyperplane intersection sizes a < b < c in PG(n,q)."""

    a: int
    b: int
    c: int
    n: int
    q: int

    def __post_init__(self):
        if not self.a < self.b < self.c:
            raise DegenerateType(f"need a < b < c, got ({self.a}, {self.b}, {self.c})")


@dataclass(frozen=True)
class Congruence:
    """k = alpha (mod beta)."""

    alpha: int
    beta: int

    def holds(self, k: int) -> bool:
        return k % self.beta == self.alpha % self.beta


@dataclass(frozen=True)
class TheoremInstance:
    theorem_id: str
    n: int
    q: int
    t_or_d: int | None
    a: int
    b: int
    c: int
    expected_k: int
    expected_t: tuple
    vertex_dim: int
    base_descriptor: str

    @property
    def params(self) -> TypeParameters:
        return TypeParameters(self.a, self.b, self.c, self.n, self.q)


def c_rs(r: int, s: int, q: int):
    """Number of points of a cone with r-dim vertex over an s-dim Baer
    subgeometry: theta_s(sqrt q) * q^(r+1) + theta_r(q).

    Exact rational for r < -1 (used only inside endpoint evaluations);
    an integer otherwise.
    """
    if s < -1 or (r < -1 and s < 0):
        raise ValueError(f"bad cone dimensions r={r}, s={s}")
    rt = _sqrt_q(q)
    base = (rt ** (s + 1) - 1) // (rt - 1)
    value = base * Fraction(q) ** (r + 1) + (Fraction(q) ** (r + 1) - 1) / (q - 1)
    return int(value) if value.denominator == 1 else value


def t_closed_form(params: TypeParameters, k) -> tuple:
    """The three rational hyperplane counts solving the double-counting
    system at the given set size; exact Fractions."""
    a, b, c, n, q = params.a, params.b, params.c, params.n, params.q
    th_n, th_n1, th_n2 = theta(n, q), theta(n - 1, q), theta(n - 2, q)
    k = Fraction(k)

    def quad(x, y):
        # count of hyperplanes meeting in the third size, given the other two x,y
        return k * k * th_n2 - k * (th_n2 + (x + y - 1) * th_n1) + x * y * th_n
    t_a = quad(b, c) / ((b - a) * (c - a))
    t_b = quad(a, c) / ((c - b) * (a - b))
    t_c = quad(a, b) / ((a - c) * (b - c))
    return (t_a, t_b, t_c)


def verify_identities(spectrum: Spectrum, k: int, n: int, q: int) -> bool:
    """Exact check of the three double-counting identities for a
    hyperplane spectrum."""
    items = spectrum.by_size.items()
    eq1 = sum(t for _, t in items) == theta(n, q)
    eq2 = sum(m * t for m, t in items) == k * theta(n - 1, q)
    eq3 = sum(m * (m - 1) * t for m, t in items) == k * (k - 1) * theta(n - 2, q)
    return eq1 and eq2 and eq3


def lemma_congruence(params: TypeParameters, beta: int):
    """If a, b, c and theta_{n-1} share a residue alpha coprime to beta,
    k must be congruent to theta_n mod beta.  Returns the Congruence on k,
    or None when the hypothesis fails."""
    alpha = params.a % beta
    th_n1 = theta(params.n - 1, params.q)
    if not (params.b % beta == alpha and params.c % beta == alpha
            and th_n1 % beta == alpha):
        return None
    if gcd(alpha, beta) != 1:
        return None
    return Congruence(alpha=theta(params.n, params.q) % beta, beta=beta)


def pencil_feasible(params: TypeParameters, k: int, u_a_min: int = 0,
                    axis_points=None) -> list:
    """Non-negative integer solutions (u_a, u_b, u_c) of the through-axis
    hyperplane system

        u_a + u_b + u_c = q + 1
        x + (a-x) u_a + (b-x) u_b + (c-x) u_c = k

    where x is the number of points of K on the axis (default a, the
    generic case where the axis is the trace of an a-hyperplane).
    """
    a, b, c, q = params.a, params.b, params.c, params.q
    x = params.a if axis_points is None else axis_points
    sols = []
    for u_b in range(q + 2):
        for u_c in range(q + 2 - u_b):
            u_a = q + 1 - u_b - u_c
            if u_a < u_a_min:
                continue
            if x + (a - x) * u_a + (b - x) * u_b + (c - x) * u_c == k:
                sols.append((u_a, u_b, u_c))
    return sols


def feasible_k(params: TypeParameters, k_range, congruences=(),
               require_all_realized: bool = True) -> list:
    """Scan a k-range, keeping values that satisfy every congruence and
    whose closed-form hyperplane counts are non-negative integers (all
    >= 1 when require_all_realized).  Returns (k, (t_a, t_b, t_c)) pairs."""
    ks = list(k_range)
    if not ks:
        raise EmptyRange("empty k range")
    floor = 1 if require_all_realized else 0
    out = []
    for k in ks:
        if not all(c.holds(k) if isinstance(c, Congruence) else c(k)
                   for c in congruences):
            continue
        ts = t_closed_form(params, k)
        if all(t.denominator == 1 and t >= floor for t in ts):
            out.append((k, tuple(int(t) for t in ts)))
    return out


def hyperoval3_step1_congruences(q: int) -> tuple:
    """The two integrality conditions for the 3-dimensional hyperoval
    characterization: (q+1) | k and q | (k-1)(k-2)."""
    return (lambda k: k % (q + 1) == 0,
            lambda k: (k - 1) * (k - 2) % q == 0)


# ---------------------------------------------------------------------------
# per-theorem parameter tables
# ---------------------------------------------------------------------------

def _check(cond: bool, msg: str):
    if not cond:
        raise HypothesisViolated(msg)


def _abc(theorem_id: str, n: int, q: int, t_or_d):
    """(a, b, c) for a theorem's type; exact rationals where degenerate."""
    if theorem_id == "baer":
        t = t_or_d
        return (c_rs(n - 2 * t - 1, 2 * t - 2, q),
                c_rs(n - 2 * t - 2, 2 * t, q),
                c_rs(n - 2 * t - 1, 2 * t - 1, q))
    if theorem_id == "unital":
        rt = _sqrt_q(q)
        return (theta(n - 2, q),
                theta(n - 3, q) + rt ** (2 * n - 3),
                theta(n - 2, q) + rt ** (2 * n - 3))
    if theorem_id == "hyperoval3":
        return (1, q + 2, 2 * q + 1)
    if theorem_id == "hyperovalN":
        return (theta(n - 3, q),
                theta(n - 2, q) + q ** (n - 3),
                theta(n - 2, q) + q ** (n - 2))
    if theorem_id == "maxarc":
        d = t_or_d
        return (theta(n - 3, q),
                q ** (n - 3) * (q * d + d - q) + theta(n - 4, q),
                q ** (n - 2) * d + theta(n - 3, q))
    raise ValueError(f"unknown theorem id {theorem_id!r}")


def theorem_instance(theorem_id: str, n: int, q: int, t_or_d=None) -> TheoremInstance:
    """Fully populated parameters for one characterization at one (n, q).

    Raises HypothesisViolated when the named theorem's hypotheses fail.
    """
    if theorem_id == "baer":
        t = t_or_d
        _check(t is not None and t >= 1, "baer: the half-codimension t is required")
        _check(n >= 4, f"baer: need n >= 4, got n={n}")
        _check(2 * t <= n, f"baer: need 2t <= n, got t={t}, n={n}")
        rt = _sqrt_q(q)  # raises NonSquareOrder for non-squares
        _check(q >= 16 or t == 1, f"baer: need q >= 16 when t >= 2, got q={q}")
        _check(q >= 4, f"baer: need q >= 4, got q={q}")
        k = c_rs(n - 2 * t - 1, 2 * t, q)
        vertex_dim = n - 2 * t - 1
        base = f"Baer subgeometry of dimension {2 * t}"
    elif theorem_id == "unital":
        _check(t_or_d is None, "unital: no extra parameter expected")
        _check(n >= 4, f"unital: need n >= 4, got n={n}")
        rt = _sqrt_q(q)
        _check(q >= 4, f"unital: need q >= 4, got q={q}")
        k = theta(n - 2, q) + rt ** (2 * n - 1)
        vertex_dim = n - 3
        base = "Hermitian unital"
    elif theorem_id == "hyperoval3":
        _check(n == 3, f"hyperoval3: the 3-dimensional statement needs n=3, got n={n}")
        _check(q % 2 == 0, f"hyperoval3: hyperovals require even q, got q={q}")
        k = q * q + 2 * q + 1
        vertex_dim = 0
        base = "hyperoval"
    elif theorem_id == "hyperovalN":
        _check(n >= 4, f"hyperovalN: need n >= 4, got n={n}")
        _check(q % 2 == 0, f"hyperovalN: hyperovals require even q, got q={q}")
        k = theta(n - 1, q) + q ** (n - 2)
        vertex_dim = n - 3
        base = "hyperoval"
    elif theorem_id == "maxarc":
        d = t_or_d
        _check(d is not None, "maxarc: the arc degree d is required")
        _check(n >= 5, f"maxarc: need n >= 5, got n={n}")
        _check(2 <= d <= q - 1, f"maxarc: need 2 <= d <= q-1, got d={d}")
        _check(gcd(d - 1, q) == 1, f"maxarc: need gcd(d-1, q) = 1, got d={d}, q={q}")
        k = q ** (n - 2) * (q * d + d - q) + theta(n - 3, q)
        vertex_dim = n - 3
        base = f"maximal arc of degree {d}"
    else:
        raise ValueError(f"unknown theorem id {theorem_id!r}")

    a, b, c = _abc(theorem_id, n, q, t_or_d)
    if any(isinstance(v, Fraction) for v in (a, b, c)):
        raise HypothesisViolated(
            f"{theorem_id}: degenerate type at (n={n}, q={q}): non-integral intersection size")
    params = TypeParameters(a, b, c, n, q)
    ts = t_closed_form(params, k)
    _check(all(t.denominator == 1 and t >= 1 for t in ts),
           f"{theorem_id}: closed-form counts are not realizable at (n={n}, q={q})")
    return TheoremInstance(theorem_id=theorem_id, n=n, q=q, t_or_d=t_or_d,
                           a=a, b=b, c=c, expected_k=k,
                           expected_t=tuple(int(t) for t in ts),
                           vertex_dim=vertex_dim, base_descriptor=base)


# ---------------------------------------------------------------------------
# endpoint sign checks for the quadratic count expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SignCheck:
    label: str
    k: Fraction
    value: Fraction
    claim: str  # "<0", "<=1/2", "<1"
    passed: bool


@dataclass(frozen=True)
class SignReport:
    theorem_id: str
    n: int
    q: int
    t_or_d: int | None
    checks: tuple
    notes: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


_CLAIMS = {
    "<0": lambda v: v < 0,
    "<=1/2": lambda v: v <= Fraction(1, 2),
    "<1": lambda v: v < 1,
}


def _signcheck(params, which, label, k, claim) -> SignCheck:
    value = t_closed_form(params, k)[which]
    return SignCheck(label=label, k=Fraction(k), value=value, claim=claim,
                     passed=_CLAIMS[claim](value))


def step_sign_check(theorem_id: str, n: int, q: int, t_or_d=None) -> SignReport:
    """Evaluate the interval-endpoint count expressions the proofs rely on
    and assert the claimed signs, in exact rational arithmetic."""
    checks = []
    notes = []
    a, b, c = _abc(theorem_id, n, q, t_or_d)

    class _P:  # lightweight stand-in allowing rational a, b, c
        pass
    params = _P()
    params.a, params.b, params.c, params.n, params.q = a, b, c, n, q

    if theorem_id == "baer":
        t = t_or_d
        _check(t is not None and 1 <= t and 2 * t <= n and n >= 4,
               f"baer: bad (n, t) = ({n}, {t_or_d})")
        _sqrt_q(q)
        _check(q >= 16 or t == 1, f"baer: need q >= 16 when t >= 2, got q={q}")
        _check(q >= 4, f"baer: need q >= 4, got q={q}")
        rt = _sqrt_q(q)
        k_lo = c_rs(n - 2 * t - 1, 2 * t, q) + q
        k_hi = a + rt ** (2 * n - 4 * t + 3) * theta(t - 1, q)
        checks.append(_signcheck(params, 0, "t_a at lower interval endpoint", k_lo, "<0"))
        checks.append(_signcheck(params, 0, "t_a at upper interval endpoint", k_hi, "<0"))
    elif theorem_id == "unital":
        _check(n >= 4, f"unital: need n >= 4, got n={n}")
        rt = _sqrt_q(q)
        _check(q >= 4, f"unital: need q >= 4, got q={q}")
        k_lo = theta(n - 1, q) + q ** (n - 2)
        k_hi = theta(n - 3, q) + rt ** (2 * n - 1)
        checks.append(_signcheck(params, 2, "t_c at lower interval endpoint", k_lo, "<0"))
        checks.append(_signcheck(params, 2, "t_c at upper interval endpoint", k_hi, "<0"))
        checks.append(_signcheck(params, 1, "t_b at k = theta_{n-1}", theta(n - 1, q), "<0"))
    elif theorem_id == "hyperovalN":
        _check(n >= 4, f"hyperovalN: need n >= 4, got n={n}")
        checks.append(_signcheck(params, 2, "t_c at k = c", c, "<0"))
        checks.append(_signcheck(params, 2, "t_c at upper endpoint of the low interval",
                                 theta(n - 1, q) + q ** (n - 2) - q ** (n - 3), "<0"))
        if q == 2:
            notes.append("high interval is empty for q = 2; its checks are skipped")
        else:
            checks.append(_signcheck(params, 0, "t_a at lower endpoint of the high interval",
                                     theta(n - 1, q) + q ** (n - 2) + q ** (n - 3), "<=1/2"))
            checks.append(_signcheck(params, 0, "t_a at k = 2q^{n-1} + theta_{n-3}",
                                     2 * q ** (n - 1) + theta(n - 3, q), "<0"))
    elif theorem_id == "maxarc":
        d = t_or_d
        _check(d is not None and n >= 5 and 2 <= d <= q - 1 and gcd(d - 1, q) == 1,
               f"maxarc: bad (n, q, d) = ({n}, {q}, {t_or_d})")
        k_mid = q ** (n - 2) * (q * d + d - q) + theta(n - 3, q)
        checks.append(_signcheck(params, 2, "t_c at k = c", c, "<0"))
        checks.append(_signcheck(params, 2, "t_c at upper endpoint of the low interval",
                                 k_mid - q ** (n - 3), "<0"))
        checks.append(_signcheck(params, 0, "t_a at lower endpoint of the high interval",
                                 k_mid + q ** (n - 3), "<0"))
        checks.append(_signcheck(params, 0, "t_a at k = d*q^{n-1} + theta_{n-3}",
                                 d * q ** (n - 1) + theta(n - 3, q), "<1"))
    else:
        raise HypothesisViolated(
            f"no endpoint sign checks for theorem id {theorem_id!r}")

    return SignReport(theorem_id=theorem_id, n=n, q=q, t_or_d=t_or_d,
                      checks=tuple(checks), notes=tuple(notes))
