"""Skew polynomials R[u; alpha] and truncated skew power series.

Multiplication follows the left-coefficient convention u*a = alpha(a)*u,
so (sum f_i u^i)(sum g_j u^j) has coefficient sum_{i+j=m} f_i alpha^i(g_j)
at u^m.  Polynomials are exact; series are truncated at a fixed precision
N (coefficients of u^0..u^N).

The outer variable's truncation and any truncation inside the
coefficient ring are independent; both are applied eagerly.  Probes that
could mistake a truncated tail for zero carry a genuine/artifact flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .endos import Endo, build_endo
from .rings import construct_ring, split_top


def _common(a, b):
    if a.ring != b.ring or a.endo != b.endo:
        raise ValueError("operands live over different rings or twists")


def _twisted_conv(ring, endo, xs, ys, limit):
    zero = ring.zero_v
    out = [zero] * (limit + 1)
    for i, xi in enumerate(xs):
        if xi == zero or i > limit:
            continue
        for j, yj in enumerate(ys):
            if i + j > limit:
                break
            if yj != zero:
                out[i + j] = ring.k_add(out[i + j], ring.k_mul(xi, endo.power_apply_v(i, yj)))
    return out


class SkewPoly:
    """Exact twisted polynomial; coefficients little-endian, trailing
    zeros stripped, the zero polynomial has an empty coefficient tuple."""

    __slots__ = ("ring", "endo", "coeffs")

    def __init__(self, ring, endo: Endo, coeffs):
        if endo.ring != ring:
            raise ValueError("twist acts on a different ring")
        cs = list(coeffs)
        while cs and cs[-1] == ring.zero_v:
            cs.pop()
        self.ring = ring
        self.endo = endo
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, ring, endo, value):
        return cls(ring, endo, [value])

    @classmethod
    def variable(cls, ring, endo):
        return cls(ring, endo, [ring.zero_v, ring.one_v])

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def order(self) -> Optional[int]:
        for i, c in enumerate(self.coeffs):
            if c != self.ring.zero_v:
                return i
        return None

    def __add__(self, other):
        _common(self, other)
        ring = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        xs = list(self.coeffs) + [ring.zero_v] * (n - len(self.coeffs))
        ys = list(other.coeffs) + [ring.zero_v] * (n - len(other.coeffs))
        return SkewPoly(ring, self.endo, [ring.k_add(a, b) for a, b in zip(xs, ys)])

    def __neg__(self):
        return SkewPoly(self.ring, self.endo, [self.ring.k_neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        _common(self, other)
        if self.is_zero or other.is_zero:
            return SkewPoly(self.ring, self.endo, [])
        limit = self.degree + other.degree
        return SkewPoly(self.ring, self.endo,
                        _twisted_conv(self.ring, self.endo, self.coeffs,
                                      other.coeffs, limit))

    def __pow__(self, n: int):
        acc = SkewPoly.constant(self.ring, self.endo, self.ring.one_v)
        for _ in range(n):
            acc = acc * self
        return acc

    def shift(self, k: int = 1):
        """Multiply by u^k on the right."""
        if self.is_zero:
            return self
        return SkewPoly(self.ring, self.endo,
                        [self.ring.zero_v] * k + list(self.coeffs))

    def truncate(self, precision: int) -> "TruncSeries":
        cs = list(self.coeffs[:precision + 1])
        cs += [self.ring.zero_v] * (precision + 1 - len(cs))
        return TruncSeries(self.ring, self.endo, precision, cs)

    def __eq__(self, other):
        return (isinstance(other, SkewPoly) and other.ring == self.ring
                and other.endo == self.endo and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.ring.spec_text, self.endo.text, self.coeffs))

    def to_text(self) -> str:
        cs = self.coeffs if self.coeffs else (self.ring.zero_v,)
        return "[%s]@%s;%s" % (",".join(self.ring.text_of_v(c) for c in cs),
                               self.ring.spec_text, self.endo.text)

    def __repr__(self):
        return self.to_text()


class TruncSeries:
    """Twisted series modulo u^(precision+1)."""

    __slots__ = ("ring", "endo", "precision", "coeffs")

    def __init__(self, ring, endo: Endo, precision: int, coeffs):
        if endo.ring != ring:
            raise ValueError("twist acts on a different ring")
        cs = list(coeffs)
        if len(cs) > precision + 1:
            raise ValueError("coefficient list longer than the precision window")
        cs += [ring.zero_v] * (precision + 1 - len(cs))
        self.ring = ring
        self.endo = endo
        self.precision = precision
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, ring, endo, value, precision: int):
        return cls(ring, endo, precision, [value])

    @classmethod
    def monomial(cls, ring, endo, k: int, value, precision: int):
        cs = [ring.zero_v] * (precision + 1)
        cs[k] = value
        return cls(ring, endo, precision, cs)

    @property
    def is_zero(self):
        return all(c == self.ring.zero_v for c in self.coeffs)

    def order(self) -> Optional[int]:
        for i, c in enumerate(self.coeffs):
            if c != self.ring.zero_v:
                return i
        return None

    def support(self) -> int:
        """Largest degree with a nonzero coefficient; -1 if zero."""
        top = -1
        for i, c in enumerate(self.coeffs):
            if c != self.ring.zero_v:
                top = i
        return top

    def _like(self, coeffs):
        return TruncSeries(self.ring, self.endo, self.precision, coeffs)

    def __add__(self, other):
        self._check(other)
        r = self.ring
        return self._like([r.k_add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self._like([self.ring.k_neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return self._like(_twisted_conv(self.ring, self.endo, self.coeffs,
                                        other.coeffs, self.precision))

    def __pow__(self, n: int):
        acc = TruncSeries.constant(self.ring, self.endo, self.ring.one_v,
                                   self.precision)
        for _ in range(n):
            acc = acc * self
        return acc

    def _check(self, other):
        _common(self, other)
        if other.precision != self.precision:
            raise ValueError("precision mismatch")

    def is_unit(self) -> bool:
        # truncation-model semantics: unit iff the constant term is a unit
        return self.ring.is_unit_v(self.coeffs[0]) is not None

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and other.ring == self.ring
                and other.endo == self.endo and other.precision == self.precision
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.ring.spec_text, self.endo.text, self.precision,
                     self.coeffs))

    def to_text(self) -> str:
        return "[%s]@%s;%s;N=%d" % (",".join(self.ring.text_of_v(c)
                                             for c in self.coeffs),
                                    self.ring.spec_text, self.endo.text,
                                    self.precision)

    def __repr__(self):
        return self.to_text()


def parse_poly_text(text: str):
    """Parse "[c0,...,cd]@<ringspec>;<endospec>" into a SkewPoly, or the
    same with ";N=<precision>" appended into a TruncSeries."""
    s = text.strip()
    halves = split_top(s, "@")
    if len(halves) != 2:
        raise ValueError("polynomial text needs a single top-level '@': %r" % text)
    body, tail = halves
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError("coefficients must be bracketed: %r" % text)
    tail_parts = split_top(tail, ";")
    if len(tail_parts) == 2:
        ring_text, endo_text = tail_parts
        precision = None
    elif len(tail_parts) == 3 and tail_parts[2].strip().startswith("N="):
        ring_text, endo_text = tail_parts[0], tail_parts[1]
        precision = int(tail_parts[2].strip()[2:])
    else:
        raise ValueError("polynomial text needs ring;endo[;N=prec]: %r" % text)
    ring = construct_ring(ring_text.strip())
    endo = build_endo(ring, endo_text.strip())
    entries = [e for e in split_top(body[1:-1], ",") if e.strip() != ""]
    coeffs = [ring.v_of_text(e) for e in entries]
    if precision is None:
        return SkewPoly(ring, endo, coeffs)
    if len(coeffs) > precision + 1:
        raise ValueError("more coefficients than the precision window allows")
    return TruncSeries(ring, endo, precision, coeffs)


def skew_add(f, g):
    return f + g


def skew_mul(f, g):
    return f * g


# ---------------------------------------------------------------------------
# inverses


@dataclass(frozen=True)
class GeometricInverseResult:
    series: TruncSeries
    terminated: bool
    index: Optional[int]       # least k with (f*u)^k = 0 exactly, if any
    note: str


def geometric_inverse(f: SkewPoly, precision: int) -> GeometricInverseResult:
    """Inverse of 1 + f*u in the truncated series ring, as the alternating
    sum of exact powers of f*u.  Terminated means some power vanished as
    an exact polynomial, which certifies the inverse is polynomial."""
    ring, endo = f.ring, f.endo
    one = SkewPoly.constant(ring, endo, ring.one_v)
    fu = f.shift(1)
    acc = one.truncate(precision)
    power = one
    sign_negative = True
    terminated = False
    index = None
    k = 1
    while True:
        power = power * fu
        if power.is_zero:
            terminated = True
            index = k
            break
        term = power.truncate(precision)
        acc = acc - term if sign_negative else acc + term
        ordv = power.order()
        if ordv is not None and ordv > precision:
            break
        sign_negative = not sign_negative
        k += 1
    lhs = (one + fu).truncate(precision)
    unity = one.truncate(precision)
    if lhs * acc != unity or acc * lhs != unity:
        raise RuntimeError("geometric expansion failed to invert 1 + f*u")
    note = ("power (f*u)^%d vanished exactly" % index if terminated
            else "no exact zero power within the precision window")
    return GeometricInverseResult(acc, terminated, index, note)


def series_inverse(g: TruncSeries) -> TruncSeries:
    """Two-sided inverse of a series whose constant term is a unit,
    computed degree by degree.  Raises ValueError otherwise."""
    ring, endo = g.ring, g.endo
    g0inv = ring.is_unit_v(g.coeffs[0])
    if g0inv is None:
        raise ValueError("series constant term %s is not a unit"
                         % ring.text_of_v(g.coeffs[0]))
    n = g.precision
    h = [ring.zero_v] * (n + 1)
    h[0] = g0inv
    for m in range(1, n + 1):
        acc = ring.zero_v
        for i in range(1, m + 1):
            gi = g.coeffs[i]
            if gi != ring.zero_v:
                acc = ring.k_add(acc, ring.k_mul(gi, endo.power_apply_v(i, h[m - i])))
        h[m] = ring.k_neg(ring.k_mul(g0inv, acc))
    out = TruncSeries(ring, endo, n, h)
    unity = TruncSeries.constant(ring, endo, ring.one_v, n)
    if g * out != unity or out * g != unity:
        raise RuntimeError("series inversion check failed")
    return out


# ---------------------------------------------------------------------------
# nilpotency probe


@dataclass(frozen=True)
class ProbeResult:
    zero_power_found: bool
    index: Optional[int]
    genuine: bool              # False means a truncation artifact is possible
    note: str


def nilpotency_probe(f, bound: int = 16) -> ProbeResult:
    """Search powers f^k for k <= bound.

    Exact for polynomials.  For truncated series the verdict is genuine
    only if every intermediate support stayed within half the precision
    window (and, when the coefficient ring is itself truncated, a replay
    with widened coefficients still vanishes)."""
    if isinstance(f, SkewPoly):
        power = f
        for k in range(2, bound + 2):
            power = power * f
            if power.is_zero:
                return ProbeResult(True, k, True, "exact zero power")
        return ProbeResult(False, None, True,
                           "no zero power up to exponent %d" % (bound + 1))
    half = f.precision // 2
    clean = f.support() <= half
    power = f
    index = None
    for k in range(2, bound + 2):
        power = power * f
        if power.is_zero:
            index = k
            break
        if power.support() > half:
            clean = False
    if index is None:
        return ProbeResult(False, None, False,
                           "no zero power up to exponent %d at this precision"
                           % (bound + 1))
    if clean and f.ring.truncated:
        clean = _widened_replay_is_zero(f, index)
    note = ("zero power with supports inside the half-precision window"
            if clean else "zero power; truncation artifact possible")
    return ProbeResult(True, index, clean, note)


def _widened_replay_is_zero(f: TruncSeries, index: int) -> bool:
    ring = f.ring
    wide = ring.widen(2)
    wendo = f.endo.on_widened(wide)
    inner_half = wide.precision // 2
    lifted = TruncSeries(wide, wendo, f.precision * 2,
                         [ring.lift_v(c, wide) for c in f.coeffs])
    power = lifted
    for _ in range(index - 1):
        power = power * lifted
        for c in power.coeffs:
            if c != wide.zero_v and wide.support_v(c) > inner_half:
                return False
    return power.is_zero


# ---------------------------------------------------------------------------
# divisibility solver


@dataclass(frozen=True)
class DivisibilityResult:
    status: str                # "found" | "none" | "budget-exhausted"
    h: Optional[TruncSeries]
    nodes: int
    certificate: str


def solve_right_divisibility(f: TruncSeries, g: TruncSeries, n: int,
                             side: str = "right",
                             node_limit: int = 200_000,
                             universe=None) -> DivisibilityResult:
    """Find h with f = h * g^n (side="right") or f = g^n * h ("left") in
    the truncated ring, by degree-by-degree backtracking over coefficient
    candidates.  Returns the lexicographically least witness under the
    ring's enumeration order, a proof of nonexistence at this precision,
    or a distinct budget-exhausted status.  A caller-supplied universe
    restricts the coefficient candidates (then "none" only rules out
    witnesses built from that pool)."""
    f._check(g)
    if n < 1:
        raise ValueError("power must be >= 1")
    ring, endo = f.ring, f.endo
    N = f.precision
    G = g ** n
    if universe is None:
        universe = ring.scope_values() if ring.truncated else ring.values()

    # twisted copies of G's coefficients, filled on demand
    twisted: dict = {}

    def tg(j: int, d: int):
        got = twisted.get((j, d))
        if got is None:
            got = endo.power_apply_v(j, G.coeffs[d])
            twisted[(j, d)] = got
        return got

    # candidate rows per distinct multiplier: multiplier -> residual -> [c...]
    rows: dict = {}

    def candidates(m: int, residual):
        mult = tg(m, 0) if side == "right" else G.coeffs[0]
        row = rows.get((side, mult))
        if row is None:
            row = {}
            for c in universe:
                prod = (ring.k_mul(c, mult) if side == "right"
                        else ring.k_mul(mult, c))
                row.setdefault(prod, []).append(c)
            rows[(side, mult)] = row
        return row.get(residual, ())

    def residual(m: int, h):
        acc = f.coeffs[m]
        for j in range(m):
            hj = h[j]
            if hj == ring.zero_v:
                continue
            if side == "right":
                term = ring.k_mul(hj, tg(j, m - j))
            else:
                gi = G.coeffs[m - j]
                term = (ring.k_mul(gi, endo.power_apply_v(m - j, hj))
                        if gi != ring.zero_v else ring.zero_v)
            acc = ring.k_sub(acc, term)
        return acc

    h = [ring.zero_v] * (N + 1)
    nodes = 0

    def dfs(m: int):
        nonlocal nodes
        if m > N:
            return True
        r = residual(m, h)
        for c in candidates(m, r):
            nodes += 1
            if nodes > node_limit:
                raise _Budget()
            h[m] = c
            if dfs(m + 1):
                return True
        h[m] = ring.zero_v
        return False

    try:
        found = dfs(0)
    except _Budget:
        return DivisibilityResult("budget-exhausted", None, nodes,
                                  "node limit %d reached" % node_limit)
    if not found:
        return DivisibilityResult("none", None, nodes,
                                  "backtracking exhausted all coefficient choices")
    out = TruncSeries(ring, endo, N, h)
    check = out * G if side == "right" else G * out
    assert check == f
    return DivisibilityResult("found", out, nodes, "witness replayed")


class _Budget(Exception):
    pass
