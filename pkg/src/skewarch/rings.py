"""Finite coefficient rings with exact arithmetic and canonical forms.

Supported constructions: integers mod n, Galois fields GF(p^k), finite
products, generated subrings (sharing the ambient unity), quotients by
two-sided ideals, truncated power series rings R[[u]] mod u^(N+1), and
the two-variable quotient F[[x,y]]/(xy) truncated at degree N in each
variable.

The last two are "truncated models": they stand in for infinite rings,
so exhaustive element scans are replaced by scans over a support-bounded
scope, and products inside scope checks are evaluated in a widened copy
of the ring so an apparent zero is never a truncation artifact.

Every ring has a canonical text form (see parse_ring_spec) and every
element a canonical printed form; parse and print round-trip exactly.
No floating point is used anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .prng import CONSTRUCTION_SEED, SplitMix64, fnv1a64

AXIOM_TRIPLE_BUDGET = 4096     # exhaustive triple scan at or below this many triples
AXIOM_SAMPLES = 10_000         # sampled triples above the budget
PRODUCT_AXIOM_SAMPLES = 500    # componentwise ops only need a wiring check
ENUMERATION_CAP = 65_536       # refuse to materialize finite rings beyond this
SCOPE_ENUMERATION_BUDGET = 200_000   # truncated-model scans shrink support to fit
TRUNCATED_AXIOM_SAMPLES = 2_000      # per-element ops there are much pricier
SUBRING_CLOSURE_CAP = 65_536


class RingConstructionError(ValueError):
    """A ring spec is malformed or its arithmetic fails validation."""


class RingMismatchError(ValueError):
    """Elements of distinct rings were combined."""


class NonEnumerableError(RuntimeError):
    """An exhaustive scan was requested on a truncated-model ring."""


# ---------------------------------------------------------------------------
# spec values


@dataclass(frozen=True)
class ZmodSpec:
    n: int


@dataclass(frozen=True)
class GFSpec:
    p: int
    k: int
    irr: tuple  # monic irreducible, little-endian, length k+1


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple


@dataclass(frozen=True)
class SubringSpec:
    parent: object
    gens: tuple  # canonical element texts in the parent


@dataclass(frozen=True)
class QuotientSpec:
    parent: object
    gens: tuple  # ideal generators, canonical element texts


@dataclass(frozen=True)
class TruncSeriesSpec:
    base: object
    precision: int


@dataclass(frozen=True)
class XYQuotientSpec:
    field: GFSpec
    precision: int


def spec_to_text(spec) -> str:
    if isinstance(spec, ZmodSpec):
        return "zmod:%d" % spec.n
    if isinstance(spec, GFSpec):
        return "gf:%d:%d:%s" % (spec.p, spec.k, ",".join(str(c) for c in spec.irr))
    if isinstance(spec, ProductSpec):
        return "prod(%s)" % ",".join(spec_to_text(f) for f in spec.factors)
    if isinstance(spec, SubringSpec):
        return "sub(%s;%s)" % (spec_to_text(spec.parent), ",".join(spec.gens))
    if isinstance(spec, QuotientSpec):
        return "quot(%s;%s)" % (spec_to_text(spec.parent), ",".join(spec.gens))
    if isinstance(spec, TruncSeriesSpec):
        return "tser(%s,N=%d)" % (spec_to_text(spec.base), spec.precision)
    if isinstance(spec, XYQuotientSpec):
        return "xyq:%s:N=%d" % (spec_to_text(spec.field), spec.precision)
    raise TypeError("not a ring spec: %r" % (spec,))


def split_top(text: str, sep: str):
    """Split on sep occurrences at bracket depth zero."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- dense little-endian polynomial helpers over Z/p, used only for GF setup


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _pmod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < dm:
            break
        c = a[-1]
        shift = len(a) - 1 - dm
        for j in range(dm + 1):
            a[shift + j] = (a[shift + j] - c * m[j]) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _is_irreducible(coeffs, p) -> bool:
    k = len(coeffs) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for j in range(p ** d):
            div = _digits(j, p, d) + [1]
            if not _pmod(coeffs, div, p):
                return False
    return True


def _digits(i, base, length):
    out = []
    for _ in range(length):
        out.append(i % base)
        i //= base
    return out


def default_irreducible(p: int, k: int) -> tuple:
    """Lexicographically least monic irreducible of degree k over Z/p,
    scanning constant-first digit vectors.  Pinned so that gf:p:k without
    an explicit modulus always means the same field table."""
    for i in range(p ** k):
        cand = _digits(i, p, k) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise RingConstructionError("no irreducible of degree %d over Z/%d" % (k, p))


def parse_ring_spec(text: str):
    """Parse the canonical ring grammar.

    zmod:6 | gf:2:2:1,1,1 (modulus optional) | prod(s1,s2,...) |
    sub(s;g1,g2) | quot(s;g1,g2) | tser(s,N=16) | xyq:gf:2:1:N=8
    """
    s = text.strip()
    if s.startswith("zmod:"):
        try:
            n = int(s[5:])
        except ValueError:
            raise RingConstructionError("bad zmod spec: %r" % text)
        return ZmodSpec(n)
    if s.startswith("xyq:"):
        body = s[4:]
        at = body.rfind(":N=")
        if at < 0:
            raise RingConstructionError("xyq spec needs :N=<precision>: %r" % text)
        field = parse_ring_spec(body[:at])
        if not isinstance(field, GFSpec):
            raise RingConstructionError("xyq base must be a gf spec: %r" % text)
        try:
            prec = int(body[at + 3:])
        except ValueError:
            raise RingConstructionError("bad xyq precision: %r" % text)
        return XYQuotientSpec(field, prec)
    if s.startswith("gf:"):
        parts = s.split(":")
        if len(parts) not in (3, 4):
            raise RingConstructionError("bad gf spec: %r" % text)
        try:
            p, k = int(parts[1]), int(parts[2])
        except ValueError:
            raise RingConstructionError("bad gf spec: %r" % text)
        if not _is_prime(p) or k < 1:
            raise RingConstructionError("gf needs prime p and k >= 1: %r" % text)
        if len(parts) == 4:
            try:
                irr = tuple(int(c) for c in parts[3].split(","))
            except ValueError:
                raise RingConstructionError("bad gf modulus: %r" % text)
            if len(irr) != k + 1 or irr[-1] != 1 or any(not 0 <= c < p for c in irr):
                raise RingConstructionError("gf modulus must be monic of degree k with "
                                            "coefficients in [0,p): %r" % text)
            if not _is_irreducible(list(irr), p):
                raise RingConstructionError("gf modulus is reducible: %r" % text)
        else:
            irr = default_irreducible(p, k)
        return GFSpec(p, k, irr)
    if s.startswith("prod(") and s.endswith(")"):
        factors = _parse_spec_list(s[5:-1], text)
        if len(factors) < 2:
            raise RingConstructionError("prod needs at least two factors: %r" % text)
        return ProductSpec(tuple(factors))
    for head, cls in (("sub(", SubringSpec), ("quot(", QuotientSpec)):
        if s.startswith(head) and s.endswith(")"):
            inner = s[len(head):-1]
            halves = split_top(inner, ";")
            if len(halves) != 2:
                raise RingConstructionError("%s...) needs parent;gens: %r" % (head, text))
            parent = parse_ring_spec(halves[0])
            gens = tuple(g for g in (t.strip() for t in split_top(halves[1], ","))
                         if g != "")
            return cls(parent, gens)
    if s.startswith("tser(") and s.endswith(")"):
        inner = s[5:-1]
        at = inner.rfind(",N=")
        if at < 0:
            raise RingConstructionError("tser needs (base,N=prec): %r" % text)
        try:
            prec = int(inner[at + 3:])
        except ValueError:
            raise RingConstructionError("bad tser precision: %r" % text)
        return TruncSeriesSpec(parse_ring_spec(inner[:at]), prec)
    raise RingConstructionError("unrecognized ring spec: %r" % text)


def _parse_spec_list(body: str, context: str):
    """Split a comma-joined factor list where gf moduli also use commas.

    Fragments that fail to parse are re-joined with their successor and
    retried; a gf spec with an explicit modulus only parses once the whole
    modulus is present, so the greedy repair stops in the right place."""
    pieces = split_top(body, ",")
    out = []
    pending = ""
    for piece in pieces:
        pending = piece if not pending else pending + "," + piece
        try:
            out.append(parse_ring_spec(pending))
        except RingConstructionError:
            continue
        pending = ""
    if pending:
        raise RingConstructionError("unparseable factor %r in %r" % (pending, context))
    return out


# ---------------------------------------------------------------------------
# elements and subsets


class Element:
    """A ring element: a handle plus a canonical raw value."""

    __slots__ = ("ring", "v")

    def __init__(self, ring, v):
        self.ring = ring
        self.v = v

    def _need_same(self, other):
        if not isinstance(other, Element):
            raise TypeError("cannot combine %r with ring element" % (other,))
        if other.ring != self.ring:
            raise RingMismatchError("elements of %s and %s cannot interoperate"
                                    % (self.ring.spec_text, other.ring.spec_text))

    def __add__(self, other):
        self._need_same(other)
        return Element(self.ring, self.ring.k_add(self.v, other.v))

    def __sub__(self, other):
        self._need_same(other)
        return Element(self.ring, self.ring.k_add(self.v, self.ring.k_neg(other.v)))

    def __neg__(self):
        return Element(self.ring, self.ring.k_neg(self.v))

    def __mul__(self, other):
        self._need_same(other)
        return Element(self.ring, self.ring.k_mul(self.v, other.v))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers need an explicit inverse")
        return Element(self.ring, self.ring.k_pow(self.v, n))

    def __eq__(self, other):
        return (isinstance(other, Element) and other.ring == self.ring
                and other.v == self.v)

    def __hash__(self):
        return hash((self.ring.spec_text, self.v))

    @property
    def text(self) -> str:
        return self.ring.text_of_v(self.v)

    def __repr__(self):
        return self.text


class SubsetHandle:
    """An explicit subset of a finite ring, kept in enumeration order."""

    def __init__(self, ring, values, label: str = ""):
        self.ring = ring
        self.vals = tuple(sorted(set(values), key=ring.sort_key_v))
        self.label = label

    def __contains__(self, item):
        v = item.v if isinstance(item, Element) else item
        return v in set(self.vals)

    def __len__(self):
        return len(self.vals)

    def __iter__(self):
        return (Element(self.ring, v) for v in self.vals)

    def texts(self):
        return [self.ring.text_of_v(v) for v in self.vals]

    def __eq__(self, other):
        return (isinstance(other, SubsetHandle) and other.ring == self.ring
                and other.vals == self.vals)

    def __hash__(self):
        return hash((self.ring.spec_text, self.vals))

    def __repr__(self):
        body = ",".join(self.texts())
        return "{%s}" % body


# ---------------------------------------------------------------------------
# ring handles


class RingHandle:
    kind = "?"
    truncated = False
    componentwise = False
    _scope_cache = None

    def __init__(self):
        self.spec_text = spec_to_text(self.spec)
        self._cache = {}
        self._values = None
        self._index = None

    # identity is the canonical spec text, so re-constructing the same
    # spec yields interoperable handles
    def __eq__(self, other):
        return isinstance(other, RingHandle) and other.spec_text == self.spec_text

    def __hash__(self):
        return hash(self.spec_text)

    def __repr__(self):
        return "<ring %s>" % self.spec_text

    # -- kernels on raw values; subclasses implement add/neg/mul

    def k_sub(self, x, y):
        return self.k_add(x, self.k_neg(y))

    def k_pow(self, x, n: int):
        acc = self.one_v
        for _ in range(n):
            acc = self.k_mul(acc, x)
        return acc

    # -- enumeration

    def values(self):
        if self.truncated:
            raise NonEnumerableError("%s is a truncated model; use scope_values"
                                     % self.spec_text)
        if self._values is None:
            if self.card > ENUMERATION_CAP:
                raise NonEnumerableError("%s has %d elements, beyond the scan cap"
                                         % (self.spec_text, self.card))
            self._values = list(self._enumerate())
            self._index = {v: i for i, v in enumerate(self._values)}
        return self._values

    def index_of_v(self, v) -> int:
        self.values()
        return self._index[v]

    def sort_key_v(self, v):
        if self.truncated:
            return v
        return self.index_of_v(v)

    def random_v(self, rng: SplitMix64):
        vals = self.values()
        return vals[rng.below(len(vals))]

    # -- units; finite default does one cached pair scan

    def _unit_map(self):
        m = self._cache.get("unit_map")
        if m is None:
            vals = self.values()
            m = {}
            for a in vals:
                for b in vals:
                    if self.k_mul(a, b) == self.one_v and self.k_mul(b, a) == self.one_v:
                        m[a] = b
                        break
            self._cache["unit_map"] = m
        return m

    def is_unit_v(self, v):
        """Inverse value, or None."""
        return self._unit_map().get(v)

    # -- element-level conveniences

    @property
    def zero(self) -> Element:
        return Element(self, self.zero_v)

    @property
    def one(self) -> Element:
        return Element(self, self.one_v)

    def element(self, v) -> Element:
        return Element(self, v)

    def from_text(self, text: str) -> Element:
        return Element(self, self.v_of_text(text))

    def elements(self):
        return (Element(self, v) for v in self.values())

    def subset(self, values, label: str = "") -> SubsetHandle:
        return SubsetHandle(self, [v.v if isinstance(v, Element) else v
                                   for v in values], label)

    def describe_cardinality(self):
        return "truncated-model" if self.truncated else self.card


class ZmodRing(RingHandle):
    kind = "zmod"

    def __init__(self, spec: ZmodSpec):
        if spec.n < 2:
            raise RingConstructionError("zmod modulus must be >= 2")
        self.spec = spec
        self.n = spec.n
        self.card = spec.n
        self.commutative = True
        self.zero_v = 0
        self.one_v = 1 % spec.n
        super().__init__()

    def k_add(self, x, y):
        return (x + y) % self.n

    def k_neg(self, x):
        return (-x) % self.n

    def k_mul(self, x, y):
        return (x * y) % self.n

    def _enumerate(self):
        return range(self.n)

    def text_of_v(self, v):
        return str(v)

    def v_of_text(self, text):
        try:
            return int(text.strip()) % self.n
        except ValueError:
            raise ValueError("bad element %r for %s" % (text, self.spec_text))


class GaloisFieldRing(RingHandle):
    """GF(p^k) as Z/p-coordinate vectors modulo a pinned irreducible.

    k = 1 stores bare residues; k >= 2 stores little-endian k-tuples.
    Printed form is always the bracketed coordinate vector."""

    kind = "gf"

    def __init__(self, spec: GFSpec):
        self.spec = spec
        self.p, self.k = spec.p, spec.k
        self.irr = spec.irr
        self.card = spec.p ** spec.k
        self.commutative = True
        if spec.k == 1:
            self.zero_v, self.one_v = 0, 1 % spec.p
        else:
            self.zero_v = (0,) * spec.k
            self.one_v = (1,) + (0,) * (spec.k - 1)
        super().__init__()

    def k_add(self, x, y):
        if self.k == 1:
            return (x + y) % self.p
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def k_neg(self, x):
        if self.k == 1:
            return (-x) % self.p
        return tuple((-a) % self.p for a in x)

    def k_mul(self, x, y):
        p, k = self.p, self.k
        if k == 1:
            return (x * y) % p
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] = (prod[i + j] + a * b) % p
        # fold high terms through the monic modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * self.irr[j]) % p
        return tuple(prod[:k])

    def is_unit_v(self, v):
        if v == self.zero_v:
            return None
        # field: invert by power |F*|-1; cheaper than the generic pair scan
        return self.k_pow(v, self.card - 2)

    def _enumerate(self):
        if self.k == 1:
            return range(self.p)
        return (tuple(_digits(i, self.p, self.k)) for i in range(self.card))

    def text_of_v(self, v):
        if self.k == 1:
            return "[%d]" % v
        return "[%s]" % ",".join(str(c) for c in v)

    def v_of_text(self, text):
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError("bad element %r for %s" % (text, self.spec_text))
        parts = [t.strip() for t in s[1:-1].split(",")]
        if len(parts) != self.k:
            raise ValueError("element %r needs %d coordinates" % (text, self.k))
        coords = [int(t) % self.p for t in parts]
        return coords[0] if self.k == 1 else tuple(coords)


class ProductRing(RingHandle):
    kind = "prod"
    # ops act factor by factor, so the laws descend from the (already
    # validated) factors; construction keeps only a small wiring sample
    componentwise = True

    def __init__(self, spec: ProductSpec, factors):
        self.spec = spec
        self.factors = factors
        if any(f.truncated for f in factors):
            raise RingConstructionError("product factors must be finite rings")
        self.card = 1
        for f in factors:
            self.card *= f.card
        self.commutative = all(f.commutative for f in factors)
        self.zero_v = tuple(f.zero_v for f in factors)
        self.one_v = tuple(f.one_v for f in factors)
        super().__init__()

    def k_add(self, x, y):
        return tuple(f.k_add(a, b) for f, a, b in zip(self.factors, x, y))

    def k_neg(self, x):
        return tuple(f.k_neg(a) for f, a in zip(self.factors, x))

    def k_mul(self, x, y):
        return tuple(f.k_mul(a, b) for f, a, b in zip(self.factors, x, y))

    def is_unit_v(self, v):
        invs = []
        for f, a in zip(self.factors, v):
            inv = f.is_unit_v(a)
            if inv is None:
                return None
            invs.append(inv)
        return tuple(invs)

    def _enumerate(self):
        return itertools.product(*(f.values() for f in self.factors))

    def text_of_v(self, v):
        return "(%s)" % ",".join(f.text_of_v(a) for f, a in zip(self.factors, v))

    def v_of_text(self, text):
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError("bad element %r for %s" % (text, self.spec_text))
        parts = split_top(s[1:-1], ",")
        if len(parts) != len(self.factors):
            raise ValueError("element %r needs %d components" % (text, len(self.factors)))
        return tuple(f.v_of_text(t) for f, t in zip(self.factors, parts))


class SubRing(RingHandle):
    """Closure of {0, 1} and the generators inside the parent; shares the
    ambient unity by construction."""

    kind = "sub"

    def __init__(self, spec: SubringSpec, parent):
        self.spec = spec
        self.parent = parent
        gen_vals = [parent.v_of_text(g) for g in spec.gens]
        members = {parent.zero_v, parent.one_v, *gen_vals}
        frontier = list(members)
        while frontier:
            nxt = []
            for a in frontier:
                cands = [parent.k_neg(a)]
                for b in list(members):
                    cands.append(parent.k_add(a, b))
                    cands.append(parent.k_mul(a, b))
                    cands.append(parent.k_mul(b, a))
                for c in cands:
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
                if len(members) > SUBRING_CLOSURE_CAP:
                    raise RingConstructionError("subring closure exceeds %d elements"
                                                % SUBRING_CLOSURE_CAP)
            frontier = nxt
        self.members = sorted(members, key=parent.sort_key_v)
        self.card = len(self.members)
        self.commutative = parent.commutative
        self.zero_v = parent.zero_v
        self.one_v = parent.one_v
        super().__init__()

    def k_add(self, x, y):
        return self.parent.k_add(x, y)

    def k_neg(self, x):
        return self.parent.k_neg(x)

    def k_mul(self, x, y):
        return self.parent.k_mul(x, y)

    def _enumerate(self):
        return list(self.members)

    def text_of_v(self, v):
        return self.parent.text_of_v(v)

    def v_of_text(self, text):
        v = self.parent.v_of_text(text)
        if v not in set(self.members):
            raise ValueError("%s is not a member of %s" % (text, self.spec_text))
        return v


class QuotientRing(RingHandle):
    """Quotient of a finite ring by the two-sided ideal generated by the
    given elements.  Elements are canonical coset representatives: the
    coset member of least parent enumeration index."""

    kind = "quot"

    def __init__(self, spec: QuotientSpec, parent):
        if parent.truncated:
            raise RingConstructionError("quotient parent must be a finite ring")
        self.spec = spec
        self.parent = parent
        gen_vals = [parent.v_of_text(g) for g in spec.gens]
        ideal = {parent.zero_v, *gen_vals}
        pvals = parent.values()
        changed = True
        while changed:
            changed = False
            for a in list(ideal):
                fresh = [parent.k_neg(a)]
                fresh.extend(parent.k_add(a, b) for b in list(ideal))
                fresh.extend(parent.k_mul(r, a) for r in pvals)
                fresh.extend(parent.k_mul(a, r) for r in pvals)
                for c in fresh:
                    if c not in ideal:
                        ideal.add(c)
                        changed = True
        self.ideal = SubsetHandle(parent, ideal, "ideal")
        rep = {}
        for a in pvals:
            if a in rep:
                continue
            coset = [parent.k_add(a, i) for i in ideal]
            r = min(coset, key=parent.sort_key_v)
            for m in coset:
                rep[m] = r
        self.rep_map = rep
        self.card = len(set(rep.values()))
        self.commutative = parent.commutative
        self.zero_v = rep[parent.zero_v]
        self.one_v = rep[parent.one_v]
        super().__init__()

    def k_add(self, x, y):
        return self.rep_map[self.parent.k_add(x, y)]

    def k_neg(self, x):
        return self.rep_map[self.parent.k_neg(x)]

    def k_mul(self, x, y):
        return self.rep_map[self.parent.k_mul(x, y)]

    def _enumerate(self):
        return sorted(set(self.rep_map.values()), key=self.parent.sort_key_v)

    def text_of_v(self, v):
        return self.parent.text_of_v(v)

    def v_of_text(self, text):
        return self.rep_map[self.parent.v_of_text(text)]

    def project_v(self, parent_value):
        return self.rep_map[parent_value]


class TruncSeriesRing(RingHandle):
    """R[[u]] truncated at u^(N+1): length-(N+1) coefficient tuples with
    convolution products.  A truncated model: scans are scope-bounded."""

    kind = "tser"
    truncated = True

    def __init__(self, spec: TruncSeriesSpec, base):
        if base.truncated:
            raise RingConstructionError("tser base must be a finite ring")
        self.spec = spec
        self.base = base
        self.precision = spec.precision
        if spec.precision < 1:
            raise RingConstructionError("tser precision must be >= 1")
        self.card = None
        self.commutative = base.commutative
        width = spec.precision + 1
        self.zero_v = (base.zero_v,) * width
        self.one_v = (base.one_v,) + (base.zero_v,) * (spec.precision)
        super().__init__()

    def k_add(self, x, y):
        b = self.base
        return tuple(b.k_add(a, c) for a, c in zip(x, y))

    def k_neg(self, x):
        b = self.base
        return tuple(b.k_neg(a) for a in x)

    def k_mul(self, x, y):
        b = self.base
        zero = b.zero_v
        out = [zero] * (self.precision + 1)
        for i, xi in enumerate(x):
            if xi != zero:
                for j, yj in enumerate(y):
                    if i + j > self.precision:
                        break
                    if yj != zero:
                        out[i + j] = b.k_add(out[i + j], b.k_mul(xi, yj))
        return tuple(out)

    def is_unit_v(self, v):
        # unit iff the constant term is; truncation-model semantics
        c0inv = self.base.is_unit_v(v[0])
        if c0inv is None:
            return None
        b = self.base
        inv = [c0inv] + [b.zero_v] * self.precision
        for m in range(1, self.precision + 1):
            acc = b.zero_v
            for i in range(1, m + 1):
                acc = b.k_add(acc, b.k_mul(v[i], inv[m - i]))
            inv[m] = b.k_neg(b.k_mul(c0inv, acc))
        out = tuple(inv)
        assert self.k_mul(v, out) == self.one_v
        return out

    def monomial_v(self, k: int, coeff=None):
        c = self.base.one_v if coeff is None else coeff
        out = [self.base.zero_v] * (self.precision + 1)
        out[k] = c
        return tuple(out)

    def support_v(self, v) -> int:
        zero = self.base.zero_v
        top = -1
        for i, c in enumerate(v):
            if c != zero:
                top = i
        return top

    @property
    def scope(self) -> int:
        return self.precision // 2

    def bounded_support(self, budget: int = SCOPE_ENUMERATION_BUDGET) -> int:
        """Largest support s <= scope whose value count card^(s+1) fits
        the budget; exhaustive scans shrink to this automatically."""
        s = self.scope
        while s > 0 and len(self.base.values()) ** (s + 1) > budget:
            s -= 1
        return s

    def scope_values(self, max_support: Optional[int] = None):
        if max_support is None and self._scope_cache is not None:
            return self._scope_cache
        s = self.bounded_support() if max_support is None else max_support
        s = min(s, self.precision)
        bvals = self.base.values()
        if len(bvals) ** (s + 1) > SCOPE_ENUMERATION_BUDGET:
            raise NonEnumerableError("scope of %s too large to scan" % self.spec_text)
        pad = (self.base.zero_v,) * (self.precision - s)
        out = [head + pad for head in itertools.product(bvals, repeat=s + 1)]
        if max_support is None:
            self._scope_cache = out
        return out

    def widen(self, factor: int = 2):
        return construct_ring(TruncSeriesSpec(self.base.spec, self.precision * factor))

    def lift_v(self, v, wide):
        return tuple(v) + (self.base.zero_v,) * (wide.precision - self.precision)

    def random_v(self, rng: SplitMix64, max_support: Optional[int] = None):
        s = self.scope if max_support is None else max_support
        out = [self.base.zero_v] * (self.precision + 1)
        for _ in range(rng.below(4) + 1):
            out[rng.below(s + 1)] = self.base.random_v(rng)
        return tuple(out)

    def sort_key_v(self, v):
        return tuple(self.base.sort_key_v(c) for c in v)

    def text_of_v(self, v):
        return "[%s]" % ",".join(self.base.text_of_v(c) for c in v)

    def v_of_text(self, text):
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError("bad element %r for %s" % (text, self.spec_text))
        parts = [t for t in split_top(s[1:-1], ",") if t.strip() != ""]
        if len(parts) > self.precision + 1:
            raise ValueError("element %r exceeds precision %d" % (text, self.precision))
        coeffs = [self.base.v_of_text(t) for t in parts]
        coeffs += [self.base.zero_v] * (self.precision + 1 - len(coeffs))
        return tuple(coeffs)


class XYQuotientRing(RingHandle):
    """F[[x,y]]/(xy) truncated at degree N in each variable.

    Values are (a, xs, ys): constant term, then x- and y-block
    coefficients for degrees 1..N.  Since xy = 0, mixed blocks never
    interact and products reduce to two one-variable convolutions."""

    kind = "xyq"
    truncated = True

    def __init__(self, spec: XYQuotientSpec, field):
        if spec.precision < 2:
            raise RingConstructionError("xyq precision must be >= 2")
        self.spec = spec
        self.field = field
        self.precision = spec.precision
        self.card = None
        self.commutative = True
        fz = field.zero_v
        self.zero_v = (fz, (fz,) * spec.precision, (fz,) * spec.precision)
        self.one_v = (field.one_v, (fz,) * spec.precision, (fz,) * spec.precision)
        super().__init__()

    def _block_mul(self, a1, b1, a2, b2):
        # coefficient list of (a1 + b1(u)) * (a2 + b2(u)) minus its constant
        F = self.field
        fz = F.zero_v
        N = self.precision
        out = [fz] * N
        if a1 != fz:
            for j, c in enumerate(b2):
                if c != fz:
                    out[j] = F.k_add(out[j], F.k_mul(a1, c))
        if a2 != fz:
            for i, c in enumerate(b1):
                if c != fz:
                    out[i] = F.k_add(out[i], F.k_mul(c, a2))
        for i, ci in enumerate(b1):
            if ci != fz:
                for j, cj in enumerate(b2):
                    if i + j + 2 > N:
                        break
                    if cj != fz:
                        idx = i + j + 1
                        out[idx] = F.k_add(out[idx], F.k_mul(ci, cj))
        return tuple(out)

    def k_add(self, x, y):
        F = self.field
        return (F.k_add(x[0], y[0]),
                tuple(F.k_add(a, b) for a, b in zip(x[1], y[1])),
                tuple(F.k_add(a, b) for a, b in zip(x[2], y[2])))

    def k_neg(self, x):
        F = self.field
        return (F.k_neg(x[0]),
                tuple(F.k_neg(a) for a in x[1]),
                tuple(F.k_neg(a) for a in x[2]))

    def k_mul(self, x, y):
        F = self.field
        return (F.k_mul(x[0], y[0]),
                self._block_mul(x[0], x[1], y[0], y[1]),
                self._block_mul(x[0], x[2], y[0], y[2]))

    def is_unit_v(self, v):
        # local ring over a field: unit iff nonzero constant term
        ainv = self.field.is_unit_v(v[0])
        if ainv is None:
            return None
        fz = self.field.zero_v
        scaled = (self.field.one_v,
                  tuple(self.field.k_mul(ainv, c) for c in v[1]),
                  tuple(self.field.k_mul(ainv, c) for c in v[2]))
        # geometric series against the order->infinity part; terminates
        # because each block power gains at least one degree
        nil = (fz, scaled[1], scaled[2])
        acc = self.one_v
        term = self.one_v
        for _ in range(self.precision):
            term = self.k_mul(term, nil)
            if term == self.zero_v:
                break
            acc = self.k_add(acc, self.k_neg(term) if _ % 2 == 0 else term)
        out = (ainv,
               tuple(self.field.k_mul(ainv, c) for c in acc[1]),
               tuple(self.field.k_mul(ainv, c) for c in acc[2]))
        assert self.k_mul(v, out) == self.one_v
        return out

    def x_v(self, power: int = 1, coeff=None):
        c = self.field.one_v if coeff is None else coeff
        fz = self.field.zero_v
        xs = [fz] * self.precision
        xs[power - 1] = c
        return (fz, tuple(xs), (fz,) * self.precision)

    def y_v(self, power: int = 1, coeff=None):
        c = self.field.one_v if coeff is None else coeff
        fz = self.field.zero_v
        ys = [fz] * self.precision
        ys[power - 1] = c
        return (fz, (fz,) * self.precision, tuple(ys))

    def support_v(self, v) -> int:
        """Largest degree carrying a nonzero coefficient (0 for constants)."""
        fz = self.field.zero_v
        top = 0
        if v[0] != fz:
            top = 0
        for i, c in enumerate(v[1]):
            if c != fz:
                top = max(top, i + 1)
        for i, c in enumerate(v[2]):
            if c != fz:
                top = max(top, i + 1)
        return top

    @property
    def scope(self) -> int:
        return self.precision // 2

    def bounded_support(self, budget: int = SCOPE_ENUMERATION_BUDGET) -> int:
        s = self.scope
        q = len(self.field.values())
        while s > 0 and q ** (1 + 2 * s) > budget:
            s -= 1
        return s

    def scope_values(self, max_support: Optional[int] = None):
        if max_support is None and self._scope_cache is not None:
            return self._scope_cache
        s = self.bounded_support() if max_support is None else max_support
        s = min(s, self.precision)
        F = self.field
        fvals = F.values()
        if len(fvals) ** (1 + 2 * s) > SCOPE_ENUMERATION_BUDGET:
            raise NonEnumerableError("scope of %s too large to scan" % self.spec_text)
        pad = (F.zero_v,) * (self.precision - s)
        out = []
        for a in fvals:
            for xs in itertools.product(fvals, repeat=s):
                for ys in itertools.product(fvals, repeat=s):
                    out.append((a, xs + pad, ys + pad))
        if max_support is None:
            self._scope_cache = out
        return out

    def widen(self, factor: int = 2):
        return construct_ring(XYQuotientSpec(self.spec.field, self.precision * factor))

    def lift_v(self, v, wide):
        pad = (self.field.zero_v,) * (wide.precision - self.precision)
        return (v[0], tuple(v[1]) + pad, tuple(v[2]) + pad)

    def random_v(self, rng: SplitMix64, max_support: Optional[int] = None):
        s = self.scope if max_support is None else max_support
        F = self.field
        a = F.random_v(rng)
        xs = [F.zero_v] * self.precision
        ys = [F.zero_v] * self.precision
        for _ in range(rng.below(3)):
            xs[rng.below(s)] = F.random_v(rng)
        for _ in range(rng.below(3)):
            ys[rng.below(s)] = F.random_v(rng)
        return (a, tuple(xs), tuple(ys))

    def sort_key_v(self, v):
        F = self.field
        return (F.sort_key_v(v[0]),
                tuple(F.sort_key_v(c) for c in v[1]),
                tuple(F.sort_key_v(c) for c in v[2]))

    def text_of_v(self, v):
        F = self.field
        xs = ",".join(F.text_of_v(c) for c in v[1])
        ys = ",".join(F.text_of_v(c) for c in v[2])
        return "(%s;[%s];[%s])" % (F.text_of_v(v[0]), xs, ys)

    def v_of_text(self, text):
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError("bad element %r for %s" % (text, self.spec_text))
        parts = split_top(s[1:-1], ";")
        if len(parts) != 3:
            raise ValueError("xyq element %r needs (const;[x-block];[y-block])" % text)
        F = self.field
        a = F.v_of_text(parts[0])
        blocks = []
        for part in parts[1:]:
            t = part.strip()
            if not (t.startswith("[") and t.endswith("]")):
                raise ValueError("bad xyq block %r" % part)
            entries = [e for e in split_top(t[1:-1], ",") if e.strip() != ""]
            if len(entries) > self.precision:
                raise ValueError("xyq block %r exceeds precision %d"
                                 % (part, self.precision))
            coeffs = [F.v_of_text(e) for e in entries]
            coeffs += [F.zero_v] * (self.precision - len(coeffs))
            blocks.append(tuple(coeffs))
        return (a, blocks[0], blocks[1])


# ---------------------------------------------------------------------------
# construction and validation

_RING_CACHE: dict = {}


def construct_ring(spec) -> RingHandle:
    """Build (or fetch) the ring for a spec value or spec text.  Validates
    arithmetic axioms on first construction; raises RingConstructionError
    on any failure."""
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    key = spec_to_text(spec)
    cached = _RING_CACHE.get(key)
    if cached is not None:
        return cached
    if isinstance(spec, ZmodSpec):
        ring = ZmodRing(spec)
    elif isinstance(spec, GFSpec):
        ring = GaloisFieldRing(spec)
    elif isinstance(spec, ProductSpec):
        ring = ProductRing(spec, tuple(construct_ring(f) for f in spec.factors))
    elif isinstance(spec, SubringSpec):
        ring = SubRing(spec, construct_ring(spec.parent))
    elif isinstance(spec, QuotientSpec):
        ring = QuotientRing(spec, construct_ring(spec.parent))
    elif isinstance(spec, TruncSeriesSpec):
        ring = TruncSeriesRing(spec, construct_ring(spec.base))
    elif isinstance(spec, XYQuotientSpec):
        ring = XYQuotientRing(spec, construct_ring(spec.field))
    else:
        raise RingConstructionError("unknown spec %r" % (spec,))
    _validate_ring(ring)
    _RING_CACHE[key] = ring
    return ring


def _axiom_triples(ring):
    if not ring.truncated:
        vals = ring.values()
        n = len(vals)
        if n ** 3 <= AXIOM_TRIPLE_BUDGET:
            return itertools.product(vals, vals, vals), True
        samples = (PRODUCT_AXIOM_SAMPLES if ring.componentwise
                   else AXIOM_SAMPLES)
        rng = SplitMix64(CONSTRUCTION_SEED ^ fnv1a64(ring.spec_text))
        return (((vals[rng.below(n)], vals[rng.below(n)], vals[rng.below(n)])
                 for _ in range(samples)), False)
    pool = ring.scope_values()
    n = len(pool)
    rng = SplitMix64(CONSTRUCTION_SEED ^ fnv1a64(ring.spec_text))
    return (((pool[rng.below(n)], pool[rng.below(n)], pool[rng.below(n)])
             for _ in range(TRUNCATED_AXIOM_SAMPLES)), False)


def _validate_ring(ring):
    """Identity laws on every (finite) or a deterministic slice of scope
    (truncated) elements, then associativity/distributivity on exhaustive
    or sampled triples."""
    if ring.truncated:
        pool = ring.scope_values()
        pool = pool[::max(1, len(pool) // 512)]
    else:
        pool = ring.values()
    z, o = ring.zero_v, ring.one_v
    if z == o:
        raise RingConstructionError("%s: zero equals one" % ring.spec_text)
    for a in pool:
        if ring.k_add(z, a) != a or ring.k_add(a, z) != a:
            raise RingConstructionError("%s: additive identity fails at %s"
                                        % (ring.spec_text, ring.text_of_v(a)))
        if ring.k_mul(o, a) != a or ring.k_mul(a, o) != a:
            raise RingConstructionError("%s: unity fails at %s"
                                        % (ring.spec_text, ring.text_of_v(a)))
        if ring.k_add(a, ring.k_neg(a)) != z:
            raise RingConstructionError("%s: negation fails at %s"
                                        % (ring.spec_text, ring.text_of_v(a)))
    triples, _exhaustive = _axiom_triples(ring)
    for a, b, c in triples:
        if ring.k_add(ring.k_add(a, b), c) != ring.k_add(a, ring.k_add(b, c)):
            raise RingConstructionError("%s: + not associative" % ring.spec_text)
        if ring.k_add(a, b) != ring.k_add(b, a):
            raise RingConstructionError("%s: + not commutative" % ring.spec_text)
        ab = ring.k_mul(a, b)
        if ring.k_mul(ab, c) != ring.k_mul(a, ring.k_mul(b, c)):
            raise RingConstructionError("%s: * not associative" % ring.spec_text)
        if ring.k_mul(a, ring.k_add(b, c)) != ring.k_add(ab, ring.k_mul(a, c)):
            raise RingConstructionError("%s: left distributivity fails" % ring.spec_text)
        if ring.k_mul(ring.k_add(a, b), c) != ring.k_add(ring.k_mul(a, c),
                                                         ring.k_mul(b, c)):
            raise RingConstructionError("%s: right distributivity fails" % ring.spec_text)
        if ring.commutative and ab != ring.k_mul(b, a):
            raise RingConstructionError("%s: * not commutative" % ring.spec_text)


# ---------------------------------------------------------------------------
# predicates and derived sets (finite rings unless noted)


def units(ring) -> SubsetHandle:
    got = ring._cache.get("units")
    if got is None:
        m = ring._unit_map()
        got = SubsetHandle(ring, m.keys(), "units")
        ring._cache["units"] = got
    return got


def nonunits(ring) -> SubsetHandle:
    u = set(units(ring).vals)
    return SubsetHandle(ring, [v for v in ring.values() if v not in u], "nonunits")


def is_unit(ring, a: Element):
    """Inverse element, or None."""
    inv = ring.is_unit_v(a.v)
    return None if inv is None else Element(ring, inv)


@dataclass(frozen=True)
class NilpotenceResult:
    nilpotent: bool
    index: Optional[int]
    exact: bool
    note: str


def is_nilpotent(ring, a: Element, bound: int = 16) -> NilpotenceResult:
    """Exact on finite rings via power-cycle detection.  On truncated
    models the scan replays in a widened ring: a zero power whose factors
    stayed inside the widened window is genuine, otherwise the verdict is
    flagged bound-relative."""
    if not ring.truncated:
        seen = set()
        p = a.v
        k = 1
        while p not in seen:
            if p == ring.zero_v:
                return NilpotenceResult(True, k, True, "zero power reached")
            seen.add(p)
            p = ring.k_mul(p, a.v)
            k += 1
        return NilpotenceResult(False, None, True, "power cycle without zero")
    wide = ring.widen(2)
    av = ring.lift_v(a.v, wide)
    half = wide.precision // 2
    p = av
    clean = ring.support_v(a.v) <= half
    for k in range(2, bound + 1):
        p = wide.k_mul(p, av)
        if p == wide.zero_v:
            note = ("zero power reached in widened model"
                    if clean else "zero power reached; truncation artifact possible")
            return NilpotenceResult(True, k, clean, note)
        if wide.support_v(p) > half:
            clean = False
    return NilpotenceResult(False, None, False,
                            "no zero power within bound %d at scope" % bound)


def zero_divisors(ring, side: str = "right") -> SubsetHandle:
    """Right zero-divisors: a with b*a = 0 for some b != 0 (zero included).
    side="left" mirrors."""
    key = ("zero_divisors", side)
    got = ring._cache.get(key)
    if got is None:
        vals = ring.values()
        z = ring.zero_v
        found = []
        for a in vals:
            for b in vals:
                if b == z:
                    continue
                prod = ring.k_mul(b, a) if side == "right" else ring.k_mul(a, b)
                if prod == z:
                    found.append(a)
                    break
        got = SubsetHandle(ring, found, "zero-divisors-%s" % side)
        ring._cache[key] = got
    return got


def idempotents(ring) -> SubsetHandle:
    got = ring._cache.get("idempotents")
    if got is None:
        got = SubsetHandle(ring, [v for v in ring.values()
                                  if ring.k_mul(v, v) == v], "idempotents")
        ring._cache["idempotents"] = got
    return got


def jacobson_radical(ring) -> SubsetHandle:
    """Quasi-regularity scan: a is in the radical iff 1 - r*a is a unit
    for every r."""
    got = ring._cache.get("jacobson")
    if got is None:
        vals = ring.values()
        o = ring.one_v
        umap = ring._unit_map()
        out = []
        for a in vals:
            ok = True
            for r in vals:
                t = ring.k_sub(o, ring.k_mul(r, a))
                if t not in umap:
                    ok = False
                    break
            if ok:
                out.append(a)
        got = SubsetHandle(ring, out, "jacobson-radical")
        ring._cache["jacobson"] = got
    return got


def principal_power_chain(ring, a: Element, side: str = "right"):
    """Descending sets R*a^n (side="right") or a^n*R (side="left"),
    stopping at the first repeat.  Returns (chain, stabilized set)."""
    vals = ring.values()
    chain = []
    power = a.v
    prev = None
    while True:
        if side == "right":
            cur = frozenset(ring.k_mul(r, power) for r in vals)
        else:
            cur = frozenset(ring.k_mul(power, r) for r in vals)
        if prev is not None and cur == prev:
            break
        handle = SubsetHandle(ring, cur, "%s^%d" % (a.text, len(chain) + 1))
        chain.append(handle)
        prev = cur
        power = ring.k_mul(power, a.v)
        if len(chain) > len(vals) + 1:
            raise RuntimeError("power chain failed to stabilize")
    return chain, chain[-1]


@dataclass(frozen=True)
class ReducedResult:
    reduced: bool
    witness: Optional[Element]     # a nonzero square-zero element
    exact: bool
    note: str


def is_reduced(ring, bound: int = 16) -> ReducedResult:
    """A ring has a nonzero nilpotent iff it has a nonzero square-zero
    element, so one square scan decides.  Truncated models scan scope
    elements with squares taken in the widened ring."""
    got = ring._cache.get("reduced")
    if got is not None:
        return got
    if not ring.truncated:
        res = ReducedResult(True, None, True, "exhaustive square scan")
        for a in ring.values():
            if a != ring.zero_v and ring.k_mul(a, a) == ring.zero_v:
                res = ReducedResult(False, Element(ring, a), True,
                                    "square-zero witness")
                break
    else:
        wide = ring.widen(2)
        res = ReducedResult(True, None, False,
                            "scope-exact square scan, support <= %d" % ring.bounded_support())
        for a in ring.scope_values():
            if a == ring.zero_v:
                continue
            lifted = ring.lift_v(a, wide)
            if wide.k_mul(lifted, lifted) == wide.zero_v:
                res = ReducedResult(False, Element(ring, a), False,
                                    "square-zero witness (exact in widened model)")
                break
    ring._cache["reduced"] = res
    return res


@dataclass(frozen=True)
class DomainResult:
    domain: bool
    witness: Optional[tuple]       # (a, b) nonzero with a*b = 0
    exact: bool
    note: str


def is_domain(ring) -> DomainResult:
    got = ring._cache.get("domain")
    if got is not None:
        return got
    if not ring.truncated:
        res = DomainResult(True, None, True, "exhaustive pair scan")
        vals = ring.values()
        z = ring.zero_v
        done = False
        for a in vals:
            if a == z:
                continue
            for b in vals:
                if b != z and ring.k_mul(a, b) == z:
                    res = DomainResult(False, (Element(ring, a), Element(ring, b)),
                                       True, "zero product witness")
                    done = True
                    break
            if done:
                break
    else:
        wide = ring.widen(2)
        res = DomainResult(True, None, False,
                           "scope-exact pair scan, support <= %d" % ring.bounded_support())
        pool = ring.scope_values()
        z = ring.zero_v
        done = False
        for a in pool:
            if a == z:
                continue
            la = ring.lift_v(a, wide)
            for b in pool:
                if b == z:
                    continue
                if wide.k_mul(la, ring.lift_v(b, wide)) == wide.zero_v:
                    res = DomainResult(False, (Element(ring, a), Element(ring, b)),
                                       False, "zero product (exact in widened model)")
                    done = True
                    break
            if done:
                break
    ring._cache["domain"] = res
    return res


def subring_generated(ring, gens):
    """Closure of {0, 1, gens} under ring operations.  Returns the subring
    handle, the embedding into the ambient ring, and a unit-condition report
    saying whether every ambient unit lying in the subring is invertible
    inside the subring."""
    texts = []
    for g in gens:
        if isinstance(g, Element):
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            texts.append(g.text)
        else:
            texts.append(ring.from_text(g).text)
    canon = sorted(set(texts), key=lambda t: ring.sort_key_v(ring.v_of_text(t)))
    sub = construct_ring(SubringSpec(ring.spec, tuple(canon)))

    def embed(e: Element) -> Element:
        if e.ring != sub:
            raise RingMismatchError("element not in the subring")
        return Element(ring, e.v)

    ambient_unit_texts = set(units(ring).texts())
    sub_unit_texts = set(units(sub).texts())
    shared = sorted(
        (t for t in (e.text for e in sub.elements()) if t in ambient_unit_texts),
        key=lambda t: ring.sort_key_v(ring.v_of_text(t)),
    )
    stranded = [t for t in shared if t not in sub_unit_texts]
    unit_condition = {
        "ambient_units_in_subring": shared,
        "all_invertible_inside": not stranded,
        "counterexample": stranded[0] if stranded else None,
    }
    return sub, embed, unit_condition


def quotient_by_ideal(ring, ideal):
    """Quotient by the ideal generated by a SubsetHandle or a generator
    list.  Returns the quotient handle and the projection map."""
    if isinstance(ideal, SubsetHandle):
        gens = ideal.texts()
    else:
        gens = [g.text if isinstance(g, Element) else ring.from_text(g).text
                for g in ideal]
    canon = sorted(set(gens), key=lambda t: ring.sort_key_v(ring.v_of_text(t)))
    quo = construct_ring(QuotientSpec(ring.spec, tuple(canon)))

    def project(e: Element) -> Element:
        if e.ring != ring:
            raise RingMismatchError("element not in the ambient ring")
        return Element(quo, quo.project_v(e.v))

    return quo, project
