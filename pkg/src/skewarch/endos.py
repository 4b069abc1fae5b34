"""Ring endomorphisms used as twists for skew polynomials and series.

An endomorphism is validated at build time: it must fix 1 and respect +
and * (exhaustively on finite rings, on a generating set plus sampled
scope pairs on truncated models).  Rejection carries a witness pair.

Predicate semantics on truncated models follow the scope rule: scans run
over support-bounded elements and every product is evaluated in a
widened copy of the ring, so a reported zero is never a truncation
artifact.  Results carry exact=False plus a note in that case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .prng import CONSTRUCTION_SEED, SplitMix64, fnv1a64
from .rings import Element, RingConstructionError, construct_ring

ENDO_SAMPLE_PAIRS = 10_000
POWER_CACHE_DEPTH = 16
PAIR_SCAN_BUDGET = 40_000     # quadratic scope scans shrink support to fit


class EndoValidationError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class Endo:
    """A validated ring endomorphism with cached powers."""

    def __init__(self, ring, name: str):
        self.ring = ring
        self.name = name
        self.text = "endo:" + name
        self.is_identity = name == "id"
        self._power_maps = None
        self._cache = {}

    def __eq__(self, other):
        return (isinstance(other, Endo) and other.ring == self.ring
                and other.text == self.text)

    def __hash__(self):
        return hash((self.ring.spec_text, self.text))

    def __repr__(self):
        return "<%s on %s>" % (self.text, self.ring.spec_text)

    def apply_v(self, v):
        raise NotImplementedError

    def power_apply_v(self, t: int, v):
        """Apply the t-th power of the map.  Finite rings build value maps
        once and reuse them up to at least POWER_CACHE_DEPTH."""
        if t == 0 or self.is_identity:
            return v
        if self.ring.truncated:
            out = v
            for _ in range(t):
                out = self.apply_v(out)
            return out
        if self._power_maps is None:
            base = {a: self.apply_v(a) for a in self.ring.values()}
            self._power_maps = [base]
        while len(self._power_maps) < t:
            last = self._power_maps[-1]
            base = self._power_maps[0]
            self._power_maps.append({a: base[b] for a, b in last.items()})
        return self._power_maps[t - 1][v]

    def apply(self, e: Element) -> Element:
        return Element(self.ring, self.apply_v(e.v))

    def on_widened(self, wide_ring):
        """The same structural rule on a widened copy of a truncated ring."""
        raise EndoValidationError("%s cannot be widened" % self.text)


class IdentityEndo(Endo):
    def __init__(self, ring):
        super().__init__(ring, "id")

    def apply_v(self, v):
        return v

    def on_widened(self, wide_ring):
        return IdentityEndo(wide_ring)


class FrobeniusEndo(Endo):
    """a -> a^p on GF(p^k)."""

    def __init__(self, ring):
        if ring.kind != "gf":
            raise EndoValidationError("endo:frob needs a gf ring, got %s"
                                      % ring.spec_text)
        super().__init__(ring, "frob")

    def apply_v(self, v):
        return self.ring.k_pow(v, self.ring.p)


class DiagonalEndo(Endo):
    """(a, b) -> (a, a) on a square product of two identical factors."""

    def __init__(self, ring):
        if (ring.kind != "prod" or len(ring.factors) != 2
                or ring.factors[0].spec_text != ring.factors[1].spec_text):
            raise EndoValidationError("endo:diag needs prod(S,S), got %s"
                                      % ring.spec_text)
        super().__init__(ring, "diag")

    def apply_v(self, v):
        return (v[0], v[0])


class SquareVariableEndo(Endo):
    """x -> x^2, y -> y, constants fixed, on the two-variable quotient.
    Degrees that double past the precision are truncated away; the result
    is still an endomorphism of the truncated model."""

    def __init__(self, ring):
        if ring.kind != "xyq":
            raise EndoValidationError("endo:xsq needs an xyq ring, got %s"
                                      % ring.spec_text)
        super().__init__(ring, "xsq")

    def apply_v(self, v):
        F = self.ring.field
        N = self.ring.precision
        xs = [F.zero_v] * N
        for i, c in enumerate(v[1]):
            if c != F.zero_v:
                doubled = 2 * (i + 1)
                if doubled <= N:
                    xs[doubled - 1] = c
        return (v[0], tuple(xs), v[2])

    def power_apply_v(self, t: int, v):
        if t == 0:
            return v
        F = self.ring.field
        N = self.ring.precision
        shift = 1 << t
        xs = [F.zero_v] * N
        for i, c in enumerate(v[1]):
            if c != F.zero_v:
                moved = (i + 1) * shift
                if moved <= N:
                    xs[moved - 1] = c
        return (v[0], tuple(xs), v[2])

    def on_widened(self, wide_ring):
        return SquareVariableEndo(wide_ring)


class TableEndo(Endo):
    """Full association table read from a file of "src -> dst" lines."""

    def __init__(self, ring, path: str):
        if ring.truncated:
            raise EndoValidationError("endo:table needs a finite ring")
        super().__init__(ring, "table:" + path)
        table = {}
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "->" not in line:
                    raise EndoValidationError("bad table line %r" % line)
                src, dst = line.split("->", 1)
                table[ring.v_of_text(src.strip())] = ring.v_of_text(dst.strip())
        missing = [v for v in ring.values() if v not in table]
        if missing:
            raise EndoValidationError("table leaves %d elements unmapped"
                                      % len(missing))
        self.table = table

    def apply_v(self, v):
        return self.table[v]


def _scope_generators(ring):
    gens = [ring.one_v]
    if ring.kind == "xyq":
        for k in range(1, ring.precision + 1):
            gens.append(ring.x_v(k))
            gens.append(ring.y_v(k))
        for fv in ring.field.values():
            fz = ring.field.zero_v
            gens.append((fv, (fz,) * ring.precision, (fz,) * ring.precision))
    elif ring.kind == "tser":
        for k in range(1, ring.precision + 1):
            gens.append(ring.monomial_v(k))
        for bv in ring.base.values():
            gens.append(ring.monomial_v(0, bv))
    return gens


def _validate_endo(endo: Endo):
    ring = endo.ring
    if endo.apply_v(ring.one_v) != ring.one_v:
        raise EndoValidationError(
            "%s on %s does not fix 1" % (endo.text, ring.spec_text),
            {"law": "unity"})

    def check_pair(a, b):
        la = endo.apply_v(a)
        lb = endo.apply_v(b)
        s = endo.apply_v(ring.k_add(a, b))
        if s != ring.k_add(la, lb):
            raise EndoValidationError(
                "%s on %s is not additive" % (endo.text, ring.spec_text),
                {"law": "+", "a": ring.text_of_v(a), "b": ring.text_of_v(b),
                 "image_of_sum": ring.text_of_v(s),
                 "sum_of_images": ring.text_of_v(ring.k_add(la, lb))})
        m = endo.apply_v(ring.k_mul(a, b))
        if m != ring.k_mul(la, lb):
            raise EndoValidationError(
                "%s on %s is not multiplicative" % (endo.text, ring.spec_text),
                {"law": "*", "a": ring.text_of_v(a), "b": ring.text_of_v(b),
                 "image_of_product": ring.text_of_v(m),
                 "product_of_images": ring.text_of_v(ring.k_mul(la, lb))})

    if not ring.truncated:
        vals = ring.values()
        for a in vals:
            for b in vals:
                check_pair(a, b)
        return
    gens = _scope_generators(ring)
    for a in gens:
        for b in gens:
            check_pair(a, b)
    pool = ring.scope_values()
    rng = SplitMix64(CONSTRUCTION_SEED ^ fnv1a64(ring.spec_text + "/" + endo.text))
    n = len(pool)
    for _ in range(ENDO_SAMPLE_PAIRS):
        check_pair(pool[rng.below(n)], pool[rng.below(n)])


_ENDO_CACHE: dict = {}


def build_endo(ring, text: str) -> Endo:
    """Parse endo:id | endo:frob | endo:xsq | endo:diag | endo:table:<file>
    against a ring and validate the homomorphism laws."""
    s = text.strip()
    cached = _ENDO_CACHE.get((ring.spec_text, s))
    if cached is not None:
        return cached
    if not s.startswith("endo:"):
        raise EndoValidationError("endo spec must start with 'endo:': %r" % text)
    body = s[5:]
    if body == "id":
        endo = IdentityEndo(ring)
    elif body == "frob":
        endo = FrobeniusEndo(ring)
    elif body == "diag":
        endo = DiagonalEndo(ring)
    elif body == "xsq":
        endo = SquareVariableEndo(ring)
    elif body.startswith("table:"):
        endo = TableEndo(ring, body[6:])
    else:
        raise EndoValidationError("unrecognized endo spec: %r" % text)
    _validate_endo(endo)
    if not body.startswith("table:"):   # table files can change on disk
        _ENDO_CACHE[(ring.spec_text, s)] = endo
    return endo


# ---------------------------------------------------------------------------
# predicates


@dataclass(frozen=True)
class EndoVerdict:
    holds: bool
    witness: Optional[dict]
    exact: bool
    note: str


def _scope_setup(endo: Endo):
    ring = endo.ring
    wide = ring.widen(2)
    wendo = endo.on_widened(wide)
    pool = ring.scope_values()
    return ring, wide, wendo, pool


def is_injective(endo: Endo) -> EndoVerdict:
    got = endo._cache.get("injective")
    if got is not None:
        return got
    ring = endo.ring
    if not ring.truncated:
        seen = {}
        res = EndoVerdict(True, None, True, "exhaustive image scan")
        for a in ring.values():
            img = endo.apply_v(a)
            if img in seen:
                res = EndoVerdict(False,
                                  {"a": ring.text_of_v(seen[img]),
                                   "b": ring.text_of_v(a),
                                   "image": ring.text_of_v(img)},
                                  True, "image collision")
                break
            seen[img] = a
    else:
        ring, wide, wendo, pool = _scope_setup(endo)
        seen = {}
        res = EndoVerdict(True, None, False,
                          "scope-exact image scan, support <= %d" % ring.bounded_support())
        for a in pool:
            img = wendo.apply_v(ring.lift_v(a, wide))
            if img in seen:
                res = EndoVerdict(False,
                                  {"a": ring.text_of_v(seen[img]),
                                   "b": ring.text_of_v(a),
                                   "image": wide.text_of_v(img)},
                                  False, "image collision at scope")
                break
            seen[img] = a
    endo._cache["injective"] = res
    return res


def is_rigid(endo: Endo) -> EndoVerdict:
    """No nonzero a with a * endo(a) = 0."""
    got = endo._cache.get("rigid")
    if got is not None:
        return got
    ring = endo.ring
    if not ring.truncated:
        res = EndoVerdict(True, None, True, "exhaustive scan of a*alpha(a)")
        for a in ring.values():
            if a != ring.zero_v and ring.k_mul(a, endo.apply_v(a)) == ring.zero_v:
                res = EndoVerdict(False, {"a": ring.text_of_v(a)}, True,
                                  "a*alpha(a) = 0 with a != 0")
                break
    else:
        ring, wide, wendo, pool = _scope_setup(endo)
        res = EndoVerdict(True, None, False,
                          "scope-exact scan of a*alpha(a), support <= %d" % ring.bounded_support())
        for a in pool:
            if a == ring.zero_v:
                continue
            la = ring.lift_v(a, wide)
            if wide.k_mul(la, wendo.apply_v(la)) == wide.zero_v:
                res = EndoVerdict(False, {"a": ring.text_of_v(a)}, False,
                                  "a*alpha(a) = 0 in the widened model")
                break
    endo._cache["rigid"] = res
    return res


def is_compatible(endo: Endo) -> EndoVerdict:
    """a*b = 0 iff a*endo(b) = 0, over all (scope) pairs."""
    got = endo._cache.get("compatible")
    if got is not None:
        return got
    ring = endo.ring

    def verdict_for(pool, mul, lifted, images, zero, exact, note):
        for i, la in enumerate(lifted):
            for j, lb in enumerate(lifted):
                plain = mul(la, lb)
                twisted = mul(la, images[j])
                if (plain == zero) != (twisted == zero):
                    direction = ("a*b = 0 but a*alpha(b) != 0"
                                 if plain == zero else
                                 "a*alpha(b) = 0 but a*b != 0")
                    return EndoVerdict(False,
                                       {"a": ring.text_of_v(pool[i]),
                                        "b": ring.text_of_v(pool[j]),
                                        "direction": direction},
                                       exact, direction)
        return EndoVerdict(True, None, exact, note)

    if not ring.truncated:
        pool = ring.values()
        res = verdict_for(pool, ring.k_mul, pool,
                          [endo.apply_v(v) for v in pool], ring.zero_v,
                          True, "exhaustive pair scan")
    else:
        rr, wide, wendo, pool = _scope_setup(endo)
        s = rr.bounded_support()
        while s > 1 and len(pool) * len(pool) > PAIR_SCAN_BUDGET:
            s -= 1
            pool = rr.scope_values(max_support=s)
        lifted = [rr.lift_v(v, wide) for v in pool]
        res = verdict_for(pool, wide.k_mul, lifted,
                          [wendo.apply_v(lv) for lv in lifted], wide.zero_v,
                          False, "scope-exact pair scan, support <= %d" % s)
    endo._cache["compatible"] = res
    return res


def preserves_nonunits(endo: Endo) -> EndoVerdict:
    """Images of nonunits stay nonunits."""
    got = endo._cache.get("preserves_nonunits")
    if got is not None:
        return got
    ring = endo.ring
    if not ring.truncated:
        res = EndoVerdict(True, None, True, "exhaustive nonunit scan")
        for a in ring.values():
            if ring.is_unit_v(a) is None and ring.is_unit_v(endo.apply_v(a)) is not None:
                res = EndoVerdict(False,
                                  {"a": ring.text_of_v(a),
                                   "image": ring.text_of_v(endo.apply_v(a))},
                                  True, "nonunit mapped to a unit")
                break
    else:
        # unit test in a truncated model reads the constant term, which the
        # model computes exactly, so no widening is needed here
        res = EndoVerdict(True, None, False,
                          "scope-exact nonunit scan, support <= %d" % ring.bounded_support())
        for a in ring.scope_values():
            if ring.is_unit_v(a) is None and ring.is_unit_v(endo.apply_v(a)) is not None:
                res = EndoVerdict(False,
                                  {"a": ring.text_of_v(a),
                                   "image": ring.text_of_v(endo.apply_v(a))},
                                  False, "nonunit mapped to a unit at scope")
                break
    endo._cache["preserves_nonunits"] = res
    return res


def rigid_decomposition_check(endo: Endo) -> dict:
    """Rigid iff compatible and the ring is reduced; returns the three
    verdicts plus whether the biconditional held on this instance."""
    from .rings import is_reduced
    rigid = is_rigid(endo)
    compat = is_compatible(endo)
    reduced = is_reduced(endo.ring)
    agrees = rigid.holds == (compat.holds and reduced.reduced)
    return {
        "rigid": rigid,
        "compatible": compat,
        "reduced": reduced,
        "biconditional_holds": agrees,
        "exact": rigid.exact and compat.exact and reduced.exact,
    }
