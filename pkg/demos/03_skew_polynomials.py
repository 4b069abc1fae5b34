"""Twisted polynomial arithmetic and the geometric inverse.

Polynomials here multiply under the rule u*a = alpha(a)*u, so a
nontrivial twist alpha rewrites coefficients whenever u moves past one.  The script first makes the rule visible over gf:2:2
with the squaring twist, then inverts 1 + f*u inside the truncated
series ring: the expansion 1 - f*u + (f*u)^2 - ... terminates exactly
when f*u is nilpotent, and the termination index matches an independent
nilpotency probe.
"""

from skewarch import SkewPoly, build_endo, construct_ring, geometric_inverse, nilpotency_probe


def pretty(poly):
    ring = poly.ring
    terms = []
    for k, c in enumerate(poly.coeffs):
        if c == ring.zero_v:
            continue
        text = ring.text_of_v(c)
        terms.append(text if k == 0 else
                     "%s*u^%d" % (text, k) if k > 1 else "%s*u" % text)
    return " + ".join(terms) if terms else "0"


def twisted_product_rule():
    ring = construct_ring("gf:2:2")
    frob = build_endo(ring, "endo:frob")
    u = SkewPoly.variable(ring, frob)
    for text in ("[0,1]", "[1,1]"):
        a = SkewPoly.constant(ring, frob, ring.v_of_text(text))
        print("  u * %s = %s   (twist rewrites the coefficient)"
              % (text, pretty(u * a)))
        print("  %s * u = %s" % (text, pretty(a * u)))


def invert(spec, coeff_text, precision=8):
    ring = construct_ring(spec)
    endo = build_endo(ring, "endo:id")
    f = SkewPoly.constant(ring, endo, ring.v_of_text(coeff_text))
    result = geometric_inverse(f, precision)
    probe = nilpotency_probe(f.shift(1))
    print("== invert 1 + %s*u over %s at N=%d ==" % (coeff_text, spec,
                                                     precision))
    print("  inverse: %s" % pretty(result.series))
    print("  %s" % result.note)
    if result.terminated:
        print("  probe agrees: (f*u)^%d = 0 and no earlier power vanishes"
              % probe.index)
    else:
        print("  probe agrees: no vanishing power up to the bound "
              "(zero found: %s)" % probe.zero_power_found)
    print()


def main():
    print("== the rule u*a = alpha(a)*u over gf:2:2 with the squaring "
          "twist ==")
    twisted_product_rule()
    print()
    invert("zmod:8", "2")   # 2^3 = 0, so the inverse is a polynomial
    invert("zmod:6", "2")   # 2 is not nilpotent; the expansion fills N


if __name__ == "__main__":
    main()
