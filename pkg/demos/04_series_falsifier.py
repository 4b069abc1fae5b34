"""Hunting shrinking-power failures in the truncated series model.

The falsifier looks for a nonunit series g and a nonzero f divisible by
every power g^n up to the requested depth, with divisibility certified
to persist beyond the truncation window.  Such a pair witnesses that the
series model fails the shrinking-power property.  Three outcomes appear
below: an explicit chain over zmod:6, a theorem shortcut over a field
with the squaring twist (rigid twist, reduced coefficients: no chain can
exist, so the search is skipped), and an inconclusive run over zmod:8
whose twist fails rigidity, leaving the hypotheses unmet.
"""

from skewarch import archimedean_falsifier, build_endo, construct_ring, parse_poly_text


def run(spec, endo_spec="endo:id"):
    ring = construct_ring(spec)
    endo = build_endo(ring, endo_spec)
    v = archimedean_falsifier(ring, endo, seed=0)
    print("== %s with %s ==" % (spec, endo_spec))
    print("  status: %s" % v.status)
    if v.theorem_tags:
        print("  tags: %s" % ", ".join(v.theorem_tags))
    if v.status == "fails":
        f = parse_poly_text(v.witness["f"])
        g = parse_poly_text(v.witness["g"])
        print("  f = %s" % v.witness["f"])
        print("  g = %s" % v.witness["g"])
        print("  stabilized constant chain: {%s}"
              % ",".join(v.witness["stabilized"]))
        for n, ht in enumerate(v.witness["h"], start=1):
            h = parse_poly_text(ht)
            power = g
            for _ in range(n - 1):
                power = power * g
            assert h * power == f
            print("  depth %d replays: h_%d * g^%d = f with h_%d = %s"
                  % (n, n, n, n, ht))
    elif v.witness is not None:
        print("  witness: %s" % v.witness)
    print("  certificate: %s" % v.certificate)
    print()


def main():
    run("zmod:6")                   # constant chain f = g = 2 found
    run("gf:2:2", "endo:frob")      # ruled out structurally, search skipped
    run("zmod:8")                   # rigidity hypothesis unmet


if __name__ == "__main__":
    main()
