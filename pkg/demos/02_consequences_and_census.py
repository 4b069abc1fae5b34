"""Structural consequences of the shrinking-power property.

A finite ring with the property on one side forces sandwich relations
a = bac to produce units, traps zero-divisors inside the Jacobson
radical, rules out nontrivial idempotents, and gives Dedekind
finiteness.  On a ring without the property the suite reports which
clause breaks and exhibits the witness.  The census then sweeps all
products of up to three small fields: every product is von Neumann
regular, but only the one-factor products (the fields themselves) keep
the shrinking-power property, matching the division-ring
characterization for regular rings.
"""

from skewarch import archimedean_consequence_suite, archimedean_field_census, construct_ring


def show_suite(spec):
    ring = construct_ring(spec)
    out = archimedean_consequence_suite(ring)
    print("== %s ==" % spec)
    for name, verdict in out.items():
        line = "  %-24s %s" % (name, verdict.status)
        if verdict.witness is not None and name != "aggregate":
            line += "  %s" % verdict.witness
        print(line)
    print()


def main():
    show_suite("zmod:8")    # all four clauses hold
    show_suite("zmod:6")    # idempotent 3 = 3^2 breaks the property
    show_suite("prod(zmod:2,zmod:2)")

    print("== census: products of fields gf:2, gf:3, gf:4, gf:5 ==")
    rows = archimedean_field_census()
    print("%-28s %9s %8s %9s %12s" % ("spec", "elements", "regular",
                                      "division", "archimedean"))
    for row in rows:
        print("%-28s %9d %8s %9s %12s"
              % (row["spec"], row["cardinality"], row["regular"],
                 row["division"], row["archimedean"]))
    only_fields = all(row["archimedean"] == (row["factors"] == 1)
                      for row in rows)
    print("\nshrinking-power property iff a single factor: %s" % only_fields)


if __name__ == "__main__":
    main()
