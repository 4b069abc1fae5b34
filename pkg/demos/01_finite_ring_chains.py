"""Principal power chains in small finite rings.

For a nonunit a the sets R*a, R*a^2, ... shrink and, because the ring is
finite, stabilize after finitely many steps.  The shrinking-power
property asks that the stabilized set be {0} for every nonunit; this
script shows one ring where that holds and two where a single element
breaks it.
"""

from skewarch import (
    construct_ring,
    is_archimedean,
    nonunits,
    principal_power_chain,
    units,
)


def show_ring(spec):
    ring = construct_ring(spec)
    print("== %s (%d elements) ==" % (spec, ring.card))
    print("units:    %s" % ", ".join(units(ring).texts()))
    print("nonunits: %s" % ", ".join(nonunits(ring).texts()))
    for a in ring.elements():
        if a.v not in nonunits(ring):
            continue
        chain, stabilized = principal_power_chain(ring, a)
        steps = " > ".join("{%s}" % ",".join(s.texts()) for s in chain)
        print("  a=%s: %s  stabilizes at {%s}"
              % (a, steps, ",".join(stabilized.texts())))
    for side in ("right", "left"):
        v = is_archimedean(ring, side=side)
        line = "%s-sided verdict: %s" % (side, v.status)
        if v.witness is not None:
            line += "  witness a=%s, stabilized {%s}" % (
                v.witness["a"], ",".join(v.witness["stabilized"]))
        print(line)
    print()


def main():
    show_ring("zmod:8")                 # every chain shrinks to {0}
    show_ring("zmod:6")                 # a=2 stabilizes at {0,2,4}
    show_ring("prod(zmod:2,zmod:2)")    # idempotent coordinates survive


if __name__ == "__main__":
    main()
