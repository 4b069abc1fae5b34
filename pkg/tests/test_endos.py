import pytest

from skewarch.endos import (
    EndoValidationError,
    build_endo,
    is_compatible,
    is_injective,
    is_rigid,
    preserves_nonunits,
    rigid_decomposition_check,
)
from skewarch.rings import construct_ring


def _gf4():
    return construct_ring("gf:2:2")


# ---------------------------------------------------------------------------
# frobenius


def test_frobenius_is_the_squaring_map():
    ring = _gf4()
    fr = build_endo(ring, "endo:frob")
    for e in ring.elements():
        assert fr.apply(e) == e * e
    # frob^2 = identity on a 4 element field
    for e in ring.elements():
        assert ring.element(fr.power_apply_v(2, e.v)) == e


def test_frobenius_predicates_on_gf4():
    fr = build_endo(_gf4(), "endo:frob")
    assert is_injective(fr).holds and is_injective(fr).exact
    assert is_rigid(fr).holds
    assert is_compatible(fr).holds
    assert preserves_nonunits(fr).holds


def test_frobenius_needs_a_galois_field():
    with pytest.raises(EndoValidationError):
        build_endo(construct_ring("zmod:6"), "endo:frob")


# ---------------------------------------------------------------------------
# identity


def test_identity_rigid_iff_reduced():
    idz6 = build_endo(construct_ring("zmod:6"), "endo:id")
    assert idz6.is_identity
    assert is_rigid(idz6).holds

    idz8 = build_endo(construct_ring("zmod:8"), "endo:id")
    v = is_rigid(idz8)
    assert not v.holds
    assert v.witness == {"a": "4"}      # 4*4 = 0 mod 8 with 4 != 0


def test_identity_compatible_is_trivial():
    idz8 = build_endo(construct_ring("zmod:8"), "endo:id")
    assert is_compatible(idz8).holds


# ---------------------------------------------------------------------------
# projection onto the diagonal of a square product


def test_diagonal_projection_predicates():
    ring = construct_ring("prod(zmod:2,zmod:2)")
    dg = build_endo(ring, "endo:diag")
    assert dg.apply(ring.from_text("(1,0)")).text == "(1,1)"
    assert dg.apply(ring.from_text("(0,1)")).text == "(0,0)"
    inj = is_injective(dg)
    assert not inj.holds and inj.witness["b"] == "(0,1)"
    rg = is_rigid(dg)
    assert not rg.holds and rg.witness == {"a": "(0,1)"}
    assert not is_compatible(dg).holds
    # (0,1) is not a unit but maps to the zero of the diagonal copy... and
    # (1,0) maps to the unit (1,1): nonunits are not preserved
    assert not preserves_nonunits(dg).holds
    assert preserves_nonunits(dg).witness["a"] == "(1,0)"


def test_diagonal_needs_square_product():
    with pytest.raises(EndoValidationError):
        build_endo(construct_ring("prod(zmod:2,zmod:3)"), "endo:diag")
    with pytest.raises(EndoValidationError):
        build_endo(construct_ring("zmod:4"), "endo:diag")


# ---------------------------------------------------------------------------
# variable squaring on the two variable quotient model


def test_square_variable_action():
    ring = construct_ring("xyq:gf:2:1:N=8")
    xs = build_endo(ring, "endo:xsq")
    x = ring.element(ring.x_v(1))
    y = ring.element(ring.y_v(1))
    assert xs.apply(x).v == ring.x_v(2)
    assert xs.apply(y) == y
    assert ring.element(xs.power_apply_v(2, ring.x_v(1))).v == ring.x_v(4)
    # x^5 -> x^10 leaves the window in the model but not after widening
    assert xs.apply(ring.element(ring.x_v(5))).v == ring.zero_v


def test_square_variable_is_rigid_and_compatible():
    ring = construct_ring("xyq:gf:2:1:N=8")
    xs = build_endo(ring, "endo:xsq")
    assert is_rigid(xs).holds
    assert is_compatible(xs).holds
    assert is_injective(xs).holds       # scope-exact: widened before judging
    assert preserves_nonunits(xs).holds
    report = rigid_decomposition_check(xs)
    assert report["biconditional_holds"]
    assert not report["exact"]


def test_square_variable_needs_the_xy_model():
    with pytest.raises(EndoValidationError):
        build_endo(construct_ring("tser(gf:2:1,N=8)"), "endo:xsq")


def test_decomposition_fails_where_rigidity_fails():
    ring = construct_ring("prod(zmod:2,zmod:2)")
    report = rigid_decomposition_check(build_endo(ring, "endo:diag"))
    assert not report["rigid"].holds
    assert not report["compatible"].holds
    assert report["reduced"].reduced
    assert report["biconditional_holds"]    # not rigid, and not (compat and reduced)


# ---------------------------------------------------------------------------
# table-driven maps


def _write_table(path, pairs):
    path.write_text("# test table\n" + "\n".join("%s -> %s" % p for p in pairs))


def test_table_endo_accepts_a_genuine_endomorphism(tmp_path):
    ring = _gf4()
    fr = build_endo(ring, "endo:frob")
    f = tmp_path / "frob.map"
    _write_table(f, [(e.text, fr.apply(e).text) for e in ring.elements()])
    te = build_endo(ring, "endo:table:%s" % f)
    for e in ring.elements():
        assert te.apply(e) == fr.apply(e)


def test_table_endo_rejects_the_cube_map(tmp_path):
    # a -> a^3 fixes every element of GF(4)* but is not additive
    ring = _gf4()
    f = tmp_path / "cube.map"
    _write_table(f, [(e.text, (e ** 3).text) for e in ring.elements()])
    with pytest.raises(EndoValidationError) as err:
        build_endo(ring, "endo:table:%s" % f)
    assert err.value.witness["law"] == "+"
    assert err.value.witness["a"] == "[1,0]"
    assert err.value.witness["b"] == "[0,1]"
    assert err.value.witness["image_of_sum"] == "[1,0]"
    assert err.value.witness["sum_of_images"] == "[0,0]"


def test_table_endo_rejects_incomplete_tables(tmp_path):
    ring = _gf4()
    f = tmp_path / "partial.map"
    _write_table(f, [("[0,0]", "[0,0]"), ("[1,0]", "[1,0]")])
    with pytest.raises(EndoValidationError):
        build_endo(ring, "endo:table:%s" % f)


def test_table_endo_must_fix_unity(tmp_path):
    ring = construct_ring("zmod:4")
    f = tmp_path / "zero.map"
    _write_table(f, [(str(a), "0") for a in range(4)])
    with pytest.raises(EndoValidationError) as err:
        build_endo(ring, "endo:table:%s" % f)
    assert err.value.witness == {"law": "unity"}


# ---------------------------------------------------------------------------
# grammar


def test_unknown_endo_name_rejected():
    with pytest.raises(EndoValidationError):
        build_endo(construct_ring("zmod:6"), "endo:conjugate")
    with pytest.raises(EndoValidationError):
        build_endo(construct_ring("zmod:6"), "id")        # missing endo: head


def test_endo_equality_and_text():
    r = construct_ring("zmod:6")
    assert build_endo(r, "endo:id") == build_endo(r, "endo:id")
    assert build_endo(r, "endo:id").text == "endo:id"
    fr = build_endo(_gf4(), "endo:frob")
    assert fr.text == "endo:frob"
    assert fr != build_endo(_gf4(), "endo:id")
