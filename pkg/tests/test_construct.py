"""Constructors, bimodule specs, ideal extensions, and the catalog."""

from __future__ import annotations

import numpy as np
import pytest

from ringlab import (
    BimoduleLawViolation,
    BimoduleSpec,
    NotAnIdeal,
    NotIdempotent,
    OrderCapExceeded,
    UnsupportedFieldOrder,
    corner,
    equal_diagonal_subring,
    gf,
    gf4_triangular_example,
    ideal_extension,
    idempotents,
    is_commutative,
    is_local,
    is_uniquely_pi_clean,
    matrix_ring,
    nilpotents,
    predicate_vector,
    product,
    quotient,
    strict_upper_bimodule,
    units,
    upper_triangular,
    validate_ring,
    zmod,
    zn_alpha,
)
from ringlab.construct import T41_SPECS, build_from_provenance


class TestBasicConstructors:
    def test_zmod(self):
        assert zmod(3).order == 3
        assert zmod(1).order == 1
        with pytest.raises(ValueError):
            zmod(0)

    def test_gf4(self):
        g = gf(4)
        assert g.order == 4
        assert len(units(g).members) == 3
        t, t1 = g.elem_names.index("t"), g.elem_names.index("t+1")
        assert g.mul(t, t1) == g.one

    def test_gf_prime_fields_match_zmod(self):
        for q in (2, 3, 5, 7):
            assert gf(q).table_bytes() == zmod(q).table_bytes()

    def test_gf8_gf9_are_fields(self):
        assert len(units(gf(8)).members) == 7
        assert len(units(gf(9)).members) == 8

    def test_unsupported_field_order(self):
        with pytest.raises(UnsupportedFieldOrder):
            gf(6)

    def test_zn_alpha(self):
        assert zn_alpha(2).table_bytes() == gf(4).table_bytes()
        za3 = zn_alpha(3)
        assert za3.order == 9 and is_commutative(za3) and is_uniquely_pi_clean(za3)
        za4 = zn_alpha(4)
        assert za4.order == 16 and is_commutative(za4)

    def test_product(self):
        pr = product(zmod(2), zmod(3))
        assert pr.order == 6
        assert is_uniquely_pi_clean(pr)
        with pytest.raises(OrderCapExceeded):
            product(zmod(100), zmod(100), order_cap=4096)


class TestMatrixShapedRings:
    def test_matrix_ring_m2z2(self):
        m2 = matrix_ring(zmod(2), 2)
        assert m2.order == 16
        assert len(units(m2).members) == 6
        assert m2.name_of(m2.one) == "[[1,0],[0,1]]"

    def test_matrix_ring_counts_match_formulas(self):
        # |GL2(Fq)| = (q^2-1)(q^2-q); idempotent count is 2 + q^2 + q
        for q in (2, 3):
            m2 = matrix_ring(zmod(q), 2)
            assert len(units(m2).members) == (q * q - 1) * (q * q - q)
            assert len(idempotents(m2).members) == 2 + q * q + q

    def test_matrix_multiplication_spot_check(self):
        m2 = matrix_ring(zmod(3), 2)

        def idx(a, b, c, d):
            return m2.elem_names.index(f"[[{a},{b}],[{c},{d}]]")

        # [[1,2],[0,1]] * [[2,0],[1,1]] = [[4,2],[1,1]] = [[1,2],[1,1]] mod 3
        assert m2.mul(idx(1, 2, 0, 1), idx(2, 0, 1, 1)) == idx(1, 2, 1, 1)

    def test_upper_triangular(self):
        t2 = upper_triangular(zmod(2), 2)
        assert t2.order == 8
        t3 = upper_triangular(zmod(3), 2)
        assert t3.order == 27
        assert not is_uniquely_pi_clean(t2)

    def test_equal_diagonal(self):
        ed = equal_diagonal_subring(zmod(2), 2)
        assert ed.order == 4
        assert is_commutative(ed) and is_local(ed)
        # isomorphic to Z/2[x]/(x^2): two nilpotents, two units
        assert len(nilpotents(ed).members) == 2
        assert len(units(ed).members) == 2
        assert equal_diagonal_subring(zmod(3), 2).order == 9
        assert is_uniquely_pi_clean(equal_diagonal_subring(zmod(3), 2))
        assert equal_diagonal_subring(zmod(2), 3).order == 16

    def test_order_caps(self):
        with pytest.raises(OrderCapExceeded):
            matrix_ring(zmod(9), 2)
        with pytest.raises(OrderCapExceeded):
            equal_diagonal_subring(zmod(2), 5, order_cap=512)


class TestCornerAndQuotient:
    def test_corner_of_product_projection(self):
        pr = product(zmod(2), zmod(3))
        e = next(i for i in idempotents(pr).members if pr.name_of(i) == "(1,0)")
        c = corner(pr, e)
        assert c.table_bytes() == zmod(2).table_bytes()

    def test_corner_requires_idempotent(self):
        with pytest.raises(NotIdempotent):
            corner(zmod(4), 2)

    def test_corner_trivial_cases(self):
        z6 = zmod(6)
        assert corner(z6, z6.one).table_bytes() == z6.table_bytes()
        assert corner(z6, 0).order == 1

    def test_quotient_z12_by_six(self):
        q = quotient(zmod(12), (0, 6))
        assert q.order == 6
        assert q.table_bytes() == zmod(6).table_bytes()
        assert predicate_vector(q).values == predicate_vector(zmod(6)).values

    def test_quotient_rejects_non_ideal(self):
        with pytest.raises(NotAnIdeal):
            quotient(zmod(12), (0, 5))


class TestBimoduleSpecs:
    def test_strict_upper_bimodule_validates(self):
        spec = strict_upper_bimodule(zmod(2), 2)
        spec.validate()
        assert spec.s_order == 2
        assert spec.s_is_idempotent_free()
        assert spec.s_has_quasi_inverses()
        assert spec.idempotents_act_centrally()

    def test_named_specs_validate_and_target_one_condition(self):
        conds_of = {}
        for name, (builder, broken) in T41_SPECS.items():
            spec = builder()
            spec.validate()
            conds_of[name] = {
                "base ring uniquely pi-clean": is_uniquely_pi_clean(spec.base),
                "idempotents act centrally": spec.idempotents_act_centrally(),
                "quasi-inverses in S": spec.s_has_quasi_inverses(),
            }
        base = conds_of["t41-base"]
        assert all(base.values())
        for name, (_, broken) in T41_SPECS.items():
            if broken is None:
                continue
            flipped = [k for k, v in conds_of[name].items() if v != base[k]]
            assert flipped == [broken], name

    def test_law_violation_detected(self):
        spec = strict_upper_bimodule(zmod(3), 2)
        bad_left = spec.left.copy()
        bad_left[2, 1] = 0  # 2*s = 0 while 1*s + 1*s = 2s: breaks additivity in R
        broken = BimoduleSpec(spec.label, spec.base, spec.s_add, spec.s_mul, bad_left, spec.right)
        with pytest.raises(BimoduleLawViolation):
            broken.validate()

    def test_lawful_spec_without_identity_action_rejected_at_extension(self):
        # the zero action satisfies every bimodule law, but the extension then
        # has no multiplicative identity and must fail ring validation
        spec = strict_upper_bimodule(zmod(2), 2)
        zero_left = np.zeros_like(spec.left)
        zero_right = np.zeros_like(spec.right)
        lawful = BimoduleSpec("zero-action", spec.base, spec.s_add, spec.s_mul,
                              zero_left, zero_right)
        lawful.validate()
        from ringlab import NoIdentity
        with pytest.raises(NoIdentity):
            ideal_extension(lawful)

    def test_shape_mismatch_rejected(self):
        spec = strict_upper_bimodule(zmod(2), 2)
        with pytest.raises(BimoduleLawViolation):
            BimoduleSpec(spec.label, spec.base, spec.s_add, spec.s_mul,
                         spec.left[:1], spec.right).validate()


class TestIdealExtension:
    def test_base_extension_is_uniquely_pi_clean(self):
        spec = T41_SPECS["t41-base"][0]()
        ext = ideal_extension(spec)
        assert ext.order == 4
        assert is_uniquely_pi_clean(ext)
        assert spec.s_is_idempotent_free()

    def test_zero_bimodule_gives_base_back(self):
        base = zmod(6)
        spec = BimoduleSpec("0", base,
                            np.zeros((1, 1), dtype=np.int32), np.zeros((1, 1), dtype=np.int32),
                            np.zeros((6, 1), dtype=np.int32), np.zeros((1, 6), dtype=np.int32))
        ext = ideal_extension(spec)
        assert ext.table_bytes() == base.table_bytes()

    def test_equal_diagonal_matches_extension_by_strict_uppers(self):
        for base, k in ((zmod(2), 2), (zmod(3), 2), (zmod(2), 3)):
            ed = equal_diagonal_subring(base, k)
            ext = ideal_extension(strict_upper_bimodule(base, k))
            assert ed.order == ext.order
            assert len(units(ed).members) == len(units(ext).members)
            assert len(idempotents(ed).members) == len(idempotents(ext).members)
            assert predicate_vector(ed).values == predicate_vector(ext).values


class TestGf4Example:
    def test_shape_and_classification(self):
        g = gf4_triangular_example()
        assert g.order == 64
        assert not is_commutative(g)
        assert is_uniquely_pi_clean(g)
        for a in range(64):
            assert g.pow(a, 7) == a or g.pow(a, 2) == g.zero

    def test_validates(self):
        g = gf4_triangular_example()
        validate_ring(g.label, g.add_table, g.mul_table, g.zero, g.one)


class TestCatalog:
    def test_size_and_contents(self, catalog):
        assert len(catalog) >= 40
        provs = {e.provenance for e in catalog}
        assert {"zmod:3", "gf:4", "matrix:zmod2:2", "paper:gf4-example",
                "extension:t41-base", "zn-alpha:3"} <= provs

    def test_contains_nonabelian_and_noncommutative_upc(self, catalog):
        by_prov = {e.provenance: e.ring for e in catalog}
        m2 = by_prov["matrix:zmod2:2"]
        from ringlab import is_abelian
        assert not is_abelian(m2)
        showcase = by_prov["paper:gf4-example"]
        assert is_uniquely_pi_clean(showcase) and not is_commutative(showcase)

    def test_expected_classifications_hold(self, catalog):
        for entry in catalog:
            if not entry.expected:
                continue
            vec = predicate_vector(entry.ring)
            for name, (value, _why) in entry.expected.items():
                assert vec.values[name] == value, (entry.provenance, name)

    def test_every_entry_revalidates(self, catalog):
        for entry in catalog:
            r = entry.ring
            validate_ring(r.label, r.add_table, r.mul_table, r.zero, r.one)

    def test_provenance_reexecutes_byte_identically(self, catalog):
        for entry in catalog:
            rebuilt = build_from_provenance(entry.provenance)
            assert rebuilt.table_bytes() == entry.ring.table_bytes(), entry.provenance

    def test_catalog_deterministic(self, catalog):
        from ringlab import default_catalog
        again = default_catalog()
        assert [e.provenance for e in again] == [e.provenance for e in catalog]
        for a, b in zip(again, catalog):
            assert a.ring.table_bytes() == b.ring.table_bytes()

    def test_no_byte_duplicates(self, catalog):
        seen = {}
        for e in catalog:
            key = e.ring.table_bytes()
            # explicit entries may duplicate each other (gf:2 vs zmod:2);
            # derived corner/quotient entries must not duplicate anything
            if e.provenance.startswith(("corner:", "jquot:")):
                assert key not in seen, (e.provenance, seen.get(key))
            seen.setdefault(key, e.provenance)
