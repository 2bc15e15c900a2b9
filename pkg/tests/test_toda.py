from fractions import Fraction

import pytest

from qaff.polynomials import Poly
from qaff.toda import (
    RelationPoly,
    b2_relations,
    classical_part_vanishes,
    lax_matrix,
    phi_evaluate,
    present_ring,
    quadratic_relation,
    quotient_dimension,
    relations_for,
    schubert_module_dimension,
    typeA_relations,
    verify_relation,
)


def poly_from(rank, terms):
    nv = 2 * rank + 1
    return Poly(nv, {tuple(e): Fraction(c) for e, c in terms.items()})


class TestLaxMatrix:
    def test_shape_and_corners(self):
        mat = lax_matrix(3)
        assert len(mat) == 3 and all(len(row) == 3 for row in mat)
        # the corner entries carry the spectral parameter
        assert not mat[0][2].is_zero()
        assert not mat[2][0].is_zero()
        assert mat[0][1].terms  # superdiagonal carries q

    def test_fl2_single_relation(self):
        (h1,) = typeA_relations(2)
        # -x1^2 + q1 + q0, in variables (q0, q1, x1)
        assert h1.poly == poly_from(
            1, {(0, 0, 2): -1, (0, 1, 0): 1, (1, 0, 0): 1}
        )

    def test_fl3_relations(self):
        h1, h2 = typeA_relations(3)
        assert h1.poly == poly_from(
            2,
            {
                (0, 0, 0, 0, 2): -1,
                (0, 0, 0, 1, 1): 1,
                (0, 0, 0, 2, 0): -1,
                (0, 0, 1, 0, 0): 1,
                (0, 1, 0, 0, 0): 1,
                (1, 0, 0, 0, 0): 1,
            },
        )
        assert h2.poly == poly_from(
            2,
            {
                (0, 0, 0, 1, 2): -1,
                (0, 0, 0, 2, 1): 1,
                (0, 0, 1, 1, 0): 1,
                (0, 1, 0, 0, 1): -1,
                (1, 0, 0, 0, 1): 1,
                (1, 0, 0, 1, 0): -1,
            },
        )

    def test_fl4_term_counts(self):
        h1, h2, h3 = typeA_relations(4)
        assert (len(h1.poly.terms), len(h2.poly.terms), len(h3.poly.terms)) == (
            9,
            10,
            15,
        )
        # the q1 q3 and q0 q2 cross terms appear in the top conserved quantity
        assert h3.poly.terms.get((0, 1, 0, 1, 0, 0, 0)) is not None
        assert h3.poly.terms.get((1, 0, 1, 0, 0, 0, 0)) is not None

    def test_degrees_are_k_plus_one(self):
        for n in (2, 3, 4):
            rels = typeA_relations(n)
            assert [r.degree() for r in rels] == list(range(2, n + 1))
            for r in rels:
                assert r.is_homogeneous()

    def test_dynkin_flip_signs(self):
        # the diagram flip x_i <-> x_{n-i}, q_i <-> q_{n-i} (q0 fixed) sends
        # H_k to (-1)^(k-1) H_k
        for n in (3, 4):
            rels = typeA_relations(n)
            nv = rels[0].poly.nvars
            images = [Poly.variable(nv, 0)]
            images += [Poly.variable(nv, n - i) for i in range(1, n)]
            images += [Poly.variable(nv, n + (n - i) - 1) for i in range(1, n)]
            for k, rel in enumerate(rels, start=1):
                flipped = rel.poly.substitute(images)
                assert flipped == rel.poly * ((-1) ** (k - 1))


class TestB2Relations:
    def test_frozen_polynomials(self):
        h1, h2 = b2_relations()
        assert h1.poly == poly_from(
            2,
            {
                (0, 0, 0, 2, 0): 4,
                (0, 0, 0, 1, 1): -4,
                (0, 0, 0, 0, 2): 2,
                (1, 0, 0, 0, 0): -2,
                (0, 1, 0, 0, 0): -4,
                (0, 0, 1, 0, 0): -2,
            },
        )
        assert h2.poly == poly_from(
            2,
            {
                (0, 0, 0, 2, 2): 4,
                (0, 0, 0, 1, 3): -4,
                (1, 0, 0, 1, 1): -4,
                (0, 0, 1, 1, 1): 4,
                (0, 0, 0, 0, 4): 1,
                (1, 0, 0, 0, 2): 2,
                (0, 1, 0, 0, 2): -4,
                (0, 0, 1, 0, 2): -2,
                (2, 0, 0, 0, 0): 1,
                (1, 0, 1, 0, 0): -2,
                (0, 0, 2, 0, 0): 1,
            },
        )

    def test_both_vanish(self):
        for rel in b2_relations():
            assert verify_relation(rel)


class TestPhi:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_typeA_all_vanish(self, n):
        for rel in typeA_relations(n):
            assert verify_relation(rel)

    def test_nonrelation_detected(self):
        # x1^2 alone is not a relation of the rank-one ring
        bad = RelationPoly("A", 1, poly_from(1, {(0, 0, 2): 1}), "X")
        assert not verify_relation(bad)
        img = phi_evaluate(bad)
        assert not img.is_zero()

    def test_inhomogeneous_rejected(self):
        bad = RelationPoly("A", 1, poly_from(1, {(0, 0, 2): 1, (0, 0, 1): 1}), "X")
        with pytest.raises(ValueError):
            verify_relation(bad)

    def test_phi_of_x1_is_divisor(self):
        rel = RelationPoly("A", 2, poly_from(2, {(0, 0, 0, 1, 0): 1}), "x1")
        ring_img = phi_evaluate(rel)
        from qaff.quantum import quantum_aff

        ring = quantum_aff("A", 2)
        assert ring_img == ring.basis_simple(1)


class TestQuadraticRelation:
    TYPES = ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"]

    @pytest.mark.parametrize("lt", TYPES)
    def test_vanishes(self, lt):
        rel = quadratic_relation(lt[0], int(lt[1]))
        assert rel.is_homogeneous() and rel.degree() == 2
        assert verify_relation(rel)

    @pytest.mark.parametrize("lt", TYPES)
    def test_classical_part_is_invariant(self, lt):
        rel = quadratic_relation(lt[0], int(lt[1]))
        assert classical_part_vanishes(rel)


class TestClassicalParts:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_typeA(self, n):
        for rel in typeA_relations(n):
            assert classical_part_vanishes(rel)

    def test_b2(self):
        for rel in b2_relations():
            assert classical_part_vanishes(rel)


class TestPresentation:
    def test_full_types(self):
        for lt in ("A2", "A3", "B2"):
            rec = present_ring(lt[0], int(lt[1]))
            assert rec["schema_version"] == 1
            assert rec["status"] == "full"
            assert "gap" not in rec
            assert all(e["phi_zero"] for e in rec["relations"])
            assert all(e["classical_invariant"] for e in rec["relations"])

    def test_partial_types(self):
        rec = present_ring("G", 2)
        assert rec["status"] == "partial"
        assert "quadratic" in rec["gap"]
        assert len(rec["relations"]) == 1

    def test_relations_for_dispatch(self):
        rels, status = relations_for("A", 3)
        assert status == "full" and len(rels) == 3
        rels, status = relations_for("B", 3)
        assert status == "partial" and len(rels) == 1


class TestGradedDimensions:
    @pytest.mark.parametrize(
        "n,dmax", [(2, 2), (3, 4), (4, 6)]
    )
    def test_quotient_matches_schubert_count(self, n, dmax):
        rels = typeA_relations(n)
        for d in range(dmax + 1):
            assert quotient_dimension(rels, d) == schubert_module_dimension(
                "A", n - 1, d
            )
