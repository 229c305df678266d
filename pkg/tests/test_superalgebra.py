import numpy as np
import pytest

from xrmatrix import (GENERATORS, LocalRep, NumericField, check_relations,
                      check_tensor_square, classical_limit,
                      commutant_dimension, coproduct_image, sample_params,
                      spectral_twist, tensor_square_bases,
                      tensor_square_restrictions, tuple_rep, vector_rep)
from xrmatrix.permutations import Permutation
from xrmatrix.superalgebra import _ALL_TAGS


def unit(i, j):
    """Independent elementary-matrix oracle, 1-based indices."""
    m = np.zeros((4, 4), dtype=complex)
    m[i - 1, j - 1] = 1.0
    return m


def _flat(i, j):
    return 4 * (i - 1) + (j - 1)


class TestVectorRep:
    def test_affine_raising_image(self, nf, ps):
        rep = vector_rep(nf, ps.x)
        assert np.array_equal(rep.image("E0"), unit(4, 1))

    def test_deformed_images(self, nf, ps):
        rep = vector_rep(nf, ps.x)
        assert np.allclose(rep.image("E2"), unit(2, 3) + ps.x * unit(4, 1))
        assert np.allclose(rep.image("F0"),
                           -unit(1, 4) - ps.x / nf.q * unit(3, 2))

    def test_diagonal_images(self, nf, ps):
        rep = vector_rep(nf, ps.x)
        q = nf.q
        assert np.allclose(rep.image("s"), np.diag([1, 1, -1, -1]).astype(complex))
        assert np.allclose(rep.image("K2"), np.diag([1, q, q, 1]))
        assert np.allclose(rep.image("K0"), np.diag([1 / q, 1, 1, 1 / q]))
        assert np.allclose(rep.image("K1"), np.diag([q, 1 / q, 1, 1]))
        assert np.allclose(rep.image("K3"), np.diag([1, 1, 1 / q, q]))


class TestTwist:
    def test_unit_twist_is_identity(self, nf, ps):
        rep = vector_rep(nf, ps.x)
        twisted = spectral_twist(rep, 1.0 + 0j)
        for tag in GENERATORS:
            assert np.allclose(twisted.image(tag), rep.image(tag))

    def test_twist_composes_multiplicatively(self, nf, ps):
        rep = vector_rep(nf, ps.x)
        double = spectral_twist(spectral_twist(rep, ps.u), ps.v)
        direct = spectral_twist(rep, ps.u * ps.v)
        for tag in ("E0", "F0", "E1"):
            assert np.allclose(double.image(tag), direct.image(tag))

    def test_twist_scales_affine_lowering(self, nf, ps):
        rep = vector_rep(nf, ps.x)
        twisted = spectral_twist(rep, ps.u)
        assert np.allclose(twisted.image("F0"), ps.u * rep.image("F0"))

    def test_zero_twist_rejected(self, nf, ps):
        with pytest.raises(ValueError):
            spectral_twist(vector_rep(nf, ps.x), 0j)


class TestBrackets:
    def test_bracket_oracles(self, nf, ps):
        # raw-matrix oracle, independent of the LocalRep machinery
        rep = vector_rep(nf, ps.x)
        q, x = nf.q, ps.x
        e2 = unit(2, 3) + x * unit(4, 1)
        f0 = -unit(1, 4) - x / q * unit(3, 2)
        anticomm = e2 @ f0 + f0 @ e2
        assert np.allclose(rep.image("[E2,F0]"), anticomm)
        k2 = np.diag([1, q, q, 1]).astype(complex)
        assert np.allclose(k2 @ anticomm, -x * np.eye(4))

    def test_affine_pair_bracket_vanishes(self, nf, ps):
        rep = vector_rep(nf, ps.x)
        assert np.allclose(rep.image("[E0,F2]"), np.zeros((4, 4)))

    def test_zeroth_diagonal_bracket(self, nf, ps):
        rep = vector_rep(nf, ps.x)
        e0, f0 = rep.image("E0"), rep.image("F0")
        assert np.allclose(e0 @ f0 + f0 @ e0, -(unit(1, 1) + unit(4, 4)))


class TestRelations:
    def test_numeric_seeds(self):
        for seed in range(3):
            ps = sample_params(seed)
            fld = NumericField(ps.q)
            report = check_relations(vector_rep(fld, ps.x), tol=1e-12)
            assert report.passed, report.details["failed"]
            c1, c2 = report.details["central_scalars"]
            assert c1["re"] == pytest.approx(-ps.x.real)
            assert c1["im"] == pytest.approx(-ps.x.imag)
            assert c2 == {"re": 0.0, "im": 0.0}

    def test_exact_backend(self, ef):
        report = check_relations(vector_rep(ef, ef.x))
        assert report.passed and report.exact
        assert report.residual == 0.0

    def test_perturbed_rep_fails(self, nf, ps):
        rep = vector_rep(nf, ps.x)
        images = {t: rep.images[t].copy() for t in _ALL_TAGS}
        images["E1"] = images["E1"] + 1e-3 * unit(1, 1)
        broken = check_relations(LocalRep(nf, ps.x, images), tol=1e-12)
        assert not broken.passed
        assert any("E1" in name and "K1" in name
                   for name in broken.details["failed"])


class TestCoproduct:
    def test_grouplike(self, nf, ps):
        reps = [vector_rep(nf, ps.x), vector_rep(nf, nf.q * ps.x)]
        out = coproduct_image("K1", reps)
        assert np.allclose(out, np.kron(reps[0].image("K1"),
                                        reps[1].image("K1")))

    def test_affine_raising_two_terms(self, nf, ps):
        # the correction slot vanishes because [E0,F2] acts as zero
        reps = [vector_rep(nf, ps.x), vector_rep(nf, nf.q * ps.x)]
        out = coproduct_image("E0", reps)
        expected = np.kron(reps[0].image("E0"), np.eye(4)) + np.kron(
            reps[0].image("K0") @ reps[0].image("s"), reps[1].image("E0"))
        assert np.allclose(out, expected)

    def test_lowering_has_correction_term(self, nf, ps):
        reps = [vector_rep(nf, ps.x), vector_rep(nf, nf.q * ps.x)]
        out = coproduct_image("F0", reps)
        qdiff = nf.q - 1 / nf.q
        expected = (
            np.kron(reps[0].image("F0"), reps[1].image("Kinv0"))
            + np.kron(reps[0].image("s"), reps[1].image("F0"))
            - qdiff * np.kron(reps[0].image("F2"), reps[1].image("[E2,F0]"))
        )
        assert np.allclose(out, expected)

    def test_coassociativity(self, nf, ps):
        from xrmatrix.superalgebra import ProductRep

        reps = [vector_rep(nf, nf.q ** k * ps.x) for k in range(3)]
        pair = ProductRep(reps[:2])
        # (Delta x id) Delta: treat the evaluated pair as one local factor
        nested = LocalRep(nf, ps.x, {t: pair.image(t) for t in _ALL_TAGS})
        for tag in GENERATORS:
            lhs = coproduct_image(tag, reps)
            rhs = coproduct_image(tag, [nested, reps[2]])
            assert np.linalg.norm(lhs - rhs) < 1e-10

    def test_tuple_rep_swap(self, nf, ps):
        swap = Permutation.reversal(2)
        lhs = tuple_rep(nf, swap.act((ps.u, ps.v)), ps.x)
        rhs = tuple_rep(nf, (ps.v, ps.u), ps.x)
        for tag in ("E0", "F0", "K1"):
            assert np.allclose(lhs.image(tag), rhs.image(tag))

    def test_tuple_rep_satisfies_relations(self, nf, ps):
        for a in ((ps.u, ps.v), (ps.u, ps.v, ps.w)):
            report = check_relations(tuple_rep(nf, a, ps.x), tol=1e-10)
            assert report.passed, (len(a), report.details["failed"])


class TestTensorSquare:
    def test_listed_vectors(self, nf, ps):
        q, x = nf.q, ps.x
        b1, _ = tensor_square_bases(nf, x, q * x)
        assert np.allclose(b1.columns[:, 0],
                           np.eye(16, dtype=complex)[_flat(3, 3)])
        # the (1,2) vector at y = qx, derived by substitution
        expected = np.zeros(16, dtype=complex)
        expected[_flat(1, 2)] = 1.0
        expected[_flat(2, 1)] = -q
        expected[_flat(3, 4)] = q ** 3 * x
        expected[_flat(4, 3)] = x
        assert np.allclose(b1.columns[:, 2], expected)

    def test_joint_rank(self, nf, ps):
        b1, b2 = tensor_square_bases(nf, ps.x, nf.q * ps.x)
        joint = np.concatenate([b1.columns, b2.columns], axis=1)
        assert np.linalg.matrix_rank(joint) == 16

    def test_split_iff_tuned(self, nf, ps):
        good = check_tensor_square(nf, ps.x, nf.q * ps.x, tol=1e-10)
        assert good.passed
        bad = check_tensor_square(nf, ps.x, ps.y, tol=1e-10)
        assert not bad.passed
        assert bad.details["v1_residual"] < 1e-10   # first space always closes
        assert bad.details["v2_residual"] > 1e-3

    def test_restricted_commutants(self, nf, ps):
        fam1, fam2 = tensor_square_restrictions(nf, ps.x)
        assert commutant_dimension([f.mat for f in fam1]) == 1
        assert commutant_dimension([f.mat for f in fam2]) == 1


class TestClassicalLimit:
    def test_untwisted_lowering(self):
        images = classical_limit(1.0).images
        assert np.allclose(images["F0"], -unit(1, 4))

    def test_cartan_images(self):
        images = classical_limit(1.0).images
        assert np.allclose(images["H1"], np.diag([1, -1, 0, 0]).astype(complex))

    def test_sl2_triple(self):
        images = classical_limit(1.0).images
        comm = images["E1"] @ images["F1"] - images["F1"] @ images["E1"]
        assert np.allclose(comm, images["H1"])

    def test_twist_scaling(self):
        limit = classical_limit(1.7 + 0.3j)
        assert limit.scaling_residual < 1e-12
        assert np.allclose(limit.images["F0"], (1.7 + 0.3j) * -unit(1, 4))


def test_vector_rep_commutant_is_trivial(nf, ps):
    rep = vector_rep(nf, ps.x)
    assert commutant_dimension([rep.image(t) for t in GENERATORS]) == 1
