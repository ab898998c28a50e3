"""
Frame container, submatrix selection, sampling, and matrix file format.

Ground truth: numpy.linalg.svd for singular values, itertools-style
exhaustive enumeration for the best block, and hand-computed values for
the attaining 4-by-2 frame (five blocks at 1/2, the {2,3} block singular).
"""
import io
import math
import itertools

import numpy as np
import pytest

from goodsub import (
    DimensionError,
    EnumerationCapExceeded,
    RankDeficient,
    StiefelMatrix,
    best_submatrix,
    extremal_matrix,
    format_matrix,
    gram_deviation,
    haar_sample,
    load_matrix,
    orthonormalize,
    parse_matrix,
    principal_angle,
    save_matrix,
    sigma_min,
)


class TestStiefelMatrix:
    def test_accepts_orthonormal_columns(self):
        a = StiefelMatrix(np.eye(4)[:, :2])
        assert a.n == 4
        assert a.k == 2

    def test_rejects_non_orthonormal(self):
        with pytest.raises(ValueError, match="orthonormal"):
            StiefelMatrix(np.ones((4, 2)))

    def test_rejects_wrong_ndim(self):
        with pytest.raises(DimensionError):
            StiefelMatrix(np.ones(4))

    def test_rejects_wide(self):
        with pytest.raises(DimensionError):
            StiefelMatrix(np.eye(2, 4))

    def test_rejects_nonfinite(self):
        a = np.eye(4)[:, :2]
        a[0, 0] = np.nan
        with pytest.raises(ValueError, match="finite"):
            StiefelMatrix(a)

    def test_values_read_only(self):
        a = StiefelMatrix(np.eye(3)[:, :2])
        with pytest.raises(ValueError):
            a.values[0, 0] = 2.0

    def test_defensive_copy(self):
        raw = np.eye(3)[:, :2].copy()
        a = StiefelMatrix(raw)
        raw[0, 0] = 5.0
        assert a.values[0, 0] == 1.0

    def test_submatrix(self):
        a = extremal_matrix()
        block = a.submatrix((0, 1))
        np.testing.assert_array_equal(block, a.values[[0, 1]])

    def test_submatrix_rejects_bad_rows(self):
        a = extremal_matrix()
        with pytest.raises(IndexError):
            a.submatrix((0, 4))
        with pytest.raises(IndexError):
            a.submatrix((1, 1))
        with pytest.raises(IndexError):
            a.submatrix((0,))


class TestGramDeviation:
    def test_exact_frame_is_zero(self):
        assert gram_deviation(np.eye(5)[:, :3]) == 0.0

    def test_scaled_column(self):
        a = np.eye(4)[:, :2] * np.array([1.0, 2.0])
        assert gram_deviation(a) == pytest.approx(3.0)


class TestSigmaMin:
    def test_matches_numpy_svd(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            m = rng.standard_normal((4, 4))
            assert sigma_min(m) == pytest.approx(np.linalg.svd(m, compute_uv=False)[-1], abs=1e-12)

    def test_2x2_closed_form(self):
        rng = np.random.default_rng(4)
        for _ in range(200):
            m = rng.standard_normal((2, 2))
            assert sigma_min(m) == pytest.approx(np.linalg.svd(m, compute_uv=False)[-1], abs=1e-12)

    def test_singular_matrix(self):
        assert sigma_min(np.ones((2, 2))) == pytest.approx(0.0, abs=1e-15)

    def test_rejects_nonsquare(self):
        with pytest.raises(DimensionError):
            sigma_min(np.ones((3, 2)))


class TestOrthonormalize:
    def test_result_is_frame(self):
        rng = np.random.default_rng(0)
        a = orthonormalize(rng.standard_normal((6, 3)))
        assert gram_deviation(a.values) < 1e-14

    def test_positive_diagonal_convention(self):
        # QR sign fix makes the factor of an already-orthonormal input itself.
        q = orthonormalize(np.eye(4)[:, :2]).values
        np.testing.assert_allclose(q, np.eye(4)[:, :2], atol=1e-15)

    def test_span_preserved(self):
        rng = np.random.default_rng(1)
        m = rng.standard_normal((5, 2))
        q = orthonormalize(m).values
        # Residual of projecting m onto span(q) must vanish.
        resid = m - q @ (q.T @ m)
        assert np.max(np.abs(resid)) < 1e-12

    def test_rank_deficient_rejected(self):
        m = np.ones((4, 2))
        with pytest.raises(RankDeficient):
            orthonormalize(m)


class TestHaarSample:
    def test_shape_and_orthonormality(self):
        a = haar_sample(7, 3, seed=11)
        assert (a.n, a.k) == (7, 3)
        assert gram_deviation(a.values) < 1e-14

    def test_seed_reproducible(self):
        a = haar_sample(5, 2, seed=42)
        b = haar_sample(5, 2, seed=42)
        np.testing.assert_array_equal(a.values, b.values)

    def test_seeds_differ(self):
        a = haar_sample(5, 2, seed=0)
        b = haar_sample(5, 2, seed=1)
        assert np.max(np.abs(a.values - b.values)) > 1e-3


class TestBestSubmatrix:
    def test_extremal_frame_values(self):
        rep = best_submatrix(extremal_matrix())
        assert rep.sigma_min == pytest.approx(0.5, abs=1e-14)
        assert rep.row_set == (0, 1)
        sigmas = sorted(entry["sigma_min"] for entry in rep.to_dict()["all_values"])
        assert sigmas[0] == pytest.approx(0.0, abs=1e-14)
        np.testing.assert_allclose(sigmas[1:], 0.5, atol=1e-14)

    def test_identity_embedding(self):
        rep = best_submatrix(StiefelMatrix(np.eye(5)[:, :2]))
        assert rep.sigma_min == pytest.approx(1.0)
        assert rep.row_set == (0, 1)

    def test_matches_exhaustive_svd(self):
        rng_seeds = range(10)
        for seed in rng_seeds:
            a = haar_sample(6, 3, seed=seed)
            rep = best_submatrix(a)
            best = max(
                itertools.combinations(range(6), 3),
                key=lambda rows: np.linalg.svd(a.values[list(rows)], compute_uv=False)[-1],
            )
            expected = np.linalg.svd(a.values[list(best)], compute_uv=False)[-1]
            assert rep.sigma_min == pytest.approx(expected, abs=1e-12)

    def test_determinant_consistent(self):
        a = haar_sample(5, 2, seed=3)
        rep = best_submatrix(a)
        det = np.linalg.det(a.values[list(rep.row_set)])
        assert rep.determinant == pytest.approx(det, abs=1e-14)
        assert abs(rep.determinant) >= rep.sigma_min ** 2 - 1e-14

    def test_requires_stiefel_matrix(self):
        with pytest.raises(TypeError):
            best_submatrix(np.eye(4)[:, :2])

    def test_enumeration_cap(self):
        a = haar_sample(40, 20, seed=0)
        with pytest.raises(EnumerationCapExceeded):
            best_submatrix(a)

    def test_enumeration_cap_tunable(self):
        a = haar_sample(6, 3, seed=0)
        with pytest.raises(EnumerationCapExceeded):
            best_submatrix(a, max_subsets=10)
        rep = best_submatrix(a, max_subsets=math.comb(6, 3))
        assert len(rep.to_dict()["all_values"]) == math.comb(6, 3)

    def test_k1_uses_abs_entries(self):
        a = haar_sample(6, 1, seed=9)
        rep = best_submatrix(a)
        assert rep.sigma_min == pytest.approx(np.max(np.abs(a.values)), abs=1e-15)

    def test_lower_bound_holds_on_samples(self):
        # Conjectured floor 1/sqrt(n); random frames sit well above it.
        for seed in range(25):
            a = haar_sample(4, 2, seed=seed)
            assert best_submatrix(a).sigma_min >= 0.5 - 1e-9


class TestPrincipalAngle:
    def test_identity_block_is_zero(self):
        a = StiefelMatrix(np.eye(4)[:, :2])
        assert principal_angle(a, (0, 1)) == pytest.approx(0.0, abs=1e-7)

    def test_matches_sigma(self):
        a = haar_sample(5, 2, seed=5)
        for rows in itertools.combinations(range(5), 2):
            s = np.linalg.svd(a.values[list(rows)], compute_uv=False)[-1]
            assert principal_angle(a, rows) == pytest.approx(math.acos(min(1.0, s)), abs=1e-12)


class TestExtremalMatrix:
    def test_exact_entries(self):
        e = extremal_matrix().values
        expected = np.array(
            [
                [math.sqrt(0.5), math.sqrt(0.125)],
                [-math.sqrt(0.5), math.sqrt(0.125)],
                [0.0, math.sqrt(0.375)],
                [0.0, math.sqrt(0.375)],
            ]
        )
        np.testing.assert_array_equal(e, expected)

    def test_orthonormal_to_machine_precision(self):
        assert gram_deviation(extremal_matrix().values) < 1e-15


class TestMatrixFormat:
    def test_roundtrip_exact(self):
        a = haar_sample(6, 3, seed=2).values
        again = parse_matrix(format_matrix(a))
        np.testing.assert_array_equal(again, a)

    def test_header(self):
        text = format_matrix(np.eye(3)[:, :2])
        assert text.splitlines()[0] == "3 2"
        assert text.endswith("\n")

    def test_file_roundtrip(self, tmp_path):
        a = haar_sample(4, 2, seed=8).values
        path = tmp_path / "m.mat"
        save_matrix(path, a)
        np.testing.assert_array_equal(load_matrix(path), a)

    def test_stream_roundtrip(self):
        a = haar_sample(3, 1, seed=6).values
        buf = io.StringIO()
        save_matrix(buf, a)
        buf.seek(0)
        np.testing.assert_array_equal(load_matrix(buf), a)

    def test_parse_rejects_bad_header(self):
        with pytest.raises(ValueError):
            parse_matrix("x y\n1 2\n")

    def test_parse_rejects_wrong_count(self):
        with pytest.raises(ValueError):
            parse_matrix("2 2\n1 0\n")

    def test_parse_rejects_non_numeric(self):
        with pytest.raises(ValueError):
            parse_matrix("1 2\nfoo bar\n")
