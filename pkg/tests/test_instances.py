import numpy as np
import pytest

from dsta import instances
from dsta.instances import InvalidSize


class TestRandomEuclideanTsp:
    def test_shape_and_metric_properties(self):
        inst = instances.random_euclidean_tsp(12, seed=0)
        m = inst.matrix
        assert m.shape == (12, 12)
        assert inst.coords.shape == (12, 2)
        assert np.allclose(m, m.T)
        assert np.allclose(np.diag(m), 0)
        assert (m >= 0).all()

    def test_distances_match_coords(self):
        inst = instances.random_euclidean_tsp(6, seed=1)
        i, j = 2, 4
        assert inst.matrix[i, j] == pytest.approx(
            np.linalg.norm(inst.coords[i] - inst.coords[j])
        )

    def test_seed_determinism(self):
        a = instances.random_euclidean_tsp(8, seed=5)
        b = instances.random_euclidean_tsp(8, seed=5)
        c = instances.random_euclidean_tsp(8, seed=6)
        assert np.array_equal(a.matrix, b.matrix)
        assert not np.array_equal(a.matrix, c.matrix)

    def test_too_small(self):
        with pytest.raises(InvalidSize):
            instances.random_euclidean_tsp(2, seed=0)


class TestRandomWeightedGraph:
    def test_dense_graph(self):
        g = instances.random_weighted_graph(10, density=1.0, seed=0)
        w = g.weights
        off = w[~np.eye(10, dtype=bool)]
        assert (off > 0).all()
        assert np.allclose(w, w.T)
        assert np.allclose(np.diag(w), 0)

    def test_empty_graph(self):
        g = instances.random_weighted_graph(6, density=0.0, seed=0)
        assert not g.weights.any()

    def test_density_scales_edge_count(self):
        sparse = instances.random_weighted_graph(40, density=0.2, seed=3)
        dense = instances.random_weighted_graph(40, density=0.8, seed=3)
        assert (sparse.weights > 0).sum() < (dense.weights > 0).sum()

    def test_seed_determinism(self):
        a = instances.random_weighted_graph(7, density=0.5, seed=9)
        b = instances.random_weighted_graph(7, density=0.5, seed=9)
        assert np.array_equal(a.weights, b.weights)

    def test_validation(self):
        with pytest.raises(InvalidSize):
            instances.random_weighted_graph(1, density=0.5, seed=0)
        with pytest.raises(InvalidSize):
            instances.random_weighted_graph(5, density=1.5, seed=0)


class TestMaxcutFromTsp:
    def test_reuses_distance_matrix(self):
        tsp = instances.random_euclidean_tsp(6, seed=2)
        cut = instances.maxcut_from_tsp(tsp)
        assert np.array_equal(cut.weights, tsp.matrix)
        assert cut.weights is not tsp.matrix
        assert cut.name.endswith("-maxcut")
        assert cut.n == 5  # one vertex fixed by the reduction


class TestRandomDvs:
    def test_alphabet_distinct_and_sorted(self):
        spec = instances.random_dvs(5, 6, seed=0)
        a = spec.alphabet
        assert len(set(a.tolist())) == 6
        assert (np.diff(a) > 0).all()

    def test_objective_is_separable(self):
        spec = instances.random_dvs(4, 3, seed=1)
        # changing one coordinate changes the cost independently of the others
        x = spec.alphabet[np.zeros(4, dtype=int)]
        y = x.copy()
        y[2] = spec.alphabet[1]
        delta = spec.objective(y) - spec.objective(x)
        z = spec.alphabet[np.array([2, 1, 0, 2])]
        w = z.copy()
        w[2] = spec.alphabet[1]
        assert spec.objective(w) - spec.objective(z) == pytest.approx(delta)

    def test_seed_determinism(self):
        a = instances.random_dvs(4, 3, seed=7)
        b = instances.random_dvs(4, 3, seed=7)
        assert np.array_equal(a.alphabet, b.alphabet)
        x = a.alphabet[np.array([0, 2, 1, 0])]
        assert a.objective(x) == b.objective(x)

    def test_validation(self):
        with pytest.raises(InvalidSize):
            instances.random_dvs(1, 3, seed=0)
        with pytest.raises(InvalidSize):
            instances.random_dvs(4, 1, seed=0)
