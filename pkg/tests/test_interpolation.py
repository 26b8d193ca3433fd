import math

import numpy as np
import pytest

from triginterp.interpolation import (TrigPolynomial, eval_poly,
                                      fold_frequency, interpolate, nodes)


def random_poly(n, rng):
    return TrigPolynomial(n=n, a0=rng.uniform(-1, 1),
                          a=rng.uniform(-1, 1, n - 1),
                          b=rng.uniform(-1, 1, n - 1))


class TestNodes:
    def test_small(self):
        assert np.allclose(nodes(1).nodes, [0.0])
        assert np.allclose(nodes(2).nodes, [0, 2 * math.pi / 3, 4 * math.pi / 3])
        assert np.allclose(nodes(3).nodes,
                           [0, 2 * math.pi / 5, 4 * math.pi / 5,
                            6 * math.pi / 5, 8 * math.pi / 5])

    def test_strictly_increasing_in_period(self):
        x = nodes(17).nodes
        assert len(x) == 33
        assert np.all(np.diff(x) > 0) and x[0] == 0 and x[-1] < 2 * math.pi

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            nodes(0)


class TestInterpolate:
    def test_constant(self):
        poly = interpolate(2, [3.5, 3.5, 3.5])
        assert poly.a0 / 2 == pytest.approx(3.5, rel=1e-14)
        assert np.allclose(poly.a, 0, atol=1e-14)
        assert np.allclose(poly.b, 0, atol=1e-14)

    def test_cos_reproduced(self):
        x = nodes(2).nodes
        poly = interpolate(2, np.cos(x))
        assert poly.a[0] == pytest.approx(1.0, abs=1e-14)
        assert abs(poly.a0) < 1e-14 and abs(poly.b[0]) < 1e-14

    def test_cos2x_folds_to_cos_x(self):
        # nu = 2 = 1*3 - 1 folds to |k| = 1 on the 3-node set
        x = nodes(2).nodes
        poly = interpolate(2, np.cos(2 * x))
        assert poly.a[0] == pytest.approx(1.0, abs=1e-13)

    def test_matches_samples(self):
        rng = np.random.default_rng(7)
        y = rng.uniform(-5, 5, 9)
        poly = interpolate(5, y)
        assert np.allclose(eval_poly(poly, nodes(5).nodes), y,
                           atol=1e-12 * np.max(np.abs(y)))

    def test_wrong_count(self):
        with pytest.raises(ValueError):
            interpolate(3, [1.0, 2.0])

    def test_exactness_random_polys(self):
        rng = np.random.default_rng(42)
        for n in (2, 5, 16, 64):
            for _ in range(50):
                p = random_poly(n, rng)
                q = interpolate(n, eval_poly(p, nodes(n).nodes))
                assert abs(q.a0 - p.a0) < 1e-10
                assert np.max(np.abs(q.a - p.a)) < 1e-10
                assert np.max(np.abs(q.b - p.b)) < 1e-10

    def test_projection_idempotent(self):
        rng = np.random.default_rng(3)
        p = random_poly(8, rng)
        q = interpolate(8, eval_poly(p, nodes(8).nodes))
        r = interpolate(8, eval_poly(q, nodes(8).nodes))
        assert np.allclose([q.a0, *q.a, *q.b], [r.a0, *r.a, *r.b], atol=1e-12)

    def test_uniqueness_perturbation(self):
        rng = np.random.default_rng(11)
        p = random_poly(4, rng)
        x = nodes(4).nodes
        y = eval_poly(p, x)
        for idx in range(3):
            a = p.a.copy()
            a[idx] += 1e-6
            bad = TrigPolynomial(n=4, a0=p.a0, a=a, b=p.b)
            assert np.max(np.abs(eval_poly(bad, x) - y)) > 1e-8


class TestEvalPoly:
    def test_zero(self):
        p = TrigPolynomial(n=3, a0=0.0, a=np.zeros(2), b=np.zeros(2))
        assert eval_poly(p, 1.234) == 0.0

    def test_a1_only(self):
        p = TrigPolynomial(n=2, a0=0.0, a=np.array([1.0]), b=np.array([0.0]))
        assert eval_poly(p, math.pi / 2) == pytest.approx(0.0, abs=1e-15)

    def test_constant_term(self):
        p = TrigPolynomial(n=2, a0=2.0, a=np.array([0.0]), b=np.array([0.0]))
        assert eval_poly(p, 0.77) == 1.0

    def test_periodicity(self):
        rng = np.random.default_rng(5)
        p = random_poly(6, rng)
        x = rng.uniform(0, 2 * math.pi, 50)
        assert np.allclose(eval_poly(p, x), eval_poly(p, x + 2 * math.pi),
                           atol=1e-12)

    def test_json_dict(self):
        p = TrigPolynomial(n=2, a0=1.0, a=np.array([2.0]), b=np.array([3.0]))
        assert p.to_json_dict() == {"n": 2, "a0": 1.0, "a": [2.0], "b": [3.0]}


class TestFoldFrequency:
    def test_examples(self):
        assert (fold_frequency(2, 2).m, fold_frequency(2, 2).k) == (1, -1)
        for n in (2, 5, 9):
            ff = fold_frequency(2 * n - 1, n)
            assert (ff.m, ff.k) == (1, 0)
            ff = fold_frequency(n, n)
            assert (ff.m, ff.k) == (1, 1 - n)

    def test_reconstruction_and_range(self):
        for n in (2, 5, 16):
            for nu in range(n, 10 * n + 1):
                ff = fold_frequency(nu, n)
                assert ff.m >= 1 and abs(ff.k) <= n - 1
                assert ff.m * (2 * n - 1) + ff.k == nu

    def test_below_range_rejected(self):
        with pytest.raises(ValueError):
            fold_frequency(1, 2)

    def test_aliasing_law(self):
        # cos(nu x_j + phi) == cos(k x_j + phi) at every node
        phi = 0.741
        for n in (2, 5, 16):
            x = nodes(n).nodes
            for nu in range(n, 10 * n + 1):
                k = fold_frequency(nu, n).k
                assert np.allclose(np.cos(nu * x + phi), np.cos(k * x + phi),
                                   atol=1e-9)
