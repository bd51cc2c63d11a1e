import dataclasses
import math

import numpy as np
import pytest

from jarlskog.gates import GateId, GateKind, k_matrix, sigma1, sigma3, walsh
from jarlskog.matrix import max_abs_diff, unitary_error
from jarlskog.modules import BlockModule, FactorSequence, PhaseModule, compose_sequence
from jarlskog.synthesis import (
    Recipe,
    UnsupportedDimensionError,
    diagnose_walsh,
    printed_walsh_factors,
    recipe_for,
    recipe_k,
    recipe_pauli,
    recipe_sigma1,
    recipe_sigma3,
    recipe_walsh,
    verify_recipe,
    walsh5_constants,
)

R3 = math.sqrt(3)
DIMS = range(2, 17)


def corrupt_first_phase(recipe: Recipe, delta: float) -> Recipe:
    factors = list(recipe.sequence.factors)
    for i, f in enumerate(factors):
        if isinstance(f, PhaseModule):
            thetas = list(f.thetas)
            thetas[1] += delta
            factors[i] = PhaseModule(tuple(thetas))
            break
    return dataclasses.replace(recipe, sequence=FactorSequence(recipe.sequence.n, tuple(factors)))


class TestSigma3Recipe:
    def test_three(self):
        r = recipe_sigma3(3)
        assert r.module_count == 1
        assert r.sequence.factors[0].thetas == pytest.approx((0, 2 * np.pi / 3, 4 * np.pi / 3))

    def test_two(self):
        assert max_abs_diff(recipe_sigma3(2).matrix(), np.diag([1, -1])) < 1e-15

    def test_nine(self):
        assert max_abs_diff(recipe_sigma3(9).matrix(), sigma3(9)) <= 1e-13


class TestSigma1Recipe:
    def test_two(self):
        r = recipe_sigma1(2)
        f0, f1 = r.sequence.factors
        assert f0.thetas == (0.0, np.pi)
        assert (f1.j, f1.z_tilde, f1.beta) == (2, (1 + 0j,), np.pi / 2)
        assert max_abs_diff(r.matrix(), [[0, 1], [1, 0]]) < 1e-15

    def test_three(self):
        assert max_abs_diff(recipe_sigma1(3).matrix(), [[0, 0, 1], [1, 0, 0], [0, 1, 0]]) < 1e-15

    @pytest.mark.parametrize("n", [2, 3, 6])
    def test_blocks_without_phase(self, n):
        blocks = FactorSequence(n, recipe_sigma1(n).sequence.factors[1:])
        expected = np.zeros((n, n))
        expected[0, n - 1] = 1
        for i in range(1, n):
            expected[i, i - 1] = -1
        assert max_abs_diff(compose_sequence(blocks), expected) < 1e-15

    @pytest.mark.parametrize("n", DIMS)
    def test_count(self, n):
        assert recipe_sigma1(n).module_count == n


class TestKRecipe:
    def test_three(self):
        r = recipe_k(3)
        phase, block = r.sequence.factors
        assert phase.thetas == (0.0, 0.0, np.pi)
        assert (block.j, block.z_tilde, block.beta) == (3, (0j, 1 + 0j), np.pi / 2)
        assert max_abs_diff(r.matrix(), [[1, 0, 0], [0, 0, 1], [0, 1, 0]]) < 1e-15

    def test_two(self):
        r = recipe_k(2)
        assert r.module_count == 0
        assert np.array_equal(r.matrix(), np.eye(2))

    def test_six(self):
        r = recipe_k(6)
        assert r.sequence.factors[0].thetas == (0, 0, 0, 0, np.pi, np.pi)
        assert [f.j for f in r.sequence.factors[1:]] == [5, 6]
        assert max_abs_diff(r.matrix(), k_matrix(6)) <= 1e-13

    def test_even_layout(self):
        # n = 2k: A_{k+2}(0,..,0,1,0), ..., A_{2k}(0,1,0,..,0)
        r = recipe_k(8)
        blocks = r.sequence.factors[1:]
        assert blocks[0].j == 6 and blocks[0].z_tilde[-2] == 1
        assert blocks[-1].j == 8 and blocks[-1].z_tilde[1] == 1

    def test_odd_layout(self):
        # n = 2k-1: A_{k+1}(0,..,0,1), ..., A_{2k-1}(0,1,0,..,0)
        r = recipe_k(7)
        assert r.sequence.factors[0].thetas == (0,) * 4 + (np.pi,) * 3
        blocks = r.sequence.factors[1:]
        assert blocks[0].j == 5 and blocks[0].z_tilde[-1] == 1
        assert blocks[-1].j == 7 and blocks[-1].z_tilde[1] == 1


@pytest.mark.parametrize("n", DIMS)
def test_general_recipes_verify(n):
    for r in (recipe_sigma1(n), recipe_sigma3(n), recipe_k(n)):
        check = verify_recipe(r)
        assert check.passed and check.error <= 1e-13, (r.target, check)


class TestWalshRecipe:
    def test_three(self):
        r = recipe_walsh(3)
        assert r.module_count == 4
        w1 = complex(-1, -R3) / 2
        expected = np.array([[1, 1, 1], [1, w1, w1.conjugate()], [1, w1.conjugate(), w1]]) / R3
        assert max_abs_diff(r.matrix(), expected) <= 1e-12

    def test_four(self):
        r = recipe_walsh(4)
        assert r.module_count == 9
        expected = np.array([[1, 1, 1, 1], [1, -1j, -1, 1j], [1, -1, 1, -1], [1, 1j, -1, -1j]]) / 2
        assert max_abs_diff(r.matrix(), expected) <= 1e-12

    def test_five(self):
        r = recipe_walsh(5)
        assert r.module_count == 10
        assert max_abs_diff(r.matrix(), walsh(5)) <= 1e-11

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_square_is_k(self, n):
        m = recipe_walsh(n).matrix()
        assert max_abs_diff(m @ m, k_matrix(n)) <= 1e-11

    @pytest.mark.parametrize("n", [2, 6, 7, 16])
    def test_unsupported(self, n):
        with pytest.raises(UnsupportedDimensionError, match="unsupported dimension"):
            recipe_walsh(n)

    def test_three_level_constants(self):
        r = recipe_walsh(3)
        a3 = r.sequence.factors[1].matrix()
        assert a3[0, 0] == pytest.approx((R3 + 1) / (2 * R3), abs=1e-15)
        assert r.sequence.factors[3].thetas == (-np.pi / 12, 7 * np.pi / 12, 0.0)
        assert math.cos(np.pi / 12) == pytest.approx((math.sqrt(6) + math.sqrt(2)) / 4, abs=1e-15)
        assert math.sin(np.pi / 12) == pytest.approx((math.sqrt(6) - math.sqrt(2)) / 4, abs=1e-15)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_printed_factor_groups(self, n):
        seq = recipe_walsh(n).sequence
        groups = printed_walsh_factors(n)
        assert groups[-1].stop == len(seq)
        for g in groups:
            part = compose_sequence(FactorSequence(n, seq.factors[g.start:g.stop]))
            assert max_abs_diff(part, g.expected) <= 1e-14, g.label
            assert unitary_error(g.expected) <= 1e-14, g.label

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_diagnosis_clean(self, n):
        assert diagnose_walsh(n) is None

    def test_every_factor_primitive(self):
        for n in (3, 4, 5):
            assert all(isinstance(f, (PhaseModule, BlockModule)) for f in recipe_walsh(n).sequence)


class TestFiveLevelConstants:
    def test_radicals(self):
        c = walsh5_constants()
        r5 = math.sqrt(5)
        assert c.alpha.real == pytest.approx(math.sin(math.pi / 5), abs=1e-15)
        assert c.u == pytest.approx(math.sqrt(abs(c.a) ** 2 + 2 * abs(c.alpha) ** 2), abs=1e-14)
        assert c.v == pytest.approx(math.sqrt(2) * abs(c.beta_hat), abs=1e-14)
        assert c.cos_theta4 == pytest.approx(-c.a / r5)

    def test_s_matches_rotation(self):
        # top-left block of A4 is I - (1 - cos theta4) |v><v| / u^2, printed as I - s |v><v|
        c = walsh5_constants()
        assert c.s == pytest.approx((1 - c.cos_theta4) / c.u**2, abs=1e-14)

    def test_t_matches_rotation(self):
        c = walsh5_constants()
        e = c.a + c.t * c.a**2
        printed = abs(c.beta_hat) ** 2 / (math.sqrt(5) * (math.sqrt(5) - e))
        assert printed == pytest.approx((1 - c.cos_theta3) * abs(c.beta_hat) ** 2 / c.v**2, abs=1e-14)

    def test_factors_unitary(self):
        for f in recipe_walsh(5).sequence:
            assert unitary_error(f.matrix()) <= 1e-10


class TestVerify:
    def test_sigma3(self):
        check = verify_recipe(recipe_sigma3(7))
        assert check.passed and check.error <= 1e-13

    def test_corrupted(self):
        assert not verify_recipe(corrupt_first_phase(recipe_sigma3(7), 1e-3)).passed

    def test_walsh5(self):
        assert verify_recipe(recipe_walsh(5)).passed

    def test_corrupted_walsh_is_located(self, monkeypatch):
        import jarlskog.synthesis as syn

        bad = corrupt_first_phase(recipe_walsh(5), 1e-3)
        monkeypatch.setattr(syn, "recipe_walsh", lambda n: bad)
        assert not verify_recipe(bad).passed
        assert syn.diagnose_walsh(5).startswith("A0 ")


def test_pauli_recipe():
    for n in (2, 3, 5):
        for a in range(n):
            for b in range(n):
                r = recipe_pauli(n, a, b)
                assert r.module_count == a * n + b
                assert verify_recipe(r).error <= 1e-12


def test_recipe_for_dispatch():
    assert recipe_for(GateId(GateKind.WALSH, 4)).module_count == 9
    assert recipe_for(GateId(GateKind.K, 5)).target.kind is GateKind.K
    assert np.array_equal(recipe_for(GateId(GateKind.SIGMA1, 4)).matrix().round(12), sigma1(4))
