from fractions import Fraction as F

import numpy as np
import pytest

from permorb import (
    Diag,
    QSqrt,
    Split,
    TableTooLarge,
    Twisted,
    TwistedSplit,
    chi_of_lambda,
    decompose_module,
    diag,
    dual_orbifold,
    enumerate_modules,
    fuse_orbifold,
    fusion_table,
    glob,
    induce,
    is_simple_current,
    label_sort_key,
    nondiag,
    qdim_orbifold,
    twisted,
    vector,
    vl_label,
)
from permorb.errors import DegeneratePair
from permorb.verify import (
    check_associativity,
    check_commutativity,
    check_duality_pairing,
    check_identity,
    check_multiplicities,
    check_qdim_homomorphism,
    verify,
)

from conftest import RING_AXIOM_NAMES, get_lattice


def D(lat, coords, eps):
    return diag(lat, vector(coords), eps)


def T(lat, coords, eps):
    return twisted(lat, vector(coords), eps)


class TestEnumeration:
    def test_a1_count(self, a1):
        assert len(enumerate_modules(a1)) == 9

    def test_e8_labels(self, e8):
        mods = enumerate_modules(e8)
        z = vector([0] * 8)
        assert mods == [Diag(z, 0), Diag(z, 1), Twisted(z, 0), Twisted(z, 1)]

    def test_a2_count(self, a2):
        assert len(enumerate_modules(a2)) == 15

    @pytest.mark.parametrize("name", RING_AXIOM_NAMES + ["d4", "e8"])
    def test_count_formula(self, name):
        lat = get_lattice(name)
        l = lat.det
        mods = enumerate_modules(lat)
        assert len(mods) == len(set(mods)) == (l * l + 7 * l) // 2

    def test_sorted_by_global_order(self, a1):
        mods = enumerate_modules(a1)
        keys = [label_sort_key(a1, m) for m in mods]
        assert keys == sorted(keys)


class TestConstructors:
    def test_nondiag_unordered(self, a1):
        a = nondiag(a1, vector([F(1, 2)]), vector([0]))
        b = nondiag(a1, vector([0]), vector([F(1, 2)]))
        assert a == b

    def test_nondiag_degenerate(self, a1):
        with pytest.raises(DegeneratePair):
            nondiag(a1, vector([1]), vector([0]))

    def test_twisted_resolution_flips_parity(self, a1):
        # moving the label by the generator crosses an odd-weight translation
        assert T(a1, [1], 0) == Twisted(vector([0]), 1)
        assert T(a1, [F(3, 2)], 0) == Twisted(vector([F(1, 2)]), 0)

    def test_twisted_resolution_idempotent(self, a1):
        t = T(a1, [F(-5, 2)], 1)
        assert twisted(a1, t.lam, t.eps) == t


class TestDecompose:
    def test_diag_half(self, a1):
        parts = decompose_module(a1, D(a1, [F(1, 2)], 0))
        assert parts == [
            (vl_label(a1, vector([1])), Split(vector([0]), 1)),
            (vl_label(a1, vector([0])), Split(vector([1]), 1)),
        ]

    def test_vacuum_module(self, a1):
        parts = decompose_module(a1, D(a1, [0], 0))
        assert parts == [
            (vl_label(a1, vector([0])), Split(vector([0]), 1)),
            (vl_label(a1, vector([1])), Split(vector([1]), 1)),
        ]

    def test_twisted_zero(self, a1):
        chi0 = chi_of_lambda(a1, vector([0]))
        parts = decompose_module(a1, T(a1, [0], 0))
        assert parts == [
            (vl_label(a1, vector([0])), TwistedSplit(chi0, 1)),
            (vl_label(a1, vector([1])), TwistedSplit(chi_of_lambda(a1, vector([1])), -1)),
        ]

    def test_nondiag(self, a1):
        m = nondiag(a1, vector([F(1, 2)]), vector([0]))
        parts = decompose_module(a1, m)
        assert len(parts) == 2
        vls = {v for v, _ in parts}
        assert vls == {vl_label(a1, vector([F(1, 2)])), vl_label(a1, vector([F(3, 2)]))}

    @pytest.mark.parametrize("name", ["a1", "a2", "chain3", "d4"])
    def test_summand_count(self, name):
        lat = get_lattice(name)
        for m in enumerate_modules(lat):
            assert len(decompose_module(lat, m)) == 2**lat.dim


class TestInduce:
    def test_matching_character(self, a1):
        h = vector([F(1, 2)])
        w = (vl_label(a1, h), TwistedSplit(chi_of_lambda(a1, h), 1))
        assert induce(a1, w) == Twisted(h, 0)

    def test_mismatched_character(self, a1):
        h = vector([F(1, 2)])
        w = (vl_label(a1, h), TwistedSplit(chi_of_lambda(a1, vector([0])), 1))
        assert induce(a1, w) is None

    def test_minus_branch(self, a1):
        z = vector([0])
        w = (vl_label(a1, z), TwistedSplit(chi_of_lambda(a1, z), -1))
        assert induce(a1, w) == Twisted(z, 1)

    @pytest.mark.parametrize("name", ["a1", "a2", "scaled4", "chain3"])
    def test_all_constituents_roundtrip(self, name):
        lat = get_lattice(name)
        for m in enumerate_modules(lat):
            if not isinstance(m, Twisted):
                continue
            for w in decompose_module(lat, m):
                assert induce(lat, w) == m


class TestQdims:
    def test_values(self, a1):
        assert qdim_orbifold(a1, D(a1, [0], 0)) == QSqrt.of(1, 2)
        assert qdim_orbifold(a1, nondiag(a1, vector([0]), vector([F(1, 2)]))) == QSqrt.of(2, 2)
        assert qdim_orbifold(a1, T(a1, [0], 0)) == QSqrt.sqrt_rad(2)

    def test_glob_values(self):
        assert glob(get_lattice("a1")) == QSqrt.of(16, 2)
        assert glob(get_lattice("e8")) == QSqrt.of(4, 1)
        assert glob(get_lattice("a2")) == QSqrt.of(36, 3)

    def test_simple_currents(self, a1, e8):
        assert is_simple_current(a1, D(a1, [F(1, 2)], 1))
        assert not is_simple_current(a1, nondiag(a1, vector([0]), vector([F(1, 2)])))
        assert not is_simple_current(a1, T(a1, [0], 0))
        assert is_simple_current(e8, T(e8, [0] * 8, 0))


class TestDuals:
    def test_diag_self_dual_at_half(self, a1):
        m = D(a1, [F(1, 2)], 1)
        assert dual_orbifold(a1, m) == m

    def test_twisted_zero(self, a1):
        m = T(a1, [0], 0)
        assert dual_orbifold(a1, m) == m

    @pytest.mark.parametrize("name", ["a2", "odd7", "chain3"])
    def test_involution(self, name):
        lat = get_lattice(name)
        for m in enumerate_modules(lat):
            assert dual_orbifold(lat, dual_orbifold(lat, m)) == m

    def test_nondiag_negates(self):
        lat = get_lattice("odd7")
        reps = list(lat.dual_mod_lattice)
        m = nondiag(lat, reps[1], reps[2])
        d = dual_orbifold(lat, m)
        got = {d.lam, d.mu}
        neg = {
            nondiag(lat, vector([-c for c in reps[1]]), vector([-c for c in reps[2]])).lam,
            nondiag(lat, vector([-c for c in reps[1]]), vector([-c for c in reps[2]])).mu,
        }
        assert got == neg


class TestFuseExamples:
    def test_diag_diag(self, a1):
        out = fuse_orbifold(a1, D(a1, [F(1, 2)], 0), D(a1, [F(1, 2)], 1))
        assert out == {D(a1, [0], 1): 1}

    def test_nondiag_square(self, a1):
        n = nondiag(a1, vector([F(1, 2)]), vector([0]))
        out = fuse_orbifold(a1, n, n)
        assert out == {
            D(a1, [0], 0): 1,
            D(a1, [0], 1): 1,
            D(a1, [F(1, 2)], 0): 1,
            D(a1, [F(1, 2)], 1): 1,
        }

    def test_twisted_twisted_solvable(self, a1):
        # both halving classes contribute a diagonal term; the nonzero class
        # crosses an odd-weight translation, so its parity is opposite
        out = fuse_orbifold(a1, T(a1, [0], 0), T(a1, [0], 1))
        assert out == {D(a1, [0], 1): 1, D(a1, [F(1, 2)], 0): 1}

    def test_twisted_twisted_unsolvable(self, a1):
        out = fuse_orbifold(a1, T(a1, [0], 0), T(a1, [F(1, 2)], 0))
        assert out == {nondiag(a1, vector([F(1, 2)]), vector([0])): 1}

    def test_identity(self, a1):
        unit = D(a1, [0], 0)
        for m in enumerate_modules(a1):
            assert fuse_orbifold(a1, unit, m) == {m: 1}

    def test_qdim_budget_on_examples(self, a1):
        for a in enumerate_modules(a1):
            for b in enumerate_modules(a1):
                out = fuse_orbifold(a1, a, b)
                total = QSqrt.of(0, 2)
                for c, mult in out.items():
                    total = total + QSqrt.of(mult, 2) * qdim_orbifold(a1, c)
                assert total == qdim_orbifold(a1, a) * qdim_orbifold(a1, b)


class TestFusionTable:
    def test_guard(self, a1):
        with pytest.raises(TableTooLarge):
            fusion_table(a1, max_l=1)

    def test_tensor_shape_and_symmetry(self, a1):
        table = fusion_table(a1)
        assert table.tensor.shape == (9, 9, 9)
        assert np.array_equal(table.tensor, table.tensor.swapaxes(0, 1))

    def test_multiplicity_lookup(self, a1):
        table = fusion_table(a1)
        unit = D(a1, [0], 0)
        for m in table.labels:
            assert table.multiplicity(unit, m, m) == 1


class TestVerify:
    @pytest.mark.parametrize("name", ["a1", "a2", "e8"])
    def test_all_pass(self, name):
        report = verify(get_lattice(name))
        assert report.all_passed, [r for r in report.results if not r.passed]

    def test_corrupted_table_caught_with_witness(self, a1):
        table = fusion_table(a1)
        # flip one twisted-sector parity: T(0;0) x T(0;0) gains D(1/2;0)
        i = table.index[T(a1, [0], 0)]
        j = table.index[D(a1, [F(1, 2)], 0)]
        k = table.index[D(a1, [F(1, 2)], 1)]
        table.tensor[i, i, j], table.tensor[i, i, k] = (
            table.tensor[i, i, k],
            table.tensor[i, i, j],
        )
        res = check_associativity(table)
        assert not res.passed and "witness" in res.detail

    def test_corrupted_identity_caught(self, a1):
        table = fusion_table(a1)
        unit = table.index[D(a1, [0], 0)]
        table.tensor[unit, 1, 1] = 0
        assert not check_identity(table).passed

    def test_corrupted_commutativity_caught(self, a1):
        table = fusion_table(a1)
        table.tensor[0, 1, 1] = 0
        assert not check_commutativity(table).passed

    def test_doubled_multiplicity_caught(self, a1):
        table = fusion_table(a1)
        table.tensor[2, 3, :] *= 2
        assert not check_multiplicities(table).passed
        assert not check_qdim_homomorphism(table).passed

    def test_broken_duality_caught(self, a1):
        table = fusion_table(a1)
        unit = table.index[D(a1, [0], 0)]
        i = table.index[T(a1, [0], 0)]
        j = table.index[T(a1, [0], 1)]
        col = table.tensor[:, :, unit].copy()
        table.tensor[i, :, unit] = col[j, :]
        table.tensor[j, :, unit] = col[i, :]
        assert not check_duality_pairing(table).passed
