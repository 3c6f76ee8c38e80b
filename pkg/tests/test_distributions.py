"""Unit tests for ingestion, information functionals, and product structure."""

import json
import math

import numpy as np
import pytest

from infodep import (
    Channel,
    JointDistribution,
    LabelMismatch,
    LogBase,
    NegativeEntry,
    PMF,
    ParseError,
    SumNotOne,
    SupportViolation,
    ValidationError,
    ZeroMarginal,
    channel_of,
    conditional_expectation,
    entropy,
    joint_from_matrix,
    kl_divergence,
    load_joint_json,
    lp_norm,
    marginals,
    mutual_information,
    product,
    push_forward,
    transpose,
)
from conftest import random_joint

FIG2_MI_BITS = 0.5954372523105548
FIG2_PY_ENTROPY = 1.5545851693377994
FIG2_VERTEX_KL = 0.6315172029168968


class TestPMF:
    def test_valid_construction_and_length(self):
        p = PMF(("a", "b"), np.array([0.25, 0.75]))
        assert len(p) == 2
        assert p.labels == ("a", "b")

    def test_tiny_negative_is_clipped(self):
        p = PMF((0, 1), np.array([1.0 + 5e-13, -5e-13]))
        assert p.probs[1] == 0.0
        assert p.probs.sum() == pytest.approx(1.0, abs=1e-15)

    def test_negative_entry_rejected(self):
        with pytest.raises(NegativeEntry):
            PMF((0, 1), np.array([1.1, -0.1]))

    def test_sum_not_one_rejected(self):
        with pytest.raises(SumNotOne):
            PMF((0, 1), np.array([0.6, 0.6]))

    def test_near_one_is_renormalized_exactly(self):
        p = PMF((0, 1), np.array([0.5 + 3e-10, 0.5 + 3e-10]))
        assert p.probs.sum() == pytest.approx(1.0, abs=1e-15)

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValidationError):
            PMF(("a", "a"), np.array([0.5, 0.5]))

    def test_unhashable_labels_rejected(self):
        with pytest.raises(ValidationError):
            PMF(([0], [1]), np.array([0.5, 0.5]))

    def test_probs_are_read_only(self):
        p = PMF((0, 1), np.array([0.5, 0.5]))
        with pytest.raises(ValueError):
            p.probs[0] = 0.9


class TestJointAndChannel:
    def test_fig2_marginals(self, fig2):
        px, py = marginals(fig2)
        np.testing.assert_allclose(px.probs, [0.5, 0.5], atol=1e-15)
        np.testing.assert_allclose(py.probs, [1 / 3, 5 / 12, 1 / 4], atol=1e-15)

    def test_remark3_marginals(self, remark3):
        px, py = marginals(remark3)
        np.testing.assert_allclose(px.probs, [0.85, 0.15], atol=1e-12)
        np.testing.assert_allclose(py.probs, [0.39, 0.61], atol=1e-12)

    def test_zero_row_rejected(self):
        with pytest.raises(ZeroMarginal):
            joint_from_matrix([[0.5, 0.5], [0.0, 0.0]], (0, 1), (0, 1))

    def test_zero_column_rejected(self):
        with pytest.raises(ZeroMarginal):
            joint_from_matrix([[0.5, 0.0], [0.5, 0.0]], (0, 1), (0, 1))

    def test_non_2d_rejected(self):
        with pytest.raises(ValidationError):
            joint_from_matrix([0.5, 0.5], (0, 1), (0, 1))

    def test_channel_of_fig2_rows(self, fig2):
        c = channel_of(fig2)
        np.testing.assert_allclose(c.pyx[0], [2 / 3, 1 / 3, 0.0], atol=1e-15)
        np.testing.assert_allclose(c.pyx[1], [0.0, 0.5, 0.5], atol=1e-15)

    def test_channel_round_trip(self, fig2):
        c = channel_of(fig2)
        back = c.joint()
        np.testing.assert_allclose(back.pxy, fig2.pxy, atol=1e-15)

    def test_channel_rejects_non_stochastic_rows(self):
        inp = PMF((0, 1), np.array([0.5, 0.5]))
        with pytest.raises(SumNotOne):
            Channel((0, 1), (0, 1), np.array([[0.7, 0.7], [0.5, 0.5]]), inp)

    def test_channel_rejects_label_mismatch(self):
        inp = PMF(("u", "v"), np.array([0.5, 0.5]))
        with pytest.raises(LabelMismatch):
            Channel((0, 1), (0, 1), np.array([[1.0, 0.0], [0.0, 1.0]]), inp)

    def test_push_forward_point_mass(self, fig2):
        c = channel_of(fig2)
        r = PMF((0, 1), np.array([0.0, 1.0]))
        out = push_forward(c, r)
        np.testing.assert_allclose(out.probs, [0.0, 0.5, 0.5], atol=1e-15)

    def test_push_forward_of_input_is_y_marginal(self, fig2):
        c = channel_of(fig2)
        out = push_forward(c, c.input)
        np.testing.assert_allclose(out.probs, marginals(fig2)[1].probs, atol=1e-15)

    def test_push_forward_label_mismatch(self, fig2):
        c = channel_of(fig2)
        with pytest.raises(LabelMismatch):
            push_forward(c, PMF(("a", "b"), np.array([0.5, 0.5])))


class TestEntropyAndKL:
    def test_fair_coin_entropy_is_one_bit(self):
        assert entropy(PMF((0, 1), np.array([0.5, 0.5]))) == pytest.approx(1.0, abs=1e-15)

    def test_point_mass_entropy_is_zero(self):
        assert entropy(PMF((0, 1), np.array([1.0, 0.0]))) == 0.0

    def test_fig2_output_entropy(self, fig2):
        py = marginals(fig2)[1]
        assert entropy(py) == pytest.approx(FIG2_PY_ENTROPY, abs=1e-12)

    def test_nats_equals_bits_times_ln2(self):
        p = PMF((0, 1, 2), np.array([0.2, 0.3, 0.5]))
        assert entropy(p, LogBase.NATS) == pytest.approx(
            entropy(p, LogBase.BITS) * math.log(2), abs=1e-14
        )

    def test_kl_of_point_mass_from_fair_coin(self):
        r = PMF((0, 1), np.array([0.0, 1.0]))
        p = PMF((0, 1), np.array([0.5, 0.5]))
        assert kl_divergence(r, p) == pytest.approx(1.0, abs=1e-15)

    def test_kl_zero_iff_equal(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            probs = rng.dirichlet(np.ones(4))
            p = PMF((0, 1, 2, 3), probs)
            assert kl_divergence(p, p) == 0.0
            q = PMF((0, 1, 2, 3), rng.dirichlet(np.ones(4)))
            d = kl_divergence(q, p)
            assert d >= 0.0
            if np.max(np.abs(q.probs - p.probs)) > 1e-6:
                assert d > 0.0

    def test_kl_fig2_vertex_value(self, fig2):
        c = channel_of(fig2)
        pushed = push_forward(c, PMF((0, 1), np.array([0.0, 1.0])))
        py = marginals(fig2)[1]
        assert kl_divergence(pushed, py) == pytest.approx(FIG2_VERTEX_KL, abs=1e-12)

    def test_kl_support_violation(self):
        r = PMF((0, 1), np.array([0.5, 0.5]))
        p = PMF((0, 1), np.array([1.0, 0.0]))
        with pytest.raises(SupportViolation):
            kl_divergence(r, p)

    def test_kl_label_mismatch(self):
        r = PMF((0, 1), np.array([0.5, 0.5]))
        p = PMF(("a", "b"), np.array([0.5, 0.5]))
        with pytest.raises(LabelMismatch):
            kl_divergence(r, p)

    def test_push_forward_contracts_kl(self, fig2):
        rng = np.random.default_rng(11)
        c = channel_of(fig2)
        py = marginals(fig2)[1]
        for _ in range(25):
            r = PMF((0, 1), rng.dirichlet(np.ones(2)))
            upstream = kl_divergence(r, c.input)
            downstream = kl_divergence(push_forward(c, r), py)
            assert downstream <= upstream + 1e-12


class TestMutualInformation:
    def test_independent_is_zero(self, independent):
        assert mutual_information(independent) == pytest.approx(0.0, abs=1e-15)

    def test_identity_coupling_is_one_bit(self, identity_coupling):
        assert mutual_information(identity_coupling) == pytest.approx(1.0, abs=1e-15)

    def test_fig2_value(self, fig2):
        assert mutual_information(fig2) == pytest.approx(FIG2_MI_BITS, abs=1e-12)

    def test_nonnegative_on_random(self):
        rng = np.random.default_rng(3)
        for _ in range(30):
            j = random_joint(rng, int(rng.integers(2, 5)), int(rng.integers(2, 5)))
            assert mutual_information(j) >= 0.0


class TestProduct:
    def test_marginal_factorization(self, fig2, remark3):
        prod = product(fig2, remark3)
        assert prod.shape == (4, 6)
        px, py = marginals(prod)
        px1, py1 = marginals(fig2)
        px2, py2 = marginals(remark3)
        np.testing.assert_allclose(px.probs, np.kron(px1.probs, px2.probs), atol=1e-15)
        np.testing.assert_allclose(py.probs, np.kron(py1.probs, py2.probs), atol=1e-15)

    def test_entropy_and_mi_additivity(self, fig2, remark3):
        prod = product(fig2, remark3)
        assert mutual_information(prod) == pytest.approx(
            mutual_information(fig2) + mutual_information(remark3), abs=1e-10
        )
        hx = entropy(marginals(prod)[0])
        assert hx == pytest.approx(
            entropy(marginals(fig2)[0]) + entropy(marginals(remark3)[0]), abs=1e-10
        )

    def test_labels_are_pairs(self, fig2, remark3):
        prod = product(fig2, remark3)
        assert prod.x_labels[0] == (fig2.x_labels[0], remark3.x_labels[0])
        assert prod.y_labels[-1] == (fig2.y_labels[-1], remark3.y_labels[-1])

    def test_transpose_swaps_axes(self, fig2):
        t = transpose(fig2)
        assert t.shape == (3, 2)
        np.testing.assert_allclose(t.pxy, fig2.pxy.T, atol=0)
        assert t.x_labels == fig2.y_labels


class TestLpNorm:
    def test_constant_function(self):
        w = PMF((0, 1), np.array([0.3, 0.7]))
        g = np.array([2.0, 2.0])
        for p in (-1.0, 0.0, 0.5, 1.0, 2.0, 4.0):
            assert lp_norm(g, w, p) == pytest.approx(2.0, abs=1e-12)

    def test_euclidean_case(self):
        w = PMF((0, 1), np.array([0.5, 0.5]))
        assert lp_norm(np.array([1.0, 2.0]), w, 2.0) == pytest.approx(
            math.sqrt(2.5), abs=1e-14
        )

    def test_geometric_mean_at_zero(self):
        w = PMF((0, 1), np.array([0.5, 0.5]))
        assert lp_norm(np.array([1.0, 4.0]), w, 0.0) == pytest.approx(2.0, abs=1e-12)

    def test_zero_value_with_nonpositive_order(self):
        w = PMF((0, 1), np.array([0.5, 0.5]))
        assert lp_norm(np.array([0.0, 3.0]), w, -1.0) == 0.0
        assert lp_norm(np.array([0.0, 3.0]), w, 0.0) == 0.0

    def test_zero_weight_entries_ignored(self):
        w = PMF((0, 1, 2), np.array([0.5, 0.5, 0.0]))
        assert lp_norm(np.array([1.0, 2.0, 50.0]), w, 2.0) == pytest.approx(
            math.sqrt(2.5), abs=1e-14
        )

    def test_monotone_in_order(self):
        rng = np.random.default_rng(5)
        orders = (-1.0, 0.0, 0.5, 1.0, 2.0, 4.0)
        for _ in range(20):
            w = PMF(tuple(range(5)), rng.dirichlet(np.ones(5)))
            g = rng.uniform(0.1, 3.0, size=5)
            vals = [lp_norm(g, w, p) for p in orders]
            for lo, hi in zip(vals, vals[1:]):
                assert hi >= lo - 1e-12


class TestConditionalExpectation:
    def test_constant_function(self, fig2):
        out = conditional_expectation(fig2, np.ones(3))
        np.testing.assert_allclose(out, [1.0, 1.0], atol=1e-14)

    def test_fig2_indicator(self, fig2):
        out = conditional_expectation(fig2, np.array([1.0, 0.0, 0.0]))
        np.testing.assert_allclose(out, [2 / 3, 0.0], atol=1e-14)

    def test_independent_gives_mean(self, independent):
        g = np.array([3.0, -1.0])
        out = conditional_expectation(independent, g)
        np.testing.assert_allclose(out, [1.0, 1.0], atol=1e-14)

    def test_range_bounds(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            j = random_joint(rng, 3, 4)
            g = rng.normal(size=4)
            out = conditional_expectation(j, g)
            assert np.all(out >= g.min() - 1e-12)
            assert np.all(out <= g.max() + 1e-12)


class TestJsonLoading:
    def test_round_trip_with_fractions(self, tmp_path):
        doc = {
            "x_labels": [0, 1],
            "y_labels": ["0", "E", "1"],
            "pxy": [["1/3", "1/6", 0], [0, "1/4", "1/4"]],
        }
        path = tmp_path / "j.json"
        path.write_text(json.dumps(doc))
        j = load_joint_json(path)
        np.testing.assert_allclose(
            j.pxy, [[1 / 3, 1 / 6, 0.0], [0.0, 0.25, 0.25]], atol=1e-15
        )
        assert j.y_labels == ("0", "E", "1")

    def test_missing_key(self, tmp_path):
        path = tmp_path / "j.json"
        path.write_text(json.dumps({"x_labels": [0], "pxy": [[1.0]]}))
        with pytest.raises(ParseError):
            load_joint_json(path)

    def test_malformed_json_reports_position(self, tmp_path):
        path = tmp_path / "j.json"
        path.write_text('{"x_labels": [0, 1], ')
        with pytest.raises(ParseError) as exc:
            load_joint_json(path)
        assert "line" in str(exc.value)

    def test_ragged_matrix(self, tmp_path):
        path = tmp_path / "j.json"
        path.write_text(
            json.dumps({"x_labels": [0, 1], "y_labels": [0, 1], "pxy": [[0.5, 0.5], [1.0]]})
        )
        with pytest.raises(ParseError):
            load_joint_json(path)

    def test_bad_fraction_string(self, tmp_path):
        path = tmp_path / "j.json"
        path.write_text(
            json.dumps(
                {"x_labels": [0, 1], "y_labels": [0, 1], "pxy": [["x/y", 0.5], [0.25, 0.25]]}
            )
        )
        with pytest.raises(ParseError):
            load_joint_json(path)
