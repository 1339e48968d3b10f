"""Span-criterion stability: known verdicts, witnesses, and the oracle."""

import random
from fractions import Fraction
from itertools import permutations

import pytest

from stabgeom import (
    StabilityClass,
    SubsetTooLargeError,
    classify,
    oracle_classify,
    worst_subspace,
)
from stabgeom.randconf import random_configuration, random_transform

from helpers import config_of, triple_point_config


class TestKnownVerdicts:
    def test_generic_six_points_weight_two_is_stable(self):
        config = config_of(
            (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (1, 4, 9)
        )
        verdict = classify(config, 2)
        assert verdict.classification is StabilityClass.STABLE
        assert verdict.witness is None
        assert verdict.is_stable and verdict.is_semistable

    def test_triple_point_weight_two_is_unstable(self):
        verdict = classify(triple_point_config(), 2)
        assert verdict.classification is StabilityClass.UNSTABLE
        assert verdict.witness.indices == (0, 1, 2)
        assert verdict.witness.span_dim == 1
        assert verdict.witness.size == 3
        assert not verdict.is_semistable

    def test_double_point_weight_two_is_strictly_semistable(self):
        config = config_of(
            (1, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)
        )
        verdict = classify(config, 2)
        assert verdict.classification is StabilityClass.STRICTLY_SEMISTABLE
        assert verdict.witness.indices == (0, 1)

    def test_four_on_a_line_weight_two_is_strictly_semistable(self):
        config = config_of(
            (1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 1, 0), (0, 0, 1), (1, 1, 1)
        )
        verdict = classify(config, 2)
        assert verdict.classification is StabilityClass.STRICTLY_SEMISTABLE
        assert verdict.witness.span_dim == 2
        assert verdict.witness.size == 4

    def test_fractional_weight(self):
        config = config_of((1, 0), (1, 0), (0, 1), (1, 1))
        assert classify(config, Fraction(3, 2)).classification is StabilityClass.UNSTABLE
        assert classify(config, 2).classification is StabilityClass.STRICTLY_SEMISTABLE
        assert classify(config, 3).classification is StabilityClass.STABLE

    def test_rank_one_configuration_is_vacuously_stable(self):
        config = config_of((1,), (1,), (1,))
        verdict = classify(config, 2)
        assert verdict.classification is StabilityClass.STABLE
        with pytest.raises(ValueError):
            worst_subspace(config, 2)

    def test_nonpositive_weight_rejected(self):
        config = config_of((1, 0), (0, 1))
        for g in (0, -1, Fraction(-1, 2)):
            with pytest.raises(ValueError):
                classify(config, g)
            with pytest.raises(ValueError):
                oracle_classify(config, g)


class TestWitnessContract:
    def test_witness_is_span_closed(self):
        # the pair (0,1) spans the line that also carries point 3
        config = config_of((1, 0, 0), (2, 1, 0), (0, 0, 1), (1, 2, 0), (1, 1, 1), (3, 1, 2))
        verdict = classify(config, 1)
        members = set(verdict.witness.indices)
        rows = config.rows()
        from stabgeom.exactgeom import echelon_basis, in_span

        basis = echelon_basis([rows[i] for i in verdict.witness.indices])
        closure = {i for i in range(len(rows)) if in_span(basis, rows[i])}
        assert members == closure

    def test_ties_prefer_smaller_then_lexicographic(self):
        # two disjoint double points, identical margins: indices (0,1) win
        config = config_of((1, 1, 0), (1, 1, 0), (0, 1, 1), (0, 1, 1), (1, 0, 0), (0, 1, 0))
        verdict = classify(config, 2)
        assert verdict.witness.indices == (0, 1)
        oracle = oracle_classify(config, 2)
        assert oracle.witness.indices == (0, 1)

    def test_worst_subspace_margin_matches_witness(self):
        config = triple_point_config()
        subspace, margin = worst_subspace(config, 2)
        assert margin == Fraction(1)
        assert subspace.dim == 1
        assert subspace.contains((1, 0, 0))


class TestOracleAgreement:
    def test_verdicts_and_witnesses_match_on_seeded_draws(self):
        rng = random.Random(20240817)
        for _ in range(60):
            r = rng.choice((2, 3))
            config = random_configuration(rng, r, rng.randint(4, 8))
            g = rng.choice((2, 3, Fraction(5, 2)))
            assert classify(config, g) == oracle_classify(config, g)

    def test_class_invariant_under_permutation_scaling_and_transform(self):
        rng = random.Random(99)
        for _ in range(25):
            config = random_configuration(rng, 3, 6)
            g = rng.choice((2, 3))
            base = classify(config, g).classification
            perm = rng.sample(range(len(config)), len(config))
            permuted = config_of(*(config.points[i].coords for i in perm))
            assert classify(permuted, g).classification is base
            moved = config.apply(random_transform(rng, 3))
            assert classify(moved, g).classification is base

    def test_small_symmetric_case_all_orderings(self):
        rows = ((1, 0), (1, 0), (0, 1), (1, 1))
        for perm in permutations(range(4)):
            config = config_of(*(rows[i] for i in perm))
            v = classify(config, 2)
            assert v.classification is StabilityClass.STRICTLY_SEMISTABLE
            assert v.witness.size == 2
            assert v == oracle_classify(config, 2)


class TestOracleCap:
    def test_oracle_refuses_beyond_cap(self, monkeypatch):
        monkeypatch.delenv("STAB_MAX_SUBSET_SIZE", raising=False)
        config = config_of(*[(1, i) for i in range(13)])
        with pytest.raises(SubsetTooLargeError):
            oracle_classify(config, 2)

    def test_env_var_raises_the_cap(self, monkeypatch):
        config = config_of(*[(1, i) for i in range(13)])
        monkeypatch.setenv("STAB_MAX_SUBSET_SIZE", "14")
        verdict = oracle_classify(config, 2)
        assert verdict == classify(config, 2)

    def test_env_var_lowers_the_cap(self, monkeypatch):
        config = config_of((1, 0), (0, 1), (1, 1), (1, 2))
        monkeypatch.setenv("STAB_MAX_SUBSET_SIZE", "3")
        with pytest.raises(SubsetTooLargeError):
            oracle_classify(config, 2)

    def test_env_var_must_be_an_integer(self, monkeypatch):
        config = config_of((1, 0), (0, 1))
        monkeypatch.setenv("STAB_MAX_SUBSET_SIZE", "lots")
        with pytest.raises(ValueError):
            oracle_classify(config, 2)
