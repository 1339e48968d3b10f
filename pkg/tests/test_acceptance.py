"""Acceptance gate: every criterion at its stated tolerance and budget.

Run with -v to get one pass/fail line per criterion. Each criterion is
exact (no numerical tolerance anywhere); the asserted bound on elapsed
time is the stated runtime budget for the check.
"""

import time

from stabgeom.cli import main
from stabgeom.verify import (
    check_combinatorics,
    check_destabilizing_example,
    check_dictionary,
    check_duality,
    check_gale,
    check_git_oracle,
    check_igusa,
    check_segre_nodes,
    check_thresholds,
)


def run(check, budget, *args):
    result = check(*args)
    assert result.passed, f"{result.name}: {result.detail}"
    assert result.elapsed < budget, (
        f"{result.name}: {result.elapsed:.2f}s exceeds the {budget}s budget"
    )
    return result


def test_criterion_01_git_oracle_equivalence():
    """classify equals oracle_classify on 1000 random configurations, exactly."""
    run(check_git_oracle, 10.0, 1000, 0)


def test_criterion_02_dictionary_agreement():
    """Span-criterion and alpha verdicts agree on 1000 configurations with n = rg."""
    run(check_dictionary, 10.0, 1000, 0)


def test_criterion_03_destabilizing_example():
    """g in 4..8: the line configuration is Stable and its wall sits at alpha = 1."""
    run(check_destabilizing_example, 1.0)


def test_criterion_04_thresholds_and_walls():
    """Thresholds equal g(r-1) for r,g <= 6; section-deficient walls stay bounded by it."""
    run(check_thresholds, 1.0)


def test_criterion_05_gale_involution_and_self_association():
    """100 involutions exact; self-association iff on a smooth conic; products zero."""
    run(check_gale, 5.0, 100, 10)


def test_criterion_06_segre_nodes():
    """Exactly 10 verified nodes, split bijection, no strays among 10^4 random points."""
    run(check_segre_nodes, 30.0, 10_000, 0)


def test_criterion_07_igusa_singular_locus():
    """15 singular lines as identities, 15 singular points, 45 flags match the 15_3."""
    run(check_igusa, 5.0)


def test_criterion_08_polar_duality():
    """Both polar directions vanish exactly on 200 sampled points and their images."""
    run(check_duality, 10.0, 200, 0)


def test_criterion_09_matching_combinatorics():
    """15 matchings, 10 splits, every edge in exactly 3 matchings."""
    run(check_combinatorics, 1.0)


def test_criterion_10_verify_all_under_budget(capsys):
    """The full verify-all command exits 0 in under 60 seconds."""
    start = time.perf_counter()
    code = main(["verify-all"])
    elapsed = time.perf_counter() - start
    capsys.readouterr()
    assert code == 0
    assert elapsed < 60.0, f"verify-all took {elapsed:.2f}s"
