"""Self-contained verification suite behind the verify-all command.

Each check runs one acceptance-level claim end to end, re-deriving
expected values independently where feasible (direct formulas, literal
enumeration, recomputed matrix products). Negative results are recorded
in the returned CheckResult, never raised, so a run always reports every
check.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .cohsys import (
    SystemType,
    critical_values,
    destabilizing_example_config,
    equivalence_check,
    stabilization_threshold,
    subsystem_violates,
)
from .errors import StabgeomError
from .exactgeom import projectively_equivalent
from .gale import GaleData, conic_parameter_points, gale_transform, is_self_associated, on_smooth_conic
from .gitstab import classify, oracle_classify
from .modhyp import (
    NVARS,
    AmbientPoint,
    duality_check,
    igusa_lines,
    igusa_points,
    igusa_quartic,
    incidence_15_3,
    perfect_matchings,
    restricted_hessian_rank,
    segre_cubic,
    segre_nodes,
    three_three_splits,
    verify_singular_point,
)
from .randconf import (
    random_configuration,
    random_conic_parameters,
    random_frame_configuration,
    random_transform,
)

__all__ = [
    "CheckResult",
    "VerificationReport",
    "check_git_oracle",
    "check_dictionary",
    "check_destabilizing_example",
    "check_thresholds",
    "check_gale",
    "check_segre_nodes",
    "check_igusa",
    "check_duality",
    "check_combinatorics",
    "run_all",
]

_SEED_STRIDE = 7_654_321


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float
    skipped: bool = False

    def to_json(self) -> dict:
        # wall-clock time is deliberately left out: output bytes must be
        # deterministic for a fixed seed
        return {
            "name": self.name,
            "passed": self.passed,
            "skipped": self.skipped,
            "detail": self.detail,
        }


def _result(name: str, start: float, failures: list[str], ok_detail: str) -> CheckResult:
    elapsed = time.perf_counter() - start
    if failures:
        shown = "; ".join(failures[:3])
        if len(failures) > 3:
            shown += f"; and {len(failures) - 3} more"
        return CheckResult(name, False, shown, elapsed)
    return CheckResult(name, True, ok_detail, elapsed)


def _skipped(name: str) -> CheckResult:
    return CheckResult(name, True, "skipped (samples=0)", 0.0, skipped=True)


def check_git_oracle(cases: int = 1000, seed: int = 0) -> CheckResult:
    """Pruned classifier against the literal all-subsets oracle, full verdicts."""
    start = time.perf_counter()
    rng = random.Random(seed * _SEED_STRIDE + 11)
    weights = (2, 3, 4, Fraction(3, 2))
    failures: list[str] = []
    for i in range(cases):
        r = rng.choice((2, 3))
        n = rng.randint(4, 9)
        config = random_configuration(rng, r, n)
        g = rng.choice(weights)
        fast = classify(config, g)
        slow = oracle_classify(config, g)
        if fast != slow:
            failures.append(
                f"case {i}: classify={fast.classification.value} "
                f"oracle={slow.classification.value} rows={config.rows()} g={g}"
            )
    return _result(
        "git-oracle-agreement",
        start,
        failures,
        f"{cases}/{cases} random configurations agree, witnesses included",
    )


def check_dictionary(cases: int = 1000, seed: int = 0) -> CheckResult:
    """Span-criterion verdicts against the alpha test past the threshold."""
    start = time.perf_counter()
    rng = random.Random(seed * _SEED_STRIDE + 22)
    failures: list[str] = []
    for i in range(cases):
        r = rng.choice((2, 3))
        g = rng.choice((2, 3, 4))
        config = random_configuration(rng, r, r * g)
        report = equivalence_check(config, g)
        if not report.agree:
            failures.append(
                f"case {i}: git={report.git.classification.value} "
                f"alpha_ss={report.alpha_semistable} alpha_s={report.alpha_stable} "
                f"rows={config.rows()} g={g}"
            )
    return _result(
        "dictionary-agreement",
        start,
        failures,
        f"{cases}/{cases} configurations: semistable and stable verdicts match both routes",
    )


def check_destabilizing_example() -> CheckResult:
    """The weight-g line configuration and its wall at alpha = 1."""
    start = time.perf_counter()
    failures: list[str] = []
    below = (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10), Fraction(99, 100))
    at_or_above = (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(10))
    for g in range(4, 9):
        config = destabilizing_example_config(g)
        verdict = classify(config, g)
        if verdict.classification.value != "Stable":
            failures.append(f"g={g}: expected Stable, got {verdict.classification.value}")
        walls = critical_values(SystemType(2, 2 * g, 2))
        if Fraction(1) not in walls.values:
            failures.append(f"g={g}: 1 missing from critical values {walls.values}")
        full = SystemType(2, 2 * g, 2)
        sub = SystemType(1, g + 1, 0)
        for a in below:
            if not subsystem_violates(full, sub, a):
                failures.append(f"g={g}: no violation at alpha={a} < 1")
        for a in at_or_above:
            if subsystem_violates(full, sub, a):
                failures.append(f"g={g}: spurious violation at alpha={a} >= 1")
    return _result(
        "destabilizing-example",
        start,
        failures,
        "g=4..8: configuration Stable, wall at 1 present, violation iff alpha < 1",
    )


def check_thresholds() -> CheckResult:
    """Wall locations for types (r, rg, r) against the threshold g(r-1).

    For a section-deficient subtype (s, d', k') with k' < s the wall sits
    at (d' - gs)/(s - k'), which is at most g(r-s)/(s-k') <= g(r-1) since
    d' <= rg; the subtype then violates exactly strictly below its wall,
    so no violation from such a subtype survives past g(r-1). Equality at
    the threshold is attained (d' = rg, s = 1, k' = 0), which is what
    makes g(r-1) the last wall rather than a strict upper bound.
    """
    start = time.perf_counter()
    failures: list[str] = []
    for r in range(1, 7):
        for g in range(1, 7):
            if stabilization_threshold(r, g) != g * (r - 1):
                failures.append(f"threshold({r},{g}) != {g * (r - 1)}")
    for r in range(2, 7):
        for g in range(1, 7):
            full = SystemType(r, r * g, r)
            threshold = Fraction(g * (r - 1))
            walls = set(critical_values(full).values)
            max_wall = Fraction(0)
            for s in range(1, r):
                for kp in range(0, s):
                    for dp in range(0, r * g + 1):
                        if dp <= g * s:
                            continue
                        alpha = Fraction(dp - g * s, s - kp)
                        bound = Fraction(g * (r - s), s - kp)
                        if not (alpha <= bound <= threshold):
                            failures.append(
                                f"(r,g,s,d',k')=({r},{g},{s},{dp},{kp}): "
                                f"wall {alpha} breaks bound {bound} <= {threshold}"
                            )
                        if alpha not in walls:
                            failures.append(
                                f"(r,g,s,d',k')=({r},{g},{s},{dp},{kp}): "
                                f"wall {alpha} missing from critical_values"
                            )
                        max_wall = max(max_wall, alpha)
            if max_wall != threshold:
                failures.append(
                    f"(r,g)=({r},{g}): last section-deficient wall {max_wall} "
                    f"!= threshold {threshold}"
                )
            extremal = SystemType(1, r * g, 0)
            eps = Fraction(1, 1000)
            if not subsystem_violates(full, extremal, threshold - eps):
                failures.append(f"(r,g)=({r},{g}): no violation just below the threshold")
            if subsystem_violates(full, extremal, threshold):
                failures.append(f"(r,g)=({r},{g}): violation at the threshold itself")
            if subsystem_violates(full, extremal, threshold + 1):
                failures.append(f"(r,g)=({r},{g}): violation above the threshold")
    return _result(
        "thresholds-and-walls",
        start,
        failures,
        "r,g <= 6: thresholds match g(r-1); section-deficient walls obey "
        "(d'-gs)/(s-k') <= g(r-s)/(s-k') <= g(r-1) with violations only strictly below",
    )


def _gale_product_zero(data: GaleData) -> bool:
    g_rows = data.source.rows()
    gp_rows = data.target.rows()
    n = len(g_rows)
    for a in range(data.source.ambient_rank):
        for b in range(data.target.ambient_rank):
            total = sum(
                Fraction(g_rows[i][a]) * data.diag[i] * gp_rows[i][b] for i in range(n)
            )
            if total != 0:
                return False
    return True


def check_gale(involutions: int = 100, assoc_cases: int = 10, seed: int = 0) -> CheckResult:
    """Involution, the conic self-association criterion, and the product identity."""
    start = time.perf_counter()
    rng = random.Random(seed * _SEED_STRIDE + 33)
    failures: list[str] = []
    for i in range(involutions):
        config = random_frame_configuration(rng, 3, 6)
        try:
            once = gale_transform(config, seed=seed)
            twice = gale_transform(once.target, seed=seed)
            if not _gale_product_zero(once) or not _gale_product_zero(twice):
                failures.append(f"involution case {i}: product G^T D G' != 0")
            if projectively_equivalent(config, twice.target) is None:
                failures.append(
                    f"involution case {i}: double transform not equivalent, rows={config.rows()}"
                )
        except StabgeomError as exc:
            failures.append(f"involution case {i}: {type(exc).__name__}: {exc}")
    for i in range(assoc_cases):
        params = random_conic_parameters(rng)
        moved = conic_parameter_points(params).apply(random_transform(rng, 3))
        try:
            if not on_smooth_conic(moved):
                failures.append(f"conic case {i}: conic test rejects params {params}")
            if not is_self_associated(moved, seed=seed):
                failures.append(f"conic case {i}: not self-associated, params {params}")
        except StabgeomError as exc:
            failures.append(f"conic case {i}: {type(exc).__name__}: {exc}")
    done = 0
    while done < assoc_cases:
        config = random_frame_configuration(rng, 3, 6)
        if on_smooth_conic(config):
            continue
        try:
            if is_self_associated(config, seed=seed):
                failures.append(f"generic case {done}: self-associated off a conic, rows={config.rows()}")
        except StabgeomError as exc:
            failures.append(f"generic case {done}: {type(exc).__name__}: {exc}")
        done += 1
    return _result(
        "gale-involution-and-self-association",
        start,
        failures,
        f"{involutions} involutions exact; {assoc_cases}+{assoc_cases} conic/generic "
        "self-association verdicts correct; every product recomputed to zero",
    )


def check_segre_nodes(search_points: int = 10_000, seed: int = 0) -> CheckResult:
    """The ten nodes, their type, the split bijection, and a random search for strays."""
    start = time.perf_counter()
    model = segre_cubic()
    failures: list[str] = []
    nodes = segre_nodes()
    if len(nodes) != 10:
        failures.append(f"expected 10 nodes, got {len(nodes)}")
    coords_set = {n.point.coords for n in nodes}
    if len(coords_set) != 10:
        failures.append("nodes are not pairwise projectively distinct")
    for node in nodes:
        if not verify_singular_point(model, node.point):
            failures.append(f"node {node.point.coords} fails the singularity test")
        if restricted_hessian_rank(model, node.point) != 4:
            failures.append(f"node {node.point.coords} restricted Hessian rank != 4")
        plus, minus = node.split
        signs = {i: 1 for i in plus}
        signs.update({i: -1 for i in minus})
        if any(node.point.coords[i] != signs[i] for i in range(NVARS)):
            failures.append(f"node {node.point.coords} does not match split {node.split}")
    splits = three_three_splits()
    if len(splits) != 10 or {n.split for n in nodes} != set(splits):
        failures.append("split labels are not a bijection onto the 10 partitions")
    strays = 0
    if search_points > 0:
        rng = random.Random(seed * _SEED_STRIDE + 44)
        tried = 0
        while tried < search_points:
            v = [rng.randint(-30, 30) for _ in range(NVARS - 1)]
            v.append(-sum(v))
            if not any(v):
                continue
            tried += 1
            p = AmbientPoint(v)
            if verify_singular_point(model, p) and p.coords not in coords_set:
                strays += 1
                failures.append(f"stray singular point {p.coords}")
    detail = (
        "10 nodes verified (F=0, constant gradient, Hessian rank 4), "
        f"split bijection holds; {search_points} random hyperplane points, "
        f"{strays} extra singular"
    )
    if search_points == 0:
        detail = (
            "10 nodes verified (F=0, constant gradient, Hessian rank 4), "
            "split bijection holds; random search skipped"
        )
    return _result("segre-nodes", start, failures, detail)


def check_igusa() -> CheckResult:
    """Singular lines and points of the quartic and the 15_3 incidence."""
    start = time.perf_counter()
    model = igusa_quartic()
    failures: list[str] = []
    lines = igusa_lines()
    if len(lines) != 15:
        failures.append(f"expected 15 lines, got {len(lines)}")
    params = ((1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (3, 2))
    for line in lines:
        for t, u in params:
            point = line.point_at(t, u)
            if not verify_singular_point(model, point):
                failures.append(f"line {line.matching} not singular at (t,u)=({t},{u})")
    points = igusa_points()
    if len(points) != 15:
        failures.append(f"expected 15 points, got {len(points)}")
    for ip in points:
        if not verify_singular_point(model, ip.point):
            failures.append(f"distinguished point {ip.point.coords} not singular")
    structure = incidence_15_3()
    if len(structure.flags) != 45:
        failures.append(f"expected 45 flags, got {len(structure.flags)}")
    for pair in structure.points:
        if len(structure.lines_through(pair)) != 3:
            failures.append(f"pair {pair} not on exactly 3 lines")
    for matching in structure.lines:
        if len(structure.points_on(matching)) != 3:
            failures.append(f"matching {matching} not through exactly 3 points")
    geometric = {
        (ip.pair, line.matching)
        for ip in points
        for line in lines
        if line.contains(ip.point)
    }
    if geometric != set(structure.flags):
        failures.append("geometric incidence differs from matching membership")
    return _result(
        "igusa-singular-locus",
        start,
        failures,
        "15 lines singular at 6 parameter ratios each, 15 points singular, "
        "45 geometric flags equal the abstract 15_3",
    )


def check_duality(samples: int = 200, seed: int = 0) -> CheckResult:
    """Both polar directions, exactly, on every sampled cubic point."""
    start = time.perf_counter()
    report = duality_check(samples, seed)
    failures: list[str] = []
    if report.forward_ok != samples:
        failures.append(f"forward identities: {report.forward_ok}/{samples}")
    if report.reverse_ok != samples or report.reverse_skipped != 0:
        failures.append(
            f"reverse identities: {report.reverse_ok}/{samples} "
            f"({report.reverse_skipped} skipped)"
        )
    for direction, coords in report.counterexamples:
        failures.append(f"{direction} counterexample at {coords}")
    return _result(
        "polar-duality",
        start,
        failures,
        f"{samples}/{samples} forward and {samples}/{samples} reverse identities hold exactly",
    )


def check_combinatorics() -> CheckResult:
    """Counting identities for matchings, splits, and incidence degrees."""
    start = time.perf_counter()
    failures: list[str] = []
    matchings = perfect_matchings()
    expected = math.factorial(NVARS) // (2 ** (NVARS // 2) * math.factorial(NVARS // 2))
    if len(matchings) != 15 or expected != 15:
        failures.append(f"matching count {len(matchings)} (formula gives {expected})")
    if len(set(matchings)) != len(matchings):
        failures.append("matchings are not pairwise distinct")
    for m in matchings:
        if len(m) != 3 or sorted(i for pair in m for i in pair) != list(range(NVARS)):
            failures.append(f"matching {m} is not a partition into 3 pairs")
    for a in range(NVARS):
        for b in range(a + 1, NVARS):
            degree = sum((a, b) in m for m in matchings)
            if degree != 3:
                failures.append(f"edge ({a},{b}) lies in {degree} matchings")
    splits = three_three_splits()
    if len(splits) != 10 or len(set(splits)) != 10:
        failures.append(f"split count {len(splits)}")
    if math.comb(NVARS, 3) // 2 != 10:
        failures.append("binomial identity C(6,3)/2 != 10")
    return _result(
        "matching-combinatorics",
        start,
        failures,
        "15 matchings of size 3, every edge in exactly 3; 10 splits",
    )


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]
    samples: int
    seed: int
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "samples": self.samples,
            "seed": self.seed,
            "checks": [c.to_json() for c in self.checks],
        }


def run_all(
    samples: int = 200,
    seed: int = 0,
    *,
    git_cases: int = 1000,
    dict_cases: int = 1000,
    gale_involutions: int = 100,
    gale_assoc: int = 10,
    search_points: int = 10_000,
) -> VerificationReport:
    """Every check in order; samples=0 skips the randomized ones.

    The fixed-example and combinatorial checks always run. The random
    case counts are part of each check's contract and are not scaled by
    the samples argument, which only sizes the duality sample set.
    """
    if samples < 0:
        raise ValueError("samples must be nonnegative")
    start = time.perf_counter()
    randomized = samples > 0
    checks = (
        check_git_oracle(git_cases, seed) if randomized else _skipped("git-oracle-agreement"),
        check_dictionary(dict_cases, seed) if randomized else _skipped("dictionary-agreement"),
        check_destabilizing_example(),
        check_thresholds(),
        check_gale(gale_involutions, gale_assoc, seed)
        if randomized
        else _skipped("gale-involution-and-self-association"),
        check_segre_nodes(search_points if randomized else 0, seed),
        check_igusa(),
        check_duality(samples, seed) if randomized else _skipped("polar-duality"),
        check_combinatorics(),
    )
    return VerificationReport(
        checks=checks,
        samples=samples,
        seed=seed,
        elapsed=time.perf_counter() - start,
    )
