"""The verify-all suite: every exact identity and exhaustive scan in one run.

Each check returns a summary dict and raises InconsistencyError (or
returns {"passed": False, ...}) on failure. --quick shrinks the ranges so
the whole suite finishes in a few minutes.
"""

import itertools
import logging
from typing import Callable, Dict, List, Tuple

from ..coinvariant import (
    frasier_og_scan,
    frasier_scan,
    grain_check,
    horn_scan,
    inequality_scan,
    old3_scan,
    parabolic_product,
)
from ..constants import DEFAULT_SAMPLES
from ..eigencone import compare_cones
from ..errors import InconsistencyError, IsoHornError
from ..flags import key_scan, mc_properness
from ..index import AIndex, CIndex, GroupSpec, partitions_in_box
from ..reps import clef_scan, saturation_scan, walk_scan
from ..schubert import grassmann_duality_check, ordinary_duality_check
from .context import RunContext

logger = logging.getLogger("IsoHorn")

Summary = Dict[str, object]


def check_grain(ctx: RunContext, quick: bool) -> Summary:
    ranks = (1, 2) if quick else (1, 2, 3)
    results = {str(n): grain_check(n) for n in ranks}
    return {"passed": all(results.values()), "ranks": results}


def check_lagrangian_constants(ctx: RunContext, quick: bool) -> Summary:
    square = parabolic_product([CIndex((2, 4), 2)] * 2, 2).as_dict()
    mixed = parabolic_product([CIndex((2, 4), 2), CIndex((1, 3), 2)], 2).as_dict()
    return {"passed": square == {"[1, 3]": 2} and mixed == {"[1, 2]": 1},
            "square": square, "mixed": mixed}


def check_frasier(ctx: RunContext, quick: bool) -> Summary:
    summary = {}
    for n in ((1, 2) if quick else (1, 2, 3)):
        for r in range(1, n + 1):
            summary[f"IG({r},{2 * n})"] = frasier_scan(r, n)
            summary[f"OG({r},{2 * n + 1})"] = frasier_og_scan(r, n)
    return {"passed": True, "scans": summary}


def check_horn(family: str) -> Callable[[RunContext, bool], Summary]:
    def check(ctx: RunContext, quick: bool) -> Summary:
        summary = {}
        for n in ((1, 2) if quick else (1, 2, 3)):
            for r in range(1, n + 1):
                summary[f"r={r},n={n}"] = horn_scan(r, n, family, trials=min(ctx.trials, 3),
                                                    seed=ctx.seed, field=ctx.field)
        return {"passed": True, "scans": summary}
    return check


def check_key(ctx: RunContext, quick: bool) -> Summary:
    ranks = (1, 2) if quick else (1, 2, 3)
    samples = 10 if quick else 100
    seeds = [ctx.seed] if quick else [ctx.seed, ctx.seed + 1, ctx.seed + 2]
    summary = {}
    for seed, r, n in itertools.product(seeds, ranks, ranks):
        summary[f"seed={seed},r={r},n={n}"] = key_scan(r, n, samples, trials=ctx.trials, seed=seed,
                                                       field=ctx.field, workers=ctx.workers)
    return {"passed": True, "scans": summary}


def check_transfer(ctx: RunContext, quick: bool) -> Summary:
    summary = {"clef_C": clef_scan(2, "C", 6, workers=ctx.workers)}
    for r in ((1, 2) if quick else (1, 2, 3)):
        summary[f"walk_r={r}"] = walk_scan(2, r, workers=ctx.workers)
    return {"passed": True, "scans": summary}


def check_saturation(ctx: RunContext, quick: bool) -> Summary:
    symplectic = saturation_scan(GroupSpec("C", 2), 2, 4, workers=ctx.workers)
    orthogonal = saturation_scan(GroupSpec("B", 2), 1 if quick else 2, 4, workers=ctx.workers)
    spin = saturation_scan(GroupSpec("Spin", 2), 1, 4, workers=ctx.workers)
    passed = (symplectic.passed and bool(symplectic.witnesses)
              and orthogonal.passed and spin.passed)
    return {
        "passed": passed,
        "Sp(4)": {"tuples": symplectic.tuples, "positive": symplectic.positive,
                  "violations": len(symplectic.violations), "witnesses": len(symplectic.witnesses)},
        "SO(5)": {"tuples": orthogonal.tuples, "violations": len(orthogonal.violations)},
        "Spin(5)": {"tuples": spin.tuples, "violations": len(spin.violations)},
    }


def check_cones(ctx: RunContext, quick: bool) -> Summary:
    ranks = (2,) if quick else (2, 3)
    samples = 100 if quick else DEFAULT_SAMPLES
    reports = {f"n={n}": compare_cones(n, samples=samples, seed=ctx.seed) for n in ranks}
    return {
        "passed": all(report.passed for report in reports.values()),
        "reports": {key: {"samples": report.samples, "members": report.members,
                          "omega_pairs": report.omega_pairs,
                          "disagreements": len(report.disagreements)}
                    for key, report in reports.items()},
    }


def _duality_tuples(r: int, k: int, total: int):
    shapes = [mu.parts for mu in partitions_in_box(r, k)]
    for combo in itertools.combinations_with_replacement(shapes, 3):
        if sum(sum(mu) for mu in combo) <= total:
            yield combo


def check_invariant_suites(ctx: RunContext, quick: bool) -> Summary:
    ranks = (1, 2) if quick else (1, 2, 3)
    summary: Summary = {}
    for n in ranks:
        for r in range(1, n + 1):
            summary[f"slacks r={r},n={n}"] = inequality_scan(r, n)
    for r in ranks:
        summary[f"old3 r={r}"] = old3_scan(r, trials=min(ctx.trials, 3), seed=ctx.seed, field=ctx.field)

    failures = 0
    for r, k in itertools.product(ranks, ranks):
        for combo in _duality_tuples(r, k, 12):
            if not ordinary_duality_check(combo, r, k):
                failures += 1
            if sum(sum(mu) for mu in combo) == r * k and not grassmann_duality_check(combo, r, k):
                failures += 1
    summary["duality_failures"] = failures

    controls: List[Tuple[str, Tuple[AIndex, ...], int, bool]] = [
        ("symplectic", (AIndex((2,), 4),) * 2, 2, True),
        ("symmetric", (AIndex((2,), 5),) * 2, 2, True),
        ("even", (AIndex((2,), 4),) * 2, 2, False),
    ]
    # opposite families of isotropic planes only meet on some draws
    properness = {}
    for form, indices, n, expected in controls:
        report = mc_properness(indices, form, n, max(ctx.trials, 20), ctx.seed, ctx.field,
                               ctx.config.cell_cap, ctx.workers)
        properness[form] = report.passed
        if report.passed != expected:
            failures += 1
    summary["properness"] = properness
    summary["passed"] = failures == 0
    return summary


CHECKS: Tuple[Tuple[str, Callable[[RunContext, bool], Summary]], ...] = (
    ("grain", check_grain),
    ("lagrangian_constants", check_lagrangian_constants),
    ("frasier", check_frasier),
    ("horn_c", check_horn("C")),
    ("horn_b", check_horn("B")),
    ("key", check_key),
    ("transfer", check_transfer),
    ("saturation", check_saturation),
    ("cones", check_cones),
    ("invariant_suites", check_invariant_suites),
)


def run_suite(ctx: RunContext, quick: bool = False) -> Dict[str, Summary]:
    """Run every check; a raised InconsistencyError marks that check FAIL and the suite continues."""
    outcomes: Dict[str, Summary] = {}
    for name, check in CHECKS:
        logger.info(f"verify-all: {name}{' (quick)' if quick else ''}")
        try:
            summary = check(ctx, quick)
            status = "PASS" if summary.pop("passed") else "FAIL"
        except InconsistencyError as e:
            logger.error(f"verify-all: {name} raised {e}")
            summary, status = {"error": str(e), "details": e.details}, "FAIL"
        except IsoHornError as e:
            logger.error(f"verify-all: {name} could not run: {e}")
            summary, status = {"error": str(e)}, "ERROR"
        outcomes[name] = {"status": status, **summary}
        logger.info(f"verify-all: {name} {status}")
    return outcomes
