"""Subcommand handlers.

Each handler takes the parsed arguments and a RunContext and returns a
CommandResult. Handlers let library errors propagate; the runner turns
them into exit codes.
"""

import logging
from argparse import Namespace
from typing import Any, Dict

from ..coinvariant import (
    deformed_nonvanishing,
    grain_check,
    horn_b_check,
    horn_c_check,
    horn_scan,
    ig_point_coefficient,
    og_parabolic_product,
    parabolic_product,
)
from ..eigencone import compare_cones, generate_inequalities, inequality_system
from ..errors import InvalidIndexError
from ..flags import (
    expected_hom_dim,
    flags_for_trial,
    form_ambient,
    hom_dim,
    key_scan,
    mc_properness,
    theorem_key_check,
)
from ..index import GroupSpec
from ..reps import clef_scan, clef_transfer_check, invariant_dim, saturation_scan, walk_check, walk_scan
from ..schubert import gr_product, lr_coefficient
from .context import RunContext
from .literals import make_indices, parse_coweights, parse_partition, parse_partitions, parse_weights
from .output import CommandResult
from .suite import run_suite

logger = logging.getLogger("IsoHorn")


def params_of(args: Namespace) -> Dict[str, Any]:
    """Echo the subcommand's own arguments."""
    skip = {"handler", "command", "seed", "prime", "trials", "workers", "rational",
            "config", "out", "log_level"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _result(args: Namespace, **kwargs) -> CommandResult:
    return CommandResult(args.command, params_of(args), **kwargs)


def _check_rank(indices, r: int) -> None:
    for index in indices:
        if len(index.elements) != r:
            raise InvalidIndexError(f"{index} does not have r = {r} elements")


# =============================================================================
# SCHUBERT CALCULUS
# =============================================================================

def cmd_lrcoef(args: Namespace, ctx: RunContext) -> CommandResult:
    lam, mu, nu = parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu)
    return _result(args, values={"coefficient": lr_coefficient(lam, mu, nu)})


def cmd_gr_product(args: Namespace, ctx: RunContext) -> CommandResult:
    indices = make_indices(args.indices, "A", args.N)
    product = gr_product(indices, args.m, args.N)
    return _result(args, values={"space": product.space, "product": product.as_dict()})


def cmd_ig_product(args: Namespace, ctx: RunContext) -> CommandResult:
    indices = make_indices(args.indices, "C", args.n)
    _check_rank(indices, args.r)
    product = parabolic_product(indices, args.n)
    return _result(args, values={"space": product.space, "product": product.as_dict()})


def cmd_og_product(args: Namespace, ctx: RunContext) -> CommandResult:
    indices = make_indices(args.indices, "B", args.n)
    _check_rank(indices, args.r)
    product = og_parabolic_product(indices, args.n)
    return _result(args, values={"space": product.space, "product": product.as_dict()})


def cmd_deformed(args: Namespace, ctx: RunContext) -> CommandResult:
    indices = make_indices(args.indices, "C", args.n)
    _check_rank(indices, args.r)
    verdict = deformed_nonvanishing(indices, args.r, args.n)
    return _result(args, verdict=verdict, predicate=True,
                   values={"ordinary": ig_point_coefficient(indices, args.n), "deformed": verdict})


def cmd_horn(args: Namespace, ctx: RunContext) -> CommandResult:
    family = "C" if args.command == "horn-c" else "B"
    if args.scan:
        counts = horn_scan(args.r, args.n, family, trials=ctx.trials, seed=ctx.seed, field=ctx.field)
        return _result(args, verdict=True, values=counts, provenance=ctx.provenance())
    if not args.indices:
        raise InvalidIndexError(f"{args.command} needs --indices or --scan")
    indices = make_indices(args.indices, family, args.n)
    if family == "C":
        record = horn_c_check(indices, args.r, args.n)
        provenance = {}
    else:
        record = horn_b_check(indices, args.r, args.n, ctx.trials, ctx.seed, ctx.field)
        provenance = ctx.provenance()
    return _result(args, verdict=record.consistent, values=record.as_dict(), provenance=provenance)


def cmd_grain(args: Namespace, ctx: RunContext) -> CommandResult:
    return _result(args, verdict=grain_check(args.n))


# =============================================================================
# RANDOM FLAGS
# =============================================================================

def cmd_hom_dim(args: Namespace, ctx: RunContext) -> CommandResult:
    mus = parse_partitions(args.mus)
    r = len(mus[0])
    field = ctx.field
    observed = []
    for trial in range(ctx.trials):
        F = flags_for_trial("none", r, len(mus), ctx.seed, 2 * trial, field)
        G = flags_for_trial("symplectic", 2 * args.n, len(mus), ctx.seed, 2 * trial + 1, field)
        observed.append(hom_dim(mus, F, G, field))
    values = {"expected": expected_hom_dim(mus, r, args.n), "observed": observed,
              "minimum": min(observed)}
    return _result(args, values=values, provenance=ctx.provenance())


def cmd_key_check(args: Namespace, ctx: RunContext) -> CommandResult:
    if args.mus:
        record = theorem_key_check(parse_partitions(args.mus), args.n, ctx.trials, ctx.seed,
                                   ctx.field, ctx.workers)
        return _result(args, verdict=record.agree, values=record.as_dict(), provenance=ctx.provenance())
    if args.r is None:
        raise InvalidIndexError("key-check needs --mus or --r with --samples")
    counts = key_scan(args.r, args.n, args.samples, trials=ctx.trials, seed=ctx.seed,
                      field=ctx.field, workers=ctx.workers)
    return _result(args, verdict=True, values=counts, provenance=ctx.provenance())


def cmd_properness(args: Namespace, ctx: RunContext) -> CommandResult:
    indices = make_indices(args.indices, "A", form_ambient(args.form, args.n))
    report = mc_properness(indices, args.form, args.n, ctx.trials, ctx.seed, ctx.field,
                           ctx.config.cell_cap, ctx.workers)
    return _result(args, verdict=report.passed, values=report.as_dict(), provenance=ctx.provenance())


# =============================================================================
# REPRESENTATIONS
# =============================================================================

def cmd_invariant_dim(args: Namespace, ctx: RunContext) -> CommandResult:
    group = GroupSpec.parse(args.group)
    weights = parse_weights(args.weights, group)
    return _result(args, values={"group": group.name, "dimension": invariant_dim(group, weights)})


def cmd_clef_check(args: Namespace, ctx: RunContext) -> CommandResult:
    if args.scan:
        counts = clef_scan(args.n, args.family, args.bound, workers=ctx.workers)
        return _result(args, verdict=True, values=counts)
    if not args.weights or args.N is None:
        raise InvalidIndexError("clef-check needs --N and --weights, or --scan")
    weights = parse_weights(args.weights, GroupSpec("A", args.N - 1))
    record = clef_transfer_check(weights, args.target)
    return _result(args, verdict=record.passed, values=record.as_dict())


def cmd_walk_check(args: Namespace, ctx: RunContext) -> CommandResult:
    if args.scan:
        if args.r is None:
            raise InvalidIndexError("walk-check --scan needs --r")
        counts = walk_scan(args.n, args.r, workers=ctx.workers)
        return _result(args, verdict=True, values=counts)
    if not args.mus:
        raise InvalidIndexError("walk-check needs --mus or --scan")
    record = walk_check(parse_partitions(args.mus), args.n)
    return _result(args, verdict=record.passed, values=record.as_dict())


def cmd_saturation_scan(args: Namespace, ctx: RunContext) -> CommandResult:
    group = GroupSpec.parse(args.group)
    report = saturation_scan(group, args.bound, args.n_max, args.s, ctx.workers)
    return _result(args, verdict=report.passed, values=report.as_dict())


# =============================================================================
# EIGENCONES
# =============================================================================

def cmd_eigencone_gen(args: Namespace, ctx: RunContext) -> CommandResult:
    group = GroupSpec.parse(args.group)
    point = generate_inequalities(group, args.s, workers=ctx.workers)
    values: Dict[str, Any] = {
        "group": group.name,
        "point_list": len(point),
        "point_hyperplanes": len(inequality_system(group, args.s).hyperplanes),
    }
    if not args.skip_nonvanishing:
        wider = generate_inequalities(group, args.s, nonvanishing=True, workers=ctx.workers)
        values["nonvanishing_list"] = len(wider)
        values["nonvanishing_hyperplanes"] = len(inequality_system(group, args.s, True).hyperplanes)
    if args.list:
        values["inequalities"] = [ineq.as_dict() for ineq in point]
    return _result(args, values=values)


def cmd_eigencone_member(args: Namespace, ctx: RunContext) -> CommandResult:
    group = GroupSpec.parse(args.group)
    point = parse_coweights(args.points, group)
    system = inequality_system(group, len(point))
    member = system.contains(point)
    violated = [] if member else system.violated(point)
    values = {"member": member, "violated": len(violated),
              "first_violated": str(violated[0]) if violated else None}
    return _result(args, verdict=member, predicate=True, values=values)


def cmd_compare_cones(args: Namespace, ctx: RunContext) -> CommandResult:
    report = compare_cones(args.n, args.s, args.samples, ctx.seed, args.family)
    return _result(args, verdict=report.passed, values=report.as_dict(),
                   provenance=ctx.provenance(trials=False))


def cmd_verify_all(args: Namespace, ctx: RunContext) -> CommandResult:
    outcomes = run_suite(ctx, quick=args.quick)
    verdict = all(outcome["status"] == "PASS" for outcome in outcomes.values())
    return _result(args, verdict=verdict, values={"checks": outcomes}, provenance=ctx.provenance())
