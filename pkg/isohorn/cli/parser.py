"""Argument parser for the isohorn command line."""

import argparse

from ..constants import DEFAULT_FACTORS, DEFAULT_N_MAX, DEFAULT_SAMPLES
from ..flags import FORMS
from . import commands

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_indexed(sub, name: str, help_text: str, rank_help: str, handler) -> argparse.ArgumentParser:
    parser = sub.add_parser(name, help=help_text)
    parser.add_argument("--n", type=_positive, required=True, help=rank_help)
    parser.add_argument("--r", type=_positive, required=True, help="Subspace dimension r")
    parser.add_argument("--indices", required=True, help='Index tuple, e.g. "[2,4] [2,4]"')
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Parser with the global flags and one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="isohorn",
        description="Exact Schubert calculus, Horn inequalities, eigencones and saturation checks.")
    parser.add_argument("--seed", type=int, help="Seed for random flags and samples")
    parser.add_argument("--prime", type=int, help="Field prime for modular linear algebra")
    parser.add_argument("--trials", type=_positive, help="Independent draws per Monte Carlo check")
    parser.add_argument("--workers", type=_positive, help="Threads for independent work items")
    parser.add_argument("--rational", action="store_true", help="Exact rational arithmetic instead of GF(p)")
    parser.add_argument("--config", help="Path to an isohorn.ini file")
    parser.add_argument("--out", help="Also write the JSON result document to this path")
    parser.add_argument("--log-level", choices=LOG_LEVELS, help="Logging level")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("lrcoef", help="Littlewood-Richardson coefficient c^nu_{lam,mu}")
    p.add_argument("--lam", required=True, help="Partition, e.g. 2,1")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(handler=commands.cmd_lrcoef)

    p = sub.add_parser("gr-product", help="Product of Schubert classes on Gr(m, N)")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--indices", required=True, help='Index tuple, e.g. "[1,3] [2,4]"')
    p.set_defaults(handler=commands.cmd_gr_product)

    _add_indexed(sub, "ig-product", "Product of Schubert classes on IG(r, 2n)", "Half the ambient dimension",
                 commands.cmd_ig_product)
    _add_indexed(sub, "og-product", "Product of Schubert classes on OG(r, 2n+1)", "Rank of SO(2n+1)",
                 commands.cmd_og_product)
    _add_indexed(sub, "deformed", "Deformed-product point coefficient on IG(r, 2n) is nonzero",
                 "Half the ambient dimension", commands.cmd_deformed)

    for name, space in (("horn-c", "IG(r, 2n)"), ("horn-b", "OG(r, 2n+1)")):
        p = sub.add_parser(name, help=f"Recursive Horn criterion on {space}")
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--r", type=_positive, required=True)
        p.add_argument("--indices", help="Index tuple with complementary codimensions")
        p.add_argument("--scan", action="store_true", help="Check every complementary triple")
        p.set_defaults(handler=commands.cmd_horn)

    p = sub.add_parser("grain", help="p_w^C = 2^(n - mu(w)) p_w^B for every w")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(handler=commands.cmd_grain)

    p = sub.add_parser("hom-dim", help="Dimension of the constrained Hom space on random flags")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mus", required=True, help='Sequences of length r, e.g. "2,1 1,1 1,0"')
    p.set_defaults(handler=commands.cmd_hom_dim)

    p = sub.add_parser("key-check", help="Hom dimension against the Horn inequalities")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mus", help="One tuple to check")
    p.add_argument("--r", type=_positive, help="Length of random tuples")
    p.add_argument("--samples", type=_positive, default=100, help="Random tuples to check")
    p.set_defaults(handler=commands.cmd_key_check)

    p = sub.add_parser("properness", help="Intersections of Schubert cells for isotropic flags")
    p.add_argument("--form", choices=FORMS, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--indices", required=True)
    p.set_defaults(handler=commands.cmd_properness)

    p = sub.add_parser("invariant-dim", help="Dimension of invariants in a tensor product")
    p.add_argument("--group", required=True, help="SL(N), Sp(2n), SO(2n+1) or Spin(2n+1)")
    p.add_argument("--weights", required=True, help='Highest weights, e.g. "1,0 1/2,1/2"')
    p.set_defaults(handler=commands.cmd_invariant_dim)

    p = sub.add_parser("clef-check", help="SL(N) invariants survive restriction")
    p.add_argument("--N", type=_positive, help="Size of SL(N)")
    p.add_argument("--weights", help="SL(N) highest weights")
    p.add_argument("--target", choices=("B", "C"), help="Expected target type")
    p.add_argument("--scan", action="store_true", help="Scan all tuples with bounded total size")
    p.add_argument("--n", type=_positive, default=2, help="Rank of the target group when scanning")
    p.add_argument("--family", choices=("B", "C"), default="C")
    p.add_argument("--bound", type=int, default=6, help="Bound on sum |lam^j| when scanning")
    p.set_defaults(handler=commands.cmd_clef_check)

    p = sub.add_parser("walk-check", help="Flip, restrict to Sp(2n) and check invariants")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mus", help="Partitions with r parts and width <= 2n")
    p.add_argument("--scan", action="store_true", help="Scan every tuple with sum 2nr")
    p.add_argument("--r", type=_positive, help="Number of parts when scanning")
    p.set_defaults(handler=commands.cmd_walk_check)

    p = sub.add_parser("saturation-scan", help="Invariants at N nu force invariants at 2 nu (4 nu for Spin)")
    p.add_argument("--group", required=True)
    p.add_argument("--bound", type=int, required=True, help="Coordinate bound of the scanned weights")
    p.add_argument("--n-max", type=_positive, default=DEFAULT_N_MAX)
    p.add_argument("--s", type=_positive, default=DEFAULT_FACTORS)
    p.set_defaults(handler=commands.cmd_saturation_scan)

    p = sub.add_parser("eigencone-gen", help="Generate eigencone inequalities")
    p.add_argument("--group", required=True)
    p.add_argument("--s", type=_positive, default=DEFAULT_FACTORS)
    p.add_argument("--list", action="store_true", help="Include the inequalities themselves")
    p.add_argument("--skip-nonvanishing", action="store_true",
                   help="Do not build the list from merely nonvanishing products")
    p.set_defaults(handler=commands.cmd_eigencone_gen)

    p = sub.add_parser("eigencone-member", help="Membership of a tuple in the eigencone")
    p.add_argument("--group", required=True)
    p.add_argument("--points", required=True, help='Dominant coweights, e.g. "1/2,-1/2 1/2,-1/2 1,-1"')
    p.set_defaults(handler=commands.cmd_eigencone_member)

    p = sub.add_parser("compare-cones", help="Sp(2n) / SO(2n+1) cone against the SU(N) cone")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--family", choices=("B", "C"), default="C")
    p.add_argument("--samples", type=_positive, default=DEFAULT_SAMPLES)
    p.add_argument("--s", type=_positive, default=DEFAULT_FACTORS)
    p.set_defaults(handler=commands.cmd_compare_cones)

    p = sub.add_parser("verify-all", help="Run every identity and scan")
    p.add_argument("--quick", action="store_true", help="Smaller ranges")
    p.set_defaults(handler=commands.cmd_verify_all)

    return parser
