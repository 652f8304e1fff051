"""Command-line front end: ``python -m rouquier <subcommand> [flags]``.

Successful commands print one JSON document (``induce`` prints JSON lines)
with sorted keys and exit 0.  Domain errors print
``{"status": "error", "error": {"code": ..., "message": ...}}`` and exit 1;
usage errors do the same with code ``usage`` and exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .induction import UnipotentLabel, aba_complement, induce_unipotent_mult
from .lr import lr_coeff
from .params import Family, block_context, derive_params, group_order
from .partitions import (
    Partition,
    as_beta_set,
    beta_of_partition,
    e_core_and_weight,
    e_quotient,
    format_partition,
    parse_partition,
    partitions_of,
    runner_counts,
)
from .symbols import (
    Symbol,
    from_smn,
    parse_smn,
    parse_symbol,
    symbol_e_core,
    symbols_of_rank,
)
from .verifier import verify_rank_identity
from .weyl import DCharLabel, branch_A, branch_B, branch_D


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# literals


def _literal(name: str):
    """Turn a parser into an argparse type whose failures are usage errors."""

    def wrap(parse):
        def convert(text: str):
            try:
                return parse(text)
            except ValueError as exc:
                raise argparse.ArgumentTypeError(f"bad {name} {text!r}: {exc}") from None

        convert.__name__ = name
        return convert

    return wrap


def _bipartition(text: str) -> tuple[Partition, Partition]:
    if "|" not in text:
        raise ValueError(f"bipartition literal {text!r} needs a '|', e.g. '2,1|1'")
    left, right = text.split("|", 1)
    return parse_partition(left), parse_partition(right)


def _label(text: str) -> Partition | Symbol | UnipotentLabel:
    text = text.strip()
    primed = text.endswith("'")
    body = text.rstrip("'")
    if body.count(":") == 2:
        lab = from_smn(parse_smn(body))
    elif "|" in body:
        lab = parse_symbol(body)
    else:
        if primed:
            raise ValueError("partitions carry no primed flag")
        return parse_partition(body)
    return UnipotentLabel(lab, primed)


def _core_literal(text: str):
    return parse_symbol(text) if "|" in text else parse_partition(text)


def _beta_literal(text: str):
    return as_beta_set(int(x) for x in text.split(",") if x.strip())


partition_arg = _literal("partition")(parse_partition)
symbol_arg = _literal("symbol")(parse_symbol)
bipartition_arg = _literal("bipartition")(_bipartition)
label_arg = _literal("label")(_label)
core_arg = _literal("core")(_core_literal)
beta_arg = _literal("beta-set")(_beta_literal)
family_arg = _literal("family")(Family.parse)


def _render(lab) -> str:
    if isinstance(lab, UnipotentLabel):
        return str(lab)
    if isinstance(lab, Symbol):
        return str(lab)
    return format_partition(lab)


# ---------------------------------------------------------------------------
# subcommands


def cmd_core(args) -> dict[str, Any]:
    if (args.partition is None) == (args.symbol is None):
        raise UsageError("give exactly one of --partition and --symbol")
    if args.partition is not None:
        core, weight = e_core_and_weight(args.partition, args.e)
        return {"core": format_partition(core), "weight": weight}
    sc = symbol_e_core(args.symbol, args.e)
    return {"core": str(sc.core), "weight": sc.weight, "copies": sc.copies}


def cmd_quotient(args) -> dict[str, Any]:
    lam = args.partition
    beta = args.beta if args.beta is not None else beta_of_partition(lam)
    quot = e_quotient(lam, args.e, beta)
    core, weight = e_core_and_weight(lam, args.e)
    return {
        "beta": list(beta),
        "bead_counts": list(runner_counts(beta, args.e)),
        "core": format_partition(core),
        "quotient": [format_partition(q) for q in quot],
        "weight": weight,
    }


def cmd_lr(args) -> dict[str, Any]:
    return {"coeff": lr_coeff(args.mu, args.nu, args.lam)}


def cmd_branch(args) -> dict[str, Any]:
    gamma = partition_arg(args.gamma)
    if args.type == "A":
        return {"multiplicity": branch_A(partition_arg(args.source), gamma, partition_arg(args.target))}
    src, tgt = bipartition_arg(args.source), bipartition_arg(args.target)
    if args.type == "B":
        return {"multiplicity": branch_B(src, gamma, tgt)}
    a = DCharLabel(*src, primed=args.primed_source)
    b = DCharLabel(*tgt, primed=args.primed_target)
    return {"multiplicity": branch_D(a, gamma, b)}


def _candidate_targets(family: Family, source, k: int):
    lab = source.label if isinstance(source, UnipotentLabel) else source
    if family is Family.GL:
        yield from partitions_of(sum(lab) + k)
    elif family is Family.U:
        yield from partitions_of(sum(lab) + 2 * k)
    else:
        for sym in symbols_of_rank(lab.rank + k, family.defect_ok):
            yield UnipotentLabel(sym)
            if family.type_d and sym.degenerate:
                yield UnipotentLabel(sym, True)


def cmd_induce(args) -> list[dict[str, Any]]:
    family = args.family
    if args.gamma is not None:
        gamma = args.gamma
    elif args.d is not None and args.alpha is not None:
        gamma = aba_complement(args.d, args.alpha)
    else:
        raise UsageError("give --gamma, or --d with --alpha")
    source = args.source
    targets = [args.target] if args.target else _candidate_targets(family, source, sum(gamma))
    rows = []
    for tgt in targets:
        try:
            mult = induce_unipotent_mult(family, gamma, source, tgt)
        except ValueError:
            if args.target:
                raise
            continue  # e.g. two degenerate type D labels
        if mult or args.target:
            rows.append({"gamma": format_partition(gamma), "multiplicity": mult, "target": _render(tgt)})
    return rows


def cmd_params(args) -> dict[str, Any]:
    family = args.family
    pp = derive_params(family, args.q, args.p)
    out = {"a": pp.a, "classes": (args.p**pp.a - 1) // pp.d, "d": pp.d, "e": pp.e, "linear": pp.linear}
    if args.m is not None:
        out["order"] = str(group_order(family, args.q, args.m))
    return out


def _context(args):
    return block_context(args.family, args.q, args.p, args.w, args.rho, d=args.d)


def _params_json(ctx) -> dict[str, Any]:
    return {
        "a": ctx.a,
        "case": ctx.family.case,
        "d": ctx.d,
        "e": ctx.e,
        "family": ctx.family.value,
        "m": ctx.m,
        "p": ctx.p,
        "q": ctx.q,
        "rho": _render(ctx.rho),
        "w": ctx.w,
    }


def cmd_blocks(args) -> dict[str, Any]:
    ctx = _context(args)
    out = _params_json(ctx)
    out.update(
        {
            "bead_counts": list(ctx.bead_counts),
            "defect_group_order": ctx.defect_group_order,
            "normaliser_index": ctx.normaliser_index,
            "rank": ctx.rank,
            "shift": ctx.shift,
        }
    )
    return out


def cmd_verify_rank(args) -> dict[str, Any]:
    ctx = _context(args)
    report = verify_rank_identity(ctx, canonicalize=not args.no_canonicalize, threads=args.threads)
    out = {
        "elapsed_ms": report.elapsed_ms,
        "equal": report.equal,
        "label_count": report.label_count,
        "params": _params_json(ctx),
        "target_count": report.target_count,
    }
    if args.dump:
        out["lhs"] = report.lhs.dump()
        out["rhs"] = report.rhs.dump()
    return out


# ---------------------------------------------------------------------------
# driver


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rouquier", description="Rouquier block combinatorics")
    parser.add_argument("--text", action="store_true", help="human-readable output instead of JSON")
    common = _Parser(add_help=False)
    common.add_argument("--text", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)


    p = add("core", help="e-core and weight of a partition or symbol")
    p.add_argument("--partition", type=partition_arg)
    p.add_argument("--symbol", type=symbol_arg)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_core)

    p = add("quotient", help="e-quotient on a chosen beta-set")
    p.add_argument("--partition", type=partition_arg, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--beta", type=beta_arg, help="beta-set fixing the abacus (default: minimal)")
    p.set_defaults(func=cmd_quotient)

    p = add("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--mu", type=partition_arg, required=True)
    p.add_argument("--nu", type=partition_arg, required=True)
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    p.set_defaults(func=cmd_lr)

    p = add("branch", help="Weyl group induction multiplicity")
    p.add_argument("--type", choices=["A", "B", "D"], required=True)
    p.add_argument("--source", required=True, help="partition (A) or bipartition 'a0|a1' (B, D)")
    p.add_argument("--gamma", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--primed-source", action="store_true")
    p.add_argument("--primed-target", action="store_true")
    p.set_defaults(func=cmd_branch)

    p = add("induce", help="Harish-Chandra induction of unipotent labels")
    p.add_argument("--family", type=family_arg, required=True)
    p.add_argument("--gamma", type=partition_arg)
    p.add_argument("--d", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--source", type=label_arg, required=True,
                   help="partition, symbol 'X|Y' or 's:(mu):(nu)'; a trailing ' marks the primed copy")
    p.add_argument("--target", type=label_arg)
    p.set_defaults(func=cmd_induce)

    p = add("params", help="d, e, a and linearity for (family, q, p)")
    p.add_argument("--family", type=family_arg, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, help="also report the group order at this m")
    p.set_defaults(func=cmd_params)

    for name, func in (("blocks", cmd_blocks), ("verify-rank", cmd_verify_rank)):
        p = add(name, help="block data for the minimal or given core" if name == "blocks" else "check the rank identity")
        p.add_argument("--family", type=family_arg, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--w", type=int, required=True)
        p.add_argument("--d", type=int, help="checked against the order of q mod p")
        p.add_argument("--rho", type=core_arg, help="core: partition '2,2' or symbol '2,5|2,5' (default: minimal admissible)")
        if name == "verify-rank":
            p.add_argument("--dump", action="store_true", help="include both polynomials")
            p.add_argument("--threads", type=int, default=1)
            p.add_argument("--no-canonicalize", action="store_true",
                           help="separate variables for t and t-bar (expected to break the identity)")
        p.set_defaults(func=func)
    return parser


def _text(payload) -> str:
    if isinstance(payload, list):
        return "\n".join(_text(row) for row in payload)
    width = max((len(k) for k in payload), default=0)
    lines = []
    for k in sorted(payload):
        v = payload[k]
        if isinstance(v, dict):
            v = json.dumps(v, sort_keys=True)
        elif isinstance(v, str) and "\n" in v:
            v = "\n  " + v.replace("\n", "\n  ")
        lines.append(f"{k:<{width}}  {v}")
    return "\n".join(lines)


def _emit(payload, text: bool, out) -> None:
    if text:
        print(_text(payload), file=out)
    elif isinstance(payload, list):
        for row in payload:
            print(json.dumps(row, sort_keys=True), file=out)
    else:
        print(json.dumps(payload, sort_keys=True), file=out)


def _error(code: str, message: str, out) -> None:
    print(json.dumps({"error": {"code": code, "message": message}, "status": "error"}, sort_keys=True), file=out)


def run_cli(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = args.func(args)
    except (UsageError, argparse.ArgumentTypeError) as exc:
        _error("usage", str(exc), out)
        return 2
    except (ValueError, KeyError, AssertionError) as exc:
        _error("domain", str(exc), out)
        return 1
    _emit(payload, args.text, out)
    return 0


def main() -> None:
    sys.exit(run_cli())
