"""Command-line entry point: every command prints one JSON report."""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import io
from .cohomology import cohomology_class
from .errors import ParseError, XModError
from .induce import ROUTES, induce, mapping_cone_invariants
from .perm import abelian_invariants
from .xmod import check_axioms, cokernel, kernel_module

ENV_LIMIT = "XMODKIT_COSET_LIMIT"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _coset_limit(args) -> int | None:
    if args.coset_limit is not None:
        return args.coset_limit
    raw = os.environ.get(ENV_LIMIT)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{ENV_LIMIT} must be an integer, got {raw!r}") from None


def cmd_check(args) -> tuple[dict, int]:
    X = io.parse_xmod(args.file)
    rep = check_axioms(X)
    return {"crossed_module": rep.ok, "report": rep.to_dict(),
            "M": io.group_summary(X.M), "P": io.group_summary(X.P)}, 0 if rep.ok else 3


def cmd_induce(args) -> tuple[dict, int]:
    X = io.parse_xmod(args.xmod)
    Q = io.parse_group(args.into)
    iota = io.parse_map(args.iota, X.P, Q)
    ind = induce(X, iota, args.route, limit=_coset_limit(args))
    R = ind.result
    C, _ = cokernel(R)
    report = {
        "order": R.M.order,
        "route": ind.route,
        "boundary": {name: io.element_text(img, Q) for name, img in zip(R.M.names, R.boundary.images)},
        "kernel_invariant_factors": list(kernel_module(R).carrier.invariant_factors),
        "cokernel_order": C.order,
        "axioms": ind.axioms.to_dict() if ind.axioms is not None else None,
        "order_bound": ind.stats.get("order_bound"),
        "stats": ind.stats,
    }
    return report, 0


def cmd_h3class(args) -> tuple[dict, int]:
    X = io.parse_xmod(args.xmod)
    t = None
    if args.coker_gen is not None:
        C, proj = cokernel(X)
        t = proj(io.parse_element(args.coker_gen, X.P))
    return cohomology_class(X, t).to_dict(), 0


def cmd_cone(args) -> tuple[dict, int]:
    P = io.parse_group(args.p)
    Q = io.parse_group(args.q)
    iota = io.parse_map(args.iota, P, Q)
    pi1, pi2, ind = mapping_cone_invariants(iota, args.route, _coset_limit(args))
    return {
        "pi1": {"order": pi1.order, "abelian_invariants": list(abelian_invariants(pi1))},
        "pi2": list(pi2.carrier.invariant_factors),
        "route": ind.route,
    }, 0


def cmd_gallery(args) -> tuple[dict, int]:
    from .gallery import gallery

    table = gallery(args.seed)
    return table, 0 if not table["summary"]["failed"] else 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--coset-limit", type=int, default=None,
                        help=f"maximum number of cosets (also {ENV_LIMIT})")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    p = _Parser(prog="xmodkit", description="Induced crossed modules of finite groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="verify the crossed module axioms")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    i = sub.add_parser("induce", parents=[common], help="induce along a homomorphism")
    i.add_argument("--xmod", required=True)
    i.add_argument("--into", required=True)
    i.add_argument("--iota", required=True)
    i.add_argument("--route", choices=ROUTES, default="auto")
    i.set_defaults(func=cmd_induce)

    h = sub.add_parser("h3class", parents=[common], help="class in H^3 of the cokernel")
    h.add_argument("--xmod", required=True)
    h.add_argument("--coker-gen", default=None, help="word in the generators of P")
    h.set_defaults(func=cmd_h3class)

    k = sub.add_parser("cone", parents=[common], help="homotopy groups of a mapping cone")
    k.add_argument("--p", required=True)
    k.add_argument("--q", required=True)
    k.add_argument("--iota", required=True)
    k.add_argument("--route", choices=ROUTES, default="auto")
    k.set_defaults(func=cmd_cone)

    g = sub.add_parser("gallery", parents=[common], help="recompute every worked example")
    g.set_defaults(func=cmd_gallery)
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    out = command = None
    try:
        args = build_parser().parse_args(argv)
        out, command = args.out, args.command
        report, code = args.func(args)
    except XModError as exc:
        report, code = {"error": type(exc).__name__, "message": str(exc)}, exc.exit_code
    except Exception as exc:  # noqa: BLE001
        report, code = {"error": "InternalError", "message": f"{type(exc).__name__}: {exc}"}, 5
    report = {"command": command, "exit_code": code, **report}
    _emit(io.dumps(report), out)
    return code


if __name__ == "__main__":
    sys.exit(main())
