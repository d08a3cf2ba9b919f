"""Command-line front end.

Subcommands: rank, thresholds, theta-census, embed, verify, dual,
moduli-dim, superpoint-rank, check-superconformal.  Exit codes: 0 on
success, 1 when a mathematical check fails (with a witness or residual
printed), 2 on usage or input errors.  All output is deterministic for a
fixed seed; JSON output sorts its keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

import sympy as sp

from .curve import HyperellipticCurve, standard_curve
from .graded_algebra import GrassmannAlgebra, check_superconformal
from .pluricanonical import (SuperPointFamily, build_model, minimal_nu,
                             pluri_canonical_rank, pushforward_over_superpoint,
                             random_deformation, threshold_table,
                             verify_embedding)
from .riemann_roch import parity_representatives, theta_characteristics
from .serialize import (curve_from_json, divisor_to_json, dumps,
                        model_from_json, model_to_json, supercurve_to_json,
                        theta_from_json)
from .supercurve import (dual_supercurve, is_autodual, make_split_supercurve,
                         moduli_dimension)


class UsageError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _get_curve(args) -> HyperellipticCurve:
    if getattr(args, "curve", None):
        return curve_from_json(_load_json(args.curve))
    if getattr(args, "genus", None):
        return standard_curve(args.genus)
    raise UsageError("need --curve FILE or --genus G")


def _get_theta(curve: HyperellipticCurve, choice: Optional[str]):
    even, odd = parity_representatives(curve)
    if choice is None or choice == "even":
        return even
    if choice == "odd":
        return odd
    try:
        obj = json.loads(choice)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--theta must be 'even', 'odd' or a JSON subset "
                         f"object: {exc}") from exc
    if not isinstance(obj, dict) or "subset" not in obj:
        raise UsageError('--theta JSON must look like {"subset": [0, 1]}')
    try:
        return theta_from_json(curve, obj)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _get_supercurve(args):
    curve = _get_curve(args)
    theta = _get_theta(curve, getattr(args, "theta", None))
    return make_split_supercurve(curve, theta)


def cmd_rank(args) -> int:
    X = _get_supercurve(args)
    report = pluri_canonical_rank(X, args.nu)
    if args.format == "json":
        payload = {
            "nu": report.nu,
            "rank": str(report.rank),
            "even": report.rank.even,
            "odd": report.rank.odd,
            "hypotheses_hold": report.hypotheses_hold,
            "alt_formula": str(report.formula),
            "alt_formula_differs": report.formula_differs,
            "note": report.note,
        }
        _write(args.out, dumps(payload))
    else:
        _write(args.out, str(report) + "\n")
    return 0


def cmd_thresholds(args) -> int:
    cells = threshold_table(args.genus or 6, args.nu or 6,
                            parallel=args.parallel)
    if args.format == "json":
        payload = []
        for c in cells:
            entry = {
                "g": c.g,
                "nu": c.nu,
                "all_pass": c.all_pass,
                "even_pass": c.even_pass,
                "odd_pass": c.odd_pass,
            }
            if c.witness is not None:
                entry["witness"] = [repr(c.witness[0]), repr(c.witness[1])]
            payload.append(entry)
        _write(args.out, dumps(payload))
        return 0
    lines = []
    for c in cells:
        line = f"g={c.g} nu={c.nu} {c.verdict()}"
        if c.witness is not None:
            P, Q = c.witness
            if P == Q:
                line += f" witness x=y={P!r}"
            else:
                line += f" witness x={P!r}, y={Q!r}"
        lines.append(line)
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_theta_census(args) -> int:
    curve = _get_curve(args)
    census = theta_characteristics(curve)
    n_odd = sum(1 for t in census if t.is_odd)
    n_even = len(census) - n_odd
    if args.format == "json":
        payload = {
            "classes": len(census),
            "odd": n_odd,
            "even": n_even,
            "census": [{"subset": list(t.subset), "h0": t.h0,
                        "parity": t.parity} for t in census],
        }
        _write(args.out, dumps(payload))
    else:
        _write(args.out,
               f"{len(census)} classes: {n_odd} odd, {n_even} even\n")
    return 0


def cmd_embed(args) -> int:
    X = _get_supercurve(args)
    try:
        model = build_model(X, args.nu)
    except ValueError as exc:
        sys.stderr.write(f"{exc}\n")
        return 1
    text = dumps(model_to_json(model))
    if args.out:
        _write(args.out, text)
        sys.stdout.write(f"ambient: P^({model.ambient.even}|"
                         f"{model.ambient.odd})\nwrote {args.out}\n")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    model = model_from_json(_load_json(args.model))
    report = verify_embedding(model, samples=args.samples, seed=args.seed)
    if args.format == "json":
        payload = {
            "all_pass": report.all_pass,
            "pairs_checked": report.pairs_checked,
            "points_checked": report.points_checked,
            "pair_failures": [[repr(P), repr(Q)]
                              for P, Q in report.pair_failures],
            "tangent_failures": [repr(P) for P in report.tangent_failures],
            "odd_failures": [repr(P) for P in report.odd_failures],
        }
        _write(args.out, dumps(payload))
    else:
        _write(args.out, report.summary() + "\n")
    return 0 if report.all_pass else 1


def cmd_dual(args) -> int:
    X = _get_supercurve(args)
    Xd = dual_supercurve(X)
    auto = is_autodual(X)
    if args.format == "json":
        payload = {
            "dual": supercurve_to_json(Xd),
            "autodual": auto,
        }
        _write(args.out, dumps(payload))
    else:
        dual_L = json.dumps(divisor_to_json(Xd.L.rep), sort_keys=True)
        _write(args.out,
               f"dual L: {dual_L}\nautodual: {'yes' if auto else 'no'}\n")
    return 0


def cmd_moduli_dim(args) -> int:
    if not args.genus:
        raise UsageError("need --genus G")
    dim = moduli_dimension(args.genus)
    if args.format == "json":
        _write(args.out, dumps({"even": dim.even, "odd": dim.odd,
                                "dimension": str(dim)}))
    else:
        _write(args.out, str(dim) + "\n")
    return 0


def cmd_superpoint(args) -> int:
    X = _get_supercurve(args)
    h = random_deformation(X.curve, seed=args.seed)
    family = SuperPointFamily(X, h)
    report = pushforward_over_superpoint(family, args.nu,
                                         allow_low_nu=args.nu < 3)
    if args.format == "json":
        payload = {
            "nu": report.nu,
            "free": report.free,
            "rank": str(report.rank),
            "drop_even": report.drop_even,
            "drop_odd": report.drop_odd,
            "hypotheses_hold": report.hypotheses_hold,
        }
        _write(args.out, dumps(payload))
    else:
        _write(args.out, str(report) + "\n")
    return 0 if report.free else 1


_ODD_NAMES = ("theta", "eta", "xi", "zeta", "chi")


def _parse_super(alg: GrassmannAlgebra, text: str, z: sp.Symbol):
    syms = {name: sp.Symbol(name) for name in alg.gens}
    expr = sp.expand(sp.sympify(text, locals={**syms, "z": z},
                                rational=True))
    odd_syms = [syms[n] for n in alg.gens]
    poly = sp.Poly(expr, *odd_syms)
    terms = {}
    for monom, coeff in poly.terms():
        if any(e > 1 for e in monom):
            continue  # squares of odd generators vanish
        key = tuple(i for i, e in enumerate(monom) if e == 1)
        terms[key] = terms.get(key, 0) + coeff
    return alg.element(terms)


def cmd_check_sc(args) -> int:
    z = sp.Symbol("z")
    used = [n for n in _ODD_NAMES
            if n == "theta" or n in args.zp or n in args.tp]
    alg = GrassmannAlgebra(tuple(used))
    try:
        zp = _parse_super(alg, args.zp, z)
        tp = _parse_super(alg, args.tp, z)
        report = check_superconformal(zp, tp, z)
    except (ValueError, sp.SympifyError) as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        payload = {
            "superconformal": report.ok,
            "residual": repr(report.residual),
            "jacobian_body_invertible": report.jacobian_body_invertible,
        }
        _write(args.out, dumps(payload))
    else:
        if report.ok:
            _write(args.out, "superconformal: yes\n")
        else:
            _write(args.out,
                   f"superconformal: no\nresidual: {report.residual!r}\n")
    return 0 if report.ok else 1


def _add_common(p, curve=True, theta=False, nu=False, fmt=True):
    if curve:
        p.add_argument("--curve", help="curve JSON file")
        p.add_argument("--genus", type=int, help="genus of the stock curve")
    if theta:
        p.add_argument("--theta",
                        help="'even', 'odd' (default even) or "
                             '\'{"subset": [0]}\'')
    if nu:
        p.add_argument("--nu", type=int, required=True,
                        help="power of the Berezinian bundle")
    if fmt:
        p.add_argument("--format", choices=("table", "json"),
                        default="table")
        p.add_argument("--out", help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plurisusy",
        description="Exact computations with powers of the Berezinian "
                    "bundle on split super Riemann surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank pair of the direct image")
    _add_common(p, theta=True, nu=True)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("thresholds", help="very-ampleness grid")
    p.add_argument("--genus", type=int, default=6, help="largest genus")
    p.add_argument("--nu", type=int, default=6, help="largest power")
    p.add_argument("--parallel", action="store_true",
                   help="evaluate cells concurrently (same output)")
    _add_common(p, curve=False)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("theta-census", help="enumerate theta characteristics")
    _add_common(p)
    p.set_defaults(func=cmd_theta_census)

    p = sub.add_parser("embed", help="build a pluri-canonical model")
    _add_common(p, theta=True, nu=True, fmt=False)
    p.add_argument("--out", help="write the model JSON here")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="separation checks for a model file")
    p.add_argument("model", help="model JSON file")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p, curve=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dual", help="dual supercurve and autoduality")
    _add_common(p, theta=True)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("moduli-dim", help="super moduli dimension pair")
    _add_common(p, curve=False)
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=cmd_moduli_dim)

    p = sub.add_parser("superpoint-rank",
                       help="section module over a 0|1 base with a random "
                            "deformation")
    _add_common(p, theta=True, nu=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_superpoint)

    p = sub.add_parser("check-superconformal",
                       help="test D z' = theta' D theta' for a coordinate "
                            "change")
    p.add_argument("zp", help="even coordinate z' as an expression in "
                              "z, theta, eta, ...")
    p.add_argument("tp", help="odd coordinate theta'")
    _add_common(p, curve=False)
    p.set_defaults(func=cmd_check_sc)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
