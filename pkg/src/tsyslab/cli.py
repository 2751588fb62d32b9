"""Command-line front end: expansions, variables, tableaux, beta images and checks.

Exit status is 0 when every requested check passes (warnings allowed), 1 on
any failure and 2 on usage errors, including algebra/check combinations that
are out of scope.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import nullcontext

from . import beta, casorati, diffop, screening, tsystem
from .laurent import format_poly
from .reports import CheckReport
from .rootdata import AlgebraError, make_algebra
from .shifts import Shift, theta_zero
from .variables import labels, x_var, z_var

CONFIG_ENV = "TSYSLAB_CONFIG"
CHECKS = ("screening", "tq", "tt", "duality", "d34", "tsystem", "casorati", "all")
ALGEBRAS = {"a2even": "A2_even", "a2odd": "A2_odd", "d2": "D2", "d3_4": "D3_4"}
DEFAULTS = {"cutoff": 8, "m_max": 3, "a_max": None, "seed": 0, "trials": 20,
            "precision": "double", "theta_zero": False, "format": "text"}


class UsageError(Exception):
    pass


def load_config(path: str | None) -> dict:
    """Plain key=value lines; '#' starts a comment.  Keys use the flag names."""
    if not path:
        return {}
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (x.strip() for x in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = _coerce(key, value)
    return out


def _coerce(key: str, value: str):
    if key in ("cutoff", "m_max", "a_max", "seed", "trials"):
        return int(value)
    if key == "theta_zero":
        return value.lower() in ("1", "true", "yes", "on")
    if key == "precision" and value not in casorati.PRECISIONS:
        raise UsageError(f"precision must be one of {sorted(casorati.PRECISIONS)}")
    if key == "format" and value not in ("text", "json"):
        raise UsageError("format must be text or json")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", required=True, choices=sorted(ALGEBRAS))
    common.add_argument("--n", type=int, default=None, help="rank parameter (D3_4 takes n=2)")
    common.add_argument("--cutoff", type=int, help="D-degree cutoff for D2/D3_4 (default 8)")
    common.add_argument("--m-max", type=int, dest="m_max")
    common.add_argument("--a-max", type=int, dest="a_max")
    common.add_argument("--seed", type=int)
    common.add_argument("--trials", type=int)
    common.add_argument("--precision", choices=sorted(casorati.PRECISIONS))
    common.add_argument("--theta-zero", action="store_const", const=True, dest="theta_zero",
                        help="formally set pi*i/(r*hbar) to 0")
    common.add_argument("--format", choices=("text", "json"))

    parser = argparse.ArgumentParser(prog="tsyslab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("expand", parents=[common], help="print the T^a(u) of the L operator")
    sub.add_parser("vars", parents=[common], help="print the z (and x) variables")
    p = sub.add_parser("tableaux", parents=[common], help="Jacobi-Trudi T^(a)_m and its tableaux sum")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p = sub.add_parser("beta", parents=[common], help="beta images of T^a")
    p.add_argument("--a", type=int, default=None)
    p = sub.add_parser("check", parents=[common], help="verify identities")
    p.add_argument("which", choices=CHECKS)
    return parser


def resolve_options(args: argparse.Namespace) -> argparse.Namespace:
    config = load_config(os.environ.get(CONFIG_ENV))
    for key, default in DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, config.get(key, default))
    kind = ALGEBRAS[args.algebra]
    if args.n is None:
        args.n = 2 if kind in ("D3_4", "A2_odd", "D2") else 1
    try:
        args.spec = make_algebra(kind, args.n)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from exc
    return args


# commands --------------------------------------------------------------------

def cmd_expand(args) -> tuple[int, object]:
    spec = args.spec
    table = diffop.t_table(spec, args.cutoff)
    top = table.max_upper
    data = {str(a): format_poly(table.T(a)) for a in range(top + 1)}
    text = "\n".join(f"T^{a}(u) = {p}" for a, p in data.items())
    return 0, ({"algebra": spec.kind, "n": spec.n, "cutoff": table.cutoff, "T": data}, text)


def cmd_vars(args) -> tuple[int, object]:
    spec = args.spec
    z = {str(lab): format_poly(z_var(spec, lab)) for lab in labels(spec)}
    lines = [f"{k}(u) = {v}" for k, v in z.items()]
    data = {"algebra": spec.kind, "n": spec.n, "z": z}
    if spec.is_a2:
        x = {str(i): format_poly(x_var(spec, i)) for i in range(1, spec.N + 2)}
        lines += [f"x_{k}(u) = {v}" for k, v in x.items()]
        data["x"] = x
    return 0, (data, "\n".join(lines))


def cmd_tableaux(args) -> tuple[int, object]:
    spec = args.spec
    _need_a2(spec, "tableaux")
    a, m = args.a, args.m
    if not (1 <= a <= spec.n and m >= 1):
        raise UsageError(f"need 1 <= a <= {spec.n} and m >= 1")
    jt = tsystem.jacobi_trudi(spec, a, m)
    tab, count = tsystem.tableaux_sum(spec, tsystem.YoungData.rectangle(spec.N, a, m), Shift(-a - m + 1))
    agree = tab == jt
    data = {"algebra": spec.kind, "n": spec.n, "a": a, "m": m, "terms": len(jt),
            "tableaux": count, "agree": agree, "T": format_poly(jt)}
    text = (f"T^({a})_{m}(u) = {data['T']}\n"
            f"{len(jt)} terms, {count} tableaux, tableaux sum {'=' if agree else '!='} Jacobi-Trudi")
    return (0 if agree else 1), (data, text)


def cmd_beta(args) -> tuple[int, object]:
    spec = args.spec
    table = diffop.t_table(spec, args.cutoff)
    a_values = [args.a] if args.a is not None else list(range(1, spec.top_bound + 1))
    for a in a_values:
        if not 1 <= a <= table.max_upper:
            raise UsageError(f"a must lie in 1..{table.max_upper}")
    images = {str(a): beta.beta_project(spec, table.T(a)) for a in a_values}
    data = {"algebra": spec.kind, "n": spec.n,
            "beta": {a: {",".join(map(str, k)): v for k, v in sorted(w.terms.items(), reverse=True)}
                     for a, w in images.items()}}
    text = "\n".join(f"beta(T^{a}) = {w}" for a, w in images.items())
    return 0, (data, text)


def _need_a2(spec, what: str) -> None:
    if not spec.is_a2:
        raise UsageError(f"{what} is only available for a2even/a2odd, not {spec.kind}")


def applicable_checks(spec) -> list[str]:
    """The checks that `check all` runs for this algebra."""
    if spec.is_a2:
        return ["casorati", "duality", "screening", "tq", "tsystem", "tt"]
    out = ["screening", "tt"]
    if spec.kind == "D3_4":
        out.append("d34")
    return sorted(out)


def run_check(name: str, args) -> list[CheckReport]:
    spec, K = args.spec, args.cutoff
    if name == "screening":
        return [screening.check_screening_annihilation(spec, K=K), screening.check_S_functional(spec)]
    if name == "tq":
        _need_a2(spec, "check tq")
        return [diffop.check_TQ(spec)]
    if name == "tt":
        table = diffop.t_table(spec, K)
        m_max = args.m_max if spec.is_a2 else min(args.m_max, K)
        return [diffop.check_TT1(spec, table, m_max), diffop.check_TT2(spec, table, m_max)]
    if name == "duality":
        _need_a2(spec, "check duality")
        return [diffop.check_duality(spec)]
    if name == "d34":
        if spec.kind != "D3_4":
            raise UsageError("check d34 needs --algebra d3_4")
        return [diffop.check_d34_lemmas(K), screening.check_HK_annihilation()]
    if name == "tsystem":
        _need_a2(spec, "check tsystem")
        return [tsystem.check_tsystem_symbolic(spec, args.a_max, min(args.m_max, 2)),
                tsystem.check_script_T(spec),
                tsystem.check_tableaux(spec, args.a_max, args.m_max)]
    if name == "casorati":
        _need_a2(spec, "check casorati")
        return [casorati.run_casorati_checks(spec, seed=args.seed, trials=args.trials, m_max=args.m_max,
                                             a_max=args.a_max, precision=args.precision)]
    raise UsageError(f"unknown check {name!r}")


def cmd_check(args) -> tuple[int, object]:
    spec = args.spec
    if args.which == "all":
        names = applicable_checks(spec)
        extra = [diffop.check_expansion(spec, args.cutoff), beta.check_beta(spec, diffop.t_table(spec, args.cutoff))]
    else:
        names, extra = [args.which], []
    reports = list(extra)
    for name in names:
        reports.extend(run_check(name, args))
    reports.sort(key=lambda r: r.name)
    ok = all(r.passed for r in reports)
    data = {"algebra": spec.kind, "n": spec.n, "theta_zero": bool(args.theta_zero),
            "status": "pass" if ok else "fail", "reports": [r.to_dict() for r in reports]}
    text = "\n".join(r.summary() for r in reports)
    text += f"\n{'all checks passed' if ok else 'FAILED'}"
    return (0 if ok else 1), (data, text)


COMMANDS = {"expand": cmd_expand, "vars": cmd_vars, "tableaux": cmd_tableaux,
            "beta": cmd_beta, "check": cmd_check}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args = resolve_options(args)
        ctx = theta_zero() if args.theta_zero else nullcontext()
        with ctx:
            code, (data, text) = COMMANDS[args.command](args)
    except (UsageError, OSError) as exc:
        print(f"tsyslab: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        out.write(json.dumps(data, indent=2, sort_keys=True, default=str) + "\n")
    else:
        out.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
