"""Command-line front end.

    python -m cp2lg gw --max 5 --json
    python -m cp2lg verify all

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
Complex numbers are written as [re, im]; exact rationals and integers as
decimal strings.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, fields
from fractions import Fraction

from .cyclotomic import Cyclo

SCHEMA = 1


# ----------------------------------------------------------------- config

@dataclass
class RunConfig:
    gw_max: int = 10
    canon_order: int = 30
    guzzetti_order: int = 6
    x_order: int = 8
    tolerance: float = 1e-8
    grid_points: int = 20
    cache_dir: str = ""
    output: str = "text"

    def validate(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if not 1 <= self.gw_max <= 500:
            raise ValueError("gw_max must be in 1..500")
        if not 1 <= self.canon_order <= 200:
            raise ValueError("canon_order must be in 1..200")
        if not 1 <= self.guzzetti_order <= 40:
            raise ValueError("guzzetti_order must be in 1..40")
        if not 1 <= self.x_order <= 10:
            raise ValueError("x_order must be in 1..10")
        if self.output not in ("text", "json"):
            raise ValueError("output must be text or json")
        return self


def read_config(path):
    """Flat key = value file; '#' starts a comment."""
    cfg = RunConfig()
    types = {f.name: f.type for f in fields(RunConfig)}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in types:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            kind = {"int": int, "float": float, "str": str}[str(types[key]).replace("<class '", "").rstrip("'>")]
            setattr(cfg, key, kind(value))
    return cfg


# ----------------------------------------------------------------- JSON encoding

def to_jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x if abs(x) < 2 ** 53 else str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return x
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, Cyclo):
        z = complex(x)
        return [z.real, z.imag]
    if hasattr(x, "coeffs"):
        return [to_jsonable(c) for c in x.coeffs]
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "item"):                     # numpy scalars
        return to_jsonable(x.item())
    return str(x)


def emit(doc, as_json, out=None):
    out = out or sys.stdout
    if as_json:
        json.dump(to_jsonable(doc), out)
        out.write("\n")
    else:
        _emit_text(doc, out)


def _emit_text(doc, out, indent=0):
    pad = "  " * indent
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                out.write(f"{pad}{k}:\n")
                _emit_text(v, out, indent + 1)
            else:
                out.write(f"{pad}{k}: {_fmt(v)}\n")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)) and not _is_flat(v):
                _emit_text(v, out, indent)
            else:
                out.write(f"{pad}{_fmt(v)}\n")
    else:
        out.write(f"{pad}{_fmt(doc)}\n")


def _is_flat(v):
    return isinstance(v, (list, tuple)) and all(not isinstance(x, (dict, list, tuple)) for x in v)


def _fmt(v):
    if isinstance(v, complex):
        return f"{v.real:.12g}{v.imag:+.12g}i"
    if isinstance(v, Cyclo):
        return _fmt(complex(v))
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if hasattr(v, "coeffs"):
        return _fmt(list(v.coeffs))
    return str(v)


def eisenstein_text(poly):
    """{(a, b, c): coeff} as 'coeff E2^a E4^b E6^c + ...'."""
    terms = []
    for (a, b, c), coeff in sorted(poly.items()):
        mono = " ".join(f"{name}^{e}" if e > 1 else name
                        for name, e in (("E2", a), ("E4", b), ("E6", c)) if e)
        terms.append(f"({coeff}) {mono}".strip())
    return " + ".join(terms) or "0"


def parse_complex(s):
    try:
        return complex(s.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {s!r}") from None


# ----------------------------------------------------------------- subcommands

def cmd_gw(args, cfg):
    from . import gw
    D = args.max or cfg.gw_max
    table = gw.kontsevich_table(D)
    rows = [{"d": d, "N": str(table[d])} for d in range(1, D + 1)]
    if args.json:
        # a bare list, one object per degree
        json.dump(rows, sys.stdout, separators=(",", ":"))
        sys.stdout.write("\n")
        return 0
    doc = {f"N_{r['d']}": r["N"] for r in rows}
    if args.wdvv:
        r = gw.wdvv_residual(D)
        doc["wdvv_nonzero_coefficients"] = sum(1 for c in r.coeffs if c)
    if args.asymptotics and D >= 25:
        a, b = gw.fit_asymptotics(table, max(1, D // 3), D)
        doc["fit_a"], doc["fit_b"] = a, b
    emit(doc, False)
    return 0


def cmd_modular(args, cfg):
    from . import modular
    from .cache import cached_coefficients
    if args.expansion:
        coeffs, status = cached_coefficients(args.expansion, args.terms, cfg.cache_dir or None)
        doc = {"schema": SCHEMA, "fn": args.expansion, "M": args.terms, "cache": status,
               "coeffs": [str(c) for c in coeffs]}
        emit(doc, args.json)
        return 0
    tau = args.tau
    e2, e4, e6 = modular.eisenstein_triple(tau)
    h, d_eta, d_eis = modular.eta_delta(tau)
    j, J, g2, g3 = modular.j_family(tau)
    doc = {"schema": SCHEMA, "tau": tau, "E2": e2, "E4": e4, "E6": e6, "eta": h,
           "Delta_eta": d_eta, "Delta_eisenstein": d_eis,
           "Delta_half_periods": modular.delta_from_half_periods(tau),
           "j": j, "gamma2": g2, "gamma3": g3, "lambda": modular.modular_lambda(tau)}
    emit(doc, args.json)
    return 0


def cmd_canon(args, cfg):
    from . import frobenius
    order = args.order or cfg.canon_order
    u = frobenius.canonical_numeric(args.t1, args.Q, args.t3, order=order)
    coeffs = frobenius.canonical_series_exact(args.terms)
    u_series = frobenius.evaluate_canonical_series([complex(c) for c in coeffs], args.t1, args.Q, args.t3)
    doc = {"schema": SCHEMA, "t1": args.t1, "Q": args.Q, "t3": args.t3,
           "u_numeric": list(u), "u_series": list(u_series), "series_coefficients": coeffs}
    if args.t3 != 0:
        doc["psi"] = frobenius.transition_matrix(args.t1, args.Q, args.t3, order=order, u=u).tolist()
    else:
        doc["psi"] = frobenius.small_phase_psi(args.Q).tolist()
    emit(doc, args.json)
    return 0


def cmd_superpotential(args, cfg):
    from . import superpotential as sp
    if args.mode == "small":
        lg = sp.SmallLG(args.t1, args.Q)
        crit = sp.small_critical_data(lg)
        doc = {"schema": SCHEMA, "lambda": sp.small_lambda(args.tau, lg),
               "critical_points": crit["points"], "critical_values": crit["values"],
               "weights": crit["weights"]}
    else:
        (conv, q1), report = sp.convention_report()
        data = sp.big_J_coefficients(sp.milanov_coeffs(conv, q1))
        if args.mode == "coeffs":
            doc = {"schema": SCHEMA, "convention": conv, "q1_coefficient": q1,
                   "J_scaled": {n: eisenstein_text(data.J_scaled(n).to_eisenstein()) for n in range(data.order + 1)}}
        else:
            x = complex(args.Q) ** (1 / 3) * args.t3
            big = sp.big_lambda(args.tau, args.t1, args.Q, args.t3, data)
            doc = {"schema": SCHEMA, "convention": conv, "q1_coefficient": q1, "lambda": big.value,
                   "density": big.density, "truncation_estimate": big.truncation_estimate,
                   "precision_warning": big.precision_warning,
                   "critical_values": sp.big_critical_values(data, args.t1, args.Q, args.t3),
                   "x": x}
    emit(doc, args.json)
    return 0


def cmd_covering(args, cfg):
    from . import cohn
    out = cohn.v_of_tau(args.tau)
    r1, r2 = cohn.cohn_residuals(args.tau, out["pointwise"])
    doc = {"schema": SCHEMA, "tau": args.tau, "v_path": out["path"], "v_pointwise": out["pointwise"],
           "gap": out["gap"], "cohn_residual": r1, "ode_residual": r2}
    emit(doc, args.json)
    return 0


def cmd_guzzetti(args, cfg):
    from . import guzzetti
    N = args.order or cfg.guzzetti_order
    gm = guzzetti.guzzetti_map(N)
    xN = min(N, cfg.x_order, guzzetti.X_TAYLOR_CAP)
    doc = {"schema": SCHEMA, "order": N, "mu": gm.mu, "x0": guzzetti.X0,
           "omega": {"1": gm.omega.omega1, "2": gm.omega.omega2, "3": gm.omega.omega3},
           "a": gm.a, "b": gm.b, "c": gm.c, "y": gm.y, "t3_times_H": gm.t3H,
           "Q_over_H3": gm.q_over_h3, "qt3_of_x": gm.qt3(),
           "x_taylor_at_rho": guzzetti.x_taylor_at_rho(xN),
           "qt3_of_z": guzzetti.qt3_of_z(xN, gm.qt3())}
    emit(doc, args.json)
    return 0


def cmd_verify(args, cfg):
    from .verification import run_suite
    report = run_suite(args.suite)
    if args.json:
        emit(report.as_dict(), True)
    else:
        for c in report.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.id}  residual={c.residual:.3g}  tol={c.tolerance:.3g}")
        for c in report.notes:
            state = "reproduced" if c.passed else "not reproduced"
            print(f"NOTE  printed value {state}: {c.id}")
        print("overall:", "PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_export(args, cfg):
    if args.what == "gw":
        from . import gw
        table = gw.kontsevich_table(args.terms)
        doc = {"schema": SCHEMA, "what": "gw", "N": [str(table[d]) for d in range(1, args.terms + 1)]}
    elif args.what == "canonical":
        from .frobenius import canonical_series_exact
        doc = {"schema": SCHEMA, "what": "canonical", "coefficients": canonical_series_exact(args.terms)}
    elif args.what == "guzzetti":
        from .guzzetti import qt3_of_x
        doc = {"schema": SCHEMA, "what": "guzzetti", "qt3_of_x": qt3_of_x(args.terms)}
    else:
        from .cache import cached_coefficients
        coeffs, status = cached_coefficients(args.what, args.terms, cfg.cache_dir or None)
        doc = {"schema": SCHEMA, "what": args.what, "cache": status, "coeffs": [str(c) for c in coeffs]}
    text = json.dumps(to_jsonable(doc))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


# ----------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="cp2lg", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="flat key = value configuration file")
    p.add_argument("--cache-dir", help="cache directory (overrides config and environment)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        s = sub.add_parser(name, **kw)
        s.set_defaults(func=fn)
        s.add_argument("--json", action="store_true", help="JSON output")
        return s

    s = add("gw", cmd_gw, help="Gromov-Witten invariants")
    s.add_argument("--max", type=int, help="largest degree")
    s.add_argument("--wdvv", action="store_true", help="also report the associativity residual")
    s.add_argument("--asymptotics", action="store_true", help="also fit N_d/(3d-1)! ~ b a^d d^(-7/2)")

    s = add("modular", cmd_modular, help="modular forms at a point, or cached q-expansions")
    s.add_argument("--tau", type=parse_complex, default=complex(0, 1))
    s.add_argument("--expansion", choices=("E2", "E4", "E6", "j"))
    s.add_argument("--terms", type=int, default=20)

    s = add("canon", cmd_canon, help="canonical coordinates and transition matrix")
    s.add_argument("--t1", type=parse_complex, default=0j)
    s.add_argument("--Q", type=parse_complex, default=1 + 0j)
    s.add_argument("--t3", type=parse_complex, default=0.01 + 0j)
    s.add_argument("--order", type=int, help="GW truncation degree")
    s.add_argument("--terms", type=int, default=8, help="canonical series coefficients")

    s = add("superpotential", cmd_superpotential, help="Landau-Ginzburg superpotential")
    s.add_argument("mode", choices=("small", "big", "coeffs"))
    s.add_argument("--tau", type=parse_complex, default=0.1 + 1.1j)
    s.add_argument("--t1", type=parse_complex, default=0j)
    s.add_argument("--Q", type=parse_complex, default=1 + 0j)
    s.add_argument("--t3", type=parse_complex, default=1e-3 + 0j)

    s = add("covering", cmd_covering, help="universal covering v(tau) by two routes")
    s.add_argument("--tau", type=parse_complex, default=0.3 + 0.9j)

    s = add("guzzetti", cmd_guzzetti, help="flat coordinates from the Omega system")
    s.add_argument("--order", type=int)

    s = add("verify", cmd_verify, help="run the verification suite")
    s.add_argument("suite", nargs="?", default="all",
                   choices=("all", "gw", "modular", "canon", "superpotential", "covering",
                            "monodromy", "guzzetti", "series"))

    s = add("export", cmd_export, help="write a JSON document")
    s.add_argument("what", choices=("gw", "canonical", "guzzetti", "E2", "E4", "E6", "j"))
    s.add_argument("--terms", type=int, default=10)
    s.add_argument("--out")
    return p


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = read_config(args.config) if args.config else RunConfig()
        if args.cache_dir:
            cfg.cache_dir = args.cache_dir
        if getattr(args, "json", False):
            cfg.output = "json"
        cfg.validate()
    except (OSError, ValueError) as exc:
        print(f"cp2lg: {exc}", file=sys.stderr)
        return 2
    return args.func(args, cfg)


def main():
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed the pipe (e.g. `| head`); silence the flush at exit
        import os
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)
