"""Command line interface: eval, ratio, table, verify, volume.

Exit codes: 0 success, 1 verification failure, 2 a convergence or cone
condition fails, 3 degenerate coefficients, 4 parse error.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath.libmp import to_str

from . import verify as verify_mod
from .asymptotics import cone_volume_fraction
from .cf import CFModel, convergents, error_model, predicted_error
from .contiguous import connection_matrix
from .errors import (BalancedIndexOne, ConditionsUnmet, DegenerateCoefficient, DegenerateRelation,
                     NegativeShift, Nonconvergent, NotBalanced, ParseError, PoleParameter, SingularShift,
                     SpecializationPole, TZero)
from .params import ParameterVector, SeedVector
from .scalars import parse_list, to_mp

EXIT_OK, EXIT_VERIFY, EXIT_CONDITIONS, EXIT_DEGENERATE, EXIT_PARSE = 0, 1, 2, 3, 4

DEFAULT_SEED = "1,1,0,1,1"
DEFAULT_TWIST = "201"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


@dataclass
class CommandConfig:
    command: str
    params: list
    seed: SeedVector
    lam: int
    precision_bits: int
    max_n: int
    tol: object
    output: str
    format: str
    samples: int
    rng_seed: int
    only: list
    dump_matrices: str


def sci(x, digits):
    """Scientific notation with ``digits`` significant digits."""
    x = mpmath.mpf(x)
    s = to_str(x._mpf_, digits, strip_zeros=False, min_fixed=0, max_fixed=0)
    if "e" not in s:
        s += "e+0"
    return s


def _digits(config):
    return max(int(config.precision_bits / 3.32), 1)


def build_parser():
    p = _Parser(prog="cf3f2", description="Continued fractions for 3F2(1) with exact error terms.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, params_help):
        sp.add_argument("--params", help=params_help)
        sp.add_argument("--seed", default=DEFAULT_SEED, help="seed k0,k1,k2,l1,l2 (default %(default)s)")
        sp.add_argument("--twist", default=DEFAULT_TWIST, choices=["straight", "201", "120"],
                        help="straight or cyclic twist with index triple (2,0,1)/(1,2,0) (default %(default)s)")
        sp.add_argument("--lambda", dest="lam", type=int, default=0,
                        help="specialization index with k_lambda > 0 (default %(default)s)")
        sp.add_argument("--precision", type=int, default=256, help="working precision in bits (default %(default)s)")
        sp.add_argument("--max-n", type=int, default=400, help="largest approximant index (default %(default)s)")
        sp.add_argument("--tol", default="1e-30", help="stopping tolerance (default %(default)s)")
        sp.add_argument("--format", default="text", choices=["text", "csv", "json"])
        sp.add_argument("--output", default="-", help="output file (default stdout)")
        sp.add_argument("--dump-matrices", default=None, metavar="PATH",
                        help="write the connection matrices of the first three relations as JSON")

    common(sub.add_parser("eval", help="value of 3F2(k_lambda, a_mu, a_nu; b1, b2) by the specialized fraction"),
           "a_mu,a_nu,b1,b2")
    common(sub.add_parser("ratio", help="fraction for 3f2(a+k)/3f2(a) against the direct sum"),
           "a0,a1,a2,b1,b2")
    common(sub.add_parser("table", help="convergents with measured and predicted errors"),
           "four values (specialized) or five values (ratio)")
    v = sub.add_parser("verify", help="run the identity and golden-value checks")
    v.add_argument("--only", default=None, help="comma separated subset of: " + ",".join(verify_mod.CHECKS))
    v.add_argument("--precision", type=int, default=256)
    v.add_argument("--format", default="text", choices=["text", "csv", "json"])
    v.add_argument("--output", default="-")
    v.add_argument("--rng-seed", type=int, default=20240101)
    vol = sub.add_parser("volume", help="Monte Carlo share of the cone slice satisfying (a) or (b)")
    vol.add_argument("--samples", type=int, default=1_000_000)
    vol.add_argument("--rng-seed", type=int, default=0)
    vol.add_argument("--format", default="text", choices=["text", "csv", "json"])
    vol.add_argument("--output", default="-")
    return p


def make_config(ns):
    get = lambda name, default=None: getattr(ns, name, default)  # noqa: E731
    precision = get("precision", 256)
    max_n = get("max_n", 400)
    tol_text = get("tol", "1e-30")
    if precision < 64:
        raise ParseError("--precision must be at least 64")
    if max_n < 3:
        raise ParseError("--max-n must be at least 3")
    try:
        tol = Fraction(tol_text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad --tol {tol_text!r}") from None
    if tol <= 0:
        raise ParseError("--tol must be positive")
    params = parse_list(ns.params) if get("params") else None
    seed = None
    if get("seed"):
        seed = SeedVector.parse(ns.seed, twist=ns.twist)
    only = None
    if get("only"):
        only = [x.strip() for x in ns.only.split(",") if x.strip()]
        unknown = [x for x in only if x not in verify_mod.CHECKS]
        if unknown:
            raise ParseError(f"unknown checks: {', '.join(unknown)}")
    samples = get("samples", 0)
    if ns.command == "volume" and samples < 1:
        raise ParseError("--samples must be positive")
    return CommandConfig(ns.command, params, seed, get("lam", 0), precision, max_n, tol, get("output", "-"),
                         get("format", "text"), samples, get("rng_seed", 0), only, get("dump_matrices"))


# ---------------------------------------------------------------------------


def _model(config, allow_ratio=True):
    vals = config.params
    if vals is None:
        raise ParseError("--params is required")
    if len(vals) == 4:
        return CFModel.specialized(config.seed, config.lam, vals)
    if len(vals) == 5 and allow_ratio:
        return CFModel(config.seed, ParameterVector.of(vals), "f")
    raise ParseError(f"expected {'4 or 5' if allow_ratio else '4'} parameter values, got {len(vals)}")


def _dump(config, model):
    if not config.dump_matrices:
        return
    records = []
    for n in range(3):
        k_, lk = model._shifts[n]
        pt = model.point(n)
        for shift in (k_, tuple(x + y for x, y in zip(k_, lk))):
            try:
                records.append(connection_matrix(pt, shift).to_record())
            except SingularShift as exc:
                records.append({"at_point": [str(x) for x in pt], "shift": list(shift), "error": str(exc)})
    with open(config.dump_matrices, "w", encoding="utf-8") as fh:
        json.dump(records, fh, indent=2)
        fh.write("\n")


def _emit(config, rows, header, text_lines, payload):
    if config.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(header)
        w.writerows(rows)
        out = buf.getvalue()
    elif config.format == "json":
        out = json.dumps(payload, indent=2) + "\n"
    else:
        out = "\n".join(text_lines) + "\n"
    if config.output in (None, "-"):
        sys.stdout.write(out)
    else:
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)


def _complex_parts(x):
    x = mpmath.mpmathify(x)
    if isinstance(x, mpmath.mpc):
        return x.real, x.imag
    return x, mpmath.mpf(0)


def cmd_eval(config):
    model = _model(config, allow_ratio=False)
    d = _digits(config)
    with mpmath.workprec(config.precision_bits):
        em = error_model(model, config.precision_bits)
        _dump(config, model)
        tol = to_mp(config.tol)
        conv = convergents(model, config.max_n, tol, config.precision_bits, em)
        if conv.terminal_status == "degenerate":
            raise DegenerateCoefficient(getattr(conv, "message", "degenerate coefficient"), n=conv.status_n)
        n, x = conv.n, conv.value
        prev = conv.approximants[-2][1] if len(conv.approximants) > 1 else x
        step = abs(x - prev)
        pred = abs(predicted_error(em, max(n, 1)))
        re_, im_ = _complex_parts(x)
        lines = [
            f"value      = {mpmath.nstr(x, d)}",
            f"n          = {n}",
            f"status     = {conv.terminal_status}",
            f"last_step  = {sci(step, 8)}",
            f"predicted  = {sci(pred, 8)}",
        ]
        payload = {"value_re": sci(re_, d), "value_im": sci(im_, d), "n": n, "status": conv.terminal_status,
                   "last_step": sci(step, d), "predicted_error": sci(pred, d)}
        rows = [[n, sci(re_, d), sci(im_, d), sci(step, d), sci(pred, d), conv.terminal_status]]
        _emit(config, rows, ["n", "value_re", "value_im", "last_step", "predicted_error", "status"], lines, payload)
    return EXIT_OK


def cmd_ratio(config):
    model = _model(config)
    if model.normalization != "f":
        raise ParseError("ratio takes five parameter values")
    d = _digits(config)
    with mpmath.workprec(config.precision_bits):
        _dump(config, model)
        conv = convergents(model, config.max_n, to_mp(config.tol), config.precision_bits)
        if conv.terminal_status == "degenerate":
            raise DegenerateCoefficient(getattr(conv, "message", "degenerate coefficient"), n=conv.status_n)
        oracle = model.target_value(config.precision_bits)
        x = conv.value
        diff = abs(x - oracle)
        re_, im_ = _complex_parts(x)
        lines = [
            f"approximant = {mpmath.nstr(x, d)}",
            f"oracle      = {mpmath.nstr(oracle, d)}",
            f"abs_diff    = {sci(diff, 8)}",
            f"n           = {conv.n}",
            f"status      = {conv.terminal_status}",
        ]
        payload = {"approximant_re": sci(re_, d), "approximant_im": sci(im_, d), "oracle": sci(abs(oracle), d),
                   "abs_diff": sci(diff, d), "n": conv.n, "status": conv.terminal_status}
        rows = [[conv.n, sci(re_, d), sci(im_, d), sci(diff, d), conv.terminal_status]]
        _emit(config, rows, ["n", "approximant_re", "approximant_im", "abs_diff", "status"], lines, payload)
    return EXIT_OK


def cmd_table(config):
    model = _model(config)
    d = _digits(config)
    with mpmath.workprec(config.precision_bits):
        _dump(config, model)
        try:
            em = error_model(model, config.precision_bits)
        except ConditionsUnmet:
            if model.normalization == "specialized":
                raise
            em = None
        reference = model.target_value(config.precision_bits)
        conv = convergents(model, config.max_n, mpmath.mpf(0), config.precision_bits)
        rows = []
        for n, x in conv.approximants:
            err = abs(reference - x)
            re_, im_ = _complex_parts(x)
            if em is not None and n >= 1:
                pred = abs(predicted_error(em, n))
                ratio = sci(err / pred, d) if pred != 0 else ""
                pred_s = sci(pred, d)
            else:
                pred_s, ratio = "", ""
            rows.append([n, sci(re_, d), sci(im_, d), sci(err, d), pred_s, ratio])
        header = ["n", "approximant_re", "approximant_im", "abs_error", "predicted_error", "ratio"]
        lines = ["  ".join(f"{h:>12}" for h in header)]
        lines += ["  ".join(f"{str(c)[:12]:>12}" for c in r) for r in rows]
        payload = {"rows": [dict(zip(header, r)) for r in rows], "status": conv.terminal_status}
        _emit(config, rows, header, lines, payload)
        if conv.terminal_status == "degenerate":
            raise DegenerateCoefficient(getattr(conv, "message", "degenerate coefficient"), n=conv.status_n)
    return EXIT_OK


def cmd_volume(config):
    est = cone_volume_fraction(config.samples, config.rng_seed)
    lines = [
        f"fraction = {est.fraction:.6f}",
        f"interval95 = [{est.low:.6f}, {est.high:.6f}]",
        f"samples = {est.samples}",
        f"drawn = {est.drawn}",
    ]
    row = [f"{est.fraction:.6f}", f"{est.low:.6f}", f"{est.high:.6f}", est.samples, est.drawn]
    payload = {"fraction": row[0], "low": row[1], "high": row[2], "samples": est.samples, "drawn": est.drawn}
    _emit(config, [row], ["fraction", "low95", "high95", "samples", "drawn"], lines, payload)
    return EXIT_OK


def cmd_verify(config):
    results = verify_mod.run(config.only, config.precision_bits, config.rng_seed)
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name:<14} {r.detail}" for r in results]
    rows = [[r.name, "pass" if r.ok else "fail", r.detail] for r in results]
    payload = [{"check": r.name, "ok": r.ok, "detail": r.detail} for r in results]
    _emit(config, rows, ["check", "status", "detail"], lines, payload)
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


COMMANDS = {"eval": cmd_eval, "ratio": cmd_ratio, "table": cmd_table, "verify": cmd_verify, "volume": cmd_volume}

CONDITION_ERRORS = (ConditionsUnmet, Nonconvergent, PoleParameter, NotBalanced, NegativeShift, TZero,
                    BalancedIndexOne)
DEGENERATE_ERRORS = (DegenerateCoefficient, DegenerateRelation, SingularShift, SpecializationPole,
                     ZeroDivisionError)


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        config = make_config(ns)
        return COMMANDS[config.command](config)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CONDITION_ERRORS as exc:
        print(f"condition failed: {exc}", file=sys.stderr)
        return EXIT_CONDITIONS
    except DEGENERATE_ERRORS as exc:
        n = getattr(exc, "n", None)
        where = f" at n={n}" if n is not None else ""
        print(f"degenerate{where}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
