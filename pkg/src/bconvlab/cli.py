"""Command-line front end.

One subcommand per library operation.  Long-running commands stream one text
row per completed unit of work (to stderr when stdout is reserved for JSON or
CSV), then emit a final report envelope.  With the same configuration and
seed, the payload part of the envelope is byte-identical across runs, thread
counts, and cache states; wall-clock time lives outside the payload for
exactly that reason.

Exit codes: 0 success, 2 malformed input or usage, 3 reducible polynomial,
4 precision exhausted, 5 work budget or cap exceeded, 6 operation undefined
for this number (non-monic / non-Salem), 7 square-root reduction did not
terminate.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .algebraic import AlgebraicNumber, classify, algebraic_number, sqrt_tower_reduce
from .config import CACHE_ENV_VAR, RunConfig, default_config  # noqa: F401  (RunConfig re-exported)
from .errors import (
    BudgetExceeded,
    DegreeCapExceeded,
    NoRealRootAboveOne,
    NotMonicError,
    NotSalemError,
    ParseError,
    PrecisionExhausted,
    ReductionDidNotTerminate,
)
from .measure import branching_count, branching_growth, local_dimension_profile, measure_bounds, support_interval
from .powersum import ALPHABET_BINARY, ALPHABET_SIGNED, gap_series, garsia_entropy, growth_report
from .spectra import trace_residual_report, unit_circle_partial_sums

__all__ = ["main", "RunConfig", "build_envelope"]

_EXIT_OK = 0
_EXIT_USAGE = 2
_EXIT_REDUCIBLE = 3
_EXIT_PRECISION = 4
_EXIT_BUDGET = 5
_EXIT_UNDEFINED = 6
_EXIT_REDUCTION = 7


# ----------------------------------------------------------------------
# tagged numeric values
# ----------------------------------------------------------------------
# Every numeric quantity in a payload is either {"value": v, "exact": true}
# or {"value": v, "err": bound}; bare integers appear only as row labels
# (n, m, depth, sample indices).

def _exact(v):
    return {"value": v, "exact": True}


def _measured(value: float, err: float):
    return {"value": value, "err": err}


def _rounded(v: float, ops: int = 16):
    """A float obtained from exact inputs through ~ops floating operations."""
    return {"value": v, "err": abs(v) * ops * 2.0 ** -52 + 5e-324}


def _bracket(lo: Fraction, hi: Fraction):
    if lo == hi:
        return _exact_fraction(lo)
    mid = (lo + hi) / 2
    return {"value": float(mid), "err": float((hi - lo) / 2) + abs(float(mid)) * 2.0 ** -50}


def _exact_fraction(f: Fraction):
    v = float(f)
    if Fraction(v) == f:
        return _exact(v)
    return {"value": v, "err": abs(v) * 2.0 ** -51 + 5e-324}


# ----------------------------------------------------------------------
# output plumbing
# ----------------------------------------------------------------------

class _Streams:
    """Routes live rows and the final report to the right file handles."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.rows_to = sys.stderr if fmt in ("json", "csv") else sys.stdout

    def row(self, text: str) -> None:
        print(text, file=self.rows_to, flush=True)

    def finish(self, envelope: dict, csv_rows: list[dict], csv_fields: list[str]) -> None:
        if self.fmt == "json":
            json.dump(envelope, sys.stdout, indent=2, sort_keys=True)
            sys.stdout.write("\n")
        elif self.fmt == "csv":
            writer = csv.DictWriter(sys.stdout, fieldnames=csv_fields, lineterminator="\n")
            writer.writeheader()
            for r in csv_rows:
                writer.writerow(r)
            print(json.dumps(envelope, sort_keys=True), file=sys.stderr)
        else:
            self._summary(envelope)

    def _summary(self, envelope: dict) -> None:
        cls = envelope["classification"]
        kinds = [k for k in ("pisot", "salem", "garsia", "perron") if cls[k]]
        theta = envelope["theta"]
        print(f"# {envelope['minpoly']}   theta={theta['value']:.12g} "
              f"({', '.join(kinds) if kinds else 'none of pisot/salem/garsia/perron'})")
        summary = envelope["payload"].get("summary")
        if summary:
            parts = []
            for key, val in sorted(summary.items()):
                if isinstance(val, dict) and "value" in val:
                    parts.append(f"{key}={val['value']:.10g}")
                else:
                    parts.append(f"{key}={val}")
            print("# " + "  ".join(parts))
        print(f"# wall time {envelope['wall_time_s']}s")


def _flat(row: dict) -> dict:
    """Flatten one payload row for CSV: tagged values become col / col_err."""
    out = {}
    for key, val in row.items():
        if isinstance(val, dict) and "value" in val:
            out[key] = repr(val["value"]) if isinstance(val["value"], float) else val["value"]
            if "err" in val:
                out[key + "_err"] = repr(val["err"])
        elif isinstance(val, float):
            out[key] = repr(val)
        elif isinstance(val, (list, tuple)):
            out[key] = " ".join(str(x) for x in val)
        else:
            out[key] = val
    return out


def _csv_fields(rows: list[dict]) -> list[str]:
    fields: list[str] = []
    for r in rows:
        for k in r:
            if k not in fields:
                fields.append(k)
    return fields


def build_envelope(command: str, a: AlgebraicNumber, parameters: dict, payload: dict,
                   wall_time: float) -> dict:
    report = classify(a)
    return {
        "tool": "bconvlab",
        "version": __version__,
        "minpoly": str(a.minpoly),
        "coefficients": list(a.minpoly.coeffs),
        "theta": _bracket(report.theta_low, report.theta_high),
        "classification": {
            "degree": report.degree,
            "height": report.height,
            "rational": report.is_rational,
            "algebraic_integer": report.is_algebraic_integer,
            "unit": report.is_unit,
            "pisot": report.is_pisot,
            "salem": report.is_salem,
            "perron": report.is_perron,
            "garsia": report.is_garsia,
            "has_minus_theta_conjugate": report.has_minus_theta_conjugate,
            "mahler": _bracket(report.mahler_low, report.mahler_high),
            "circle_statuses": list(report.circle_statuses),
            "theta_in_range": report.theta_in_range,
            "warning": report.warning,
        },
        "command": command,
        "parameters": parameters,
        "payload": payload,
        "wall_time_s": 0.0 if wall_time < 0 else round(wall_time, 3),
    }


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def _cmd_classify(args, cfg: RunConfig, out: _Streams):
    a = algebraic_number(args.poly, cfg.precision_bits)
    rep = classify(a)
    out.row(f"degree {rep.degree}, height {rep.height}, "
            f"mahler in [{float(rep.mahler_low):.9f}, {float(rep.mahler_high):.9f}]")
    out.row("conjugates vs unit circle: " + " ".join(rep.circle_statuses))
    payload: dict = {}
    if args.sqrt_tower:
        red = sqrt_tower_reduce(a, max_steps=args.max_steps)
        payload["sqrt_tower"] = {
            "steps": red.steps,
            "reduced_minpoly": str(red.alpha.minpoly),
            "reduced_degree": red.alpha.degree,
        }
        out.row(f"sqrt tower: {red.steps} extractions -> {red.alpha.minpoly}")
    return a, {"sqrt_tower": bool(args.sqrt_tower)}, payload, [], []


def _cmd_dn(args, cfg: RunConfig, out: _Streams):
    a = algebraic_number(args.poly, cfg.precision_bits)
    alphabet = ALPHABET_SIGNED if args.signed else ALPHABET_BINARY

    def live(r):
        out.row(f"n={r.n:3d}  d_n={r.count}  root={r.root:.6f}  ratio={r.ratio:.6f}")

    rep = growth_report(a, args.nmax, alphabet, cfg, progress=live)
    rows = [
        {"n": r.n, "count": _exact(r.count), "root": _rounded(r.root),
         "ratio": _rounded(r.ratio)}
        for r in rep.rows
    ]
    payload = {
        "alphabet": list(rep.alphabet),
        "rows": rows,
        "summary": {
            "final_root": _rounded(rep.rows[-1].root),
            "subadditive": rep.subadditive,
            "root_in_range": rep.root_in_range,
            "ratio_nondecreasing": rep.ratio_nondecreasing,
        },
    }
    params = {"nmax": args.nmax, "alphabet": list(alphabet)}
    return a, params, payload, [_flat(r) for r in rows], []


def _cmd_gaps(args, cfg: RunConfig, out: _Streams):
    a = algebraic_number(args.poly, cfg.precision_bits)

    def live(r):
        out.row(f"n={r.n:3d}  count={r.count}  min_gap={r.min_gap:.6e}  max_gap={r.max_gap:.6e}")

    rep = gap_series(a, args.nmax, cfg, progress=live)
    rows = [
        {"n": r.n, "count": _exact(r.count),
         "min_gap": _bracket(r.min_gap_low, r.min_gap_high),
         "max_gap": _bracket(r.max_gap_low, r.max_gap_high)}
        for r in rep.rows
    ]
    last = rep.rows[-1]
    payload = {
        "rows": rows,
        "summary": {
            "ell_proxy": _bracket(last.min_gap_low, last.min_gap_high),
            "big_gap_limsup": _rounded(rep.big_gap_limsup),
            "stable_from": rep.stable_from,
        },
    }
    return a, {"nmax": args.nmax}, payload, [_flat(r) for r in rows], []


def _cmd_entropy(args, cfg: RunConfig, out: _Streams):
    a = algebraic_number(args.poly, cfg.precision_bits)

    def live(r):
        out.row(f"n={r.n:3d}  classes={r.count}  H_n={r.entropy:.9f}")

    rep = garsia_entropy(a, args.nmax, cfg, progress=live)
    rows = [
        {"n": r.n, "count": _exact(r.count), "entropy": _rounded(r.entropy, ops=64),
         "dim_estimate": _rounded(r.dim_estimate, ops=64)}
        for r in rep.rows
    ]
    payload = {"rows": rows,
               "summary": {"dim_estimate": _rounded(rep.dim_estimate, ops=64)}}
    return a, {"nmax": args.nmax}, payload, [_flat(r) for r in rows], []


def _cmd_measure(args, cfg: RunConfig, out: _Streams):
    a = algebraic_number(args.poly, cfg.precision_bits)
    if args.interval is not None:
        lo_text, hi_text = args.interval
        J = support_interval(a, lo_text, hi_text)
        bound = measure_bounds(a, J, args.depth, cfg)
        row = {
            "left": _exact_fraction(Fraction(lo_text)),
            "right": _exact_fraction(Fraction(hi_text)),
            "lower": _exact_fraction(bound.lower),
            "upper": _exact_fraction(bound.upper),
        }
        out.row(f"mu[{lo_text}, {hi_text}] in [{float(bound.lower):.9f}, {float(bound.upper):.9f}]"
                f" at depth {bound.depth}")
        payload = {"mode": "interval", "depth": bound.depth, "rows": [row],
                   "summary": {"lower": row["lower"], "upper": row["upper"]}}
        params = {"interval": [lo_text, hi_text], "depth": args.depth}
        return a, params, payload, [_flat(row)], []

    def live(s):
        out.row(f"gap width~{s.width:.4e}  mu=[{float(s.bound.lower):.4e},"
                f" {float(s.bound.upper):.4e}]  ratio>={s.ratio_low:.4f}")

    prof = local_dimension_profile(a, args.n, args.depth, cfg, progress=live)
    rows = []
    for s in prof.samples:
        rows.append({
            "width": _bracket(s.interval.width_low, s.interval.width_high),
            "lower": _exact_fraction(s.bound.lower),
            "upper": _exact_fraction(s.bound.upper),
            "ratio_low": _rounded(s.ratio_low),
            "ratio_high": (None if s.ratio_high == float("inf")
                           else _rounded(s.ratio_high)),
            "log_stat": _rounded(s.log_stat),
        })
    smry = prof.summary
    payload = {
        "mode": "profile", "n": prof.n, "depth": prof.depth,
        "rows": rows,
        "summary": {
            "min_ratio": _rounded(smry.min_ratio),
            "median_ratio": _rounded(smry.median_ratio),
            "lower_scale_min": _rounded(smry.lower_scale_min, ops=64),
            "upper_scale_max": _rounded(smry.upper_scale_max, ops=64),
            "salem_scale_min": (None if smry.salem_scale_min is None
                                else _rounded(smry.salem_scale_min, ops=64)),
            "log_stat_median": _rounded(smry.log_stat_median, ops=64),
            "log_uses_absolute_value": smry.log_uses_absolute_value,
        },
    }
    params = {"n": args.n, "depth": args.depth}
    return a, params, payload, [_flat(r) for r in rows], []


def _parse_digit_string(text: str) -> tuple[int, ...]:
    if not text or any(c not in "01" for c in text):
        raise ParseError(f"digit string must be nonempty over 0/1, got {text!r}")
    return tuple(int(c) for c in text)


def _cmd_branching(args, cfg: RunConfig, out: _Streams):
    a = algebraic_number(args.poly, cfg.precision_bits)
    if args.x is not None:
        digits = _parse_digit_string(args.x)
        res = branching_count(a, digits, args.n, config=cfg)
        rows = [{"n": j + 1, "beta": _exact(b), "growth": _rounded(g)}
                for j, (b, g) in enumerate(zip(res.betas, res.growth))]
        for r in rows:
            out.row(f"n={r['n']:3d}  beta={r['beta']['value']}  "
                    f"growth={r['growth']['value']:.6f}")
        payload = {"mode": "point", "rows": rows,
                   "summary": {"final_beta": _exact(res.betas[-1]),
                               "final_growth": _rounded(res.growth[-1])}}
        params = {"x": args.x, "n": args.n}
        return a, params, payload, [_flat(r) for r in rows], []

    def live(i, _res):
        out.row(f"sample {i}/{args.samples} done")

    rep = branching_growth(a, args.samples, args.digits, args.nmax,
                           seed=cfg.seed, config=cfg, progress=live)
    rows = [{"n": r.n, "mean": _rounded(r.mean, ops=4 * args.samples),
             "low": _rounded(r.low), "high": _rounded(r.high)}
            for r in rep.rows]
    for r in rep.rows:
        out.row(f"n={r.n:3d}  mean={r.mean:.6f}  range=[{r.low:.6f}, {r.high:.6f}]")
    payload = {
        "mode": "growth", "rows": rows,
        "summary": {
            "final_mean": _rounded(rep.rows[-1].mean, ops=4 * args.samples),
            "dim_estimate": _rounded(rep.dim_estimate, ops=64),
            "agreement_gap": _rounded(rep.agreement_gap, ops=64),
        },
    }
    params = {"samples": args.samples, "digits": args.digits,
              "nmax": args.nmax, "seed": cfg.seed}
    return a, params, payload, [_flat(r) for r in rows], []


def _cmd_traces(args, cfg: RunConfig, out: _Streams):
    a = algebraic_number(args.poly, cfg.precision_bits)
    rep = trace_residual_report(a, args.N)
    rows = []
    for i in range(rep.n_max):
        rows.append({
            "n": i + 1,
            "t": _exact(rep.traces[i]),
            "dominant": _measured(rep.traces[i] - rep.residuals[i],
                                  rep.residual_errors[i]),
            "r": _measured(rep.residuals[i], rep.residual_errors[i]),
            "r_normalized": _measured(rep.normalized[i],
                                      rep.residual_errors[i]),
            "r_real_parts": _measured(rep.real_part_residuals[i],
                                      rep.residual_errors[i]),
        })
    for r in rows[: min(12, len(rows))]:
        out.row(f"n={r['n']:3d}  t={r['t']['value']}  r={r['r']['value']:+.6f}")
    if len(rows) > 12:
        out.row(f"... ({len(rows)} rows total)")
    payload = {
        "rows": rows,
        "summary": {
            "s": rep.s,
            "max_residual": _rounded(rep.max_residual),
            "max_normalized": _rounded(rep.max_normalized),
            "bits": rep.bits,
        },
    }
    return a, {"N": args.N}, payload, [_flat(r) for r in rows], []


def _cmd_salem_sums(args, cfg: RunConfig, out: _Streams):
    a = algebraic_number(args.poly, cfg.precision_bits)
    rep = unit_circle_partial_sums(a, args.N)
    conj_rows = []
    for j, e in enumerate(rep.conjugates):
        fit = rep.fit_exponents[j]
        conj_rows.append({
            "conjugate": j,
            "re": _measured(float(e.re), float(e.radius)),
            "im": _measured(float(e.im), float(e.radius)),
            "sup_abs": _rounded(rep.sup_abs(j)),
            "inverse_sin_bound": _rounded(rep.inverse_sin_bounds[j]),
            "fit_exponent": None if fit is None else _rounded(fit, ops=256),
        })
        out.row(f"conjugate {j}: sup|P|={rep.sup_abs(j):.4f}  "
                f"bound={rep.inverse_sin_bounds[j]:.4f}  "
                f"fit={'n/a' if fit is None else f'{fit:.3f}'}")
    series_rows = []
    for n in range(rep.n_max):
        row: dict = {"n": n + 1}
        for j in range(len(rep.conjugates)):
            row[f"P{j}"] = _measured(rep.sums[j][n], rep.errors[j][n])
        series_rows.append(row)
    payload = {
        "conjugates": conj_rows,
        "rows": series_rows,
        "summary": {
            "num_on_circle": len(rep.conjugates),
            "bits": rep.bits,
        },
    }
    return a, {"N": args.N}, payload, [_flat(r) for r in series_rows], []


# ----------------------------------------------------------------------
# argument parsing and dispatch
# ----------------------------------------------------------------------

def _apply_config_file(cfg: RunConfig, path: str) -> RunConfig:
    int_keys = {"precision_bits", "budget", "seed", "threads"}
    updates: dict = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ParseError(f"{path}:{lineno}: expected key=value, got {line!r}")
                key, _, value = line.partition("=")
                key, value = key.strip(), value.strip()
                if key in int_keys:
                    try:
                        updates[key] = int(value)
                    except ValueError:
                        raise ParseError(f"{path}:{lineno}: {key} needs an integer") from None
                elif key in ("cache_dir", "output_format"):
                    updates[key] = value
                else:
                    raise ParseError(f"{path}:{lineno}: unknown configuration key {key!r}")
    except OSError as exc:
        raise ParseError(f"cannot read config file {path}: {exc}") from None
    return cfg.with_(**updates)


def _resolve_config(args) -> RunConfig:
    cfg = default_config()
    if args.config:
        cfg = _apply_config_file(cfg, args.config)
    updates: dict = {}
    for key in ("precision_bits", "budget", "threads", "seed"):
        val = getattr(args, key.replace("-", "_"), None)
        if val is not None:
            updates[key] = val
    if args.cache_dir is not None:
        updates["cache_dir"] = args.cache_dir
    if args.json:
        updates["output_format"] = "json"
    elif args.csv:
        updates["output_format"] = "csv"
    return cfg.with_(**updates)


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("poly", help="minimal polynomial, e.g. 'x^2-x-1' or '1,-1,-1'")
    shared.add_argument("--precision-bits", type=int, default=None)
    shared.add_argument("--budget", type=int, default=None)
    shared.add_argument("--threads", type=int, default=None)
    shared.add_argument("--seed", type=int, default=None)
    shared.add_argument("--cache-dir", default=None)
    shared.add_argument("--config", default=None, metavar="FILE",
                        help="key=value configuration file; flags take precedence")
    fmt = shared.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON envelope on stdout")
    fmt.add_argument("--csv", action="store_true", help="CSV rows on stdout")

    parser = argparse.ArgumentParser(
        prog="bconvlab",
        description="Exact-arithmetic laboratory for algebraic theta in (1,2): "
                    "classification, power-sum level sets, Bernoulli-convolution "
                    "measure bounds, branching counts, and trace asymptotics.",
    )
    parser.add_argument("--version", action="version", version=f"bconvlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[shared],
                       help="certified Pisot/Salem/Perron/Garsia classification")
    p.add_argument("--sqrt-tower", action="store_true",
                   help="also reduce even-exponent polynomials by square roots")
    p.add_argument("--max-steps", type=int, default=6)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("dn", parents=[shared], help="level-set counts d_n and growth")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--signed", action="store_true",
                   help="digit alphabet {-1,0,1} instead of {0,1}")
    p.set_defaults(run=_cmd_dn)

    p = sub.add_parser("gaps", parents=[shared],
                       help="adjacent-gap statistics of signed power sums")
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(run=_cmd_gaps)

    p = sub.add_parser("entropy", parents=[shared],
                       help="normalized level entropies and dimension estimate")
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(run=_cmd_entropy)

    p = sub.add_parser("measure", parents=[shared],
                       help="certified interval measures / local dimension profile")
    p.add_argument("--depth", type=int, required=True, metavar="M",
                   help="cylinder depth for the counting")
    p.add_argument("--n", type=int, default=None,
                   help="net level: profile every gap of the level-n net")
    p.add_argument("--interval", nargs=2, default=None, metavar=("LO", "HI"),
                   help="rational endpoints, e.g. 0 1/2; overrides --n")
    p.set_defaults(run=_cmd_measure)

    p = sub.add_parser("branching", parents=[shared],
                       help="expansion-prefix counts beta_n and their growth")
    p.add_argument("--x", default=None, metavar="DIGITS",
                   help="0/1 digit string for a single point (else sampled means)")
    p.add_argument("--n", type=int, default=None, help="levels to count for --x")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--digits", type=int, default=28)
    p.add_argument("--nmax", type=int, default=20)
    p.set_defaults(run=_cmd_branching)

    p = sub.add_parser("traces", parents=[shared],
                       help="exact traces of theta^n and dominant-part residuals")
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(run=_cmd_traces)

    p = sub.add_parser("salem-sums", parents=[shared],
                       help="unit-circle conjugate partial sums (Salem numbers)")
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(run=_cmd_salem_sums)

    return parser


def _validate_measure_args(args) -> None:
    if args.command == "measure" and args.interval is None and args.n is None:
        raise ParseError("measure needs either --n (gap profile) or --interval LO HI")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_measure_args(args)
        cfg = _resolve_config(args)
        out = _Streams(cfg.output_format)
        start = time.monotonic()
        a, params, payload, csv_rows, extra_fields = args.run(args, cfg, out)
        wall = time.monotonic() - start
        params = dict(params)
        params.update({
            "precision_bits": cfg.precision_bits,
            "budget": cfg.budget,
            "threads": cfg.threads,
            "cache_dir": cfg.cache_dir,
        })
        envelope = build_envelope(args.command, a, params, payload, wall)
        fields = _csv_fields(csv_rows) if csv_rows else extra_fields
        out.finish(envelope, csv_rows, fields)
        return _EXIT_OK
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except ValueError as exc:
        if hasattr(exc, "witness_factor"):
            print(f"error: {exc}", file=sys.stderr)
            return _EXIT_REDUCIBLE
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except NoRealRootAboveOne as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except PrecisionExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_PRECISION
    except (BudgetExceeded, DegreeCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_BUDGET
    except (NotMonicError, NotSalemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_UNDEFINED
    except ReductionDidNotTerminate as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_REDUCTION


if __name__ == "__main__":
    raise SystemExit(main())
