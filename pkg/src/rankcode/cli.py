"""Command line entry point: ``rankcode {bounds,census,verify,simulate}``.

Data goes to ``--out`` (or stdout); diagnostics go to stderr.  Files are
written to a temporary sibling and renamed into place, so a failed run
leaves nothing behind.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from fractions import Fraction

from rankcode import __version__, oracle, sim, suites
from rankcode.bounds import BoundParams, du_bound, pe_bound_global, pe_bound_u
from rankcode.els import GuardError

BOUNDS_COLUMNS = ["q", "m", "n", "k", "t", "u", "Du_bound", "PE_eq6_7", "PE_eq8_log_q", "PE_eq8", "note"]
CENSUS_COLUMNS = ["u", "N_u", "D_u", "PE_exact", "PE_eq6_7", "PE_eq8"]


class UsageError(Exception):
    pass


def parse_range(text: str | None) -> list[int]:
    """'3' -> [3]; '1:4' -> [1, 2, 3, 4]; '2,5,7' -> [2, 5, 7]; '' -> []."""
    if text is None:
        return []
    text = text.strip()
    if not text:
        return []
    out = []
    for part in text.split(","):
        if ":" in part:
            lo, hi = part.split(":")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _num(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(float(x))


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _table(columns, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{c: r.get(c, "") for c in columns} for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if not out:
        sys.stdout.write(text)
        return
    d = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".rankcode-")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------


def bounds_rows(q, m, n, k_values, t_values, u_values):
    rows = []
    combos = [(k, None) for k in k_values] + [(n - 2 * t, t) for t in t_values]
    for k, _ in combos:
        p = BoundParams(q, m, n, k)
        t, d = p.t, p.d
        us = u_values if u_values is not None else list(range(d - t, n + 1))
        g = pe_bound_global(q, t)
        for u in us:
            if not 0 <= u <= min(m, n):
                raise UsageError(f"u={u} outside 0..{min(m, n)}")
            row = {"q": q, "m": m, "n": n, "k": k, "t": t, "u": u,
                   "PE_eq8_log_q": _num(g.log_q), "PE_eq8": _num(g.value), "note": ""}
            if u <= t:
                row.update(Du_bound="", PE_eq6_7="0", note="u<=t: always decoded")
            elif u < d - t:
                row.update(Du_bound="0", PE_eq6_7="0", note="t<u<d-t: always a failure")
            else:
                row.update(Du_bound=str(du_bound(p, u)), PE_eq6_7=_num(pe_bound_u(p, u).value))
            if g.log_q >= 0:
                row["note"] = "; ".join(x for x in (row["note"], "trivial (≥1)") if x)
            rows.append(row)
    return rows


def cmd_bounds(args) -> str:
    for name in ("q", "m", "n"):
        if getattr(args, name) is None:
            raise UsageError(f"bounds needs --{name}")
    q, m, n = args.q, args.m, args.n
    if n > m:
        raise UsageError(f"need n <= m, got n={n}, m={m}")
    k_values = [args.k] if args.k is not None else []
    t_values = parse_range(args.t) if args.t is not None else []
    if not k_values and args.t is None:
        raise UsageError("bounds needs --k or --t")
    for t in t_values:
        if not 0 <= 2 * t <= n - 1:
            raise UsageError(f"t={t} needs 0 <= 2t <= n-1")
    for k in k_values:
        if not 1 <= k <= n:
            raise UsageError(f"k={k} outside 1..n")
    if args.u is not None:
        u_values = parse_range(args.u)
    elif args.t is not None:
        u_values = [n]
    else:
        u_values = None
    return _table(BOUNDS_COLUMNS, bounds_rows(q, m, n, k_values, t_values, u_values), args.format)


def census_rows(q, m, n, k, workers=1):
    book = oracle.ExhaustiveCodebook.tiny(q, m, n, k)
    c = oracle.decodable_census(book, workers=workers)
    if not c.agree:
        raise RuntimeError(f"decoder and geometric decodability disagree on {c.mismatches} vectors")
    p = c.params
    g = pe_bound_global(q, p.t)
    rows = []
    for r in c.rows:
        rows.append({
            "u": r.u, "N_u": r.N_u, "D_u": r.D_u, "PE_exact": _frac(r.PE_exact),
            "PE_eq6_7": _frac(pe_bound_u(p, r.u).exact) if r.u >= p.d - p.t and r.u > p.t else "",
            "PE_eq8": _num(g.value),
        })
    return rows


def cmd_census(args) -> str:
    for name in ("q", "m", "n", "k"):
        if getattr(args, name) is None:
            raise UsageError(f"census needs --{name}")
    if args.n > args.m or not 1 <= args.k <= args.n:
        raise UsageError("need 1 <= k <= n <= m")
    return _table(CENSUS_COLUMNS, census_rows(args.q, args.m, args.n, args.k, args.workers), args.format)


def cmd_verify(args) -> tuple[str, int]:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    for nm in names:
        if nm not in suites.SUITES:
            raise UsageError(f"unknown suite {nm!r}; available: {', '.join(suites.SUITES)}, all")
    lines, ok = [], True
    for nm in names:
        kw = {"workers": args.workers} if nm == "bound-chain" else {}
        rep = suites.run_suite(nm, **kw)
        lines.extend(rep.lines())
        ok = ok and rep.ok
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n", 0 if ok else 1


def build_plans(args) -> list:
    common = {"max_trials": args.max_trials, "min_errors": args.min_errors}
    if args.preset == "fig1":
        ts = (1, 2, 3, 4) if args.with_t4 else (1, 2, 3)
        return sim.fig1_plans(args.seed, ts, **common)
    if args.preset == "fig2":
        return sim.fig2_plans(args.seed, **common)
    if args.plan:
        plans = sim.load_plans(args.plan)
        return [p if "seed" in _plan_keys(args.plan, i) else _with_seed(p, args.seed)
                for i, p in enumerate(plans)]
    for name in ("q", "m", "n", "u"):
        if getattr(args, name) is None:
            raise UsageError(f"simulate needs --preset, --plan or inline --q --m --n --k/--t --u (missing --{name})")
    if (args.k is None) == (args.t is None):
        raise UsageError("give exactly one of --k, --t")
    k = args.k if args.k is not None else args.n - 2 * int(args.t)
    return [
        sim.TrialPlan(args.q, args.m, args.n, k, u, min_decoder_errors=args.min_errors,
                      max_trials=args.max_trials, seed=args.seed, stream_id=i)
        for i, u in enumerate(parse_range(args.u))
    ]


def _plan_keys(path, i):
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data["plans"]
    return data[i]


def _with_seed(p, seed):
    d = p.to_dict()
    d["seed"] = seed
    return sim.TrialPlan(**d)


def cmd_simulate(args) -> str:
    plans = build_plans(args)
    for p in plans:
        try:
            p.validate()
        except ValueError as exc:
            raise UsageError(f"invalid plan {p}: {exc}") from None
    rows = sim.sweep(plans, workers=args.workers)
    for r in rows:
        if r["status"] != "ok":
            _diag(f"t={r['t']} u={r['u']}: {r['status']}")
            continue
        hi, eq8 = float(r["PE_hi95"]), float(r["PE_eq8"])
        verdict = "below" if hi < eq8 else "NOT below"
        cens = " (censored)" if r["censored"] else ""
        _diag(f"t={r['t']} u={r['u']}: {r['decoder_errors']}/{r['trials']} decoder errors, "
              f"PE_hat={float(r['PE_hat']):.4g} [{float(r['PE_lo95']):.3g}, {hi:.3g}] "
              f"{verdict} u-independent bound {eq8:.4g}{cens}" if r["trials"] else
              f"t={r['t']} u={r['u']}: no trials run (censored)")
    if args.out:
        man = args.manifest or args.out + ".manifest.json"
        _emit(json.dumps(sim.manifest(plans, args.seed), indent=2, sort_keys=True) + "\n", man)
    return _table(sim.CSV_COLUMNS, rows, args.format)


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--max-trials", type=int, default=10**7)

    def params(p, need_k=True):
        p.add_argument("--q", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)

    ap = argparse.ArgumentParser(prog="rankcode", description="Gabidulin-code decoder error probability toolkit")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("bounds", parents=[common], help="tabulate the D_u and P_E bounds")
    params(b)
    b.add_argument("--t", help="t values (e.g. 1:4); sets k = n - 2t")
    b.add_argument("--u", help="u values (e.g. 3:16); default n with --t, else d-t..n")

    c = sub.add_parser("census", parents=[common], help="exhaustive D_u / N_u census of a tiny code")
    params(c)

    v = sub.add_parser("verify", parents=[common], help="run a brute-force verification suite")
    v.add_argument("suite", help=f"one of {', '.join(suites.SUITES)}, all")

    s = sub.add_parser("simulate", parents=[common], help="Monte Carlo estimate of P_E")
    s.add_argument("--preset", choices=("fig1", "fig2"))
    s.add_argument("--with-t4", action="store_true", help="fig1: also run t=4 (slow)")
    s.add_argument("--plan", help="JSON plan file")
    params(s)
    s.add_argument("--t", type=int)
    s.add_argument("--u", help="u values (e.g. 5:16)")
    s.add_argument("--min-errors", type=int, default=15)
    s.add_argument("--manifest", help="manifest path (default: OUT.manifest.json)")
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.workers < 1:
            raise UsageError("--workers must be >= 1")
        if args.max_trials < 0:
            raise UsageError("--max-trials must be >= 0")
        code = 0
        if args.cmd == "bounds":
            text = cmd_bounds(args)
        elif args.cmd == "census":
            text = cmd_census(args)
        elif args.cmd == "verify":
            text, code = cmd_verify(args)
        else:
            text = cmd_simulate(args)
        _emit(text, args.out)
        return code
    except UsageError as exc:
        _diag(f"rankcode: error: {exc}")
        return 2
    except GuardError as exc:
        _diag(f"rankcode: guard exceeded: {exc}")
        return 3
    except (ValueError, OSError, RuntimeError) as exc:
        _diag(f"rankcode: error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
