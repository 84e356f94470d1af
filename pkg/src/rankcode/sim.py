"""Monte Carlo estimation of the decoder error probability P_E(t; u).

Each trial draws a uniform message, encodes it, adds a uniform error of
rank exactly u and decodes.  With u > t a trial ends either in a decoding
failure or in a decoder error (a codeword other than the transmitted one).
Trials continue until ``min_decoder_errors`` decoder errors have been seen
or ``max_trials`` is reached, in which case the row is marked censored.

Random numbers: trial i of a plan uses its own numpy Philox4x64 stream with
key (seed, stream_id) and counter (0, i, 0, 0); the generator is consumed in
this order -- k message symbols, then the error (see
:func:`rankcode.rank_metric.sample_rank_u`).  Trials are therefore
independent of execution order, and results do not depend on the number of
worker processes.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np

from rankcode.bounds import pe_bound_global
from rankcode.gabidulin import Decoded, build_code, decode, encode
from rankcode.rank_metric import sample_rank_u, uniform_elements, vec_add

SUCCESS, FAILURE, DECODER_ERROR = "S", "F", "E"
BLOCK = 256
MASK64 = (1 << 64) - 1

CSV_COLUMNS = [
    "q", "m", "n", "k", "t", "u", "trials", "failures", "decoder_errors",
    "PE_hat", "PE_eq8", "seed", "stream_id", "PE_lo95", "PE_hi95", "censored", "status",
]


class InvariantViolation(RuntimeError):
    """A trial produced an outcome the bounded-distance geometry forbids."""


@dataclass(frozen=True)
class TrialPlan:
    q: int
    m: int
    n: int
    k: int
    u: int
    min_decoder_errors: int = 15
    max_trials: int = 10**7
    seed: int = 0
    stream_id: int = 0
    zero_message: bool = False

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    def validate(self) -> "TrialPlan":
        if self.n > self.m or not 1 <= self.k <= self.n:
            raise ValueError(f"invalid code parameters n={self.n}, m={self.m}, k={self.k}")
        if self.u <= self.t:
            raise ValueError(f"u={self.u} <= t={self.t}: P_E is identically zero")
        if self.u > min(self.m, self.n):
            raise ValueError(f"u={self.u} exceeds min(m, n)")
        if self.max_trials < 0 or self.min_decoder_errors < 1:
            raise ValueError("need max_trials >= 0 and min_decoder_errors >= 1")
        return self

    @classmethod
    def from_t(cls, q, m, n, t, u, **kw) -> "TrialPlan":
        return cls(q, m, n, n - 2 * t, u, **kw)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TrialRecord:
    index: int
    outcome: str
    digest: str | None = None


@dataclass
class TrialTally:
    plan: TrialPlan
    trials: int = 0
    successes: int = 0
    failures: int = 0
    decoder_errors: int = 0

    @property
    def censored(self) -> bool:
        return self.decoder_errors < self.plan.min_decoder_errors

    @property
    def pe_hat(self) -> float:
        return self.decoder_errors / self.trials if self.trials else math.nan

    @property
    def pf_hat(self) -> float:
        return self.failures / self.trials if self.trials else math.nan

    def wilson(self, z: float = 1.959963984540054) -> tuple[float, float]:
        return wilson_interval(self.decoder_errors, self.trials, z)

    def add(self, outcome: str) -> None:
        self.trials += 1
        if outcome == DECODER_ERROR:
            self.decoder_errors += 1
        elif outcome == FAILURE:
            self.failures += 1
        else:
            self.successes += 1


def wilson_interval(k: int, n: int, z: float = 1.959963984540054) -> tuple[float, float]:
    if n == 0:
        return 0.0, 1.0
    p = k / n
    den = 1 + z * z / n
    centre = (p + z * z / (2 * n)) / den
    half = z * math.sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / den
    # the endpoints are exactly 0 and 1 at k = 0 and k = n; avoid rounding residue
    lo = 0.0 if k == 0 else max(0.0, centre - half)
    hi = 1.0 if k == n else min(1.0, centre + half)
    return lo, hi


def trial_rng(seed: int, stream_id: int, index: int) -> np.random.Generator:
    bits = np.random.Philox(key=[seed & MASK64, stream_id & MASK64], counter=[0, index, 0, 0])
    return np.random.Generator(bits)


@lru_cache(maxsize=32)
def _code(q, m, n, k):
    return build_code(q, m, n, k)


def run_trial(plan: TrialPlan, index: int, with_digest: bool = False) -> TrialRecord:
    code = _code(plan.q, plan.m, plan.n, plan.k)
    F = code.field
    rng = trial_rng(plan.seed, plan.stream_id, index)
    msg = uniform_elements(F, rng, code.k)
    if plan.zero_message:
        msg = [0] * code.k
    c = encode(code, msg)
    e = sample_rank_u(F, code.n, plan.u, rng)
    out = decode(code, vec_add(F, c, e))
    if isinstance(out, Decoded):
        outcome = SUCCESS if out.codeword == c else DECODER_ERROR
    else:
        outcome = FAILURE
    digest = None
    if with_digest and outcome == FAILURE:
        digest = hashlib.blake2b(" ".join(map(str, e)).encode(), digest_size=8).hexdigest()
    return TrialRecord(index, outcome, digest)


def _run_block(args) -> str:
    plan_dict, start, stop = args
    plan = TrialPlan(**plan_dict)
    return "".join(run_trial(plan, i).outcome for i in range(start, stop))


def run_plan(plan: TrialPlan, workers: int = 1, block: int = BLOCK) -> TrialTally:
    """Run trials in index order until the stopping rule fires.

    Blocks of trial indices may be computed in parallel, but outcomes are
    consumed strictly in index order, so the tally is the same for every
    worker count.
    """
    plan.validate()
    tally = TrialTally(plan)
    pd = plan.to_dict()
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        start = 0
        while tally.trials < plan.max_trials and tally.censored:
            batch = []
            for _ in range(max(workers, 1)):
                stop = min(start + block, plan.max_trials)
                if start >= stop:
                    break
                batch.append((pd, start, stop))
                start = stop
            results = pool.map(_run_block, batch) if pool else map(_run_block, batch)
            for outcomes in results:
                for o in outcomes:
                    if o == SUCCESS:
                        raise InvariantViolation(
                            f"transmitted codeword recovered with u={plan.u} > t={plan.t}"
                        )
                    tally.add(o)
                    if not tally.censored:
                        break
                if not tally.censored:
                    break
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)
    return tally


def tally_row(tally: TrialTally, status: str = "ok") -> dict:
    p = tally.plan
    lo, hi = tally.wilson()
    eq8 = pe_bound_global(p.q, p.t).value
    return {
        "q": p.q, "m": p.m, "n": p.n, "k": p.k, "t": p.t, "u": p.u,
        "trials": tally.trials, "failures": tally.failures,
        "decoder_errors": tally.decoder_errors,
        "PE_hat": _fmt(tally.pe_hat), "PE_eq8": _fmt(eq8),
        "seed": p.seed, "stream_id": p.stream_id,
        "PE_lo95": _fmt(lo), "PE_hi95": _fmt(hi),
        "censored": int(tally.censored), "status": status,
    }


def _fmt(x: float) -> str:
    if math.isnan(x):
        return "nan"
    return repr(float(x))


def sweep(plans, workers: int = 1) -> list[dict]:
    """One CSV row per plan; a plan that raises yields an error row."""
    rows = []
    for plan in plans:
        try:
            rows.append(tally_row(run_plan(plan, workers)))
        except Exception as exc:  # reported in the row, the sweep goes on
            p = plan
            row = {c: "" for c in CSV_COLUMNS}
            row.update(q=p.q, m=p.m, n=p.n, k=p.k, t=p.t, u=p.u, seed=p.seed,
                       stream_id=p.stream_id, status=f"error: {exc}")
            rows.append(row)
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def manifest(plans, seed: int) -> dict:
    codes = {}
    for p in plans:
        key = f"{p.q},{p.m},{p.n},{p.k}"
        if key not in codes:
            codes[key] = _code(p.q, p.m, p.n, p.k).to_dict()
    return {
        "rng": "numpy Philox4x64; key=(seed, stream_id); counter=(0, trial_index, 0, 0)",
        "draw_order": "k message symbols, then rank-u error (A columns, B rows by rejection)",
        "seed": seed,
        "plans": [p.to_dict() for p in plans],
        "codes": codes,
    }


def fig1_plans(seed: int = 0, t_values=(1, 2, 3), max_trials: int = 10**7, min_errors: int = 15):
    """q = 2, m = n = 16, u = 16, d = 2t + 1."""
    return [
        TrialPlan.from_t(2, 16, 16, t, 16, seed=seed, stream_id=i, max_trials=max_trials,
                         min_decoder_errors=min_errors)
        for i, t in enumerate(t_values)
    ]


def fig2_plans(seed: int = 0, t_values=(2, 3), max_trials: int = 10**7, min_errors: int = 15, u_min=None):
    """q = 2, m = n = 16, u from t + 1 (or ``u_min``) to 16."""
    plans = []
    for t in t_values:
        lo = t + 1 if u_min is None else max(u_min, t + 1)
        for u in range(lo, 17):
            plans.append(
                TrialPlan.from_t(2, 16, 16, t, u, seed=seed, stream_id=len(plans),
                                 max_trials=max_trials, min_decoder_errors=min_errors)
            )
    return plans


def load_plans(path) -> list[TrialPlan]:
    """Plan file: a JSON list of objects with TrialPlan fields (or t instead of k)."""
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data["plans"]
    plans = []
    for i, d in enumerate(data):
        d = dict(d)
        if "k" not in d:
            d["k"] = d["n"] - 2 * d.pop("t")
        d.setdefault("stream_id", i)
        plans.append(TrialPlan(**d))
    return plans
