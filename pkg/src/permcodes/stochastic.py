"""Random staircase words, the Ewens cycle-type distribution, and their fit.

Two sequential processes with mutation-rate parameter theta > 0 generate
words letter by letter.  In both, letter 1 at position i means "open a new
cycle" and occurs with probability theta/(theta+i-1):

* the restaurant-style process otherwise seats i immediately to the right
  of an earlier element j, each with probability 1/(theta+i-1); the word
  letter j+1 records the neighbour, and the word feeds the f4 encoding;
* the coupling-style process otherwise picks the letter uniformly from
  {2, ..., i}, each value again carrying probability 1/(theta+i-1); the
  word feeds the f3 encoding.

Either pipeline gives a random permutation whose probability is
theta^(#cycles) / (theta (theta+1) ... (theta+n-1)), so the cycle type
follows the Ewens sampling formula; ``simulate`` draws many samples and
reports a chi-square comparison of the empirical cycle-type histogram
against that formula.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from math import exp, factorial, lgamma, log
from typing import Mapping

import numpy as np
from scipy.stats import chi2 as _chi2

from . import _kernels
from .errors import CapacityError
from .perm_core import CycleType, Word

PARTITION_CAP = 20
BLOCK_TRIALS = 1 << 16
MIN_EXPECTED = 5.0


class Process(Enum):
    CRP = "crp"
    FELLER = "feller"


_PROC_CODE = {Process.CRP: _kernels.PROC_CRP, Process.FELLER: _kernels.PROC_FELLER}


@dataclass(frozen=True)
class EwensParams:
    theta: float
    n: int

    def __post_init__(self):
        if not self.theta > 0:
            raise ValueError(f"theta must be positive, got {self.theta}")
        if self.n < 1:
            raise ValueError("n must be >= 1")


def crp_letter_probs(theta: float, i: int) -> np.ndarray:
    """P(letter at position i = v) for v = 1..i under the restaurant process."""
    denom = theta + i - 1
    probs = np.full(i, 1.0 / denom)
    probs[0] = theta / denom
    return probs


def feller_letter_probs(theta: float, i: int) -> np.ndarray:
    """P(letter at position i = v) for v = 1..i under the coupling process."""
    return crp_letter_probs(theta, i)  # same letter law, different meaning of v > 1


def _draw_crp_letter(theta: float, i: int, u: float) -> int:
    # mirror of the sampling kernel, bucket for bucket
    denom = theta + i - 1
    acc = theta / denom
    if u < acc:
        return 1
    letter = i
    for j in range(1, i - 1):
        acc += 1.0 / denom
        if u < acc:
            letter = j + 1
            break
    return letter


def crp_word(params: EwensParams, rng: np.random.Generator) -> Word:
    """One random word under the restaurant process; feed it to f4."""
    letters = [1]
    for i in range(2, params.n + 1):
        letters.append(_draw_crp_letter(params.theta, i, rng.random()))
    return Word(tuple(letters))


def feller_word(params: EwensParams, rng: np.random.Generator) -> Word:
    """One random word under the coupling process; feed it to f3."""
    # the letter law coincides with the restaurant one; only the downstream
    # encoding differs
    return crp_word(params, rng)


def ewens_log_pmf(t: CycleType, theta: float) -> float:
    if not theta > 0:
        raise ValueError(f"theta must be positive, got {theta}")
    n = t.n
    val = lgamma(n + 1) - (lgamma(theta + n) - lgamma(theta))
    for j, a in enumerate(t.counts, start=1):
        if a:
            val += a * (log(theta) - log(j)) - lgamma(a + 1)
    return val


def ewens_pmf(t: CycleType, theta: float) -> float:
    """Probability of the cycle type t under mutation rate theta."""
    return exp(ewens_log_pmf(t, theta))


def all_cycle_types(n: int, cap: int = PARTITION_CAP) -> list[CycleType]:
    """Every cycle type of S_n (one per integer partition), deterministic order."""
    if n > cap:
        raise CapacityError(f"partition enumeration capped at n={cap}, got {n}")

    types: list[CycleType] = []

    def rec(remaining: int, largest: int, acc: list[int]):
        if remaining == 0:
            counts = [0] * n
            for part in acc:
                counts[part - 1] += 1
            types.append(CycleType(tuple(counts)))
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return types


@dataclass(frozen=True)
class SampleReport:
    process: str
    theta: float
    n: int
    trials: int
    seed: int
    stream: str
    histogram: Mapping[CycleType, int]
    expected: Mapping[CycleType, float]
    chi_square: float
    dof: int
    p_value: float

    def __post_init__(self):
        if sum(self.histogram.values()) != self.trials:
            raise ValueError("histogram counts must sum to the number of trials")
        if abs(sum(self.expected.values()) - 1.0) > 1e-9:
            raise ValueError("expected probabilities must sum to 1 within 1e-9")

    def to_json_dict(self) -> dict:
        return {
            "kind": "sample",
            "process": self.process,
            "theta": self.theta,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "stream": self.stream,
            "histogram": {t.to_text(): c for t, c in self.histogram.items()},
            "expected": {t.to_text(): p for t, p in self.expected.items()},
            "chi_square": self.chi_square,
            "dof": self.dof,
            "p_value": self.p_value,
        }

    def to_json_bytes(self) -> bytes:
        return json.dumps(self.to_json_dict(), sort_keys=True).encode()


def _chi_square_fit(observed: dict[CycleType, int], expected: dict[CycleType, float], trials: int):
    """Pearson statistic with pooling of categories whose expected count is
    below MIN_EXPECTED; the pool merges into the smallest kept category if it
    stays too thin itself."""
    kept: list[tuple[float, int]] = []
    pool_e = 0.0
    pool_o = 0
    for t, p in expected.items():
        e = p * trials
        o = observed.get(t, 0)
        if e >= MIN_EXPECTED:
            kept.append((e, o))
        else:
            pool_e += e
            pool_o += o
    if pool_e > 0.0:
        if pool_e >= MIN_EXPECTED or not kept:
            kept.append((pool_e, pool_o))
        else:
            e0, o0 = min(kept, key=lambda c: c[0])
            kept.remove((e0, o0))
            kept.append((e0 + pool_e, o0 + pool_o))
    stat = sum((o - e) ** 2 / e for e, o in kept)
    dof = max(len(kept) - 1, 0)
    p_value = float(_chi2.sf(stat, dof)) if dof else 1.0
    return stat, dof, p_value


def _types_from_rows(rows: np.ndarray) -> dict[CycleType, int]:
    uniq, counts = np.unique(rows, axis=0, return_counts=True)
    return {CycleType(tuple(int(x) for x in row)): int(c) for row, c in zip(uniq, counts)}


def _sample_block(proc: Process, params: EwensParams, trials: int, rng: np.random.Generator) -> dict[CycleType, int]:
    uniforms = rng.random((trials, params.n - 1))
    rows = np.zeros((trials, params.n), dtype=np.int64)
    _kernels.sample_cycle_types(_PROC_CODE[proc], float(params.theta), params.n, uniforms, rows)
    return _types_from_rows(rows)


def simulate(
    process: Process,
    params: EwensParams,
    trials: int,
    seed: int,
    stream: str = "single",
    jobs: int = 1,
) -> SampleReport:
    """Draw cycle types through the chosen pipeline and test the Ewens fit.

    stream="single" consumes one sequential generator, so the report bytes
    are a function of the seed alone.  stream="blocked" derives one child
    generator per fixed-size block of trials from the seed, which makes the
    result identical for every worker count; jobs only bounds concurrency.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if stream not in ("single", "blocked"):
        raise ValueError(f"stream must be 'single' or 'blocked', got {stream!r}")
    types = all_cycle_types(params.n)
    expected = {t: ewens_pmf(t, params.theta) for t in types}

    histogram: dict[CycleType, int] = {}
    if stream == "single":
        histogram = _sample_block(process, params, trials, np.random.default_rng(seed))
    else:
        sizes = [BLOCK_TRIALS] * (trials // BLOCK_TRIALS)
        if trials % BLOCK_TRIALS:
            sizes.append(trials % BLOCK_TRIALS)
        children = np.random.SeedSequence(seed).spawn(len(sizes))
        def one(block):
            size, child = block
            return _sample_block(process, params, size, np.random.default_rng(child))
        if jobs <= 1:
            results = [one(b) for b in zip(sizes, children)]
        else:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(one, zip(sizes, children)))
        for part in results:
            for t, c in part.items():
                histogram[t] = histogram.get(t, 0) + c

    stat, dof, p_value = _chi_square_fit(histogram, expected, trials)
    return SampleReport(
        process=process.value,
        theta=float(params.theta),
        n=params.n,
        trials=trials,
        seed=seed,
        stream=stream,
        histogram=dict(sorted(histogram.items(), key=lambda kv: kv[0].counts)),
        expected=dict(sorted(expected.items(), key=lambda kv: kv[0].counts)),
        chi_square=float(stat),
        dof=dof,
        p_value=p_value,
    )
