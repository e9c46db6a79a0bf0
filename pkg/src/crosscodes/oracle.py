"""Brute-force ground truth: certification, exhaustive search and audits.

Cross-error correction is decided by sphere disjointness. Two words whose
crosses meet need not be within cross distance 2t: (0, 0) and (1, 1) differ
in both coordinates (cross distance infinity), yet (1, 0) lies in both
radius-1 crosses. Minimum cross distance >= 2t + 1 is therefore necessary but
not sufficient, and the checks below never rely on it alone.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .clique import max_clique
from .constructions import LinearCode, ParityCheckMatrix
from .decoders import Decoder
from .errors import BudgetExceededError, ModulusMismatchError, ParameterError
from .residue import Word, check_exponent
from .ringlinalg import ENUMERATION_BUDGET, all_words, enumerate_kernel
from .spheres import INFINITY, Metric, check_radius

SEARCH_BUDGET = 12  # largest n*m for exact maximum code search
DEFAULT_NODE_LIMIT = 2_000_000


@dataclass(frozen=True)
class CodeSet:
    words: tuple[Word, ...]
    n: int
    m: int
    t: int | None = None

    def __post_init__(self) -> None:
        check_exponent(self.m)
        for w in self.words:
            if len(w) != self.n or w.m != self.m:
                raise ModulusMismatchError(f"word {w} does not belong to Z_2^{self.m}^{self.n}")
        if len(set(self.words)) != len(self.words):
            raise ParameterError("code words must be distinct")

    @classmethod
    def of(cls, words: Iterable[Sequence[int]], m: int, t: int | None = None) -> CodeSet:
        ws = tuple(Word(tuple(w), m) for w in words)
        if not ws:
            raise ParameterError("a code set needs at least one word")
        return cls(ws, len(ws[0]), m, t)

    @classmethod
    def from_array(cls, arr: np.ndarray, m: int, t: int | None = None) -> CodeSet:
        return cls(tuple(Word(tuple(int(x) for x in row), m) for row in arr), arr.shape[1], m, t)

    def as_array(self) -> np.ndarray:
        return np.array([w.coords for w in self.words], dtype=np.int64).reshape(len(self.words), self.n)

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class Certificate:
    """Outcome of a certification; on failure names two clashing codewords."""

    ok: bool
    pair: tuple[Word, Word] | None = None
    collision: Word | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _as_array(code: CodeSet | np.ndarray) -> np.ndarray:
    return code.as_array() if isinstance(code, CodeSet) else np.asarray(code, dtype=np.int64)


def _pairwise(arr: np.ndarray, q: int):
    """Yield (i, absolute differences of row i against rows i+1..)."""
    for i in range(len(arr) - 1):
        d = (arr[i + 1 :] - arr[i]) % q
        yield i, np.minimum(d, q - d)


def min_cross_distance(code: CodeSet) -> int | float:
    if len(code) < 2:
        raise ParameterError("minimum distance needs at least two codewords")
    arr, q = code.as_array(), 1 << code.m
    best: int | float = INFINITY
    for _, d in _pairwise(arr, q):
        single = (d > 0).sum(axis=1) == 1
        if single.any():
            best = min(best, int(d[single].sum(axis=1).min()))
    return best


def min_lee_distance(code: CodeSet) -> int:
    if len(code) < 2:
        raise ParameterError("minimum distance needs at least two codewords")
    arr, q = code.as_array(), 1 << code.m
    return int(min(d.sum(axis=1).min() for _, d in _pairwise(arr, q)))


def crosses_intersect(v: Word, w: Word, t: int) -> bool:
    """Whether the radius-t crosses around v and w share a word."""
    q = v.modulus
    diffs = [min(x, q - x) for x in ((a - b) % q for a, b in zip(v.coords, w.coords)) if x]
    if len(diffs) <= 1:
        return sum(diffs) <= 2 * t
    return len(diffs) == 2 and max(diffs) <= t


def _cross_patterns(n: int, t: int) -> np.ndarray:
    pats = [np.zeros(n, dtype=np.int64)]
    for i in range(n):
        for alpha in range(-t, t + 1):
            if alpha:
                p = np.zeros(n, dtype=np.int64)
                p[i] = alpha
                pats.append(p)
    return np.array(pats)


def certify_cross_code(code: CodeSet, t: int) -> Certificate:
    """Hash every member of every radius-t cross and look for repeats."""
    check_radius(code.m, t)
    arr, q, n = code.as_array(), 1 << code.m, code.n
    members = (arr[:, None, :] + _cross_patterns(n, t)[None, :, :]) % q
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    keys = (members @ weights).ravel()
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    dup = np.nonzero(sorted_keys[1:] == sorted_keys[:-1])[0]
    if len(dup) == 0:
        return Certificate(True)
    a, b = order[dup[0]], order[dup[0] + 1]
    per = members.shape[1]
    v, w = code.words[a // per], code.words[b // per]
    hit = Word(tuple(int(x) for x in members[a // per, a % per]), code.m)
    return Certificate(False, (v, w), hit, f"{hit} lies in the crosses of {v} and {w}")


def certify_cross_code_pairwise(code: CodeSet, t: int) -> Certificate:
    """Same verdict as :func:`certify_cross_code`, pair by pair."""
    check_radius(code.m, t)
    arr, q = code.as_array(), 1 << code.m
    for i, d in _pairwise(arr, q):
        support = (d > 0).sum(axis=1)
        clash = ((support == 1) & (d.sum(axis=1) <= 2 * t)) | ((support == 2) & (d.max(axis=1) <= t))
        if clash.any():
            j = i + 1 + int(np.argmax(clash))
            return Certificate(False, (code.words[i], code.words[j]), None, "crosses intersect")
    return Certificate(True)


def certify_lee_code(code: CodeSet, t: int) -> Certificate:
    """True iff every pair of codewords is at Lee distance >= 2t + 1."""
    check_radius(code.m, t)
    arr, q = code.as_array(), 1 << code.m
    for i, d in _pairwise(arr, q):
        dist = d.sum(axis=1)
        if (dist <= 2 * t).any():
            j = i + 1 + int(np.argmax(dist <= 2 * t))
            return Certificate(False, (code.words[i], code.words[j]), None, f"Lee distance {int(dist[j - i - 1])}")
    return Certificate(True)


def enumerate_code(H: ParityCheckMatrix, t: int | None = None) -> CodeSet:
    if H.n * H.m > ENUMERATION_BUDGET:
        raise BudgetExceededError(f"n*m = {H.n * H.m} exceeds enumeration budget {ENUMERATION_BUDGET}")
    return CodeSet.from_array(enumerate_kernel(H.rows, H.m, H.n), H.m, t)


def certify_linear_code(code: LinearCode) -> Certificate:
    return certify_cross_code(enumerate_code(code.H, code.t), code.t)


# --- exhaustive search ---------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    size: int
    witness: CodeSet
    metric: str
    exact: bool = True


def compatibility_matrix(n: int, m: int, t: int, metric: Metric) -> np.ndarray:
    """Boolean matrix: words i and j may both be codewords."""
    words = all_words(n, m)
    q = 1 << m
    d = (words[:, None, :] - words[None, :, :]) % q
    d = np.minimum(d, q - d)
    if metric == "lee":
        ok = d.sum(axis=2) >= 2 * t + 1
    elif metric == "cross":
        support = (d > 0).sum(axis=2)
        clash = (support == 0) | ((support == 1) & (d.sum(axis=2) <= 2 * t)) | ((support == 2) & (d.max(axis=2) <= t))
        ok = ~clash
    else:
        raise ParameterError(f"unknown metric {metric!r}")
    np.fill_diagonal(ok, False)
    return ok


def max_code_search(n: int, m: int, t: int, metric: Metric, node_limit: int | None = DEFAULT_NODE_LIMIT) -> SearchResult:
    """Exact largest t-correcting code in Z_{2^m}^n for the given metric."""
    if n * m > SEARCH_BUDGET:
        raise BudgetExceededError(f"n*m = {n * m} exceeds exact search budget {SEARCH_BUDGET}")
    check_radius(m, t)
    ok = compatibility_matrix(n, m, t, metric)
    # compatibility is translation invariant, so some maximum code contains 0
    anchored = np.flatnonzero(ok[0])
    sub = ok[np.ix_(anchored, anchored)]
    adjacency = [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in sub]
    clique = [0] + [int(anchored[i]) for i in max_clique(adjacency, node_limit=node_limit)]
    words = all_words(n, m)[clique]
    return SearchResult(len(clique), CodeSet.from_array(words, m, t), metric)


# --- decoder audits --------------------------------------------------------------


@dataclass
class AuditReport:
    codewords: int
    patterns: int
    corrected: int = 0
    failures: int = 0
    miscorrections: int = 0
    examples: list[str] = field(default_factory=list)

    @property
    def trials(self) -> int:
        return self.codewords * self.patterns

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.miscorrections == 0 and self.corrected == self.trials

    def as_dict(self) -> dict:
        return {
            "codewords": self.codewords,
            "patterns": self.patterns,
            "trials": self.trials,
            "corrected": self.corrected,
            "failures": self.failures,
            "miscorrections": self.miscorrections,
            "passed": self.passed,
            "examples": self.examples,
        }


def exhaustive_decoder_audit(code: CodeSet, decoder: Decoder, t: int, max_examples: int = 5) -> AuditReport:
    """Decode every codeword plus every cross error of magnitude <= t."""
    check_radius(code.m, t)
    patterns = [Word(tuple(int(x) for x in p), code.m) for p in _cross_patterns(code.n, t)]
    report = AuditReport(len(code), len(patterns))
    for c in code.words:
        for e in patterns:
            out = decoder(c + e)
            if not out.corrected:
                report.failures += 1
                bad = f"failure on c={c} e={e}"
            elif out.codeword != c or out.error != e:
                report.miscorrections += 1
                bad = f"c={c} e={e} decoded as {out}"
            else:
                report.corrected += 1
                continue
            if len(report.examples) < max_examples:
                report.examples.append(bad)
    return report


@dataclass
class AgreementReport:
    words: int
    both_corrected: int = 0
    both_failed: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.mismatches


def decoder_agreement(n: int, m: int, first: Decoder, second: Decoder) -> AgreementReport:
    """Run two decoders on all of Z_{2^m}^n and record every disagreement."""
    words = all_words(n, m)
    report = AgreementReport(len(words))
    for row in words:
        r = Word(tuple(int(x) for x in row), m)
        a, b = first(r), second(r)
        if a.corrected and b.corrected and a == b:
            report.both_corrected += 1
        elif not a.corrected and not b.corrected:
            report.both_failed += 1
        else:
            report.mismatches.append(f"r={r}: {a} vs {b}")
    return report
