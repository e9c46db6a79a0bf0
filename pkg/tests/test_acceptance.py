"""One test per acceptance criterion; each logs a PASS/FAIL line for the summary."""

import json
import random
import time

from click.testing import CliRunner

from crosscodes.cli import cli
from crosscodes.constructions import construct, gap_to_bound, valid_parameters
from crosscodes.decoders import decode_cor5, decoder_for, generic_decoder
from crosscodes.oracle import (
    CodeSet,
    certify_cross_code,
    certify_lee_code,
    decoder_agreement,
    enumerate_code,
    exhaustive_decoder_audit,
    max_code_search,
)
from crosscodes.residue import Word, hamming_distance
from crosscodes.ringlinalg import all_words
from crosscodes.spheres import INFINITY, cross_distance, cross_sphere, perfect_code_impossible, sphere_volume

from conftest import EXAMPLE2_CROSS, EXAMPLE2_LEE

# (n, t) -> rows of (q, C^L, C^+, C^L_lin, C^+_lin) as published
PUBLISHED_TABLES = {
    (2, 2): [(8, 4, 7, 4, 4), (16, 19, 28, 16, 16), (32, 78, 113, 64, 64)],
    (2, 3): [(8, 2, 4, 2, 4), (16, 10, 19, 8, 16), (32, 40, 79, 32, 64)],
    (3, 2): [(8, 20, 39, 16, 32), (16, 163, 316, 128, 256), (32, 1310, 2521, 1024, 2048)],
    (3, 3): [(8, 8, 26, 8, 16), (16, 65, 215, 64, 128), (32, 520, 1724, 512, 1024)],
    (4, 2): [(8, 99, 240, 64, 128), (16, 1598, 3855, 1024, 2048), (32, 25572, 61680, 16384, 32768)],
}

COR5_RANGE = valid_parameters("cor5", range(3, 9), range(1, 16))
THM9_RANGE = [(m, t) for m, t in valid_parameters("thm9", range(4, 9), range(2, 4)) if m >= 2 * t]
COR12_RANGE = valid_parameters("cor12", range(3, 8), range(1, 16))


def record(log, number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    log.append(line)
    assert ok, line


def test_criterion_1_bound_tables(acceptance_log):
    start = time.perf_counter()
    res = CliRunner().invoke(cli, ["bounds", "--paper-tables", "--format", "json"])
    elapsed = time.perf_counter() - start
    wrong, cells = [], 0
    for doc in json.loads(res.output):
        for row, expected in zip(doc["rows"], PUBLISHED_TABLES[(doc["n"], doc["t"])]):
            got = (row["q"], row["lee_bound"], row["cross_bound"], row["lee_linear_bound"], row["cross_linear_bound"])
            for name, g, e in zip(("q", "C^L", "C^+", "C^L_lin", "C^+_lin"), got, expected):
                cells += 1
                if g != e:
                    wrong.append(f"n={doc['n']} t={doc['t']} q={row['q']} {name}: {g} != {e}")
    ok = res.exit_code == 0 and not wrong and elapsed < 1.0
    record(acceptance_log, 1, f"bound tables, {cells - len(wrong)}/{cells} cells exact in {elapsed:.2f}s", ok, "; ".join(wrong))


def test_criterion_2_construction_soundness(acceptance_log):
    start = time.perf_counter()
    bad, cases = [], 0
    for name, grid in (("cor5", COR5_RANGE), ("thm9", THM9_RANGE), ("cor12", COR12_RANGE)):
        for m, t in grid:
            cases += 1
            code = construct(name, m, t)
            if not certify_cross_code(enumerate_code(code.H), t):
                bad.append(f"{name} m={m} t={t}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    record(acceptance_log, 2, f"construction soundness, {cases} codes certified in {elapsed:.1f}s", ok, ", ".join(bad))


def test_criterion_3_cardinalities(acceptance_log):
    bad = []
    for name, grid in (("cor5", COR5_RANGE), ("thm9", THM9_RANGE)):
        for m, t in grid:
            code = construct(name, m, t)
            size = len(enumerate_code(code.H))
            if size != code.spec.closed_form_cardinality or size != code.cardinality:
                bad.append(f"{name} m={m} t={t}: {size}")
    for (m, t), expected in {(4, 3): 64, (5, 3): 512, (4, 7): 16, (5, 7): 128}.items():
        size = len(enumerate_code(construct("cor12", m, t).H))
        if size != expected:
            bad.append(f"cor12 m={m} t={t}: {size} != {expected}")
    record(acceptance_log, 3, "cardinality closed forms and examples", not bad, ", ".join(bad))


def test_criterion_4_gap_factors(acceptance_log):
    bad = []
    for m, t in COR5_RANGE:
        code = construct("cor5", m, t)
        expected = 2 ** (code.spec.k + 1)
        if gap_to_bound(code) != expected:
            bad.append(f"cor5 m={m} t={t}: {gap_to_bound(code)} != {expected}")
    for m, t in THM9_RANGE:
        code = construct("thm9", m, t)
        expected = {2: 2, 3: 8}[t]
        if gap_to_bound(code) != expected:
            bad.append(f"thm9 m={m} t={t}: {gap_to_bound(code)} != {expected}")
    cases = len(COR5_RANGE) + len(THM9_RANGE)
    summary = "; ".join(bad[:4]) + (f"; ... {len(bad)} of {cases} differ" if bad else "")
    record(acceptance_log, 4, "gap factors to the linear bound", not bad, summary)


def test_criterion_5_decoder_round_trips(acceptance_log):
    bad = []
    for name, m, t, codewords, patterns in (("cor5", 4, 3, 8, 13), ("thm9", 4, 2, 16, 9), ("cor12", 4, 3, 64, 19)):
        code = construct(name, m, t)
        start = time.perf_counter()
        report = exhaustive_decoder_audit(enumerate_code(code.H), decoder_for(code), t)
        elapsed = time.perf_counter() - start
        if (report.codewords, report.patterns) != (codewords, patterns) or not report.passed or elapsed >= 1.0:
            bad.append(f"{name}: {report.as_dict()} in {elapsed:.2f}s")
    worked = str(decode_cor5(Word((12, 6), 4), 4, 3))
    if worked != "Corrected(c=(12, 4), e=(0, 2))":
        bad.append(f"worked example gave {worked}")
    record(acceptance_log, 5, "exhaustive decoder audits and the worked example", not bad, "; ".join(bad))


def test_criterion_6_generic_agreement(acceptance_log):
    bad, cases = [], 0
    for name in ("cor5", "thm9", "cor12"):
        for m, t in valid_parameters(name, range(4, 5), range(1, 16)):
            cases += 1
            code = construct(name, m, t)
            report = decoder_agreement(code.n, m, decoder_for(code), generic_decoder(code))
            if not report.agree or report.both_corrected != len(enumerate_code(code.H)) * (2 * code.n * t + 1):
                bad.append(f"{name} t={t}: {report.mismatches[:2]}")
    record(acceptance_log, 6, f"generic and specialised decoders agree on all words ({cases} codes at m=4)", not bad, "; ".join(bad))


def test_criterion_7_example_codes(acceptance_log):
    start = time.perf_counter()
    lee = CodeSet.of(EXAMPLE2_LEE, 3)
    cross = CodeSet.of(EXAMPLE2_CROSS, 3)
    checks = {
        "Lee code certified": bool(certify_lee_code(lee, 2)),
        "cross code certified": bool(certify_cross_code(cross, 2)),
        "max Lee size is 4": max_code_search(2, 3, 2, "lee").size == 4,
        "max cross size >= 5": max_code_search(2, 3, 2, "cross").size >= 5,
    }
    elapsed = time.perf_counter() - start
    failed = [k for k, v in checks.items() if not v]
    if elapsed >= 60:
        failed.append(f"took {elapsed:.1f}s")
    record(acceptance_log, 7, f"example codes and exact searches in {elapsed:.2f}s", not failed, ", ".join(failed))


def test_criterion_8_property_suites(acceptance_log):
    bad = []

    m = 3
    words = [Word(tuple(int(x) for x in w), m) for w in all_words(2, m)]
    for v in words:
        for w in words:
            if (cross_distance(v, w) != INFINITY) != (hamming_distance(v, w) <= 1):
                bad.append(f"distance relation at {v}, {w}")

    for n, m in ((1, 3), (2, 3), (3, 3), (2, 4)):
        centre = Word(tuple(range(1, n + 1)), m)
        for t in range(0, 1 << (m - 1)):
            if len(cross_sphere(centre, t)) != sphere_volume(n, t, "cross"):
                bad.append(f"volume n={n} m={m} t={t}")

    for n in range(1, 5):
        for m in range(2, 11):
            for t in range(1, 16):
                if t < 1 << (m - 1) and not perfect_code_impossible(n, m, t):
                    bad.append(f"divisibility n={n} m={m} t={t}")

    rng = random.Random(2024)
    for _ in range(1000):
        n, m = rng.choice([(2, 3), (2, 4), (3, 3)])
        t = rng.randint(1, (1 << (m - 1)) - 1)
        pool = [tuple(int(x) for x in w) for w in all_words(n, m)]
        rng.shuffle(pool)
        chosen = []
        for w in pool[: rng.randint(2, 40)]:
            if not chosen or certify_lee_code(CodeSet.of(chosen + [w], m), t):
                chosen.append(w)
        if not certify_cross_code(CodeSet.of(chosen, m), t):
            bad.append(f"Lee code not a cross code: {chosen} t={t}")

    record(acceptance_log, 8, "distance relation, sphere volume, non-divisibility, Lee implies cross", not bad, "; ".join(bad[:3]))
