"""Acceptance criteria 1-10 at full scale; each test records one PASS/FAIL line."""

import itertools
import random
import time

import pytest

from commgraph.census import census_build
from commgraph.certify import (
    RunConfig,
    check_cor2,
    check_lemma1,
    random_with_eigenvalue,
    suite_lemma3,
    suite_lemma7,
    suite_thm5,
    suite_thm6,
    thm8_census_report,
    thm9_census_report,
)
from commgraph.constructions import Lemma4Context, lemma4_exhaustive_gf2, lemma4_witness
from commgraph.distance import distance_le2, distance_le3_finite
from commgraph.fields import GF, QQ
from commgraph.m9 import m9_certificate
from commgraph.matrix import Matrix, min_poly
from commgraph.structure import split_spectrum

FIELDS = [QQ, GF(2), GF(5), GF(2, 3)]
CFG = RunConfig(seed=0, timing=False)


@pytest.fixture(scope="module")
def m3f2():
    return census_build(3, GF(2))


def test_c01_lemma1_rank_one(acceptance):
    rng = random.Random("c01")
    inputs = {F.text(): [random_with_eigenvalue(F, 3, rng) for _ in range(10**4)] for F in FIELDS}
    t0 = time.perf_counter()
    fails = sum(not check_lemma1(A) for mats in inputs.values() for A in mats)
    secs = time.perf_counter() - t0
    acceptance(1, fails == 0 and secs < 30, f"lemma 1: 4 x 10^4 matrices, {fails} failures, {secs:.1f} s (< 30 s)")


def test_c02_cor2_paths(acceptance):
    rng = random.Random("c02")
    fails = 0
    for F in FIELDS:
        for _ in range(10**3):
            fails += not check_cor2(random_with_eigenvalue(F, 3, rng), random_with_eigenvalue(F, 3, rng))
    acceptance(2, fails == 0, f"corollary 2: 4 x 10^3 pairs, {fails} failures")


def test_c03_lemma3(acceptance):
    cert = suite_lemma3(CFG, trials=10**3, kmax=4)
    c = cert.counters
    acceptance(3, cert.verdict == "verified" and c["checks"] == 2 * 16 * 10**3,
               f"lemma 3: {c['checks']} checks over Q and GF(5), {c['failures']} failures")


def test_c04_lemma4_exhaustive(acceptance):
    t0 = time.perf_counter()
    F = GF(2)
    direct = fails = 0
    rank_one = [Matrix.outer(F, x, y) for x in itertools.product((0, 1), repeat=3) if any(x)
                for y in itertools.product((0, 1), repeat=3) if any(y)]
    for code in itertools.product((0, 1), repeat=9):
        A = Matrix.from_vec(F, 3, code)
        if A.is_scalar() or min_poly(A).degree == 3 or split_spectrum(A) is None:
            continue
        ctx = Lemma4Context(A)
        for R in rank_one:
            direct += 1
            try:
                lemma4_witness(A, R, ctx)
            except Exception:
                fails += 1
    packed = [lemma4_exhaustive_gf2(n) for n in (3, 4)]
    secs = time.perf_counter() - t0
    fails += sum(s["failures"] for s in packed)
    pairs = "+".join(str(s["pairs"]) for s in packed)
    acceptance(4, fails == 0 and direct == packed[0]["pairs"] and secs < 300,
               f"lemma 4: {direct} witness calls on M_3(F_2), {pairs} packed pairs on M_3/M_4(F_2), "
               f"{fails} failures, {secs:.0f} s (< 300 s)")


def test_c05_theorem5(acceptance):
    t0 = time.perf_counter()
    cert = suite_thm5(CFG, grid=((3, 5), (3, 7), (4, 5), (4, 7)))
    secs = time.perf_counter() - t0
    c = cert.counters
    skipped = ",".join(f"n={s['n']} q={s['q']}" for s in c["skipped"]) or "none"
    acceptance(5, cert.verdict == "verified" and c["instances"] > 0 and secs < 600,
               f"theorem 5: {c['instances']} validated instances with d = 4, {c['failures']} failures, "
               f"skipped (no validated conjugator): {skipped}, {secs:.1f} s (< 600 s)")


def test_c06_theorem6(acceptance):
    cert = suite_thm6(CFG, qs=(5, 7))
    c = cert.counters
    pairs = sum(c[k]["pairs"] for k in ("gf5", "gf7"))
    acceptance(6, cert.verdict == "verified",
               f"theorem 6: {pairs} family pairs d >= 4, {c['gf5']['z_checks'] + c['gf7']['z_checks']} "
               f"d(X, Z) = 2 witnesses, {c['failures']} failures")


def test_c07_lemma7(acceptance):
    t0 = time.perf_counter()
    cert = suite_lemma7(CFG, sizes=(4, 5, 6))
    secs = time.perf_counter() - t0
    c = cert.counters
    acceptance(7, cert.verdict == "verified" and secs < 60,
               f"lemma 7: {c['cases']} cases over Q, {c['failures']} failures, {secs:.1f} s (< 60 s)")


def test_c08_census_theorems(acceptance, m3f2):
    r8 = thm8_census_report(m3f2)
    r9 = thm9_census_report(m3f2)
    ok = not r8["split_disagreements"] and not r9["nonminimal_with_eccentricity_ge4"]
    acceptance(8, ok,
               f"theorems 8/9 census: {r8['split_classes_agree']} split classes agree, "
               f"{len(r8['split_disagreements'])} disagree, {len(r8['non_split_classes'])} non-split itemized; "
               f"{len(r9['nonminimal_with_eccentricity_ge4'])} non-minimal classes with eccentricity >= 4")


def test_c09_m9(acceptance):
    t0 = time.perf_counter()
    c = m9_certificate()
    secs = time.perf_counter() - t0
    st = c.stages
    ok = (
        all(st[k]["passed"] for k in "abcdefg")
        and st["b"]["algebra_elements"] == 512
        and (st["d"]["subfield_nonscalar"], st["d"]["subfield_centralizers"]) == (6, 1)
        and st["d"]["same_centralizer_as_A_hat"] == 504
        and c.N @ c.N @ c.N == c.N * 0
        and c.intersection_dim == 1
        and secs < 60
    )
    acceptance(9, ok, f"M_9(Z_2): stages {''.join(sorted(st))} pass, 512 algebra elements, 6 subfield, "
                      f"504 same centralizer, intersection dim {c.intersection_dim}, {secs:.1f} s (< 60 s)")


def test_c10_oracle_coherence(acceptance, m3f2):
    G = m3f2
    pairs = bad = 0
    for a, b in itertools.combinations(range(G.num_classes), 2):
        A, B = G.reps[a], G.reps[b]
        d = G.class_distance(a, b)
        pairs += 1
        r = distance_le2(A, B)
        if r.verdict != "ge3":
            ok = d == r.distance
        else:
            r = distance_le3_finite(A, B)
            ok = d == 3 if r.verdict == "d3" else (r.verdict == "ge4" and (d is None or d >= 4))
        bad += not ok
    acceptance(10, bad == 0 and G.num_vertices == 510,
               f"oracle coherence on M_3(F_2): {G.num_vertices} vertices, {pairs} class pairs, {bad} disagreements")
