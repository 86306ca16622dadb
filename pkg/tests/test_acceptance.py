"""Acceptance suite: one test per criterion, each recording a pass/fail line."""

import contextlib
import os
import random
import subprocess
import sys
import time

from freelie import gsb, oracle
from freelie.bracketing import kukin_bracket, special_bracket
from freelie.encoding import EncodingConfig, build_tables, check_T_free, verify_lemma_41, verify_lemma_42
from freelie.liealg import expand_tree, ls_coordinates
from freelie.parse import parse_expr
from freelie.words import all_words, als_occurrences, als_words, canonical_bracket, deglex_compare, is_als, lead_key

from conftest import XY, XZY, random_lie


@contextlib.contextmanager
def criterion(record, number, title):
    """Record FAIL if the body raises; the body sets ``state['ok']`` and ``state['detail']``."""
    state = {"ok": False, "detail": ""}
    try:
        yield state
    except Exception as e:
        state["ok"] = False
        state["detail"] = state["detail"] or f"{type(e).__name__}: {e}"
        record(number, title, False, state["detail"])
        raise
    record(number, title, state["ok"], state["detail"])
    assert state["ok"], state["detail"]


def leading(t):
    exp = expand_tree(t)
    w = min(exp, key=lead_key)
    return w, exp[w]


def test_criterion_01_als_census(record_criterion):
    with criterion(record_criterion, 1, "ALS census over 2 letters, n = 1..10") as c:
        counts = [sum(1 for w in all_words(XY, n) if is_als(w)) for n in range(1, 11)]
        expected = [oracle.witt_dimension(2, n) for n in range(1, 11)]
        c["ok"] = counts == expected
        c["detail"] = f"counts {counts}"


def test_criterion_02_canonical_triangularity(record_criterion):
    with criterion(record_criterion, 2, "leading word of [w] is w with coefficient 1") as c:
        bad, total = [], 0
        for A, n in ((XY, 12), (XZY, 8)):
            for w in als_words(A, n):
                total += 1
                if leading(canonical_bracket(w)) != (w, 1):
                    bad.append(A.spell(w))
        c["ok"] = not bad
        c["detail"] = f"{total} words, {len(bad)} failures"


def test_criterion_03_special_bracketing(record_criterion):
    with criterion(record_criterion, 3, "special bracketing keeps the leading word") as c:
        bad, total = 0, 0
        for A in (XY, XZY):
            for w in als_words(A, 10):
                for occ in als_occurrences(w):
                    total += 1
                    t = special_bracket(w, occ)
                    if leading(t) != (w, 1) or t.subtree_at(occ.start, occ.length) != canonical_bracket(
                            w[occ.start:occ.end]):
                        bad += 1
        c["ok"] = bad == 0
        c["detail"] = f"{total} (word, occurrence) pairs, |w| <= 10 over 2 and 3 letters"


def test_criterion_04_kukin_bracketing(record_criterion):
    with criterion(record_criterion, 4, "two-occurrence bracketing keeps both subtrees") as c:
        bad, total = 0, 0
        for A, n in ((XY, 10), (XZY, 9)):
            for w in als_words(A, n):
                occs = als_occurrences(w)
                for u in occs:
                    for v in occs:
                        if u.end > v.start:
                            continue
                        total += 1
                        t = kukin_bracket(w, u, v)
                        ok = (leading(t) == (w, 1)
                              and t.subtree_at(u.start, u.length) == canonical_bracket(w[u.start:u.end])
                              and t.subtree_at(v.start, v.length) == canonical_bracket(w[v.start:v.end]))
                        bad += not ok
        c["ok"] = bad == 0
        c["detail"] = f"{total} triples; 2 letters |w| <= 10, 3 letters |w| <= 9"


def test_criterion_05_composition_properties(record_criterion):
    with criterion(record_criterion, 5, "compositions lie in the ideal and drop below w") as c:
        rng = random.Random(2024)
        sites = members = 0
        problems = []
        for k in range(500):
            hom = k % 2 == 0
            f = random_lie(rng, XZY, 4, hom)
            g = random_lie(rng, XZY, 4, hom)
            if gsb.find_sites(f, f) or gsb.find_sites(g, g):
                problems.append(f"self-site for pair {k}")
            for site in gsb.find_sites(f, g):
                sites += 1
                value = gsb.compose(f, g, site)
                if value and deglex_compare(value.leading_word, site.w) >= 0:
                    problems.append(f"pair {k}: leading word not below w")
                if hom and value:
                    members += 1
                    if not oracle.ideal_span([f, g], len(site.w)).contains(value):
                        problems.append(f"pair {k}: composition outside Id(f, g)")
        c["ok"] = not problems and sites > 0
        c["detail"] = f"500 pairs, {sites} sites, {members} oracle memberships" + (
            f"; first problem: {problems[0]}" if problems else "")


def test_criterion_06_composition_diamond(record_criterion):
    with criterion(record_criterion, 6, "crosscheck {[x,z],[z,y]} at D = 6") as c:
        start = time.perf_counter()
        S = [parse_expr("[x,z]", XZY), parse_expr("[z,y]", XZY)]
        report = oracle.crosscheck(S, 6)
        elapsed = time.perf_counter() - start
        quotient = [r["quotient"] for r in report["rows"]]
        words = [r["reduced_words"] for r in report["rows"]]
        # free Lie algebra on x, y plus one central letter
        expected = [oracle.witt_dimension(2, 1) + 1] + [oracle.witt_dimension(2, n) for n in range(2, 7)]
        c["ok"] = report["ok"] and quotient == expected == words and elapsed < 10
        c["detail"] = f"quotient {quotient}, reduced words {words}, {elapsed:.2f}s"


def test_criterion_07_worked_composition(record_criterion):
    with criterion(record_criterion, 7, "([x,z],[z,y]) at xzy equals [[x,y],z]") as c:
        f, g = parse_expr("[x,z]", XZY), parse_expr("[z,y]", XZY)
        (site,) = gsb.find_sites(f, g)
        value = gsb.compose(f, g, site)
        target = parse_expr("[[x,y],z]", XZY)
        by_hand = {XZY.word(w): s for w, s in (("xyz", 1), ("yxz", -1), ("zxy", -1), ("zyx", 1))}
        c["ok"] = (XZY.spell(site.w) == "xzy" and value == target
                   and value.expansion_terms() == by_hand
                   and ls_coordinates(by_hand) == target.terms)
        c["detail"] = f"w = {XZY.spell(site.w)}, value {value.format()}"


def test_criterion_08_intersection_product(record_criterion):
    with criterion(record_criterion, 8, "Id([x,y]) ∩ Id([x,z]) = [Id([x,y]), Id([x,z])] up to degree 6") as c:
        rep = gsb.intersection_equals_product(parse_expr("[x,y]", XZY), parse_expr("[x,z]", XZY), 6)
        dims = [(r["intersection"], r["product"]) for r in rep.rows]
        c["ok"] = rep.status == "equal" and len(rep.rows) == 6
        c["detail"] = f"{rep.status}; (intersection, product) per degree {dims}"


def test_criterion_09_encoding_tables(record_criterion):
    with criterion(record_criterion, 9, "index tables for phi(i,j) = i + j") as c:
        phi = lambda i, j: i + j  # noqa: E731
        cfg = EncodingConfig(phi, lambda i, j: i + j + 1, N=5)
        t = build_tables(cfg)
        # independent evaluation of the recurrences with minimal choices
        ref = {}
        for i in range(2, 7):
            for j in range(1, i):
                if j >= 2:
                    low = ref[i, j - 1] + 1
                elif i == 2:
                    low = 2
                else:
                    low = ref[i - 1, i - 2] + 1
                ref[i, j] = max(low, phi(i, j))
        keys = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]
        values = [t.n(*k) for k in keys]
        props = all(t.n(i, j) >= i for i in range(1, 6) for j in range(1, 6)) and all(
            t.s(i, j) >= phi(max(i, j), min(i, j)) for i in range(1, 6) for j in range(1, 6) if i != j)
        c["ok"] = values == [ref[k] for k in keys] == [3, 4, 5, 6, 7, 8] and props
        c["detail"] = f"n_2(1)..n_4(3) = {values}"


def test_criterion_10_lemma_42(record_criterion):
    with criterion(record_criterion, 10, "extended relations form a GSB at N = 4") as c:
        start = time.perf_counter()
        cfg = EncodingConfig.named("add", "add1", N=4)
        rep = verify_lemma_42(cfg, 14)
        elapsed = time.perf_counter() - start
        branches = {x.i <= x.j for x in rep.inclusions if x.passed and x.decomposition_ok}
        c["ok"] = rep.passed and branches == {True, False} and elapsed < 60
        c["detail"] = (f"{len(rep.inclusions)} inclusion checks, {rep.gsb_report.checked} compositions, "
                       f"{len(rep.gsb_report.failures)} failures, {elapsed:.2f}s")


def test_criterion_11_lemma_41(record_criterion):
    with criterion(record_criterion, 11, "sum relations reduce to zero for all i < j <= 4") as c:
        cfg = EncodingConfig.named("add", "add1", N=4)
        reports = [verify_lemma_41(cfg, i, j) for i in range(1, 5) for j in range(i + 1, 5)]
        c["ok"] = all(r.passed and r.exponent_ok for r in reports) and len(reports) == 6
        c["detail"] = ", ".join(f"({r.i},{r.j}):{r.exponents[0]}" for r in reports)


def test_criterion_12_free_generators(record_criterion):
    with criterion(record_criterion, 12, "<a b^i c> freely generate up to degree 10") as c:
        rep = check_T_free(10)
        c["ok"] = rep.passed
        c["detail"] = "per degree (elements, rank): " + ", ".join(
            f"{n}:{a}/{b}" for n, (a, b) in rep.counts.items())


def test_criterion_13_determinism(record_criterion, tmp_path):
    with criterion(record_criterion, 13, "gsb complete output identical across runs and workers") as c:
        pres = tmp_path / "pres.txt"
        pres.write_text("field Q\nalphabet x > z > y\nrel [x,z] + [z,y]\nrel [[x,y],y] - [[z,y],y]\n")
        outputs = set()
        for seed, workers in (("0", "1"), ("1", "1"), ("2", "2"), ("3", "4")):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            proc = subprocess.run(
                [sys.executable, "-m", "freelie", "gsb", "complete", str(pres), "--max-deg", "7",
                 "--workers", workers, "--json"],
                capture_output=True, text=True, env=env, check=False)
            outputs.add((proc.returncode, proc.stdout))
        c["ok"] = len(outputs) == 1 and next(iter(outputs))[1].strip() != ""
        c["detail"] = f"4 processes, {len(outputs)} distinct output(s)"
