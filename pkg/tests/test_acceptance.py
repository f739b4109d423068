"""Acceptance criteria 1-8, each run at its stated corpus size and tolerance.

Every test prints a single ``criterion N: PASS|FAIL ...`` line.  The module
also runs as a script: ``python tests/test_acceptance.py``.
"""

import itertools
import time
from functools import lru_cache, reduce
from math import gcd

import numpy as np
import pytest

from specshrink.algebra import truncated_polynomial_algebra
from specshrink.diophantine import (
    all_solutions,
    decide_all_shrink_preserving,
    decide_preserve,
    decide_shrink,
    eigenvalue_selection_exists,
    frobenius_number,
    representable_table,
)
from specshrink.mapbuilder import build_block_map, prepare_source
from specshrink.sma import (
    all_quasi_orders,
    condensation,
    quasi_order_with_blocks,
    random_quasi_order,
    sma_algebra,
)
from specshrink.verify import check_preserving, check_quotient_lemma, check_shrinking, exponent_profile
from specshrink.wedderburn import wedderburn_profile

TOL = 1e-8
SAMPLES = 500
CORPUS_SEED = 2024


def report(capsys, n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


# corpora, built once per session


@lru_cache(maxsize=None)
def sma_corpus():
    """All quasi-orders on n <= 4 plus 200 random ones on n <= 6."""
    rng = np.random.default_rng(CORPUS_SEED)
    out = [rho for n in range(1, 5) for rho in all_quasi_orders(n)]
    out += [random_quasi_order(int(rng.integers(1, 7)), rng) for _ in range(200)]
    return tuple(out)


@lru_cache(maxsize=None)
def profiled_sma_corpus():
    """``(rho, algebra, profile)`` triples and the time the profiles took."""
    t0 = time.perf_counter()
    out = []
    for rho in sma_corpus():
        A = sma_algebra(rho)
        out.append((rho, A, wedderburn_profile(A)))
    return tuple(out), time.perf_counter() - t0


@lru_cache(maxsize=None)
def pair_corpus():
    """100 random (A, B) profile pairs with k_i <= 4 and m_j <= 12; A realised as an SMA."""
    rng = np.random.default_rng(CORPUS_SEED + 1)
    out = []
    for _ in range(100):
        ks = tuple(int(k) for k in rng.integers(1, 5, size=int(rng.integers(1, 4))))
        ms = tuple(int(m) for m in rng.integers(1, 13, size=int(rng.integers(1, 4))))
        rho = quasi_order_with_blocks(ks, rng)
        A = sma_algebra(rho)
        out.append((ks, ms, rho, A))
    return tuple(out)


@lru_cache(maxsize=None)
def source(t):
    return prepare_source(pair_corpus()[t][3])


def families(ks, ms):
    return itertools.product(*(all_solutions(ks, m).solutions for m in ms))


def covering(fam, p):
    return all(any(x[i] > 0 for x in fam) for i in range(p))


# criteria


def criterion_1():
    corpus, elapsed = profiled_sma_corpus()
    bad = [rho for rho, _, prof in corpus if sorted(prof.ks) != sorted(condensation(rho).block_sizes)]
    ok = not bad and elapsed < 60
    return ok, f"{len(corpus)} quasi-orders, {len(bad)} mismatches, {elapsed:.1f} s"


def criterion_2():
    yes = no = 0
    failures = []
    for t, (ks, ms, rho, A) in enumerate(pair_corpus()):
        d = decide_shrink(ks, ms)
        table = representable_table(ks, max(ms))
        brute_yes = all(table[m] for m in ms)
        if (d.verdict == "yes") != brute_yes:
            failures.append((t, "decision disagrees with DP"))
            continue
        if d.verdict == "yes":
            yes += 1
            spec = build_block_map(source(t), ms, d.witness)
            rep = check_shrinking(A, spec, SAMPLES, TOL, seed=t)
            if rep.violations:
                failures.append((t, f"{len(rep.violations)} violations"))
        else:
            no += 1
    return not failures, f"{yes} yes / {no} no, failures {failures[:3]}"


def criterion_3():
    yes = no = 0
    worst = 0.0
    failures = []
    for t, (ks, ms, rho, A) in enumerate(pair_corpus()):
        if decide_shrink(ks, ms).verdict != "yes":
            continue
        d = decide_preserve(ks, ms)
        exhaustive = any(covering(f, len(ks)) for f in families(ks, ms))
        if (d.verdict == "yes") != exhaustive:
            failures.append((t, "decision disagrees with exhaustive enumeration"))
            continue
        if d.verdict == "yes":
            yes += 1
            spec = build_block_map(source(t), ms, d.witness)
            rep = check_preserving(A, spec, SAMPLES, TOL, seed=t)
            worst = max(worst, rep.max_defect)
            if rep.violations or rep.max_defect > TOL:
                failures.append((t, f"max Hausdorff {rep.max_defect:.2e}"))
        else:
            no += 1
    return not failures, f"{yes} covering / {no} non-coverable, worst Hausdorff {worst:.1e}, failures {failures[:3]}"


def criterion_4():
    cases = 0
    failures = []
    for t, (ks, ms, rho, A) in enumerate(pair_corpus()):
        if decide_shrink(ks, ms).verdict != "yes":
            continue
        exists = any(not covering(f, len(ks)) for f in families(ks, ms))
        d = decide_all_shrink_preserving(ks, ms, a_is_sma=True)
        if exists != (d.verdict == "no"):
            failures.append((t, "non-covering family detection disagrees"))
            continue
        if not exists:
            continue
        cases += 1
        spec = build_block_map(source(t), ms, d.witness)
        rep = check_preserving(A, spec, 100, TOL, seed=t)
        if not rep.violations:
            failures.append((t, "no violating sample within 100"))
    return not failures and cases > 0, f"{cases} non-covering cases, failures {failures[:3]}"


def criterion_5():
    profiles = [tuple(prof.ks) for _, _, prof in profiled_sma_corpus()[0]]
    for ks, ms, _, _ in pair_corpus():
        profiles += [ks, ms]
    bad = [
        ks for ks in profiles
        if not (eigenvalue_selection_exists(ks) == (1 in ks) == (decide_shrink(ks, [1]).verdict == "yes"))
    ]
    return not bad, f"{len(profiles)} profiles, {len(bad)} disagreements"


def _dp_consistent(ks, g):
    table = representable_table(ks, g + min(ks))
    return not table[g] and all(table[m] for m in range(g + 1, g + min(ks) + 1))


def criterion_6():
    bad = []
    pairs = 0
    for a in range(2, 21):
        for b in range(a + 1, 21):
            if gcd(a, b) != 1:
                continue
            pairs += 1
            g = frobenius_number((a, b))
            if g != a * b - a - b or not _dp_consistent((a, b), g):
                bad.append((a, b))
    rng = np.random.default_rng(CORPUS_SEED + 6)
    triples = []
    while len(triples) < 50:
        ks = tuple(sorted(int(k) for k in rng.integers(2, 13, size=3)))
        if reduce(gcd, ks) == 1:
            triples.append(ks)
    for ks in triples:
        if not _dp_consistent(ks, frobenius_number(ks)):
            bad.append(ks)
    return not bad, f"{pairs} pairs, {len(triples)} triples, {len(bad)} failures"


def criterion_7():
    worst = 0.0
    failures = []
    corpus = [(A, prof) for _, A, prof in profiled_sma_corpus()[0]]
    corpus += [(truncated_polynomial_algebra(k), None) for k in range(1, 6)]
    for t, (A, prof) in enumerate(corpus):
        rep = check_quotient_lemma(A, 50, TOL, seed=t, profile=prof)
        worst = max(worst, rep.max_defect)
        if rep.violations or rep.max_defect > TOL:
            failures.append(t)
    return not failures, f"{len(corpus)} algebras x 50 samples, worst defect {worst:.1e}, failures {failures[:5]}"


def criterion_8():
    rng = np.random.default_rng(CORPUS_SEED + 8)
    failures = []
    for t in range(50):
        rho = random_quasi_order(int(rng.integers(1, 6)), rng)
        A = sma_algebra(rho)
        src = prepare_source(A)
        p = len(src.ks)
        fam = []
        for _ in range(int(rng.integers(1, 4))):
            x = tuple(int(v) for v in rng.integers(0, 3, size=p))
            if not any(x):
                x = tuple(1 if i == int(rng.integers(p)) else 0 for i in range(p))
            fam.append(x)
        targets = [sum(k * v for k, v in zip(src.ks, x)) for x in fam]
        spec = build_block_map(src, targets, fam)
        ep = exponent_profile(rho, spec, trials=20, seed=t, A=A)
        if not (ep.trial_invariant and ep.matches_family and ep.class_constant) or ep.violations:
            failures.append((t, ep.violations[:2]))
    return not failures, f"50 triples x 20 trials, failures {failures[:3]}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    assert report(capsys, n, ok, detail), detail


if __name__ == "__main__":
    for n, fn in enumerate(CRITERIA, 1):
        report(None, n, *fn())
