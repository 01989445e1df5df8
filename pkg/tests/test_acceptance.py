"""Acceptance suite: seven criteria, each printing one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` or directly with
``python3 tests/test_acceptance.py``.
"""

import sys
import time
from fractions import Fraction
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from grassmann_semi.exterior import MultiVector, mv_surpasses, negate, sort_word, wedge, wedge_all  # noqa: E402
from grassmann_semi.hasse_schmidt import (  # noqa: E402
    Endomorphism,
    endo_apply,
    hs_coefficient,
    leibniz_mismatch,
    schur_higher_derivation,
)
from grassmann_semi.quasi_inverse import (  # noqa: E402
    check_cayley_hamilton,
    check_prech,
    check_precheh,
    check_quasi_inverse,
    eigen_data,
    quasi_inverse,
)
from grassmann_semi.random_instances import (  # noqa: E402
    random_endomorphism,
    random_multivector,
    random_vector,
    random_word,
    split_support,
    trial_rng,
)
from grassmann_semi.scalars import BOOLEANS, INTEGERS, MAXPLUS, NATURALS, RATIONALS, PairScalar  # noqa: E402

ALL = [INTEGERS, RATIONALS, NATURALS, BOOLEANS, MAXPLUS]

# collected for the pytest terminal summary (see conftest.py)
RESULT_LINES = []


def report(number, ok, detail, elapsed, limit):
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"CRITERION {number}: {status} ({detail}; {elapsed:.2f}s, limit {limit:g}s)"
    RESULT_LINES.append(line)
    if __name__ == "__main__":
        print(line, flush=True)
    assert ok, line
    assert within, line


def criterion_1():
    start = time.perf_counter()
    d = INTEGERS
    f = Endomorphism.from_images(5, d, {j: {j + 1: 1} for j in range(4)})
    result = hs_coefficient(f, 2, MultiVector.basis(5, d, (1, 2)))
    expected = MultiVector(5, d, {(2, 3): PairScalar(1, 1, d), (1, 4): PairScalar(1, 0, d)})
    ok = result == expected and mv_surpasses(MultiVector.basis(5, d, (1, 4)), result)
    report(1, ok, f"D_2(b1^b2) = {result!r}", time.perf_counter() - start, 1)


def criterion_2():
    start = time.perf_counter()
    failures = []
    for d in (INTEGERS, BOOLEANS, MAXPLUS):
        for trial in range(500):
            rng = trial_rng(f"acceptance-2/{d.name}", trial)
            n = (2, 3, 4)[trial % 3]
            f = random_endomorphism(n, d, rng)
            left, right = split_support(n, rng, 1, 1)
            u = random_multivector(n, d, rng, rng.randint(1, len(left)), support=left)
            v = random_multivector(n, d, rng, rng.randint(1, len(right)), support=right)
            miss = leibniz_mismatch(f, u, v, 2 * n)
            if miss is not None:
                failures.append((d.name, trial, miss))
    detail = f"1500 instances, {len(failures)} mismatches" + (f", first {failures[0]}" if failures else "")
    report(2, not failures, detail, time.perf_counter() - start, 60)


def criterion_3():
    start = time.perf_counter()
    failures = []
    for d in ALL:
        for trial in range(200):
            rng = trial_rng(f"acceptance-3/{d.name}", trial)
            n = (3, 4)[trial % 2]
            f = random_endomorphism(n, d, rng)
            x = random_multivector(n, d, rng, rng.randint(2, n))
            if not check_quasi_inverse(f, x, 2 * n):
                failures.append(("quasi-inverse", d.name, trial))
            du = rng.randint(1, n - 2)
            u = random_multivector(n, d, rng, du)
            v = random_multivector(n, d, rng, rng.randint(2, n - du))
            if not check_prech(f, u, v, 2 * n):
                failures.append(("prech", d.name, trial))
    detail = f"{200 * len(ALL)} instances x 2 checks, {len(failures)} false" + (f", first {failures[0]}" if failures else "")
    report(3, not failures, detail, time.perf_counter() - start, 300)


def criterion_4():
    start = time.perf_counter()
    failures = []
    splits = 0
    for d in ALL:
        for trial in range(100):
            rng = trial_rng(f"acceptance-4/{d.name}", trial)
            n = (2, 3, 4)[trial % 3]
            f = random_endomorphism(n, d, rng)
            if not check_precheh(f):
                failures.append(("precheh", d.name, trial))
            for k in range(1, n + 1):
                for u in combinations(range(n), k):
                    v = tuple(i for i in range(n) if i not in u)
                    splits += 1
                    if not check_cayley_hamilton(f, u, v)[0]:
                        failures.append(("cayley-hamilton", d.name, trial, u))
    detail = f"{100 * len(ALL)} endomorphisms, {splits} splits, {len(failures)} false"
    report(4, not failures, detail, time.perf_counter() - start, 300)


def criterion_5():
    start = time.perf_counter()
    failures = []
    for trial in range(100):
        rng = trial_rng("acceptance-5", trial)
        n = (2, 3, 4)[trial % 3]
        f = random_endomorphism(n, INTEGERS, rng)
        for k in range(1, n + 1):
            for u in combinations(range(n), k):
                v = tuple(i for i in range(n) if i not in u)
                _, residual = check_cayley_hamilton(f, u, v)
                if any(c.pos != c.neg for c in residual.terms.values()):
                    failures.append(("residual", trial, u))
        cp = oracles.char_poly([list(r) for r in f.matrix])
        # e_k - e_k' is the coefficient of lambda^(n-k) in det(lambda I - f)
        if eigen_data(f).net_e() != [cp[n - k] for k in range(n + 1)]:
            failures.append(("char-poly", trial))
    detail = f"100 integer matrices, {len(failures)} discrepancies"
    report(5, not failures, detail, time.perf_counter() - start, 300)


def criterion_6():
    start = time.perf_counter()
    counts = dict.fromkeys(["associativity", "confluence", "involution", "z-degree", "square"], 0)
    failures = []
    for trial in range(500):
        rng = trial_rng("acceptance-6", trial)
        d = ALL[trial % len(ALL)]
        n = rng.randint(2, 5)
        x, y, z = (random_multivector(n, d, rng, rng.randint(1, 2)) for _ in range(3))
        if wedge(wedge(x, y), z) != wedge(x, wedge(y, z)):
            failures.append(("associativity", trial))
        counts["associativity"] += 1

        seq = [rng.randrange(n) for _ in range(rng.randint(0, n + 1))]
        if oracles.bubble_normal_form(seq, swaps=rng.choice) != sort_word(seq):
            failures.append(("confluence", trial))
        counts["confluence"] += 1

        if n >= 2:
            w = random_multivector(n, d, rng, rng.randint(2, n))
            if negate(negate(w)) != w:
                failures.append(("involution", trial))
            counts["involution"] += 1

        f = random_endomorphism(n, d, rng)
        word = random_word(n, rng.randint(2, n), rng)
        q = quasi_inverse(f, MultiVector.basis(n, d, word))
        images = wedge_all([endo_apply(f, MultiVector.basis(n, d, (j,))) for j in word])
        top = negate(images) if len(word) % 2 else images
        if q.degree() > len(word) or q[len(word)] != top or (q.degree() == len(word)) == images.is_zero():
            failures.append(("z-degree", trial))
        counts["z-degree"] += 1

        v1, v2 = random_vector(n, d, rng), random_vector(n, d, rng)
        s = v1 + v2
        if not mv_surpasses(wedge(v1, v1) + wedge(v2, v2), wedge(s, s)):
            failures.append(("square", trial))
        counts["square"] += 1
    detail = ", ".join(f"{k} {v}" for k, v in counts.items()) + f"; {len(failures)} failures"
    ok = not failures and min(counts.values()) >= 500
    report(6, ok, detail, time.perf_counter() - start, 60)


def criterion_7():
    start = time.perf_counter()
    expected = [Fraction(1), Fraction(3, 2), Fraction(13, 6), Fraction(73, 24)]
    oracle = oracles.exp_series_coefficients([0, 1, 1, 1, 1], 4)[1:]
    delta = Endomorphism.identity(2, RATIONALS)
    got = []
    ok = oracle == expected
    for r in range(1, 5):
        scalars = []
        for j in range(2):
            x = MultiVector.basis(2, RATIONALS, (j,))
            y = schur_higher_derivation(delta, r, x)
            scalars.append(y.coefficient((j,)).pos if len(y) == 1 else None)
        ok = ok and scalars[0] == scalars[1] == expected[r - 1]
        got.append(scalars[0])
    detail = "D_1..D_4 scalars " + ", ".join(str(g) for g in got)
    report(7, ok, detail, time.perf_counter() - start, 60)


def test_criterion_1_worked_example():
    criterion_1()


def test_criterion_2_leibniz_and_multiplicativity():
    criterion_2()


def test_criterion_3_quasi_inverse_theorems():
    criterion_3()


def test_criterion_4_cayley_hamilton():
    criterion_4()


def test_criterion_5_classical_specialization():
    criterion_5()


def test_criterion_6_structural_invariants():
    criterion_6()


def test_criterion_7_schur_display():
    criterion_7()


if __name__ == "__main__":
    failed = 0
    for check in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7):
        try:
            check()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
