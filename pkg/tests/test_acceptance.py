"""Exit criteria. Each test records one PASS/FAIL line, printed in the
terminal summary, and asserts exact equality plus its time budget."""
import random
import time
from collections import Counter

import pytest

from conftest import ACCEPTANCE_LINES
from partident import identities as ids
from partident.checks import oracle_check, series_check
from partident.counting import count
from partident.partset import explicit, parse_partset
from partident.solutions import enumerate_solutions, gamma_support
from partident.statistic import SIGNED, UNRESTRICTED, bounded

BUILTINS = ["naturals", "primes", "squares", "odds"]


class Gate:
    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t0
        ok = exc_type is None and dt < self.budget
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"{status} criterion {self.number}: {self.title} ({dt:.2f}s, budget {self.budget}s)")
        if exc_type is None:
            assert dt < self.budget, f"criterion {self.number} took {dt:.2f}s > {self.budget}s"
        return False


def surviving(matrix, table):
    return Counter((k, v) for k, v in ids.expand_terms(matrix, table) if v)


def test_criterion_1_intro_five():
    with Gate(1, "n=5 decompositions for naturals, primes, odds", 1.0):
        m = enumerate_solutions(5, 2)
        cases = {
            # set: (p(5), {p1(1), p1(2), p1(3), p1(5)}, terms d(5), d(1)d(1), d(2)d(1), d(3)d(1))
            "naturals": (7, {1: 1, 2: 1, 3: 2, 5: 3}, [3, 1, 1, 2]),
            "primes": (2, {1: 0, 2: 1, 3: 1, 5: 2}, [2, 0, 0, 0]),
            "odds": (3, {1: 1, 2: 0, 3: 1, 5: 1}, [1, 1, 0, 1]),
        }
        order = [(5,), (1, 1), (2, 1), (3, 1)]
        for name, (total, p1, terms) in cases.items():
            ps = parse_partset(name)
            table = count(bounded(1), ps, 5)
            assert count(UNRESTRICTED, ps, 5)[5] == total
            assert {k: table[k] for k in p1} == p1
            got = dict(ids.expand_terms(m, table))
            assert [got[k] for k in order] == terms
            assert sum(terms) == total == ids.rhs_forward(5, 1, table)


APPENDIX_I_PRODUCTS = Counter(
    [(1, 1), (2, 1), (3, 1), (5,), (2, 2, 1), (4, 2), (2, 1), (2, 2), (4, 1, 1), (4, 3), (6, 2), (6, 1), (8, 1), (10,)]
)


def test_criterion_2_appendix_one():
    with Gate(2, "p^A(10) = 5, 4, 10 with surviving terms", 1.0):
        m = enumerate_solutions(10, 2)
        assert Counter(k for k, _ in ids.expand_terms(m, count(bounded(1), parse_partset("naturals"), 10))) == APPENDIX_I_PRODUCTS
        cases = {
            "primes": (5, {1: 0, 2: 1, 3: 1, 4: 0, 5: 2, 6: 0, 8: 1, 10: 2},
                       {((5,), 2), ((2, 2), 1), ((10,), 2)}),
            "squares": (4, {1: 1, 2: 0, 3: 0, 4: 1, 5: 1, 6: 0, 8: 0, 10: 1},
                        {((1, 1), 1), ((5,), 1), ((4, 1, 1), 1), ((10,), 1)}),
            "odds": (10, {1: 1, 2: 0, 3: 1, 4: 1, 5: 1, 6: 1, 8: 2, 10: 2},
                     {((1, 1), 1), ((3, 1), 1), ((5,), 1), ((4, 1, 1), 1), ((4, 3), 1), ((6, 1), 1), ((8, 1), 2), ((10,), 2)}),
        }
        for name, (total, p1, terms) in cases.items():
            ps = parse_partset(name)
            table = count(bounded(1), ps, 10)
            assert count(UNRESTRICTED, ps, 10)[10] == total
            assert {k: table[k] for k in p1} == p1
            assert surviving(m, table) == Counter(terms)
            assert ids.rhs_forward(10, 1, table) == total


APPENDIX_II_SUPPORT = {
    2: {(1,)},
    4: {(2,), (0, 1)},
    6: {(3,), (1, 1)},
    8: {(4,), (2, 1), (0, 0, 1), (0, 2)},
    10: {(5,), (1, 2), (1, 0, 1), (3, 1)},
}


def test_criterion_3_appendix_two():
    with Gate(3, "inverse identity p_1^A(10) = 2 (primes), 1 (squares)", 1.0):
        for n, rows in APPENDIX_II_SUPPORT.items():
            assert set(gamma_support(n, 1).rows) == rows
        cases = {
            # set: (p_1(10), p(2,4,6,8,10), pbar(1..5), Gamma(0,2,..,10), terms p(10-i) Gamma(i))
            "primes": (2, [1, 1, 2, 3, 5], [0, -1, -1, 1, 0], [1, 0, -1, -1, 0, 0], [5, 0, -2, -1, 0, 0]),
            "squares": (1, [1, 2, 2, 3, 4], [-1, 1, -1, 0, 0], [1, -1, 0, 0, -1, 1], [4, -3, 0, 0, -1, 1]),
        }
        for name, (lhs, p_even, pbar, gamma_even, terms) in cases.items():
            ps = parse_partset(name)
            p = count(UNRESTRICTED, ps, 10)
            s = count(SIGNED, ps, 10)
            assert [p[n] for n in (2, 4, 6, 8, 10)] == p_even
            assert list(s.values[1:6]) == pbar
            g = ids.gamma_table(1, s, 10)
            assert [g[n] for n in range(0, 11, 2)] == gamma_even
            assert all(g[n] == 0 for n in range(1, 11, 2))
            assert [p[10 - i] * g[i] for i in range(0, 11, 2)] == terms
            assert ids.rhs_inverse(10, 1, p, g) == lhs == count(bounded(1), ps, 10)[10]


def test_criterion_4_solution_matrices():
    with Gate(4, "solution matrices for n=10, n=5 and odd Gamma support", 1.0):
        m10 = enumerate_solutions(10, 2)
        assert m10.row_count == 14
        assert {r + (0,) * (4 - len(r)) for r in m10.rows} == {
            (0, 1, 0, 1), (0, 1, 2, 0), (0, 3, 1, 0), (0, 5, 0, 0), (2, 2, 1, 0), (2, 4, 0, 0), (2, 0, 0, 1),
            (2, 0, 2, 0), (4, 1, 1, 0), (4, 3, 0, 0), (6, 2, 0, 0), (6, 0, 1, 0), (8, 1, 0, 0), (10, 0, 0, 0),
        }
        m5 = enumerate_solutions(5, 2)
        assert {r + (0,) * (3 - len(r)) for r in m5.rows} == {(5, 0, 0), (1, 0, 1), (1, 2, 0), (3, 1, 0)}
        assert m5.row_count == 4
        assert all(gamma_support(n, 1).row_count == 0 for n in range(1, 402, 2))


def sweep_jobs():
    for a in (1, 2, 3, 4):
        yield "forward", a
        yield "inverse", a
    yield "signed_binary", 1
    for a in (2, 4):
        yield "signed_general", a


def test_criterion_5_full_sweep():
    with Gate(5, "all identities, builtin sets, alpha 1..4, n <= 200", 60.0):
        for name in BUILTINS:
            ps = parse_partset(name)
            for identity, alpha in sweep_jobs():
                r = ids.verify(identity, ps, alpha, 200, mode="both", enum_cap=60)
                assert r.all_equal, (name, identity, alpha, r.first_failure())
                assert r.paths_agree
                assert all(rec.rhs_enumerative is not None for rec in r.records[:61])


def test_criterion_6_random_sets():
    with Gate(6, "50 random finite sets in 1..50, n <= 100", 60.0):
        rng = random.Random(2012)
        failures = []
        for _ in range(50):
            ps = explicit(sorted(rng.sample(range(1, 51), rng.randint(1, 50))))
            for identity, alpha in sweep_jobs():
                r = ids.verify(identity, ps, alpha, 100)
                if not (r.all_equal and r.paths_agree):
                    failures.append((ps.label, identity, alpha))
        assert failures == []


def test_criterion_7_oracle_suite():
    with Gate(7, "brute force = DP = series, alpha 1..4 and inf, n <= 40", 30.0):
        results = oracle_check(cap=40)
        assert len(results) == 4 * 5
        assert [c for c in results if not c.ok] == []


def test_criterion_8_series_telescoping():
    with Gate(8, "telescoping series identities to order 128", 30.0):
        names = []
        for name in BUILTINS:
            for alpha in (1, 2, 3, 4):
                results = series_check(parse_partset(name), alpha, 128)
                assert [c for c in results if not c.ok] == []
                names += [c.name.split(":")[0] for c in results]
        assert Counter(names) == {"forward": 16, "signed binary": 16, "inverse": 16, "signed general": 8}


# first inequality (n, pbar(n), rhs) per (alpha, set), from an exploration run
ODD_ALPHA_COUNTEREXAMPLES = {
    (1, "naturals"): (2, 0, -2),
    (1, "primes"): (4, 1, -1),
    (1, "squares"): (2, 1, -1),
    (1, "odds"): (2, 1, -1),
    (3, "naturals"): (4, 1, -1),
    (3, "primes"): (8, 1, -1),
    (3, "squares"): (4, 0, -2),
    (3, "odds"): (4, 2, 0),
}


def test_criterion_9_negative_control():
    with Gate(9, "signed_general fails for odd alpha", 10.0):
        seen = {}
        for alpha in (1, 3):
            for name in BUILTINS:
                r = ids.verify("signed_general", parse_partset(name), alpha, 50, allow_odd_alpha=True)
                assert r.exploration
                bad = r.first_failure()
                if bad is not None:
                    seen[(alpha, name)] = (bad.n, bad.lhs, bad.rhs)
        assert seen
        assert seen == ODD_ALPHA_COUNTEREXAMPLES
