"""Machine verification suites: factorization propositions, distribution
identities, and BFS cross-checks.

Each check produces a row ``{suite, name, ok, seconds, detail}``.  Rows are
generated in a fixed order and all values except timings are deterministic,
so serialized reports are stable.
"""
from __future__ import annotations

import math
import time
from typing import Callable, Iterable

from . import algebra, oracle, qpoly
from .groups import enumerate_group, inverse
from .stats import cycle_count, inversions, reflection_length

SUITES = ("props", "identities", "oracle")

#: per-suite default rank ceilings, keyed by group tag
DEFAULT_MAX_N = {
    "props": {"A": 6, "B": 4, "D": 5},
    "identities": {"A": 7, "B": 5, "D": 6},
    "oracle": {"A": 6, "B": 4, "D": 4},
}


def _run(
    rows: list[dict], suite: str, name: str, check: Callable[[], tuple[bool, str]]
) -> None:
    start = time.perf_counter()
    try:
        ok, detail = check()
    except Exception as exc:  # a crashed check is a failed check, still reported
        ok, detail = False, f"error: {exc}"
    rows.append(
        {
            "suite": suite,
            "name": name,
            "ok": ok,
            "seconds": round(time.perf_counter() - start, 3),
            "detail": detail,
        }
    )


def _ranks(max_n: dict[str, int], tag: str, lo: int) -> Iterable[int]:
    return range(lo, max_n.get(tag, 0) + 1)


# ---------------------------------------------------------------------------
# props: diagonal-sum factorizations and their weighted images
# ---------------------------------------------------------------------------

def props_suite(max_n: dict[str, int]) -> list[dict]:
    rows: list[dict] = []
    for which in algebra.FACTORIZATIONS:
        tag = which[-1]
        for n in _ranks(max_n, tag, algebra.min_rank(which)):
            def check(which=which, n=n):
                report = algebra.verify_factorization(which, n)
                detail = f"{report['term_count']} terms, all stages multiplicity-free"
                if not report["ok"]:
                    detail = f"{report['term_count']} terms; mismatches {report['mismatches']}"
                return report["ok"], detail

            _run(rows, "props", f"{which} n={n}", check)

    for which in algebra.FACTORIZATIONS:
        tag = which[-1]
        for n in _ranks(max_n, tag, algebra.min_rank(which)):
            def check_image(which=which, n=n):
                by_factors, of_product = algebra.factorization_image(which, n)
                expected = algebra.factorization_expected_image(which, n)
                ok = by_factors == of_product == expected
                return ok, "factorwise image == product image == closed form"

            _run(rows, "props", f"image {which} n={n}", check_image)
    return rows


# ---------------------------------------------------------------------------
# identities: closed forms against exhaustive distributions
# ---------------------------------------------------------------------------

def identities_suite(max_n: dict[str, int], threads: int = 1) -> list[dict]:
    rows: list[dict] = []

    def check_qint():
        ok = all(
            qpoly.q_int(i) * (qpoly.ONE + qpoly.BivarPoly.monomial(i, 0))
            == qpoly.q_int(2 * i)
            for i in range(1, 7)
        )
        return ok, "[i]_q * (1 + q^i) == [2i]_q for i <= 6"

    _run(rows, "identities", "q-int doubling", check_qint)

    for n in _ranks(max_n, "A", 1):
        def check_a(n=n):
            inv_m = qpoly.distribution("A", n, "inv", "m", threads=threads)
            sor_cyc = qpoly.distribution("A", n, "sor", "cyc", threads=threads)
            closed = qpoly.closed_S(n)
            checks = [
                inv_m == closed,
                sor_cyc == closed,
                # reciprocal shape, with the right side built from its own factors
                inv_m.substitute_t_reciprocal(n) == qpoly.closed_S_reciprocal(n),
                sor_cyc.substitute_t_reciprocal(n) == qpoly.closed_S_reciprocal(n),
                # q- and t-marginals: the Mahonian and Stirling classics
                inv_m.substitute_t_one() == qpoly.solomon_product(range(1, n)),
                sor_cyc.substitute_q_one()
                == qpoly.T
                * qpoly.product(
                    qpoly.BivarPoly.const(i) + qpoly.T for i in range(1, n)
                ),
            ]
            return all(checks), "inv/m and sor/cyc vs closed form, both conventions"

        _run(rows, "identities", f"A n={n}", check_a)

    for n in _ranks(max_n, "B", 1):
        def check_b(n=n):
            inv_mb = qpoly.distribution("B", n, "inv", "mB", threads=threads)
            sor_rlen = qpoly.distribution("B", n, "sor", "rlen", threads=threads)
            closed = qpoly.closed_B(n)
            stirling = qpoly.product(
                qpoly.ONE + qpoly.BivarPoly.monomial(0, 1, 2 * i - 1)
                for i in range(1, n + 1)
            )
            checks = [
                inv_mb == closed,
                sor_rlen == closed,
                inv_mb.substitute_t_reciprocal(n) == qpoly.closed_B_reciprocal(n),
                sor_rlen.substitute_q_one() == stirling,
            ]
            return all(checks), "inv/mB and sor/rlen vs closed form; sign Stirling"

        _run(rows, "identities", f"B n={n}", check_b)

    for n in _ranks(max_n, "D", 4):
        def check_d(n=n):
            inv_d = qpoly.distribution("D", n, "inv", threads=threads)
            sor_d = qpoly.distribution("D", n, "sor", threads=threads)
            closed = qpoly.closed_D(n)
            alt = qpoly.product(
                (qpoly.ONE + qpoly.BivarPoly.monomial(i, 0)) * qpoly.q_int(i + 1)
                for i in range(1, n)
            )
            checks = [
                inv_d == closed,
                sor_d == closed,
                alt == closed,
                closed.evaluate(1, 1) == (1 << (n - 1)) * math.factorial(n),
            ]
            return all(checks), "inv and sor vs closed form, both product shapes"

        _run(rows, "identities", f"D n={n}", check_d)

    def check_w():
        checks = []
        for n in range(2, max_n.get("B", 0) + 1):
            checks.append(
                qpoly.closed_W(qpoly.coxeter_exponents("B", n)) == qpoly.closed_B(n)
            )
        for n in range(2, max_n.get("A", 0) + 1):
            checks.append(
                qpoly.closed_W(qpoly.coxeter_exponents("A", n))
                == qpoly.closed_S(n).substitute_t_reciprocal(n)
            )
        for n in range(4, max_n.get("D", 0) + 1):
            checks.append(
                qpoly.closed_W(qpoly.coxeter_exponents("D", n)).substitute_t_one()
                == qpoly.closed_D(n)
            )
        return all(checks), "exponent-list product vs per-type closed forms"

    _run(rows, "identities", "exponent refinement", check_w)
    return rows


# ---------------------------------------------------------------------------
# oracle: BFS distances against formulas and closed distributions
# ---------------------------------------------------------------------------

def oracle_suite(max_n: dict[str, int]) -> list[dict]:
    rows: list[dict] = []
    ranges = [
        ("A", _ranks(max_n, "A", 2)),
        ("B", _ranks(max_n, "B", 1)),
        ("D", _ranks(max_n, "D", 4)),
    ]

    for tag, ns in ranges:
        for n in ns:
            def check_len(tag=tag, n=n):
                gen = oracle.GeneratorSet(tag, "simple", n)
                table = oracle.bfs_table(gen)
                ok = all(
                    table[w.word] == inversions(w) for w in enumerate_group(tag, n)
                )
                ok = ok and oracle.check_generating_function(
                    gen, qpoly.solomon_product(qpoly.coxeter_exponents(tag, n))
                )
                return ok, "BFS simple == inv; distribution == Solomon product"

            _run(rows, "oracle", f"length {tag} n={n}", check_len)

    for tag in ("A", "B"):
        for n in _ranks(max_n, tag, 2 if tag == "A" else 1):
            def check_rlen(tag=tag, n=n):
                gen = oracle.GeneratorSet(tag, "reflections", n)
                table = oracle.bfs_table(gen)
                ok = all(
                    table[w.word] == reflection_length(w)
                    for w in enumerate_group(tag, n)
                )
                if tag == "A":
                    ok = ok and all(
                        table[w.word] == n - cycle_count(w)
                        for w in enumerate_group(tag, n)
                    )
                ok = ok and oracle.check_generating_function(
                    gen, qpoly.shephard_todd_product(qpoly.coxeter_exponents(tag, n))
                )
                return ok, "BFS reflections == rlen; distribution == Shephard-Todd"

            _run(rows, "oracle", f"reflection length {tag} n={n}", check_rlen)

    for tag, lo in (("A", 2), ("B", 1)):
        for n in _ranks(max_n, tag, lo):
            def check_sym(tag=tag, n=n):
                gen = oracle.GeneratorSet(tag, "simple", n)
                table = oracle.bfs_table(gen)
                ok = all(
                    table[w.word] == table[inverse(w).word]
                    for w in enumerate_group(tag, n)
                )
                return ok, "dist(w) == dist(w^-1)"

            _run(rows, "oracle", f"inverse symmetry {tag} n={n}", check_sym)
    return rows


def run_suites(
    suite: str = "all",
    max_n: dict[str, int] | None = None,
    threads: int = 1,
) -> list[dict]:
    """Run one suite (or all), returning check rows in a fixed order.

    ``max_n`` maps tags to rank ceilings and overrides the per-suite defaults
    wherever given.
    """
    if suite not in SUITES and suite != "all":
        raise ValueError(f"unknown suite {suite!r}; expected one of {('all',) + SUITES}")
    chosen = SUITES if suite == "all" else (suite,)
    rows: list[dict] = []
    for s in chosen:
        limits = dict(DEFAULT_MAX_N[s])
        if max_n:
            limits.update(max_n)
        if s == "props":
            rows.extend(props_suite(limits))
        elif s == "identities":
            rows.extend(identities_suite(limits, threads=threads))
        else:
            rows.extend(oracle_suite(limits))
    return rows
