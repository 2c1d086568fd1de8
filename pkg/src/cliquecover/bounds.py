"""Exact evaluation of the clique-count formulas and polynomial inequalities.

Everything is computed with :class:`fractions.Fraction`; no floating point is
involved in any comparison.  Each ``check_*`` function sweeps a range and
returns a JSON-ready report with ``pass``/``fail``/``equality``/``mismatch``
items.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Iterable, NamedTuple

from .graph import Graph, count_cliques, turan_graph
from .sequence import Q_terms, key_main

# -- clique counts of Turán graphs ---------------------------------------------


def turan_clique_count(n: int, r: int, t: int) -> int:
    """``k_t`` of the balanced complete ``r``-partite graph on ``n >= 0`` vertices.

    Part ``i`` has ``floor((n + i) / r)`` vertices, so the count is the sum over
    ``t``-subsets of parts of the product of their sizes.
    """
    if n < 0:
        return 0
    return sum(prod((n + i) // r for i in idx) for idx in combinations(range(r), t))


def erdos_h(n: int, k: int, t: int) -> int:
    """Maximum number of ``t``-cliques in an ``n``-vertex ``K_k``-free graph."""
    if not k > t >= 1:
        raise ValueError(f"need k > t >= 1, got k={k}, t={t}")
    if n < 1:
        raise ValueError("n must be positive")
    return turan_clique_count(n, k - 1, t)


def k4_turan(n: int) -> int:
    return turan_clique_count(n, 4, 4)


def k3_turan(n: int) -> int:
    return turan_clique_count(n, 3, 3)


# -- Moon-Moser ---------------------------------------------------------------------


class MoonMoser(NamedTuple):
    holds: bool
    slack: Fraction


def moon_moser_holds(G: Graph, t: int) -> MoonMoser:
    """Check ``k_{t+1}/k_t >= (t^2 k_t / k_{t-1} - n) / (t^2 - 1)``; return the slack."""
    if t < 2:
        raise ValueError("t must be at least 2")
    kt1 = count_cliques(G, t - 1)
    kt = count_cliques(G, t)
    if kt == 0 or kt1 == 0:
        raise ValueError(f"k_{t}={kt}, k_{t - 1}={kt1}: ratio undefined")
    lhs = Fraction(count_cliques(G, t + 1), kt)
    rhs = Fraction(t * t * kt, kt1) - G.n
    rhs /= t * t - 1
    slack = lhs - rhs
    return MoonMoser(slack >= 0, slack)


# -- 4-partite Turán identities -----------------------------------------------------


def _item(name: str, ok: bool, **values) -> dict:
    return {"name": name, "status": "pass" if ok else "fail", **{k: jsonable(v) for k, v in values.items()}}


def k4_turan_identities(n: int) -> list[dict]:
    """Sandwich bounds on ``k_4(T(n,4))`` and its increments, and the increment identity."""
    if n < 4:
        raise ValueError("n must be at least 4")
    k4, k4_prev = k4_turan(n), k4_turan(n - 1)
    diff = k4 - k4_prev
    items = []
    if n >= 6:
        items.append(_item("eq1_lower", Fraction((n - 2) ** 2 * (n + 2) ** 2, 256) <= k4,
                           bound=Fraction((n - 2) ** 2 * (n + 2) ** 2, 256), value=k4))
        items.append(_item("eq1_upper", k4 <= Fraction(n**4, 256), value=k4, bound=Fraction(n**4, 256)))
        items.append(_item("diff_lower", Fraction((n - 1) ** 3, 64) <= diff,
                           bound=Fraction((n - 1) ** 3, 64), value=diff))
        items.append(_item("diff_upper", diff <= Fraction(n**3, 64), value=diff, bound=Fraction(n**3, 64)))
    k3 = k3_turan(3 * n // 4)
    items.append(_item("diff_identity", diff == k3, difference=diff, k3=k3))
    return items


# -- large clique peeling inequality --------------------------------------------------

APPENDIX_A_CUBICS = {
    6: (Fraction(1, 864), Fraction(3, 8), Fraction(-21, 8), Fraction(5)),
    7: (Fraction(23, 3136), Fraction(479, 896), Fraction(-297, 64), Fraction(2735, 256)),
    8: (Fraction(1, 64), Fraction(21, 32), Fraction(-7), Fraction(305, 16)),
    9: (Fraction(395, 15552), Fraction(283, 384), Fraction(-615, 64), Fraction(7791, 256)),
    10: (Fraction(29, 800), Fraction(31, 40), Fraction(-99, 8), Fraction(45)),
}

APPENDIX_A_DERIVATIVES = {
    6: (Fraction(1, 288), Fraction(3, 4), Fraction(-21, 8)),
    7: (Fraction(69, 3136), Fraction(479, 448), Fraction(-297, 64)),
    8: (Fraction(3, 64), Fraction(21, 16), Fraction(-7)),
    9: (Fraction(395, 5184), Fraction(283, 192), Fraction(-615, 64)),
    10: (Fraction(87, 800), Fraction(31, 20), Fraction(-99, 8)),
}


def _horner(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def peel_cover_size(n, c) -> Fraction:
    """Size bound of the peeled cover when the maximum clique has ``c`` vertices."""
    r = Fraction(n - c)
    return (r / 4) ** 4 + 1 + r + comb(c, 2) * (r / c) ** 2 + comb(c, 3) * (r / c) ** 3


def appendix_a_g(n: int, c: int) -> Fraction:
    """``(n-2)^2 (n+2)^2 / 256`` minus the peeled cover bound for clique number ``c``."""
    if c not in APPENDIX_A_CUBICS:
        raise ValueError("c must lie in 6..10")
    if n < c:
        raise ValueError("need n >= c")
    return Fraction((n - 2) ** 2 * (n + 2) ** 2, 256) - peel_cover_size(n, c)


def appendix_a_cubic(n, c) -> Fraction:
    return _horner(APPENDIX_A_CUBICS[c], n)


def appendix_a_derivative(n, c) -> Fraction:
    return _horner(APPENDIX_A_DERIVATIVES[c], n)


def appendix_a_report(c: int) -> list[dict]:
    """Compare the direct definition with the listed cubic and derivative for one ``c``.

    The direct definition has degree at most 4, so agreement at five points
    proves the polynomial identity.
    """
    items = []
    points = range(c, c + 5)
    diffs = [(n, appendix_a_g(n, c), appendix_a_cubic(n, c)) for n in points]
    bad = [(n, d, l) for n, d, l in diffs if d != l]
    items.append({"name": f"cubic_c{c}", "status": "mismatch" if bad else "pass",
                  "points": list(points), "disagreements": [[n, jsonable(d), jsonable(l)] for n, d, l in bad]})
    a3, a2, a1, _ = APPENDIX_A_CUBICS[c]
    derived = (3 * a3, 2 * a2, a1)
    items.append({"name": f"derivative_c{c}",
                  "status": "pass" if derived == APPENDIX_A_DERIVATIVES[c] else "mismatch",
                  "listed": [jsonable(x) for x in APPENDIX_A_DERIVATIVES[c]],
                  "derived": [jsonable(x) for x in derived]})
    return items


# -- small-n base cases --------------------------------------------------------------

APPENDIX_B_CUBICS = {
    0: (3, -90, 75, -50),
    1: (3, -74, 64, -18),
    2: (3, -78, 51, -14),
    3: (3, -82, 11, -1),
}


def appendix_b_h(n: int) -> Fraction:
    """``k_4(T(n,4)) - k_4(T(n-5,4))`` minus the clique-number-5 peeling bound."""
    if n < 6:
        raise ValueError("n must be at least 6")
    r = Fraction(n - 5)
    return k4_turan(n) - k4_turan(n - 5) - 1 - r - Fraction(2, 5) * r**2 - Fraction(2, 25) * r**3


def appendix_b_case_value(n: int) -> Fraction:
    """Residue-case cubic ``-(3k^3 + ...)/25`` evaluated at ``n = 4k + r``."""
    k, r = divmod(n, 4)
    return -_horner(APPENDIX_B_CUBICS[r], k) / 25


# -- the min-degree case chain ----------------------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def chain_branch_values(q: int, d: int) -> tuple[Fraction, Fraction, Fraction]:
    main = key_main(d, q)
    return tuple(main + Q for Q in Q_terms(d, q))


def appendix_c_endpoints(n: int) -> dict:
    """Third-branch bound at ``d = n - q`` for the two extreme admissible ``q``."""
    lo, hi = _ceil_div(n, 5), _ceil_div(n, 4) - 1
    g_lo = chain_branch_values(lo, n - lo)[2]
    g_hi = chain_branch_values(hi, n - hi)[2]
    target = Fraction((n - 1) ** 3, 64)
    top = max(g_lo, g_hi)
    return {"q_low": lo, "q_high": hi, "g_low": jsonable(g_lo), "g_high": jsonable(g_hi),
            "max": jsonable(top), "target": jsonable(target), "status": "pass" if top < target else "fail"}


def proof_chain_check(n: int) -> dict:
    """Check the key-lemma bound against the Turán increment over all admissible ``(d, q)``.

    ``d`` ranges over ``floor(3n/4)+1 .. floor(4n/5)`` and ``q`` over
    ``ceil(d/4) .. n-d``.  The only tolerated equality is the first branch at
    ``n = 4k+1``, ``q = k``, ``d = 3k+1``.
    """
    if n < 6:
        raise ValueError("n must be at least 6")
    delta = k4_turan(n) - k4_turan(n - 1)
    violations, equalities = [], []
    pairs = 0
    for d in range(3 * n // 4 + 1, 4 * n // 5 + 1):
        for q in range(_ceil_div(d, 4), n - d + 1):
            pairs += 1
            for branch, value in enumerate(chain_branch_values(q, d), start=1):
                if value > delta:
                    violations.append({"d": d, "q": q, "branch": branch, "value": jsonable(value)})
                elif value == delta:
                    designated = n % 4 == 1 and q == n // 4 and d == n - q and branch == 1
                    equalities.append({"d": d, "q": q, "branch": branch, "designated": designated})
    small = 3 * n // 4
    low_degree_ok = Fraction((small - 1) ** 3, 27) < Fraction((n - 1) ** 3, 64) <= delta
    report = {
        "n": n,
        "delta": delta,
        "pairs": pairs,
        "violations": violations,
        "equalities": equalities,
        "low_degree": "pass" if low_degree_ok else "fail",
        "balanced_degree": "pass" if k3_turan(small) == delta else "fail",
        "endpoints": appendix_c_endpoints(n),
    }
    ok = (not violations and all(e["designated"] for e in equalities) and low_degree_ok
          and report["balanced_degree"] == "pass")
    report["status"] = "pass" if ok else "fail"
    return report


# -- sweeps used by the command line and the acceptance suite --------------------------------


def jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _summary(name: str, items: list[dict]) -> dict:
    statuses = [it.get("status") for it in items]
    return {
        "check": name,
        "status": "fail" if "fail" in statuses else "pass",
        "counts": {s: statuses.count(s) for s in sorted(set(statuses))},
        "items": items,
    }


def check_erdos(ns: Iterable[int] = range(1, 21), max_k: int = 6) -> dict:
    items = []
    for n in ns:
        for k in range(2, max_k + 1):
            host = turan_graph(n, min(k - 1, n))
            for t in range(1, k):
                formula, brute = erdos_h(n, k, t), count_cliques(host, t)
                items.append({"n": n, "k": k, "t": t, "formula": formula, "brute_force": brute,
                              "status": "pass" if formula == brute else "fail"})
    return _summary("erdos", items)


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """All graphs on ``n <= 7`` vertices up to isomorphism (networkx atlas)."""
    import networkx as nx

    if not 1 <= n <= 7:
        raise ValueError("the graph atlas covers 1 <= n <= 7")
    return [Graph(n, g.edges()) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def check_moonmoser(ns: Iterable[int] = range(1, 8), ts: Iterable[int] = (2, 3)) -> dict:
    items = []
    ts = tuple(ts)
    for n in ns:
        checked, skipped, failures, tight = 0, 0, [], 0
        for idx, g in enumerate(nonisomorphic_graphs(n)):
            for t in ts:
                try:
                    res = moon_moser_holds(g, t)
                except ValueError:
                    skipped += 1
                    continue
                checked += 1
                tight += res.slack == 0
                if not res.holds:
                    failures.append({"graph": idx, "t": t, "slack": jsonable(res.slack)})
        items.append({"n": n, "checked": checked, "undefined": skipped, "equalities": tight,
                      "failures": failures, "status": "fail" if failures else "pass"})
    return _summary("moonmoser", items)


def check_eq1(ns: Iterable[int] = range(4, 1001)) -> dict:
    items = []
    for n in ns:
        for it in k4_turan_identities(n):
            items.append({"n": n, **it})
    return _summary("eq1", items)


def check_appendix_a(ns: Iterable[int] = range(6, 2001), cs: Iterable[int] = range(6, 11)) -> dict:
    items = []
    ns = list(ns)
    for c in cs:
        items.extend(appendix_a_report(c))
        bad = [n for n in ns if n >= c and appendix_a_g(n, c) <= 0]
        neg_deriv = [n for n in ns if n >= c and appendix_a_derivative(n, c) <= 0]
        swept = sum(1 for n in ns if n >= c)
        items.append({"name": f"positive_c{c}", "swept": swept, "nonpositive": bad[:20],
                      "status": "fail" if bad else "pass"})
        items.append({"name": f"derivative_positive_c{c}", "swept": swept, "nonpositive": neg_deriv[:20],
                      "status": "fail" if neg_deriv else "pass"})
    return _summary("appendixA", items)


def check_appendix_b(ns: Iterable[int] = range(6, 105), exclude: Iterable[int] = (97, 101)) -> dict:
    items = []
    exclude = set(exclude)
    for n in ns:
        direct, case = appendix_b_h(n), appendix_b_case_value(n)
        if n in exclude:
            status = "excluded"
        else:
            status = "pass" if direct > 0 else "fail"
        items.append({"n": n, "direct": jsonable(direct), "case_cubic": jsonable(case),
                      "agrees": direct == case, "status": status})
        if direct != case:
            items.append({"n": n, "name": "case_cubic", "status": "mismatch",
                          "direct": jsonable(direct), "case_cubic": jsonable(case)})
    return _summary("appendixB", items)


def check_chain(ns: Iterable[int] = (97, 101, *range(105, 201))) -> dict:
    return _summary("chain", [proof_chain_check(n) for n in ns])


CHECKS = {
    "erdos": check_erdos,
    "moonmoser": check_moonmoser,
    "eq1": check_eq1,
    "appendixA": check_appendix_a,
    "appendixB": check_appendix_b,
    "chain": check_chain,
}
