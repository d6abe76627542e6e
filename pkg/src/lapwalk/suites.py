"""Named verification suites behind `lapwalk verify-suite`.

Each suite re-checks one block of claims at fixed tolerances and returns a
SuiteReport with one line per check. Suites are deterministic; the optional
worker pool (capped by LAPWALK_THREADS) only parallelizes independent checks
and never changes output ordering.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import linegraph, pst
from .control import unicyclic_no_pst_pipeline
from .corpus import named_small_graphs, random_connected_graphs
from .graphs import (
    circulant_family,
    complete,
    empty,
    hypercube,
    join,
    path,
    weak_product,
)
from .operators import (
    OperatorKind,
    normalized_laplacian,
    operator,
    signless_laplacian,
)
from .partitions import check_equitable, path_cycle_correspondence, quotient
from .pst import search_pst, verify_pst
from .spectral import eigendecompose

__all__ = ["SuiteReport", "SUITES", "run_suite", "available_suites"]

IDENTITY_TOL = 1e-9
TIMES = (0.1, 1.0, math.pi, 10.0)


@dataclass(frozen=True)
class SuiteReport:
    name: str
    passed: bool
    lines: tuple[str, ...]


def _pool_size(n_tasks: int) -> int:
    env = os.environ.get("LAPWALK_THREADS", "")
    try:
        cap = int(env) if env else (os.cpu_count() or 1)
    except ValueError:
        cap = 1
    return max(1, min(cap, n_tasks))


def _map_ordered(fn: Callable, items: Sequence) -> list:
    if not items:
        return []
    workers = _pool_size(len(items))
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _report(name: str, rows: Iterable[tuple[bool, str]]) -> SuiteReport:
    rows = list(rows)
    passed = all(ok for ok, _ in rows)
    lines = tuple(f"{'ok  ' if ok else 'FAIL'} {text}" for ok, text in rows)
    return SuiteReport(name, passed, lines)


# -- suites -------------------------------------------------------------------


def suite_complement_closure(**_) -> SuiteReport:
    """exp(-itL(complement)) equals exp(+itL(g)) whenever |V| t is a multiple
    of 2 pi, across the named gallery."""

    def check(item):
        label, g = item
        rows = []
        for k in (1, 2):
            t = 2.0 * math.pi * k / g.n
            condition, deviation = pst.complement_closure_check(g, t)
            ok = condition and deviation < IDENTITY_TOL
            rows.append((ok, f"complement-closure {label} t=2pi*{k}/{g.n} dev={deviation:.2e}"))
        return rows

    nested = _map_ordered(check, named_small_graphs())
    return _report("complement-closure", [row for rows in nested for row in rows])


def suite_double_cone(n_max: int = 10, t_max: float = 50.0, **_) -> SuiteReport:
    results = pst.double_cone_characterization(range(1, n_max + 1), t_max=t_max)
    rows = []
    for res in results:
        expected = res.n % 4 == 2
        ok = res.has_pst == expected
        best = max(w[1] for w in res.witnesses)
        rows.append(
            (
                ok,
                f"double-cone n={res.n} pst={'yes' if res.has_pst else 'no'} "
                f"expected={'yes' if expected else 'no'} best-magnitude={best:.9f} "
                f"bases={len(res.witnesses)}",
            )
        )
    return _report("double-cone", rows)


def suite_signless_double_cone(ms: Sequence[int] = (2, 3, 4), **_) -> SuiteReport:
    rows = []
    for m in ms:
        base = circulant_family(m)
        degs = base.degrees()
        regular_ok = base.n == 2 * m and degs.min() == degs.max() == m - 1
        rows.append((regular_ok, f"circulant-family m={m} is ({2*m},{m-1})-regular"))
        g = join(empty(2), base)
        t = math.pi / (2.0 * math.sqrt(m))
        res = verify_pst(signless_laplacian(g), (0, 1), t)
        ok = isinstance(res, pst.PstCertificate)
        rows.append(
            (
                ok,
                f"signless double cone m={m} t=pi/(2*sqrt({m})) magnitude={res.magnitude:.12f}",
            )
        )
        part = check_equitable(g, [(0,), tuple(range(2, g.n)), (1,)])
        b = quotient(g, part, OperatorKind.SIGNLESS).matrix
        n = 2 * m
        expected = n * np.eye(3) + math.sqrt(n) * path(3).adjacency()
        dev = float(np.abs(b - expected).max())
        rows.append((dev < 1e-12, f"signless quotient m={m} matches nI+sqrt(n)A(P3) dev={dev:.2e}"))
    return _report("signless-double-cone", rows)


def suite_weak_product(**_) -> SuiteReport:
    rows = []
    positives = [
        ("P3xK4", path(3), complete(4), 3.0 * math.pi),
        ("P3xQ3", path(3), hypercube(3), 3.0 * math.pi),
        ("P3xK2", path(3), complete(2), math.pi),
    ]
    for label, g, h, t in positives:
        prod = weak_product(g, h)
        pair = (0 * h.n + 0, 2 * h.n + 0)
        res = verify_pst(normalized_laplacian(prod), pair, t)
        ok = isinstance(res, pst.PstCertificate)
        rows.append((ok, f"weak-product {label} t={t / math.pi:g}pi magnitude={res.magnitude:.12f}"))
        spec_g = eigendecompose(normalized_laplacian(g)).values
        spec_h = eigendecompose(normalized_laplacian(h)).values
        cond = pst.weak_product_closure_1(spec_g, spec_h, t)
        rows.append((cond, f"weak-product {label} closure condition holds"))
    pairs = [("P3", path(3), "K4", complete(4)), ("C5", path(4), "K3", complete(3))]
    for gl, g, hl, h in pairs:
        for t in TIMES:
            chk = pst.normalized_weak_product_walk_check(g, h, t)
            ok = chk.max_deviation < IDENTITY_TOL
            rows.append(
                (
                    ok,
                    f"weak-product identity {gl}x{hl} t={t:g} op-dev={chk.operator_deviation:.2e} "
                    f"walk-dev={chk.walk_deviation:.2e}",
                )
            )
    return _report("weak-product", rows)


def suite_line_intertwine(**_) -> SuiteReport:
    graphs = [(label, g) for label, g in named_small_graphs() if g.edge_count >= 2]
    graphs += [(f"rand{i}", g) for i, g in enumerate(random_connected_graphs(6, seed=7))]

    def check(item):
        label, g = item
        worst = 0.0
        for t in TIMES:
            worst = max(worst, max(linegraph.intertwine_check(g, t)))
        return (worst < IDENTITY_TOL, f"line-intertwine {label} max-dev={worst:.2e}")

    return _report("line-intertwine", _map_ordered(check, graphs))


def suite_path_cycle(n_max: int = 8, **_) -> SuiteReport:
    rows = []
    for n in range(2, n_max + 1):
        rep = path_cycle_correspondence(n)
        ok = (
            rep.quotient_deviation < 1e-12
            and rep.identity_deviation < 1e-12
            and rep.walk_deviation < IDENTITY_TOL
        )
        rows.append(
            (
                ok,
                f"path-cycle n={n} quotient-dev={rep.quotient_deviation:.2e} "
                f"identity-dev={rep.identity_deviation:.2e} walk-dev={rep.walk_deviation:.2e}",
            )
        )
    return _report("path-cycle", rows)


def suite_unicyclic(ms: Sequence[int] = (1, 2, 3, 4, 5), t_max: float = 200.0, **_) -> SuiteReport:
    def check(m):
        rep = unicyclic_no_pst_pipeline(m, t_max=t_max)
        if m % 3 == 0:
            ok = rep.verdict == "inconclusive" and rep.scan_below_threshold
        else:
            ok = (
                rep.verdict == "no-pst"
                and all(rep.endpoints_controllable)
                and rep.scan_below_threshold
            )
        return (
            ok,
            f"unicyclic m={m} verdict={rep.verdict} ranks={rep.ranks[0]},{rep.ranks[1]}/"
            f"{rep.line_order} scan-max={rep.scan_magnitude:.9f}",
        )

    return _report("unicyclic", _map_ordered(check, list(ms)))


def suite_path_refutation(
    ns: Sequence[int] = (4, 5, 6, 7, 8), t_max: float = 200.0, **_
) -> SuiteReport:
    kinds = (OperatorKind.STANDARD, OperatorKind.SIGNLESS, OperatorKind.NORMALIZED)

    def check(item):
        n, kind = item
        cert = search_pst(operator(path(n), kind), (0, n - 1), t_max)
        ok = cert.magnitude < pst.REFUTE_THRESHOLD
        return (
            ok,
            f"path-refutation P{n} {kind.value} max-magnitude={cert.magnitude:.9f} "
            f"at t={cert.time:.6f}",
        )

    items = [(n, kind) for kind in kinds for n in ns]
    return _report("path-refutation", _map_ordered(check, items))


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "complement-closure": suite_complement_closure,
    "double-cone": suite_double_cone,
    "signless-double-cone": suite_signless_double_cone,
    "weak-product": suite_weak_product,
    "line-intertwine": suite_line_intertwine,
    "path-cycle": suite_path_cycle,
    "unicyclic": suite_unicyclic,
    "path-refutation": suite_path_refutation,
}


def available_suites() -> list[str]:
    return sorted(SUITES)


def run_suite(name: str, **options) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(available_suites())}")
    return SUITES[name](**options)
