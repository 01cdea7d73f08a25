"""Seeded verification suites.

Each suite binds one documented bound or identity to an executable check,
runs it over exhaustively enumerated small graphs (all labeled graphs
through 5 vertices) plus seeded random samples beyond, and emits a
deterministic report: for a fixed seed the serialized report is
byte-identical run to run, whatever the job count.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import engine
from .engine import GameSpec
from .graphs import (
    Graph,
    all_pairs,
    augment_isolated,
    delete_vertex,
    induced_subgraph,
    make_cycle,
    parse_edge_list,
    parse_family_expr,
    render_edge_list,
)
from .oracle import brute_force_value

__all__ = [
    "Violation",
    "Report",
    "all_labeled_graphs",
    "random_graph",
    "random_preorder",
    "verify_monotonicity",
    "verify_skipping",
    "verify_section3",
    "verify_construction",
    "explore_c5",
    "verify_all",
    "SUITE_NAMES",
]

SUITE_NAMES = ("monotonicity", "skipping", "section3", "construction", "c5")


@dataclass(frozen=True)
class Violation:
    graph: str  # replayable one-line edge list or family expression
    detail: str


@dataclass
class Report:
    suite: str
    params: dict
    cases_run: int
    violations: list[Violation]
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_text(self, include_elapsed: bool = False) -> str:
        lines = [f"suite: {self.suite}"]
        for k in sorted(self.params):
            lines.append(f"param {k}: {self.params[k]}")
        lines.append(f"cases: {self.cases_run}")
        for note in self.notes:
            lines.append(f"note: {note}")
        for v in self.violations:
            lines.append(f'violation: graph="{v.graph}" detail="{v.detail}"')
        lines.append(f"violations: {len(self.violations)}")
        if include_elapsed:
            lines.append(f"elapsed: {self.elapsed:.3f}s")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self, include_elapsed: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "params": dict(self.params),
            "cases_run": self.cases_run,
            "notes": list(self.notes),
            "violations": [
                {"graph": v.graph, "detail": v.detail} for v in self.violations
            ],
            "result": "pass" if self.passed else "fail",
        }
        if include_elapsed:
            d["elapsed_s"] = self.elapsed
        return d

    def to_json(self, include_elapsed: bool = False) -> str:
        return json.dumps(
            self.to_json_dict(include_elapsed), sort_keys=True, separators=(",", ":")
        )

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(
            d["suite"],
            dict(d["params"]),
            d["cases_run"],
            [Violation(v["graph"], v["detail"]) for v in d["violations"]],
            list(d.get("notes", [])),
            float(d.get("elapsed_s") or 0.0),
        )


# -- corpus ------------------------------------------------------------------


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices, in edge-mask order."""
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in all_pairs(n) if rng.random() < p])


def random_preorder(rng: random.Random, allowed, parity: "int | None" = None):
    """A random duplicate-free vertex sequence from allowed; parity (0 or 1)
    constrains its length, returning None when unsatisfiable."""
    allowed = sorted(allowed)
    if parity is None:
        k = rng.randint(0, len(allowed))
    else:
        ks = [k for k in range(len(allowed) + 1) if k % 2 == parity]
        if not ks:
            return None
        k = rng.choice(ks)
    return tuple(rng.sample(allowed, k))


def _corpus(suite: str, max_n: int, samples: int, seed: int, n_min: int = 1):
    graphs = []
    for n in range(n_min, min(max_n, 5) + 1):
        batch = list(all_labeled_graphs(n))
        assert len(batch) == 1 << (n * (n - 1) // 2), "enumeration count is off"
        graphs.extend(batch)
    probs = (0.5, 0.2, 0.8)
    for n in range(6, max_n + 1):
        rng = random.Random(f"{seed}:{suite}:corpus:{n}")
        for i in range(samples):
            graphs.append(random_graph(rng, n, probs[i % 3]))
    return [(i, render_edge_list(g, inline=True)) for i, g in enumerate(graphs)]


# -- per-graph checks (top level so process pools can pickle them) -----------


def _monotonicity_cases(g, text, index, seed, params):
    rng = random.Random(f"{seed}:monotonicity:{index}")
    n = g.n
    cases = 0
    out = []
    base = engine.sigma_gcol(g, ())
    if n <= 5:
        subsets = [
            [v for v in range(n) if mask >> v & 1] for mask in range(1, (1 << n) - 1)
        ]
    else:
        subsets = [[v for v in range(n) if v != x] for x in range(n)]
        for _ in range(params.get("samples", 3)):
            k = rng.randint(1, n - 1)
            subsets.append(sorted(rng.sample(range(n), k)))
    for sub in subsets:
        h, remap = induced_subgraph(g, sub)
        cases += 1
        hv = engine.sigma_gcol(h, ())
        if hv > base:
            out.append(
                Violation(text, f"induced {sub}: value {hv} exceeds full-graph {base}")
            )
        sig = random_preorder(rng, sub)
        sig_h = tuple(remap[v] for v in sig)
        cases += 1
        gv = engine.sigma_gcol(g, sig)
        hv2 = engine.sigma_gcol(h, sig_h)
        if hv2 > gv:
            out.append(
                Violation(
                    text,
                    f"induced {sub} preorder {sig}: value {hv2} exceeds full-graph {gv}",
                )
            )
        if len(sig) % 2 == 1:
            cases += 1
            ga = engine.sigma_gcol_A(g, sig)
            ha = engine.sigma_gcol_A(h, sig_h)
            if ha > ga:
                out.append(
                    Violation(
                        text,
                        f"induced {sub} preorder {sig} (minimizer next): "
                        f"value {ha} exceeds full-graph {ga}",
                    )
                )
    if n >= 1:
        sig = random_preorder(rng, range(n), parity=1)
        if sig is not None:
            cases += 1
            want = engine.sigma_gcol_A(g, sig)
            got = engine.sigma_gcol(augment_isolated(g), sig + (n,))
            if got != want:
                out.append(
                    Violation(
                        text,
                        f"isolated-vertex augmentation at preorder {sig}: "
                        f"{got} != {want}",
                    )
                )
    return cases, out


def _skipping_cases(g, text, index, seed, params):
    rng = random.Random(f"{seed}:skipping:{index}")
    n = g.n
    cases = 0
    out = []
    base = engine.sigma_gcol(g, ())
    evens = [()]
    sig = random_preorder(rng, range(n), parity=0)
    if sig:
        evens.append(sig)
    for sig in evens:
        cases += 1
        a = engine.sigma_gcol(g, sig)
        b = engine.sigma_gcol_B(g, sig)
        if a > b:
            out.append(
                Violation(
                    text,
                    f"maximizer-start bound at preorder {sig}: {a} > {b}",
                )
            )
    odd = random_preorder(rng, range(n), parity=1)
    if odd is not None:
        cases += 1
        a = engine.sigma_gcol_A(g, odd)
        b = engine.sigma_gcol(g, odd)
        if a > b:
            out.append(
                Violation(
                    text, f"minimizer-start bound at preorder {odd}: {a} > {b}"
                )
            )
    for k in (1, 2):
        cases += 2
        va = engine.solve(GameSpec(g, alice_passes=k)).value
        if va != base:
            out.append(
                Violation(text, f"{k} minimizer passes change the value: {va} != {base}")
            )
        vb = engine.solve(GameSpec(g, bob_passes=k)).value
        if vb != base:
            out.append(
                Violation(text, f"{k} maximizer passes change the value: {vb} != {base}")
            )
    return cases, out


def _section3_cases(g, text, index, seed, params):
    n = g.n
    cases = 0
    out = []
    s = engine.gcol(g)
    sb = engine.gcol_B(g)
    cases += 1
    if not s <= sb <= s + 1:
        out.append(Violation(text, f"maximizer-first value {sb} outside [{s}, {s + 1}]"))
    for x in range(n):
        sx = engine.gcol(delete_vertex(g, x))
        cases += 1
        if not 0 <= s - sx <= 2:
            out.append(
                Violation(text, f"deleting vertex {x}: drop {s - sx} outside [0, 2]")
            )
        if g.degree(x) <= sx:
            cases += 1
            if s > sx + 1:
                out.append(
                    Violation(
                        text,
                        f"low-degree deletion bound at vertex {x}: {s} > {sx} + 1",
                    )
                )
    return cases, out


_CASE_FUNCTIONS = {
    "monotonicity": _monotonicity_cases,
    "skipping": _skipping_cases,
    "section3": _section3_cases,
}


def _run_chunk(task):
    suite, seed, params, chunk = task
    fn = _CASE_FUNCTIONS[suite]
    cases = 0
    out = []
    for index, text in chunk:
        g = parse_edge_list(text)
        c, v = fn(g, text, index, seed, params)
        cases += c
        out.extend(v)
    return cases, out


def _chunked(corpus, jobs: int):
    if not corpus:
        return []
    parts = max(1, min(len(corpus), jobs * 4))
    size = math.ceil(len(corpus) / parts)
    return [corpus[i : i + size] for i in range(0, len(corpus), size)]


def _execute(suite, corpus, seed, params, jobs):
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    tasks = [(suite, seed, params, chunk) for chunk in _chunked(corpus, jobs)]
    if jobs == 1 or len(tasks) <= 1:
        results = [_run_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_chunk, tasks))
    cases = sum(c for c, _ in results)
    violations = sorted(
        (v for _, vs in results for v in vs), key=lambda v: (v.graph, v.detail)
    )
    return cases, violations


# -- suites -------------------------------------------------------------------


def verify_monotonicity(max_n: int = 5, samples: int = 5, seed: int = 0, jobs: int = 1) -> Report:
    """Induced subgraphs never raise the game value (plus the minimizer-next
    variant and the isolated-vertex augmentation identity)."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    start = time.perf_counter()
    corpus = _corpus("monotonicity", max_n, samples, seed)
    cases, violations = _execute(
        "monotonicity", corpus, seed, {"samples": samples}, jobs
    )
    return Report(
        "monotonicity",
        {"max_n": max_n, "samples": samples, "seed": seed},
        cases,
        violations,
        [],
        time.perf_counter() - start,
    )


def verify_skipping(max_n: int = 5, samples: int = 5, seed: int = 0, jobs: int = 1) -> Report:
    """Starting-player bounds for both parities, and pass budgets (1 or 2,
    either player) never changing the plain value."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    start = time.perf_counter()
    corpus = _corpus("skipping", max_n, samples, seed)
    cases, violations = _execute("skipping", corpus, seed, {"samples": samples}, jobs)
    return Report(
        "skipping",
        {"max_n": max_n, "samples": samples, "seed": seed},
        cases,
        violations,
        [],
        time.perf_counter() - start,
    )


def verify_section3(max_n: int = 6, samples: int = 60, seed: int = 0, jobs: int = 1) -> Report:
    """Maximizer-first within one of the plain value; vertex deletion drops
    the value by at most 2; low-degree deletions by at most 1; plus the
    fixed tightness pair for the low-degree bound."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    start = time.perf_counter()
    corpus = _corpus("section3", max_n, samples, seed)
    cases, violations = _execute("section3", corpus, seed, {}, jobs)
    extra = []
    for expr, expected in (("minus_edge(join(K3,E2),0,3)", 4), ("join(K2,E2)", 3)):
        cases += 1
        got = engine.gcol(parse_family_expr(expr))
        if got != expected:
            extra.append(Violation(expr, f"value {got}, expected {expected}"))
    violations = sorted(
        list(violations) + extra, key=lambda v: (v.graph, v.detail)
    )
    return Report(
        "section3",
        {"max_n": max_n, "samples": samples, "seed": seed},
        cases,
        violations,
        [],
        time.perf_counter() - start,
    )


def verify_construction(max_n: int = 5, seed: int = 0, jobs: int = 1) -> Report:
    """Clique-join family values: join(K_n, E_{n-1}) is worth 2n - 1 and each
    clique-side deletion drops the value by exactly 2, down to the 3-clique
    base worth 5.  seed and jobs are accepted for interface uniformity."""
    if max_n < 3:
        raise ValueError("max_n must be at least 3")
    start = time.perf_counter()
    cases = 0
    out = []

    def check(expr: str, expected: int) -> None:
        nonlocal cases
        cases += 1
        got = engine.gcol(parse_family_expr(expr))
        if got != expected:
            out.append(Violation(expr, f"value {got}, expected {expected}"))

    for n in range(3, max_n + 1):
        expr = f"join(K{n},E{n - 1})"
        check(expr, 2 * n - 1)
        for m in range(n - 1, 2, -1):  # clique side shrinks one vertex at a time
            expr = f"delete({expr},0)"
            check(expr, 2 * m - 1)
    return Report(
        "construction",
        {"max_n": max_n, "seed": seed},
        cases,
        out,
        [],
        time.perf_counter() - start,
    )


def explore_c5(seed: int = 0, jobs: int = 1) -> Report:
    """Five-cycle exploration: the plain value of C5 and of C5 plus a vertex
    tied to two adjacent cycle vertices, each computed by the memoized solver
    and the unmemoized reference walk.  The two paths must agree; the values
    themselves are reported without judgment."""
    start = time.perf_counter()
    c5 = make_cycle(5)
    plus = Graph(6, c5.edges() + [(0, 5), (1, 5)])
    a_fast = engine.gcol(c5)
    a_slow = brute_force_value(GameSpec(c5))
    b_fast = engine.gcol(plus)
    b_slow = brute_force_value(GameSpec(plus))
    cases = 2
    out = []
    if a_fast != a_slow:
        out.append(
            Violation("C5", f"solver value {a_fast} != exhaustive value {a_slow}")
        )
    if b_fast != b_slow:
        out.append(
            Violation(
                render_edge_list(plus, inline=True),
                f"solver value {b_fast} != exhaustive value {b_slow}",
            )
        )
    deg = plus.degree(5)
    notes = [
        f"five-cycle value: {a_fast} (memoized) and {a_slow} (exhaustive)",
        f"augmented value: {b_fast} (memoized) and {b_slow} (exhaustive)",
        f"added vertex degree: {deg}",
        f"added-vertex degree <= five-cycle value: {str(deg <= a_fast).lower()}",
        f"augmented value <= five-cycle value: {str(b_fast <= a_fast).lower()}",
        f"augmented value <= five-cycle value + 1: {str(b_fast <= a_fast + 1).lower()}",
        "values are reported as computed; no further judgment is attached",
    ]
    return Report(
        "c5", {"seed": seed}, cases, out, notes, time.perf_counter() - start
    )


def verify_all(
    max_n: "int | None" = None,
    samples: "int | None" = None,
    seed: int = 0,
    jobs: int = 1,
) -> list[Report]:
    kw = {}
    if max_n is not None:
        kw["max_n"] = max_n
    if samples is not None:
        kw["samples"] = samples
    reports = [
        verify_monotonicity(seed=seed, jobs=jobs, **kw),
        verify_skipping(seed=seed, jobs=jobs, **kw),
        verify_section3(seed=seed, jobs=jobs, **kw),
        verify_construction(seed=seed, jobs=jobs, **{k: v for k, v in kw.items() if k == "max_n"}),
        explore_c5(seed=seed, jobs=jobs),
    ]
    return reports


def run_suite(
    suite: str,
    max_n: "int | None" = None,
    samples: "int | None" = None,
    seed: int = 0,
    jobs: int = 1,
) -> list[Report]:
    """Dispatch by suite name; 'all' runs every suite in order."""
    if suite == "all":
        return verify_all(max_n, samples, seed, jobs)
    kw = {}
    if max_n is not None:
        kw["max_n"] = max_n
    if samples is not None:
        kw["samples"] = samples
    if suite == "monotonicity":
        return [verify_monotonicity(seed=seed, jobs=jobs, **kw)]
    if suite == "skipping":
        return [verify_skipping(seed=seed, jobs=jobs, **kw)]
    if suite == "section3":
        return [verify_section3(seed=seed, jobs=jobs, **kw)]
    if suite == "construction":
        kw.pop("samples", None)
        return [verify_construction(seed=seed, jobs=jobs, **kw)]
    if suite == "c5":
        return [explore_c5(seed=seed, jobs=jobs)]
    raise ValueError(f"unknown suite {suite!r}")
