"""Exhaustive enumeration and graph-based verification of rewrite properties.

For a fixed size ``n`` the universe of unlabeled shapes is Catalan-sized, so
every quantitative claim about rewriting can be checked outright: build the
directed graph of single rewrite steps over all shapes, then read termination
off acyclicity, confluence off sink uniqueness, and exact sequence lengths off
longest/shortest path searches.  The path searches are deliberately
independent of the strategy implementations they are used to check.

Graph nodes are canonical term strings (see :func:`assocnf.terms.render`),
kept sorted so reports and DOT exports are byte-stable across runs.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .rewrite import apply_at, find_redexes
from .terms import Leaf, Node, Term, left_chain, measure, parse, render

__all__ = [
    "ENUMERATION_CAP",
    "GRAPH_CAP",
    "CapExceeded",
    "RewriteGraph",
    "TermRecord",
    "VerificationReport",
    "enumerate_shapes",
    "build_graph",
    "verify_sn",
    "verify_wcr",
    "verify_unique_nf",
    "longest_paths",
    "shortest_paths",
    "longest_path_from",
    "shortest_path_from",
    "verify_all",
    "report_table",
    "records_jsonl",
    "export_dot",
]

# Universe sizes are Catalan numbers; these caps keep accidental
# exponential blowups out of interactive use.  Both are overridable.
ENUMERATION_CAP = 14
GRAPH_CAP = 12


class CapExceeded(ValueError):
    """Requested size is above the resource cap; pass ``cap=`` to override."""


def enumerate_shapes(n: int, cap: int = ENUMERATION_CAP) -> list[Term]:
    """All unlabeled shapes with ``n`` internal nodes, sorted by canonical text.

    Built from the split recurrence (left subtree of size ``i``, right of
    size ``n-1-i``), so the count of results follows the Catalan recurrence.
    """
    if n < 0:
        raise ValueError("shape size must be nonnegative")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    by_size: list[list[Term]] = [[Leaf(None)]]
    for m in range(1, n + 1):
        by_size.append(
            [
                Node(l, r)
                for i in range(m)
                for l in by_size[i]
                for r in by_size[m - 1 - i]
            ]
        )
    return sorted(by_size[n], key=render)


@dataclass(eq=False)
class RewriteGraph:
    """Single-step rewrite graph over canonical term strings.

    ``succ`` has an entry for every node; parallel steps that reach the same
    successor from different positions are collapsed to one edge with the
    step count kept as the multiplicity value.
    """

    n: int
    nodes: tuple[str, ...]
    succ: dict[str, dict[str, int]]

    @property
    def edge_count(self) -> int:
        return sum(len(vs) for vs in self.succ.values())

    def sinks(self) -> list[str]:
        return [u for u in self.nodes if not self.succ.get(u)]


def build_graph(n: int, cap: int = GRAPH_CAP) -> RewriteGraph:
    """Materialize the rewrite graph over every shape of size ``n``."""
    if n > cap:
        raise CapExceeded(f"n={n} exceeds graph cap {cap}")
    terms = enumerate_shapes(n, cap=max(cap, ENUMERATION_CAP))
    nodes = tuple(render(t) for t in terms)
    succ: dict[str, dict[str, int]] = {}
    for t, key in zip(terms, nodes):
        targets: dict[str, int] = {}
        for p in find_redexes(t):
            v = render(apply_at(t, p))
            targets[v] = targets.get(v, 0) + 1
        succ[key] = dict(sorted(targets.items()))
    return RewriteGraph(n=n, nodes=nodes, succ=succ)


def _topo_order(g: RewriteGraph) -> list[str] | None:
    """Topological order of ``g``, or ``None`` if it has a cycle."""
    indegree = {u: 0 for u in g.nodes}
    for u in g.nodes:
        for v in g.succ.get(u, {}):
            indegree[v] += 1
    queue = deque(u for u in g.nodes if indegree[u] == 0)
    order: list[str] = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in g.succ.get(u, {}):
            indegree[v] -= 1
            if indegree[v] == 0:
                queue.append(v)
    return order if len(order) == len(g.nodes) else None


def verify_sn(g: RewriteGraph) -> bool:
    """Strong normalization over a finite graph: no cycles."""
    return _topo_order(g) is not None


def _descendants(g: RewriteGraph, start: str) -> set[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.succ.get(u, {}):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def verify_wcr(g: RewriteGraph) -> bool:
    """Local confluence: every one-step divergence is joinable.

    On an acyclic graph two nodes are joinable iff they share a reachable
    sink, so one pass computes reachable-sink sets and divergences reduce to
    set intersections (with a unique sink this is just normal-form equality).
    If the graph has a cycle, falls back to pairwise breadth-first
    joinability so the property is still decided.
    """
    order = _topo_order(g)
    if order is not None:
        reachable_sinks: dict[str, frozenset[str]] = {}
        for u in reversed(order):
            targets = g.succ.get(u, {})
            if not targets:
                reachable_sinks[u] = frozenset((u,))
            else:
                reachable_sinks[u] = frozenset().union(
                    *(reachable_sinks[v] for v in targets)
                )
        for u in g.nodes:
            targets = list(g.succ.get(u, {}))
            for x, y in combinations(targets, 2):
                if reachable_sinks[x].isdisjoint(reachable_sinks[y]):
                    return False
        return True
    for u in g.nodes:
        targets = list(g.succ.get(u, {}))
        for x, y in combinations(targets, 2):
            if _descendants(g, x).isdisjoint(_descendants(g, y)):
                return False
    return True


def verify_unique_nf(g: RewriteGraph) -> bool:
    """Exactly one sink, and every node reaches it."""
    sinks = g.sinks()
    if len(sinks) != 1:
        return False
    pred: dict[str, list[str]] = {u: [] for u in g.nodes}
    for u in g.nodes:
        for v in g.succ.get(u, {}):
            pred[v].append(u)
    seen = {sinks[0]}
    queue = deque(sinks)
    while queue:
        u = queue.popleft()
        for w in pred[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.nodes)


def longest_paths(g: RewriteGraph) -> dict[str, int]:
    """Longest path length from each node to a sink, by topological order."""
    order = _topo_order(g)
    if order is None:
        raise ValueError("longest paths are undefined on a cyclic graph")
    dist: dict[str, int] = {}
    for u in reversed(order):
        targets = g.succ.get(u, {})
        dist[u] = max((1 + dist[v] for v in targets), default=0)
    return dist


def shortest_paths(g: RewriteGraph) -> dict[str, int]:
    """Shortest path length from each node to a sink, by reverse BFS.

    Nodes that cannot reach a sink (possible only in cyclic graphs) are
    absent from the result.
    """
    pred: dict[str, list[str]] = {u: [] for u in g.nodes}
    for u in g.nodes:
        for v in g.succ.get(u, {}):
            pred[v].append(u)
    dist = {u: 0 for u in g.nodes if not g.succ.get(u)}
    queue = deque(dist)
    while queue:
        u = queue.popleft()
        for w in pred[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _graph_key(g: RewriteGraph, t: Term | str) -> str:
    key = t if isinstance(t, str) else render(t)
    if key not in g.succ:
        raise ValueError(f"term not in graph: {key}")
    return key


def longest_path_from(g: RewriteGraph, t: Term | str) -> int:
    """Exact longest rewrite distance from ``t`` to the normal-form sink."""
    return longest_paths(g)[_graph_key(g, t)]


def shortest_path_from(g: RewriteGraph, t: Term | str) -> int:
    """Exact shortest rewrite distance from ``t`` to the normal-form sink."""
    return shortest_paths(g)[_graph_key(g, t)]


@dataclass(frozen=True)
class TermRecord:
    """Measures and oracle path lengths for one shape."""

    term: str
    size: int
    sigma: int
    d_rm: int
    longest: int
    shortest: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of all checks over every shape of one size."""

    n: int
    records: tuple[TermRecord, ...]
    sn_ok: bool
    wcr_ok: bool
    unique_nf_ok: bool
    longest_matches_sigma: bool
    shortest_matches_formula: bool
    max_longest: int
    max_attained_by: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return (
            self.sn_ok
            and self.wcr_ok
            and self.unique_nf_ok
            and self.longest_matches_sigma
            and self.shortest_matches_formula
            and self.max_longest == self.n * (self.n - 1) // 2
            and render(left_chain(self.n)) in self.max_attained_by
        )


def verify_all(n_max: int, cap: int = GRAPH_CAP) -> list[VerificationReport]:
    """Run every check for each size ``0..n_max`` and report per size.

    A report passes iff termination, local confluence and sink uniqueness
    hold, the path oracles match ``sigma`` and ``size - d_rm`` on every
    shape, and the maximal longest path is ``n(n-1)/2``, attained by the
    left chain.
    """
    reports = []
    for n in range(n_max + 1):
        g = build_graph(n, cap=cap)
        longest = longest_paths(g)
        shortest = shortest_paths(g)
        records = []
        for key in g.nodes:
            m = measure(parse(key))
            records.append(
                TermRecord(
                    term=key,
                    size=m.size,
                    sigma=m.sigma,
                    d_rm=m.d_rm,
                    longest=longest[key],
                    shortest=shortest[key],
                )
            )
        max_longest = max(r.longest for r in records)
        reports.append(
            VerificationReport(
                n=n,
                records=tuple(records),
                sn_ok=verify_sn(g),
                wcr_ok=verify_wcr(g),
                unique_nf_ok=verify_unique_nf(g),
                longest_matches_sigma=all(r.longest == r.sigma for r in records),
                shortest_matches_formula=all(
                    r.shortest == r.size - r.d_rm for r in records
                ),
                max_longest=max_longest,
                max_attained_by=tuple(
                    r.term for r in records if r.longest == max_longest
                ),
            )
        )
    return reports


def _flag(ok: bool) -> str:
    return "ok" if ok else "FAIL"


def report_table(reports: list[VerificationReport]) -> str:
    """Human-readable per-size table, one row per report."""
    header = (
        f"{'n':>3} {'shapes':>8} {'sn':>4} {'wcr':>4} {'unique_nf':>9} "
        f"{'longest':>7} {'shortest':>8} {'max_longest':>11} {'result':>6}"
    )
    lines = [header]
    for r in reports:
        lines.append(
            f"{r.n:>3} {len(r.records):>8} {_flag(r.sn_ok):>4} "
            f"{_flag(r.wcr_ok):>4} {_flag(r.unique_nf_ok):>9} "
            f"{_flag(r.longest_matches_sigma):>7} "
            f"{_flag(r.shortest_matches_formula):>8} "
            f"{r.max_longest:>11} {'PASS' if r.passed else 'FAIL':>6}"
        )
    return "\n".join(lines) + "\n"


def records_jsonl(reports: list[VerificationReport]) -> str:
    """Machine-readable form: one JSON object per shape per line."""
    lines = []
    for r in reports:
        for rec in r.records:
            lines.append(
                json.dumps(
                    {
                        "term": rec.term,
                        "n": rec.size,
                        "sigma": rec.sigma,
                        "d_rm": rec.d_rm,
                        "longest": rec.longest,
                        "shortest": rec.shortest,
                    }
                )
            )
    return "\n".join(lines) + "\n"


def export_dot(g: RewriteGraph) -> str:
    """DOT text for ``g``: sorted nodes and edges, sinks double-bordered."""
    sinks = set(g.sinks())
    lines = ["digraph rewrites {"]
    for u in g.nodes:
        mark = " [peripheries=2]" if u in sinks else ""
        lines.append(f'  "{u}"{mark};')
    for u in g.nodes:
        for v, mult in g.succ.get(u, {}).items():
            label = f' [label="{mult}"]' if mult > 1 else ""
            lines.append(f'  "{u}" -> "{v}"{label};')
    lines.append("}")
    return "\n".join(lines) + "\n"
