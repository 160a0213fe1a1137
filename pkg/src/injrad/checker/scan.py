"""Families of algebras: Nakayama algebras by Kupisch series and
radical-square-zero algebras by connected digraph."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from ..algebra import (
    Algebra,
    KupischSeries,
    Quiver,
    algebra_id,
    is_admissible_kupisch,
    nakayama_from_kupisch,
    radical_square_zero,
)
from ..exactlinalg import FieldSpec
from ..homology import DEFAULT_CAP, ExtDim, ext_eq
from .report import Report, check_algebra

# Kupisch series ------------------------------------------------------------------


def kupisch_series(shape: str, n: int, max_len: int | None = None) -> list[tuple[int, ...]]:
    """All admissible Kupisch series with exactly n entries, in lexicographic order.

    For the linear shape the entries are bounded by the quiver itself; for the
    cyclic shape ``max_len`` bounds every entry.
    """
    if shape == "linear":
        if n < 2:
            return []
        out = []

        def extend(suffix: tuple[int, ...]) -> None:
            if len(suffix) == n:
                out.append(suffix)
                return
            top = suffix[0] + 1 if max_len is None else min(suffix[0] + 1, max_len)
            for c in range(2, top + 1):
                extend((c,) + suffix)

        extend((1,))
        return sorted(out)
    if shape == "cyclic":
        if max_len is None:
            raise ValueError("cyclic Kupisch series need max_len")
        return [c for c in itertools.product(range(2, max_len + 1), repeat=n) if is_admissible_kupisch("cyclic", c)]
    raise ValueError(f"unknown shape {shape!r}")


def nakayama_family(
    shape: str, max_vertices: int, max_len: int | None = None, prime: int = 101
) -> Iterator[tuple[tuple[int, ...], Algebra]]:
    """Nakayama algebras of the given shape up to relabeling, smallest first."""
    field = FieldSpec(prime)
    seen: set[str] = set()
    first = 2 if shape == "linear" else 1
    for n in range(first, max_vertices + 1):
        for c in kupisch_series(shape, n, max_len):
            a = nakayama_from_kupisch(field, KupischSeries(shape, c))
            aid = algebra_id(a)
            if aid in seen:
                continue
            seen.add(aid)
            yield c, a


# digraphs ------------------------------------------------------------------------


def _connected(n: int, adj: tuple[tuple[int, ...], ...]) -> bool:
    seen = {0}
    todo = [0]
    while todo:
        u = todo.pop()
        for v in range(n):
            if (adj[u][v] or adj[v][u]) and v not in seen:
                seen.add(v)
                todo.append(v)
    return len(seen) == n


def _canonical_adjacency(n: int, adj) -> tuple[tuple[int, ...], ...]:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(tuple(adj[perm[i]][perm[j]] for j in range(n)) for i in range(n))
        if best is None or key > best:
            best = key
    return best


def connected_digraphs(max_vertices: int, max_multiplicity: int = 2) -> list[tuple[tuple[int, ...], ...]]:
    """Connected digraphs with at least one arrow, loops allowed, up to isomorphism.

    Each digraph is an adjacency matrix of arrow multiplicities in canonical
    form (the lexicographically largest relabeling).
    """
    out = []
    for n in range(1, max_vertices + 1):
        found = set()
        for vals in itertools.product(range(max_multiplicity + 1), repeat=n * n):
            if not any(vals):
                continue
            adj = tuple(vals[i * n : (i + 1) * n] for i in range(n))
            if not _connected(n, adj):
                continue
            found.add(_canonical_adjacency(n, adj))
        out.extend(sorted(found, reverse=True))
    return out


def quiver_from_adjacency(adj) -> Quiver:
    n = len(adj)
    edges = [(i + 1, j + 1) for i in range(n) for j in range(n) for _ in range(adj[i][j])]
    return Quiver.from_edges(n, edges)


def longest_path(adj) -> int | None:
    """Length of the longest directed path, or None if there is a directed cycle."""
    n = len(adj)
    memo: dict[int, int] = {}
    state = [0] * n

    def visit(u: int) -> int | None:
        if state[u] == 1:
            return None
        if state[u] == 2:
            return memo[u]
        state[u] = 1
        best = 0
        for v in range(n):
            if adj[u][v]:
                d = visit(v)
                if d is None:
                    return None
                best = max(best, d + 1)
        state[u] = 2
        memo[u] = best
        return best

    total = 0
    for u in range(n):
        d = visit(u)
        if d is None:
            return None
        total = max(total, d)
    return total


def radsq_family(max_vertices: int, prime: int = 101) -> Iterator[tuple[str, Algebra, tuple]]:
    field = FieldSpec(prime)
    for adj in connected_digraphs(max_vertices):
        a = radical_square_zero(field, quiver_from_adjacency(adj))
        yield f"radsq {[list(r) for r in adj]}", a, adj


# evaluation ------------------------------------------------------------------------


def _acyclic_check(report: Report, adj) -> dict:
    depth = longest_path(adj)
    if depth is None:
        return {"status": "NotApplicable", "longest_path": None}
    ok = ext_eq(report.gldim, ExtDim.finite(depth))
    return {"status": "Confirmed" if ok else "Violated", "longest_path": depth}


def _nakayama_task(args) -> Report:
    shape, lengths, prime, cap, seed = args
    a = nakayama_from_kupisch(FieldSpec(prime), KupischSeries(shape, lengths))
    return check_algebra(a, cap, seed, source=f"kupisch {shape} {list(lengths)}")


def _radsq_task(args) -> Report:
    adj, prime, cap, seed = args
    a = radical_square_zero(FieldSpec(prime), quiver_from_adjacency(adj))
    report = check_algebra(a, cap, seed, source=f"radsq {[list(r) for r in adj]}")
    report.checks["acyclic_longest_path"] = _acyclic_check(report, adj)
    return report


def _run(task, items: list, jobs: int) -> Iterator[Report]:
    if jobs <= 1 or len(items) < 2:
        for it in items:
            yield task(it)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields in submission order, so output order never depends on scheduling
        yield from pool.map(task, items, chunksize=8)


def scan_nakayama(
    shape: str,
    max_vertices: int,
    max_len: int | None = None,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    prime: int = 101,
    jobs: int = 1,
) -> Iterator[Report]:
    if shape == "linear" and max_vertices < 2:
        raise ValueError("linear scans need max_vertices >= 2")
    if max_vertices < 1:
        raise ValueError("max_vertices must be positive")
    items = [(shape, c, prime, cap, seed) for c, _ in nakayama_family(shape, max_vertices, max_len, prime)]
    return _run(_nakayama_task, items, jobs)


def scan_radical_square_zero(
    max_vertices: int,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    prime: int = 101,
    jobs: int = 1,
) -> Iterator[Report]:
    if max_vertices < 1:
        raise ValueError("max_vertices must be positive")
    items = [(adj, prime, cap, seed) for adj in connected_digraphs(max_vertices)]
    return _run(_radsq_task, items, jobs)
