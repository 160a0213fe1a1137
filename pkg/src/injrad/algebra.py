"""Basic connected bound quiver algebras with monomial relations.

An algebra is ``k Q / I`` where ``k = GF(p)`` and ``I`` is generated by
paths of length at least two.  Its basis consists of the *normal* paths,
those containing no relation as a consecutive subword; the Jacobson radical
``J`` is spanned by the normal paths of positive length and ``J^k`` by those
of length at least ``k``.

Paths compose left to right, matching the right-module convention used
throughout the package: for arrows ``a: i -> j`` and ``b: j -> k`` the word
``ab`` is a path from ``i`` to ``k``.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BadRelation, InfiniteDimensional, InvalidKupisch, NotConnected
from .exactlinalg import FieldSpec

DEFAULT_PRIME = 101
DEFAULT_MAX_PATH_LEN = 64


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """A finite quiver on vertices ``1..vertex_count``; arrow ids are tuple positions."""

    vertex_count: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        object.__setattr__(self, "arrows", tuple(self.arrows))
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate arrow names in {names}")
        for a in self.arrows:
            if not (1 <= a.source <= self.vertex_count and 1 <= a.target <= self.vertex_count):
                raise ValueError(f"arrow {a.name} has an endpoint outside 1..{self.vertex_count}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], prefix: str = "a") -> Quiver:
        """Quiver with arrows named ``a1, a2, ...`` in the given edge order."""
        return cls(n, tuple(Arrow(f"{prefix}{k + 1}", s, t) for k, (s, t) in enumerate(edges)))

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def arrows_from(self, i: int) -> list[int]:
        return [k for k, a in enumerate(self.arrows) if a.source == i]

    def arrows_to(self, i: int) -> list[int]:
        return [k for k, a in enumerate(self.arrows) if a.target == i]

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.name == name:
                return k
        raise KeyError(name)

    def arrow_count(self, i: int, j: int) -> int:
        return sum(1 for a in self.arrows if a.source == i and a.target == j)

    @cached_property
    def is_connected(self) -> bool:
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {1}
        todo = [1]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.vertex_count

    def reversed(self) -> Quiver:
        return Quiver(self.vertex_count, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))


class PathWord:
    """A path in a quiver; the empty arrow sequence is the idempotent ``e_start``.

    Paths order by length, then lexicographically by arrow ids, then by start.
    """

    __slots__ = ("start", "arrows", "_key")

    def __init__(self, start: int, arrows: Sequence[int] = ()):
        self.start = int(start)
        self.arrows = tuple(int(x) for x in arrows)
        self._key = (len(self.arrows), self.arrows, self.start)

    def __len__(self) -> int:
        return len(self.arrows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PathWord) and self._key == other._key

    def __lt__(self, other: PathWord) -> bool:
        return self._key < other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"PathWord({self.start}, {self.arrows})"

    def __reduce__(self):
        return (PathWord, (self.start, self.arrows))

    def end(self, quiver: Quiver) -> int:
        return quiver.arrows[self.arrows[-1]].target if self.arrows else self.start

    def is_composable(self, quiver: Quiver) -> bool:
        if self.arrows and quiver.arrows[self.arrows[0]].source != self.start:
            return False
        return all(
            quiver.arrows[x].target == quiver.arrows[y].source
            for x, y in zip(self.arrows, self.arrows[1:])
        )

    def label(self, quiver: Quiver) -> str:
        if not self.arrows:
            return f"e{self.start}"
        return "*".join(quiver.arrows[k].name for k in self.arrows)


def path_from_names(quiver: Quiver, names: Sequence[str]) -> PathWord:
    ids = [quiver.arrow_index(n) for n in names]
    if not ids:
        raise BadRelation("empty path")
    return PathWord(quiver.arrows[ids[0]].source, ids)


class Algebra:
    """``GF(p) Q / <relations>`` for monomial relations; treat as immutable."""

    def __init__(
        self,
        field: FieldSpec,
        quiver: Quiver,
        relations: Sequence[PathWord],
        max_path_len: int = DEFAULT_MAX_PATH_LEN,
    ):
        if not quiver.is_connected:
            raise NotConnected(f"quiver on {quiver.vertex_count} vertices is not connected")
        for r in relations:
            if len(r) < 2:
                raise BadRelation(f"relation {r.label(quiver) if r.arrows else r} has length < 2")
            if not r.is_composable(quiver):
                raise BadRelation(f"relation {r.label(quiver)} is not a composable path")
        self.field = field
        self.quiver = quiver
        self.relations = tuple(relations)
        self.max_path_len = max_path_len
        self._rel_words = frozenset(r.arrows for r in self.relations)
        self._rel_lengths = sorted({len(w) for w in self._rel_words})
        self.basis = self._enumerate_basis()
        self.index = {(p.start, p.arrows): k for k, p in enumerate(self.basis)}
        self.loewy_length = 1 + max(len(p) for p in self.basis)
        self.radical_layers = tuple(
            tuple(p for p in self.basis if len(p) == k) for k in range(self.loewy_length)
        )
        self._opposite: Algebra | None = None

    def _ends_with_relation(self, word: tuple[int, ...]) -> bool:
        for n in self._rel_lengths:
            if n > len(word):
                break
            if word[-n:] in self._rel_words:
                return True
        return False

    def _enumerate_basis(self) -> tuple[PathWord, ...]:
        q = self.quiver
        out = [PathWord(i) for i in q.vertices]
        layer = list(out)
        length = 0
        while layer:
            if length >= self.max_path_len:
                raise InfiniteDimensional(
                    f"normal paths of length {self.max_path_len} exist; the algebra is not finite dimensional"
                    " (or max_path_len is too small)"
                )
            nxt = []
            for p in layer:
                for k in q.arrows_from(p.end(q)):
                    w = p.arrows + (k,)
                    if not self._ends_with_relation(w):
                        nxt.append(PathWord(p.start, w))
            nxt.sort()
            out.extend(nxt)
            layer = nxt
            length += 1
        return tuple(out)

    # basic accessors --------------------------------------------------------

    @property
    def n(self) -> int:
        return self.quiver.vertex_count

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def is_semisimple(self) -> bool:
        return not self.quiver.arrows

    def end(self, p: PathWord) -> int:
        return p.end(self.quiver)

    def is_normal(self, p: PathWord) -> bool:
        return (p.start, p.arrows) in self.index

    def multiply(self, p: PathWord, q: PathWord) -> PathWord | None:
        """The product ``p * q`` as a basis path, or None when it is zero."""
        if self.end(p) != q.start:
            return None
        key = (p.start, p.arrows + q.arrows)
        k = self.index.get(key)
        return None if k is None else self.basis[k]

    def paths_from(self, i: int) -> list[PathWord]:
        return [p for p in self.basis if p.start == i]

    def paths_to(self, j: int) -> list[PathWord]:
        q = self.quiver
        return [p for p in self.basis if p.end(q) == j]

    def label(self, p: PathWord) -> str:
        return p.label(self.quiver)

    @cached_property
    def minimal_relations(self) -> tuple[PathWord, ...]:
        """Relations not containing another relation as a proper subword."""
        words = self._rel_words

        def reducible(w: tuple[int, ...]) -> bool:
            n = len(w)
            return any(w[s:e] in words for s in range(n) for e in range(s + 1, n + 1) if e - s < n)

        keep = [r for r in self.relations if not reducible(r.arrows)]
        return tuple(sorted(set(keep)))

    @property
    def opposite(self) -> Algebra:
        if self._opposite is None:
            op = opposite(self)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def __repr__(self) -> str:
        rels = ", ".join(self.label(r) for r in self.relations)
        arrows = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.quiver.arrows)
        return f"Algebra(GF({self.field.prime}); {arrows}; rel [{rels}]; dim {self.dimension})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.quiver == other.quiver
            and set(self.minimal_relations) == set(other.minimal_relations)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.quiver, frozenset(self.minimal_relations)))

    def __reduce__(self):
        return (Algebra, (self.field, self.quiver, self.relations, self.max_path_len))


def build_monomial_algebra(
    field: FieldSpec,
    quiver: Quiver,
    relations: Sequence[PathWord] = (),
    max_path_len: int = DEFAULT_MAX_PATH_LEN,
) -> Algebra:
    return Algebra(field, quiver, relations, max_path_len)


@dataclass(frozen=True)
class KupischSeries:
    """Composition lengths ``(c_1, ..., c_n)`` of the indecomposable projectives."""

    shape: str
    lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(c) for c in self.lengths))
        if self.shape not in ("linear", "cyclic"):
            raise InvalidKupisch(f"shape must be 'linear' or 'cyclic', got {self.shape!r}")
        if not is_admissible_kupisch(self.shape, self.lengths):
            raise InvalidKupisch(f"{self.shape} Kupisch series {list(self.lengths)} is not admissible")


def is_admissible_kupisch(shape: str, c: Sequence[int]) -> bool:
    n = len(c)
    if n == 0:
        return False
    if shape == "linear":
        if n < 2 or c[-1] != 1:
            return False
        return all(c[i] >= 2 and c[i] <= c[i + 1] + 1 for i in range(n - 1))
    return all(c[i] >= 2 and c[i] <= c[(i + 1) % n] + 1 for i in range(n))


def nakayama_from_kupisch(field: FieldSpec, k: KupischSeries) -> Algebra:
    c = k.lengths
    n = len(c)
    if k.shape == "linear":
        edges = [(i, i + 1) for i in range(1, n)]
    else:
        edges = [(i, i % n + 1) for i in range(1, n + 1)]
    quiver = Quiver.from_edges(n, edges)
    relations = []
    for i in range(1, n + 1):
        length = c[i - 1]
        if k.shape == "linear" and i + length > n:
            continue
        # arrow id of i -> i+1 is i-1 in both shapes
        relations.append(PathWord(i, [(i - 1 + s) % n for s in range(length)]))
    return Algebra(field, quiver, relations, max_path_len=max(c) + 1)


def radical_square_zero(field: FieldSpec, quiver: Quiver) -> Algebra:
    if not quiver.is_connected:
        raise NotConnected("quiver is not connected")
    if not quiver.arrows:
        raise ValueError("radical_square_zero needs at least one arrow")
    rels = [
        PathWord(a.source, (x, y))
        for x, a in enumerate(quiver.arrows)
        for y in quiver.arrows_from(a.target)
    ]
    return Algebra(field, quiver, rels, max_path_len=3)


def opposite(a: Algebra) -> Algebra:
    """Arrows reversed (names kept) and relation words reversed."""
    q = a.quiver
    rels = [PathWord(q.arrows[r.arrows[-1]].target, r.arrows[::-1]) for r in a.relations]
    return Algebra(a.field, q.reversed(), rels, a.max_path_len)


def reverse_path(a: Algebra, p: PathWord) -> PathWord:
    """The path of ``a.opposite`` corresponding to ``p``."""
    return PathWord(a.end(p), p.arrows[::-1])


def ext_quiver(a: Algebra) -> Quiver:
    """Q(A): one arrow i -> j per basis element of e_i J e_j / e_i J^2 e_j."""
    q = a.quiver
    arrows = [q.arrows[p.arrows[0]] for p in a.radical_layers[1]] if a.loewy_length > 1 else []
    return Quiver(q.vertex_count, tuple(arrows))


# canonical forms -----------------------------------------------------------


def _vertex_invariant(q: Quiver, rels: Sequence[PathWord], v: int) -> tuple:
    loops = q.arrow_count(v, v)
    outs = sorted(q.arrow_count(v, w) for w in q.vertices if w != v)
    ins = sorted(q.arrow_count(w, v) for w in q.vertices if w != v)
    touching = sorted(len(r) for r in rels if r.start == v)
    return (loops, len(q.arrows_from(v)), len(q.arrows_to(v)), tuple(outs), tuple(ins), tuple(touching))


def _interchangeable(words: frozenset, x: int, y: int) -> bool:
    swap = {x: y, y: x}
    return frozenset(tuple(swap.get(k, k) for k in w) for w in words) == words


def canonical_form(a: Algebra) -> tuple:
    """Relabeling-invariant encoding of (prime, quiver, minimal relations).

    Brute force over vertex permutations that respect a cheap invariant, and
    over orderings of parallel arrows that the relations can tell apart.
    Fine for the desk-scale quivers this package handles.
    """
    q = a.quiver
    rels = a.minimal_relations
    words = frozenset(r.arrows for r in rels)
    parallel: dict[tuple[int, int], list[int]] = {}
    for k, arr in enumerate(q.arrows):
        parallel.setdefault((arr.source, arr.target), []).append(k)
    # parallel groups whose members are all interchangeable need one ordering only
    symmetric = {
        pr for pr, ids in parallel.items()
        if all(_interchangeable(words, x, y) for x, y in itertools.combinations(ids, 2))
    }
    classes: dict[tuple, list[int]] = {}
    for v in q.vertices:
        classes.setdefault(_vertex_invariant(q, rels, v), []).append(v)
    keys = sorted(classes)
    best = None
    for choice in itertools.product(*(itertools.permutations(classes[k]) for k in keys)):
        order = [v for block in choice for v in block]
        new = {v: i + 1 for i, v in enumerate(order)}
        groups = {(new[s], new[t]): (ids, (s, t) in symmetric) for (s, t), ids in parallel.items()}
        pairs = sorted(groups)
        options = [
            [tuple(groups[pr][0])] if groups[pr][1] else itertools.permutations(groups[pr][0])
            for pr in pairs
        ]
        edges = tuple(pr for pr in pairs for _ in groups[pr][0])
        for arrow_perm in itertools.product(*options):
            relabel = {}
            for ids in arrow_perm:
                for k in ids:
                    relabel[k] = len(relabel)
            key = (edges, tuple(sorted(tuple(relabel[x] for x in w) for w in words)))
            if best is None or key < best:
                best = key
    return (a.field.prime, q.vertex_count) + best


def algebra_id(a: Algebra) -> str:
    return hashlib.sha256(repr(canonical_form(a)).encode()).hexdigest()[:16]

