"""Syzygies, minimal projective resolutions and homological dimensions.

Dimensions are :class:`ExtDim` values.  A dimension is either determined
(``-inf`` for the zero module, a finite value, or ``inf`` with a
certificate) or only bounded below (``AtLeast``) when the computation was
truncated.  Comparisons between such values are three-valued: ``True``,
``False`` or ``None`` for unknown.

Infinity is certified in two independent ways:

* the path-syzygy graph of a monomial algebra, where the syzygy of a path
  module ``pA`` is the direct sum of the ``qA`` over the minimal normal
  continuations ``q`` with ``pq = 0``; a reachable cycle means an infinite
  resolution;
* syzygy recurrence for arbitrary modules: if ``Omega^k M`` is isomorphic to
  (a direct summand of) ``Omega^n M`` with ``k < n`` and ``Omega^k M != 0``,
  the syzygies never vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .algebra import Algebra, PathWord, ext_quiver
from .errors import Inconclusive, ZeroModule
from .modules import (
    ModuleMap,
    Representation,
    dual,
    find_isomorphism,
    is_injective_envelope_iso,
    kernel,
    projective,
    projective_cover,
    regular_module,
    simple,
    split_embedding,
    top_dims,
)

DEFAULT_CAP = 64
MAX_SYZYGY_DIM = 240

_INF = float("inf")


# certificates ----------------------------------------------------------------


@dataclass(frozen=True)
class PathCycle:
    """A directed cycle in the path-syzygy graph, reachable from the module's node."""

    paths: tuple[str, ...]

    def to_json(self) -> dict:
        return {"type": "path_cycle", "paths": list(self.paths)}


@dataclass(frozen=True)
class SyzygyPeriodicity:
    """``Omega^earlier`` is isomorphic to, or a direct summand of, ``Omega^later``."""

    earlier: int
    later: int
    relation: str = "isomorphic"
    witness: tuple = field(default=(), compare=False, repr=False)

    def to_json(self) -> dict:
        return {"type": "syzygy_periodicity", "from": self.earlier, "to": self.later, "relation": self.relation}


Certificate = Union[PathCycle, SyzygyPeriodicity]


def certificate_from_json(d: dict) -> Certificate:
    if d["type"] == "path_cycle":
        return PathCycle(tuple(d["paths"]))
    if d["type"] == "syzygy_periodicity":
        return SyzygyPeriodicity(int(d["from"]), int(d["to"]), d.get("relation", "isomorphic"))
    raise ValueError(f"unknown certificate type {d['type']!r}")


# extended dimension values -----------------------------------------------------


@dataclass(frozen=True)
class ExtDim:
    """A homological dimension: ``neginf``, ``finite``, ``atleast`` or ``infinite``.

    ``value`` is the dimension for ``finite`` and the certified lower bound
    for ``atleast``.
    """

    kind: str
    value: int | None = None
    certificate: Certificate | None = None

    def __post_init__(self):
        if self.kind not in ("neginf", "finite", "atleast", "infinite"):
            raise ValueError(f"bad ExtDim kind {self.kind!r}")
        if self.kind in ("finite", "atleast") and (self.value is None or self.value < 0):
            raise ValueError(f"{self.kind} needs a nonnegative value")

    @classmethod
    def finite(cls, n: int) -> ExtDim:
        return cls("finite", int(n))

    @classmethod
    def at_least(cls, bound: int) -> ExtDim:
        return cls("atleast", int(bound))

    @classmethod
    def infinite(cls, certificate: Certificate | None = None) -> ExtDim:
        return cls("infinite", None, certificate)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    @property
    def is_determined(self) -> bool:
        return self.kind != "atleast"

    @property
    def bounds(self) -> tuple[float, float]:
        if self.kind == "neginf":
            return (-_INF, -_INF)
        if self.kind == "finite":
            return (self.value, self.value)
        if self.kind == "atleast":
            return (self.value, _INF)
        return (_INF, _INF)

    @classmethod
    def from_bounds(cls, lo: float, hi: float, certificate: Certificate | None = None) -> ExtDim:
        if lo == hi:
            if lo == -_INF:
                return NEG_INF
            if lo == _INF:
                return cls.infinite(certificate)
            return cls.finite(int(lo))
        return cls.at_least(max(0, int(lo)) if lo != -_INF else 0)

    def shift(self, k: int) -> ExtDim:
        """The value plus k (infinities and lower bounds shift accordingly)."""
        lo, hi = self.bounds
        if self.kind == "finite" and self.value + k < 0:
            return NEG_INF
        if self.kind == "atleast":
            return ExtDim.at_least(max(0, self.value + k))
        return ExtDim.from_bounds(lo + k, hi + k, self.certificate)

    def __str__(self) -> str:
        return {"neginf": "-inf", "infinite": "inf"}.get(self.kind) or (
            str(self.value) if self.kind == "finite" else f">={self.value}"
        )

    def to_json(self) -> dict:
        if self.kind == "finite":
            return {"kind": "finite", "n": self.value}
        if self.kind == "atleast":
            return {"kind": "atleast", "cap": self.value}
        if self.kind == "infinite":
            cert = self.certificate.to_json() if self.certificate is not None else None
            return {"kind": "infinite", "certificate": cert}
        return {"kind": "neginf"}

    @classmethod
    def from_json(cls, d: dict) -> ExtDim:
        kind = d["kind"]
        if kind == "finite":
            return cls.finite(d["n"])
        if kind == "atleast":
            return cls.at_least(d["cap"])
        if kind == "infinite":
            cert = d.get("certificate")
            return cls.infinite(certificate_from_json(cert) if cert else None)
        if kind == "neginf":
            return NEG_INF
        raise ValueError(f"unknown ExtDim kind {kind!r}")


NEG_INF = ExtDim("neginf")


def ext_le(x: ExtDim, y: ExtDim) -> bool | None:
    """Three-valued ``x <= y``."""
    (xlo, xhi), (ylo, yhi) = x.bounds, y.bounds
    if xhi <= ylo:
        return True
    if xlo > yhi:
        return False
    return None


def ext_ge(x: ExtDim, y: ExtDim) -> bool | None:
    return ext_le(y, x)


def ext_eq(x: ExtDim, y: ExtDim) -> bool | None:
    (xlo, xhi), (ylo, yhi) = x.bounds, y.bounds
    if xlo == xhi == ylo == yhi:
        return True
    if xhi < ylo or yhi < xlo:
        return False
    return None


def ext_max(*values: ExtDim) -> ExtDim:
    if not values:
        return NEG_INF
    lo = max(v.bounds[0] for v in values)
    hi = max(v.bounds[1] for v in values)
    cert = next((v.certificate for v in values if v.is_infinite), None)
    return ExtDim.from_bounds(lo, hi, cert)


# resolutions -------------------------------------------------------------------


@dataclass
class ResolutionTerm:
    """``P_n`` with its Betti multiplicities and ``d_n: P_n -> P_(n-1)`` (``P_0 -> M`` for n = 0)."""

    multiplicities: tuple[int, ...]
    projective: Representation
    differential: ModuleMap


@dataclass
class Resolution:
    module: Representation
    terms: list[ResolutionTerm]
    syzygies: list[Representation]
    dimension: ExtDim

    @property
    def complete(self) -> bool:
        return self.dimension.is_determined

    def betti(self, n: int) -> tuple[int, ...] | None:
        """Multiplicities of the n-th term (the top of the n-th syzygy).

        Zeros past a finite end, None past truncation.
        """
        if n < len(self.terms):
            return self.terms[n].multiplicities
        if n < len(self.syzygies):
            return top_dims(self.syzygies[n])
        if self.dimension.kind in ("finite", "neginf"):
            return (0,) * self.module.algebra.n
        return None


def syzygy(m: Representation) -> Representation:
    """``Omega(M)``, the kernel of the projective cover."""
    _, cover, _ = projective_cover(m)
    return kernel(cover)[0]


def _find_recurrence(
    later: Representation, earlier: list[Representation], seed
) -> SyzygyPeriodicity | None:
    n = len(earlier)
    for k, prev in enumerate(earlier):
        if prev.is_zero():
            continue
        try:
            if prev.dims == later.dims:
                iso = find_isomorphism(prev, later, seed)
                if iso is not None:
                    return SyzygyPeriodicity(k, n, "isomorphic", (iso,))
                continue
        except Inconclusive:
            continue
        pair = split_embedding(prev, later, seed)
        if pair is not None:
            return SyzygyPeriodicity(k, n, "summand", pair)
    return None


def resolve(
    m: Representation,
    cap: int = DEFAULT_CAP,
    seed=0,
    detect_periodicity: bool = True,
    max_dim: int = MAX_SYZYGY_DIM,
) -> Resolution:
    """Minimal projective resolution of M, computed through ``Omega^cap`` at most.

    Stops early when a syzygy is projective (finite dimension), when a
    syzygy recurrence certifies an infinite resolution, or when a syzygy
    exceeds ``max_dim`` in total dimension (lower bound only).
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    syz = [m]
    terms: list[ResolutionTerm] = []
    if m.is_zero():
        return Resolution(m, terms, syz, NEG_INF)
    incl = None
    n = 0
    while True:
        cur = syz[n]
        p, cover, mult = projective_cover(cur)
        diff = cover if incl is None else cover.then(incl)
        terms.append(ResolutionTerm(mult, p, diff))
        nxt, incl = kernel(cover)
        if nxt.is_zero():
            return Resolution(m, terms, syz, ExtDim.finite(n))
        if detect_periodicity:
            cert = _find_recurrence(nxt, syz, seed)
            if cert is not None:
                # Omega^(n+1) is kept so that its Betti numbers stay readable
                syz.append(nxt)
                return Resolution(m, terms, syz, ExtDim.infinite(cert))
        syz.append(nxt)
        if n >= cap or nxt.total_dim > max_dim:
            return Resolution(m, terms, syz, ExtDim.at_least(n + 1))
        n += 1


def projective_dimension(m: Representation, cap: int = DEFAULT_CAP, seed=0, detect_periodicity: bool = True) -> ExtDim:
    if cap < 1:
        raise ValueError("cap must be at least 1")
    return resolve(m, cap, seed, detect_periodicity).dimension


def injective_dimension(m: Representation, cap: int = DEFAULT_CAP, seed=0, detect_periodicity: bool = True) -> ExtDim:
    """``id_A(M) = pd_(A^op)(D M)``."""
    return projective_dimension(dual(m), cap, seed, detect_periodicity)


def ext_dim(n: int, m: Representation, i: int, cap: int = DEFAULT_CAP, seed=0) -> int | None:
    """``dim Ext^n(M, S_i)``, the multiplicity of ``P_i`` in the n-th resolution term.

    None when ``n`` lies beyond the cap or the computation was truncated.
    """
    if n > cap:
        return None
    res = resolve(m, n, seed, detect_periodicity=False)
    b = res.betti(n)
    return None if b is None else b[i - 1]


# path-syzygy graph ---------------------------------------------------------------


def _minimal_zero_continuations(a: Algebra, p: PathWord) -> list[PathWord]:
    end = a.end(p)
    q = a.quiver
    out = []
    stack = [()]
    while stack:
        w = stack.pop()
        for x in q.arrows_from(a.end(PathWord(end, w)) if w else end):
            cont = w + (x,)
            if (end, cont) not in a.index:
                continue
            if (p.start, p.arrows + cont) in a.index:
                stack.append(cont)
            else:
                out.append(PathWord(end, cont))
    return sorted(out)


def path_syzygy_graph(a: Algebra) -> dict[PathWord, list[PathWord]]:
    """Successor lists on trivial and nontrivial normal paths.

    The node of a trivial path ``e_i`` stands for the simple ``S_i`` (its
    syzygy is the sum of the ``xA`` over arrows x starting at i); a node p of
    positive length stands for the path module ``pA``.
    """
    key = "_path_graph"
    if key in a.__dict__:
        return a.__dict__[key]
    q = a.quiver
    graph: dict[PathWord, list[PathWord]] = {}
    for p in a.basis:
        if not p.arrows:
            graph[p] = [PathWord(p.start, (x,)) for x in q.arrows_from(p.start)]
        else:
            graph[p] = _minimal_zero_continuations(a, p)
    a.__dict__[key] = graph
    return graph


def _graph_depths(a: Algebra) -> dict[PathWord, ExtDim]:
    """Longest path to a sink from each node, or infinite with a reachable cycle."""
    key = "_path_depths"
    if key in a.__dict__:
        return a.__dict__[key]
    graph = path_syzygy_graph(a)
    depth: dict[PathWord, ExtDim] = {}
    on_stack: dict[PathWord, int] = {}
    for root in graph:
        if root in depth:
            continue
        stack = [(root, iter(graph[root]))]
        trail = [root]
        on_stack[root] = 0
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt in on_stack:
                    cycle = tuple(a.label(x) for x in trail[on_stack[nxt]:]) + (a.label(nxt),)
                    for x in trail:
                        depth[x] = ExtDim.infinite(PathCycle(cycle))
                    continue
                if nxt not in depth:
                    on_stack[nxt] = len(trail)
                    trail.append(nxt)
                    stack.append((nxt, iter(graph[nxt])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            trail.pop()
            del on_stack[node]
            succ = [depth[x] for x in graph[node]]
            if node in depth and depth[node].is_infinite:
                continue
            inf = next((d for d in succ if d.is_infinite), None)
            if inf is not None:
                depth[node] = inf
            else:
                depth[node] = ExtDim.finite(1 + max(d.value for d in succ)) if succ else ExtDim.finite(0)
    a.__dict__[key] = depth
    return depth


def path_module_pd(a: Algebra, p: PathWord) -> ExtDim:
    """pd of ``pA`` (for a trivial path: pd of the simple at its vertex)."""
    return _graph_depths(a)[p]


def global_dimension_by_path_graph(a: Algebra) -> ExtDim:
    depths = _graph_depths(a)
    return ext_max(*(depths[PathWord(i)] for i in a.quiver.vertices))


def global_dimension_by_simples(a: Algebra, cap: int = DEFAULT_CAP, seed=0) -> ExtDim:
    return ext_max(*(projective_dimension(simple(a, i), cap, seed) for i in a.quiver.vertices))


class AuslanderDisagreement(RuntimeError):
    pass


def global_dimension(a: Algebra, cap: int = DEFAULT_CAP, seed=0, verify: bool = True) -> ExtDim:
    """gldim as the maximum pd of the simples, from the path graph.

    With ``verify`` the value is recomputed from explicit syzygies of the
    simples, and a determined disagreement raises AuslanderDisagreement.
    """
    primary = global_dimension_by_path_graph(a)
    if verify:
        cap_eff = min(cap, primary.value) if primary.is_finite else cap
        secondary = global_dimension_by_simples(a, max(cap_eff, 1), seed)
        if ext_eq(primary, secondary) is False:
            raise AuslanderDisagreement(f"path graph gives {primary}, syzygies give {secondary}")
    return primary


# predicates --------------------------------------------------------------------


def is_injective_module(m: Representation, cap: int = DEFAULT_CAP) -> bool:
    if m.is_zero():
        raise ZeroModule("injectivity of the zero module")
    return is_injective_envelope_iso(m)


def is_local(a: Algebra) -> bool:
    return a.n == 1


def is_selfinjective(a: Algebra, cap: int = DEFAULT_CAP) -> bool:
    return all(is_injective_module(projective(a, i), cap) for i in a.quiver.vertices)


def is_nakayama(a: Algebra) -> bool:
    """Every indecomposable projective and injective is uniserial.

    For a monomial algebra the k-th radical layer of ``e_i A`` is spanned by
    the paths of length k from i, and dually for ``D(A e_i)``.
    """
    q = a.quiver
    for p_len in range(1, a.loewy_length):
        layer = a.radical_layers[p_len]
        for i in q.vertices:
            if sum(1 for p in layer if p.start == i) > 1:
                return False
            if sum(1 for p in layer if a.end(p) == i) > 1:
                return False
    return True


@dataclass(frozen=True)
class GorensteinResult:
    right: ExtDim
    left: ExtDim
    verdict: str

    @property
    def dimension(self) -> ExtDim | None:
        return self.right if self.verdict == "Gorenstein" else None


def gorenstein_dimension(a: Algebra, cap: int = DEFAULT_CAP, seed=0) -> GorensteinResult:
    right = injective_dimension(regular_module(a), cap, seed)
    left = injective_dimension(regular_module(a.opposite), cap, seed)
    if right.is_finite and left.is_finite:
        verdict = "Gorenstein" if right.value == left.value else "NotGorenstein"
    elif not right.is_determined or not left.is_determined:
        verdict = "Undetermined"
    else:
        verdict = "NotGorenstein"
    return GorensteinResult(right, left, verdict)


def incoming_arrows(a: Algebra) -> dict[int, int]:
    qa = ext_quiver(a)
    return {i: len(qa.arrows_to(i)) for i in qa.vertices}
