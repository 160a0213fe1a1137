"""Right modules over a monomial algebra, realized as quiver representations.

A module ``M`` is given by vertex spaces ``M e_i`` of dimension ``d_i`` and,
for every arrow ``a: i -> j``, a ``d_i x d_j`` matrix: a row vector ``m`` at
vertex ``i`` is sent to ``m @ M_a`` at vertex ``j``.  A homomorphism
``f: M -> N`` is a family of ``d_i(M) x d_i(N)`` matrices with
``f_i @ N_a == M_a @ f_j`` for every arrow.

Injective modules are produced through the duality ``D = Hom_k(-, k)``,
which takes right ``A``-modules to right ``A^op``-modules.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .algebra import Algebra, PathWord
from .errors import Inconclusive, ZeroModule

EXHAUSTIVE_LIMIT = 4096
ISO_SAMPLES = 256
SUMMAND_TRIALS = 48


class Representation:
    """A finite-dimensional right module; immutable by convention."""

    __slots__ = ("algebra", "dims", "maps", "_probe")

    def __init__(self, algebra: Algebra, dims: Sequence[int], maps: Sequence[np.ndarray], check: bool = True):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        self.maps = tuple(maps)
        self._probe: dict = {}
        if check:
            self._validate()

    def _validate(self) -> None:
        a = self.algebra
        q = a.quiver
        if len(self.dims) != q.vertex_count or len(self.maps) != len(q.arrows):
            raise ValueError("dims/maps do not match the quiver")
        for arr, mat in zip(q.arrows, self.maps):
            if mat.shape != (self.dims[arr.source - 1], self.dims[arr.target - 1]):
                raise ValueError(f"arrow {arr.name}: matrix shape {mat.shape} does not match dims")
        f = a.field
        for r in a.relations:
            if any(self.dims[q.arrows[x].source - 1] == 0 for x in r.arrows):
                continue
            prod = self.maps[r.arrows[0]]
            for x in r.arrows[1:]:
                prod = f.matmul(prod, self.maps[x])
            if prod.any():
                raise ValueError(f"relation {a.label(r)} does not act as zero")

    @property
    def field(self):
        return self.algebra.field

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def is_semisimple(self) -> bool:
        if "ss" not in self._probe:
            self._probe["ss"] = not any(m.any() for m in self.maps)
        return self._probe["ss"]

    def arrow_map(self, name: str) -> np.ndarray:
        return self.maps[self.algebra.quiver.arrow_index(name)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Representation)
            and self.algebra is other.algebra
            and self.dims == other.dims
            and all(np.array_equal(x, y) for x, y in zip(self.maps, other.maps))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Representation(dims={list(self.dims)})"


class ModuleMap:
    """A module homomorphism ``source -> target`` given by per-vertex matrices."""

    __slots__ = ("source", "target", "maps")

    def __init__(self, source: Representation, target: Representation, maps: Sequence[np.ndarray], check: bool = False):
        self.source = source
        self.target = target
        self.maps = tuple(maps)
        if check and not self.is_homomorphism():
            raise ValueError("vertex maps do not commute with the arrow maps")

    def is_homomorphism(self) -> bool:
        f = self.source.field
        for k, arr in enumerate(self.source.algebra.quiver.arrows):
            i, j = arr.source - 1, arr.target - 1
            left = f.matmul(self.maps[i], self.target.maps[k])
            right = f.matmul(self.source.maps[k], self.maps[j])
            if not np.array_equal(left, right):
                return False
        return True

    def then(self, other: ModuleMap) -> ModuleMap:
        """Composite ``other o self``."""
        f = self.source.field
        return ModuleMap(self.source, other.target, [f.matmul(x, y) for x, y in zip(self.maps, other.maps)])

    def ranks(self) -> list[int]:
        f = self.source.field
        return [f.rank(m) if m.size else 0 for m in self.maps]

    def is_injective(self) -> bool:
        return self.ranks() == list(self.source.dims)

    def is_surjective(self) -> bool:
        return self.ranks() == list(self.target.dims)

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()


# constructions --------------------------------------------------------------


def _cache(a: Algebra) -> dict:
    c = a.__dict__.get("_module_cache")
    if c is None:
        c = a.__dict__["_module_cache"] = {}
    return c


def _path_span(a: Algebra, paths: Sequence[PathWord], cutoff: int | None = None) -> Representation:
    """Module spanned by basis paths, acting by right concatenation.

    ``paths`` must be a set of basis paths closed under right multiplication
    modulo paths of length ``>= cutoff`` (which act as zero).
    """
    q = a.quiver
    member = set(paths)
    at: dict[int, list[PathWord]] = {v: [] for v in q.vertices}
    for p in sorted(member):
        at[a.end(p)].append(p)
    pos = {p: k for v in q.vertices for k, p in enumerate(at[v])}
    dims = [len(at[v]) for v in q.vertices]
    maps = []
    for x, arr in enumerate(q.arrows):
        m = np.zeros((dims[arr.source - 1], dims[arr.target - 1]), dtype=np.int64)
        step = PathWord(arr.source, (x,))
        for p in at[arr.source]:
            r = a.multiply(p, step)
            if r is not None and r in member and (cutoff is None or len(r) < cutoff):
                m[pos[p], pos[r]] = 1
        maps.append(m)
    return Representation(a, dims, maps, check=False)


def zero_module(a: Algebra) -> Representation:
    q = a.quiver
    return Representation(a, [0] * q.vertex_count, [np.zeros((0, 0), dtype=np.int64) for _ in q.arrows], check=False)


def _check_vertex(a: Algebra, i: int) -> None:
    if not 1 <= i <= a.n:
        raise IndexError(f"vertex {i} outside 1..{a.n}")


def simple(a: Algebra, i: int) -> Representation:
    _check_vertex(a, i)
    key = ("S", i)
    c = _cache(a)
    if key not in c:
        c[key] = _path_span(a, [PathWord(i)])
    return c[key]


def projective(a: Algebra, i: int) -> Representation:
    """``e_i A``: basis at vertex j are the normal paths from i to j."""
    _check_vertex(a, i)
    key = ("P", i)
    c = _cache(a)
    if key not in c:
        c[key] = _path_span(a, a.paths_from(i))
    return c[key]


def injective(a: Algebra, i: int) -> Representation:
    """``D(A e_i)``, the dual of the i-th projective of the opposite algebra."""
    _check_vertex(a, i)
    key = ("I", i)
    c = _cache(a)
    if key not in c:
        c[key] = dual(projective(a.opposite, i))
    return c[key]


def regular_module(a: Algebra) -> Representation:
    return radical_power_module(a, 0)


def radical_power_module(a: Algebra, k: int) -> Representation:
    """``J^k``, spanned by the basis paths of length at least k (k=0: ``A_A``)."""
    key = ("J", k)
    c = _cache(a)
    if key not in c:
        c[key] = _path_span(a, [p for p in a.basis if len(p) >= k])
    return c[key]


def radical_layer_quotient(a: Algebra, k: int, l: int) -> Representation:
    """``J^k / J^l`` for ``k < l``."""
    if not k < l:
        raise ValueError(f"need k < l, got k={k}, l={l}")
    return _path_span(a, [p for p in a.basis if k <= len(p) < l], cutoff=l)


def dual(m: Representation) -> Representation:
    """``D(M)`` over the opposite algebra: same dims, transposed arrow maps."""
    return Representation(m.algebra.opposite, m.dims, [x.T.copy() for x in m.maps], check=False)


def dual_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(dual(f.target), dual(f.source), [x.T.copy() for x in f.maps])


def direct_sum(modules: Sequence[Representation]) -> Representation:
    if not modules:
        raise ValueError("empty direct sum")
    a = modules[0].algebra
    q = a.quiver
    dims = [sum(m.dims[v] for m in modules) for v in range(q.vertex_count)]
    maps = []
    for x, arr in enumerate(q.arrows):
        i, j = arr.source - 1, arr.target - 1
        out = np.zeros((dims[i], dims[j]), dtype=np.int64)
        r = c = 0
        for m in modules:
            out[r : r + m.dims[i], c : c + m.dims[j]] = m.maps[x]
            r += m.dims[i]
            c += m.dims[j]
        maps.append(out)
    return Representation(a, dims, maps, check=False)


def _rows(b, d: int) -> np.ndarray:
    b = np.asarray(b, dtype=np.int64)
    if d == 0 or b.size == 0:
        return np.zeros((0, d), dtype=np.int64)
    return b.reshape(-1, d)


def submodule(
    m: Representation,
    bases: Sequence[np.ndarray],
    check: bool = True,
    reduced: Sequence[tuple[np.ndarray, list[int]]] | None = None,
) -> tuple[Representation, ModuleMap]:
    """The submodule spanned at each vertex by the given rows, with its inclusion.

    The returned vertex bases are in reduced row echelon form, so restricting an
    arrow map only needs the pivot columns. Callers that already hold RREF
    bases with their pivots pass them as ``reduced`` to skip elimination.
    """
    f = m.field
    q = m.algebra.quiver
    if reduced is not None:
        red = list(reduced)
    else:
        red = [f.row_basis(_rows(b, m.dims[v])) for v, b in enumerate(bases)]
    dims = [len(piv) for _, piv in red]
    maps = []
    for x, arr in enumerate(q.arrows):
        bi, _ = red[arr.source - 1]
        bj, pj = red[arr.target - 1]
        image = f.matmul(bi, m.maps[x])
        restricted = image[:, pj] if dims[arr.target - 1] else np.zeros((dims[arr.source - 1], 0), dtype=np.int64)
        if check and not np.array_equal(f.matmul(restricted, bj), image):
            raise ValueError(f"subspaces are not closed under arrow {arr.name}")
        maps.append(restricted)
    sub = Representation(m.algebra, dims, maps, check=False)
    return sub, ModuleMap(sub, m, [b for b, _ in red])


def quotient(m: Representation, bases: Sequence[np.ndarray]) -> tuple[Representation, ModuleMap]:
    """``M / U`` for the submodule U spanned by ``bases``, with the projection."""
    f = m.field
    q = m.algebra.quiver
    projections = []
    for v, b in enumerate(bases):
        d = m.dims[v]
        basis, piv = f.row_basis(_rows(b, d))
        free = [c for c in range(d) if c not in set(piv)]
        # coordinates of M_v in the basis (U-basis, unit vectors at free columns)
        full = np.vstack([basis, np.eye(d, dtype=np.int64)[free]]) if d else np.zeros((0, 0), dtype=np.int64)
        inv = f.inverse(full) if d else full
        projections.append((inv[:, len(piv):], free))
    dims = [len(free) for _, free in projections]
    maps = []
    for x, arr in enumerate(q.arrows):
        _, free_i = projections[arr.source - 1]
        proj_j, _ = projections[arr.target - 1]
        rows = m.maps[x][free_i] if free_i else np.zeros((0, m.dims[arr.target - 1]), dtype=np.int64)
        maps.append(f.matmul(rows, proj_j))
    quo = Representation(m.algebra, dims, maps, check=False)
    return quo, ModuleMap(m, quo, [proj for proj, _ in projections])


def _partial_permutation_kernel(x: np.ndarray) -> tuple[np.ndarray, list[int]] | None:
    """Kernel of a matrix whose rows are zero or distinct unit vectors, else None.

    Covers of semisimple modules look like this, and their kernels are then
    spanned by unit vectors, which are already in RREF.
    """
    nonzero = x != 0
    per_row = nonzero.sum(axis=1)
    if (per_row > 1).any() or (x[nonzero] != 1).any():
        return None
    cols = nonzero.argmax(axis=1)[per_row == 1]
    if len(set(cols.tolist())) != len(cols):
        return None
    zero_rows = np.flatnonzero(per_row == 0)
    basis = np.zeros((len(zero_rows), x.shape[0]), dtype=np.int64)
    basis[np.arange(len(zero_rows)), zero_rows] = 1
    return basis, zero_rows.tolist()


def kernel(g: ModuleMap) -> tuple[Representation, ModuleMap]:
    f = g.source.field
    reduced = []
    for x in g.maps:
        fast = _partial_permutation_kernel(x) if x.size else None
        if fast is None:
            fast = f.row_basis(f.left_kernel(x)) if x.shape[0] else (np.zeros((0, 0), dtype=np.int64), [])
        reduced.append(fast)
    return submodule(g.source, [], check=False, reduced=reduced)


def image(g: ModuleMap) -> tuple[Representation, ModuleMap]:
    return submodule(g.target, list(g.maps), check=False)


# tops and socles ------------------------------------------------------------


def _radical_subspaces(m: Representation) -> list[tuple[np.ndarray, list[int]]]:
    """RREF bases of ``(MJ)_j``: the sum of images of arrows ending at j."""
    key = "rad"
    if key in m._probe:
        return m._probe[key]
    f = m.field
    q = m.algebra.quiver
    if m.is_semisimple():
        out = [(np.zeros((0, d), dtype=np.int64), []) for d in m.dims]
        m._probe[key] = out
        return out
    out = []
    for j in q.vertices:
        blocks = [m.maps[x] for x in q.arrows_to(j)]
        stacked = np.vstack(blocks) if blocks else np.zeros((0, m.dims[j - 1]), dtype=np.int64)
        out.append(f.row_basis(stacked))
    m._probe[key] = out
    return out


def _socle_subspaces(m: Representation) -> list[np.ndarray]:
    key = "soc"
    if key in m._probe:
        return m._probe[key]
    f = m.field
    q = m.algebra.quiver
    if m.is_semisimple():
        out = [np.eye(d, dtype=np.int64) for d in m.dims]
        m._probe[key] = out
        return out
    out = []
    for i in q.vertices:
        d = m.dims[i - 1]
        blocks = [m.maps[x] for x in q.arrows_from(i)]
        if not blocks or d == 0:
            out.append(np.eye(d, dtype=np.int64))
        else:
            out.append(f.left_kernel(np.hstack(blocks)))
    m._probe[key] = out
    return out


def top_dims(m: Representation) -> tuple[int, ...]:
    return tuple(d - len(piv) for d, (_, piv) in zip(m.dims, _radical_subspaces(m)))


def socle_dims(m: Representation) -> tuple[int, ...]:
    return tuple(s.shape[0] for s in _socle_subspaces(m))


def top(m: Representation) -> Representation:
    if m.is_zero():
        raise ZeroModule("top of the zero module")
    return quotient(m, [b for b, _ in _radical_subspaces(m)])[0]


def socle(m: Representation) -> Representation:
    if m.is_zero():
        raise ZeroModule("socle of the zero module")
    return submodule(m, _socle_subspaces(m), check=False)[0]


def radical_layer_dims(m: Representation) -> list[tuple[int, ...]]:
    """Dimension vectors of ``M J^k / M J^(k+1)`` for k = 0, 1, ..."""
    key = "layers"
    if key in m._probe:
        return m._probe[key]
    layers = []
    cur = m
    if m.is_semisimple():
        layers = [tuple(m.dims)] if not m.is_zero() else []
        m._probe[key] = layers
        return layers
    while not cur.is_zero():
        layers.append(top_dims(cur))
        rad = [b for b, _ in _radical_subspaces(cur)]
        cur = submodule(cur, rad, check=False)[0]
    m._probe[key] = layers
    return layers


def _layers_fit(x: Representation, y: Representation) -> bool:
    """Necessary for X to be a direct summand of Y: radical layers fit inside Y's."""
    lx, ly = radical_layer_dims(x), radical_layer_dims(y)
    if len(lx) > len(ly):
        return False
    return all(a <= b for u, v in zip(lx, ly) for a, b in zip(u, v))


# covers and envelopes --------------------------------------------------------


def projective_cover(m: Representation) -> tuple[Representation, ModuleMap, tuple[int, ...]]:
    """Minimal projective cover ``P -> M`` with ``P = (+)_i P_i^(t_i)``, t = dim top(M)."""
    if m.is_zero():
        raise ZeroModule("projective cover of the zero module")
    a = m.algebra
    f = a.field
    q = a.quiver
    rad = _radical_subspaces(m)
    mult = []
    gens: dict[int, np.ndarray] = {}
    for j in q.vertices:
        d = m.dims[j - 1]
        piv = set(rad[j - 1][1])
        free = [c for c in range(d) if c not in piv]
        mult.append(len(free))
        if free:
            gens[j] = np.eye(d, dtype=np.int64)[free]
    summands = []
    blocks: dict[int, list[np.ndarray]] = {v: [] for v in q.vertices}
    for j in q.vertices:
        if j not in gens:
            continue
        images = {PathWord(j): gens[j]}
        for p in a.paths_from(j):
            if not p.arrows:
                continue
            prefix = PathWord(j, p.arrows[:-1])
            images[p] = f.matmul(images[prefix], m.maps[p.arrows[-1]])
        per_end: dict[int, list[PathWord]] = {}
        for p in a.paths_from(j):
            per_end.setdefault(a.end(p), []).append(p)
        t = mult[j - 1]
        summands.extend([projective(a, j)] * t)
        for v, paths in per_end.items():
            # rows grouped by generator first, then by path
            stacked = np.stack([images[p] for p in paths], axis=1)
            blocks[v].append(stacked.reshape(t * len(paths), m.dims[v - 1]))
    cover_domain = direct_sum(summands)
    vertex_maps = []
    for v in q.vertices:
        if blocks[v]:
            vertex_maps.append(np.vstack(blocks[v]))
        else:
            vertex_maps.append(np.zeros((0, m.dims[v - 1]), dtype=np.int64))
    return cover_domain, ModuleMap(cover_domain, m, vertex_maps), tuple(mult)


def injective_envelope(m: Representation) -> tuple[Representation, ModuleMap]:
    """Minimal injective envelope ``M -> E`` with ``E = (+)_i I_i^(s_i)``, s = dim soc(M)."""
    if m.is_zero():
        raise ZeroModule("injective envelope of the zero module")
    p, cover, _ = projective_cover(dual(m))
    return dual(p), dual_map(cover)


def is_projective_module(m: Representation) -> bool:
    a = m.algebra
    t = top_dims(m)
    return m.total_dim == sum(t[i - 1] * projective(a, i).total_dim for i in a.quiver.vertices)


def is_injective_envelope_iso(m: Representation) -> bool:
    """True iff the injective envelope of M is an isomorphism, i.e. M is injective."""
    a = m.algebra
    s = socle_dims(m)
    return m.total_dim == sum(s[i - 1] * injective(a, i).total_dim for i in a.quiver.vertices)


# Hom spaces and isomorphism ----------------------------------------------------


def _hom_kernel(m: Representation, n: Representation) -> tuple[np.ndarray, list[int]]:
    """Kernel rows of the commuting-square system and the per-vertex offsets."""
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    f = m.field
    q = m.algebra.quiver
    offsets = [0]
    for v in range(q.vertex_count):
        offsets.append(offsets[-1] + m.dims[v] * n.dims[v])
    unknowns = offsets[-1]
    blocks = []
    for x, arr in enumerate(q.arrows):
        i, j = arr.source - 1, arr.target - 1
        rows = m.dims[i] * n.dims[j]
        if rows == 0:
            continue
        eq = np.zeros((rows, unknowns), dtype=np.int64)
        if m.dims[i] * n.dims[i]:
            eq[:, offsets[i] : offsets[i + 1]] = np.kron(np.eye(m.dims[i], dtype=np.int64), n.maps[x].T)
        if m.dims[j] * n.dims[j]:
            eq[:, offsets[j] : offsets[j + 1]] = (
                eq[:, offsets[j] : offsets[j + 1]] - np.kron(m.maps[x], np.eye(n.dims[j], dtype=np.int64))
            ) % f.prime
        blocks.append(eq)
    system = np.vstack(blocks) if blocks else np.zeros((0, unknowns), dtype=np.int64)
    return f.kernel_basis(system), offsets


def _unpack(m: Representation, n: Representation, vec: np.ndarray, offsets: list[int]) -> ModuleMap:
    maps = [
        vec[offsets[v] : offsets[v + 1]].reshape(m.dims[v], n.dims[v])
        for v in range(len(m.dims))
    ]
    return ModuleMap(m, n, maps)


def hom_space(m: Representation, n: Representation) -> tuple[int, list[ModuleMap]]:
    """Dimension and a basis of ``Hom_A(M, N)``."""
    k, offsets = _hom_kernel(m, n)
    return k.shape[0], [_unpack(m, n, row, offsets) for row in k]


def _hom_dim(m: Representation, n: Representation) -> int:
    if n is m:
        key = "end"
        if key not in m._probe:
            m._probe[key] = _hom_kernel(m, m)[0].shape[0]
        return m._probe[key]
    return _hom_kernel(m, n)[0].shape[0]


def _all_invertible(f, maps: Sequence[np.ndarray]) -> bool:
    return all(f.is_invertible(x) for x in maps)


def find_isomorphism(m: Representation, n: Representation, seed=0) -> ModuleMap | None:
    """An isomorphism ``M -> N`` or None when none exists.

    Raises Inconclusive when random sampling found no witness but could not
    rule one out.
    """
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    if m.dims != n.dims:
        return None
    f = m.field
    if m.is_semisimple() and n.is_semisimple():
        return ModuleMap(m, n, [np.eye(d, dtype=np.int64) for d in m.dims])
    if socle_dims(m) != socle_dims(n) or radical_layer_dims(m) != radical_layer_dims(n):
        return None
    basis, offsets = _hom_kernel(m, n)
    k = basis.shape[0]
    if k == 0 or k != _hom_dim(m, m) or k != _hom_dim(n, n):
        return None
    p = f.prime
    if p**k <= EXHAUSTIVE_LIMIT:
        for coeffs in itertools.product(range(p), repeat=k):
            if not any(coeffs):
                continue
            cand = _unpack(m, n, f.matmul(np.array([coeffs], dtype=np.int64), basis)[0], offsets)
            if _all_invertible(f, cand.maps):
                return cand
        return None
    rng = np.random.default_rng(seed)
    for _ in range(ISO_SAMPLES):
        cand = _unpack(m, n, f.matmul(f.random(1, k, rng), basis)[0], offsets)
        if _all_invertible(f, cand.maps):
            return cand
    raise Inconclusive(f"no isomorphism found in {ISO_SAMPLES} samples (hom dimension {k})")


def is_isomorphic(m: Representation, n: Representation, seed=0) -> bool:
    """Exact unless it raises Inconclusive; a True answer is backed by a witness."""
    return find_isomorphism(m, n, seed) is not None


def split_embedding(x: Representation, y: Representation, seed=0) -> tuple[ModuleMap, ModuleMap] | None:
    """Maps ``f: X -> Y`` and ``g: Y -> X`` with ``g o f = id_X``, if found.

    Randomized: a returned pair certifies that X is a direct summand of Y,
    while None only means no witness was found.
    """
    f = x.field
    if x.algebra is not y.algebra:
        raise ValueError("modules over different algebras")
    if any(a > b for a, b in zip(x.dims, y.dims)):
        return None
    if x.is_semisimple() and y.is_semisimple():
        inc = [np.eye(a, b, dtype=np.int64) for a, b in zip(x.dims, y.dims)]
        return ModuleMap(x, y, inc), ModuleMap(y, x, [m.T.copy() for m in inc])
    if any(a > b for a, b in zip(socle_dims(x), socle_dims(y))) or not _layers_fit(x, y):
        return None
    end_x = _hom_dim(x, x)
    to_y, off_xy = _hom_kernel(x, y)
    if to_y.shape[0] < end_x:
        return None
    back, off_yx = _hom_kernel(y, x)
    if back.shape[0] < end_x:
        return None
    rng = np.random.default_rng(seed)
    for _ in range(SUMMAND_TRIALS):
        emb = _unpack(x, y, f.matmul(f.random(1, to_y.shape[0], rng), to_y)[0], off_xy)
        ret = _unpack(y, x, f.matmul(f.random(1, back.shape[0], rng), back)[0], off_yx)
        comp = emb.then(ret)
        inverses = [f.inverse(c) if c.size else c for c in comp.maps]
        if all(inv is not None for inv in inverses):
            fixed = ModuleMap(y, x, [f.matmul(r, inv) for r, inv in zip(ret.maps, inverses)])
            return emb, fixed
    return None
