"""Per-algebra invariants and claim verdicts.

Claims checked for every algebra A with radical J and global dimension g:

  C1  id(J) = g
  C2  id(J/J^2) = g
  C3  id(J) = g, evaluated when g is finite
  C4  for Gorenstein A: id(J) equals the Gorenstein dimension when g is
      finite, and id(J) is infinite when g is infinite
  C5  g = max pd(S_i) = max id(S_i)
  C6  S_i is injective iff no arrow of Q(A) ends at i, with
      dim Ext^1(S_j, S_i) = number of arrows j -> i
  C7  id(J) >= id(J^2) - 1
  C8  id(J) >= id(J^2)

C7 and C8 are observations rather than theorems; they are reported but do
not affect the exit status.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field

from ..algebra import Algebra, algebra_id, ext_quiver
from ..errors import NonSemisimpleRequired
from ..homology import (
    DEFAULT_CAP,
    ExtDim,
    ext_eq,
    ext_ge,
    ext_max,
    global_dimension_by_path_graph,
    is_injective_module,
    is_local,
    is_nakayama,
    resolve,
)
from ..modules import (
    dual,
    projective,
    radical_layer_quotient,
    radical_power_module,
    simple,
)

CLAIMS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8")
HARD_CLAIMS = ("C1", "C2", "C3", "C4", "C5", "C6")
STATUSES = ("Confirmed", "ConsistentUndetermined", "Violated", "NotApplicable")


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    status: str
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"claim": self.claim_id, "status": self.status, "evidence": self.evidence}

    @classmethod
    def from_json(cls, d: dict) -> ClaimVerdict:
        return cls(d["claim"], d["status"], d.get("evidence", {}))


def verdict_from(claim_id: str, outcome: bool | None, values: dict[str, ExtDim], **extra) -> ClaimVerdict:
    """Turn a three-valued comparison into a verdict.

    Violated needs every compared value determined; a contradiction that
    involves a lower bound only is reported as undetermined and flagged.
    """
    evidence = {k: v.to_json() for k, v in values.items()}
    evidence.update(extra)
    if outcome is True:
        status = "Confirmed"
    elif outcome is False and all(v.is_determined for v in values.values()):
        status = "Violated"
    else:
        if outcome is False:
            evidence["bound_conflict"] = True
        status = "ConsistentUndetermined"
    return ClaimVerdict(claim_id, status, evidence)


def _all_equal(values: dict[str, ExtDim]) -> bool | None:
    vals = list(values.values())
    results = [ext_eq(x, y) for k, x in enumerate(vals) for y in vals[k + 1 :]]
    if any(r is False for r in results):
        return False
    if all(r is True for r in results):
        return True
    return None


@dataclass
class Report:
    algebra_id: str
    source: str
    prime: int
    n: int
    total_dim: int
    loewy_length: int
    arrows: list
    relations: list
    gldim: ExtDim
    id_J: ExtDim
    id_J2: ExtDim
    id_JmodJ2: ExtDim
    pd_simples: list
    id_simples: list
    gorenstein: dict
    flags: dict
    verdicts: list
    checks: dict = field(default_factory=dict)
    timing: float | None = None

    def verdict(self, claim_id: str) -> ClaimVerdict:
        return next(v for v in self.verdicts if v.claim_id == claim_id)

    def status(self, claim_id: str) -> str:
        return self.verdict(claim_id).status

    @property
    def has_violation(self) -> bool:
        if any(self.status(c) == "Violated" for c in HARD_CLAIMS):
            return True
        return any(c.get("status") == "Violated" for c in self.checks.values())

    def to_json(self, include_timing: bool = False) -> dict:
        d = {
            "algebra_id": self.algebra_id,
            "source": self.source,
            "prime": self.prime,
            "n": self.n,
            "total_dim": self.total_dim,
            "loewy_length": self.loewy_length,
            "arrows": self.arrows,
            "relations": self.relations,
            "gldim": self.gldim.to_json(),
            "id_J": self.id_J.to_json(),
            "id_J2": self.id_J2.to_json(),
            "id_JmodJ2": self.id_JmodJ2.to_json(),
            "pd_simples": [x.to_json() for x in self.pd_simples],
            "id_simples": [x.to_json() for x in self.id_simples],
            "gorenstein": {
                "right": self.gorenstein["right"].to_json(),
                "left": self.gorenstein["left"].to_json(),
                "verdict": self.gorenstein["verdict"],
            },
            "flags": self.flags,
            "verdicts": [v.to_json() for v in self.verdicts],
            "checks": self.checks,
        }
        if include_timing and self.timing is not None:
            d["timing"] = round(self.timing, 6)
        return d

    @classmethod
    def from_json(cls, d: dict) -> Report:
        g = d["gorenstein"]
        return cls(
            algebra_id=d["algebra_id"],
            source=d["source"],
            prime=d["prime"],
            n=d["n"],
            total_dim=d["total_dim"],
            loewy_length=d["loewy_length"],
            arrows=d["arrows"],
            relations=d["relations"],
            gldim=ExtDim.from_json(d["gldim"]),
            id_J=ExtDim.from_json(d["id_J"]),
            id_J2=ExtDim.from_json(d["id_J2"]),
            id_JmodJ2=ExtDim.from_json(d["id_JmodJ2"]),
            pd_simples=[ExtDim.from_json(x) for x in d["pd_simples"]],
            id_simples=[ExtDim.from_json(x) for x in d["id_simples"]],
            gorenstein={
                "right": ExtDim.from_json(g["right"]),
                "left": ExtDim.from_json(g["left"]),
                "verdict": g["verdict"],
            },
            flags=d["flags"],
            verdicts=[ClaimVerdict.from_json(v) for v in d["verdicts"]],
            checks=d.get("checks", {}),
            timing=d.get("timing"),
        )


def derive_seed(seed: int, aid: str) -> int:
    """Per-algebra RNG seed from the global seed and the algebra id."""
    return int(hashlib.sha256(f"{seed}:{aid}".encode()).hexdigest()[:12], 16)


def _simple_injectivity(a: Algebra, res_s, res_dual_s) -> ClaimVerdict:
    """C6: envelope test, Ext^1 test on both sides, and arrow counts of Q(A) agree."""
    qa = ext_quiver(a)
    rows = []
    ok = True
    for i in qa.vertices:
        by_envelope = is_injective_module(simple(a, i))
        no_incoming = not qa.arrows_to(i)
        # Ext^1(S_j, S_i) read from the resolution of S_j, and from D(S_i) over A^op
        ext_left = [res_s[j - 1].betti(1)[i - 1] for j in qa.vertices]
        ext_right = list(res_dual_s[i - 1].betti(1))
        arrows_in = [qa.arrow_count(j, i) for j in qa.vertices]
        by_ext = not any(ext_right)
        agree = by_envelope == no_incoming == by_ext and ext_left == ext_right == arrows_in
        ok &= agree
        rows.append({
            "vertex": i,
            "injective": by_envelope,
            "no_incoming_arrow": no_incoming,
            "ext1_into": ext_left,
        })
    return ClaimVerdict("C6", "Confirmed" if ok else "Violated", {"vertices": rows})


def check_algebra(a: Algebra, cap: int = DEFAULT_CAP, seed: int = 0, source: str = "") -> Report:
    """Compute every invariant of ``a`` and evaluate C1-C8."""
    if a.is_semisimple:
        raise NonSemisimpleRequired("the algebra has no arrows")
    start = time.perf_counter()
    aid = algebra_id(a)
    rs = derive_seed(seed, aid)
    q = a.quiver
    vertices = list(q.vertices)

    gl = global_dimension_by_path_graph(a)
    # every pd and id is bounded by a finite gldim, so cap = g loses nothing
    cap_eff = max(1, min(cap, gl.value)) if gl.is_finite else cap
    detect = not gl.is_finite

    done: list = []

    def res(m):
        # J and J/J^2 coincide when J^2 = 0; resolve each module once
        for x, r in done:
            if x == m:
                return r
        r = resolve(m, cap_eff, rs, detect)
        done.append((m, r))
        return r

    res_s = [res(simple(a, i)) for i in vertices]
    res_dual_s = [res(dual(simple(a, i))) for i in vertices]
    pd_s = [r.dimension for r in res_s]
    id_s = [r.dimension for r in res_dual_s]

    id_j = res(dual(radical_power_module(a, 1))).dimension
    id_j2 = res(dual(radical_power_module(a, 2))).dimension
    id_jj = res(dual(radical_layer_quotient(a, 1, 2))).dimension

    # id of A is the largest id of an indecomposable projective; the summands
    # resolve much faster one at a time than the whole regular module
    right = ext_max(*(res(dual(projective(a, i))).dimension for i in vertices))
    left = ext_max(*(res(dual(projective(a.opposite, i))).dimension for i in vertices))
    if right.is_finite and left.is_finite:
        gverdict = "Gorenstein" if right.value == left.value else "NotGorenstein"
    elif not right.is_determined or not left.is_determined:
        gverdict = "Undetermined"
    else:
        gverdict = "NotGorenstein"

    flags = {
        "local": is_local(a),
        # A_A is injective exactly when D(A) is projective over A^op
        "selfinjective": right == ExtDim.finite(0),
        "nakayama": is_nakayama(a),
        "gorenstein": gverdict,
    }

    verdicts = [
        verdict_from("C1", ext_eq(id_j, gl), {"id_J": id_j, "gldim": gl}),
        verdict_from("C2", ext_eq(id_jj, gl), {"id_JmodJ2": id_jj, "gldim": gl}),
    ]
    if gl.is_finite:
        verdicts.append(verdict_from("C3", ext_eq(id_j, gl), {"id_J": id_j, "gldim": gl}))
    else:
        verdicts.append(ClaimVerdict("C3", "NotApplicable", {"gldim": gl.to_json()}))

    if gverdict != "Gorenstein":
        verdicts.append(ClaimVerdict("C4", "NotApplicable", {"gorenstein": gverdict}))
    elif gl.is_finite:
        outcome = _all_equal({"id_J": id_j, "gorenstein_dim": right, "gldim": gl})
        verdicts.append(verdict_from("C4", outcome, {"id_J": id_j, "gorenstein_dim": right, "gldim": gl}))
    else:
        outcome = True if id_j.is_infinite else (False if id_j.is_finite else None)
        verdicts.append(verdict_from("C4", outcome, {"id_J": id_j, "gorenstein_dim": right, "gldim": gl}))

    c5_values = {"gldim_path_graph": gl, "max_pd_simple": ext_max(*pd_s), "max_id_simple": ext_max(*id_s)}
    verdicts.append(verdict_from("C5", _all_equal(c5_values), c5_values))
    verdicts.append(_simple_injectivity(a, res_s, res_dual_s))
    verdicts.append(verdict_from("C7", ext_ge(id_j, id_j2.shift(-1)), {"id_J": id_j, "id_J2": id_j2}))
    verdicts.append(verdict_from("C8", ext_ge(id_j, id_j2), {"id_J": id_j, "id_J2": id_j2}))

    return Report(
        algebra_id=aid,
        source=source,
        prime=a.field.prime,
        n=a.n,
        total_dim=a.dimension,
        loewy_length=a.loewy_length,
        arrows=[[x.name, x.source, x.target] for x in q.arrows],
        relations=[[q.arrows[k].name for k in r.arrows] for r in a.relations],
        gldim=gl,
        id_J=id_j,
        id_J2=id_j2,
        id_JmodJ2=id_jj,
        pd_simples=pd_s,
        id_simples=id_s,
        gorenstein={"right": right, "left": left, "verdict": gverdict},
        flags=flags,
        verdicts=verdicts,
        timing=time.perf_counter() - start,
    )

