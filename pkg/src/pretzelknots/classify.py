"""Verdicts for a knot: free factor property of the standard surface,
residual torsion-free nilpotence of the commutator subgroup, bi-orderability
of the knot group and left-orderability of the double branched cover.

Root conditions on the Alexander polynomial are decided exactly: for genus
one the two roots are real and positive iff ``N < 0``; the alternating-sign
family has ``Delta = (t-2)^k (2t-1)^k`` up to units.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .freefactor import Budget, FFVerdict, Outcome, decide_in_ambient, replay
from .knots import (
    AnalysisDeclined,
    Family,
    PretzelKnot,
    alexander,
    assoc_equal,
    boundary_generators,
    is_prime_power,
    leading_coefficient,
    normalize,
    seifert_matrices,
)
from .schreier import from_generators
from .stallings import from_generators as fold, index as graph_index
from .words import abelianize

__all__ = [
    "FFP",
    "RTFN",
    "BiOrder",
    "Sigma2",
    "KnotReport",
    "InternalError",
    "analyze",
    "ffp",
    "rtfn",
    "biorder",
    "sigma2_lo",
    "chart_rows",
    "sweep_rows",
    "check_report",
]


class FFP(str, Enum):
    SATISFIED = "Satisfied"
    NOT_SATISFIED = "NotSatisfied"
    UNKNOWN = "Unknown"


class RTFN(str, Enum):
    PROVED = "Proved"
    DISPROVED = "Disproved"
    UNKNOWN = "Unknown"


class BiOrder(str, Enum):
    BIORDERABLE = "BiOrderable"
    NOT_BIORDERABLE = "NotBiOrderable"
    UNKNOWN = "Unknown"


class Sigma2(str, Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


class InternalError(AssertionError):
    pass


@dataclass
class KnotReport:
    knot: PretzelKnot
    N: int | None = None
    alexander: list[int] = field(default_factory=list)
    rhf: bool | None = None
    index: int | float | None = None
    ffp_H: FFVerdict | None = None
    ffp_K: FFVerdict | None = None
    ffp_overall: FFP = FFP.UNKNOWN
    ffp_reason: str = ""
    rtfn: RTFN = RTFN.UNKNOWN
    rtfn_reason: str = ""
    biorder: BiOrder = BiOrder.UNKNOWN
    biorder_reason: str = ""
    sigma2_lo: Sigma2 = Sigma2.UNKNOWN
    declined: str | None = None
    seconds: float = 0.0

    def to_json(self, timing: bool = True) -> dict:
        J = self.knot
        d = {
            "knot": J.name,
            "family": J.family.value,
            "params": list(J.params),
            "pqr": [J.p, J.q, J.r] if J.family is Family.GENUS_ONE else None,
            "flags": list(J.flags),
            "mirrored": J.mirrored,
        }
        if self.declined:
            d["declined"] = self.declined
            return d
        idx = self.index
        d.update({
            "N": self.N,
            "alexander": self.alexander,
            "rhf": self.rhf,
            "index": "infinite" if idx == math.inf else idx,
            "ffp_H": self.ffp_H.to_json() if self.ffp_H else None,
            "ffp_K": self.ffp_K.to_json() if self.ffp_K else None,
            "ffp_overall": self.ffp_overall.value,
            "ffp_reason": self.ffp_reason,
            "rtfn": self.rtfn.value,
            "rtfn_reason": self.rtfn_reason,
            "biorder": self.biorder.value,
            "biorder_reason": self.biorder_reason,
            "sigma2_lo": self.sigma2_lo.value,
        })
        if not timing:
            for side in ("ffp_H", "ffp_K"):
                if d[side]:
                    d[side]["consumed"] = {k: v for k, v in d[side]["consumed"].items() if k != "seconds"}
        else:
            d["seconds"] = round(self.seconds, 3)
        return d


def _unit_verdict() -> FFVerdict:
    return FFVerdict(Outcome.NOT_FREE_FACTOR, {"kind": "unit-determinant"}, {})


def ffp(J: PretzelKnot, budget: Budget = Budget()):
    """``(ffp_H, ffp_K, overall, reason)``."""
    N = leading_coefficient(J)
    if J.family is Family.GENUS_ONE and abs(N) == 1:
        return _unit_verdict(), _unit_verdict(), FFP.NOT_SATISFIED, \
            "|N| = 1: the property would make S a fiber, and the only genus one fibered knots are the trefoil and figure eight"
    if N == 0:
        return None, None, FFP.UNKNOWN, "N = 0: H[X,X] has infinite index"
    X, H, K = boundary_generators(J)
    vH = decide_in_ambient(H, budget)
    vK = decide_in_ambient(K, budget)
    for v in (vH, vK):
        if not replay(v):
            raise InternalError(f"{J}: certificate failed to replay: {v.witness}")
    outs = (vH.outcome, vK.outcome)
    if Outcome.NOT_FREE_FACTOR in outs:
        side = "H" if vH.outcome is Outcome.NOT_FREE_FACTOR else "K"
        return vH, vK, FFP.NOT_SATISFIED, f"{side} is not a free factor"
    if outs == (Outcome.FREE_FACTOR, Outcome.FREE_FACTOR):
        return vH, vK, FFP.SATISFIED, "H and K are free factors"
    if J.family is Family.GENUS_ONE and J.p >= 1:
        return vH, vK, FFP.SATISFIED, \
            "p >= 1: the standard surface is pseudo-alternating (no certificate within budget)"
    return vH, vK, FFP.UNKNOWN, "no certificate within budget"


def rtfn(J: PretzelKnot, N: int, delta: list[int], overall: FFP):
    if N == 0 or assoc_equal(delta, [1]):
        return RTFN.DISPROVED, "trivial Alexander polynomial: the commutator subgroup is perfect, hence not residually nilpotent"
    d0 = abs(delta[0])
    if overall is FFP.SATISFIED:
        if is_prime_power(d0):
            return RTFN.PROVED, f"free factor property and |Delta(0)| = {d0} is a prime power"
        return RTFN.UNKNOWN, f"|Delta(0)| = {d0} is not a prime power"
    if overall is FFP.NOT_SATISFIED:
        return RTFN.UNKNOWN, "free factor property fails; the method does not apply"
    return RTFN.UNKNOWN, "free factor property undetermined"


def biorder(J: PretzelKnot, N: int, verdict: RTFN):
    if J.family is Family.GENUS_ONE:
        if N > 0:
            return BiOrder.NOT_BIORDERABLE, "N > 0: Delta has no positive real root"
        if N == 0:
            return BiOrder.UNKNOWN, "N = 0"
        if verdict is RTFN.PROVED:
            return BiOrder.BIORDERABLE, "N < 0: both roots real and positive, commutator subgroup residually torsion-free nilpotent"
        return BiOrder.UNKNOWN, "N < 0 but residual torsion-free nilpotence not proved"
    if J.family is Family.ALTERNATING_SIGN:
        if verdict is RTFN.PROVED:
            return BiOrder.BIORDERABLE, "roots 2 and 1/2, commutator subgroup residually torsion-free nilpotent"
        return BiOrder.UNKNOWN, "residual torsion-free nilpotence not proved"
    return BiOrder.UNKNOWN, "unsupported family"


def sigma2_lo(J: PretzelKnot) -> Sigma2:
    if J.family is not Family.GENUS_ONE or J.p >= -1:
        return Sigma2.UNKNOWN
    return Sigma2.YES if -J.p <= J.q else Sigma2.NO


def _graph_index(J: PretzelKnot):
    """Index of ``H[X,X]`` measured on the folded graph of its Schreier basis."""
    X, H, _ = boundary_generators(J)
    sys = from_generators(X, H)
    return graph_index(fold(X, list(sys.definitions)))


def analyze(J: PretzelKnot | str, budget: Budget = Budget()) -> KnotReport:
    if isinstance(J, str):
        from .knots import parse_knot

        J = parse_knot(J)
    t0 = time.perf_counter()
    rep = KnotReport(J)
    try:
        S, _ = seifert_matrices(J)
    except AnalysisDeclined as e:
        rep.declined = str(e)
        return rep
    rep.N = leading_coefficient(J)
    rep.alexander = alexander(J)
    rep.rhf = rep.N != 0
    if rep.rhf:
        rep.index = _graph_index(J)
        if rep.index != abs(rep.alexander[0]):
            raise InternalError(f"{J}: graph index {rep.index} != |Delta(0)| = {abs(rep.alexander[0])}")
    else:
        rep.index = math.inf
    rep.ffp_H, rep.ffp_K, rep.ffp_overall, rep.ffp_reason = ffp(J, budget)
    rep.rtfn, rep.rtfn_reason = rtfn(J, rep.N, rep.alexander, rep.ffp_overall)
    rep.biorder, rep.biorder_reason = biorder(J, rep.N, rep.rtfn)
    rep.sigma2_lo = sigma2_lo(J)
    rep.seconds = time.perf_counter() - t0
    check_report(rep)
    return rep


def check_report(rep: KnotReport):
    """Structural consistency of the verdicts; raises :class:`InternalError`."""
    if rep.declined:
        return
    J = rep.knot
    trivial = rep.N == 0 or assoc_equal(rep.alexander, [1])
    if (rep.rtfn is RTFN.DISPROVED) != trivial:
        raise InternalError(f"{J}: Disproved must coincide with trivial Alexander polynomial")
    if rep.rtfn is RTFN.PROVED:
        if not (rep.rhf and rep.ffp_overall is FFP.SATISFIED and is_prime_power(abs(rep.alexander[0]))):
            raise InternalError(f"{J}: Proved without its hypotheses")
    if rep.biorder is BiOrder.BIORDERABLE and rep.rtfn is not RTFN.PROVED:
        raise InternalError(f"{J}: BiOrderable without residual torsion-free nilpotence")
    if rep.biorder is BiOrder.NOT_BIORDERABLE and not rep.rhf:
        raise InternalError(f"{J}: NotBiOrderable requires det(S) != 0")
    if rep.ffp_H and rep.ffp_K:
        outs = {rep.ffp_H.outcome, rep.ffp_K.outcome}
        if rep.ffp_overall is FFP.SATISFIED and rep.ffp_reason.startswith("H and K") and outs != {Outcome.FREE_FACTOR}:
            raise InternalError(f"{J}: Satisfied without two positive certificates")


# ----------------------------------------------------------------------------
# sweeps and charts

CELL_CAP = 20000


def chart_class(rep: KnotReport) -> str:
    if rep.N == 0:
        return "trivial-Δ"
    return {FFP.SATISFIED: "satisfies", FFP.NOT_SATISFIED: "fails"}.get(rep.ffp_overall, "unknown")


def _cells(p: int, qmax: int, rmax: int):
    if p in (0, -1):
        raise ValueError("p = 0 or -1 gives a two-bridge knot")
    if qmax < 1 or rmax < 1:
        raise ValueError("qmax and rmax must be positive")
    cells = [(q, r) for q in range(1, qmax + 1) for r in range(q, rmax + 1)]
    if len(cells) > CELL_CAP:
        raise ValueError(f"{len(cells)} cells exceeds the cap of {CELL_CAP}")
    return cells


def _analyze_cell(args):
    p, q, r, budget = args
    J = normalize(2 * p + 1, 2 * q + 1, 2 * r + 1)
    return q, r, analyze(J, budget)


def _run(p, cells, budget, jobs):
    tasks = [(p, q, r, budget) for q, r in cells]
    if jobs <= 1:
        return [_analyze_cell(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_analyze_cell, tasks, chunksize=4))


def chart_rows(p: int, qmax: int, rmax: int, budget: Budget = Budget(), jobs: int = 1):
    """``(q, r, N, class)`` for ``1 <= q <= min(qmax, r)``, ``r <= rmax``."""
    return [(q, r, rep.N, chart_class(rep)) for q, r, rep in _run(p, _cells(p, qmax, rmax), budget, jobs)]


def sweep_rows(p: int, qmax: int, rmax: int, budget: Budget = Budget(), jobs: int = 1):
    return [(q, r, rep) for q, r, rep in _run(p, _cells(p, qmax, rmax), budget, jobs)]


def abelian_rows_match(J: PretzelKnot) -> bool:
    X, H, K = boundary_generators(J)
    Sp, Sm = seifert_matrices(J)
    return [abelianize(w) for w in H] == Sp.tolist() and [abelianize(w) for w in K] == Sm.tolist()
