"""Regression against the bundled table of published verdicts."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .classify import analyze
from .freefactor import Budget
from .knots import Family, assoc_equal, parse_knot, poly_mul, boundary_generators
from .schreier import from_generators, rewrite

__all__ = ["Mismatch", "load_cases", "run", "pinned_strings", "family_alexander"]

# P(-5,7,9): alpha_H, beta_H in the Schreier basis of H[X,X]
PINNED = {
    "P(-5,7,9)": ("x4^-1 x3 x2 x1 x0^-2", "x4 x1^-1 x2^-1 x3^-1 x4"),
}


@dataclass
class Mismatch:
    knot: str
    source: str
    field: str
    expected: object
    got: object

    def __str__(self):
        return f"{self.knot} [{self.source}] {self.field}: expected {self.expected}, got {self.got}"


def load_cases(path: str | Path | None = None) -> list[dict]:
    if path is None:
        text = resources.files("pretzelknots").joinpath("data/paper_cases.json").read_text()
    else:
        text = Path(path).read_text()
    return json.loads(text)


def family_alexander(k: int) -> list[int]:
    f = [1]
    for _ in range(k):
        f = poly_mul(f, [-2, 1])
        f = poly_mul(f, [-1, 2])
    return f


def pinned_strings() -> list[Mismatch]:
    bad = []
    for knot, expected in PINNED.items():
        J = parse_knot(knot)
        X, H, _ = boundary_generators(J)
        sys = from_generators(X, H)
        got = tuple(str(rewrite(sys, w)) for w in H)
        if got != expected:
            bad.append(Mismatch(knot, "pinned-rewriting", "alpha_H, beta_H", expected, got))
    return bad


def _one(args):
    knot, budget = args
    rep = analyze(knot, budget)
    return knot, rep


def _compare(case: dict, rep) -> list[Mismatch]:
    out = []
    exp = case["expected"]
    got = {
        "ffp": rep.ffp_overall.value,
        "rtfn": rep.rtfn.value,
        "biorder": rep.biorder.value,
        "sigma2_lo": rep.sigma2_lo.value,
        "index": rep.index,
    }
    for key, want in exp.items():
        if want is not None and got.get(key) != want:
            out.append(Mismatch(case["knot"], case["source"], key, want, got.get(key)))
    J = rep.knot
    if J.family is Family.ALTERNATING_SIGN and not assoc_equal(rep.alexander, family_alexander(J.k)):
        out.append(Mismatch(case["knot"], case["source"], "alexander",
                            family_alexander(J.k), rep.alexander))
    return out


def run(only: str | None = None, budget: Budget = Budget(), jobs: int = 1,
        path: str | Path | None = None, progress=None):
    """Return ``(cases_checked, mismatches)``."""
    cases = load_cases(path)
    if only:
        cases = [c for c in cases if c["source"] == only]
        if not cases:
            names = sorted({c["source"] for c in load_cases(path)})
            raise KeyError(f"no fixture group {only!r}; groups: {', '.join(names)}")
    knots = sorted({c["knot"] for c in cases}, key=lambda s: [c["knot"] for c in cases].index(s))
    tasks = [(k, budget) for k in knots]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = dict(ex.map(_one, tasks, chunksize=8))
    else:
        results = {}
        for t in tasks:
            k, rep = _one(t)
            results[k] = rep
            if progress:
                progress(k, rep)
    bad = pinned_strings() if not only else []
    for c in cases:
        bad.extend(_compare(c, results[c["knot"]]))
    return len(cases), bad
