"""Acceptance gate.  Each criterion prints one PASS/FAIL line; the lines are
repeated in the terminal summary by ``conftest.py``."""

import itertools
import random
import time

import pytest

import conftest
from pretzelknots.classify import BiOrder, FFP, RTFN, Sigma2, _graph_index, analyze, sigma2_lo
from pretzelknots.freefactor import Budget, _abelian_check, certify_not_free_factor
from pretzelknots.intmat import hermite_form
from pretzelknots.knots import (
    PretzelKnot, alexander, assoc_equal, check_words_match_seifert, is_prime_power, normalize,
)
from pretzelknots.nielsen import is_primitive_small, primitive_orbit
from pretzelknots.schreier import build, expand, from_generators, rewrite
from pretzelknots.stallings import contains, from_generators as fold, generates_whole_group
from pretzelknots.verify import family_alexander, load_cases, pinned_strings, run
from pretzelknots.words import Alphabet, Word, canonical_cyclic, cyclic_core, free_reduce

REPORTS: dict = {}


def report(knot):
    if knot not in REPORTS:
        REPORTS[knot] = analyze(knot)
    return REPORTS[knot]


def gate(n, title, failures, seconds=None):
    extra = f" ({seconds:.1f}s)" if seconds is not None else ""
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {n} {status}: {title}{extra}"
    if failures:
        line += " :: " + "; ".join(str(f) for f in failures[:5])
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def reduced_words(rank, max_len):
    letters = [g for g in range(1, rank + 1)] + [-g for g in range(1, rank + 1)]
    layer, out = [()], []
    for _ in range(max_len):
        layer = [w + (x,) for w in layer for x in letters if not w or w[-1] != -x]
        out.extend(layer)
    return out


def random_reduced(rng, rank, length):
    while True:
        s = free_reduce(rng.choice([g for g in range(1, rank + 1)] + [-g for g in range(1, rank + 1)])
                        for _ in range(length))
        if s:
            return s


# ----------------------------------------------------------------------------


def test_criterion_1_published_verdicts():
    t0 = time.perf_counter()
    bad = []
    knots = {c["knot"] for c in load_cases()}
    required = ["P(-5,7,7)", "P(-5,7,9)", "P(-5,13,13)", "P(-5,13,15)", "P(-3,5,7)",
                "P(-5,7,17)", "P(-5,9,11)"]
    required += [normalize(-3, 3, 2 * r + 1).name for r in range(1, 31)]
    required += [normalize(2 * p + 1, 3, 2 * r + 1).name for p in range(-6, -2) for r in range(1, 31)]
    bad += [f"{k} missing from fixtures" for k in required if k not in knots]
    groups = {c["source"] for c in load_cases()}
    bad += [f"group {g} missing" for g in ("no-free-factor", "unit-leading-coefficient", "jq-family")
            if g not in groups]
    n, mism = run(progress=lambda k, rep: REPORTS.setdefault(k, rep))
    bad += [str(m) for m in mism]
    dt = time.perf_counter() - t0
    if dt > 600:
        bad.append(f"took {dt:.0f}s")
    gate(1, f"verify-paper reproduces all {n} published verdicts", bad, dt)


def test_criterion_2_orderability():
    t0 = time.perf_counter()
    bad = []
    cases = load_cases()

    def want(knot, field, value):
        rep = report(knot)
        got = getattr(rep, field)
        if got is not value:
            bad.append(f"{knot} {field}={got.value}")

    for r in range(1, 31):
        want(normalize(-3, 3, 2 * r + 1).name, "biorder", BiOrder.BIORDERABLE)
        J = normalize(-5, 3, 2 * r + 1)
        rep = report(J.name)
        if rep.N != 0 and is_prime_power(abs(rep.alexander[0])):
            want(J.name, "biorder", BiOrder.BIORDERABLE)
    for k in ("P(-5,7,7)", "P(-5,7,9)"):
        want(k, "biorder", BiOrder.BIORDERABLE)
    positive_N = [c["knot"] for c in cases if c["source"] == "not-biorderable"]
    for k in positive_N:
        if report(k).N <= 0:
            bad.append(f"{k} listed with N > 0 but N = {report(k).N}")
        want(k, "biorder", BiOrder.NOT_BIORDERABLE)
    swept = 0
    for p in range(-8, -1):
        for q in range(1, 31):
            for r in range(q, 31):
                J = PretzelKnot.triple(p, q, r)
                expect = Sigma2.YES if -p <= q else Sigma2.NO
                swept += 1
                if sigma2_lo(J) is not expect:
                    bad.append(f"{J} sigma2_lo")
    jq = [c["knot"] for c in cases if c["source"] == "jq-family"][:3]
    for q, k in zip((3, 4, 5), jq):
        rep = report(k)
        if not (rep.biorder is BiOrder.BIORDERABLE and rep.sigma2_lo is Sigma2.YES):
            bad.append(f"J_{q} = {k} lacks coexistence")
        if not is_prime_power(q - 1):
            bad.append(f"q - 1 = {q - 1} not a prime power")
    gate(2, f"orderability: {len(positive_N)} NotBiOrderable, sigma2 rule on {swept} knots, "
            "coexistence for q = 3, 4, 5", bad, time.perf_counter() - t0)


def test_criterion_3_family():
    t0 = time.perf_counter()
    bad = []
    for k in (1, 2, 3):
        for r in range(1, 11):
            rep = analyze(PretzelKnot.alternating_family(k, r))
            name = rep.knot.name
            if rep.index != 2 ** k:
                bad.append(f"{name} index {rep.index}")
            if not assoc_equal(rep.alexander, family_alexander(k)):
                bad.append(f"{name} Delta {rep.alexander}")
            if (rep.ffp_overall, rep.rtfn, rep.biorder) != (FFP.SATISFIED, RTFN.PROVED, BiOrder.BIORDERABLE):
                bad.append(f"{name} {rep.ffp_overall.value}/{rep.rtfn.value}/{rep.biorder.value}")
    dt = time.perf_counter() - t0
    if dt > 120:
        bad.append(f"took {dt:.0f}s")
    gate(3, "alternating family k = 1..3, r = 1..10", bad, dt)


def _random_relations(rng, n):
    while True:
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        try:
            sys = build(Alphabet.indexed("a", n), rows)
        except ValueError:
            continue
        if sys.index <= 60:
            return rows, sys


def _random_knot(rng):
    while True:
        p = rng.choice([x for x in range(-8, 9) if x not in (0, -1)])
        q = rng.randint(1, 14)
        J = PretzelKnot.triple(p, q, rng.randint(q, 14))
        if not J.two_bridge:
            return J


def test_criterion_4_structural_identities():
    t0 = time.perf_counter()
    rng = random.Random(20240404)
    bad = []
    N = 1000

    for _ in range(N):
        n = rng.randint(1, 3)
        rows, sys = _random_relations(rng, n)
        if sys.rank != sys.index * (n - 1) + 1:
            bad.append(f"rank formula {rows}")

    for _ in range(N):
        n = rng.randint(1, 3)
        _, sys = _random_relations(rng, n)
        X, B = sys.ambient, sys.schreier_alphabet
        k = expand(sys, Word(B, random_reduced(rng, B.rank, rng.randint(1, 6))))
        c = Word(X, random_reduced(rng, n, rng.randint(1, 4)))
        k = c * k * ~c
        if expand(sys, rewrite(sys, k)) != k:
            bad.append(f"expand(rewrite({k})) != id")

    knots = [_random_knot(rng) for _ in range(N)]
    for J in knots:
        D = alexander(J)
        if D[-1] != 0 and _graph_index(J) != abs(D[0]):
            bad.append(f"{J} graph index")
        if not (D == D[::-1] or D == [-x for x in D[::-1]]) or abs(sum(D)) != 1:
            bad.append(f"{J} Delta {D}")
        if not check_words_match_seifert(J):
            bad.append(f"{J} Seifert rows")

    for _ in range(N):
        n = rng.randint(1, 3)
        _, sys = _random_relations(rng, n)
        g = fold(sys.ambient, list(sys.definitions))
        w = Word(sys.ambient, random_reduced(rng, n, rng.randint(1, 10)))
        if contains(g, w) != sys.in_kernel(w):
            bad.append(f"membership {w}")

    gate(4, f"six structural identities on {N} seeded instances each", bad, time.perf_counter() - t0)


def test_criterion_5_oracles():
    t0 = time.perf_counter()
    bad = []
    orbit2 = primitive_orbit(2, 8)
    n2 = 0
    for w in reduced_words(2, 8):
        if not cyclic_core(w):
            continue
        n2 += 1
        if is_primitive_small(w) != (canonical_cyclic(w) in orbit2):
            bad.append(f"rank 2 {w}")
    orbit3 = primitive_orbit(3, 8)
    rng = random.Random(3)
    sample3 = [random_reduced(rng, 3, rng.randint(1, 6)) for _ in range(2000)]
    for w in sample3:
        if cyclic_core(w) and is_primitive_small(w) != (canonical_cyclic(w) in orbit3):
            bad.append(f"rank 3 {w}")

    # pair obstruction against exhaustive extension search; in rank 2 a pair
    # is a free factor iff it is a basis
    pairs = 0
    for rank in (2, 3):
        X = Alphabet.indexed("a", rank)
        sys = from_generators(X, X.gens())
        B = sys.schreier_alphabet
        thirds = [Word(B, w) for w in reduced_words(rank, 5)] if rank == 3 else []
        short = sum(1 for w in thirds if len(w) <= 3)
        if rank == 2:
            cand = [(u, v) for u in reduced_words(2, 5) for v in reduced_words(2, 5) if len(u) + len(v) <= 6]
            cand += [(random_reduced(rng, 2, a), random_reduced(rng, 2, b))
                     for a, b in ((rng.randint(1, 5), rng.randint(1, 5)) for _ in range(1500))]
        else:
            cand = []
            for _ in range(800):
                tot = rng.randint(2, 10)
                a = rng.randint(1, tot - 1)
                cand.append((random_reduced(rng, 3, a), random_reduced(rng, 3, tot - a)))
        for u, v in cand:
            gu, gv = Word(B, u), Word(B, v)
            if not gu or not gv:
                continue
            pairs += 1
            neg, _ = certify_not_free_factor(sys, [gu, gv], Budget())
            obstructed = bool(neg or _abelian_check([gu, gv], rank))
            if rank == 2:
                extends = generates_whole_group(B, [gu, gv])
            else:
                # obstructed: no third word of length <= 3 completes the pair;
                # otherwise search up to length 5 for a completing word
                pool = thirds[:short] if obstructed else thirds
                extends = any(generates_whole_group(B, [gu, gv, w]) for w in pool)
            if obstructed == extends:
                bad.append(f"rank {rank} pair ({gu}, {gv}): obstructed={obstructed} extends={extends}")
    gate(5, f"oracles: {n2} rank-2 words, {len(sample3)} rank-3 words, {pairs} pairs", bad,
         time.perf_counter() - t0)


def test_criterion_6_pinned_strings():
    bad = [str(m) for m in pinned_strings()]
    for m, h in (([[1, -4], [-3, 7]], [[1, 1], [0, 5]]), ([[1, -4], [-3, 8]], [[1, 0], [0, 4]])):
        got = hermite_form(m).tolist()
        if got != h:
            bad.append(f"hermite_form({m}) = {got}")
    gate(6, "pinned rewriting strings and Hermite fixtures", bad)
