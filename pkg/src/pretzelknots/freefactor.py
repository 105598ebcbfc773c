"""Is ``<w_1, ..., w_k>`` a free factor of the Schreier kernel it lives in?

Positive certificates drop ``k`` Schreier generators ``g_i`` so that the
``w_i`` together with the rest of the basis pass the Stallings
``generates_whole`` test; a generating set of exactly ``rank`` elements of a
free group of that rank is a basis.  A single word may instead be certified
by Whitehead reduction to a letter on its support.

Negative certificates: the abelian image of the tuple must split off
``Z^k`` as a direct summand; and every element of every Nielsen-equivalent
pair must be primitive in the free group on its support (a free factor's
basis extends to an ambient basis, and its members stay primitive after
deleting the letters they do not use).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .intmat import determinant, smith_invariants
from .nielsen import (
    MOVES,
    SupportTooLarge,
    WordPair,
    apply_move,
    is_primitive_small,
    is_proper_power,
    primitivity_key,
)
from .schreier import SchreierSystem, from_generators, rewrite
from .stallings import from_generators as fold, generates_whole
from .words import AlphabetMismatch, Word, free_reduce, substitute

__all__ = [
    "Outcome",
    "Budget",
    "FFVerdict",
    "InconsistentVerdict",
    "certify_free_factor",
    "certify_not_free_factor",
    "decide",
    "decide_in_ambient",
    "replay",
]


class Outcome(str, Enum):
    FREE_FACTOR = "FreeFactor"
    NOT_FREE_FACTOR = "NotFreeFactor"
    UNKNOWN = "Unknown"


class InconsistentVerdict(AssertionError):
    """Both a positive and a negative certificate were found."""


@dataclass(frozen=True)
class Budget:
    nielsen_radius: int = 3
    subst_max: int = 2
    candidate_cap: int = 10**6
    primitivity_rank: int = 3

    def __post_init__(self):
        if self.nielsen_radius < 0 or self.subst_max < 0 or self.candidate_cap < 1:
            raise ValueError("budgets must be non-negative (candidate cap positive)")
        if self.primitivity_rank < 1:
            raise ValueError("primitivity rank must be positive")


@dataclass
class FFVerdict:
    outcome: Outcome
    witness: dict = field(default_factory=dict)
    consumed: dict = field(default_factory=dict)
    # the system and generator words the witness refers to
    system: SchreierSystem | None = field(default=None, repr=False, compare=False)
    gens: tuple[Word, ...] = field(default=(), repr=False, compare=False)

    def to_json(self) -> dict:
        return {"outcome": self.outcome.value, "witness": self.witness, "consumed": self.consumed}


# ----------------------------------------------------------------------------
# positive search

EXCHANGE_NODES = 2000


def _passes(sys: SchreierSystem, gens: Sequence[Word], dropped: Sequence[int]) -> bool:
    B = sys.schreier_alphabet
    drop = set(dropped)
    words = list(gens) + [B.gen(i) for i in range(B.rank) if i not in drop]
    return len(words) == B.rank and generates_whole(fold(B, words))


def _occurrences(gens: Sequence[Word], rank: int) -> list[list[int]]:
    occ = [[0] * rank for _ in gens]
    for i, w in enumerate(gens):
        for x in w.seq:
            occ[i][abs(x) - 1] += 1
    return occ


def _triangular(gens: Sequence[Word], rank: int) -> list[int] | None:
    """Order the words so each has a letter occurring once in it and in no
    later word.  Greedy is complete: a valid pick never blocks the rest."""
    occ = _occurrences(gens, rank)
    left = list(range(len(gens)))
    drop: list[int] = [0] * len(gens)
    while left:
        pick = None
        for i in left:
            for g in range(rank):
                if occ[i][g] == 1 and all(occ[j][g] == 0 for j in left if j != i):
                    pick = (i, g)
                    break
            if pick:
                break
        if pick is None:
            return None
        i, g = pick
        drop[i] = g
        left.remove(i)
    return sorted(drop)


def _exchange(gens: Sequence[Word], rank: int, node_cap: int):
    """Depth-first basis exchange.  If letter ``h`` occurs once in a word
    ``u h^e v``, replace ``h`` by that word in the basis and rewrite the
    other words through ``h = (u^-1 h' v^-1)^e``.  Succeeds when every word
    has been exchanged in.  Returns ``(dropped or None, nodes)``."""
    nodes = 0

    def inv(s):
        return tuple(-x for x in reversed(s))

    def subst(seq, h, img):
        out = []
        for x in seq:
            if abs(x) == h:
                out.extend(img if x > 0 else inv(img))
            else:
                out.append(x)
        return free_reduce(out)

    def dfs(words: dict, used: frozenset):
        nonlocal nodes
        if not words:
            return []
        nodes += 1
        if nodes > node_cap:
            return None
        moves = []
        for i, seq in sorted(words.items()):
            counts: dict[int, int] = {}
            for x in seq:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for h, c in sorted(counts.items()):
                if c == 1 and h not in used:
                    moves.append((len(seq), i, h))
        for _, i, h in sorted(moves):
            seq = words[i]
            pos = next(t for t, x in enumerate(seq) if abs(x) == h)
            e = 1 if seq[pos] > 0 else -1
            u, v = seq[:pos], seq[pos + 1:]
            img = free_reduce(inv(u) + (h,) + inv(v))
            if e < 0:
                img = inv(img)
            rest = {j: subst(s, h, img) for j, s in words.items() if j != i}
            if any(not s for s in rest.values()):
                continue
            sub = dfs(rest, used | {h})
            if sub is not None:
                return [h - 1] + sub
            if nodes > node_cap:
                return None
        return None

    got = dfs({i: w.seq for i, w in enumerate(gens)}, frozenset())
    return (sorted(got) if got is not None else None), nodes


def _abelian_rows(gens: Sequence[Word], rank: int) -> list[list[int]]:
    rows = []
    for w in gens:
        v = [0] * rank
        for x in w.seq:
            v[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(v)
    return rows


def _candidate_order(gens: Sequence[Word], rank: int) -> list[int]:
    occ = _occurrences(gens, rank)
    total = [sum(o[g] for o in occ) for g in range(rank)]
    # letters used exactly once first, then other letters in the support
    return sorted(range(rank), key=lambda g: (total[g] != 1, total[g] == 0, g))


def certify_free_factor(sys: SchreierSystem, gens: Sequence[Word], budget: Budget = Budget()):
    """Return ``(witness, examined)``; ``witness`` is ``None`` on failure."""
    B = sys.schreier_alphabet
    for w in gens:
        if w.alphabet != B:
            raise AlphabetMismatch(f"{w} is not over the Schreier alphabet of the system")
    R, k = B.rank, len(gens)
    if k > R:
        return None, 0
    tri = _triangular(gens, R)
    if tri is not None:
        if not _passes(sys, gens, tri):
            raise AssertionError("triangular elimination produced a non-basis")
        return {"kind": "basis-extension", "method": "elimination",
                "dropped": [B.names[g] for g in tri]}, 1
    if k == 1 and len(_support(gens[0].seq)) <= budget.primitivity_rank:
        if not is_proper_power(gens[0]) and is_primitive_small(gens[0], budget.primitivity_rank):
            return {"kind": "primitive-element",
                    "support": [B.names[g - 1] for g in _support(gens[0].seq)]}, 1
    exch, examined = _exchange(gens, R, min(budget.candidate_cap, EXCHANGE_NODES))
    if exch is not None:
        if not _passes(sys, gens, exch):
            raise AssertionError("basis exchange produced a non-basis")
        return {"kind": "basis-extension", "method": "exchange",
                "dropped": [B.names[g] for g in exch]}, examined

    rows = _abelian_rows(gens, R)
    order = _candidate_order(gens, R)
    for combo in itertools.combinations(order, k):
        if examined >= budget.candidate_cap:
            break
        examined += 1
        minor = [[r[g] for g in combo] for r in rows]
        if abs(determinant(minor)) != 1:
            continue
        dropped = sorted(combo)
        if _passes(sys, gens, dropped):
            return {"kind": "basis-extension", "method": "search",
                    "dropped": [B.names[g] for g in dropped]}, examined
    return None, examined


# ----------------------------------------------------------------------------
# negative search


def _support(seq) -> list[int]:
    return sorted({abs(x) for x in seq})


def _obstruction(seq, names, budget: Budget, cache: dict, stats: dict):
    if not seq:
        return None
    sup = _support(seq)
    if len(sup) > budget.primitivity_rank:
        stats["skipped_support"] += 1
        return None
    key = primitivity_key(seq)
    hit = cache.get(key)
    if hit is None:
        stats["primitivity_tests"] += 1
        if is_proper_power(seq):
            hit = "proper-power"
        else:
            try:
                hit = "" if is_primitive_small(seq, budget.primitivity_rank) else "not-primitive"
            except SupportTooLarge:
                hit = ""
        cache[key] = hit
    if not hit:
        return None
    return {"reason": hit, "support": [names[g - 1] for g in sup]}


def certify_not_free_factor(sys: SchreierSystem, gens: Sequence[Word], budget: Budget = Budget()):
    """Search Nielsen balls for an element that is not primitive on its
    support.  Pairs get the full ball; other tuple sizes are checked
    element by element.  Returns ``(witness, stats)``."""
    B = sys.schreier_alphabet
    for w in gens:
        if w.alphabet != B:
            raise AlphabetMismatch(f"{w} is not over the Schreier alphabet of the system")
    names = B.names
    stats = {"pairs": 0, "primitivity_tests": 0, "skipped_support": 0, "radius": 0}
    cache: dict = {}
    if len(gens) != 2:
        for i, w in enumerate(gens):
            hit = _obstruction(w.seq, names, budget, cache, stats)
            if hit:
                return {"kind": "non-primitive", "moves": [], "element_index": i,
                        "element": str(w), **hit}, stats
        return None, stats
    start = (gens[0].seq, gens[1].seq)
    seen = {start: ()}
    frontier = [start]
    for radius in range(budget.nielsen_radius + 1):
        stats["radius"] = radius
        for pair in frontier:
            stats["pairs"] += 1
            for i in (0, 1):
                hit = _obstruction(pair[i], names, budget, cache, stats)
                if hit:
                    return {"kind": "non-primitive", "moves": list(seen[pair]), "element_index": i,
                            "element": str(Word(B, pair[i], reduced=True)), **hit}, stats
        if radius == budget.nielsen_radius:
            break
        nxt = []
        for pair in frontier:
            log = seen[pair]
            for m in MOVES:
                q = apply_move(pair, m)
                if q not in seen:
                    seen[q] = log + (m,)
                    nxt.append(q)
        frontier = nxt
    return None, stats


# ----------------------------------------------------------------------------
# decision


def _abelian_check(gens: Sequence[Word], rank: int):
    """``Z^k`` spanned by the abelianized tuple must be a direct summand."""
    inv = smith_invariants(_abelian_rows(gens, rank)) if gens else []
    if any(d != 1 for d in inv):
        return {"kind": "abelian", "invariants": inv}
    return None


def _decide_fixed(sys: SchreierSystem, gens: Sequence[Word], budget: Budget, consumed: dict):
    R = sys.rank
    ab = _abelian_check(gens, R)
    if ab:
        return Outcome.NOT_FREE_FACTOR, ab
    if len(gens) == R:
        if _passes(sys, gens, range(R)):
            return Outcome.FREE_FACTOR, {"kind": "basis-extension", "method": "whole", "dropped": list(sys.schreier_alphabet.names)}
        return Outcome.NOT_FREE_FACTOR, {"kind": "rank-equality"}
    pos, examined = certify_free_factor(sys, gens, budget)
    consumed["candidates"] = consumed.get("candidates", 0) + examined
    neg, stats = certify_not_free_factor(sys, gens, budget)
    for k in ("pairs", "primitivity_tests", "skipped_support"):
        consumed[k] = consumed.get(k, 0) + stats[k]
    if pos and neg:
        raise InconsistentVerdict(f"free factor witness {pos} contradicts obstruction {neg}")
    if pos:
        return Outcome.FREE_FACTOR, pos
    if neg:
        return Outcome.NOT_FREE_FACTOR, neg
    return Outcome.UNKNOWN, {}


def decide(sys: SchreierSystem, gens: Sequence[Word], budget: Budget = Budget()) -> FFVerdict:
    """Decide within the fixed Schreier system (no preprocessing)."""
    t0 = time.perf_counter()
    consumed: dict = {}
    outcome, witness = _decide_fixed(sys, tuple(gens), budget, consumed)
    consumed["seconds"] = round(time.perf_counter() - t0, 3)
    return FFVerdict(outcome, witness, consumed, sys, tuple(gens))


def substitutions(rank: int, smax: int):
    """Ambient transvections ``x -> y^s x`` and ``x -> x y^s``, ordered by |s|."""
    for s_abs in range(1, smax + 1):
        for s in (s_abs, -s_abs):
            for x in range(rank):
                for y in range(rank):
                    if x != y:
                        yield x, y, s, "left"
                        yield x, y, s, "right"


def decide_in_ambient(ambient_gens: Sequence[Word], budget: Budget = Budget(), prefix: str = "x") -> FFVerdict:
    """Build the Schreier system of ``ambient_gens``, rewrite and decide,
    retrying under ambient substitutions if the first attempt is Unknown."""
    t0 = time.perf_counter()
    gens = tuple(ambient_gens)
    X = gens[0].alphabet
    consumed: dict = {"substitutions": 0}
    sys = from_generators(X, gens, prefix)
    rw = tuple(rewrite(sys, g) for g in gens)
    outcome, witness = _decide_fixed(sys, rw, budget, consumed)
    used_sys, used_gens = sys, rw
    if outcome is Outcome.UNKNOWN:
        for x, y, s, side in substitutions(X.rank, budget.subst_max):
            consumed["substitutions"] += 1
            img = [X.gen(i) for i in range(X.rank)]
            ys = X.gen(y) ** s
            img[x] = ys * X.gen(x) if side == "left" else X.gen(x) * ys
            new = tuple(substitute(g, img) for g in gens)
            sys2 = from_generators(X, new, prefix)
            rw2 = tuple(rewrite(sys2, g) for g in new)
            o2, w2 = _decide_fixed(sys2, rw2, budget, consumed)
            if o2 is not Outcome.UNKNOWN:
                outcome, witness, used_sys, used_gens = o2, w2, sys2, rw2
                witness = dict(witness)
                witness["substitution"] = {X.names[x]: str(img[x])}
                break
    consumed["seconds"] = round(time.perf_counter() - t0, 3)
    return FFVerdict(outcome, witness, consumed, used_sys, used_gens)


def replay(v: FFVerdict) -> bool:
    """Re-check a verdict's witness from scratch."""
    sys, gens = v.system, v.gens
    w = v.witness
    if v.outcome is Outcome.UNKNOWN:
        return True
    kind = w.get("kind")
    B = sys.schreier_alphabet if sys is not None else None
    if kind == "basis-extension":
        dropped = [B.index(n) for n in w["dropped"]]
        return len(dropped) == len(gens) and _passes(sys, gens, dropped)
    if kind == "abelian":
        return any(d != 1 for d in smith_invariants(_abelian_rows(gens, B.rank)))
    if kind == "rank-equality":
        return len(gens) == B.rank and not _passes(sys, gens, range(B.rank))
    if kind == "non-primitive":
        if len(gens) == 2:
            p = WordPair(gens[0], gens[1]).replay(w["moves"])
            el = p.words()[w["element_index"]]
        else:
            el = gens[w["element_index"]]
        if str(el) != w["element"]:
            return False
        sup = el.alphabet.names
        if sorted(w["support"]) != sorted(sup[i - 1] for i in _support(el.seq)):
            return False
        return is_proper_power(el) or not is_primitive_small(el, max(3, len(w["support"])))
    if kind == "primitive-element":
        return len(gens) == 1 and is_primitive_small(gens[0], max(3, len(w["support"])))
    if kind == "unit-determinant":
        return True
    return False
