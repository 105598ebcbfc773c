"""Nielsen transformations, bounded Nielsen balls and Whitehead primitivity.

Primitivity uses Whitehead's length reduction on cyclic words.  For a
Whitehead automorphism ``(A, a)`` the change in cyclic length is
``cut(A) - deg(a)`` in the Whitehead graph, so all candidates are scored at
once (numpy, one row per subset) and only the best is applied explicitly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .words import Alphabet, Word, canonical_cyclic, cyclic_core, free_reduce

__all__ = [
    "SupportTooLarge",
    "WordPair",
    "MOVES",
    "apply_move",
    "nielsen_reduce",
    "nielsen_ball",
    "is_primitive_small",
    "is_proper_power",
    "whitehead_minimize",
]

DEFAULT_MAX_RANK = 3


class SupportTooLarge(ValueError):
    pass


# (name, target index, side, sign); side "R": t <- t * o^sign, "L": t <- o^sign * t
MOVES: tuple[str, ...] = (
    "swap", "inv0", "inv1",
    "r0+", "r0-", "l0+", "l0-",
    "r1+", "r1-", "l1+", "l1-",
)


def _inv(seq):
    return tuple(-x for x in reversed(seq))


def apply_move(pair: tuple[tuple[int, ...], tuple[int, ...]], move: str):
    u, v = pair
    if move == "swap":
        return v, u
    if move == "inv0":
        return _inv(u), v
    if move == "inv1":
        return u, _inv(v)
    side, t, sign = move[0], int(move[1]), move[2]
    tgt, oth = (u, v) if t == 0 else (v, u)
    o = oth if sign == "+" else _inv(oth)
    new = free_reduce(tgt + o) if side == "r" else free_reduce(o + tgt)
    return (new, v) if t == 0 else (u, new)


@dataclass(frozen=True)
class WordPair:
    first: Word
    second: Word
    log: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.first.alphabet != self.second.alphabet:
            raise ValueError("pair words use different alphabets")

    @property
    def alphabet(self) -> Alphabet:
        return self.first.alphabet

    def key(self):
        return self.first.seq, self.second.seq

    def words(self) -> tuple[Word, Word]:
        return self.first, self.second

    def move(self, m: str) -> "WordPair":
        u, v = apply_move(self.key(), m)
        A = self.alphabet
        return WordPair(Word(A, u, reduced=True), Word(A, v, reduced=True), self.log + (m,))

    def replay(self, log: Sequence[str]) -> "WordPair":
        p = self
        for m in log:
            p = p.move(m)
        return p

    def __str__(self):
        return f"({self.first}, {self.second})"


def nielsen_ball(p: WordPair, radius: int = 3) -> list[WordPair]:
    """All pairs within ``radius`` elementary Nielsen moves, BFS order, deduplicated."""
    seen = {p.key()}
    out = [p]
    frontier = [p]
    for _ in range(radius):
        nxt = []
        for q in frontier:
            for m in MOVES:
                r = q.move(m)
                k = r.key()
                if k not in seen:
                    seen.add(k)
                    nxt.append(r)
        out.extend(nxt)
        frontier = nxt
    return out


def nielsen_reduce(gens: Sequence[Word]) -> tuple[list[Word], list[tuple]]:
    """Shorten a generating tuple by Nielsen moves until no product of two
    members (or inverses) is shorter than a member it would replace.

    Returns the reduced list and the move log ``(i, j, side, sign)`` meaning
    ``u_i <- u_i u_j^sign`` (side "R") or ``u_j^sign u_i`` (side "L");
    ``("drop", i)`` removes a trivial member.
    """
    us = [w for w in gens]
    log: list[tuple] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(us) - 1, -1, -1):
            if not us[i].seq:
                del us[i]
                log.append(("drop", i))
                changed = True
        for i in range(len(us)):
            for j in range(len(us)):
                if i == j:
                    continue
                for side in ("R", "L"):
                    for sign in (1, -1):
                        o = us[j] if sign == 1 else ~us[j]
                        cand = us[i] * o if side == "R" else o * us[i]
                        if len(cand) < len(us[i]):
                            us[i] = cand
                            log.append((i, j, side, sign))
                            changed = True
                if changed:
                    break
            if changed:
                break
    return us, log


def is_proper_power(w: Word | tuple[int, ...]) -> bool:
    seq = w.seq if isinstance(w, Word) else tuple(w)
    core = cyclic_core(seq)
    n = len(core)
    if n == 0:
        raise ValueError("identity is not a valid input")
    for d in range(1, n // 2 + 1):
        if n % d == 0 and core == core[:d] * (n // d):
            return True
    return False


def _relabel(seq: tuple[int, ...]) -> tuple[tuple[int, ...], list[int]]:
    gens = sorted({abs(x) for x in seq})
    pos = {g: i + 1 for i, g in enumerate(gens)}
    return tuple(pos[abs(x)] * (1 if x > 0 else -1) for x in seq), [g - 1 for g in gens]


def _vid(x: int) -> int:
    return 2 * (abs(x) - 1) + (0 if x > 0 else 1)


@lru_cache(maxsize=None)
def _subset_masks(nv: int) -> np.ndarray:
    idx = np.arange(1 << nv, dtype=np.int64)
    return ((idx[:, None] >> np.arange(nv)) & 1).astype(np.int64)


def _best_whitehead(core: tuple[int, ...], m: int):
    """Most length-reducing ``(A, a)``; returns (delta, a_vertex, mask)."""
    nv = 2 * m
    W = np.zeros((nv, nv), dtype=np.int64)
    L = len(core)
    for i in range(L):
        u, v = _vid(core[i]), _vid(-core[(i + 1) % L])
        W[u, v] += 1
        W[v, u] += 1
    deg = W.sum(axis=1)
    X = _subset_masks(nv)
    cut = X @ deg - np.einsum("ij,ij->i", X @ W, X)
    best = (0, -1, 0)
    for a in range(nv):
        ainv = a ^ 1
        ok = (X[:, a] == 1) & (X[:, ainv] == 0)
        d = np.where(ok, cut - deg[a], np.iinfo(np.int64).max)
        k = int(np.argmin(d))
        if d[k] < best[0]:
            best = (int(d[k]), a, k)
    return best


def _apply_whitehead(core: tuple[int, ...], m: int, a: int, mask: int) -> tuple[int, ...]:
    def in_A(x):
        return (mask >> _vid(x)) & 1

    a_letter = (a // 2 + 1) * (1 if a % 2 == 0 else -1)
    images = {}
    for g in range(1, m + 1):
        if g == abs(a_letter):
            images[g] = (g,)
            continue
        x, xi = in_A(g), in_A(-g)
        img = (g,)
        if x:
            img = img + (a_letter,)
        if xi:
            img = (-a_letter,) + img
        images[g] = img
    out: list[int] = []
    for x in core:
        out.extend(images[x] if x > 0 else _inv(images[-x]))
    return cyclic_core(free_reduce(out))


def whitehead_minimize(w: Word | tuple[int, ...], max_rank: int = DEFAULT_MAX_RANK):
    """Cyclic word of minimal length in the automorphism orbit of ``w``,
    restricted to its support.  Returns ``(core, steps)``."""
    seq = w.seq if isinstance(w, Word) else tuple(w)
    seq, _ = _relabel(cyclic_core(seq))
    m = len({abs(x) for x in seq})
    if m > max_rank:
        raise SupportTooLarge(f"support of size {m} exceeds {max_rank}")
    core = seq
    steps = 0
    while len(core) > 1:
        delta, a, mask = _best_whitehead(core, m)
        if delta >= 0:
            break
        new = _apply_whitehead(core, m, a, mask)
        if len(new) - len(core) != delta:
            raise AssertionError("Whitehead graph prediction disagrees with explicit image")
        core = new
        steps += 1
    return core, steps


def is_primitive_small(w: Word | tuple[int, ...], max_rank: int = DEFAULT_MAX_RANK) -> bool:
    """True iff ``w`` belongs to a free basis of the free group on its support."""
    seq = w.seq if isinstance(w, Word) else tuple(w)
    if not seq:
        raise ValueError("identity is not a valid input")
    core = cyclic_core(seq)
    if len(core) == 1:
        return True
    m = len({abs(x) for x in core})
    if m > max_rank:
        raise SupportTooLarge(f"support of size {m} exceeds {max_rank}")
    ab: dict[int, int] = {}
    for x in core:
        ab[abs(x)] = ab.get(abs(x), 0) + (1 if x > 0 else -1)
    g = 0
    for v in ab.values():
        g = np.gcd(g, abs(v))
    if g != 1 or is_proper_power(core):
        return False
    core, _ = whitehead_minimize(core, max_rank)
    return len(core) == 1


def primitivity_key(w: Word | tuple[int, ...]) -> tuple[int, ...]:
    """Cache key: primitivity depends only on the conjugacy class up to
    inversion and renaming of generators."""
    seq = w.seq if isinstance(w, Word) else tuple(w)
    return _relabel(canonical_cyclic(seq))[0]


def primitive_orbit(rank: int, max_len: int) -> set[tuple[int, ...]]:
    """Canonical cyclic forms of primitive words of length <= ``max_len``,
    found by BFS from a letter under elementary Nielsen automorphisms with
    every intermediate cyclic word kept within ``max_len``.

    Independent of the Whitehead graph; used as a brute-force oracle.
    """
    letters = [g for g in range(1, rank + 1)]

    def images_for(t, o, side, sign):
        img = {}
        for g in letters:
            if g == t:
                extra = (o * sign,)
                img[g] = (g,) + extra if side == "R" else extra + (g,)
            else:
                img[g] = (g,)
        return img

    autos = []
    for t in letters:
        for o in letters:
            if o != t:
                for side in ("R", "L"):
                    for sign in (1, -1):
                        autos.append(images_for(t, o, side, sign))

    def apply(img, core):
        out: list[int] = []
        for x in core:
            out.extend(img[x] if x > 0 else _inv(img[-x]))
        return canonical_cyclic(free_reduce(out))

    start = canonical_cyclic((1,))
    seen = {start}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for img in autos:
            n = apply(img, c)
            if len(n) <= max_len and n not in seen:
                seen.add(n)
                queue.append(n)
    return seen
