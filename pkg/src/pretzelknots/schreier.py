"""Reidemeister-Schreier for kernels of maps from a free group onto a finite
abelian group.

The transversal is the mixed-radix set ``a_0^k0 a_1^k1 ...`` read off the
Hermite form pivots.  It is prefix closed, so the nontrivial Schreier
generators ``x_{c,x} = c x (rep(cx))^-1`` form a free basis of the kernel.
They are named ``x0, x1, ...`` in transversal order, then generator order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .intmat import AbelianQuotient, IntMatrix, quotient
from .words import Alphabet, AlphabetMismatch, Word, abelianize, free_reduce, substitute

__all__ = ["InfiniteIndexError", "NotInKernelError", "SchreierSystem", "build", "rewrite", "expand"]


class InfiniteIndexError(ValueError):
    pass


class NotInKernelError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SchreierSystem:
    ambient: Alphabet
    quotient: AbelianQuotient
    cosets: tuple[tuple[int, ...], ...]
    transversal: tuple[Word, ...]
    schreier_alphabet: Alphabet
    definitions: tuple[Word, ...]
    # step[c][g] -> coset index of c*g ; gen_at[c][g] -> schreier index or -1
    step: tuple[tuple[int, ...], ...]
    back: tuple[tuple[int, ...], ...]
    gen_at: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, int], ...]

    @property
    def index(self) -> int:
        return len(self.cosets)

    @property
    def rank(self) -> int:
        return self.schreier_alphabet.rank

    def coset_of(self, w: Word) -> int:
        return self._coset_index[self.quotient.reduce(abelianize(w))]

    def in_kernel(self, w: Word) -> bool:
        return self.quotient.is_trivial(abelianize(w))

    def rewrite(self, w: Word) -> Word:
        return rewrite(self, w)

    def expand(self, w: Word) -> Word:
        return expand(self, w)

    def definition(self, name_or_index) -> Word:
        i = name_or_index if isinstance(name_or_index, int) else self.schreier_alphabet.index(name_or_index)
        return self.definitions[i]

    def describe(self) -> list[str]:
        names = self.schreier_alphabet.names
        return [f"{names[i]} = {self.definitions[i]}" for i in range(self.rank)]


def build(ambient: Alphabet, relations, prefix: str = "x") -> SchreierSystem:
    """Schreier system for the kernel of ``F(ambient) -> Z^n / rowspace``."""
    n = ambient.rank
    if not isinstance(relations, IntMatrix):
        relations = IntMatrix.of(relations, n)
    A = quotient(relations, n)
    if not A.finite:
        raise InfiniteIndexError(f"quotient by {relations} is infinite")
    cosets = tuple(A.representatives())
    where = {c: i for i, c in enumerate(cosets)}
    transversal = []
    for c in cosets:
        letters: list[int] = []
        for g, k in enumerate(c):
            letters.extend([g + 1] * k)
        transversal.append(Word(ambient, letters, reduced=True))

    step = []
    for c in cosets:
        row = []
        for g in range(n):
            v = list(c)
            v[g] += 1
            row.append(where[A.reduce(v)])
        step.append(tuple(row))
    back = [[0] * n for _ in cosets]
    for ci, row in enumerate(step):
        for g, t in enumerate(row):
            back[t][g] = ci

    defs: list[tuple[int, ...]] = []
    labels: list[tuple[int, int]] = []
    gen_at = []
    for ci in range(len(cosets)):
        row = []
        for g in range(n):
            t = step[ci][g]
            word = free_reduce(
                transversal[ci].seq + (g + 1,) + tuple(-x for x in reversed(transversal[t].seq))
            )
            if word:
                row.append(len(defs))
                defs.append(word)
                labels.append((ci, g))
            else:
                row.append(-1)
        gen_at.append(tuple(row))
    salpha = Alphabet.indexed(prefix, len(defs))
    sys = SchreierSystem(
        ambient=ambient,
        quotient=A,
        cosets=cosets,
        transversal=tuple(transversal),
        schreier_alphabet=salpha,
        definitions=tuple(Word(ambient, d, reduced=True) for d in defs),
        step=tuple(step),
        back=tuple(tuple(r) for r in back),
        gen_at=tuple(gen_at),
        labels=tuple(labels),
    )
    object.__setattr__(sys, "_coset_index", where)
    return sys


def rewrite(sys: SchreierSystem, w: Word) -> Word:
    """Express a kernel word in the Schreier basis."""
    if w.alphabet != sys.ambient:
        raise AlphabetMismatch(f"{w.alphabet} is not the ambient alphabet {sys.ambient}")
    c = 0
    out: list[int] = []
    step, back, gen_at = sys.step, sys.back, sys.gen_at
    for x in w.seq:
        if x > 0:
            g = x - 1
            s = gen_at[c][g]
            if s >= 0:
                out.append(s + 1)
            c = step[c][g]
        else:
            g = -x - 1
            c = back[c][g]
            s = gen_at[c][g]
            if s >= 0:
                out.append(-(s + 1))
    if c != 0:
        raise NotInKernelError(f"{w} is not in the kernel (ends in coset {sys.cosets[c]})")
    return Word(sys.schreier_alphabet, out)


def expand(sys: SchreierSystem, w: Word) -> Word:
    if w.alphabet != sys.schreier_alphabet:
        raise AlphabetMismatch("word is not over the Schreier alphabet")
    return substitute(w, list(sys.definitions)) if w.seq else sys.ambient.identity()


def from_generators(ambient: Alphabet, gens: Sequence[Word], prefix: str = "x") -> SchreierSystem:
    """System whose relation matrix is the abelianization stack of ``gens``."""
    return build(ambient, IntMatrix.of([abelianize(g) for g in gens], ambient.rank), prefix)
