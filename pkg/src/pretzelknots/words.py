"""Freely reduced words in a free group on a named alphabet.

Letters are stored as nonzero ints: ``+(i+1)`` is generator ``i`` and
``-(i+1)`` its inverse.  Every :class:`Word` is freely reduced at
construction, so equality of words is equality of group elements.

Plain-text syntax is whitespace separated letters with optional integer
exponents, e.g. ``"b^-1 a b^-1 a^-2"``; the identity prints as ``"1"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "Word",
    "abelianize",
    "concat_reduce",
    "cyclic_reduce",
    "free_reduce",
    "invert",
    "substitute",
    "support",
]

_TOKEN = re.compile(r"^([^\s^]+?)(?:\^(-?\d+))?$")


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("alphabet needs at least one generator")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for n in names:
            if not n or n == "1" or "^" in n or any(c.isspace() for c in n):
                raise ValueError(f"bad generator name {n!r}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def of(cls, names: str | Iterable[str]) -> "Alphabet":
        """``Alphabet.of("a b")`` or ``Alphabet.of(["x0", "x1"])``."""
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        return cls(tuple(names))

    @classmethod
    def indexed(cls, prefix: str, n: int) -> "Alphabet":
        return cls(tuple(f"{prefix}{i}" for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} not in alphabet {self.names}") from None

    def gen(self, name_or_index) -> "Word":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        if not 0 <= i < self.rank:
            raise IndexError(i)
        return Word(self, (i + 1,))

    def gens(self) -> list["Word"]:
        return [Word(self, (i + 1,)) for i in range(self.rank)]

    def identity(self) -> "Word":
        return Word(self, ())

    def parse(self, text: str) -> "Word":
        return Word.parse(self, text)

    def __str__(self):
        return "<" + ", ".join(self.names) + ">"


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Word:
    """An element of the free group on ``alphabet``, always freely reduced."""

    __slots__ = ("alphabet", "seq", "_hash")

    def __init__(self, alphabet: Alphabet, letters: Iterable[int] = (), *, reduced=False):
        self.alphabet = alphabet
        seq = tuple(letters) if reduced else free_reduce(letters)
        if not reduced:
            n = alphabet.rank
            for x in seq:
                if x == 0 or abs(x) > n:
                    raise ValueError(f"letter {x} outside alphabet of rank {n}")
        self.seq = seq
        self._hash = None

    @classmethod
    def from_pairs(cls, alphabet: Alphabet, pairs: Iterable[tuple[int, int]]) -> "Word":
        return cls(alphabet, ((g + 1) * s for g, s in pairs))

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "Word":
        text = text.strip()
        if text in ("", "1"):
            return cls(alphabet, ())
        letters: list[int] = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"cannot parse token {tok!r}")
            if m.group(1) not in alphabet.names:
                raise ValueError(f"unknown letter {m.group(1)!r}; alphabet is {' '.join(alphabet.names)}")
            g = alphabet.index(m.group(1)) + 1
            e = int(m.group(2)) if m.group(2) is not None else 1
            letters.extend([g if e > 0 else -g] * abs(e))
        return cls(alphabet, letters)

    @property
    def letters(self) -> tuple[tuple[int, int], ...]:
        """(generator-index, sign) pairs."""
        return tuple((abs(x) - 1, 1 if x > 0 else -1) for x in self.seq)

    def syllables(self) -> list[tuple[int, int]]:
        """Run-length form: (generator-index, exponent)."""
        out: list[tuple[int, int]] = []
        for x in self.seq:
            g, s = abs(x) - 1, (1 if x > 0 else -1)
            if out and out[-1][0] == g:
                out[-1] = (g, out[-1][1] + s)
            else:
                out.append((g, s))
        return out

    def __len__(self):
        return len(self.seq)

    def __bool__(self):
        return bool(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.seq == other.seq and self.alphabet == other.alphabet

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alphabet.names, self.seq))
        return self._hash

    def __lt__(self, other: "Word"):
        return (len(self.seq), self.seq) < (len(other.seq), other.seq)

    def _check(self, other: "Word"):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(f"{self.alphabet} vs {other.alphabet}")

    def __mul__(self, other: "Word") -> "Word":
        return concat_reduce(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def inverse(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else invert(self)
        return Word(self.alphabet, base.seq * abs(n))

    def is_identity(self) -> bool:
        return not self.seq

    def __str__(self):
        if not self.seq:
            return "1"
        names = self.alphabet.names
        return " ".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in self.syllables())

    def __repr__(self):
        return f"Word({str(self)!r})"


def concat_reduce(u: Word, v: Word) -> Word:
    u._check(v)
    a, b = u.seq, v.seq
    i = 0
    n = min(len(a), len(b))
    while i < n and a[len(a) - 1 - i] == -b[i]:
        i += 1
    return Word(u.alphabet, a[: len(a) - i] + b[i:], reduced=True)


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple(-x for x in reversed(w.seq)), reduced=True)


def substitute(w: Word, images: Mapping[str | int, Word] | Sequence[Word]) -> Word:
    """Apply the homomorphism sending generator ``g`` to ``images[g]``.

    ``images`` may be a sequence indexed by generator, or a mapping keyed by
    generator name or index.
    """
    alpha = w.alphabet
    table: list[Word | None] = [None] * alpha.rank
    if isinstance(images, Mapping):
        for k, v in images.items():
            table[k if isinstance(k, int) else alpha.index(k)] = v
    else:
        if len(images) != alpha.rank:
            raise ValueError("need one image per generator")
        table = list(images)
    target = None
    for img in table:
        if img is not None:
            if target is None:
                target = img.alphabet
            elif img.alphabet != target:
                raise AlphabetMismatch("images live in different alphabets")
    out: list[int] = []
    inv_cache: dict[int, tuple[int, ...]] = {}
    for x in w.seq:
        img = table[abs(x) - 1]
        if img is None:
            raise KeyError(f"no image for generator {alpha.names[abs(x) - 1]!r}")
        if x > 0:
            out.extend(img.seq)
        else:
            s = inv_cache.get(x)
            if s is None:
                s = inv_cache[x] = tuple(-y for y in reversed(img.seq))
            out.extend(s)
    if target is None:
        target = alpha
    return Word(target, free_reduce(out), reduced=True)


def abelianize(w: Word) -> list[int]:
    v = [0] * w.alphabet.rank
    for x in w.seq:
        if x > 0:
            v[x - 1] += 1
        else:
            v[-x - 1] -= 1
    return v


def support(w: Word) -> set[str]:
    names = w.alphabet.names
    return {names[abs(x) - 1] for x in w.seq}


def support_indices(w: Word) -> list[int]:
    return sorted({abs(x) - 1 for x in w.seq})


def cyclic_reduce(w: Word) -> Word:
    s = w.seq
    i, j = 0, len(s) - 1
    while i < j and s[i] == -s[j]:
        i += 1
        j -= 1
    return Word(w.alphabet, s[i : j + 1], reduced=True)


def cyclic_core(seq: tuple[int, ...]) -> tuple[int, ...]:
    i, j = 0, len(seq) - 1
    while i < j and seq[i] == -seq[j]:
        i += 1
        j -= 1
    return seq[i : j + 1]


def canonical_cyclic(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Least rotation of the cyclic core, also over the inverse word.

    Two words get the same key iff they are conjugate up to inversion.
    """
    core = cyclic_core(seq)
    if not core:
        return core
    inv = tuple(-x for x in reversed(core))
    n = len(core)
    return min(min(c[i:] + c[:i] for i in range(n)) for c in (core, inv))
