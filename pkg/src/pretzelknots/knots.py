"""Odd pretzel knots: normalization, Seifert matrices, Alexander polynomials
and the push-off words generating ``H`` and ``K`` inside ``X = pi_1(S^3 - S)``.

Push-off model.  For ``P(k_1, ..., k_n)`` with every ``k_j = 2 m_j + 1`` the
standard surface is two disks joined by ``n`` bands.  ``X`` is free on
``a_1 .. a_{n-1}``; the meridian of band ``j`` is ``mu_j = a_j^-1 a_{j-1}``
with ``a_0 = a_n = 1`` (so ``mu_n ... mu_1 = 1``).  The loop ``x_j`` through
bands ``j`` and ``j+1`` pushes off to::

    H:  mu_{j+1}^(m_{j+1}+1)  mu_j^(-m_j)
    K:  a_j  mu_{j+1}^(m_{j+1})  mu_j^(-(m_j+1))  a_j^-1

For ``n = 3`` with ``a = a_1, b = a_2`` this is exactly the genus one list
``alpha_H = (b^-1 a)^(q+1) a^p`` etc.; for ``(3, -3, ..., 3, -3, 2r+1)`` the
``H`` words are the alternating-family generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .intmat import IntMatrix, determinant
from .words import Alphabet, Word, abelianize

__all__ = [
    "Family",
    "PretzelKnot",
    "AnalysisDeclined",
    "parse_knot",
    "normalize",
    "seifert_matrices",
    "alexander",
    "alexander_coefficients",
    "boundary_generators",
    "is_prime_power",
    "rhf",
    "assoc_equal",
]

_SPEC = re.compile(r"^\s*P\s*\(\s*([-+0-9,\s]+)\)\s*$", re.I)


class AnalysisDeclined(ValueError):
    """The knot is representable but outside the families analysed here."""


class Family(str, Enum):
    GENUS_ONE = "GenusOneTriple"
    ALTERNATING_SIGN = "AlternatingSignFamily"
    OTHER = "Other"


@dataclass(frozen=True)
class PretzelKnot:
    params: tuple[int, ...]
    family: Family
    p: int | None = None
    q: int | None = None
    r: int | None = None
    k: int | None = None
    family_r: int | None = None
    two_bridge: bool = False
    mirrored: bool = False
    flags: tuple[str, ...] = field(default=())

    @property
    def genus(self) -> int:
        return (len(self.params) - 1) // 2

    @property
    def name(self) -> str:
        return "P(" + ",".join(str(x) for x in self.params) + ")"

    def __str__(self):
        return self.name

    @classmethod
    def triple(cls, p: int, q: int, r: int) -> "PretzelKnot":
        """``P(2p+1, 2q+1, 2r+1)`` in (p, q, r) coordinates."""
        return normalize(2 * p + 1, 2 * q + 1, 2 * r + 1)

    @classmethod
    def alternating_family(cls, k: int, r: int) -> "PretzelKnot":
        """``P(3, -3, ..., 3, -3, 2r+1)`` with ``k`` copies of ``(3, -3)``.
        For ``k = 1`` this is the genus one triple ``P(-3, 3, 2r+1)``."""
        if k < 1:
            raise ValueError("k must be positive")
        if k == 1:
            return normalize(3, -3, 2 * r + 1)
        params = (3, -3) * k + (2 * r + 1,)
        return cls(params, Family.ALTERNATING_SIGN, k=k, family_r=r,
                   two_bridge=False)

    def band_twists(self) -> tuple[int, ...]:
        """``m_j`` with ``k_j = 2 m_j + 1`` in the band order the words use."""
        if self.family is Family.GENUS_ONE:
            return (self.p, self.q, self.r)
        return tuple((x - 1) // 2 for x in self.params)


def parse_knot(text: str) -> PretzelKnot:
    """Parse ``P(-5,7,9)`` or ``P(3,-3,3,-3,7)``."""
    m = _SPEC.match(text)
    if not m:
        raise ValueError(f"cannot parse knot spec {text!r}; expected e.g. P(-5,7,9)")
    try:
        params = tuple(int(x) for x in m.group(1).replace(" ", "").split(",") if x)
    except ValueError:
        raise ValueError(f"cannot parse knot spec {text!r}") from None
    if any(x % 2 == 0 for x in params):
        raise ValueError(f"{text}: every pretzel parameter must be odd")
    if len(params) == 3:
        return normalize(*params)
    n = len(params)
    if n >= 5 and n % 2 == 1 and params[:-1] == (3, -3) * ((n - 1) // 2):
        return PretzelKnot.alternating_family((n - 1) // 2, (params[-1] - 1) // 2)
    return PretzelKnot(params, Family.OTHER)


def normalize(k1: int, k2: int, k3: int) -> PretzelKnot:
    """Mirror if two or more parameters are negative, then order as
    ``(2p+1, 2q+1, 2r+1)`` with the negative one first and ``1 <= q <= r``."""
    ks = (k1, k2, k3)
    if any(x % 2 == 0 for x in ks):
        raise ValueError(f"P{ks}: every pretzel parameter must be odd")
    mirrored = sum(1 for x in ks if x < 0) >= 2
    if mirrored:
        ks = tuple(-x for x in ks)
    neg = sorted(x for x in ks if x < 0)
    pos = sorted(x for x in ks if x > 0)
    ordered = tuple(neg + pos)
    p, q, r = ((x - 1) // 2 for x in ordered)
    two_bridge = any(x in (1, -1) for x in ordered)
    flags = ("two_bridge",) if two_bridge else ()
    return PretzelKnot(ordered, Family.GENUS_ONE, p=p, q=q, r=r,
                       two_bridge=two_bridge, mirrored=mirrored, flags=flags)


def _require_analysable(J: PretzelKnot):
    if J.family is Family.OTHER:
        raise AnalysisDeclined(f"{J}: only genus one triples and P(3,-3,...,3,-3,2r+1) are analysed")
    if J.two_bridge:
        raise AnalysisDeclined(f"{J}: a parameter is +-1, so this is a two-bridge knot (excluded)")


def _band_words(m: tuple[int, ...]):
    n = len(m)
    if n == 3:
        X = Alphabet.of("a b")
    else:
        X = Alphabet(tuple(f"a{i}" for i in range(1, n)))
    gens = X.gens()
    one = X.identity()

    def a(j):
        return one if j in (0, n) else gens[j - 1]

    def mu(j):
        return ~a(j) * a(j - 1)

    H, K = [], []
    for j in range(1, n):
        H.append(mu(j + 1) ** (m[j] + 1) * mu(j) ** (-m[j - 1]))
        K.append(a(j) * mu(j + 1) ** m[j] * mu(j) ** (-(m[j - 1] + 1)) * ~a(j))
    return X, H, K


def boundary_generators(J: PretzelKnot) -> tuple[Alphabet, list[Word], list[Word]]:
    """``(X, H-generators, K-generators)``; genus one gives
    ``[alpha_H, beta_H]`` and ``[alpha_K, beta_K]`` over ``a, b``."""
    _require_analysable(J)
    return _band_words(J.band_twists())


def _seifert_from_twists(m: tuple[int, ...]) -> IntMatrix:
    n = len(m)
    g = n - 1
    rows = []
    for j in range(1, n):
        row = [0] * g
        row[j - 1] += m[j] + 1 + m[j - 1]
        if j < g:
            row[j] -= m[j] + 1
        if j > 1:
            row[j - 2] -= m[j - 1]
        rows.append(row)
    return IntMatrix.of(rows, g)


def seifert_matrices(J: PretzelKnot) -> tuple[IntMatrix, IntMatrix]:
    """``(S_plus, S_minus)`` with ``S_minus = S_plus^T``."""
    _require_analysable(J)
    S = _seifert_from_twists(J.band_twists())
    return S, S.transpose()


def alexander_coefficients(S: IntMatrix) -> list[int]:
    """Coefficients ``d_0 .. d_n`` of ``det(t S - S^T)``, stored verbatim."""
    n = S.rows
    ST = S.transpose()

    def at(t):
        return determinant([[t * S[i, j] - ST[i, j] for j in range(n)] for i in range(n)])

    xs = list(range(n + 1))
    ys = [at(x) for x in xs]
    # Newton divided differences, exact over Q
    coef = [Fraction(y) for y in ys]
    for j in range(1, n + 1):
        for i in range(n, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * (n + 1)
    for i in range(n, -1, -1):
        # poly = poly * (t - xs[i]) + coef[i]
        new = [Fraction(0)] * (n + 1)
        for d in range(n, -1, -1):
            if poly[d]:
                if d + 1 <= n:
                    new[d + 1] += poly[d]
                new[d] -= xs[i] * poly[d]
        new[0] += coef[i]
        poly = new
    if any(c.denominator != 1 for c in poly):
        raise AssertionError("non-integral Alexander polynomial")
    return [int(c) for c in poly]


def alexander(J: PretzelKnot) -> list[int]:
    return alexander_coefficients(seifert_matrices(J)[0])


def leading_coefficient(J: PretzelKnot) -> int:
    """``N = det(S_plus)``."""
    return determinant(seifert_matrices(J)[0])


def strip(coeffs: list[int]) -> list[int]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    i = 0
    while i < len(c) and c[i] == 0:
        i += 1
    return c[i:]


def assoc_equal(f: list[int], g: list[int]) -> bool:
    """Equality up to multiplication by ``+-t^k``."""
    f, g = strip(f), strip(g)
    return f == g or f == [-x for x in g]


def poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def is_prime_power(n: int) -> bool:
    """``n = p^k`` with ``k >= 1``; ``1`` is not a prime power here."""
    if n <= 0:
        raise ValueError("prime power test needs n >= 1")
    if n == 1:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def rhf(J: PretzelKnot) -> bool:
    """Rationally homologically fibered: ``det(S_plus) != 0``."""
    return leading_coefficient(J) != 0


def check_words_match_seifert(J: PretzelKnot) -> bool:
    X, H, K = boundary_generators(J)
    Sp, Sm = seifert_matrices(J)
    return [abelianize(w) for w in H] == Sp.tolist() and [abelianize(w) for w in K] == Sm.tolist()
