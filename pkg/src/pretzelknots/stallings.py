"""Stallings folded graphs of finitely generated subgroups of a free group."""

from __future__ import annotations

import math
from collections import deque
from typing import Sequence

from .words import Alphabet, AlphabetMismatch, Word

__all__ = ["SubgroupGraph", "from_generators", "contains", "index", "generates_whole"]

INFINITE = math.inf


class _Folder:
    """Union-find over vertices; ``edges[v][label] -> vertex`` with signed
    labels ``+-(g+1)``.  Targets may be stale ids; always go through find."""

    def __init__(self):
        self.parent: list[int] = [0]
        self.edges: list[dict[int, int] | None] = [{}]

    def new_vertex(self) -> int:
        self.parent.append(len(self.parent))
        self.edges.append({})
        return len(self.parent) - 1

    def find(self, v: int) -> int:
        p = self.parent
        root = v
        while p[root] != root:
            root = p[root]
        while p[v] != root:
            p[v], v = root, p[v]
        return root

    def add_edge(self, u: int, label: int, v: int):
        u, v = self.find(u), self.find(v)
        pending: list[tuple[int, int]] = []
        for a, lab, b in ((u, label, v), (v, -label, u)):
            e = self.edges[a]
            old = e.get(lab)
            if old is None:
                e[lab] = b
            elif self.find(old) != self.find(b):
                pending.append((old, b))
        for a, b in pending:
            self.merge(a, b)

    def merge(self, a: int, b: int):
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            ea, eb = self.edges[a], self.edges[b]
            if len(ea) < len(eb) or (len(ea) == len(eb) and b < a):
                a, b, ea, eb = b, a, eb, ea
            self.parent[b] = a
            for lab, t in eb.items():
                old = ea.get(lab)
                if old is None:
                    ea[lab] = t
                elif self.find(old) != self.find(t):
                    queue.append((old, t))
            self.edges[b] = None

    def add_loop(self, base: int, seq: Sequence[int]):
        if not seq:
            return
        # read the longest prefix already present, then lay down fresh edges
        v = self.find(base)
        i = 0
        while i < len(seq):
            t = self.edges[v].get(seq[i])
            if t is None:
                break
            v = self.find(t)
            i += 1
        if i == len(seq):
            if v != self.find(base):
                self.merge(v, base)
            return
        j = len(seq)
        w = self.find(base)
        while j > i:
            t = self.edges[w].get(-seq[j - 1])
            if t is None:
                break
            w = self.find(t)
            j -= 1
        if j == i:
            # the word is already readable; its endpoints must coincide
            if v != w:
                self.merge(v, w)
            return
        for k in range(i, j - 1):
            nv = self.new_vertex()
            self.add_edge(v, seq[k], nv)
            v = nv
        self.add_edge(v, seq[j - 1], w)


class SubgroupGraph:
    """Folded, connected, labelled graph with a base vertex (vertex 0).

    Vertices are numbered by breadth-first search from the base in label
    order ``+1, -1, +2, -2, ...`` so equal subgroups give equal graphs.
    """

    def __init__(self, alphabet: Alphabet, out: list[dict[int, int]]):
        self.alphabet = alphabet
        self.out = out

    @property
    def vertex_count(self) -> int:
        return len(self.out)

    @property
    def edge_count(self) -> int:
        return sum(1 for e in self.out for lab in e if lab > 0)

    @property
    def subgroup_rank(self) -> int:
        return self.edge_count - self.vertex_count + 1

    def is_covering(self) -> bool:
        full = 2 * self.alphabet.rank
        return all(len(e) == full for e in self.out)

    def signature(self) -> tuple:
        return tuple(tuple(sorted(e.items())) for e in self.out)

    def __eq__(self, other):
        if not isinstance(other, SubgroupGraph):
            return NotImplemented
        return self.alphabet == other.alphabet and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def contains(self, w: Word) -> bool:
        return contains(self, w)

    def index(self):
        return index(self)

    def to_dot(self) -> str:
        names = self.alphabet.names
        lines = ["digraph subgroup {", '  0 [shape=doublecircle];']
        for v, e in enumerate(self.out):
            for lab, t in sorted(e.items()):
                if lab > 0:
                    lines.append(f'  {v} -> {t} [label="{names[lab - 1]}"];')
        lines.append("}")
        return "\n".join(lines)

    def __repr__(self):
        return f"SubgroupGraph(vertices={self.vertex_count}, edges={self.edge_count})"


def _label_order(rank: int) -> list[int]:
    order = []
    for g in range(1, rank + 1):
        order += [g, -g]
    return order


def from_generators(alphabet: Alphabet, gens: Sequence[Word]) -> SubgroupGraph:
    f = _Folder()
    for w in gens:
        if w.alphabet != alphabet:
            raise AlphabetMismatch(f"generator {w} not over {alphabet}")
        f.add_loop(0, w.seq)
    base = f.find(0)
    labels = _label_order(alphabet.rank)
    number = {base: 0}
    order = [base]
    queue = deque([base])
    while queue:
        v = queue.popleft()
        e = f.edges[v]
        for lab in labels:
            t = e.get(lab)
            if t is None:
                continue
            t = f.find(t)
            if t not in number:
                number[t] = len(order)
                order.append(t)
                queue.append(t)
    out = []
    for v in order:
        e = f.edges[v]
        out.append({lab: number[f.find(t)] for lab, t in e.items()})
    return SubgroupGraph(alphabet, out)


def contains(g: SubgroupGraph, w: Word) -> bool:
    if w.alphabet != g.alphabet:
        raise AlphabetMismatch("word and graph use different alphabets")
    v = 0
    out = g.out
    for x in w.seq:
        v = out[v].get(x)
        if v is None:
            return False
    return v == 0


def index(g: SubgroupGraph):
    """Number of vertices if the graph is a covering, else ``math.inf``."""
    return g.vertex_count if g.is_covering() else INFINITE


def generates_whole(g: SubgroupGraph, rank: int | None = None) -> bool:
    rank = g.alphabet.rank if rank is None else rank
    return g.vertex_count == 1 and len(g.out[0]) == 2 * rank == 2 * g.alphabet.rank


def generates_whole_group(alphabet: Alphabet, gens: Sequence[Word]) -> bool:
    return generates_whole(from_generators(alphabet, gens))
