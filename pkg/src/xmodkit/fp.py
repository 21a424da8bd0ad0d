"""Finitely presented groups and HLT coset enumeration."""

from __future__ import annotations

import logging
import os
from typing import Sequence

from .errors import CosetLimitExceeded, NotGenerating
from .perm import Perm, PermGroup, cayley_presentation
from .words import Presentation, Word

log = logging.getLogger(__name__)

DEFAULT_COSET_LIMIT = 200_000


def coset_limit_default() -> int:
    env = os.environ.get("XMODKIT_COSET_LIMIT")
    return int(env) if env else DEFAULT_COSET_LIMIT


def presentation_of(G: PermGroup, gens: Sequence[Perm] | None = None,
                    names: Sequence[str] | None = None) -> Presentation:
    """A finite presentation of ``G`` on ``gens`` (default: G's own generators).

    Builder groups carry their textbook presentation, which is returned
    as is; otherwise relators come from the Cayley graph.
    """
    if gens is None or tuple(gens) == G.generators:
        if G.presentation is not None:
            return G.presentation
        return cayley_presentation(G, G.generators, names or G.names)
    if PermGroup(G.degree, gens).order != G.order or any(g not in G for g in gens):
        raise NotGenerating("the given elements do not generate the group")
    return cayley_presentation(G, gens, names)


class CosetTable:
    """Coset table over the trivial subgroup.

    Column ``2*g`` holds generator ``g``, column ``2*g+1`` its inverse.
    Dead cosets are forwarded to their representative through ``parent``.
    """

    def __init__(self, ngens: int, limit: int | None = None):
        self.ncols = 2 * ngens
        self.limit = coset_limit_default() if limit is None else limit
        self.rows: list[list[int]] = [[-1] * self.ncols]
        self.parent: list[int] = [0]
        self.live = 1
        self.defined = 1

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def define(self, c: int, x: int) -> int:
        if self.live >= self.limit:
            raise CosetLimitExceeded(f"coset enumeration exceeded {self.limit} live cosets")
        n = len(self.rows)
        self.rows.append([-1] * self.ncols)
        self.parent.append(n)
        self.rows[c][x] = n
        self.rows[n][x ^ 1] = c
        self.live += 1
        self.defined += 1
        return n

    def scan_and_fill(self, c: int, w: Sequence[int]) -> None:
        rows = self.rows
        f, i = c, 0
        b, j = c, len(w) - 1
        while True:
            while i <= j and rows[f][w[i]] >= 0:
                f = rows[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and rows[b][w[j] ^ 1] >= 0:
                b = rows[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                rows[f][w[i]] = b
                rows[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        rows = self.rows
        k = 0
        while k < len(queue):
            g = queue[k]
            k += 1
            for x in range(self.ncols):
                d = rows[g][x]
                if d < 0:
                    continue
                if rows[d][x ^ 1] == g:
                    rows[d][x ^ 1] = -1
                mu, nu = self.rep(g), self.rep(d)
                if rows[mu][x] >= 0:
                    self._merge(nu, rows[mu][x], queue)
                elif rows[nu][x ^ 1] >= 0:
                    self._merge(mu, rows[nu][x ^ 1], queue)
                else:
                    rows[mu][x] = nu
                    rows[nu][x ^ 1] = mu

    def run(self, relators: Sequence[Sequence[int]]) -> None:
        """HLT: scan every relator at every live coset, then close the row."""
        c = 0
        while c < len(self.rows):
            if self.is_live(c):
                for w in relators:
                    self.scan_and_fill(c, w)
                    if not self.is_live(c):
                        break
                if self.is_live(c):
                    for x in range(self.ncols):
                        if self.rows[c][x] < 0:
                            self.define(c, x)
            c += 1

    def standardized(self) -> list[list[int]]:
        """Live rows renumbered in order of first appearance, entries resolved."""
        live = [c for c in range(len(self.rows)) if self.is_live(c)]
        new = {c: i for i, c in enumerate(live)}
        return [[new[self.rep(v)] for v in self.rows[c]] for c in live]


def _columns(word: Word) -> list[int]:
    return [2 * g + (0 if e > 0 else 1) for g, e in word]


def todd_coxeter(pres: Presentation, limit: int | None = None) -> tuple[PermGroup, list[Perm]]:
    """Enumerate the cosets of the trivial subgroup.

    Returns the right regular representation of the presented group on its
    cosets together with the image of each presentation generator.
    """
    ct = CosetTable(pres.ngens, limit)
    rels = sorted((_columns(r) for r in pres.relators if r), key=len)
    ct.run(rels)
    table = ct.standardized()
    n = len(table)
    log.debug("todd_coxeter: %d cosets (%d defined)", n, ct.defined)
    images = [Perm([table[c][2 * g] for c in range(n)]) for g in range(pres.ngens)]
    G = PermGroup(n, images, names=pres.generators)
    if G.order != n:
        raise AssertionError("coset enumeration produced an inconsistent table")
    return G, images
