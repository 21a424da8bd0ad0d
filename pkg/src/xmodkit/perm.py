"""Finite permutation groups, homomorphisms and transversals.

Permutations act on the right: ``(a * b)(i) = b(a(i))``, so ``x ** g``
style conjugation ``g^-1 x g`` matches the right-action convention used for
crossed modules throughout the package.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .abelian import FinAbGroup
from .errors import NotNormal, TooLarge
from .words import (Presentation, Word, evaluate, exponent_sums, free_reduce,
                    generator_word, inverse_word)

DEFAULT_ISO_BOUND = 512


class Perm:
    """A permutation of ``{0, ..., degree-1}`` stored as an image array."""

    __slots__ = ("_a", "_key", "_hash")

    def __init__(self, images: Iterable[int]):
        a = np.asarray(list(images) if not isinstance(images, np.ndarray) else images,
                       dtype=np.int32)
        if a.ndim != 1 or (a.size and not np.array_equal(np.sort(a), np.arange(a.size))):
            raise ValueError(f"not a permutation: {a.tolist()}")
        self._set(a)

    def _set(self, a: np.ndarray) -> None:
        a.setflags(write=False)
        self._a = a
        self._key = a.tobytes()
        self._hash = hash(self._key)

    @classmethod
    def _raw(cls, a: np.ndarray) -> "Perm":
        p = cls.__new__(cls)
        p._set(a)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(np.arange(degree, dtype=np.int32))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Perm":
        a = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for i, pt in enumerate(cyc):
                if not 0 <= pt < degree or pt in seen:
                    raise ValueError(f"bad cycle {list(cyc)} for degree {degree}")
                seen.add(pt)
                a[pt] = cyc[(i + 1) % len(cyc)]
        return cls(a)

    @property
    def degree(self) -> int:
        return int(self._a.size)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self._a)

    @property
    def key(self) -> bytes:
        return self._key

    def __call__(self, i: int) -> int:
        return int(self._a[i])

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm._raw(other._a[self._a])

    def inverse(self) -> "Perm":
        inv = np.empty_like(self._a)
        inv[self._a] = np.arange(self._a.size, dtype=np.int32)
        return Perm._raw(inv)

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else self.inverse()
        out = Perm.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conj(self, g: "Perm") -> "Perm":
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._a, np.arange(self._a.size)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def cycles(self) -> list[list[int]]:
        out, seen = [], set()
        for i in range(self.degree):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(cyc)
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __repr__(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def default_names(k: int) -> tuple[str, ...]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    if k <= len(letters):
        return tuple(letters[:k])
    return tuple(f"g{i}" for i in range(k))


class PermGroup:
    """A finite permutation group, fully enumerated.

    ``elements[0]`` is the identity; the rest follow breadth-first discovery
    order along right multiplication by the generators.  ``cayley[i][j]`` is
    the index of ``elements[i] * generators[j]`` and ``parent[i]`` the
    spanning-tree edge that discovered element ``i``.
    """

    def __init__(self, degree: int, generators: Sequence[Perm] = (),
                 names: Sequence[str] | None = None,
                 presentation: Presentation | None = None):
        self.degree = degree
        self.generators = tuple(generators)
        for g in self.generators:
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.names = tuple(names) if names is not None else default_names(len(self.generators))
        if len(self.names) != len(self.generators):
            raise ValueError("one name per generator required")
        self.presentation = presentation
        e = Perm.identity(degree)
        self.elements: list[Perm] = [e]
        self._index: dict[bytes, int] = {e.key: 0}
        self.parent: list[tuple[int, int]] = [(-1, -1)]
        self.cayley: list[list[int]] = []
        i = 0
        while i < len(self.elements):
            x = self.elements[i]
            row = []
            for j, g in enumerate(self.generators):
                y = x * g
                k = self._index.get(y.key)
                if k is None:
                    k = len(self.elements)
                    self._index[y.key] = k
                    self.elements.append(y)
                    self.parent.append((i, j))
                row.append(k)
            self.cayley.append(row)
            i += 1
        self._words: list[Word] | None = None
        self._inv: list[int] | None = None

    # basic queries
    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return g.degree == self.degree and g.key in self._index

    def index(self, g: Perm) -> int:
        try:
            return self._index[g.key]
        except KeyError:
            raise ValueError(f"{g} is not an element of this group") from None

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order}, degree={self.degree}, gens={list(self.generators)})"

    def word(self, g: Perm | int) -> Word:
        """Positive word in the generators reaching ``g`` along the BFS tree."""
        if self._words is None:
            words: list[Word] = [()]
            for i in range(1, self.order):
                p, j = self.parent[i]
                words.append(words[p] + ((j, 1),))
            self._words = words
        i = g if isinstance(g, int) else self.index(g)
        return self._words[i]

    def inverse_index(self, i: int) -> int:
        if self._inv is None:
            self._inv = [self.index(x.inverse()) for x in self.elements]
        return self._inv[i]

    def evaluate(self, word: Word) -> Perm:
        return evaluate(word, self.generators, self.identity)

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a, b in itertools.combinations(self.generators, 2))

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def is_normal_in(self, other: "PermGroup") -> bool:
        return all(h.conj(g) in self for h in self.generators for g in other.generators)

    def element_orders(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for x in self.elements:
            o = x.order()
            counts[o] = counts.get(o, 0) + 1
        return counts

    def center(self) -> "PermGroup":
        z = [x for x in self.elements if all(x * g == g * x for g in self.generators)]
        return subgroup(self, z)

    def small_generating_set(self) -> list[Perm]:
        """Greedy generating set, preferring elements of large order."""
        if self.order == 1:
            return []
        by_order = sorted(range(self.order), key=lambda i: (-self.elements[i].order(), i))
        gens: list[Perm] = []
        H = PermGroup(self.degree, [])
        for i in by_order:
            x = self.elements[i]
            if x not in H:
                gens.append(x)
                H = PermGroup(self.degree, gens)
                if H.order == self.order:
                    break
        return gens


def group_from_generators(degree: int, gens: Sequence[Perm],
                          names: Sequence[str] | None = None) -> PermGroup:
    return PermGroup(degree, gens, names=names)


def subgroup(G: PermGroup, elements: Iterable[Perm]) -> PermGroup:
    """Subgroup of ``G`` generated by ``elements`` (a small generating set is chosen)."""
    gens: list[Perm] = []
    H = PermGroup(G.degree, [])
    for x in elements:
        if x not in H:
            gens.append(x)
            H = PermGroup(G.degree, gens)
    return H


def normal_closure(G: PermGroup, seeds: Iterable[Perm]) -> PermGroup:
    gens = [s for s in seeds if not s.is_identity()]
    H = subgroup(G, gens)
    changed = True
    while changed:
        changed = False
        for h in list(H.generators):
            for g in G.generators:
                c = h.conj(g)
                if c not in H:
                    H = PermGroup(G.degree, list(H.generators) + [c])
                    changed = True
    return H


def right_cosets(G: PermGroup, N: PermGroup) -> list[int]:
    """Coset id of every element of ``G`` (cosets ``N x`` numbered by first element)."""
    cid = [-1] * G.order
    n = 0
    for i, x in enumerate(G.elements):
        if cid[i] < 0:
            for h in N.elements:
                cid[G.index(h * x)] = n
            n += 1
    return cid


def quotient(G: PermGroup, N: PermGroup) -> tuple[PermGroup, "GroupHom"]:
    """``G/N`` realised by the right action of ``G`` on the cosets of ``N``."""
    if not N.is_subgroup_of(G):
        raise NotNormal("N is not a subgroup of G")
    if not N.is_normal_in(G):
        raise NotNormal("N is not normal in G")
    cid = right_cosets(G, N)
    ncos = max(cid) + 1
    reps = [0] * ncos
    for i in reversed(range(G.order)):
        reps[cid[i]] = i
    images = []
    for j in range(len(G.generators)):
        images.append(Perm([cid[G.cayley[reps[c]][j]] for c in range(ncos)]))
    Q = PermGroup(ncos, images, names=G.names)
    return Q, GroupHom(G, Q, images)


class GroupHom:
    """A map of groups given by images of the source generators."""

    def __init__(self, source: PermGroup, target: PermGroup, images: Sequence[Perm]):
        if len(images) != len(source.generators):
            raise ValueError("one image per source generator required")
        self.source = source
        self.target = target
        self.images = tuple(images)
        self._table: list[Perm] | None = None

    @classmethod
    def from_function(cls, source: PermGroup, target: PermGroup,
                      f: Callable[[Perm], Perm]) -> "GroupHom":
        return cls(source, target, [f(g) for g in source.generators])

    @classmethod
    def inclusion(cls, H: PermGroup, G: PermGroup) -> "GroupHom":
        return cls(H, G, H.generators)

    @classmethod
    def identity(cls, G: PermGroup) -> "GroupHom":
        return cls(G, G, G.generators)

    @property
    def table(self) -> list[Perm]:
        """Image of every source element, evaluated along the BFS tree."""
        if self._table is None:
            t = [Perm.identity(self.target.degree)]
            for i in range(1, self.source.order):
                p, j = self.source.parent[i]
                t.append(t[p] * self.images[j])
            self._table = t
        return self._table

    def __call__(self, g: Perm) -> Perm:
        return self.table[self.source.index(g)]

    def is_homomorphism(self) -> bool:
        if any(x not in self.target for x in self.images):
            return False
        t = self.table
        for i, row in enumerate(self.source.cayley):
            for j, k in enumerate(row):
                if t[k] != t[i] * self.images[j]:
                    return False
        return True

    def kernel(self) -> PermGroup:
        return subgroup(self.source, (x for x, y in zip(self.source.elements, self.table)
                                      if y.is_identity()))

    def image(self) -> PermGroup:
        return subgroup(self.target, self.images)

    def is_injective(self) -> bool:
        return len(set(self.table)) == self.source.order

    def is_surjective(self) -> bool:
        return self.image().order == self.target.order

    def preimage(self, h: Perm) -> Perm | None:
        for x, y in zip(self.source.elements, self.table):
            if y == h:
                return x
        return None

    def compose(self, after: "GroupHom") -> "GroupHom":
        """``after`` applied after ``self``."""
        return GroupHom(self.source, after.target, [after(x) for x in self.images])

    @property
    def index_table(self) -> list[int]:
        return [self.target.index(y) for y in self.table]


class Transversal:
    """Ordered right transversal of ``iota(P)`` in ``Q`` with its factor table.

    For each rep ``t`` and ``q`` in ``Q``: ``t q = iota(xi(t, q)) eta(t, q)``.
    """

    def __init__(self, Q: PermGroup, iota: GroupHom, reps: Sequence[Perm] | None = None):
        self.group = Q
        self.iota = iota
        H = iota.image()
        self.subgroup = H
        cid = right_cosets(Q, H)
        if reps is None:
            reps = _bfs_reps(Q, cid)
        reps = list(reps)
        if not reps or not reps[0].is_identity():
            raise ValueError("first representative must be the identity")
        order = [cid[Q.index(t)] for t in reps]
        if sorted(order) != list(range(max(cid) + 1)):
            raise ValueError("representatives do not cover each right coset once")
        self.reps = reps
        pos = {c: k for k, c in enumerate(order)}
        self._coset = [pos[c] for c in cid]
        self._pre: dict[bytes, Perm] = {}
        for x, y in zip(iota.source.elements, iota.table):
            self._pre.setdefault(y.key, x)
        self._rep_inv = [t.inverse() for t in reps]
        self._cache: dict[tuple[int, int], tuple[Perm, int]] = {}

    def __len__(self) -> int:
        return len(self.reps)

    def index_of(self, q: Perm) -> int:
        """Position of the representative of the coset ``H q``."""
        return self._coset[self.group.index(q)]

    def factor(self, t: int, q: Perm) -> tuple[Perm, int]:
        """``(xi, eta)`` with ``reps[t] * q == iota(xi) * reps[eta]``."""
        key = (t, self.group.index(q))
        hit = self._cache.get(key)
        if hit is None:
            tq = self.reps[t] * q
            u = self._coset[self.group.index(tq)]
            h = tq * self._rep_inv[u]
            hit = (self._pre[h.key], u)
            self._cache[key] = hit
        return hit

    def coset_permutation(self, q: Perm) -> list[int]:
        return [self.factor(t, q)[1] for t in range(len(self.reps))]


def right_transversal(Q: PermGroup, iota: GroupHom,
                      reps: Sequence[Perm] | None = None) -> Transversal:
    return Transversal(Q, iota, reps)


def _bfs_reps(Q: PermGroup, cid: list[int]) -> list[Perm]:
    # Breadth-first over generators and inverses; within one depth the
    # lexicographically smallest element of a new coset is its rep.
    steps = []
    for g in Q.generators:
        steps.append(g)
        if g.inverse() != g:
            steps.append(g.inverse())
    depth = {0: 0}
    layer = [0]
    reps = {cid[0]: 0}
    order = [cid[0]]
    while layer:
        nxt = []
        for i in layer:
            for s in steps:
                k = Q.index(Q.elements[i] * s)
                if k not in depth:
                    depth[k] = depth[i] + 1
                    nxt.append(k)
        fresh: dict[int, int] = {}
        for k in nxt:
            c = cid[k]
            if c in reps:
                continue
            if c not in fresh or Q.elements[k].images < Q.elements[fresh[c]].images:
                fresh[c] = k
        for c in sorted(fresh, key=lambda c: Q.elements[fresh[c]].images):
            reps[c] = fresh[c]
            order.append(c)
        layer = nxt
    return [Q.elements[reps[c]] for c in order]


# ---------------------------------------------------------------- builders

def cyclic_group(n: int, name: str = "t") -> PermGroup:
    if n < 1:
        raise ValueError("n must be positive")
    g = Perm([(i + 1) % n for i in range(n)])
    pres = Presentation((name,), (generator_word(0, n),))
    return PermGroup(n, [g], names=[name], presentation=pres)


def dihedral_group(n: int) -> PermGroup:
    """D_n of order 2n with x an n-cycle and y a reflection (x^n = y^2 = xyxy = 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        x = Perm([0, 1])
        y = Perm([1, 0])
        deg = 2
    elif n == 2:
        x = Perm([1, 0, 3, 2])
        y = Perm([2, 3, 0, 1])
        deg = 4
    else:
        x = Perm([(i + 1) % n for i in range(n)])
        y = Perm([(-i) % n for i in range(n)])
        deg = n
    pres = Presentation(("x", "y"), (generator_word(0, n), generator_word(1, 2),
                                     ((0, 1), (1, 1), (0, 1), (1, 1))))
    return PermGroup(deg, [x, y], names=["x", "y"], presentation=pres)


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(max(n, 1), [], names=[])
    c = Perm([(i + 1) % n for i in range(n)])
    s = Perm([1, 0] + list(range(2, n)))
    return PermGroup(n, [c, s], names=["c", "s"])


def direct_product(groups: Sequence[PermGroup]) -> tuple[PermGroup, list[int]]:
    """External direct product on disjoint point blocks; returns block offsets."""
    offsets, deg = [], 0
    for G in groups:
        offsets.append(deg)
        deg += G.degree
    gens, names = [], []
    for k, G in enumerate(groups):
        for g, nm in zip(G.generators, G.names):
            gens.append(embed_block(g, offsets[k], deg))
            names.append(f"{nm}{k}" if len(groups) > 1 else nm)
    return PermGroup(deg, gens, names=names), offsets


def embed_block(g: Perm, offset: int, degree: int) -> Perm:
    a = np.arange(degree, dtype=np.int32)
    a[offset:offset + g.degree] = g._a + offset
    return Perm._raw(a)


def restrict_block(g: Perm, offset: int, size: int) -> Perm:
    return Perm._raw(np.ascontiguousarray(g._a[offset:offset + size] - offset))


# ------------------------------------------------- presentations, abelianization

def cayley_presentation(G: PermGroup, gens: Sequence[Perm] | None = None,
                        names: Sequence[str] | None = None) -> Presentation:
    """Presentation read off a BFS spanning tree of the Cayley graph.

    One relator ``w(e) g w(e g)^-1`` per non-tree edge, freely reduced.
    """
    if gens is None:
        gens, names = G.generators, names or G.names
    gens = list(gens)
    T = G if tuple(gens) == G.generators else PermGroup(G.degree, gens)
    if names is None:
        names = default_names(len(gens))
    rels = []
    for i, row in enumerate(T.cayley):
        for j, k in enumerate(row):
            if T.parent[k] == (i, j):
                continue
            r = free_reduce(T.word(i) + ((j, 1),) + inverse_word(T.word(k)))
            rels.append(r)
    return Presentation(tuple(names), tuple(rels))


def abelianization(G: PermGroup) -> tuple[FinAbGroup, Callable[[Perm], list[int]]]:
    """``G/[G,G]`` on the generator slots of ``G`` and the exponent-sum projection."""
    k = len(G.generators)
    pres = G.presentation or cayley_presentation(G)
    A = FinAbGroup(k, [exponent_sums(r, k) for r in pres.relators])

    def project(g: Perm) -> list[int]:
        return exponent_sums(G.word(g), k)

    return A, project


def abelian_invariants(G: PermGroup) -> tuple[int, ...]:
    return abelianization(G)[0].invariant_factors


# ------------------------------------------------------ homomorphism search

def _relators_by_generator(G: PermGroup, gens: Sequence[Perm]) -> tuple[list[Word], list[list[Word]]]:
    pres = cayley_presentation(G, gens)
    buckets: list[list[Word]] = [[] for _ in gens]
    for r in sorted(pres.relators, key=len):
        if r:
            buckets[max(g for g, _ in r)].append(r)
    return list(pres.relators), buckets


def homomorphisms(G: PermGroup, H: PermGroup, gens: Sequence[Perm] | None = None,
                  candidates: Callable[[int, Perm], Iterable[Perm]] | None = None,
                  injective: bool = False) -> Iterator[GroupHom]:
    """Enumerate homomorphisms ``G -> H`` by backtracking over generator images.

    Relators of a Cayley-graph presentation are checked as soon as every
    generator they mention has an image.  ``candidates(i, g)`` may restrict
    the images tried for generator ``i``.
    """
    gens = list(gens) if gens is not None else G.small_generating_set()
    Ggen = PermGroup(G.degree, gens)
    if Ggen.order != G.order:
        raise ValueError("gens do not generate G")
    _, buckets = _relators_by_generator(Ggen, gens)
    ident = H.identity
    assigned: list[Perm] = []
    inverses: list[Perm] = []

    def pool(i):
        if candidates is not None:
            return list(candidates(i, gens[i]))
        o = gens[i].order()
        return [h for h in H.elements if o % h.order() == 0 and (not injective or h.order() == o)]

    pools = [pool(i) for i in range(len(gens))]

    def rec(i):
        if i == len(gens):
            hom = GroupHom(Ggen, H, list(assigned))
            yield hom
            return
        for h in pools[i]:
            assigned.append(h)
            inverses.append(h.inverse())
            if all(evaluate(r, assigned, ident, inverses).is_identity() for r in buckets[i]):
                yield from rec(i + 1)
            assigned.pop()
            inverses.pop()

    for hom in rec(0):
        if injective and not hom.is_injective():
            continue
        # re-express over G's own generators
        yield GroupHom(G, H, [hom(g) for g in G.generators])


def isomorphism(G: PermGroup, H: PermGroup, bound: int = DEFAULT_ISO_BOUND) -> GroupHom | None:
    if max(G.order, H.order) > bound:
        raise TooLarge(f"isomorphism test limited to order {bound}")
    if G.order != H.order or G.element_orders() != H.element_orders():
        return None
    if G.is_abelian() != H.is_abelian():
        return None
    if abelian_invariants(G) != abelian_invariants(H):
        return None
    for hom in homomorphisms(G, H, injective=True):
        return hom
    return None


def isomorphic(G: PermGroup, H: PermGroup, bound: int = DEFAULT_ISO_BOUND) -> bool:
    return isomorphism(G, H, bound) is not None
