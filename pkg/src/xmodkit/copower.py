"""Copower presentations with Peiffer relators, and ordered-word rewriting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ActionViolation, RewriteLimitExceeded
from .fp import presentation_of
from .perm import Perm, Transversal
from .words import Presentation, Word, free_reduce, inverse_word
from .xmod import CrossedModule


@dataclass(frozen=True)
class CopowerLabel:
    base: int  # index into the generators of M
    coset: int  # index into the transversal


def label_name(sname: str, t: int) -> str:
    return f"{sname}{t}" if len(sname) == 1 else f"{sname}_{t}"


@dataclass
class CopowerPresentation:
    presentation: Presentation
    labels: list[CopowerLabel]
    delta_images: list[Perm]
    base_relators: int
    peiffer_relators: int
    conjugate_generators: int  # |S^P|
    kernel_relators: int = 0


def generator_conjugates(X: CrossedModule) -> list[Perm]:
    """``S^P``: the orbit of the generators of M under the action of P."""
    seen: dict[bytes, Perm] = {}
    for s in X.M.generators:
        for k in range(X.P.order):
            x = X.M.elements[int(X.tables[k][X.M.index(s)])]
            seen.setdefault(x.key, x)
    return list(seen.values())


def copower_peiffer_presentation(X: CrossedModule, T: Transversal,
                                 restrict_to_generators: bool = False,
                                 kernel_relators: bool = False,
                                 check: bool = True) -> CopowerPresentation:
    """Presentation of ``(M * ... * M) / Peiffer`` on labels ``S x T``.

    Relators are one copy of M's relators per coset, then the basic Peiffer
    relators ``<(r,t),(s,u)> = (r,t)^-1 (s,u)^-1 (r,t) (s,u)^delta(r,t)``
    for ``r, s`` in ``S^P`` and ``t != u``.  With ``restrict_to_generators``
    ``r, s`` range over ``S`` only.  ``kernel_relators`` adds
    ``(s,t)^-1 (s^k,t)`` for ``k`` in ``Ker(iota)`` and Peiffer pairs with
    ``t == u``; this presents the induced module directly when ``iota`` is not
    injective.
    """
    if check:
        from .xmod import check_axioms

        rep = check_axioms(X)
        if not rep.ok:
            raise ActionViolation(f"action breaks the crossed module axioms: {rep.to_dict()}")
    M = X.M
    iota = T.iota
    mpres = presentation_of(M)
    S = M.generators
    g, n = len(S), len(T)
    names = tuple(label_name(mpres.generators[s], t) for t in range(n) for s in range(g))
    labels = [CopowerLabel(s, t) for t in range(n) for s in range(g)]

    def gen(s: int, t: int) -> int:
        return t * g + s

    def element_word(m: Perm, t: int) -> Word:
        return tuple((gen(s, t), e) for s, e in M.word(m))

    rels: list[Word] = []
    for t in range(n):
        for r in mpres.relators:
            rels.append(tuple((gen(s, t), e) for s, e in r))
    base_count = len(rels)

    mu = X.boundary
    delta_images = [T.reps[t].inverse() * iota(mu(s)) * T.reps[t] for t in range(n) for s in S]

    def delta(m: Perm, t: int) -> Perm:
        return T.reps[t].inverse() * iota(mu(m)) * T.reps[t]

    def acted(m: Perm, u: int, q: Perm) -> Word:
        p, u2 = T.factor(u, q)
        return element_word(X.act(m, p), u2)

    pool = list(S) if restrict_to_generators else generator_conjugates(X)
    peiffer = 0
    for t in range(n):
        for u in range(n):
            if t == u and not kernel_relators:
                continue
            for r in pool:
                rt = element_word(r, t)
                d = delta(r, t)
                for s in pool:
                    su = element_word(s, u)
                    w = inverse_word(rt) + inverse_word(su) + rt + acted(s, u, d)
                    rels.append(free_reduce(w))
                    peiffer += 1

    kcount = 0
    if kernel_relators:
        K = iota.kernel()
        for t in range(n):
            for s in S:
                for k in K.elements:
                    if k.is_identity():
                        continue
                    w = inverse_word(element_word(s, t)) + element_word(X.act(s, k), t)
                    rels.append(free_reduce(w))
                    kcount += 1

    return CopowerPresentation(Presentation(names, tuple(rels)), labels, delta_images,
                               base_count, peiffer, len(pool), kcount)


# ------------------------------------------------------------- ordering

Pair = tuple[Perm, int]


def is_ordered(word: Sequence[Pair]) -> bool:
    return all(a[1] < b[1] for a, b in zip(word, word[1:]))


def _merge(word: list[Pair], M) -> list[Pair]:
    out: list[Pair] = []
    for m, t in word:
        if m.is_identity():
            continue
        if out and out[-1][1] == t:
            prod = out[-1][0] * m
            out.pop()
            if not prod.is_identity():
                out.append((prod, t))
        else:
            out.append((m, t))
    return out


@dataclass
class OrderResult:
    word: list[Pair]
    steps: int


def order_word(word: Sequence[Pair], X: CrossedModule, T: Transversal,
               limit: int | None = None) -> OrderResult:
    """Rewrite a word of pairs ``(m, t)`` into one with increasing cosets.

    The swap ``(m,t)(n,u) -> (n,u)(m^xi(t,q), eta(t,q))`` with
    ``q = u^-1 iota(mu n) u`` is applied at the leftmost descent; equal-coset
    neighbours are multiplied together and identity letters dropped.
    """
    M = X.M
    iota, mu = T.iota, X.boundary
    w = _merge(list(word), M)
    if limit is None:
        limit = M.order ** len(T) * max(1, len(w))
    steps = 0
    while True:
        i = next((k for k in range(len(w) - 1) if w[k][1] > w[k + 1][1]), None)
        if i is None:
            return OrderResult(w, steps)
        steps += 1
        if steps > limit:
            raise RewriteLimitExceeded(f"ordering did not finish within {limit} swaps")
        (m, t), (nn, u) = w[i], w[i + 1]
        q = T.reps[u].inverse() * iota(mu(nn)) * T.reps[u]
        p, t2 = T.factor(t, q)
        w[i:i + 2] = [(nn, u), (X.act(m, p), t2)]
        w = _merge(w, M)
