"""Induced crossed modules along a group homomorphism."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .copower import (CopowerLabel, CopowerPresentation, copower_peiffer_presentation,
                      label_name)
from .errors import InternalAssertion, PreconditionFailed, RelatorNotKilled
from .fp import presentation_of, todd_coxeter
from .perm import (GroupHom, Perm, PermGroup, Transversal, embed_block, homomorphisms,
                   normal_closure, quotient, subgroup)
from .words import evaluate
from .xmod import (AxiomReport, CrossedModule, ModuleStructure, check_axioms, cokernel,
                   kernel_module, xmod_identity)

log = logging.getLogger(__name__)

ROUTES = ("auto", "surj", "inj", "abelian", "direct")


@dataclass
class InducedXMod:
    result: CrossedModule
    unit: GroupHom  # M -> result.M
    label_map: dict[CopowerLabel, Perm]
    route: str
    transversal: Transversal | None = None
    presentation: CopowerPresentation | None = None
    axioms: AxiomReport | None = None
    stats: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.result.M.order

    def label(self, s: int, t: int) -> Perm:
        return self.label_map[CopowerLabel(s, t)]

    def pair_image(self, m: Perm, t: int, source: CrossedModule) -> Perm:
        """Image of the copower element ``(m, t)`` in the induced group."""
        out = self.result.M.identity
        for s, e in source.M.word(m):
            g = self.label(s, t)
            out = out * (g if e > 0 else g.inverse())
        return out


def _relators_killed(pres, images: Sequence[Perm], identity: Perm) -> bool:
    inverses = [x.inverse() for x in images]
    return all(evaluate(r, images, identity, inverses).is_identity() for r in pres.relators)


def _finish(ind: InducedXMod, check: bool) -> InducedXMod:
    if check:
        ind.axioms = check_axioms(ind.result)
        if not ind.axioms.ok:
            raise InternalAssertion(f"induced crossed module fails the axioms: {ind.axioms.to_dict()}")
    return ind


# ------------------------------------------------------------------ routes

def induce_surjective(X: CrossedModule, sigma: GroupHom, check: bool = True) -> InducedXMod:
    """``M / [M, K]`` with ``K = Ker(sigma)``; the action descends to ``sigma(P)``."""
    if sigma.source is not X.P:
        raise ValueError("sigma must start at P")
    if not sigma.is_surjective():
        raise PreconditionFailed("surjective route needs a surjective map")
    M, Q = X.M, sigma.target
    K = sigma.kernel()
    seeds = [m.inverse() * X.act(m, k) for m in M.elements for k in K.generators]
    C = normal_closure(M, seeds)
    Mq, proj = quotient(M, C)
    boundary = GroupHom(Mq, Q, [sigma(X.boundary(s)) for s in M.generators])
    action = []
    for q in Q.generators:
        p = sigma.preimage(q)
        action.append(GroupHom(Mq, Mq, [proj(X.act(s, p)) for s in M.generators]))
    for k in K.generators:
        if any(proj(X.act(s, k)) != proj(s) for s in M.generators):
            raise InternalAssertion("action does not descend to the quotient")
    if not _relators_killed(presentation_of(M), boundary.images, Q.identity):
        raise RelatorNotKilled("boundary is not well defined on the quotient")
    result = CrossedModule(Mq, Q, boundary, action, name="induced")
    labels = {CopowerLabel(s, 0): proj.images[s] for s in range(len(M.generators))}
    ind = InducedXMod(result, proj, labels, "surj",
                      stats={"killed_subgroup_order": C.order, "kernel_of_map_order": K.order})
    return _finish(ind, check)


def induce_injective(X: CrossedModule, tau: GroupHom, reps: Sequence[Perm] | None = None,
                     restrict_to_generators: bool = False, limit: int | None = None,
                     check: bool = True) -> InducedXMod:
    """Copower of M over a transversal modulo Peiffer relators, enumerated."""
    if tau.source is not X.P:
        raise ValueError("tau must start at P")
    if not tau.is_injective():
        raise PreconditionFailed("injective route needs an injective map")
    Q = tau.target
    T = Transversal(Q, tau, reps)
    cp = copower_peiffer_presentation(X, T, restrict_to_generators, check=check)
    return _enumerate(X, T, cp, "inj", limit, check)


def induce_direct(X: CrossedModule, iota: GroupHom, reps: Sequence[Perm] | None = None,
                  limit: int | None = None, check: bool = True) -> InducedXMod:
    """One-shot presentation for any ``iota``, with ``(s,t) = (s^k,t)`` for ``k`` in the kernel."""
    T = Transversal(iota.target, iota, reps)
    cp = copower_peiffer_presentation(X, T, kernel_relators=True, check=check)
    return _enumerate(X, T, cp, "direct", limit, check)


def _enumerate(X: CrossedModule, T: Transversal, cp: CopowerPresentation, route: str,
               limit: int | None, check: bool) -> InducedXMod:
    Q = T.group
    G, imgs = todd_coxeter(cp.presentation, limit)
    pres = cp.presentation
    if not _relators_killed(pres, cp.delta_images, Q.identity):
        raise RelatorNotKilled("boundary images do not satisfy the relators")
    boundary = GroupHom(G, Q, cp.delta_images)
    g = len(X.M.generators)
    word_cache: dict[tuple[bytes, int], Perm] = {}

    def pair(m: Perm, t: int) -> Perm:
        key = (m.key, t)
        hit = word_cache.get(key)
        if hit is None:
            hit = G.identity
            for s, e in X.M.word(m):
                hit = hit * imgs[t * g + s]
            word_cache[key] = hit
        return hit

    action = []
    for q in Q.generators:
        out = []
        for lab in cp.labels:
            p, u = T.factor(lab.coset, q)
            out.append(pair(X.act(X.M.generators[lab.base], p), u))
        if not _relators_killed(pres, out, G.identity):
            raise RelatorNotKilled("action of a generator of Q does not respect the relators")
        action.append(GroupHom(G, G, out))
    result = CrossedModule(G, Q, boundary, action, name="induced")
    unit = GroupHom(X.M, G, [imgs[s] for s in range(g)])
    labels = dict(zip(cp.labels, imgs))
    bound = X.M.order ** len(T)
    stats = {
        "generators": len(pres.generators),
        "relators": len(pres.relators),
        "base_relators": cp.base_relators,
        "peiffer_relators": cp.peiffer_relators,
        "index": len(T),
        "order_bound": bound,
    }
    if route == "inj" and G.order > bound:
        raise InternalAssertion(f"order {G.order} exceeds the bound {bound}")
    ind = InducedXMod(result, unit, labels, route, T, cp, stats=stats)
    log.debug("induced via %s: order %d", route, G.order)
    return _finish(ind, check)


def induce_abelian_normal(X: CrossedModule, tau: GroupHom, reps: Sequence[Perm] | None = None,
                          check: bool = True) -> InducedXMod:
    """Direct sum of one copy of M per coset, permuted and twisted by Q."""
    if not tau.is_injective():
        raise PreconditionFailed("abelian route needs an injective map")
    M, Q = X.M, tau.target
    if not M.is_abelian():
        raise PreconditionFailed("abelian route needs M abelian")
    image = subgroup(Q, [tau(X.boundary(s)) for s in M.generators])
    if not image.is_normal_in(Q):
        raise PreconditionFailed("abelian route needs iota(mu(M)) normal in Q")
    T = Transversal(Q, tau, reps)
    n, d = len(T), M.degree
    deg = n * d
    names = presentation_of(M).generators
    gens, labels, lab_names = [], [], []
    for t in range(n):
        for s, x in enumerate(M.generators):
            gens.append(embed_block(x, t * d, deg))
            labels.append(CopowerLabel(s, t))
            lab_names.append(label_name(names[s], t))
    G = PermGroup(deg, gens, names=lab_names)

    def pair(m: Perm, t: int) -> Perm:
        return embed_block(m, t * d, deg)

    delta = [T.reps[lab.coset].inverse() * tau(X.boundary(M.generators[lab.base])) * T.reps[lab.coset]
             for lab in labels]
    action = []
    for q in Q.generators:
        out = []
        for lab in labels:
            p, u = T.factor(lab.coset, q)
            out.append(pair(X.act(M.generators[lab.base], p), u))
        action.append(GroupHom(G, G, out))
    result = CrossedModule(G, Q, GroupHom(G, Q, delta), action, name="induced")
    unit = GroupHom(M, G, gens[:len(M.generators)])
    ind = InducedXMod(result, unit, dict(zip(labels, gens)), "abelian", T,
                      stats={"index": n, "order_bound": M.order ** n})
    return _finish(ind, check)


def induce(X: CrossedModule, iota: GroupHom, route: str = "auto", limit: int | None = None,
           check: bool = True) -> InducedXMod:
    """Induce ``X`` along ``iota``.

    ``auto`` picks ``inj`` for injective maps, ``surj`` for surjective ones
    and otherwise factors ``iota`` through its image (surjective then
    injective).
    """
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    if iota.source is not X.P:
        raise ValueError("iota must start at P")
    if not iota.is_homomorphism():
        raise PreconditionFailed("iota is not a homomorphism")
    if check:
        rep = check_axioms(X)
        if not rep.ok:
            raise PreconditionFailed(f"input is not a crossed module: {rep.to_dict()}")
    inj = iota.is_injective()
    surj = iota.is_surjective()
    if route == "inj":
        return induce_injective(X, iota, limit=limit, check=check)
    if route == "surj":
        return induce_surjective(X, iota, check=check)
    if route == "abelian":
        return induce_abelian_normal(X, iota, check=check)
    if route == "direct":
        return induce_direct(X, iota, limit=limit, check=check)
    if inj:
        return induce_injective(X, iota, limit=limit, check=check)
    if surj:
        return induce_surjective(X, iota, check=check)
    return induce_composite(X, iota, limit=limit, check=check)


def factor_image(iota: GroupHom) -> tuple[GroupHom, GroupHom]:
    """``iota = tau sigma`` with ``sigma`` onto the image and ``tau`` its inclusion."""
    I = subgroup(iota.target, iota.images)
    I = PermGroup(I.degree, I.generators)
    sigma = GroupHom(iota.source, I, list(iota.images))
    tau = GroupHom.inclusion(I, iota.target)
    return sigma, tau


def induce_composite(X: CrossedModule, iota: GroupHom, limit: int | None = None,
                     check: bool = True) -> InducedXMod:
    sigma, tau = factor_image(iota)
    first = induce_surjective(X, sigma, check=check)
    second = induce_injective(first.result, tau, limit=limit, check=check)
    unit = GroupHom(X.M, second.result.M, [second.unit(first.unit(s)) for s in X.M.generators])
    # the quotient keeps one generator per generator of M, so labels carry over
    labels = dict(second.label_map)
    stats = dict(second.stats)
    stats["first_stage_order"] = first.order
    return InducedXMod(second.result, unit, labels, "composite", second.transversal,
                       second.presentation, second.axioms, stats)


# --------------------------------------------------------------- derived data

def presentation_stats(X: CrossedModule, iota: GroupHom) -> dict:
    """Formula counts ``(g n, r n + g^2 n (n - 1))`` against the realized presentation."""
    mpres = presentation_of(X.M)
    g, r = mpres.ngens, len(mpres.relators)
    T = Transversal(iota.target, iota)
    n = len(T)
    out = {"g": g, "r": r, "n": n, "formula": [g * n, r * n + g * g * n * (n - 1)]}
    if iota.is_injective():
        cp = copower_peiffer_presentation(X, T)
        out["realized"] = [len(cp.presentation.generators), len(cp.presentation.relators)]
        out["conjugate_generators"] = cp.conjugate_generators
    return out


def mapping_cone_invariants(iota: GroupHom, route: str = "auto",
                            limit: int | None = None) -> tuple[PermGroup, ModuleStructure, InducedXMod]:
    """``pi_1`` and ``pi_2`` of the cone of ``iota``: cokernel and kernel of ``iota_* P``."""
    X = xmod_identity(iota.source)
    ind = induce(X, iota, route, limit)
    pi1, _ = cokernel(ind.result)
    pi2 = kernel_module(ind.result)
    return pi1, pi2, ind


# ---------------------------------------------------- comparison utilities

def xmod_isomorphism_over(X: CrossedModule, Y: CrossedModule) -> GroupHom | None:
    """An isomorphism ``X.M -> Y.M`` commuting with boundaries and Q-actions."""
    if X.P.order != Y.P.order or X.M.order != Y.M.order:
        return None
    if X.P.generators != Y.P.generators:
        raise ValueError("crossed modules must share the acting group")
    if X.M.element_orders() != Y.M.element_orders():
        return None
    gens = X.M.small_generating_set()
    by_image: dict[bytes, list[Perm]] = {}
    for c, q in zip(Y.M.elements, Y.boundary.table):
        by_image.setdefault(q.key, []).append(c)

    def cands(i, g):
        o = g.order()
        return [c for c in by_image.get(X.boundary(g).key, []) if c.order() == o]

    for phi in homomorphisms(X.M, Y.M, gens=gens, candidates=cands, injective=True):
        if all(phi(X.act(m, q)) == Y.act(phi(m), q)
               for m in X.M.generators for q in X.P.generators):
            return phi
    return None


def label_isomorphism(A: InducedXMod, B: InducedXMod) -> GroupHom | None:
    """The map sending each label of ``A`` to the same label of ``B``, when it is
    an isomorphism of crossed Q-modules; ``None`` otherwise."""
    RA, RB = A.result, B.result
    if RA.P.generators != RB.P.generators or RA.M.order != RB.M.order:
        return None
    labels = sorted(A.label_map, key=lambda lab: (lab.coset, lab.base))
    if set(labels) != set(B.label_map):
        return None
    src = PermGroup(RA.M.degree, [A.label_map[lab] for lab in labels])
    if src.order != RA.M.order:
        return None
    phi = GroupHom(src, RB.M, [B.label_map[lab] for lab in labels])
    if not phi.is_homomorphism() or not phi.is_injective():
        return None
    for x in src.generators:
        if RB.boundary(phi(x)) != RA.boundary(x):
            return None
        if any(phi(RA.act(x, q)) != RB.act(phi(x), q) for q in RA.P.generators):
            return None
    return phi


def factor_through(ind: InducedXMod, source: CrossedModule, C: CrossedModule,
                   f: GroupHom) -> list[GroupHom]:
    """All Q-morphisms ``g: iota_* M -> C`` with ``g . unit = f`` (exhaustive)."""
    R = ind.result
    if C.P.generators != R.P.generators:
        raise ValueError("C must be a crossed module over the same Q")
    gens = list(R.M.generators)
    by_image: dict[bytes, list[Perm]] = {}
    for c, q in zip(C.M.elements, C.boundary.table):
        by_image.setdefault(q.key, []).append(c)

    def cands(i, g):
        return by_image.get(R.boundary(g).key, [])

    out = []
    for g in homomorphisms(R.M, C.M, gens=gens, candidates=cands):
        if any(g(ind.unit(s)) != f(s) for s in source.M.generators):
            continue
        if any(C.boundary(g(x)) != R.boundary(x) for x in R.M.generators):
            continue
        if all(g(R.act(x, q)) == C.act(g(x), q) for x in R.M.generators for q in R.P.generators):
            out.append(g)
    return out
