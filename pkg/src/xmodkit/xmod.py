"""Crossed modules, their morphisms, kernels, cokernels and crossed sequences."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .abelian import FinAbGroup, Matrix, identity_matrix, mat_mul, vec_mat
from .errors import ActionViolation, KernelNotCentral, NotNormal, TooLarge
from .perm import (GroupHom, Perm, PermGroup, abelianization, direct_product,
                   embed_block, homomorphisms, quotient, restrict_block,
                   subgroup)

EXHAUSTIVE_LIMIT = 400_000  # |M||P| above which check_axioms falls back to generators
CM2_EXHAUSTIVE_LIMIT = 16_000_000  # |M|^2 bound for the vectorized CM2 sweep
AUT_LIMIT = 24


class CrossedModule:
    """Boundary ``M -> P`` with a right action of ``P`` on ``M``.

    ``action[j]`` is the automorphism of ``M`` induced by ``P.generators[j]``;
    other elements act through words in the generators.
    """

    def __init__(self, M: PermGroup, P: PermGroup, boundary: GroupHom,
                 action: Sequence[GroupHom], name: str | None = None):
        if boundary.source is not M or boundary.target is not P:
            raise ValueError("boundary must map M to P")
        if len(action) != len(P.generators):
            raise ValueError("one automorphism per generator of P required")
        self.M = M
        self.P = P
        self.boundary = boundary
        self.action = tuple(action)
        self.name = name
        self._gen_tables: list[np.ndarray] | None = None
        self._tables: list[np.ndarray] | None = None

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<CrossedModule{label}: |M|={self.M.order} -> |P|={self.P.order}>"

    @property
    def generator_tables(self) -> list[np.ndarray]:
        if self._gen_tables is None:
            self._gen_tables = [np.array([self.M.index(y) for y in a.table], dtype=np.int32)
                                if all(y in self.M for y in a.images) else None
                                for a in self.action]
        return self._gen_tables

    @property
    def tables(self) -> list[np.ndarray]:
        """Index table of the action of every element of ``P`` (BFS order)."""
        if self._tables is None:
            gt = self.generator_tables
            if any(t is None for t in gt):
                raise ActionViolation("action images are not elements of M")
            t = [np.arange(self.M.order, dtype=np.int32)]
            for i in range(1, self.P.order):
                p, j = self.P.parent[i]
                t.append(gt[j][t[p]])
            self._tables = t
        return self._tables

    def act(self, m: Perm, p: Perm) -> Perm:
        """``m^p``."""
        return self.M.elements[int(self.tables[self.P.index(p)][self.M.index(m)])]

    def kernel(self) -> PermGroup:
        return self.boundary.kernel()

    def image(self) -> PermGroup:
        return self.boundary.image()

    def cokernel(self) -> tuple[PermGroup, GroupHom]:
        return cokernel(self)


@dataclass
class AxiomReport:
    mode: str
    boundary_hom: bool = True
    action_hom: bool = True
    action_bijective: bool = True
    cm1_violations: int = 0
    cm2_violations: int = 0
    examples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.boundary_hom and self.action_hom and self.action_bijective
                and not self.cm1_violations and not self.cm2_violations)

    def note(self, item: dict) -> None:
        if len(self.examples) < 20:
            self.examples.append(item)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "mode": self.mode,
            "boundary_hom": self.boundary_hom,
            "action_hom": self.action_hom,
            "action_bijective": self.action_bijective,
            "cm1_violations": self.cm1_violations,
            "cm2_violations": self.cm2_violations,
            "examples": self.examples,
        }


def check_axioms(X: CrossedModule, exhaustive: bool | None = None) -> AxiomReport:
    """Verify that ``X`` is a crossed module.

    Exhaustive mode tests CM1 on all ``(m, p)`` and CM2 on all ``(m, n)``.
    Generator mode tests both on generator pairs only, which is a complete
    proof once the boundary and the action are known to be homomorphisms.
    By default exhaustive runs unless the pair count exceeds
    ``EXHAUSTIVE_LIMIT``.
    """
    M, P = X.M, X.P
    if exhaustive is None:
        exhaustive = (M.order * P.order <= EXHAUSTIVE_LIMIT
                      and M.order ** 2 <= CM2_EXHAUSTIVE_LIMIT)
    rep = AxiomReport("exhaustive" if exhaustive else "generators")
    rep.boundary_hom = X.boundary.is_homomorphism()
    if not rep.boundary_hom:
        rep.note({"check": "boundary is not a homomorphism"})

    gt = X.generator_tables
    for j, (a, t) in enumerate(zip(X.action, gt)):
        if t is None or not a.is_homomorphism():
            rep.action_hom = False
            rep.note({"check": f"action of {P.names[j]} is not an endomorphism of M"})
        elif len(set(t.tolist())) != M.order:
            rep.action_bijective = False
            rep.note({"check": f"action of {P.names[j]} is not bijective"})
    if not rep.action_hom:
        return _count_all_failed(rep, X)
    tables = X.tables
    for i, row in enumerate(P.cayley):
        for j, k in enumerate(row):
            if not np.array_equal(tables[k], gt[j][tables[i]]):
                rep.action_hom = False
                rep.note({"check": "action is not a homomorphism P -> Aut(M)",
                          "p": repr(P.elements[i]), "generator": P.names[j]})
                break
        if not rep.action_hom:
            break

    mu = X.boundary.table
    if exhaustive:
        m_idx = range(M.order)
        p_idx = range(P.order)
    else:
        m_idx = [M.index(g) for g in M.generators]
        p_idx = [P.index(g) for g in P.generators]
    Pinv = {i: P.elements[i].inverse() for i in p_idx}
    for i in m_idx:
        for k in p_idx:
            p = P.elements[k]
            lhs = mu[int(tables[k][i])]
            if lhs != Pinv[k] * mu[i] * p:
                rep.cm1_violations += 1
                rep.note({"axiom": "CM1", "m": repr(M.elements[i]), "p": repr(p)})
    if exhaustive:
        _cm2_all_pairs(X, rep)
        return rep
    for i in m_idx:
        m = M.elements[i]
        for k in m_idx:
            n = M.elements[k]
            lhs = n.inverse() * m * n
            rhs = M.elements[int(tables[P.index(mu[k])][i])]
            if lhs != rhs:
                rep.cm2_violations += 1
                rep.note({"axiom": "CM2", "m": repr(m), "n": repr(n)})
    return rep


def _base_points(E: np.ndarray) -> list[int] | None:
    """Points whose images tell the rows of ``E`` apart (greedy), if few suffice."""
    rows, deg = E.shape
    cap = max(1, int(62 // max(1.0, np.log2(max(deg, 2)))))
    base: list[int] = []
    key = np.zeros(rows, dtype=np.int64)
    while len(np.unique(key)) < rows:
        if len(base) >= cap:
            return None
        best, best_count = -1, 0
        for c in range(deg):
            if c in base:
                continue
            count = len(np.unique(key * deg + E[:, c]))
            if count > best_count:
                best, best_count = c, count
                if count == rows:
                    break
        base.append(best)
        key = key * deg + E[:, best]
    return base


def _keys(V: np.ndarray, deg: int) -> np.ndarray:
    key = np.zeros(V.shape[0], dtype=np.int64)
    for c in range(V.shape[1]):
        key = key * deg + V[:, c]
    return key


def _cm2_all_pairs(X: CrossedModule, rep: AxiomReport) -> None:
    """CM2 on every pair ``(m, n)``, one numpy sweep over ``m`` per ``n``.

    Elements are identified by their images on a small base of points.
    """
    M, P = X.M, X.P
    mu, tables = X.boundary.table, X.tables
    E = np.stack([g._a for g in M.elements]).astype(np.int64)
    deg = M.degree
    base = _base_points(E)
    if base is None:
        raise TooLarge("no short base: exhaustive CM2 sweep unavailable")
    elem_keys = _keys(E[:, base], deg)
    if deg ** len(base) <= 1 << 24:
        lut = np.zeros(deg ** len(base), dtype=np.int64)
        lut[elem_keys] = np.arange(M.order)

        def lookup(keys):
            return lut[keys]
    else:
        order = np.argsort(elem_keys)
        sorted_keys = elem_keys[order]

        def lookup(keys):
            return order[np.searchsorted(sorted_keys, keys)]
    B = np.array(base)
    for k, n in enumerate(M.elements):
        a = n._a
        inv = np.empty_like(a)
        inv[a] = np.arange(deg, dtype=a.dtype)
        conj = a[E[:, inv[B]]]
        lhs = lookup(_keys(conj, deg))
        rhs = tables[P.index(mu[k])]
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            rep.cm2_violations += int(bad.size)
            for i in bad[:max(0, 20 - len(rep.examples))]:
                rep.note({"axiom": "CM2", "m": repr(M.elements[int(i)]), "n": repr(n)})


def _count_all_failed(rep: AxiomReport, X: CrossedModule) -> AxiomReport:
    rep.cm1_violations = rep.cm2_violations = -1
    return rep


def require_valid(X: CrossedModule, exhaustive: bool | None = None) -> AxiomReport:
    rep = check_axioms(X, exhaustive)
    if not rep.ok:
        raise ActionViolation(f"not a crossed module: {rep.to_dict()}")
    return rep


# ------------------------------------------------------------- constructors

def conjugation_automorphisms(N: PermGroup, by: Sequence[Perm]) -> list[GroupHom]:
    return [GroupHom(N, N, [n.conj(q) for n in N.generators]) for q in by]


def xmod_normal_inclusion(Q: PermGroup, N: PermGroup) -> CrossedModule:
    if not N.is_subgroup_of(Q):
        raise NotNormal("N is not a subgroup of Q")
    if not N.is_normal_in(Q):
        raise NotNormal("N is not normal in Q")
    return CrossedModule(N, Q, GroupHom.inclusion(N, Q),
                         conjugation_automorphisms(N, Q.generators), name="inclusion")


def xmod_identity(P: PermGroup) -> CrossedModule:
    X = xmod_normal_inclusion(P, P)
    X.name = "identity"
    return X


def xmod_central_epi(f: GroupHom) -> CrossedModule:
    M, P = f.source, f.target
    if not f.is_homomorphism() or not f.is_surjective():
        raise ActionViolation("central extension map must be a surjective homomorphism")
    K = f.kernel()
    if not all(k * m == m * k for k in K.generators for m in M.generators):
        raise KernelNotCentral("kernel is not contained in the centre")
    sections = [f.preimage(p) for p in P.generators]
    return CrossedModule(M, P, f, conjugation_automorphisms(M, sections), name="central-epi")


def xmod_inner_automorphisms(M: PermGroup) -> CrossedModule:
    """``M -> Aut(M)``, m to conjugation by m; Aut(M) found by brute force."""
    if M.order > AUT_LIMIT:
        raise TooLarge(f"Aut(M) builder limited to |M| <= {AUT_LIMIT}")
    autos = list(homomorphisms(M, M, injective=True))
    idx = [[M.index(a(x)) for x in M.elements] for a in autos]
    A = subgroup(PermGroup(M.order, [Perm(t) for t in idx]), [Perm(t) for t in idx])
    chi_imgs = [Perm([M.index(x.conj(m)) for x in M.elements]) for m in M.generators]
    action = []
    for g in A.generators:
        action.append(GroupHom(M, M, [M.elements[g(M.index(m))] for m in M.generators]))
    return CrossedModule(M, A, GroupHom(M, A, chi_imgs), action, name="inner-automorphisms")


class ModuleStructure:
    """A finite abelian group with a right action of a permutation group.

    ``matrices[j]`` is the action of ``group.generators[j]`` on row vectors
    of the carrier's generator slots.  ``embedding`` optionally records the
    carrier slots as elements of an ambient permutation group, and
    ``projection`` the inverse direction.
    """

    def __init__(self, carrier: FinAbGroup, group: PermGroup, matrices: Sequence[Matrix],
                 embedding: Sequence[Perm] | None = None, projection=None):
        if len(matrices) != len(group.generators):
            raise ValueError("one matrix per generator of the acting group required")
        self.carrier = carrier
        self.group = group
        self.matrices = [list(map(list, A)) for A in matrices]
        self.embedding = tuple(embedding) if embedding is not None else None
        self.projection = projection
        self._all: list[Matrix] | None = None

    def __repr__(self) -> str:
        return f"ModuleStructure({list(self.carrier.invariant_factors)} over group of order {self.group.order})"

    def matrix_of(self, g: Perm) -> Matrix:
        if self._all is None:
            k = self.carrier.rank
            mats = [identity_matrix(k)]
            for i in range(1, self.group.order):
                p, j = self.group.parent[i]
                mats.append(mat_mul(mats[p], self.matrices[j]))
            self._all = mats
        return self._all[self.group.index(g)]

    def act(self, x: Sequence[int], g: Perm) -> list[int]:
        return vec_mat(x, self.matrix_of(g), self.carrier.rank)

    def check(self) -> list[str]:
        A, k = self.carrier, self.carrier.rank
        problems = []
        for j, T in enumerate(self.matrices):
            for r in A.relations:
                if not A.is_zero(vec_mat(r, T, k)):
                    problems.append(f"generator {j} does not preserve the relation lattice")
                    break
            imgs = {A.canonical(vec_mat(A.lift(c), T, k)) for c in A.elements()} if A.order <= 100_000 else None
            if imgs is not None and len(imgs) != A.order:
                problems.append(f"generator {j} does not act bijectively")
        # the BFS-tree matrices extend to a homomorphism iff every Cayley edge agrees
        self.matrix_of(self.group.identity)
        mats = self._all
        for i, row in enumerate(self.group.cayley):
            for j, dst in enumerate(row):
                prod = mat_mul(mats[i], self.matrices[j])
                if any(not A.is_zero([a - b for a, b in zip(prod[r], mats[dst][r])]) for r in range(k)):
                    problems.append("the action is not a homomorphism of the acting group")
                    return problems
        return problems


def realize_abelian(A: FinAbGroup) -> tuple[PermGroup, callable, callable]:
    """Permutation copy of ``A``: a product of cycles, one per invariant factor.

    Returns the group, vector-to-element and element-to-vector maps.
    """
    cycles = []
    for d in A.invariant_factors:
        cycles.append(PermGroup(d, [Perm([(i + 1) % d for i in range(d)])]))
    if cycles:
        G, offsets = direct_product(cycles)
    else:
        G, offsets = PermGroup(1, []), []

    def to_perm(x: Sequence[int]) -> Perm:
        g = G.identity
        for gen, c in zip(G.generators, A.canonical(x)):
            g = g * gen ** c
        return g

    def to_vec(g: Perm) -> list[int]:
        c = []
        for off, d in zip(offsets, A.invariant_factors):
            c.append(g(off) - off)
        return A.lift(c)

    return G, to_perm, to_vec


def xmod_zero_map(A: ModuleStructure) -> CrossedModule:
    """Zero boundary from a ``P``-module to ``P``."""
    problems = A.check()
    if problems:
        raise ActionViolation("; ".join(problems))
    M, to_perm, to_vec = realize_abelian(A.carrier)
    P = A.group
    k = len(A.carrier.invariant_factors)
    basis = [A.carrier.lift([int(i == j) for j in range(k)]) for i in range(k)]
    boundary = GroupHom(M, P, [P.identity] * len(M.generators))
    action = [GroupHom(M, M, [to_perm(vec_mat(b, T, A.carrier.rank)) for b in basis])
              for T in A.matrices]
    return CrossedModule(M, P, boundary, action, name="zero-map")


def pullback_xmod(nu: CrossedModule, iota: GroupHom) -> CrossedModule:
    """Pull a crossed ``Q``-module back along ``iota: P -> Q``.

    The carrier ``{(p, n) : iota p = nu n}`` lives on the disjoint union of
    the points of ``P`` and ``N``.
    """
    P, N = iota.source, nu.M
    if iota.target is not nu.P:
        raise ValueError("iota must land in the range of nu")
    dP, dN = P.degree, N.degree
    deg = dP + dN
    by_image: dict[bytes, list[Perm]] = {}
    for n, q in zip(N.elements, nu.boundary.table):
        by_image.setdefault(q.key, []).append(n)

    def pair(p: Perm, n: Perm) -> Perm:
        return embed_block(p, 0, deg) * embed_block(n, dP, deg)

    fibre = [pair(p, n) for p, q in zip(P.elements, iota.table) for n in by_image.get(q.key, [])]
    host = PermGroup(deg, [])
    C = subgroup(host, fibre)
    boundary = GroupHom(C, P, [restrict_block(c, 0, dP) for c in C.generators])
    action = []
    for g in P.generators:
        ig = iota(g)
        imgs = []
        for c in C.generators:
            p1, n = restrict_block(c, 0, dP), restrict_block(c, dP, dN)
            imgs.append(pair(p1.conj(g), nu.act(n, ig)))
        action.append(GroupHom(C, C, imgs))
    return CrossedModule(C, P, boundary, action, name="pullback")


# ------------------------------------------------------- kernel / cokernel

def cokernel(X: CrossedModule) -> tuple[PermGroup, GroupHom]:
    image = X.image()
    if not image.is_normal_in(X.P):
        raise AssertionError("boundary image is not normal: CM1 fails upstream")
    return quotient(X.P, image)


def abelian_module_on(K: PermGroup, G: PermGroup, acts: Sequence[callable],
                      embedding_gens: Sequence[Perm] | None = None) -> ModuleStructure:
    """``ModuleStructure`` for an abelian permutation group ``K``.

    ``acts[j]`` maps elements of ``K`` to their image under ``G.generators[j]``.
    """
    carrier, project = abelianization(K)
    mats = [[project(act(k)) for k in K.generators] for act in acts]
    return ModuleStructure(carrier, G, mats, embedding=K.generators, projection=project)


def kernel_module(X: CrossedModule) -> ModuleStructure:
    """``Ker(mu)`` as a module over ``Coker(mu)``."""
    K = X.kernel()
    if not K.is_abelian():
        raise AssertionError("kernel is not abelian: CM2 fails upstream")
    C, proj = cokernel(X)
    # μM acts trivially on the kernel, so any preimage in P represents
    # a cokernel generator; assert representative independence.
    for p in X.image().generators:
        for k in K.generators:
            if X.act(k, p) != k:
                raise AssertionError("image of the boundary acts nontrivially on the kernel")
    acts = [(lambda k, g=g: X.act(k, g)) for g in X.P.generators]
    return abelian_module_on(K, C, acts)


# --------------------------------------------------------------- morphisms

@dataclass
class XModMorphism:
    source: CrossedModule
    target: CrossedModule
    on_M: GroupHom
    on_P: GroupHom


@dataclass
class MorphismReport:
    checks: dict[str, bool]
    problems: list[str]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "problems": self.problems}


def _morphism_checks(X: CrossedModule, Y: CrossedModule, g: GroupHom, f: GroupHom,
                     checks: dict[str, bool], problems: list[str]) -> None:
    checks["M_hom"] = g.is_homomorphism()
    checks["P_hom"] = f.is_homomorphism()
    if not (checks["M_hom"] and checks["P_hom"]):
        problems.append("component maps are not homomorphisms")
        checks["square"] = checks["action"] = False
        return
    checks["square"] = all(Y.boundary(g(m)) == f(X.boundary(m)) for m in X.M.elements)
    if not checks["square"]:
        problems.append("nu g != f mu")
    checks["action"] = all(g(X.act(m, p)) == Y.act(g(m), f(p))
                           for m in X.M.generators for p in X.P.generators)
    if not checks["action"]:
        problems.append("g(m^p) != g(m)^(f p)")


def check_xmod_morphism(mor: XModMorphism) -> MorphismReport:
    checks: dict[str, bool] = {}
    problems: list[str] = []
    _morphism_checks(mor.source, mor.target, mor.on_M, mor.on_P, checks, problems)
    return MorphismReport(checks, problems)


class CrossedSequence:
    """``0 -> A -> M -> P -> G -> 1`` with ``M -> P`` a crossed module.

    ``inclusion[i]`` is the image in ``M`` of carrier slot ``i`` of ``A``.
    """

    def __init__(self, A: ModuleStructure, xmod: CrossedModule, G: PermGroup,
                 inclusion: Sequence[Perm], projection: GroupHom):
        if A.group is not G:
            raise ValueError("module must be over G")
        if projection.source is not xmod.P or projection.target is not G:
            raise ValueError("projection must map P to G")
        self.A = A
        self.xmod = xmod
        self.G = G
        self.inclusion = tuple(inclusion)
        self.projection = projection

    def include(self, x: Sequence[int]) -> Perm:
        out = self.xmod.M.identity
        for g, c in zip(self.inclusion, x):
            out = out * g ** c
        return out

    def to_module(self, m: Perm) -> list[int]:
        """Vector of ``A`` whose inclusion is ``m`` (``m`` must lie in the kernel)."""
        for c in self.A.carrier.elements():
            v = self.A.carrier.lift(c)
            if self.include(v) == m:
                return v
        raise ValueError(f"{m} is not in the image of A")

    def check_exactness(self) -> list[str]:
        X, A = self.xmod, self.A.carrier
        problems = []
        k = A.rank
        if len(self.inclusion) != k:
            return ["inclusion needs one image per carrier slot"]
        if any(not (a * b == b * a) for a, b in itertools.combinations(self.inclusion, 2)):
            problems.append("inclusion images do not commute")
        for r in A.relations:
            if not self.include(r).is_identity():
                problems.append("inclusion does not respect the relations of A")
                break
        image = {self.include(A.lift(c)).key for c in A.elements()}
        if len(image) != A.order:
            problems.append("A -> M is not injective")
        kernel = {m.key for m, q in zip(X.M.elements, X.boundary.table) if q.is_identity()}
        if image != kernel:
            problems.append("image of A is not Ker(mu)")
        if not self.projection.is_homomorphism() or not self.projection.is_surjective():
            problems.append("P -> G is not a surjective homomorphism")
        else:
            ker_proj = {p.key for p, g in zip(X.P.elements, self.projection.table) if g.is_identity()}
            if ker_proj != {q.key for q in X.boundary.table}:
                problems.append("image of mu is not Ker(P -> G)")
        for j, p in enumerate(X.P.generators):
            gp = self.projection(p)
            for i in range(k):
                e_i = [int(i == s) for s in range(k)]
                if X.act(self.include(e_i), p) != self.include(self.A.act(e_i, gp)):
                    problems.append("P-action on A does not factor through G")
                    break
        for prob in self.A.check():
            problems.append(f"A: {prob}")
        return problems


def crossed_sequence(X: CrossedModule) -> CrossedSequence:
    """The crossed sequence of ``X`` built from its own kernel and cokernel."""
    A = kernel_module(X)
    _, proj = cokernel(X)
    return CrossedSequence(A, X, A.group, A.embedding, GroupHom(X.P, A.group, proj.images))


def check_sequence_morphism(s1: CrossedSequence, s2: CrossedSequence,
                            f: GroupHom, g: GroupHom) -> MorphismReport:
    """Commutativity of the ladder from ``s1`` to ``s2`` with identity on A and G."""
    checks: dict[str, bool] = {}
    problems: list[str] = []
    _morphism_checks(s1.xmod, s2.xmod, f, g, checks, problems)
    same_A = (s1.A.carrier.rank == s2.A.carrier.rank
              and s1.A.carrier.relations == s2.A.carrier.relations)
    same_G = s1.G.order == s2.G.order and s1.G.generators == s2.G.generators
    checks["same_A"] = same_A
    checks["same_G"] = same_G
    if not (same_A and same_G):
        problems.append("sequences do not share A and G")
    if checks["M_hom"] and same_A:
        k = s1.A.carrier.rank
        checks["A_square"] = all(
            f(s1.include([int(i == j) for j in range(k)])) == s2.include([int(i == j) for j in range(k)])
            for i in range(k))
        if not checks["A_square"]:
            problems.append("f does not restrict to the identity on A")
    else:
        checks["A_square"] = False
    if checks["P_hom"] and same_G:
        checks["G_square"] = all(s2.projection(g(p)) == s1.projection(p) for p in s1.xmod.P.elements)
        if not checks["G_square"]:
            problems.append("g does not cover the identity on G")
    else:
        checks["G_square"] = False
    return MorphismReport(checks, problems)


def find_sequence_morphisms(s1: CrossedSequence, s2: CrossedSequence) -> Iterator[tuple[GroupHom, GroupHom]]:
    """All ``(f, g)`` making a morphism of crossed sequences (exhaustive search)."""
    X, Y = s1.xmod, s2.xmod
    for g in homomorphisms(X.P, Y.P):
        if not all(s2.projection(g(p)) == s1.projection(p) for p in X.P.generators):
            continue
        for f in homomorphisms(X.M, Y.M):
            if check_sequence_morphism(s1, s2, f, g).ok:
                yield f, g


def zero_sequence(A: ModuleStructure) -> CrossedSequence:
    """``0 -> A -> A -> G -> G -> 1`` with zero boundary and identity on G."""
    X = xmod_zero_map(A)
    _, to_perm, _ = realize_abelian(A.carrier)
    k = A.carrier.rank
    incl = [to_perm([int(i == j) for j in range(k)]) for i in range(k)]
    return CrossedSequence(A, X, A.group, incl, GroupHom.identity(A.group))
