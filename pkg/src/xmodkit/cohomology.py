"""Third cohomology of cyclic groups and classes of crossed modules.

Modules are written additively and acted on from the right, so the
multiplicative ``a (a^t)^-1`` becomes ``a - a t``.  For a ``C_n``-module ``A``
the computation is ``H^3 = ker(N) / im(1 - t)`` with ``N = 1 + t + ... + t^(n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .abelian import (FinAbGroup, Matrix, identity_matrix, lattice_basis, left_kernel,
                      mat_add, mat_mul, mat_sub, solve_in_basis, vec_mat)
from .errors import CokernelNotCyclic
from .perm import Perm, cyclic_group
from .xmod import CrossedModule, CrossedSequence, ModuleStructure, cokernel, kernel_module


def group_ring_matrix(coeffs: Sequence[int], T: Matrix) -> Matrix:
    """``sum_i coeffs[i] T^i``."""
    k = len(T)
    out = [[0] * k for _ in range(k)]
    power = identity_matrix(k)
    for c in coeffs:
        if c:
            out = mat_add(out, [[c * v for v in row] for row in power])
        power = mat_mul(power, T)
    return out


def norm_matrix(n: int, T: Matrix) -> Matrix:
    return group_ring_matrix([1] * n, T)


def one_minus(T: Matrix) -> Matrix:
    return mat_sub(identity_matrix(len(T)), T)


def _cyclic_multiply(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[(i + j) % n] += x * y
    return out


@dataclass(frozen=True)
class CyclicResolution:
    """Free crossed resolution of ``C_n``: ``w -> t`` in dimension 1, one module
    generator ``w0`` in each dimension ``r >= 2`` with ``w_i = w0 t^i``.

    ``delta_2(w_i) = w^n``; in odd dimensions the boundary is ``1 - t`` and in
    even dimensions above 2 it is the norm.
    """

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        zero = [0] * self.n
        if _cyclic_multiply(self.boundary(3), self.boundary(4), self.n) != zero:
            raise AssertionError("(1 - t) N != 0")
        if _cyclic_multiply(self.boundary(4), self.boundary(3), self.n) != zero:
            raise AssertionError("N (1 - t) != 0")

    @property
    def delta2_exponent(self) -> int:
        """``delta_2(w_i) = w^n``."""
        return self.n

    def boundary(self, r: int) -> list[int]:
        """Group-ring coefficients of ``delta_r`` for ``r >= 3`` (on ``w0``)."""
        if r < 3:
            raise ValueError("module boundaries start in dimension 3")
        if r % 2:
            return [1, -1] + [0] * (self.n - 2)
        return [1] * self.n

    def check_on(self, A: ModuleStructure, t: Perm | None = None) -> bool:
        """Both composites vanish when evaluated on the carrier of ``A``."""
        T = A.matrix_of(t if t is not None else A.group.generators[0])
        k = A.carrier.rank
        for first, second in ((3, 4), (4, 3)):
            P = mat_mul(group_ring_matrix(self.boundary(first), T),
                        group_ring_matrix(self.boundary(second), T))
            for i in range(k):
                if not A.carrier.is_zero(P[i]):
                    return False
        return True


def cyclic_resolution(n: int) -> CyclicResolution:
    return CyclicResolution(n)


# ------------------------------------------------------------------ H^3

@dataclass
class CohomologyClass:
    group: FinAbGroup
    representative: tuple[int, ...]
    order: int

    @property
    def is_zero(self) -> bool:
        return not any(self.representative)

    def to_dict(self) -> dict:
        return {
            "h3_invariant_factors": list(self.group.invariant_factors),
            "class_vector": list(self.representative),
            "class_order": self.order,
        }


class H3Cyclic:
    """``ker(N) / im(1 - t)`` for a ``C_n``-module, with class lookup."""

    def __init__(self, n: int, A: ModuleStructure, t: Perm | None = None):
        self.n = n
        self.module = A
        if t is None:
            t = A.group.generators[0] if A.group.generators else A.group.identity
        if A.group.order != n or (n > 1 and t.order() != n):
            raise CokernelNotCyclic(f"acting group is not cyclic of order {n} on the chosen generator")
        self.t = t
        C = A.carrier
        k = C.rank
        self.T = A.matrix_of(t)
        self.N = norm_matrix(n, self.T)
        L = C.relations
        # x in ker N  <=>  x N + y R = 0 for some y
        stacked = self.N + L
        kern = left_kernel(stacked, k) if k else []
        self.kernel_basis = lattice_basis([z[:k] for z in kern] + L, k) if k else []
        image = lattice_basis([list(r) for r in one_minus(self.T)] + L, k) if k else []
        coords = [solve_in_basis(v, self.kernel_basis) for v in image]
        self.group = FinAbGroup(k, coords)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.group.invariant_factors

    def is_cocycle(self, x: Sequence[int]) -> bool:
        return self.module.carrier.is_zero(vec_mat(x, self.N, self.module.carrier.rank))

    def class_of(self, x: Sequence[int]) -> CohomologyClass:
        if not self.is_cocycle(x):
            raise AssertionError("value is not a 3-cocycle: N x != 0")
        c = self.group.canonical(solve_in_basis(list(x), self.kernel_basis))
        return CohomologyClass(self.group, c, self.group.order_of(self.group.lift(c)))


def h3_cyclic(n: int, A: ModuleStructure, t: Perm | None = None) -> H3Cyclic:
    return H3Cyclic(n, A, t)


# ----------------------------------------------------------- module builders

def module_from_matrix(orders: Sequence[int], T: Matrix, n: int) -> ModuleStructure:
    """``Z/d1 + ... + Z/dk`` with the generator of ``C_n`` acting by ``T``."""
    k = len(orders)
    carrier = FinAbGroup(k, [[d if i == j else 0 for j in range(k)] for i, d in enumerate(orders)])
    return ModuleStructure(carrier, cyclic_group(n), [T])


def module_A(n: int) -> ModuleStructure:
    """``A_n``: generators ``a_0..a_{n-1}``, ``n a_i = 0``, ``sum a_i = 0``, ``a_i t = a_{i+1}``."""
    rels = [[n if i == j else 0 for j in range(n)] for i in range(n)] + [[1] * n]
    T = [[int(j == (i + 1) % n) for j in range(n)] for i in range(n)]
    return ModuleStructure(FinAbGroup(n, rels), cyclic_group(n), [T])


def module_inverting(n: int) -> ModuleStructure:
    """``C_n'``: cyclic of order n with t acting by negation."""
    return module_from_matrix([n], [[-1]], n)


def trivial_module(n: int, orders: Sequence[int]) -> ModuleStructure:
    return module_from_matrix(orders, identity_matrix(len(orders)), n)


# ---------------------------------------------------------- cocycle lifting

@dataclass
class Cocycle3:
    value: list[int]  # f3(w0) as a vector of A
    module: ModuleStructure
    p: Perm
    m: Perm


def cokernel_generator(X: CrossedModule) -> Perm:
    """A generator of a cyclic cokernel: the image of the first P-generator that
    generates it, else the first generating element."""
    C, proj = cokernel(X)
    for g in X.P.generators:
        if proj(g).order() == C.order:
            return proj(g)
    for c in C.elements:
        if c.order() == C.order:
            return c
    raise CokernelNotCyclic(f"cokernel of order {C.order} is not cyclic")


class _Lifter:
    def __init__(self, X: CrossedModule, t: Perm | None):
        self.X = X
        self.C, self.proj = cokernel(X)
        self.n = self.C.order
        if t is None:
            t = cokernel_generator(X)
        if t not in self.C:
            raise ValueError("t must be an element of the cokernel")
        if t.order() != self.n:
            raise CokernelNotCyclic("the chosen element does not generate the cokernel")
        self.t = t
        self.A = kernel_module(X)

    def lift_choices(self) -> Iterator[tuple[Perm, Perm]]:
        X = self.X
        for p, c in zip(X.P.elements, self.proj.table):
            if c != self.t:
                continue
            pn = p ** self.n
            for m, q in zip(X.M.elements, X.boundary.table):
                if q == pn:
                    yield p, m

    def cocycle(self, p: Perm, m: Perm) -> Cocycle3:
        X = self.X
        if self.proj(p) != self.t or X.boundary(m) != p ** self.n:
            raise ValueError("(p, m) is not a valid lift")
        a = m * X.act(m, p).inverse()
        if not X.boundary(a).is_identity():
            raise AssertionError("f3(w0) does not lie in the kernel")
        value = self.A.projection(a)
        return Cocycle3(value, self.A, p, m)


def lift_cocycle(X: CrossedModule, t: Perm | None = None, p: Perm | None = None,
                 m: Perm | None = None) -> Cocycle3:
    """``f3(w0) = m (m^p)^-1`` with ``psi(p) = t`` and ``mu(m) = p^n``.

    The first valid ``p`` and ``m`` in element order are used unless given.
    """
    L = _Lifter(X, t)
    if p is None or m is None:
        for p0, m0 in L.lift_choices():
            if p is None or p0 == p:
                p, m = p0, m if m is not None else m0
                break
    coc = L.cocycle(p, m)
    H = H3Cyclic(L.n, L.A, L.t)
    if not H.is_cocycle(coc.value):
        raise AssertionError("lifted value fails the cocycle condition")
    return coc


def cohomology_class(X: CrossedModule, t: Perm | None = None) -> CohomologyClass:
    L = _Lifter(X, t)
    coc = L.cocycle(*next(L.lift_choices()))
    return H3Cyclic(L.n, L.A, L.t).class_of(coc.value)


def all_lift_classes(X: CrossedModule, t: Perm | None = None) -> set[tuple[int, ...]]:
    """Class representatives over every valid ``(p, m)`` (exhaustive)."""
    L = _Lifter(X, t)
    H = H3Cyclic(L.n, L.A, L.t)
    return {H.class_of(L.cocycle(p, m).value).representative for p, m in L.lift_choices()}


def sequence_class(seq: CrossedSequence, t: Perm | None = None) -> CohomologyClass:
    """Class of a crossed sequence whose ``G`` is cyclic, with ``A`` as given."""
    X = seq.xmod
    G = seq.G
    n = G.order
    if t is None:
        t = next((g for g in G.generators if g.order() == n), None)
        if t is None:
            t = next((g for g in G.elements if g.order() == n), None)
    if t is None or t.order() != n:
        raise CokernelNotCyclic(f"G of order {n} is not cyclic")
    p = next(x for x, g in zip(X.P.elements, seq.projection.table) if g == t)
    m = X.boundary.preimage(p ** n)
    if m is None:
        raise AssertionError("p^n is not in the image of the boundary")
    a = m * X.act(m, p).inverse()
    value = seq.to_module(a)
    return H3Cyclic(n, seq.A, t).class_of(value)
