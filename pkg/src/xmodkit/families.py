"""Named instances: the dihedral and cyclic inductions and the H^3 witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from .induce import InducedXMod, induce
from .perm import GroupHom, Perm, PermGroup, cyclic_group, dihedral_group, direct_product
from .xmod import CrossedModule, CrossedSequence, crossed_sequence, xmod_identity, zero_sequence


@dataclass
class Instance:
    X: CrossedModule
    iota: GroupHom
    induced: InducedXMod


def dihedral_induction(n: int, route: str = "auto") -> Instance:
    """``C_2 = <y>`` induced along its inclusion into ``D_n``."""
    Q = dihedral_group(n)
    P = cyclic_group(2, "a")
    iota = GroupHom(P, Q, [Q.generators[1]])
    X = xmod_identity(P)
    return Instance(X, iota, induce(X, iota, route))


def cyclic_induction(n: int, route: str = "auto") -> Instance:
    """``C_n`` induced along ``t -> u^n`` into ``C_{n^2}``."""
    Q = cyclic_group(n * n, "u")
    P = cyclic_group(n, "t")
    iota = GroupHom(P, Q, [Q.generators[0] ** n])
    X = xmod_identity(P)
    return Instance(X, iota, induce(X, iota, route))


def dihedral_uv(ind: InducedXMod) -> tuple[Perm, Perm]:
    """``u = a0 a1`` and ``v = a0`` in the induced dihedral group."""
    a0, a1 = ind.label(0, 0), ind.label(0, 1)
    return a0 * a1, a0


def power_map_xmod(n: int) -> CrossedModule:
    """``C_{n^2} -> C_{n^2}``, ``u -> u^n``, trivial action."""
    C = cyclic_group(n * n, "u")
    f = GroupHom(C, C, [C.generators[0] ** n])
    return CrossedModule(C, C, f, [GroupHom.identity(C)], name="power-map")


def swap_xmod(n: int) -> CrossedModule:
    """``C_n x C_n -> C_{n^2}``, both factors to ``u^n``, ``u`` swapping them.

    Only a crossed module for even ``n``: ``u^n`` must act trivially.
    """
    if n % 2:
        raise ValueError("n must be even")
    Cn = cyclic_group(n, "t")
    M, _ = direct_product([Cn, Cn])
    M = PermGroup(M.degree, M.generators, names=["t0", "t1"])
    P = cyclic_group(n * n, "u")
    un = P.generators[0] ** n
    boundary = GroupHom(M, P, [un, un])
    t0, t1 = M.generators
    return CrossedModule(M, P, boundary, [GroupHom(M, M, [t1, t0])], name="swap")


@dataclass
class WitnessPair:
    top: CrossedSequence
    bottom: CrossedSequence
    on_M: GroupHom
    on_P: GroupHom


def power_map_witness(n: int) -> WitnessPair:
    """``lambda(t) = u^n`` on both middle terms, from the zero sequence of
    ``C_n`` to the sequence of the power map."""
    bottom = crossed_sequence(power_map_xmod(n))
    top = zero_sequence(bottom.A)
    un = bottom.xmod.M.generators[0] ** n
    f = GroupHom(top.xmod.M, bottom.xmod.M, [un for _ in top.xmod.M.generators])
    g = GroupHom(top.xmod.P, bottom.xmod.P,
                 [un if not x.is_identity() else bottom.xmod.P.identity for x in top.xmod.P.generators])
    return WitnessPair(top, bottom, f, g)


def dihedral_witness(n: int, p_image: str = "x") -> WitnessPair:
    """``f_2(t) = u^(n/2)`` and ``f_1(t) = p_image`` for even ``n``.

    ``p_image`` is ``"x"`` or ``"xy"``.
    """
    if n % 2:
        raise ValueError("n must be even")
    inst = dihedral_induction(n)
    bottom = crossed_sequence(inst.induced.result)
    top = zero_sequence(bottom.A)
    u, _ = dihedral_uv(inst.induced)
    Q = bottom.xmod.P
    x, y = Q.generators
    target = {"x": x, "xy": x * y}[p_image]
    f = GroupHom(top.xmod.M, bottom.xmod.M, [u ** (n // 2) for _ in top.xmod.M.generators])
    g = GroupHom(top.xmod.P, bottom.xmod.P,
                 [target if not t.is_identity() else Q.identity for t in top.xmod.P.generators])
    return WitnessPair(top, bottom, f, g)
