import itertools

import pytest
from hypothesis import given, strategies as st

from xmodkit.perm import (GroupHom, Perm, PermGroup, Transversal, abelian_invariants,
                          cyclic_group, dihedral_group, direct_product, homomorphisms,
                          isomorphic, normal_closure, quotient, subgroup, symmetric_group)

DEG = 6
perms = st.permutations(list(range(DEG))).map(Perm)


@given(perms, perms, perms)
def test_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms, perms)
def test_right_action_convention(a, b):
    # a*b means a first, then b
    for i in range(DEG):
        assert (a * b)(i) == b(a(i))


@given(perms)
def test_inverse_and_order(a):
    assert (a * a.inverse()).is_identity()
    assert (a ** a.order()).is_identity()
    assert all(not (a ** k).is_identity() for k in range(1, a.order()))


@given(perms, perms)
def test_conjugation(a, g):
    assert a.conj(g) == g.inverse() * a * g


@given(st.lists(perms, min_size=1, max_size=2))
def test_group_closure_and_words(gens):
    G = PermGroup(DEG, gens)
    els = set(G.elements)
    assert len(els) == G.order
    for x in G.elements[:30]:
        assert G.evaluate(G.word(x)) == x
        for g in gens:
            assert x * g in els


def test_builder_orders():
    assert cyclic_group(7).order == 7
    assert dihedral_group(6).order == 12
    assert symmetric_group(4).order == 24
    D = dihedral_group(5)
    x, y = D.generators
    assert (x ** 5).is_identity() and (y ** 2).is_identity() and (x * y * x * y).is_identity()


def test_cyclic_closure_of_three_cycle():
    assert PermGroup(3, [Perm.from_cycles(3, [[0, 1, 2]])]).order == 3


def test_quotient_and_normal_closure():
    S = symmetric_group(4)
    V = normal_closure(S, [Perm.from_cycles(4, [[0, 1], [2, 3]])])
    assert V.order == 4
    Qt, proj = quotient(S, V)
    assert Qt.order == 6
    assert proj.is_homomorphism() and proj.is_surjective()
    assert proj.kernel().order == 4


def test_hom_kernel_image():
    C = cyclic_group(12, "u")
    f = GroupHom(C, C, [C.generators[0] ** 3])
    assert f.is_homomorphism()
    assert f.kernel().order == 3 and f.image().order == 4
    assert not f.is_injective() and not f.is_surjective()


def test_abelian_invariants():
    assert abelian_invariants(symmetric_group(4)) == (2,)
    assert abelian_invariants(dihedral_group(4)) == (2, 2)
    G, _ = direct_product([cyclic_group(4), cyclic_group(6)])
    assert abelian_invariants(G) == (2, 12)


def test_homomorphism_search_counts():
    C2, S3 = cyclic_group(2), symmetric_group(3)
    assert len(list(homomorphisms(C2, S3))) == 4
    assert isomorphic(dihedral_group(3), symmetric_group(3))
    assert not isomorphic(cyclic_group(6), symmetric_group(3))


def _instances():
    D = dihedral_group(6)
    P = cyclic_group(2, "a")
    yield D, GroupHom(P, D, [D.generators[1]])
    S = symmetric_group(4)
    H = subgroup(S, [Perm([1, 2, 0, 3])])
    yield S, GroupHom.inclusion(H, S)
    C = cyclic_group(12)
    yield C, GroupHom(cyclic_group(4), C, [C.generators[0] ** 3])


@pytest.mark.parametrize("Q,iota", list(_instances()))
def test_transversal_factorization(Q, iota):
    T = Transversal(Q, iota)
    assert T.reps[0].is_identity()
    assert len(T) * iota.image().order == Q.order
    for t, q in itertools.product(range(len(T)), Q.elements):
        xi, eta = T.factor(t, q)
        assert T.reps[t] * q == iota(xi) * T.reps[eta]
    for q in Q.generators:
        assert sorted(T.coset_permutation(q)) == list(range(len(T)))


def test_transversal_rejects_bad_representatives():
    Q, iota = next(_instances())
    with pytest.raises(ValueError):
        Transversal(Q, iota, [Q.generators[0]] * 6)
