from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from xmodkit.abelian import FinAbGroup, lattice_basis, left_kernel, smith_normal_form, vec_mat

small = st.integers(-6, 6)


def square(k):
    return st.lists(st.lists(small, min_size=k, max_size=k), min_size=k, max_size=k + 1)


@given(st.integers(1, 4).flatmap(square))
def test_smith_diagonal_matches_sympy(A):
    ours = [d for d in smith_normal_form(A).diagonal if d not in (0, 1)]
    S = sympy_snf(Matrix(A), domain=ZZ)
    theirs = [abs(int(S[i, i])) for i in range(min(S.shape)) if abs(int(S[i, i])) not in (0, 1)]
    assert sorted(ours) == sorted(theirs)


@given(st.integers(1, 4).flatmap(square))
def test_smith_divisibility(A):
    d = [x for x in smith_normal_form(A).diagonal if x]
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


def test_group_order_and_canonical():
    G = FinAbGroup(2, [[2, 0], [0, 4]])
    assert G.invariant_factors == (2, 4) and G.order == 8
    assert G.canonical([2, 4]) == G.canonical([0, 0])
    assert G.order_of([1, 1]) == 4
    assert len(set(G.canonical(list(x)) for x in [(a, b) for a in range(4) for b in range(8)])) == 8


@given(st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_canonical_is_a_class_function(x):
    G = FinAbGroup(3, [[3, 0, 0], [1, 6, 0], [0, 2, 4]])
    c = G.canonical(x)
    assert G.canonical(G.lift(c)) == c
    shifted = [a + b for a, b in zip(x, G.relations[0])]
    assert G.canonical(shifted) == c


def test_infinite_group_rejected():
    import pytest

    with pytest.raises(ValueError):
        FinAbGroup(2, [[2, 0]])


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
def test_left_kernel_vectors_annihilate(B):
    K = left_kernel(B, 3)
    for z in K:
        assert vec_mat(z, B, 3) == [0, 0, 0]


def test_lattice_basis_is_echelon():
    L = lattice_basis([[2, 4], [3, 6], [0, 5]], 2)
    assert FinAbGroup(2, L).order == 5
