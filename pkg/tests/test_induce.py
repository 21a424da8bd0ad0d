import pytest

from corpus import (abelian_normal_instances, composite_instances, injective_instances,
                    p_group_instances)
from xmodkit.errors import CosetLimitExceeded, PreconditionFailed
from xmodkit.families import cyclic_induction, dihedral_induction, dihedral_uv
from xmodkit.induce import (factor_through, induce, induce_injective, label_isomorphism,
                            mapping_cone_invariants, xmod_isomorphism_over)
from xmodkit.perm import GroupHom, Transversal, dihedral_group, isomorphic
from xmodkit.xmod import check_axioms, cokernel, kernel_module, xmod_identity, xmod_normal_inclusion

INJ = injective_instances()
ABN = abelian_normal_instances()
COMP = composite_instances()
PGR = p_group_instances()


@pytest.mark.parametrize("n", range(3, 9))
def test_dihedral_family(n):
    ind = dihedral_induction(n).induced
    R = ind.result
    assert R.M.order == 2 * n and isomorphic(R.M, dihedral_group(n))
    assert R.boundary.is_injective() == (n % 2 == 1)
    K = R.kernel()
    C, _ = cokernel(R)
    if n % 2 == 0:
        u, _ = dihedral_uv(ind)
        assert K.order == C.order == 2
        assert set(K.elements) == {R.M.identity, u ** (n // 2)}
    else:
        assert K.order == C.order == 1


@pytest.mark.parametrize("n", range(2, 5))
def test_cyclic_family(n):
    ind = cyclic_induction(n).induced
    R = ind.result
    assert R.M.order == n ** n and R.M.is_abelian()
    assert kernel_module(R).carrier.invariant_factors == (n,) * (n - 1)
    u = R.P.generators[0]
    perm = ind.transversal.coset_permutation(u)
    seen, k = {0}, perm[0]
    while k != 0:
        seen.add(k)
        k = perm[k]
    assert len(seen) == n


@pytest.mark.parametrize("name", sorted(INJ))
def test_order_bound(name):
    X, iota = INJ[name]
    ind = induce(X, iota)
    assert ind.order <= X.M.order ** len(ind.transversal)
    assert ind.axioms.ok


@pytest.mark.parametrize("name", sorted(ABN))
def test_injective_matches_abelian(name):
    X, iota = ABN[name]
    a, b = induce(X, iota, "inj"), induce(X, iota, "abelian")
    assert label_isomorphism(a, b) is not None


@pytest.mark.parametrize("name", sorted(COMP))
def test_composite_matches_direct(name):
    X, iota = COMP[name]
    assert not iota.is_injective() and not iota.is_surjective()
    a, b = induce(X, iota), induce(X, iota, "direct")
    assert a.route == "composite"
    assert label_isomorphism(a, b) is not None


@pytest.mark.parametrize("name", sorted(PGR))
def test_p_groups_stay_p_groups(name):
    X, iota = PGR[name]
    p = min(d for d in range(2, 10) if iota.target.order % d == 0)
    order = induce(X, iota).order
    while order % p == 0:
        order //= p
    assert order == 1


def _reversed_reps(Q, iota):
    """Largest element of each coset instead of the BFS choice."""
    T = Transversal(Q, iota)
    H = iota.image()
    reps = [Q.identity]
    for t in T.reps[1:]:
        coset = sorted((h * t for h in H.elements), key=lambda g: g.images, reverse=True)
        reps.append(coset[0])
    return reps


@pytest.mark.parametrize("name", ["C3 in S3", "reflection in D5", "transposition in S3",
                                  "inverting C3 over C2 in C4", "C2 in C6"])
def test_transversal_choice_invariance(name):
    X, iota = INJ[name]
    a = induce_injective(X, iota)
    b = induce_injective(X, iota, reps=_reversed_reps(iota.target, iota))
    assert a.transversal.reps != b.transversal.reps or len(a.transversal) == 1
    assert xmod_isomorphism_over(a.result, b.result) is not None


UNIVERSAL = ["C3 in S3", "reflection in D5", "center of D4", "S3 in S4"]


@pytest.mark.parametrize("name", UNIVERSAL)
def test_universal_property(name):
    X, iota = INJ[name]
    ind = induce(X, iota)
    Q = iota.target
    Y = xmod_identity(Q)
    f = GroupHom(X.M, Q, [iota(X.boundary(s)) for s in X.M.generators])
    gs = factor_through(ind, X, Y, f)
    assert len(gs) == 1
    assert gs[0].images == ind.result.boundary.images


def test_universal_property_into_normal_closure():
    X, iota = INJ["C3 in S3"]
    ind = induce(X, iota)
    Q = iota.target
    N = iota.image()
    Y = xmod_normal_inclusion(Q, N)
    f = GroupHom(X.M, N, [iota(s) for s in X.M.generators])
    assert len(factor_through(ind, X, Y, f)) == 1


def test_induced_axioms_exhaustive():
    for n in (3, 4, 6):
        assert check_axioms(dihedral_induction(n).induced.result, exhaustive=True).ok


def test_route_preconditions():
    X, iota = COMP["C4 squared into C4"]
    for route in ("inj", "surj", "abelian"):
        with pytest.raises(PreconditionFailed):
            induce(X, iota, route)
    Xn, iota_n = INJ["S3 in S4"]
    with pytest.raises(PreconditionFailed):
        induce(Xn, iota_n, "abelian")


def test_coset_limit_is_enforced():
    X, iota = INJ["S3 in S4"]
    with pytest.raises(CosetLimitExceeded):
        induce(X, iota, limit=10)


def test_surjective_route():
    D = dihedral_group(4)
    S = dihedral_group(2)
    sigma = GroupHom(D, S, [S.generators[0], S.generators[1]])
    assert sigma.is_homomorphism()
    ind = induce(xmod_identity(D), sigma)
    assert ind.route == "surj"
    # D4 / [D4, <x^2>] = D4 since x^2 is central
    assert ind.order == 8 and ind.axioms.ok


def test_cone_of_reflection_in_d6():
    D = dihedral_group(6)
    P = GroupHom(dihedral_induction(6).X.P, D, [D.generators[1]])
    pi1, pi2, _ = mapping_cone_invariants(P)
    assert pi1.order == 2 and pi2.carrier.invariant_factors == (2,)
