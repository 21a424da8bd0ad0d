"""Acceptance gate: one test per criterion, each recorded for the summary."""

import os
import random
import shutil
import subprocess
import sys
import time

import pytest

from conftest import CRITERIA
from corpus import (abelian_normal_instances, composite_instances, constructed,
                    injective_instances, p_group_instances)
from oracles import (FROZEN_H3, FROZEN_TENSOR, SmallModule, abelianization_invariants,
                     bar_h3_invariants, modules_with_period, tensor_with_augmentation_ideal)
from xmodkit.cohomology import cohomology_class, h3_cyclic, module_A, module_from_matrix, module_inverting
from xmodkit.copower import is_ordered, order_word
from xmodkit.families import (cyclic_induction, dihedral_induction, dihedral_uv, dihedral_witness,
                              power_map_witness, power_map_xmod, swap_xmod)
from xmodkit.induce import factor_through, induce, label_isomorphism, presentation_stats
from xmodkit.perm import GroupHom, dihedral_group, isomorphic
from xmodkit.xmod import check_axioms, cokernel, kernel_module, xmod_identity

pytestmark = pytest.mark.acceptance


class Gate:
    """Collects sub-checks of one criterion; records the verdict even on failure."""

    def __init__(self, key):
        self.key = key
        self.failures = []
        self.notes = []

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)
        return ok

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        ok = not self.failures
        detail = "; ".join(self.notes) if ok else "; ".join(self.failures[:5])
        CRITERIA[self.key] = (ok, detail)
        print(f"{'PASS' if ok else 'FAIL'}  criterion {self.key}: {detail}")
        assert ok, self.failures
        return False


def timed(f, *args):
    t = time.perf_counter()
    out = f(*args)
    return out, time.perf_counter() - t


def test_criterion_1_dihedral_family():
    with Gate("1") as g:
        worst = 0.0
        for n in range(3, 9):
            inst, dt = timed(dihedral_induction, n)
            worst = max(worst, dt)
            R = inst.induced.result
            g.check(dt < 1.0, f"n={n} took {dt:.2f}s")
            g.check(R.M.order == 2 * n, f"n={n}: order {R.M.order}")
            g.check(isomorphic(R.M, dihedral_group(n)), f"n={n}: not dihedral")
            g.check(R.boundary.is_injective() == (n % 2 == 1), f"n={n}: bijectivity")
            K = R.kernel()
            C, _ = cokernel(R)
            if n % 2 == 0:
                u, _ = dihedral_uv(inst.induced)
                g.check(K.order == C.order == 2, f"n={n}: ker/coker orders {K.order}/{C.order}")
                g.check(set(K.elements) == {R.M.identity, u ** (n // 2)}, f"n={n}: kernel is not u^(n/2)")
            else:
                g.check(K.order == C.order == 1, f"n={n}: not bijective")
        g.notes.append(f"n=3..8 all dihedral of order 2n, slowest {worst:.3f}s")


def test_criterion_2_cyclic_family():
    with Gate("2") as g:
        for n in range(2, 6):
            inst, dt = timed(cyclic_induction, n)
            ind = inst.induced
            R = ind.result
            g.check(dt < 5.0, f"n={n} took {dt:.2f}s")
            g.check(R.M.order == n ** n and R.M.is_abelian(), f"n={n}: order {R.M.order}")
            g.check(all(x.order() == n for x in R.M.generators), f"n={n}: exponent")
            u = R.P.generators[0]
            perm = ind.transversal.coset_permutation(u)
            cyc, k = [0], perm[0]
            while k != 0:
                cyc.append(k)
                k = perm[k]
            g.check(len(cyc) == n, f"n={n}: u does not cycle the cosets")
            g.check(all(R.act(ind.label(0, t), u) == ind.label(0, perm[t]) for t in range(n)),
                    f"n={n}: u does not permute the labels")
            A = kernel_module(R)
            g.check(A.carrier.invariant_factors == (n,) * (n - 1), f"n={n}: kernel {A.carrier.invariant_factors}")
            g.check(A.carrier.order == n ** (n - 1), f"n={n}: kernel order")
            if n == 5:
                g.notes.append(f"n=2..5 give (C_n)^n; n=5 in {dt:.2f}s")


def test_criterion_3_presentation_counts():
    with Gate("3") as g:
        for n in range(3, 9):
            inst = dihedral_induction(n)
            st = presentation_stats(inst.X, inst.iota)
            g.check((st["g"], st["r"]) == (1, 1), f"n={n}: base presentation {st['g']},{st['r']}")
            g.check(st["realized"] == st["formula"] == [n, n + n * (n - 1)],
                    f"n={n}: realized {st['realized']} formula {st['formula']}")
        g.notes.append("realized (g n, r n + g^2 n (n-1)) = (n, n^2) for n=3..8")


def test_criterion_4_h3_values():
    with Gate("4") as g:
        worst = 0.0
        for n in range(2, 7):
            H, dt = timed(h3_cyclic, n, module_A(n))
            worst = max(worst, dt)
            g.check(H.invariant_factors == (n,) and dt < 1, f"A_{n}: {H.invariant_factors} in {dt:.2f}s")
        for n in (2, 4, 6):
            H, dt = timed(h3_cyclic, n, module_inverting(n))
            worst = max(worst, dt)
            g.check(H.invariant_factors == (2,) and dt < 1, f"C_{n}': {H.invariant_factors}")
            c, dt = timed(cohomology_class, swap_xmod(n))
            g.check(c.order == 2, f"swap n={n}: class order {c.order}")
        for n in range(2, 6):
            R = cyclic_induction(n).induced.result
            c, dt = timed(cohomology_class, R)
            worst = max(worst, dt)
            g.check(c.order == n and dt < 1, f"induced n={n}: class order {c.order}")
        for n in (2, 3, 4):
            c, dt = timed(cohomology_class, power_map_xmod(n))
            g.check(c.is_zero and dt < 1, f"power map n={n}: class {c.representative}")
        for n in (4, 6, 8):
            c, dt = timed(cohomology_class, dihedral_induction(n).induced.result)
            g.check(c.is_zero and dt < 1, f"dihedral n={n}: class {c.representative}")
        g.notes.append(f"H3(C_n,A_n)=C_n, H3(C_n,C_n')=C_2, induced class order n, trivial classes zero; slowest {worst:.3f}s")


def test_criterion_5_oracle_equivalence():
    with Gate("5") as g:
        count = 0
        for n in (2, 3):
            for A in modules_with_period(n, max_order=9):
                S = module_from_matrix(A.orders, [list(v) for v in A.images], n)
                ours = h3_cyclic(n, S).invariant_factors
                ref = bar_h3_invariants(n, A)
                g.check(ours == ref, f"n={n} {A}: {ours} vs oracle {ref}")
                count += 1
        for (n, orders, images), expected in FROZEN_H3.items():
            A = SmallModule(orders, images)
            g.check(bar_h3_invariants(n, A) == expected, f"oracle drifted on {A}")
            S = module_from_matrix(orders, [list(v) for v in images], n)
            g.check(h3_cyclic(n, S).invariant_factors == expected, f"frozen value {A}")
        g.notes.append(f"{count} modules (|A| <= 9, n in {{2,3}}) agree with the bar-resolution oracle")


def test_criterion_6_route_agreement():
    with Gate("6") as g:
        abn = abelian_normal_instances()
        for name, (X, iota) in abn.items():
            a, b = induce(X, iota, "inj"), induce(X, iota, "abelian")
            g.check(label_isomorphism(a, b) is not None, f"{name}: inj and abelian differ")
        comp = composite_instances()
        for name, (X, iota) in comp.items():
            g.check(not iota.is_injective() and not iota.is_surjective(), f"{name}: not a mixed map")
            a, b = induce(X, iota), induce(X, iota, "direct")
            g.check(a.route == "composite", f"{name}: route {a.route}")
            g.check(label_isomorphism(a, b) is not None, f"{name}: composite and direct differ")
        g.check(len(abn) >= 6 and len(comp) >= 3, "corpus too small")
        g.notes.append(f"{len(abn)} abelian-normal and {len(comp)} composite instances agree label for label")


def _all_constructed():
    for name, X in constructed():
        yield name, X
    for name, (X, iota) in {**injective_instances(), **composite_instances()}.items():
        yield name, X
        yield f"induced {name}", induce(X, iota, check=False).result
    for n in range(3, 9):
        yield f"dihedral {n}", dihedral_induction(n).induced.result
    for n in range(2, 6):
        yield f"cyclic {n}", cyclic_induction(n).induced.result
    for n in (2, 4, 6):
        yield f"swap {n}", swap_xmod(n)
        w = dihedral_witness(n, "xy")
        yield f"witness top {n}", w.top.xmod
    for n in (2, 3):
        w = power_map_witness(n)
        yield f"power map {n}", w.bottom.xmod
        yield f"zero sequence {n}", w.top.xmod


def test_criterion_7a_axioms_exhaustive():
    with Gate("7a") as g:
        count = 0
        for name, X in _all_constructed():
            rep = check_axioms(X, exhaustive=True)
            g.check(rep.mode == "exhaustive" and rep.ok, f"{name}: {rep.to_dict()}")
            count += 1
        g.notes.append(f"CM1/CM2 hold on all pairs for {count} crossed modules")


def test_criterion_7b_order_bound():
    with Gate("7b") as g:
        insts = dict(injective_instances())
        for n in range(3, 9):
            d = dihedral_induction(n)
            insts[f"dihedral {n}"] = (d.X, d.iota)
        for n in range(2, 6):
            c = cyclic_induction(n)
            insts[f"cyclic {n}"] = (c.X, c.iota)
        for name, (X, iota) in insts.items():
            ind = induce(X, iota)
            bound = X.M.order ** len(ind.transversal)
            g.check(ind.order <= bound, f"{name}: {ind.order} > {bound}")
        g.notes.append(f"|induced| <= |M|^[Q:P] on {len(insts)} injective instances")


def test_criterion_7c_p_groups():
    with Gate("7c") as g:
        insts = p_group_instances()
        primes = set()
        for name, (X, iota) in insts.items():
            p = min(d for d in range(2, 10) if iota.target.order % d == 0)
            primes.add(p)
            order = induce(X, iota).order
            while order % p == 0:
                order //= p
            g.check(order == 1, f"{name}: order not a power of {p}")
        g.check(len(insts) >= 5 and primes == {2, 3}, "need 5 instances over p = 2 and 3")
        g.notes.append(f"{len(insts)} p-group instances (p in {sorted(primes)}) stay p-groups")


def test_criterion_7d_universal_property():
    with Gate("7d") as g:
        inj = injective_instances()
        names = ["C3 in S3", "reflection in D5", "center of D4", "S3 in S4"]
        for name in names:
            X, iota = inj[name]
            ind = induce(X, iota)
            Q = iota.target
            f = GroupHom(X.M, Q, [iota(X.boundary(s)) for s in X.M.generators])
            gs = factor_through(ind, X, xmod_identity(Q), f)
            g.check(len(gs) == 1, f"{name}: {len(gs)} factorizations")
        g.notes.append(f"unique factorization through the unit on {len(names)} instances")


def test_criterion_7e_order_word():
    with Gate("7e") as g:
        rng = random.Random(20261014)
        insts = injective_instances()
        names = sorted(insts)
        built = {name: induce(*insts[name], "inj") for name in names}
        total = 0
        longest = 0
        while total < 1000:
            name = names[total % len(names)]
            X, _ = insts[name]
            ind = built[name]
            T = ind.transversal
            w = [(X.M.elements[rng.randrange(X.M.order)], rng.randrange(len(T)))
                 for _ in range(rng.randint(0, 10))]
            res = order_word(w, X, T)
            g.check(is_ordered(res.word), f"{name}: unordered output for {w}")
            g.check(_image(ind, X, res.word) == _image(ind, X, w), f"{name}: image changed for {w}")
            longest = max(longest, res.steps)
            total += 1
        g.notes.append(f"{total} seeded words ordered with equal images; at most {longest} swaps")


def _image(ind, X, word):
    out = ind.result.M.identity
    for m, t in word:
        out = out * ind.pair_image(m, t, X)
    return out


def test_criterion_7f_tensor_oracle():
    with Gate("7f") as g:
        insts = abelian_normal_instances()
        cases = {"C2 in C4": insts["C2 in C4"], "C3 in S3": insts["C3 in S3"],
                 "C2 in D4": insts["center of D4"]}
        for label, (X, iota) in cases.items():
            P, Q = X.P, iota.target
            h1 = abelianization_invariants([g0.images for g0 in P.generators], P.degree)
            oracle = tensor_with_augmentation_ideal(h1, Q.order // P.order)
            pi2 = kernel_module(induce(X, iota).result).carrier.invariant_factors
            g.check(pi2 == oracle == FROZEN_TENSOR[label], f"{label}: {pi2} vs oracle {oracle}")
        g.notes.append("pi_2 = H_1(P) (x) I(Q/P) for C2<C4, C3<S3, C2<D4")


def _gallery_cmd():
    exe = shutil.which("xmodkit")
    return [exe] if exe else [sys.executable, "-m", "xmodkit"]


def test_criterion_8_determinism():
    with Gate("8") as g:
        cmd = _gallery_cmd() + ["gallery", "--seed", "7"]
        env = dict(os.environ, PYTHONHASHSEED="random")
        env.pop("XMODKIT_COSET_LIMIT", None)
        a = subprocess.run(cmd, capture_output=True, check=False, env=env)
        b = subprocess.run(cmd, capture_output=True, check=False, env=env)
        g.check(a.returncode == 0, f"gallery exit {a.returncode}: {a.stdout[-300:]!r}")
        g.check(a.stdout == b.stdout and len(a.stdout) > 0, "gallery output differs between runs")
        g.notes.append(f"two runs of `xmodkit gallery --seed 7` are byte-identical ({len(a.stdout)} bytes, all rows pass)")
