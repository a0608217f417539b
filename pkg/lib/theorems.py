#!/usr/bin/env python3
#
# gcover - finite group covering numbers and Frattini quotients
#
# Permission is hereby granted, free of charge, to any person
# obtaining a copy of this software and associated documentation files
# (the "Software"), to deal in the Software without restriction,
# including without limitation the rights to use, copy, modify, merge,
# publish, distribute, sublicense, and/or sell copies of the Software,
# and to permit persons to whom the Software is furnished to do so,
# subject to the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS
# BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN
# ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN
# CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

'''
Checkers for the decomposition results on G/Φ(G) and on quotients by
cores of maximal subgroups. Each returns a VerificationRecord; unmet
hypotheses give SKIP with the failed predicate as the reason.
'''

import itertools
from collections import namedtuple
from math import gcd

import numpy as np
import sympy

from .util import InputError, PreconditionError, ResourceError, MAX_ORDER, print_error
from .version import FORMAT_VERSION
from .group import (structural_predicates, is_normal, quotient, section, subgroup_as_group,
                    subgroup_commutator, center, inner_automorphism_group, product_order,
                    whole_group, SubgroupSet)
from .lattice import all_subgroups, frattini, non_generators, core, minimal_normal_over
from .cover import sigma, is_primitive_sigma_sum, maximal_class_ids
from .isomorphism import is_isomorphic
from .descriptor import DescriptorMatcher, Direct, Semidirect, Cyclic, ElemAbelian, elementary
from .classify import (frattini_quotient, aut_order, m_cyclic, is_mersenne_prime,
                       is_fermat_prime, is_squarefree)
from .recipe import prime_power
from .records import VerificationRecord, passed, failed, skipped, FAIL, PASS
from . import constructors, gfp


PrimePowerSolution = namedtuple('PrimePowerSolution', ['p', 'n', 'q', 'm', 'cases'])

LEMMA_3_7_CAP = 200


def intersection(G, subs):
    '''∩ subs, the whole group for an empty list'''
    if not subs:
        return whole_group(G)
    members = np.ones(G.order, dtype=bool)
    for S in subs:
        members &= S.members
    return SubgroupSet(G, members, check=False)


def has_squarefree_exponent(H):
    return all(is_squarefree(o) for o in set(H.element_orders.tolist()))


def _hypotheses(G, theorem_id, nilpotent_ok=True):
    preds = structural_predicates(G)
    if preds.is_cyclic:
        return skipped(G, theorem_id, "cyclic")
    if not preds.is_soluble:
        return skipped(G, theorem_id, "insoluble")
    if not nilpotent_ok and preds.is_nilpotent:
        return skipped(G, theorem_id, "nilpotent")
    return None


def _normal_remainder_cover(G, sigma_result):
    '''A σ-cover whose omitted maximals are all normal, or None'''
    lattice = all_subgroups(G)
    for w in sigma_result.witnesses:
        rest = [i for i in lattice.maximal_indices if i not in w]
        if all(lattice.normal_flags[i] for i in rest):
            return w, rest
    return None


def verify_prop_3_1(G, sigma_result=None):
    '''G/Φ = H/Φ × G/H for H the intersection of a σ-cover whose other
    maximals are normal; H/Φ has elementary abelian Sylow subgroups, and
    G/H is a primitive σ-sum group when the σ-cover is unique.'''
    tid = 'Prop3.1'
    skip = _hypotheses(G, tid)
    if skip:
        return skip
    lattice = all_subgroups(G)
    sigma_result = sigma_result or sigma(G)
    s, m = sigma_result.value, len(lattice.maximal_indices)
    params = {'m': m, 'sigma': s}
    if m <= s:
        return skipped(G, tid, "no surplus maximals", **params)
    found = _normal_remainder_cover(G, sigma_result)
    if found is None:
        return skipped(G, tid, "no σ-cover with all other maximals normal", **params)
    witness, rest = found
    cover = [lattice.subgroups[i] for i in witness]
    H = intersection(G, cover)
    if not is_normal(G, H):
        return failed(G, tid, "H is not normal", selection=witness, **params)

    # the chain H_j = H_{j-1} ∩ M_{l_j} down to Φ
    Phi = frattini(G)
    Hj = H
    used = []
    for i in rest:
        M = lattice.subgroups[i]
        if not Hj <= M:
            Hj = Hj & M
            used.append(i)
    K = intersection(G, [lattice.subgroups[i] for i in used])
    params.update(H_order=H.size, phi_order=Phi.size, chain_length=len(used))
    if Hj != Phi:
        return failed(G, tid, "the chain ends at order %d, not Φ" % Hj.size,
                      selection=witness, **params)
    if not ((H & K) == Phi and product_order(H, K) == G.order):
        return failed(G, tid, "H/Φ and K/Φ do not split G/Φ", selection=witness, **params)
    GH, _ = quotient(G, H)
    if not is_isomorphic(GH, section(G, K, Phi)):
        return failed(G, tid, "G/H is not isomorphic to K/Φ", selection=witness, **params)

    HPhi = section(G, H, Phi)
    if not (HPhi.is_abelian and has_squarefree_exponent(HPhi)):
        return failed(G, tid, "H/Φ is not a product of elementary abelian groups",
                      selection=witness, **params)
    unique = sigma_result.exhaustive_flag and len(sigma_result.witnesses) == 1
    params['unique_cover'] = unique
    if unique:
        try:
            primitive = is_primitive_sigma_sum(GH)
        except PreconditionError as e:
            return failed(G, tid, "G/H: %s" % e, selection=witness, **params)
        if not primitive:
            return failed(G, tid, "unique σ-cover but G/H is not primitive",
                          selection=witness, **params)
    return passed(G, tid, "G/Φ = H/Φ x G/H", **params)


def verify_cor_3_1_5(G, sigma_result=None):
    tid = 'Cor3.1.5'
    skip = _hypotheses(G, tid)
    if skip:
        return skip
    lattice = all_subgroups(G)
    sigma_result = sigma_result or sigma(G)
    s = sigma_result.value
    trigger = [i for i in lattice.maximal_indices
               if not lattice.normal_flags[i] and lattice.subgroups[i].index() == s - 1
               and subgroup_as_group(G, lattice.subgroups[i])[0].is_abelian]
    params = {'sigma': s, 'm': len(lattice.maximal_indices)}
    if not trigger:
        return skipped(G, tid, "no non-normal abelian maximal of index σ-1", **params)
    Phi = frattini(G)
    Z = center(G)
    if not Phi <= Z:
        return failed(G, tid, "Φ is not central", selection=trigger, **params)
    Inn = inner_automorphism_group(G)
    ZPhi = section(G, Z, Phi)
    Q, _ = frattini_quotient(G)
    if Inn.order * ZPhi.order != Q.order:
        return failed(G, tid, "|Inn(G)| |Z/Φ| != |G/Φ|", selection=trigger, **params)
    if not is_isomorphic(Q, constructors.direct_product(Inn, ZPhi)):
        return failed(G, tid, "G/Φ is not Inn(G) x Z(G)/Φ", selection=trigger, **params)
    if not is_primitive_sigma_sum(Inn):
        return failed(G, tid, "Inn(G) is not a primitive σ-sum group", selection=trigger, **params)
    return passed(G, tid, "G/Φ = Inn(G) x Z(G)/Φ", **params)


def _check_selection(G, selection):
    lattice = all_subgroups(G)
    maximal = set(lattice.maximal_indices)
    positions = [lattice.position(M) for M in selection]
    for k, pos in enumerate(positions):
        if pos not in maximal:
            raise InputError("selection entry %d is not a maximal subgroup" % k)
        if lattice.normal_flags[pos]:
            raise InputError("selection entry %d is normal" % k)
    class_of = maximal_class_ids(G)
    for a, b in itertools.combinations(range(len(positions)), 2):
        if class_of[positions[a]] == class_of[positions[b]]:
            raise InputError("selection entries %d and %d are conjugate" % (a, b))
    return positions


class _Checks(object):
    '''Named sub-assertions of one record'''

    def __init__(self):
        self.results = []

    def add(self, name, ok):
        self.results.append((name, bool(ok)))

    def failures(self):
        return [name for name, ok in self.results if not ok]

    def names(self):
        return [name for name, _ in self.results]


def _iso_direct(X, Y, Z):
    '''X ≅ Y × Z'''
    if X.order != Y.order * Z.order:
        return False
    return is_isomorphic(X, constructors.direct_product(Y, Z))


def verify_thm_3_4p(G, selection):
    '''Decompositions of G/∩C_i and ∩M_i/∩C_i for pairwise non-conjugate
    non-normal maximal subgroups M_i with cores C_i.'''
    tid = 'Thm3.4p'
    if not selection:
        raise InputError("empty selection")
    positions = _check_selection(G, selection)
    if not structural_predicates(G).is_soluble:
        return skipped(G, tid, "insoluble")
    n = len(selection)
    Ms = list(selection)
    Cs = [core(G, M) for M in Ms]
    Hs = [intersection(G, Cs[:i] + Cs[i + 1:]) for i in range(n)]
    C = intersection(G, Cs)
    M = intersection(G, Ms)
    Ks = [intersection(G, Ms[:i] + Ms[i + 1:]) for i in range(n)]
    checks = _Checks()

    Ls = []
    for Ci in Cs:
        mn = minimal_normal_over(G, Ci)
        Ls.append(mn.subgroup)
        checks.add("L_%d unique" % len(Ls), mn.unique)
    if None in Ls:
        return failed(G, tid, "no unique minimal normal subgroup over a core",
                      selection=positions, checks=checks.names())

    MC = section(G, M, C)
    if all(not Hs[i] <= Cs[i] for i in range(n)):
        L = intersection(G, Ls)
        checks.add("(i) L normal", is_normal(G, L))
        checks.add("(i) LM = G", product_order(L, M) == G.order)
        checks.add("(i) L ∩ M = C", (L & M) == C)
        factors = [section(G, Ls[i], Cs[i]) for i in range(n)]
        prod_order = int(np.prod([F.order for F in factors]))
        LC = section(G, L, C)
        if prod_order != LC.order:
            checks.add("(i) L/C = ∏ L_i/C_i", False)
        elif prod_order <= MAX_ORDER:
            P = factors[0]
            for F in factors[1:]:
                P = constructors.direct_product(P, F)
            checks.add("(i) L/C = ∏ L_i/C_i", is_isomorphic(LC, P))

    for l in range(n):
        MlCl = section(G, Ms[l], Cs[l])
        KH = section(G, Ks[l], Hs[l])
        if product_order(Hs[l], Cs[l]) == G.order:
            checks.add("(ii) l=%d" % (l + 1), _iso_direct(MC, MlCl, KH))
        elif sympy.isprime(MlCl.order):
            checks.add("corollary l=%d" % (l + 1), is_isomorphic(MC, KH))
        if (Hs[l] & Ms[l]) <= Cs[l]:
            checks.add("(iii) l=%d" % (l + 1), is_isomorphic(MC, KH))

    for i, j in itertools.permutations(range(n), 2):
        comm = subgroup_commutator(G, Ls[i] & Hs[i], Ms[j] & Hs[j])
        checks.add("commutator %d,%d" % (i + 1, j + 1), comm <= C)

    params = {'n': n, 'checks': checks.names()}
    bad = checks.failures()
    if bad:
        return failed(G, tid, "failed: %s" % ", ".join(bad), selection=positions, **params)
    return passed(G, tid, "%d checks" % len(checks.results), **params)


def thm_3_4p_selections(G, limit=4):
    '''One representative per class of non-normal maximals: the full list
    when it is short, and every pair.'''
    lattice = all_subgroups(G)
    class_of = maximal_class_ids(G)
    reps = {}
    for pos in lattice.maximal_indices:
        if not lattice.normal_flags[pos]:
            reps.setdefault(class_of[pos], lattice.subgroups[pos])
    reps = [reps[c] for c in sorted(reps)]
    if not reps:
        return []
    selections = [[M] for M in reps]
    if len(reps) >= 2:
        selections += [list(pair) for pair in itertools.combinations(reps, 2)]
    if 2 < len(reps) <= limit:
        selections.append(reps)
    return selections


def verify_thm_3_5(G, M1, M2):
    '''(M1∩M2)/(C1∩C2) ≅ Z_t × Z_n when M_i/C_i is cyclic of order r_i and
    ℓ = |G : C1C2| > 1.'''
    tid = 'Thm3.5'
    if not structural_predicates(G).is_soluble:
        return skipped(G, tid, "insoluble")
    lattice = all_subgroups(G)
    maximal = set(lattice.maximal_indices)
    positions = [lattice.position(M1), lattice.position(M2)]
    if not all(p in maximal for p in positions):
        return skipped(G, tid, "maximal subgroups required")
    class_of = maximal_class_ids(G)
    if class_of[positions[0]] == class_of[positions[1]]:
        return skipped(G, tid, "non-conjugate required")
    C1, C2 = core(G, M1), core(G, M2)
    Q1, Q2 = section(G, M1, C1), section(G, M2, C2)
    if not (structural_predicates(Q1).is_cyclic and structural_predicates(Q2).is_cyclic):
        return skipped(G, tid, "M_i/C_i cyclic required")
    r1, r2 = Q1.order, Q2.order
    ell = G.order // product_order(C1, C2)
    params = {'r1': r1, 'r2': r2, 'ell': ell}
    if ell <= 1:
        return skipped(G, tid, "|G : C1C2| > 1 required", **params)
    C12 = C1 & C2
    params['case'] = 1 if (C1 & M2) == C12 or (C2 & M1) == C12 else 2
    if r1 % ell or r2 % ell:
        return failed(G, tid, "ℓ = %d does not divide both r_i" % ell, selection=positions, **params)
    n = gcd(r1 // ell, r2 // ell)
    t = r1 * r2 // (ell * n)
    params.update(n=n, t=t)
    K = section(G, M1 & M2, C12)
    if K.order != t * n:
        return failed(G, tid, "|(M1∩M2)/(C1∩C2)| = %d, not %d" % (K.order, t * n),
                      selection=positions, **params)
    if not is_isomorphic(K, constructors.direct_product(constructors.cyclic(t), constructors.cyclic(n))):
        return failed(G, tid, "(M1∩M2)/(C1∩C2) is not Z_%d x Z_%d" % (t, n),
                      selection=positions, **params)
    return passed(G, tid, "Z_%d x Z_%d" % (t, n), **params)


def thm_3_5_pairs(G):
    '''Pairs of representatives of distinct maximal classes'''
    lattice = all_subgroups(G)
    class_of = maximal_class_ids(G)
    reps = {}
    for pos in lattice.maximal_indices:
        reps.setdefault(class_of[pos], lattice.subgroups[pos])
    return list(itertools.combinations([reps[c] for c in sorted(reps)], 2))


def is_dedekind(H):
    '''Every subgroup of H is normal'''
    return all(all_subgroups(H).normal_flags)


def verify_prop_3_8(G, L, M):
    tid = 'Prop3.8'
    lattice = all_subgroups(G)
    if not is_normal(G, L):
        return skipped(G, tid, "L normal required")
    if lattice.position(M) not in set(lattice.maximal_indices):
        return skipped(G, tid, "M maximal required")
    if not ((L & M).is_trivial() and L.size * M.size == G.order):
        return skipped(G, tid, "G = LM with L ∩ M = 1 required")
    t, inv = G.table, G.inverses
    ms = M.elements()[M.elements() != G.identity]
    ls = L.elements()[L.elements() != G.identity]
    fixed = t[t[ms[:, None], ls[None, :]], inv[ms][:, None]] == ls[None, :]
    if fixed.all(axis=1).any():
        return skipped(G, tid, "faithful action required")
    if fixed.any():
        return skipped(G, tid, "fixed-point-free action required")
    if not sympy.isprime(L.size - 1):
        return skipped(G, tid, "|L| - 1 prime required")
    H, _ = subgroup_as_group(G, M)
    if not is_dedekind(H):
        return skipped(G, tid, "every subgroup of M normal in M required")

    params = {'L_order': L.size, 'M_order': M.size}
    orbit = set(t[t[ms, ls[0]], inv[ms]].tolist()) | {int(ls[0])}
    if len(orbit) != len(ls) or M.size != L.size - 1:
        return failed(G, tid, "M is not transitive on L - 1", selection=[lattice.position(L),
                      lattice.position(M)], **params)
    if L.size == 3:
        ok, shape = is_isomorphic(G, constructors.symmetric(3)), "S3"
    elif prime_power(L.size) and prime_power(L.size)[0] == 2:
        k = prime_power(L.size)[1]
        ok, shape = is_isomorphic(G, constructors.mersenne_semidirect(k)), "E(%d):C(%d)" % (L.size, M.size)
    else:
        ok, shape = False, None
    if not ok:
        return failed(G, tid, "G is neither S3 nor E(2^n):C(q)",
                      selection=[lattice.position(L), lattice.position(M)], **params)
    return passed(G, tid, "G = %s" % shape, shape=shape, **params)


def prop_3_8_pairs(G):
    '''(L, M) with L a normal complement of the maximal subgroup M'''
    lattice = all_subgroups(G)
    pairs = []
    for N in lattice.normals():
        if N.is_trivial() or N.is_whole():
            continue
        for M in lattice.maximals():
            if (N & M).is_trivial() and N.size * M.size == G.order:
                pairs.append((N, M))
    return pairs


def lemma_3_9_cases(p, n, q, m):
    cases = []
    if m == 1 and p == 2 and is_mersenne_prime(q):
        cases.append('i')
    if n == 1 and q == 2 and is_fermat_prime(p):
        cases.append('ii')
    if (p, n, q, m) == (3, 2, 2, 3):
        cases.append('iii')
    return tuple(cases)


def solve_prime_power_eq(p_max, exp_max):
    '''All p^n = q^m + 1 with p, q prime <= p_max and n, m <= exp_max'''
    if p_max < 2 or exp_max < 1:
        return []
    primes = list(sympy.primerange(2, p_max + 1))
    shifted = {}
    for q in primes:
        for m in range(1, exp_max + 1):
            shifted[q ** m + 1] = (q, m)
    solutions = []
    for p in primes:
        for n in range(1, exp_max + 1):
            hit = shifted.get(p ** n)
            if hit:
                q, m = hit
                solutions.append(PrimePowerSolution(p, n, q, m, lemma_3_9_cases(p, n, q, m)))
    return solutions


def verify_lemma_3_9(p_max=1000, exp_max=20):
    tid = 'Lemma3.9'
    solutions = solve_prime_power_eq(p_max, exp_max)
    label = "p^n=q^m+1 (p,q<=%d, n,m<=%d)" % (p_max, exp_max)
    bad = [s for s in solutions if len(s.cases) != 1]
    params = {'solutions': len(solutions), 'p_max': p_max, 'exp_max': exp_max}
    if bad:
        s = bad[0]
        reason = "(%d,%d,%d,%d) has case tags %s" % (s.p, s.n, s.q, s.m, list(s.cases))
        counterexample = {'version': FORMAT_VERSION, 'theorem_id': tid,
                          'bounds': [p_max, exp_max], 'reason': reason}
        return VerificationRecord(label, tid, FAIL, reason, params, counterexample)
    return VerificationRecord(label, tid, PASS, "%d solutions, one case each" % len(solutions), params)


def verify_lemma_3_7(n, cap=LEMMA_3_7_CAP):
    '''Every E(2^n) ⋊ Z_q, q = 2^n - 1 prime, is isomorphic to the first one.'''
    tid = 'Lemma3.7'
    q = 2 ** n - 1
    if n < 2 or not sympy.isprime(q):
        raise InputError("2^%d - 1 = %d is not a prime" % (n, q))
    if 2 ** n * q > MAX_ORDER:
        raise ResourceError("order of E(%d):C(%d)" % (2 ** n, q), MAX_ORDER)
    matrices = gfp.matrices_of_order(n, 2, q, cap=cap)
    groups = [constructors.mersenne_semidirect(n, A) for A in matrices]
    base = groups[0]
    print_error("[theorems] comparing", len(groups), "instances of", base.label)
    params = {'instances': len(groups), 'q': q}
    for k, H in enumerate(groups[1:], 1):
        if not is_isomorphic(base, H):
            return failed(base, tid, "instance %d is not isomorphic to instance 0" % k,
                          selection=[k], **params)
    return passed(base, tid, "%d instances pairwise isomorphic" % len(groups), **params)


def verify_lemma_3_3(G, sigma_result=None):
    '''G/Φ = (E_{σ-1} ⋊ Z_t) × ∏ Z_{p_i} with t | |Aut(E_{σ-1})| and
    ℓ = m - m(Z_t) - σ + 1 primes, counted with multiplicity.'''
    tid = 'Lemma3.3'
    skip = _hypotheses(G, tid, nilpotent_ok=False)
    if skip:
        return skip
    lattice = all_subgroups(G)
    sigma_result = sigma_result or sigma(G)
    s, m = sigma_result.value, len(lattice.maximal_indices)
    params = {'m': m, 'sigma': s}
    if s >= m:
        return skipped(G, tid, "σ < m required", **params)
    found = _normal_remainder_cover(G, sigma_result)
    if found is None:
        return skipped(G, tid, "no σ-cover with all other maximals normal", **params)
    if s <= 3:
        return failed(G, tid, "σ = %d, not above 3" % s, selection=found[0], **params)
    Q, _ = frattini_quotient(G)
    E = s - 1
    if not prime_power(E) or Q.order % E:
        return failed(G, tid, "σ-1 = %d is not a prime power dividing |G/Φ|" % E,
                      selection=found[0], **params)
    matcher = DescriptorMatcher()
    expected = m - s + 1
    templates = []
    for t in sympy.divisors(Q.order // E):
        if aut_order(E) % t:
            continue
        f = sympy.factorint(Q.order // (E * t))
        rest = [ElemAbelian(p, e) for p, e in sorted(f.items())]
        D = Direct(Semidirect(elementary(E), Cyclic(t)), *rest) if rest else \
            Semidirect(elementary(E), Cyclic(t))
        templates.append((sum(f.values()) != expected - m_cyclic(t), t, f, D))
    # the stated ℓ first, then the shapes whose ℓ disagrees
    for wrong_ell, t, f, D in sorted(templates, key=lambda x: (x[0], x[1])):
        if not matcher.matches(Q, D):
            continue
        ell = sum(f.values())
        if wrong_ell:
            return failed(G, tid, "G/Φ = %s with ℓ = %d, but m - m(Z_t) - σ + 1 = %d"
                          % (D, ell, expected - m_cyclic(t)), selection=found[0],
                          t=t, ell=ell, primes=sorted(f), **params)
        return passed(G, tid, "G/Φ = %s" % D, t=t, ell=ell, primes=sorted(f), **params)
    return failed(G, tid, "G/Φ matches no template", selection=found[0], **params)


def verify_sigma_equals_m_primitive(G, sigma_result=None):
    tid = 'Rem3.1.5a'
    if structural_predicates(G).is_cyclic:
        return skipped(G, tid, "cyclic")
    sigma_result = sigma_result or sigma(G)
    s, m = sigma_result.value, len(all_subgroups(G).maximal_indices)
    if s != m:
        return skipped(G, tid, "σ != m", m=m, sigma=s)
    Q, _ = frattini_quotient(G)
    if not is_primitive_sigma_sum(Q):
        return failed(G, tid, "G/Φ is not a primitive σ-sum group", m=m, sigma=s)
    return passed(G, tid, "G/Φ is primitive", m=m, sigma=s)


def verify_m_equals_3(G):
    tid = 'Rem3.1.5b'
    if structural_predicates(G).is_cyclic:
        # a cyclic group is not a union of its maximal subgroups
        return skipped(G, tid, "non-cyclic required")
    m = len(all_subgroups(G).maximal_indices)
    if m != 3:
        return skipped(G, tid, "m != 3", m=m)
    Q, _ = frattini_quotient(G)
    if not DescriptorMatcher().matches(Q, ElemAbelian(2, 2)):
        return failed(G, tid, "G/Φ is not Z2 x Z2", m=m)
    if prime_power(G.order) is None or prime_power(G.order)[0] != 2:
        return failed(G, tid, "m = 3 but |G| = %d is not a power of 2" % G.order, m=m)
    return passed(G, tid, "G/Φ = Z2 x Z2", m=m)


def verify_frattini_non_generators(G):
    tid = 'Frattini'
    Phi, NG = frattini(G), non_generators(G)
    if Phi != NG:
        return failed(G, tid, "Φ has order %d, the non-generators %d" % (Phi.size, NG.size))
    return passed(G, tid, "Φ has order %d" % Phi.size, phi_order=Phi.size)
