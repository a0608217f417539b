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
Named groups and products, built as Cayley tables.

Element numbering:
    cyclic(n)               residues 0..n-1
    elementary_abelian      vectors of F_p^k in lexicographic order
    dihedral(n)             r^i s^j  ->  i + n*j
    dicyclic(n)             a^i x^j  ->  i + 2n*j
    symmetric(n)            permutations in lexicographic order
    direct_product(A, B)    (a, b)   ->  a*|B| + b
    semidirect_product      (v, k)   ->  k*|N| + v
'''

import itertools
from functools import lru_cache

import numpy as np
import sympy

from .util import InputError, ResourceError, MAX_ORDER, print_error
from .group import Group, subgroup_as_group, SubgroupSet
from . import gfp


def _check_order(n, what):
    if n < 1:
        raise InputError("%s must have positive order" % what)
    if n > MAX_ORDER:
        raise InputError("%s has order %d above the bound %d" % (what, n, MAX_ORDER))


class ActionSpec(object):
    '''K acting on N: action[k] is the permutation of N's elements
    induced by k.'''

    def __init__(self, normal_part, acting_part, action, check=True):
        action = np.array(action, dtype=np.int32)
        N, K = normal_part, acting_part
        if action.shape != (K.order, N.order):
            raise InputError("action must have one permutation of %d points per acting element"
                             % N.order)
        action.flags.writeable = False
        self.normal_part = N
        self.acting_part = K
        self.action = action
        if check:
            self.check()

    def check(self):
        N, K, action = self.normal_part, self.acting_part, self.action
        rng = np.arange(N.order)
        for k in range(K.order):
            phi = action[k]
            if not (np.sort(phi) == rng).all():
                raise InputError("action entry %d is not a permutation" % k)
            if not (phi[N.table] == N.table[phi[:, None], phi[None, :]]).all():
                raise InputError("action entry %d is not an automorphism" % k)
        if not (action[K.identity] == rng).all():
            raise InputError("the identity of the acting group must act trivially")
        for k1 in range(K.order):
            # φ_{k1·k2} = φ_{k1} ∘ φ_{k2}
            bad = np.flatnonzero((action[K.table[k1]] != action[k1][action]).any(axis=1))
            if len(bad):
                raise InputError("action is not a homomorphism at (%d, %d)" % (k1, bad[0]))

    def kernel(self):
        rng = np.arange(self.normal_part.order)
        return np.flatnonzero((self.action == rng).all(axis=1))

    def is_faithful(self):
        return len(self.kernel()) == 1

    def as_dict(self):
        return {'normal_part': self.normal_part.label, 'acting_part': self.acting_part.label,
                'faithful': self.is_faithful()}


class PermutationGenSet(object):

    def __init__(self, degree, generators):
        if degree < 1:
            raise InputError("degree must be positive")
        gens = []
        for i, g in enumerate(generators):
            g = tuple(int(x) for x in g)
            if sorted(g) != list(range(degree)):
                raise InputError("generator %d is not a permutation of %d points" % (i, degree))
            gens.append(g)
        self.degree = degree
        self.generators = gens

    def as_dict(self):
        return {'degree': self.degree, 'generators': [list(g) for g in self.generators]}


def cyclic(n):
    _check_order(n, "cyclic group")
    r = np.arange(n)
    return Group((r[:, None] + r[None, :]) % n, label="C(%d)" % n)


def elementary_abelian(p, k):
    if not sympy.isprime(p):
        raise InputError("%d is not a prime" % p)
    if k < 1:
        raise InputError("rank must be positive")
    n = p ** k
    _check_order(n, "elementary abelian group")
    V = gfp.vectors(k, p)
    table = np.zeros((n, n), dtype=np.int64)
    for d in range(k):
        col = V[:, d]
        table += ((col[:, None] + col[None, :]) % p) * p ** (k - 1 - d)
    return Group(table, label="E(%d)" % n)


def dihedral(n):
    '''The dihedral group of order 2n'''
    _check_order(2 * n, "dihedral group")
    idx = np.arange(2 * n)
    i, j = idx % n, idx // n
    sign = np.where(j == 1, -1, 1)
    rot = (i[:, None] + sign[:, None] * i[None, :]) % n
    ref = (j[:, None] + j[None, :]) % 2
    return Group(rot + n * ref, label="D(%d)" % (2 * n))


def dicyclic(n):
    '''The dicyclic group of order 4n: a^{2n} = 1, x² = a^n, x a x⁻¹ = a⁻¹'''
    _check_order(4 * n, "dicyclic group")
    m = 2 * n
    idx = np.arange(2 * m)
    i, j = idx % m, idx // m
    sign = np.where(j == 1, -1, 1)
    rot = (i[:, None] + sign[:, None] * i[None, :] + n * (j[:, None] * j[None, :])) % m
    ref = (j[:, None] + j[None, :]) % 2
    return Group(rot + m * ref, label="Q(%d)" % (4 * n))


def quaternion():
    return dicyclic(2)


def _permutation_table(perms):
    '''Cayley table of a closed list of permutations, (a·b)[i] = b[a[i]].'''
    P = np.asarray(perms, dtype=np.int64)
    index = {row.tobytes(): i for i, row in enumerate(P)}
    n = len(P)
    table = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        comp = P[:, P[a]]       # row b holds a·b
        try:
            table[a] = [index[row.tobytes()] for row in comp]
        except KeyError:
            raise InputError("permutation list is not closed under composition")
    return table


def symmetric(n):
    if not (1 <= n <= 5):
        raise InputError("symmetric groups are supported for 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    return Group(_permutation_table(perms), label="S(%d)" % n)


def _parity(perm):
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
               if perm[i] > perm[j]) % 2


def alternating(n):
    if not (1 <= n <= 5):
        raise InputError("alternating groups are supported for 1 <= n <= 5")
    S = symmetric(n)
    perms = list(itertools.permutations(range(n)))
    even = SubgroupSet(S, [_parity(p) == 0 for p in perms])
    A, _ = subgroup_as_group(S, even, label="A(%d)" % n)
    return A


def direct_product(A, B, label=None):
    nA, nB = A.order, B.order
    if nA * nB > MAX_ORDER:
        raise ResourceError("direct product order %d" % (nA * nB), MAX_ORDER)
    At = A.table.astype(np.int64)[:, None, :, None]
    Bt = B.table.astype(np.int64)[None, :, None, :]
    table = (At * nB + Bt).reshape(nA * nB, nA * nB)
    return Group(table, label=label or "%s x %s" % (A.label, B.label))


def semidirect_product(spec, label=None):
    N, K, action = spec.normal_part, spec.acting_part, spec.action
    nN, nK = N.order, K.order
    if nN * nK > MAX_ORDER:
        raise ResourceError("semidirect product order %d" % (nN * nK), MAX_ORDER)
    idx = np.arange(nN * nK)
    v, k = idx % nN, idx // nN
    twisted = action[k[:, None], v[None, :]]
    table = K.table[k[:, None], k[None, :]].astype(np.int64) * nN + N.table[v[:, None], twisted]
    return Group(table, label=label or "%s:%s" % (N.label, K.label))


def matrix_action(p, k, A, m):
    '''Z_m acting on E(p^k) through the matrix A, which must satisfy A^m = 1.'''
    A = np.asarray(A, dtype=np.int64) % p
    if A.shape != (k, k):
        raise InputError("action matrix must be %d x %d" % (k, k))
    if not gfp.is_invertible(A, p):
        raise InputError("action matrix is singular over F_%d" % p)
    if not (gfp.mat_power(A, m, p) == gfp.mat_identity(k)).all():
        raise InputError("action matrix does not satisfy A^%d = 1" % m)
    action = [gfp.matrix_permutation(gfp.mat_power(A, j, p), p) for j in range(m)]
    return ActionSpec(elementary_abelian(p, k), cyclic(m), action)


def from_permutations(gens):
    '''Breadth-first closure; the element index is the discovery order.'''
    identity = tuple(range(gens.degree))
    generators = sorted(set(gens.generators))
    elements = [identity]
    seen = {identity: 0}
    i = 0
    while i < len(elements):
        a = elements[i]
        for g in generators:
            ag = tuple(g[x] for x in a)
            if ag not in seen:
                if len(elements) >= MAX_ORDER:
                    raise ResourceError("permutation group order", MAX_ORDER)
                seen[ag] = len(elements)
                elements.append(ag)
        i += 1
    print_error("[constructors] closure of", len(generators), "generators has order", len(elements))
    return Group(_permutation_table(elements), label="Perm(%d)" % gens.degree)


def mersenne_semidirect(n, A=None):
    '''E(2^n) ⋊ Z_q with q = 2^n − 1 prime, acting through A, by default
    the lexicographically least matrix of order q.'''
    q = 2 ** n - 1
    if n < 2 or not sympy.isprime(q):
        raise InputError("2^%d - 1 = %d is not a prime" % (n, q))
    if 2 ** n * q > MAX_ORDER:
        raise ResourceError("order of E(%d):C(%d)" % (2 ** n, q), MAX_ORDER)
    if A is None:
        A = gfp.matrices_of_order(n, 2, q, cap=1)[0]
    spec = matrix_action(2, n, A, q)
    return semidirect_product(spec, label="E(%d):C(%d)" % (2 ** n, q))


def general_linear_group(k, p):
    '''GL(k, p) as a table group, with its matrices in element order'''
    order = gfp.gl_order(k, p)
    if order > MAX_ORDER:
        raise ResourceError("order of GL(%d,%d)" % (k, p), MAX_ORDER)
    return _general_linear_group(k, p)


@lru_cache(maxsize=None)
def _general_linear_group(k, p):
    matrices = list(gfp.iter_gl_matrices(k, p))
    index = {A.tobytes(): i for i, A in enumerate(matrices)}
    n = len(matrices)
    table = np.empty((n, n), dtype=np.int32)
    for a, A in enumerate(matrices):
        for b, B in enumerate(matrices):
            table[a, b] = index[gfp.mat_mul(A, B, p).tobytes()]
    for A in matrices:
        A.flags.writeable = False
    return Group(table, label="GL(%d,%d)" % (k, p)), tuple(matrices)
