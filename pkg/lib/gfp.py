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
Matrices over F_p and the general linear group GL(k, p).

Vectors of F_p^k are numbered in lexicographic order, most significant
coordinate first, which is the element numbering of elementary_abelian.
Matrices act on column vectors.
'''

import itertools
from functools import lru_cache
from math import gcd, prod

import numpy as np
import sympy

from .util import InputError, print_error


def check_prime(p):
    if not sympy.isprime(p):
        raise InputError("%d is not a prime" % p)


def gl_order(k, p):
    '''|GL(k, p)| = ∏ (p^k − p^i), exact'''
    return prod(p ** k - p ** i for i in range(k))


def mat_identity(k):
    return np.eye(k, dtype=np.int64)


def mat_mul(A, B, p):
    return (A @ B) % p


def mat_power(A, e, p):
    result = mat_identity(A.shape[0])
    while e:
        if e & 1:
            result = mat_mul(result, A, p)
        A = mat_mul(A, A, p)
        e >>= 1
    return result


def row_reduce(A, p):
    '''Row echelon form of A over F_p'''
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    i = 0
    for j in range(n):
        if i == m:
            break
        nz = np.flatnonzero(A[i:, j])
        if len(nz) == 0:
            continue
        i1 = i + nz[0]
        if i1 != i:
            A[[i, i1]] = A[[i1, i]]
        A[i] = (A[i] * pow(int(A[i, j]), -1, p)) % p
        below = A[i + 1:, j].copy()
        A[i + 1:] = (A[i + 1:] - below[:, None] * A[i]) % p
        i += 1
    return A


def mat_rank(A, p):
    if A.size == 0:
        return 0
    return int((row_reduce(A, p) != 0).any(axis=1).sum())


def is_invertible(A, p):
    return mat_rank(A, p) == A.shape[0]


def mat_order(A, p):
    k = A.shape[0]
    if not is_invertible(A, p):
        raise InputError("matrix is singular over F_%d" % p)
    I = mat_identity(k)
    B = A % p
    n = 1
    while not (B == I).all():
        B = mat_mul(B, A, p)
        n += 1
    return n


def vectors(k, p):
    '''All of F_p^k as rows, in element-index order'''
    return np.array(list(itertools.product(range(p), repeat=k)), dtype=np.int64).reshape(-1, k)


def vector_indices(V, p):
    k = V.shape[1]
    weights = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return V @ weights


def matrix_permutation(A, p):
    '''The permutation of vector indices induced by x -> A x'''
    V = vectors(A.shape[0], p)
    return vector_indices((V @ A.T) % p, p).astype(np.int32)


def iter_gl_matrices(k, p):
    '''Invertible k×k matrices over F_p in lexicographic order (row by row).'''
    check_prime(p)
    rows = [np.array(r, dtype=np.int64) for r in itertools.product(range(p), repeat=k)]

    def extend(chosen):
        if len(chosen) == k:
            yield np.array(chosen, dtype=np.int64)
            return
        for r in rows:
            if mat_rank(np.array(chosen + [r]), p) == len(chosen) + 1:
                yield from extend(chosen + [r])

    yield from extend([])


def matrices_of_order(k, p, q, cap=None):
    '''Invertible matrices of multiplicative order exactly q, lexicographic.'''
    found = []
    for A in iter_gl_matrices(k, p):
        if mat_is_of_order(A, p, q):
            found.append(A)
            if cap is not None and len(found) >= cap:
                break
    return found


def mat_is_of_order(A, p, q):
    I = mat_identity(A.shape[0])
    if not (mat_power(A, q, p) == I).all():
        return False
    return all(not (mat_power(A, q // r, p) == I).all() for r in sympy.primefactors(q))


# polynomials are coefficient tuples, constant term first

def poly_mul(f, g, p):
    return tuple(int(c) for c in np.convolve(f, g) % p)


def poly_power(f, e, p):
    result = (1,)
    for _ in range(e):
        result = poly_mul(result, f, p)
    return result


@lru_cache(maxsize=None)
def irreducible_polynomials(d, p):
    '''Monic irreducible polynomials of degree d over F_p other than x'''
    x = sympy.Symbol('x')
    result = []
    for lower in itertools.product(range(p), repeat=d):
        if lower[0] == 0:
            continue
        f = tuple(lower) + (1,)
        if d == 1 or sympy.Poly(list(reversed(f)), x, modulus=p).is_irreducible:
            result.append(f)
    return tuple(result)


def companion(f, p):
    '''Companion matrix of the monic polynomial f'''
    d = len(f) - 1
    C = np.zeros((d, d), dtype=np.int64)
    C[1:, :-1] = np.eye(d - 1, dtype=np.int64)
    C[:, -1] = [(-c) % p for c in f[:-1]]
    return C


def poly_eval(f, A, p):
    result = np.zeros_like(A)
    power = mat_identity(A.shape[0])
    for c in f:
        result = (result + c * power) % p
        power = mat_mul(power, A, p)
    return result


def block_diagonal(blocks):
    k = sum(b.shape[0] for b in blocks)
    M = np.zeros((k, k), dtype=np.int64)
    i = 0
    for b in blocks:
        d = b.shape[0]
        M[i:i + d, i:i + d] = b
        i += d
    return M


def elementary_divisor_types(k, p):
    '''All multisets of (f, e) with Σ deg(f)·e = k, f irreducible, f ≠ x.
    Each multiset is one conjugacy class of GL(k, p).'''
    atoms = []
    for d in range(1, k + 1):
        for f in irreducible_polynomials(d, p):
            for e in range(1, k // d + 1):
                atoms.append((f, e))

    def choose(start, remaining):
        if remaining == 0:
            yield ()
            return
        for i in range(start, len(atoms)):
            f, e = atoms[i]
            size = (len(f) - 1) * e
            if size <= remaining:
                for rest in choose(i, remaining - size):
                    yield ((f, e),) + rest

    return list(choose(0, k))


def class_representative(divisors, p):
    return block_diagonal([companion(poly_power(f, e, p), p) for f, e in divisors])


def similarity_key(A, p):
    '''Ranks of f(A)^i; two matrices are conjugate in GL(k, p) iff keys agree.'''
    k = A.shape[0]
    key = []
    for d in range(1, k + 1):
        for f in irreducible_polynomials(d, p):
            B = poly_eval(f, A, p)
            P = B
            for _ in range(k // d):
                key.append(mat_rank(P, p))
                P = mat_mul(P, B, p)
    return tuple(key)


@lru_cache(maxsize=None)
def _cyclic_subgroup_classes(k, p):
    classes = []
    seen = set()
    for divisors in elementary_divisor_types(k, p):
        A = class_representative(divisors, p)
        n = mat_order(A, p)
        key = min(similarity_key(mat_power(A, j, p), p)
                  for j in range(1, n + 1) if gcd(j, n) == 1)
        if key in seen:
            continue
        seen.add(key)
        A.flags.writeable = False
        classes.append((n, A))
    classes.sort(key=lambda c: c[0])
    print_error("[gfp] GL(%d,%d):" % (k, p), len(classes), "classes of cyclic subgroups")
    return tuple(classes)


def cyclic_subgroup_classes(k, p, max_order=None):
    '''One generator per conjugacy class of cyclic subgroups of GL(k, p),
    as (order, matrix) pairs sorted by order, stable within an order.'''
    check_prime(p)
    return [(n, A) for n, A in _cyclic_subgroup_classes(k, p)
            if max_order is None or n <= max_order]


def action_matrix(k, p, m, selector=0):
    '''The generator of the selector-th class of cyclic subgroups of order m'''
    candidates = [A for n, A in cyclic_subgroup_classes(k, p) if n == m]
    if not candidates:
        raise InputError("GL(%d,%d) has no element of order %d" % (k, p, m))
    if not (0 <= selector < len(candidates)):
        raise InputError("GL(%d,%d) has %d classes of cyclic subgroups of order %d, no class %d"
                         % (k, p, len(candidates), m, selector))
    return candidates[selector]
