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
Structure descriptors: abstract templates such as (E_4 ⋊ Z_3) × Z_5.

A descriptor is matched structurally inside a concrete group: a
semidirect template looks for a normal subgroup and a complement of the
right shapes, a direct template for an internal direct decomposition.
instantiate() builds one explicit group for a descriptor.
'''

from functools import reduce
from math import gcd, prod

import numpy as np
import sympy

from .util import InputError, PrintError, MAX_ORDER
from .group import structural_predicates, subgroup_as_group, centralizer
from .lattice import all_subgroups, normal_subgroups
from .isomorphism import find_embedding
from . import constructors, gfp


CYCLIC = 'CYCLIC'
ELEM_ABELIAN = 'ELEM_ABELIAN'
DIRECT = 'DIRECT'
SEMIDIRECT = 'SEMIDIRECT'
NAMED = 'NAMED'

NAMED_ORDERS = {'S3': 6}


class StructureDescriptor(object):

    def __init__(self, kind, params=(), parts=(), faithful=False):
        self.kind = kind
        self.params = tuple(params)
        self.parts = tuple(parts)
        self.faithful = faithful

    def order(self):
        if self.kind == CYCLIC:
            return self.params[0]
        if self.kind == ELEM_ABELIAN:
            p, k = self.params
            return p ** k
        if self.kind == NAMED:
            return NAMED_ORDERS[self.params[0]]
        return prod(d.order() for d in self.parts)

    def __str__(self):
        if self.kind == CYCLIC:
            return "Z_%d" % self.params[0]
        if self.kind == ELEM_ABELIAN:
            return "E_%d" % self.order()
        if self.kind == NAMED:
            return self.params[0]
        sep = " x " if self.kind == DIRECT else " : "
        inner = sep.join(str(d) if d.kind in (CYCLIC, ELEM_ABELIAN, NAMED) else "(%s)" % d
                         for d in self.parts)
        return inner

    __repr__ = __str__

    def __eq__(self, other):
        return (isinstance(other, StructureDescriptor) and self.kind == other.kind
                and self.params == other.params and self.parts == other.parts
                and self.faithful == other.faithful)

    def __hash__(self):
        return hash((self.kind, self.params, self.parts, self.faithful))

    def as_dict(self):
        d = {'kind': self.kind, 'text': str(self)}
        if self.params:
            d['params'] = list(self.params)
        if self.parts:
            d['parts'] = [p.as_dict() for p in self.parts]
        if self.kind == SEMIDIRECT:
            d['faithful'] = self.faithful
        return d


def Cyclic(n):
    if n < 1:
        raise InputError("Z_%d is not a group" % n)
    return StructureDescriptor(CYCLIC, (n,))


def ElemAbelian(p, k):
    if not sympy.isprime(p):
        raise InputError("E_%d^%d: %d is not a prime" % (p, k, p))
    return StructureDescriptor(ELEM_ABELIAN, (p, k))


def Direct(*parts):
    parts = [d for d in parts if d.order() > 1] or list(parts[:1])
    if len(parts) == 1:
        return parts[0]
    return StructureDescriptor(DIRECT, parts=parts)


def Semidirect(normal, complement, faithful=False):
    return StructureDescriptor(SEMIDIRECT, parts=(normal, complement), faithful=faithful)


def Named(name):
    if name not in NAMED_ORDERS:
        raise InputError("unknown named group %r" % name)
    return StructureDescriptor(NAMED, (name,))


def elementary(q):
    '''E_q for a prime power q'''
    f = sympy.factorint(q)
    if len(f) != 1:
        raise InputError("%d is not a prime power" % q)
    (p, k), = f.items()
    return ElemAbelian(p, k)


class DescriptorMatcher(PrintError):

    def __init__(self):
        self.memo = {}

    def matches(self, G, D):
        key = (G.digest, D)
        if key not in self.memo:
            self.memo[key] = self._matches(G, D)
        return self.memo[key]

    def _matches(self, G, D):
        if G.order != D.order():
            return False
        if D.kind == CYCLIC:
            return structural_predicates(G).is_cyclic
        if D.kind == ELEM_ABELIAN:
            p = D.params[0]
            return G.is_abelian and bool((G.element_orders[np.arange(G.order) != G.identity] == p).all())
        if D.kind == NAMED:
            # the non-abelian group of order 6
            return not G.is_abelian
        if D.kind == DIRECT:
            return self._matches_direct(G, list(D.parts))
        return self._matches_semidirect(G, D)

    def _part(self, G, S, D):
        H, _ = subgroup_as_group(G, S)
        return self.matches(H, D)

    def _matches_direct(self, G, parts):
        if len(parts) == 1:
            return self.matches(G, parts[0])
        first = parts[0]
        rest = Direct(*parts[1:])
        normals = normal_subgroups(G)
        for N in normals:
            if N.size != first.order():
                continue
            for K in normals:
                if K.size != rest.order() or not (N & K).is_trivial():
                    continue
                if self._part(G, N, first) and self._part(G, K, rest):
                    return True
        return False

    def _matches_semidirect(self, G, D):
        normal, complement = D.parts
        lattice = all_subgroups(G)
        complements = [K for K in lattice.subgroups if K.size == complement.order()]
        for N in lattice.normals():
            if N.size != normal.order() or not self._part(G, N, normal):
                continue
            C = centralizer(G, N) if D.faithful else None
            for K in complements:
                if not (N & K).is_trivial():
                    continue
                if C is not None and not (K & C).is_trivial():
                    continue
                if self._part(G, K, complement):
                    return True
        return False


def matches_descriptor(G, D, matcher=None):
    if G.order != D.order():
        raise InputError("%s has order %d, the template %s has order %d"
                         % (G.label, G.order, D, D.order()))
    return (matcher or DescriptorMatcher()).matches(G, D)


def _largest_realizable(t, orders):
    '''Largest divisor of t among orders'''
    return max(d for d in sympy.divisors(t) if d in orders)


def _cyclic_action_matrix(k, p, t, faithful):
    orders = {n for n, _ in gfp.cyclic_subgroup_classes(k, p)}
    d = _largest_realizable(t, orders)
    if faithful and d != t:
        raise InputError("GL(%d,%d) has no element of order %d" % (k, p, t))
    return gfp.action_matrix(k, p, d, 0)


def _elementary_blocks(D):
    '''(p, k, copies) when D is E_{p^k} or a direct power of it'''
    if D.kind == ELEM_ABELIAN:
        return D.params + (1,)
    if D.kind == CYCLIC and sympy.isprime(D.params[0]):
        return (D.params[0], 1, 1)
    if D.kind == DIRECT:
        blocks = [_elementary_blocks(d) for d in D.parts]
        if None not in blocks and len(set(b[:2] for b in blocks)) == 1:
            return blocks[0][:2] + (sum(b[2] for b in blocks),)
    return None


def _instantiate_semidirect(D):
    normal, complement = D.parts
    N = instantiate(normal)
    K = instantiate(complement)
    blocks = _elementary_blocks(normal)
    if blocks is not None:
        p, k, copies = blocks
        if complement.kind == CYCLIC:
            t = complement.params[0]
            A = _cyclic_action_matrix(k, p, t, D.faithful)
            mats = [gfp.mat_power(A, j, p) for j in range(t)]
        else:
            GL, matrices = constructors.general_linear_group(k, p)
            emb = find_embedding(K, GL)
            if emb is None:
                if D.faithful:
                    raise InputError("%s does not embed in GL(%d,%d)" % (complement, k, p))
                mats = [gfp.mat_identity(k)] * K.order
            else:
                mats = [matrices[emb(x)] for x in range(K.order)]
        mats = [gfp.block_diagonal([A] * copies) for A in mats]
        action = [gfp.matrix_permutation(A, p) for A in mats]
        spec = constructors.ActionSpec(N, K, action)
        return constructors.semidirect_product(spec)
    if normal.kind == CYCLIC and complement.kind == CYCLIC:
        n, t = normal.params[0], complement.params[0]
        units = [u for u in range(1, n) if gcd(u, n) == 1] or [0]
        order_of = {u: sympy.n_order(u, n) if n > 1 else 1 for u in units}
        d = _largest_realizable(t, set(order_of.values()))
        if D.faithful and d != t:
            raise InputError("Aut(Z_%d) has no element of order %d" % (n, t))
        u = min(v for v in units if order_of[v] == d)
        x = np.arange(n)
        action = [(pow(u, j, n) * x) % n for j in range(t)]
        spec = constructors.ActionSpec(N, K, action)
        return constructors.semidirect_product(spec)
    raise InputError("no instantiation for %s" % D)


def instantiate(D):
    '''One explicit group with the shape D; actions are the first ones
    found, so non-faithful templates are not unique up to isomorphism.'''
    if D.order() > MAX_ORDER:
        raise InputError("%s has order %d above the bound" % (D, D.order()))
    if D.kind == CYCLIC:
        G = constructors.cyclic(D.params[0])
    elif D.kind == ELEM_ABELIAN:
        G = constructors.elementary_abelian(*D.params)
    elif D.kind == NAMED:
        G = constructors.symmetric(3)
    elif D.kind == DIRECT:
        G = reduce(constructors.direct_product, [instantiate(d) for d in D.parts])
    else:
        G = _instantiate_semidirect(D)
    G.label = str(D)
    return G
