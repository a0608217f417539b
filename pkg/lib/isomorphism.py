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
Isomorphism testing.

A cheap invariant fingerprint rules out most pairs. Otherwise a
backtracking search maps a generating set of A into B: each partial
assignment is extended over the subgroup it generates by walking the
Cayley graph, and candidate images of the next generator are taken up
to conjugation by the centralizer of the images already chosen.
'''

from collections import Counter

import numpy as np

from .util import PrintError
from .group import (GroupHomomorphism, center, conjugacy_classes, derived_subgroup,
                    derived_length, quotient)


def element_invariants(G):
    '''Per element: (order, class size, number of square roots)'''
    classes = conjugacy_classes(G)
    class_size = np.empty(G.order, dtype=np.int64)
    for cls in classes:
        class_size[list(cls)] = len(cls)
    rng = np.arange(G.order)
    roots = np.bincount(G.table[rng, rng], minlength=G.order)
    return list(zip(G.element_orders.tolist(), class_size.tolist(), roots.tolist()))


def fingerprint(G):
    '''An isomorphism invariant; equal for isomorphic groups.'''
    inv = element_invariants(G)
    classes = conjugacy_classes(G)
    D = derived_subgroup(G)
    if D.is_trivial():
        ab_orders = G.element_orders
    else:
        Ab, _ = quotient(G, D)
        ab_orders = Ab.element_orders
    return (
        G.order,
        tuple(sorted(Counter(inv).items())),
        tuple(sorted(len(c) for c in classes)),
        center(G).size,
        derived_length(G) or -1,
        G.order // D.size,
        tuple(sorted(Counter(ab_orders.tolist()).items())),
    )


class IsomorphismSearch(PrintError):
    '''Injective homomorphisms A -> B; with equal orders, isomorphisms.'''

    def __init__(self, A, B):
        self.A = A
        self.B = B
        self.gens = list(A.generators)
        if A.order == B.order:
            inv_a = element_invariants(A)
            inv_b = element_invariants(B)
            self.candidates = [np.array([inv_b[y] == inv_a[g] for y in range(B.order)])
                               for g in self.gens]
        else:
            # only the element order survives an embedding
            self.candidates = [B.element_orders == A.element_orders[g] for g in self.gens]
        self.nodes = 0

    def diagnostic_name(self):
        return "iso %s -> %s" % (self.A.label, self.B.label)

    def extend(self, images):
        '''The map on ⟨gens[:len(images)]⟩ determined by images, or None
        when it is not a well defined injective homomorphism.'''
        A, B = self.A, self.B
        gens = self.gens[:len(images)]
        phi = np.full(A.order, -1, dtype=np.int64)
        used = np.zeros(B.order, dtype=bool)
        phi[A.identity] = B.identity
        used[B.identity] = True
        frontier = [A.identity]
        while frontier:
            new = []
            for x in frontier:
                for g, h in zip(gens, images):
                    y = A.table[x, g]
                    z = B.table[phi[x], h]
                    if phi[y] < 0:
                        if used[z]:
                            return None
                        phi[y] = z
                        used[z] = True
                        new.append(y)
                    elif phi[y] != z:
                        return None
            frontier = new
        return phi

    def orbit_representatives(self, mask, fixed):
        '''Elements of mask up to conjugation by C_B(fixed)'''
        B = self.B
        if fixed:
            f = np.asarray(fixed, dtype=np.int64)
            C = np.flatnonzero((B.table[:, f] == B.table[f, :].T).all(axis=1))
        else:
            C = np.arange(B.order)
        seen = np.zeros(B.order, dtype=bool)
        reps = []
        for y in np.flatnonzero(mask):
            if seen[y]:
                continue
            reps.append(int(y))
            seen[B.table[B.table[C, y], B.inverses[C]]] = True
        return reps

    def search(self, images):
        self.nodes += 1
        phi = self.extend(images)
        if phi is None:
            return None
        if len(images) == len(self.gens):
            return phi
        i = len(images)
        for y in self.orbit_representatives(self.candidates[i], images):
            result = self.search(images + [y])
            if result is not None:
                return result
        return None

    def run(self):
        phi = self.search([])
        self.print_error("searched", self.nodes, "nodes")
        if phi is None or (phi < 0).any():
            return None
        return GroupHomomorphism(self.A, self.B, phi, check=True)


def find_isomorphism(A, B):
    '''An isomorphism A -> B, or None'''
    if A.order != B.order:
        return None
    if A.digest == B.digest:
        return GroupHomomorphism(A, B, np.arange(A.order), check=False)
    if fingerprint(A) != fingerprint(B):
        return None
    return IsomorphismSearch(A, B).run()


def is_isomorphic(A, B):
    return find_isomorphism(A, B) is not None


def find_embedding(A, B):
    '''An injective homomorphism A -> B, or None'''
    if B.order % A.order:
        return None
    return IsomorphismSearch(A, B).run()
