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
Exact arithmetic on finite groups given by Cayley tables.

Elements are the integers 0..n-1 and table[a][b] is the index of a·b.
Subgroups are membership vectors over the parent's elements. Every
object here is immutable once built; the cached attributes are pure
functions of the table.
'''

from collections import namedtuple
from functools import cached_property

import numpy as np

from .util import (InputError, LatinSquareError, AssociativityError,
                   PreconditionError, ResourceError, MAX_ORDER,
                   ASSOC_FULL_LIMIT, table_digest, seeded_rng)
from .simple_config import configured


StructuralPredicates = namedtuple('StructuralPredicates',
                                  ['is_abelian', 'is_cyclic', 'is_soluble', 'is_nilpotent'])

ASSOC_SAMPLE_BATCH = 1 << 20


class Group(object):
    '''A finite group on the element indices 0..order-1.'''

    def __init__(self, table, label='G', check=True):
        table = np.array(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InputError("Cayley table must be a non-empty square array")
        n = table.shape[0]
        if n > MAX_ORDER:
            raise ResourceError("group order %d" % n, MAX_ORDER)
        self.order = n
        self.label = label
        _check_latin_square(table)
        table.flags.writeable = False
        self.table = table
        rng = np.arange(n)
        ident = np.flatnonzero((table == rng[None, :]).all(axis=1))
        if len(ident) != 1:
            raise InputError("table has no two-sided identity")
        self.identity = int(ident[0])
        if not (table[:, self.identity] == rng).all():
            raise InputError("table has no two-sided identity")
        inverses = np.argmax(table == self.identity, axis=1).astype(np.int32)
        if not (table[inverses, rng] == self.identity).all():
            raise InputError("left and right inverses differ")
        inverses.flags.writeable = False
        self.inverses = inverses
        if check:
            self.check_associativity()

    def __len__(self):
        return self.order

    def __repr__(self):
        return "<Group %s of order %d>" % (self.label, self.order)

    def mul(self, a, b):
        return int(self.table[a, b])

    def inv(self, a):
        return int(self.inverses[a])

    def power(self, x, k):
        if k < 0:
            x, k = self.inverses[x], -k
        result = self.identity
        while k:
            if k & 1:
                result = self.table[result, x]
            x = self.table[x, x]
            k >>= 1
        return int(result)

    def conjugate(self, g, x):
        '''g·x·g⁻¹'''
        return int(self.table[self.table[g, x], self.inverses[g]])

    def elements(self):
        return range(self.order)

    @cached_property
    def digest(self):
        return table_digest(self.table)

    @cached_property
    def element_orders(self):
        n = self.order
        rng = np.arange(n)
        orders = np.zeros(n, dtype=np.int32)
        cur = rng.copy()
        k = 1
        while True:
            done = (cur == self.identity) & (orders == 0)
            orders[done] = k
            if (orders > 0).all():
                break
            cur = self.table[cur, rng]
            k += 1
        orders.flags.writeable = False
        return orders

    @cached_property
    def generators(self):
        '''A small generating set, greedy over elements of decreasing order.'''
        orders = self.element_orders
        candidates = sorted(range(self.order), key=lambda x: (-orders[x], x))
        gens = []
        members = np.zeros(self.order, dtype=bool)
        members[self.identity] = True
        for x in candidates:
            if members.all():
                break
            if members[x]:
                continue
            gens.append(int(x))
            members = _closure_mask(self, gens)
        return tuple(gens)

    @cached_property
    def is_abelian(self):
        return bool((self.table == self.table.T).all())

    @cached_property
    def predicates(self):
        return _predicates(self)

    def check_associativity(self, full_limit=None):
        n = self.order
        full_limit = configured('assoc_full_limit', full_limit, ASSOC_FULL_LIMIT)
        t = self.table
        if n <= full_limit:
            for a in range(n):
                left = t[t[a]]        # (a·b)·c
                right = t[a][t]       # a·(b·c)
                bad = np.argwhere(left != right)
                if len(bad):
                    b, c = bad[0]
                    raise AssociativityError("not associative at (%d, %d, %d)" % (a, b, c))
            return
        rng = seeded_rng('associativity', self.digest)
        remaining = 10 * n * n
        while remaining > 0:
            k = min(remaining, ASSOC_SAMPLE_BATCH)
            a, b, c = rng.integers(0, n, size=(3, k))
            bad = np.flatnonzero(t[t[a, b], c] != t[a, t[b, c]])
            if len(bad):
                i = bad[0]
                raise AssociativityError("not associative at (%d, %d, %d)" % (a[i], b[i], c[i]))
            remaining -= k

    def as_dict(self):
        return {'kind': 'table', 'order': self.order, 'rows': self.table.tolist()}


def _check_latin_square(table):
    n = table.shape[0]
    rng = np.arange(n)
    if table.min() < 0 or table.max() >= n:
        raise LatinSquareError("table entries must lie in 0..%d" % (n - 1))
    bad = np.flatnonzero((np.sort(table, axis=1) != rng).any(axis=1))
    if len(bad):
        raise LatinSquareError("row %d is not a permutation" % bad[0])
    bad = np.flatnonzero((np.sort(table, axis=0) != rng[:, None]).any(axis=0))
    if len(bad):
        raise LatinSquareError("column %d is not a permutation" % bad[0])


def _closure_mask(G, gens):
    '''Membership vector of the subgroup generated by gens.'''
    members = np.zeros(G.order, dtype=bool)
    members[G.identity] = True
    gens = np.asarray(sorted(set(int(g) for g in gens)), dtype=np.int64)
    if len(gens) == 0:
        return members
    t = G.table
    frontier = np.array([G.identity])
    # finite group: positive words in the generators already give inverses
    while len(frontier):
        new = np.unique(t[frontier[:, None], gens[None, :]])
        new = new[~members[new]]
        members[new] = True
        frontier = new
    return members


class SubgroupSet(object):
    '''A subgroup of parent, stored as a membership vector.'''

    def __init__(self, parent, members, gens=None, check=True):
        members = np.array(members, dtype=bool)
        if members.shape != (parent.order,):
            raise InputError("membership vector has the wrong length")
        members.flags.writeable = False
        self.parent = parent
        self.members = members
        self.size = int(members.sum())
        self.gens = tuple(gens) if gens is not None else None
        if check:
            _check_subgroup(parent, members)
        assert parent.order % self.size == 0, "Lagrange violated"

    def elements(self):
        return np.flatnonzero(self.members)

    @cached_property
    def key(self):
        return np.packbits(self.members).tobytes()

    def index(self):
        return self.parent.order // self.size

    def is_trivial(self):
        return self.size == 1

    def is_whole(self):
        return self.size == self.parent.order

    def __contains__(self, x):
        return bool(self.members[x])

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return (isinstance(other, SubgroupSet) and self.parent is other.parent
                and self.size == other.size and self.key == other.key)

    def __hash__(self):
        return hash(self.key)

    def __le__(self, other):
        return bool(not (self.members & ~other.members).any())

    def __lt__(self, other):
        return self.size < other.size and self <= other

    def __and__(self, other):
        return SubgroupSet(self.parent, self.members & other.members, check=False)

    def sort_key(self):
        return (self.size, self.key)

    def __repr__(self):
        return "<SubgroupSet of order %d in %s>" % (self.size, self.parent.label)

    def as_dict(self):
        return {'order': self.size, 'members': [int(x) for x in self.elements()]}


def _check_subgroup(G, members):
    if not members[G.identity]:
        raise InputError("identity is not a member")
    idx = np.flatnonzero(members)
    if not members[G.inverses[idx]].all():
        raise InputError("members are not closed under inverses")
    if not members[G.table[np.ix_(idx, idx)]].all():
        raise InputError("members are not closed under products")


class GroupHomomorphism(object):

    def __init__(self, source, target, images, check=True):
        images = np.array(images, dtype=np.int32)
        if images.shape != (source.order,):
            raise InputError("image array has the wrong length")
        if images.min() < 0 or images.max() >= target.order:
            raise InputError("image index out of range")
        images.flags.writeable = False
        self.source = source
        self.target = target
        self.images = images
        if check:
            lhs = images[source.table]
            rhs = target.table[images[:, None], images[None, :]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                a, b = bad[0]
                raise InputError("not a homomorphism at (%d, %d)" % (a, b))

    def __call__(self, x):
        return int(self.images[x])

    def kernel(self):
        return SubgroupSet(self.source, self.images == self.target.identity, check=False)

    def image(self, S=None):
        members = np.zeros(self.target.order, dtype=bool)
        if S is None:
            members[self.images] = True
        else:
            members[self.images[S.elements()]] = True
        return SubgroupSet(self.target, members, check=False)

    def preimage(self, S):
        return SubgroupSet(self.source, S.members[self.images], check=False)

    def is_injective(self):
        return len(np.unique(self.images)) == self.source.order

    def is_isomorphism(self):
        return self.is_injective() and self.source.order == self.target.order

    def inverse(self):
        if not self.is_isomorphism():
            raise PreconditionError("only isomorphisms can be inverted")
        inv = np.empty(self.source.order, dtype=np.int32)
        inv[self.images] = np.arange(self.source.order)
        return GroupHomomorphism(self.target, self.source, inv, check=False)

    def compose(self, other):
        '''self ∘ other'''
        return GroupHomomorphism(other.source, self.target, self.images[other.images], check=False)


def _check_index(G, x):
    if not (0 <= int(x) < G.order):
        raise InputError("element index %s out of range for order %d" % (x, G.order))
    return int(x)


def _check_member(G, S):
    if not isinstance(S, SubgroupSet) or S.parent is not G:
        raise InputError("%r is not a subgroup of %r" % (S, G))


def trivial_subgroup(G):
    members = np.zeros(G.order, dtype=bool)
    members[G.identity] = True
    return SubgroupSet(G, members, gens=(), check=False)


def whole_group(G):
    return SubgroupSet(G, np.ones(G.order, dtype=bool), gens=G.generators, check=False)


def generating_set(G):
    return list(G.generators)


def subgroup_closure(G, seed):
    gens = sorted(set(_check_index(G, x) for x in seed))
    return SubgroupSet(G, _closure_mask(G, gens), gens=gens, check=False)


def _gens_of(S):
    return np.asarray(S.gens if S.gens is not None else S.elements(), dtype=np.int64)


def _normalizes(G, A, B):
    '''Whether the generators of A conjugate B into itself'''
    a, b = _gens_of(A), _gens_of(B)
    if not len(a) or not len(b):
        return True
    t = G.table
    return bool(B.members[t[t[a[:, None], b[None, :]], G.inverses[a][:, None]]].all())


def join(G, A, B):
    '''⟨A ∪ B⟩'''
    gens = sorted(set(int(x) for x in _gens_of(A)) | set(int(x) for x in _gens_of(B)))
    if G.is_abelian or _normalizes(G, A, B) or _normalizes(G, B, A):
        # AB is already a subgroup
        members = np.zeros(G.order, dtype=bool)
        members[G.table[A.elements()[:, None], B.elements()[None, :]]] = True
        return SubgroupSet(G, members, gens=gens, check=False)
    return subgroup_closure(G, gens)


def is_subgroup(G, members):
    try:
        _check_subgroup(G, np.asarray(members, dtype=bool))
    except InputError:
        return False
    return True


def subgroup_from_elements(G, elements):
    members = np.zeros(G.order, dtype=bool)
    members[[_check_index(G, x) for x in elements]] = True
    return SubgroupSet(G, members)


def conjugate_members(G, S, g):
    '''Membership vector of g·S·g⁻¹'''
    idx = S.elements()
    members = np.zeros(G.order, dtype=bool)
    members[G.table[G.table[g, idx], G.inverses[g]]] = True
    return members


def conjugate_subgroup(G, S, g):
    return SubgroupSet(G, conjugate_members(G, S, g), check=False)


def is_normal(G, S):
    _check_member(G, S)
    if G.is_abelian:
        return True
    idx = S.elements()
    t = G.table
    for g in G.generators:
        if not S.members[t[t[g, idx], G.inverses[g]]].all():
            return False
    return True


def normalizer(G, S):
    _check_member(G, S)
    gens = _gens_of(S)
    t = G.table
    # g normalizes S iff g s g⁻¹ lies in S for the generators s
    conj = t[t[:, gens], G.inverses[:, None]]
    members = S.members[conj].all(axis=1)
    return SubgroupSet(G, members, check=False)


def centralizer(G, S):
    '''Elements commuting with every element of S'''
    _check_member(G, S)
    gens = S.gens if S.gens is not None else S.elements()
    gens = np.asarray(gens, dtype=np.int64)
    t = G.table
    members = (t[:, gens] == t[gens, :].T).all(axis=1)
    return SubgroupSet(G, members, check=False)


def center(G):
    return centralizer(G, whole_group(G))


def product_order(A, B):
    '''|AB| for subgroups of the same parent'''
    return A.size * B.size // (A & B).size


def product_subgroup(G, A, B):
    '''AB, which must be a subgroup (for instance when A or B is normal)'''
    if product_order(A, B) == G.order:
        return whole_group(G)
    return join(G, A, B)


def subgroup_commutator(G, A, B):
    _check_member(G, A)
    _check_member(G, B)
    a = A.elements()
    b = B.elements()
    t, inv = G.table, G.inverses
    comm = t[t[inv[a][:, None], inv[b][None, :]], t[a[:, None], b[None, :]]]
    return subgroup_closure(G, np.unique(comm))


def derived_subgroup(G):
    W = whole_group(G)
    return subgroup_commutator(G, W, W)


def derived_series(G):
    series = [whole_group(G)]
    while True:
        D = subgroup_commutator(G, series[-1], series[-1])
        if D.size == series[-1].size:
            return series
        series.append(D)


def lower_central_series(G):
    W = whole_group(G)
    series = [W]
    while True:
        D = subgroup_commutator(G, series[-1], W)
        if D.size == series[-1].size:
            return series
        series.append(D)


def derived_length(G):
    '''length of the derived series of a soluble group, None otherwise'''
    series = derived_series(G)
    if series[-1].size != 1:
        return None
    return len(series) - 1


def structural_predicates(G):
    return G.predicates


def _predicates(G):
    cyclic = bool((G.element_orders == G.order).any())
    return StructuralPredicates(
        is_abelian=G.is_abelian,
        is_cyclic=cyclic,
        is_soluble=derived_series(G)[-1].size == 1,
        is_nilpotent=lower_central_series(G)[-1].size == 1)


def conjugacy_classes(G):
    t, inv = G.table, G.inverses
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        cls = np.unique(t[t[:, x], inv])
        seen[cls] = True
        classes.append(tuple(int(c) for c in cls))
    classes.sort(key=lambda c: (len(c), c[0]))
    return classes


def quotient(G, N):
    _check_member(G, N)
    if not is_normal(G, N):
        raise PreconditionError("cannot take a quotient by a non-normal subgroup")
    reps = G.table[:, N.elements()].min(axis=1)
    uniq = np.unique(reps)
    label = np.searchsorted(uniq, reps).astype(np.int32)
    table = label[G.table[np.ix_(uniq, uniq)]]
    Q = Group(table, label="%s/N%d" % (G.label, N.size), check=False)
    return Q, GroupHomomorphism(G, Q, label, check=False)


def subgroup_as_group(G, S, label=None):
    '''S as a standalone group, with the inclusion S -> G'''
    _check_member(G, S)
    idx = S.elements()
    pos = np.full(G.order, -1, dtype=np.int32)
    pos[idx] = np.arange(len(idx))
    table = pos[G.table[np.ix_(idx, idx)]]
    H = Group(table, label=label or "%s<%d>" % (G.label, S.size), check=False)
    return H, GroupHomomorphism(H, G, idx, check=False)


def section(G, A, B, label=None):
    '''The group A/B for subgroups B ⊴ A ≤ G'''
    if not B <= A:
        raise PreconditionError("section A/B needs B inside A")
    H, inc = subgroup_as_group(G, A)
    Q, _ = quotient(H, inc.preimage(B))
    if label:
        Q.label = label
    return Q


def inner_automorphism_group(G):
    Q, _ = quotient(G, center(G))
    Q.label = "Inn(%s)" % G.label
    return Q


def sylow_subgroup(G, p):
    '''The Sylow p-subgroup of a nilpotent group (elements of p-power order)'''
    orders = G.element_orders
    members = np.array([_is_power_of(int(o), p) for o in orders])
    return SubgroupSet(G, members)


def _is_power_of(n, p):
    while n % p == 0:
        n //= p
    return n == 1
