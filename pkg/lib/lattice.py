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
The subgroup lattice of a group, and everything derived from it:
maximal subgroups, m(G), the Frattini subgroup, cores, minimal normal
overgroups and conjugacy classes of subgroups.
'''

import threading
from collections import OrderedDict, namedtuple

import numpy as np
import sympy

from .util import (PrintError, InputError, PreconditionError, ResourceError,
                   MAX_LATTICE, profiler)
from .simple_config import configured
from .group import (SubgroupSet, subgroup_closure, join, trivial_subgroup, whole_group,
                    normalizer, structural_predicates,
                    is_normal, conjugate_subgroup, _check_member)


MinimalNormal = namedtuple('MinimalNormal', ['subgroup', 'unique', 'candidates'])

CACHE_SIZE = 32
_cache = OrderedDict()
_cache_lock = threading.Lock()


class SubgroupLattice(PrintError):
    '''All subgroups of parent, sorted by (size, membership key).'''

    def __init__(self, parent, subgroups, maximal_indices, normal_flags, memo=None):
        self.parent = parent
        self.subgroups = subgroups
        self.maximal_indices = maximal_indices
        self.normal_flags = normal_flags
        self._positions = {S.key: i for i, S in enumerate(subgroups)}
        # results stated in lattice positions, shared by rebound copies
        self.memo = memo if memo is not None else {}

    def diagnostic_name(self):
        return "lattice %s" % self.parent.label

    def __len__(self):
        return len(self.subgroups)

    def position(self, S):
        try:
            return self._positions[S.key]
        except KeyError:
            raise InputError("%r is not in the lattice" % S)

    def maximals(self):
        return [self.subgroups[i] for i in self.maximal_indices]

    def normals(self):
        return [S for S, normal in zip(self.subgroups, self.normal_flags) if normal]

    def rebind(self, G):
        '''The same lattice with G, an equal table, as parent'''
        if G is self.parent:
            return self
        subs = [SubgroupSet(G, S.members, gens=S.gens, check=False) for S in self.subgroups]
        return SubgroupLattice(G, subs, self.maximal_indices, self.normal_flags, self.memo)

    def counts_by_order(self):
        counts = {}
        for S in self.subgroups:
            counts[S.size] = counts.get(S.size, 0) + 1
        return counts

    def as_dict(self):
        return {
            'order': self.parent.order,
            'subgroups': len(self.subgroups),
            'counts_by_order': {str(k): v for k, v in sorted(self.counts_by_order().items())},
            'maximal_indices': sorted(self.parent.order // self.subgroups[i].size
                                      for i in self.maximal_indices),
        }


def subgroup_count_elementary_abelian(r, p):
    '''Number of subgroups of E(p^r), a sum of Gaussian binomials'''
    total = 0
    for k in range(r + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (r - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def estimate_lattice_size(G):
    '''A lower bound on the number of subgroups of an abelian G, from the
    elementary abelian layers of its Sylow subgroups; None otherwise.'''
    if not G.is_abelian:
        return None
    orders = G.element_orders
    estimate = 1
    for p in sympy.primefactors(G.order):
        solutions = int((orders == p).sum()) + 1
        r = 0
        while p ** (r + 1) <= solutions:
            r += 1
        estimate *= subgroup_count_elementary_abelian(r, p)
    return estimate


def _cyclic_extensions(G, H):
    '''Subgroups H⟨x⟩ with x normalizing H and xH of prime order'''
    t = G.table
    h = H.elements()
    N = normalizer(G, H)
    xs = np.flatnonzero(N.members & ~H.members)
    if not len(xs):
        return []
    # one representative per coset xH
    reps = np.unique(t[xs[:, None], h[None, :]].min(axis=1))
    orders = np.zeros(len(reps), dtype=np.int64)
    cur = reps.copy()
    k = 1
    while (orders == 0).any():
        done = H.members[cur] & (orders == 0)
        orders[done] = k
        cur = t[cur, reps]
        k += 1
    out = []
    for x, p in zip(reps, orders):
        if not sympy.isprime(int(p)):
            continue
        pows = [G.identity]
        for _ in range(int(p) - 1):
            pows.append(int(t[pows[-1], x]))
        members = np.zeros(G.order, dtype=bool)
        members[t[h[:, None], np.asarray(pows)[None, :]]] = True
        gens = tuple(H.gens or ()) + (int(x),)
        out.append(SubgroupSet(G, members, gens=gens, check=False))
    return out


def _soluble_subgroups(G, max_lattice):
    # every non-trivial subgroup of a soluble group has a normal subgroup of prime index
    trivial = trivial_subgroup(G)
    seen = {trivial.key: trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for H in frontier:
            for J in _cyclic_extensions(G, H):
                if J.key not in seen:
                    seen[J.key] = J
                    new.append(J)
                    if len(seen) > max_lattice:
                        raise ResourceError("subgroup lattice size", max_lattice)
        frontier = new
    return seen


def _join_subgroups(G, max_lattice):
    cyclics = []
    seen_cyclic = set()
    for x in range(G.order):
        C = subgroup_closure(G, [x])
        if C.size > 1 and C.key not in seen_cyclic:
            seen_cyclic.add(C.key)
            cyclics.append(C)
    trivial = trivial_subgroup(G)
    seen = {trivial.key: trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for H in frontier:
            for C in cyclics:
                if H.members[C.gens[0]]:
                    continue
                J = join(G, H, C)
                if J.key not in seen:
                    seen[J.key] = J
                    new.append(J)
                    if len(seen) > max_lattice:
                        raise ResourceError("subgroup lattice size", max_lattice)
        frontier = new
    return seen


def _maximal_positions(subgroups, n):
    '''A proper subgroup is maximal iff no larger maximal contains it'''
    found = []
    stack = np.zeros((0, n), dtype=bool)
    for i in range(len(subgroups) - 1, -1, -1):
        S = subgroups[i]
        if S.size == n:
            continue
        if stack[:, S.elements()].all(axis=1).any():
            continue
        found.append(i)
        stack = np.vstack([stack, S.members[None, :]])
    return sorted(found)


@profiler
def _build_lattice(G, max_lattice):
    n = G.order
    estimate = estimate_lattice_size(G)
    if estimate is not None and estimate > max_lattice:
        raise ResourceError("estimated subgroup lattice size %d" % estimate, max_lattice)
    if structural_predicates(G).is_soluble:
        seen = _soluble_subgroups(G, max_lattice)
    else:
        seen = _join_subgroups(G, max_lattice)
    if n == 1:
        subgroups = [whole_group(G)]
    else:
        subgroups = sorted(seen.values(), key=SubgroupSet.sort_key)
    maximal_indices = _maximal_positions(subgroups, n)
    normal_flags = [is_normal(G, S) for S in subgroups]
    lattice = SubgroupLattice(G, subgroups, maximal_indices, normal_flags)
    lattice.print_error(len(subgroups), "subgroups,", len(maximal_indices), "maximal")
    return lattice


def all_subgroups(G, max_lattice=None):
    max_lattice = configured('max_lattice', max_lattice, MAX_LATTICE)
    key = G.digest
    with _cache_lock:
        lattice = _cache.get(key)
        if lattice is not None:
            _cache.move_to_end(key)
    if lattice is None:
        lattice = _build_lattice(G, max_lattice)
        with _cache_lock:
            _cache[key] = lattice
            while len(_cache) > CACHE_SIZE:
                _cache.popitem(last=False)
    return lattice.rebind(G)


def clear_cache():
    with _cache_lock:
        _cache.clear()


def maximal_subgroups(G):
    return all_subgroups(G).maximals()


def m_count(G):
    return len(all_subgroups(G).maximal_indices)


def frattini(G):
    members = np.ones(G.order, dtype=bool)
    for M in maximal_subgroups(G):
        members &= M.members
    return SubgroupSet(G, members, check=False)


def normal_subgroups(G):
    return all_subgroups(G).normals()


def conjugates(G, S):
    '''The distinct conjugates of S, sorted'''
    _check_member(G, S)
    orbit = {S.key: S}
    frontier = [S]
    while frontier:
        new = []
        for H in frontier:
            for g in G.generators:
                K = conjugate_subgroup(G, H, g)
                if K.key not in orbit:
                    orbit[K.key] = K
                    new.append(K)
        frontier = new
    return sorted(orbit.values(), key=SubgroupSet.sort_key)


def core(G, M):
    members = np.ones(G.order, dtype=bool)
    for K in conjugates(G, M):
        members &= K.members
    return SubgroupSet(G, members, check=False)


def minimal_normal_over(G, C):
    '''The minimal normal subgroups of G strictly containing C'''
    _check_member(G, C)
    if not is_normal(G, C):
        raise PreconditionError("minimal_normal_over needs a normal subgroup")
    if C.is_whole():
        raise PreconditionError("no normal subgroup lies strictly above G")
    above = [N for N in normal_subgroups(G) if C < N]
    minimal = [N for N in above if not any(K < N for K in above)]
    if len(minimal) == 1:
        return MinimalNormal(minimal[0], True, minimal)
    return MinimalNormal(None, False, minimal)


def subgroup_conjugacy_classes(G, subs):
    '''Partition positions of subs into conjugacy classes.'''
    for S in subs:
        _check_member(G, S)
    classes = []
    assigned = {}
    for i, S in enumerate(subs):
        if S.key in assigned:
            classes[assigned[S.key]].append(i)
            continue
        cls = len(classes)
        classes.append([i])
        for K in conjugates(G, S):
            assigned.setdefault(K.key, cls)
    # by size, then by the sorted member list
    classes.sort(key=lambda c: min((subs[i].size, tuple(subs[i].elements().tolist())) for i in c))
    return classes


def non_generators(G):
    '''Elements x such that ⟨H, x⟩ = G forces H = G, computed over all
    proper subgroups without reference to maximality.'''
    lattice = all_subgroups(G)
    members = np.ones(G.order, dtype=bool)
    cyclic_of = {}
    for x in range(G.order):
        C = subgroup_closure(G, [x])
        cyclic_of.setdefault(C.key, (C, []))[1].append(x)
    for H in lattice.subgroups:
        if H.is_whole():
            continue
        for C, xs in cyclic_of.values():
            if members[xs[0]] and join(G, H, C).is_whole():
                members[xs] = False
    return SubgroupSet(G, members, check=False)
