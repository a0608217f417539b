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
The covering number σ(G): the least number of proper subgroups whose
union is G.

Covers are searched over maximal subgroups. Elements are first grouped
by the set of maximal subgroups containing them; only inclusion-minimal
membership patterns have to be covered, which turns the problem into
a small exact set cover. The solver runs in two phases: branch and
bound for the optimum, then enumeration of every cover of that size.
'''

import itertools
from collections import namedtuple

import numpy as np

from .util import (PrintError, InputError, PreconditionError, INFINITE, WITNESS_CAP,
                   profiler, print_error)
from .simple_config import configured
from .group import structural_predicates, quotient
from .lattice import all_subgroups, subgroup_conjugacy_classes, normal_subgroups
from .records import passed, failed, skipped
from .recipe import prime_power


CONJUGATE = 'CONJUGATE'
NORMAL = 'NORMAL'
OTHER = 'OTHER'

CoverKind = namedtuple('CoverKind', ['kind', 'indices'])


class SigmaResult(object):

    def __init__(self, value, witnesses, exhaustive_flag):
        self.value = value
        self.witnesses = witnesses
        self.exhaustive_flag = exhaustive_flag

    def is_infinite(self):
        return self.value is INFINITE

    def __repr__(self):
        return "<SigmaResult %s, %d witnesses%s>" % (
            "inf" if self.is_infinite() else self.value, len(self.witnesses),
            "" if self.exhaustive_flag else " (truncated)")

    def as_dict(self):
        return {'sigma': self.value, 'witnesses': self.witnesses,
                'exhaustive': self.exhaustive_flag}


def _popcount(x):
    return bin(x).count("1")


class CoverSolver(PrintError):
    '''Exact minimum set cover of G by its maximal subgroups.

    Subgroups are numbered 0..m-1 in branching order (index ascending,
    then lattice position); rows are the inclusion-minimal membership
    patterns. Both are bitmasks held in Python ints.'''

    def __init__(self, G, lattice, witness_cap):
        self.G = G
        self.witness_cap = witness_cap
        order = sorted(lattice.maximal_indices,
                       key=lambda i: (G.order // lattice.subgroups[i].size, i))
        self.positions = order
        M = np.array([lattice.subgroups[i].members for i in order])     # m × n
        patterns = np.unique(np.packbits(M.T, axis=1), axis=0)
        row_sets = []
        for packed in patterns:
            bits = np.unpackbits(packed)[:len(order)]
            row_sets.append(sum(1 << int(j) for j in np.flatnonzero(bits)))
        row_sets = sorted(set(row_sets), key=lambda s: (_popcount(s), s))
        minimal = []
        for s in row_sets:
            if not any((t & s) == t for t in minimal):
                minimal.append(s)
        self.rows = minimal            # row r -> bitmask of subgroups
        self.cover_masks = []          # subgroup j -> bitmask of rows
        for j in range(len(order)):
            mask = 0
            for r, s in enumerate(self.rows):
                if s >> j & 1:
                    mask |= 1 << r
            self.cover_masks.append(mask)
        self.all_rows = (1 << len(self.rows)) - 1
        self.print_error(len(order), "maximal subgroups,", len(self.rows), "minimal patterns")

    def diagnostic_name(self):
        return "sigma %s" % self.G.label

    def _candidates(self, r, excluded=0):
        s = self.rows[r] & ~excluded
        j = 0
        while s:
            if s & 1:
                yield j
            s >>= 1
            j += 1

    def _pick_row(self, uncovered, excluded=0):
        '''The uncovered row with fewest remaining candidates'''
        best, best_count = None, None
        u = uncovered
        r = 0
        while u:
            if u & 1:
                c = _popcount(self.rows[r] & ~excluded)
                if best is None or c < best_count:
                    best, best_count = r, c
                    if c <= 1:
                        break
            u >>= 1
            r += 1
        return best, best_count

    def lower_bound(self, uncovered, excluded=0):
        if not uncovered:
            return 0
        best_cover = max(_popcount(mask & uncovered) for j, mask in enumerate(self.cover_masks)
                         if not excluded >> j & 1)
        if best_cover == 0:
            return len(self.rows) + 1
        bound = -(-_popcount(uncovered) // best_cover)
        # rows with pairwise disjoint candidate sets need distinct subgroups
        rows = [r for r in range(len(self.rows)) if uncovered >> r & 1]
        rows.sort(key=lambda r: (_popcount(self.rows[r] & ~excluded), r))
        used = 0
        independent = 0
        for r in rows:
            s = self.rows[r] & ~excluded
            if not s & used:
                used |= s
                independent += 1
        return max(bound, independent)

    def greedy(self):
        uncovered = self.all_rows
        chosen = []
        while uncovered:
            j = max(range(len(self.cover_masks)),
                    key=lambda j: (_popcount(self.cover_masks[j] & uncovered), -j))
            chosen.append(j)
            uncovered &= ~self.cover_masks[j]
        return chosen

    def minimum(self):
        self.best = self.greedy()
        self._branch(self.all_rows, [])
        return len(self.best)

    def _branch(self, uncovered, chosen):
        if not uncovered:
            if len(chosen) < len(self.best):
                self.best = list(chosen)
            return
        if len(chosen) + self.lower_bound(uncovered) >= len(self.best):
            return
        r, _ = self._pick_row(uncovered)
        for j in self._candidates(r):
            chosen.append(j)
            self._branch(uncovered & ~self.cover_masks[j], chosen)
            chosen.pop()

    def enumerate(self, size):
        '''All covers of exactly size subgroups, each found once: at every
        node the branch taking candidate c excludes the earlier ones.'''
        self.found = []
        self.truncated = False
        self._enumerate(self.all_rows, [], 0, size)
        return self.found, not self.truncated

    def _enumerate(self, uncovered, chosen, excluded, size):
        if self.truncated:
            return
        if not uncovered:
            if len(self.found) >= self.witness_cap:
                self.truncated = True
                return
            self.found.append(list(chosen))
            return
        if len(chosen) + self.lower_bound(uncovered, excluded) > size:
            return
        r, count = self._pick_row(uncovered, excluded)
        if count == 0:
            return
        for j in self._candidates(r, excluded):
            chosen.append(j)
            self._enumerate(uncovered & ~self.cover_masks[j], chosen, excluded, size)
            chosen.pop()
            excluded |= 1 << j

    def to_positions(self, cover):
        return sorted(self.positions[j] for j in cover)


@profiler
def sigma(G, witness_cap=None, max_lattice=None):
    witness_cap = configured('witness_cap', witness_cap, WITNESS_CAP)
    if G.order == 1 or structural_predicates(G).is_cyclic:
        return SigmaResult(INFINITE, [], True)
    lattice = all_subgroups(G, max_lattice=max_lattice)
    solver = CoverSolver(G, lattice, witness_cap)
    value = solver.minimum()
    covers, exhaustive = solver.enumerate(value)
    witnesses = sorted(solver.to_positions(c) for c in covers)
    assert witnesses, "the optimum cover must be enumerated"
    return SigmaResult(value, witnesses, exhaustive)


def sigma_value(G, witness_cap=None, max_lattice=None):
    '''σ(G) alone, without enumerating the optimal covers'''
    witness_cap = configured('witness_cap', witness_cap, WITNESS_CAP)
    if G.order == 1 or structural_predicates(G).is_cyclic:
        return INFINITE
    lattice = all_subgroups(G, max_lattice=max_lattice)
    return CoverSolver(G, lattice, witness_cap).minimum()


def cover_subgroups(G, witness):
    lattice = all_subgroups(G)
    return [lattice.subgroups[i] for i in witness]


def is_cover(G, subs):
    members = np.zeros(G.order, dtype=bool)
    for S in subs:
        members |= S.members
    return bool(members.all())


def maximal_class_ids(G):
    '''lattice position -> conjugacy class number, for the maximal subgroups'''
    lattice = all_subgroups(G)
    class_of = lattice.memo.get('maximal_class_ids')
    if class_of is None:
        classes = subgroup_conjugacy_classes(G, lattice.maximals())
        class_of = {}
        for c, members in enumerate(classes):
            for k in members:
                class_of[lattice.maximal_indices[k]] = c
        lattice.memo['maximal_class_ids'] = class_of
    return dict(class_of)


def classify_sigma_cover(G, cover, sigma_result=None, class_of=None):
    '''CONJUGATE, NORMAL or OTHER for a σ-cover given as maximal subgroups.'''
    lattice = all_subgroups(G)
    maximal = set(lattice.maximal_indices)
    for S in cover:
        if lattice.position(S) not in maximal:
            raise InputError("%r is not a maximal subgroup" % S)
    if not is_cover(G, cover):
        raise InputError("the subgroups do not cover %s" % G.label)
    if sigma_result is None:
        sigma_result = sigma(G)
    n = len(cover)
    if sigma_result.is_infinite() or n != sigma_result.value:
        raise InputError("a σ-cover of %s has %s members, not %d" % (G.label, sigma_result.value, n))
    ordered = sorted(cover, key=lambda S: (S.index(), lattice.position(S)))
    indices = tuple(S.index() for S in ordered)
    i1 = indices[0]
    if i1 < n - 1:
        if class_of is None:
            class_of = maximal_class_ids(G)
        for k, first in enumerate(ordered):
            if first.index() != i1:
                break
            rest = ordered[:k] + ordered[k + 1:]
            if len(set(class_of[lattice.position(S)] for S in rest)) == 1:
                return CoverKind(CONJUGATE, indices)
    elif i1 == n - 1 and all(lattice.normal_flags[lattice.position(S)] for S in ordered):
        return CoverKind(NORMAL, indices)
    return CoverKind(OTHER, indices)


def is_primitive_sigma_sum(G, sigma_result=None):
    if sigma_result is None:
        sigma_result = sigma(G)
    if sigma_result.is_infinite():
        raise PreconditionError("%s is cyclic, σ is infinite" % G.label)
    for N in normal_subgroups(G):
        if N.is_trivial() or N.is_whole():
            continue
        Q, _ = quotient(G, N)
        if sigma_value(Q) == sigma_result.value:
            print_error("[cover]", G.label, "has a σ-preserving quotient by a normal subgroup of order", N.size)
            return False
    return True


def brute_force_sigma(G, max_size=6):
    '''Smallest number of maximal subgroups covering G by plain subset
    search, or INFINITE when no cover of at most max_size exists.'''
    return _subset_search(G, all_subgroups(G).maximals(), max_size)


def brute_force_sigma_proper(G, max_size=6):
    '''Like brute_force_sigma, over all proper subgroups.'''
    subs = [S for S in all_subgroups(G).subgroups if not S.is_whole()]
    return _subset_search(G, subs, max_size)


def _subset_search(G, subs, max_size):
    masks = [int.from_bytes(np.packbits(S.members).tobytes(), 'big') for S in subs]
    full = int.from_bytes(np.packbits(np.ones(G.order, dtype=bool)).tobytes(), 'big')
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(masks, k):
            u = 0
            for x in combo:
                u |= x
            if u == full:
                return k
    return INFINITE


def _cover_hypotheses(G, theorem_id):
    preds = structural_predicates(G)
    if preds.is_cyclic:
        return skipped(G, theorem_id, "cyclic")
    if not preds.is_soluble:
        return skipped(G, theorem_id, "insoluble")
    return None


def verify_cover_theorems(G, sigma_result=None):
    '''One record each for the σ-cover dichotomy, the prime power index
    bound, the small index uniqueness and the conjugate cover criterion.'''
    ids = ['Thm1.1', 'Lemma1.2', 'Cor1.3', 'Prop1.4']
    skip = _cover_hypotheses(G, ids[0])
    if skip is not None:
        return [skipped(G, tid, skip.reason) for tid in ids]
    if sigma_result is None:
        sigma_result = sigma(G)
    lattice = all_subgroups(G)
    s = sigma_result.value
    params = {'m': len(lattice.maximal_indices), 'sigma': s,
              'exhaustive': sigma_result.exhaustive_flag}
    records = []

    class_of = maximal_class_ids(G)
    kinds = [classify_sigma_cover(G, cover_subgroups(G, w), sigma_result, class_of).kind
             for w in sigma_result.witnesses]
    good = [k for k in kinds if k in (CONJUGATE, NORMAL)]
    if good:
        records.append(passed(G, 'Thm1.1', "%d of %d σ-covers are conjugate or normal"
                              % (len(good), len(kinds)),
                              kinds=sorted(set(good)), **params))
    elif not sigma_result.exhaustive_flag:
        records.append(skipped(G, 'Thm1.1', "no conjugate or normal σ-cover among %d of the"
                               " σ-covers, enumeration truncated" % len(kinds), **params))
    else:
        records.append(failed(G, 'Thm1.1', "no conjugate or normal σ-cover among %d witnesses"
                              % len(kinds), selection=sigma_result.witnesses[0], **params))

    maximals = lattice.maximals()
    by_index = {}
    for pos, M in zip(lattice.maximal_indices, maximals):
        by_index.setdefault(M.index(), []).append(pos)

    shared = sorted(i for i, ps in by_index.items() if len(ps) >= 2 and prime_power(i))
    if not shared:
        records.append(skipped(G, 'Lemma1.2', "no prime power index shared by two maximals", **params))
    else:
        bad = [i for i in shared if s > 1 + i]
        if bad:
            records.append(failed(G, 'Lemma1.2', "σ = %d exceeds 1 + %d" % (s, bad[0]),
                                  selection=by_index[bad[0]], **params))
        else:
            records.append(passed(G, 'Lemma1.2', "σ <= 1 + %d" % shared[0],
                                  indices=shared, **params))

    small = sorted(i for i in by_index if i < s - 1)
    if not small:
        records.append(skipped(G, 'Cor1.3', "no maximal of index below σ-1", **params))
    else:
        bad = [i for i in small if len(by_index[i]) > 1]
        if bad:
            records.append(failed(G, 'Cor1.3', "%d maximals of index %d < σ-1"
                                  % (len(by_index[bad[0]]), bad[0]),
                                  selection=by_index[bad[0]], **params))
        else:
            records.append(passed(G, 'Cor1.3', "unique maximal of each index below σ-1",
                                  indices=small, **params))

    trigger = [pos for pos in by_index.get(s - 1, []) if not lattice.normal_flags[pos]]
    if not trigger:
        records.append(skipped(G, 'Prop1.4', "no non-normal maximal of index σ-1", **params))
    elif CONJUGATE in kinds:
        records.append(passed(G, 'Prop1.4', "conjugate σ-cover found", **params))
    elif not sigma_result.exhaustive_flag:
        records.append(skipped(G, 'Prop1.4', "no conjugate σ-cover among %d of the σ-covers,"
                               " enumeration truncated" % len(kinds), **params))
    else:
        records.append(failed(G, 'Prop1.4', "non-normal maximal of index σ-1 but no conjugate σ-cover",
                              selection=trigger, **params))
    return records


def verify_sigma_oracle(G, max_size=6):
    '''Branch and bound against plain subset search.'''
    preds = structural_predicates(G)
    if preds.is_cyclic:
        return skipped(G, 'SigmaOracle', "cyclic")
    value = sigma_value(G)
    brute = brute_force_sigma(G, max_size)
    params = {'sigma': value, 'brute_force': brute, 'max_size': max_size}
    if brute is INFINITE:
        if value > max_size:
            return passed(G, 'SigmaOracle', "no cover of size <= %d, σ = %d" % (max_size, value), **params)
        return failed(G, 'SigmaOracle', "subset search found no cover of size %d" % value, **params)
    if brute != value:
        return failed(G, 'SigmaOracle', "branch and bound %d, subset search %d" % (value, brute), **params)
    return passed(G, 'SigmaOracle', "σ = %d" % value, **params)
