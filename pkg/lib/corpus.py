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
The verification corpus: recipe labels for small groups, deduplicated
up to isomorphism. Groups come out by order, then in generation order;
the first label reaching an isomorphism class names it.
'''

import sympy

from .util import InputError, MAX_ORDER, profiler, print_error
from .recipe import parse_recipe, format_recipe, recipe_order, construct
from .isomorphism import fingerprint, is_isomorphic
from . import gfp


SEMIDIRECT_BASE = 32
SEMIDIRECT_ACTING = 60
SMALL_CYCLIC = 12


def _elementary_orders(limit):
    for p in sympy.primerange(2, limit + 1):
        q, k = p, 1
        while q <= limit:
            yield q, p, k
            q, k = q * p, k + 1


def atom_labels(max_order):
    '''Indecomposable building blocks of order <= max_order'''
    labels = ["C(%d)" % n for n in range(2, max_order + 1)]
    labels += ["E(%d)" % q for q, _, k in _elementary_orders(max_order) if k >= 2]
    labels += ["D(%d)" % (2 * n) for n in range(3, max_order // 2 + 1)]
    labels += ["Q(%d)" % (4 * n) for n in range(2, max_order // 4 + 1)]
    labels += [s for s, n in (("S(3)", 6), ("A(4)", 12), ("S(4)", 24), ("A(5)", 60), ("S(5)", 120))
               if n <= max_order]
    for q, p, k in _elementary_orders(min(SEMIDIRECT_BASE, max_order)):
        counts = {}
        classes = gfp.cyclic_subgroup_classes(k, p, max_order=SEMIDIRECT_ACTING)
        for d, _ in classes:
            if d == 1:
                continue
            i = counts.get(d, 0)
            counts[d] = i + 1
            if q * d <= max_order:
                labels.append("E(%d):C(%d)" % (q, d) + ("@%d" % i if i else ""))
        # Z_m acting through a smaller cyclic quotient
        group_order = gfp.gl_order(k, p)
        for m in range(2, SEMIDIRECT_ACTING + 1):
            if group_order % m or q * m > max_order:
                continue
            for d in sympy.divisors(m)[1:-1]:
                for i in range(counts.get(d, 0)):
                    labels.append("E(%d):C(%d)~%d" % (q, m, d) + ("@%d" % i if i else ""))
    return labels


def _is_cyclic_label(label):
    return label.startswith("C(")


def _cyclic_order(label):
    return int(label[2:-1])


def product_labels(atoms, max_order):
    '''Two-factor direct products worth keeping'''
    orders = {a: recipe_order(parse_recipe(a)) for a in atoms}
    labels = []
    for i, a in enumerate(atoms):
        for b in atoms[i:]:
            if orders[a] * orders[b] > max_order:
                continue
            if _is_cyclic_label(a) and _is_cyclic_label(b):
                x, y = sorted((_cyclic_order(a), _cyclic_order(b)))
                # invariant factor form only
                if y % x:
                    continue
            elif _is_cyclic_label(a) or _is_cyclic_label(b):
                c = a if _is_cyclic_label(a) else b
                if _cyclic_order(c) > SMALL_CYCLIC:
                    continue
            labels.append(format_recipe(parse_recipe("%s x %s" % (a, b))))
    return labels


def corpus_labels(max_order):
    if max_order > MAX_ORDER:
        raise InputError("corpus bound %d above %d" % (max_order, MAX_ORDER))
    atoms = atom_labels(max_order)
    labels = atoms + product_labels(atoms, max_order)
    order_of = {l: recipe_order(parse_recipe(l)) for l in labels}
    ranked = sorted(range(len(labels)), key=lambda i: (order_of[labels[i]], i))
    return [labels[i] for i in ranked]


@profiler
def corpus_generate(max_order):
    '''One group per isomorphism class reached by the corpus labels'''
    kept = []
    buckets = {}
    for label in corpus_labels(max_order):
        G = construct(label)
        fp = fingerprint(G)
        bucket = buckets.setdefault(fp, [])
        if any(is_isomorphic(H, G) for H in bucket):
            continue
        bucket.append(G)
        kept.append(G)
    print_error("[corpus]", len(kept), "groups of order <=", max_order)
    return kept
