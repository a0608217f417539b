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
Recipe labels: a small language naming constructed groups.

    recipe  := term (" x " term)*
    term    := "E(" p^k "):C(" m ")" ["~" d] ["@" i]  |  atom  |  "(" recipe ")"
    atom    := ("C" | "E" | "D" | "S" | "A" | "Q") "(" n ")"

C(n) cyclic, E(p^k) elementary abelian, D(n) dihedral of order n,
S(n) symmetric, A(n) alternating, Q(n) dicyclic of order n. E(p^k):C(m)@i
is E(p^k) ⋊ Z_m with Z_m acting faithfully through the i-th conjugacy
class of cyclic subgroups of order m in GL(k, p); @0 is the default.
With ~d, a divisor of m, Z_m acts through the i-th class of order d
instead, with kernel of order m/d.
'''

import re
from collections import namedtuple
from functools import reduce
from math import factorial

import sympy

from .util import ParseError, InputError
from . import constructors, gfp


Recipe = namedtuple('Recipe', ['kind', 'args', 'children'])

ATOMS = 'CEDSAQ'
TOKEN = re.compile(r'\s*(?:(?P<atom>[A-Z])\((?P<n>\d+)\)|(?P<sel>@\d+)|(?P<via>~\d+)'
                   r'|(?P<op> x |:|\(|\)))')


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected text at position %d: %r" % (pos, text[pos:pos + 10]))
        if m.group('atom'):
            if m.group('atom') not in ATOMS:
                raise ParseError("unknown group family %r at position %d" % (m.group('atom'), pos))
            tokens.append(('atom', (m.group('atom'), int(m.group('n'))), pos))
        elif m.group('sel'):
            tokens.append(('sel', int(m.group('sel')[1:]), pos))
        elif m.group('via'):
            tokens.append(('via', int(m.group('via')[1:]), pos))
        else:
            tokens.append(('op', m.group('op').strip() or 'x', pos))
        pos = m.end()
    return tokens


class _Parser(object):

    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return (None, None, len(self.text))

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ParseError("expected %s at position %d" % (value or kind, tok[2]))
        self.i += 1
        return tok

    def recipe(self):
        terms = [self.term()]
        while self.peek()[:2] == ('op', 'x'):
            self.i += 1
            terms.append(self.term())
        if len(terms) == 1:
            return terms[0]
        return Recipe('direct', (), tuple(terms))

    def term(self):
        tok = self.peek()
        if tok[:2] == ('op', '('):
            self.i += 1
            inner = self.recipe()
            self.take('op', ')')
            return inner
        kind, (family, n), pos = self.take('atom')
        node = Recipe(family, (n,), ())
        if self.peek()[:2] != ('op', ':'):
            return node
        self.i += 1
        if family != 'E':
            raise ParseError("only E(p^k) can be the normal part of ':' (position %d)" % pos)
        _, (family2, m), pos2 = self.take('atom')
        if family2 != 'C':
            raise ParseError("only C(m) can act in ':' (position %d)" % pos2)
        via = m
        if self.peek()[0] == 'via':
            via = self.take('via')[1]
        selector = 0
        if self.peek()[0] == 'sel':
            selector = self.take('sel')[1]
        return Recipe('semidirect', (n, m, selector, via), ())


def parse_recipe(text):
    p = _Parser(text)
    node = p.recipe()
    if p.i != len(p.tokens):
        raise ParseError("trailing text at position %d" % p.peek()[2])
    return node


def format_recipe(node):
    if node.kind == 'direct':
        parts = []
        for c in node.children:
            s = format_recipe(c)
            parts.append("(%s)" % s if c.kind == 'direct' else s)
        return " x ".join(parts)
    if node.kind == 'semidirect':
        n, m, selector, via = node.args
        s = "E(%d):C(%d)" % (n, m) + ("~%d" % via if via != m else "")
        return s + ("@%d" % selector if selector else "")
    return "%s(%d)" % (node.kind, node.args[0])


def prime_power(n):
    '''(p, k) with n = p^k, or None'''
    if n < 2:
        return None
    f = sympy.factorint(n)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return p, k


def _require_prime_power(n):
    pk = prime_power(n)
    if pk is None:
        raise InputError("E(%d): %d is not a prime power" % (n, n))
    return pk


def build_recipe(node):
    if node.kind == 'direct':
        G = reduce(constructors.direct_product, [build_recipe(c) for c in node.children])
    elif node.kind == 'semidirect':
        n, m, selector, via = node.args
        p, k = _require_prime_power(n)
        if via < 2 or m % via:
            raise InputError("E(%d):C(%d)~%d: the action order must divide %d and exceed 1"
                             % (n, m, via, m))
        A = gfp.action_matrix(k, p, via, selector)
        G = constructors.semidirect_product(constructors.matrix_action(p, k, A, m))
    else:
        n = node.args[0]
        if node.kind == 'C':
            G = constructors.cyclic(n)
        elif node.kind == 'E':
            G = constructors.elementary_abelian(*_require_prime_power(n))
        elif node.kind == 'D':
            if n < 2 or n % 2:
                raise InputError("D(%d): dihedral orders are even" % n)
            G = constructors.dihedral(n // 2)
        elif node.kind == 'S':
            G = constructors.symmetric(n)
        elif node.kind == 'A':
            G = constructors.alternating(n)
        elif node.kind == 'Q':
            if n < 4 or n % 4:
                raise InputError("Q(%d): dicyclic orders are multiples of 4" % n)
            G = constructors.dicyclic(n // 4)
        else:
            raise ParseError("unknown group family %r" % node.kind)
    G.label = format_recipe(node)
    return G


def construct(text):
    '''Build the group named by a recipe label.'''
    return build_recipe(parse_recipe(text))


def recipe_order(node):
    if node.kind == 'direct':
        result = 1
        for c in node.children:
            result *= recipe_order(c)
        return result
    if node.kind == 'semidirect':
        return node.args[0] * node.args[1]
    n = node.args[0]
    if node.kind == 'S':
        return factorial(n)
    if node.kind == 'A':
        return max(1, factorial(n) // 2)
    return n
