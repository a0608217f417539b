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
Classification of G/Φ(G) for soluble non-nilpotent G with m(G) <= 2σ(G).

The pair (m, σ) selects a regime; each regime lists templates whose
numeric parameters are determined by |G/Φ(G)|, m and σ. Every parameter
choice satisfying the stated constraints is tried against G/Φ(G) by
structural matching, in the listed case order.
'''

from math import gcd

import sympy

from .util import PrintError, PreconditionError, print_error
from .group import structural_predicates, quotient
from .lattice import frattini, m_count
from .cover import sigma
from .recipe import prime_power
from .descriptor import (DescriptorMatcher, Cyclic, Direct, Semidirect, Named, ElemAbelian,
                         elementary)
from .records import passed, failed, skipped
from . import gfp


M_EQ_3 = 'M_EQ_3'
M_EQ_SIGMA = 'M_EQ_SIGMA'
M_LT_2SIGMA_MINUS_1 = 'M_LT_2SIGMA_MINUS_1'
M_EQ_2SIGMA_MINUS_1 = 'M_EQ_2SIGMA_MINUS_1'
M_EQ_2SIGMA = 'M_EQ_2SIGMA'

REGIME_THEOREM = {
    M_EQ_3: 'Rem3.1.5b',
    M_EQ_SIGMA: 'Lemma3.2',
    M_LT_2SIGMA_MINUS_1: 'Cor3.4',
    M_EQ_2SIGMA_MINUS_1: 'Thm3.6',
    M_EQ_2SIGMA: 'Thm3.10',
}


class TemplateMatch(object):

    def __init__(self, regime, case_id, parameters, matched, descriptor=None,
                 diagnostics=None, violations=None):
        self.regime = regime
        self.case_id = case_id
        self.parameters = parameters
        self.matched = matched
        self.descriptor = descriptor
        self.diagnostics = diagnostics or []
        self.violations = violations or []

    def __repr__(self):
        return "<TemplateMatch %s %s %s>" % (self.regime, self.case_id,
                                            "matched" if self.matched else "unmatched")

    def as_dict(self):
        return {
            'regime': self.regime,
            'case_id': self.case_id,
            'parameters': self.parameters,
            'matched': self.matched,
            'descriptor': str(self.descriptor) if self.descriptor is not None else None,
            'diagnostics': self.diagnostics,
            'violations': self.violations,
        }


def m_cyclic(t):
    '''m(Z_t): the number of distinct primes dividing t'''
    return len(sympy.primefactors(t))


def aut_order(q):
    '''|Aut(E_q)| = |GL(k, p)| for q = p^k'''
    p, k = prime_power(q)
    return gfp.gl_order(k, p)


def is_squarefree(n):
    return all(e == 1 for e in sympy.factorint(n).values())


def is_power_of_two(n):
    return n >= 1 and n & (n - 1) == 0


def is_mersenne_prime(q):
    return sympy.isprime(q) and is_power_of_two(q + 1)


def is_fermat_prime(p):
    return sympy.isprime(p) and is_power_of_two(p - 1)


def regime_of(m, s):
    if m == 3:
        return M_EQ_3
    if m == s:
        return M_EQ_SIGMA
    if m < 2 * s - 1:
        return M_LT_2SIGMA_MINUS_1
    if m == 2 * s - 1:
        return M_EQ_2SIGMA_MINUS_1
    if m == 2 * s:
        return M_EQ_2SIGMA
    return None


def frattini_quotient(G):
    Q, proj = quotient(G, frattini(G))
    Q.label = "%s/Phi" % G.label
    return Q, proj


def _divides(a, b):
    return b % a == 0


def _lemma_3_2(n, m, s):
    E = s - 1
    if not prime_power(E) or not _divides(E, n):
        return
    r = n // E
    if prime_power(r):
        yield '3.2', {'p_alpha': r}, Semidirect(elementary(E), Cyclic(r), faithful=True)


def _split_with_cyclic(n, s, ell_of, case_id, aut_bound=True, sigma_not_3=False):
    '''(E_{σ-1} ⋊ Z_t) × Z_{p_1...p_ℓ} with distinct primes coprime to t'''
    E = s - 1
    if not prime_power(E) or not _divides(E, n) or (sigma_not_3 and s == 3):
        return
    for t in sympy.divisors(n // E):
        if aut_bound and not _divides(t, aut_order(E)):
            continue
        P = n // (E * t)
        if gcd(P, t) != 1 or not is_squarefree(P):
            continue
        ell = ell_of(t)
        if ell < 0 or m_cyclic(P) != ell:
            continue
        params = {'t': t, 'ell': ell, 'primes': sympy.primefactors(P)}
        yield case_id, params, Direct(Semidirect(elementary(E), Cyclic(t)), Cyclic(P))


def _cor_3_4(n, m, s):
    return _split_with_cyclic(n, s, lambda t: m - m_cyclic(t) - s + 1, '3.4')


def _thm_3_6(n, m, s):
    yield from _split_with_cyclic(n, s, lambda t: s - m_cyclic(t), '3.6(i)')
    E = s - 1
    if prime_power(E) and _divides(E * E, n):
        r = n // (E * E)
        if prime_power(r) and _divides(r, aut_order(E)):
            yield '3.6(ii)', {'p_alpha': r}, Semidirect(Direct(elementary(E), elementary(E)), Cyclic(r))


def _thm_3_10(n, m, s):
    E = s - 1
    q = E
    if s == 3 and n == 12:
        yield '3.10(i)', {}, Direct(Cyclic(2), Named('S3'))
    if is_mersenne_prime(q) and n == s * q * q:
        yield '3.10(ii)', {'q': q}, Direct(Semidirect(elementary(s), Cyclic(q)), Cyclic(q))
    yield from _split_with_cyclic(n, s, lambda t: s - m_cyclic(t) + 1, '3.10(iii)',
                                  aut_bound=False, sigma_not_3=True)
    if sympy.isprime(q) and q % 2 and _divides(q ** 3, n):
        t = n // q ** 3
        if m_cyclic(t) == 1:
            yield '3.10(iv)', {'t': t}, Direct(Semidirect(Cyclic(q), Cyclic(t)), Cyclic(q), Cyclic(q))
    if prime_power(E) and _divides(E * E, n):
        rest = n // (E * E)
        EE = Direct(elementary(E), elementary(E))
        if not is_fermat_prime(E):
            for t1 in sympy.divisors(rest):
                t2 = rest // t1
                if t1 < t2 and gcd(t1, t2) == 1 and m_cyclic(t1) == 1 and m_cyclic(t2) == 1:
                    yield '3.10(v)', {'t1': t1, 't2': t2}, Direct(
                        Semidirect(elementary(E), Cyclic(t1)), Semidirect(elementary(E), Cyclic(t2)))
        if s != 3 and m_cyclic(rest) == 2:
            yield '3.10(vi)', {'t': rest}, Semidirect(EE, Cyclic(rest))
        if s != 3:
            for t in sympy.divisors(rest):
                p = rest // t
                if m_cyclic(t) == 1 and t > 2 and sympy.isprime(p) and gcd(p, t) == 1:
                    yield '3.10(vii)', {'t': t, 'p': p}, Direct(Semidirect(EE, Cyclic(t)), Cyclic(p))
    if is_mersenne_prime(q) and _divides(s * q, n):
        t = n // (s * q)
        if m_cyclic(t) == 1 and _divides(t, s - 2):
            yield '3.10(viii)', {'q': q, 't': t}, Semidirect(elementary(s), Semidirect(Cyclic(q), Cyclic(t)))


def _remark_m_eq_3(n, m, s):
    if n == 4:
        yield 'Rem3.1.5b', {}, ElemAbelian(2, 2)


TEMPLATES = {
    M_EQ_3: _remark_m_eq_3,
    M_EQ_SIGMA: _lemma_3_2,
    M_LT_2SIGMA_MINUS_1: _cor_3_4,
    M_EQ_2SIGMA_MINUS_1: _thm_3_6,
    M_EQ_2SIGMA: _thm_3_10,
}


def classification_hypotheses(G):
    '''None when G qualifies, else the name of the failed predicate'''
    preds = structural_predicates(G)
    if preds.is_cyclic:
        return "cyclic"
    if not preds.is_soluble:
        return "insoluble"
    if preds.is_nilpotent:
        return "nilpotent"
    return None


class FrattiniClassifier(PrintError):

    def __init__(self, G, sigma_result=None):
        self.G = G
        self.sigma_result = sigma_result

    def diagnostic_name(self):
        return "classify %s" % self.G.label

    def run(self):
        G = self.G
        reason = classification_hypotheses(G)
        if reason:
            raise PreconditionError(reason)
        s = (self.sigma_result or sigma(G)).value
        m = m_count(G)
        regime = regime_of(m, s)
        if regime is None:
            raise PreconditionError("m = %d exceeds 2σ = %d" % (m, 2 * s))
        Q, _ = frattini_quotient(G)
        base = {'m': m, 'sigma': s, 'phi_order': G.order // Q.order}
        matcher = DescriptorMatcher()
        diagnostics = []
        first = None
        for case_id, params, D in TEMPLATES[regime](Q.order, m, s):
            ok = matcher.matches(Q, D)
            diagnostics.append({'case_id': case_id, 'template': str(D), 'parameters': params,
                                'matched': ok})
            if ok and first is None:
                first = (case_id, params, D)
        if regime == M_EQ_2SIGMA and Q.order == s * (s - 1) ** 2 and is_mersenne_prime(s - 1):
            # the other reading of E_σ ⋊ Z_q × Z_q
            q = s - 1
            D = Semidirect(elementary(s), Direct(Cyclic(q), Cyclic(q)))
            diagnostics.append({'case_id': '3.10(ii) alternative', 'template': str(D),
                                'parameters': {'q': q}, 'matched': matcher.matches(Q, D)})
        violations = []
        if regime in (M_EQ_SIGMA, M_LT_2SIGMA_MINUS_1, M_EQ_2SIGMA_MINUS_1) and s == 3:
            violations.append("σ = 3 for a non-nilpotent soluble group")
        if first is None:
            self.print_error("no template matches; regime", regime, "m", m, "σ", s)
            return TemplateMatch(regime, None, base, False, None, diagnostics, violations)
        case_id, params, D = first
        params = dict(base, **params)
        self.print_error("matched", case_id, D)
        return TemplateMatch(regime, case_id, params, True, D, diagnostics, violations)


def classify_frattini_quotient(G, sigma_result=None):
    return FrattiniClassifier(G, sigma_result).run()


def verify_classification(G, sigma_result=None):
    '''Record form of classify_frattini_quotient, under the theorem id of
    the regime selected by (m, σ).'''
    try:
        match = classify_frattini_quotient(G, sigma_result)
    except PreconditionError as e:
        return skipped(G, 'Classify', str(e))
    theorem_id = REGIME_THEOREM[match.regime]
    params = dict(match.parameters, case_id=match.case_id, regime=match.regime,
                  template=str(match.descriptor) if match.descriptor else None)
    if match.violations:
        return failed(G, theorem_id, "; ".join(match.violations), **params)
    if not match.matched:
        return failed(G, theorem_id, "G/Phi matches no template of the regime",
                      diagnostics=match.diagnostics, **params)
    return passed(G, theorem_id, "G/Phi = %s" % match.descriptor, **params)
