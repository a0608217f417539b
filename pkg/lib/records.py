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

import io
import csv

from .util import json_encode, InputError
from .version import FORMAT_VERSION


PASS = 'PASS'
FAIL = 'FAIL'
SKIP = 'SKIP'
OUTCOMES = (PASS, FAIL, SKIP)

CSV_COLUMNS = ['group_label', 'order', 'm', 'sigma', 'theorem_id', 'outcome', 'case_id', 'reason']


def group_payload(G):
    '''Enough to rebuild G: its recipe when the label is one, else the table'''
    from .recipe import parse_recipe
    from .util import ParseError
    try:
        parse_recipe(G.label)
        return {'kind': 'recipe', 'label': G.label}
    except ParseError:
        return G.as_dict()


class VerificationRecord(object):

    def __init__(self, group_label, theorem_id, outcome, reason='', parameters=None,
                 counterexample=None, order=None):
        if outcome not in OUTCOMES:
            raise InputError("unknown outcome %r" % outcome)
        self.group_label = group_label
        self.theorem_id = theorem_id
        self.outcome = outcome
        self.reason = reason
        self.parameters = dict(parameters or {})
        self.counterexample = counterexample
        self.order = order

    def __repr__(self):
        return "<%s %s %s: %s>" % (self.theorem_id, self.group_label, self.outcome, self.reason)

    def as_dict(self):
        return {
            'group_label': self.group_label,
            'order': self.order,
            'theorem_id': self.theorem_id,
            'outcome': self.outcome,
            'reason': self.reason,
            'parameters': self.parameters,
            'counterexample': self.counterexample,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d['group_label'], d['theorem_id'], d['outcome'], d.get('reason', ''),
                   d.get('parameters'), d.get('counterexample'), d.get('order'))


def make_record(G, theorem_id, outcome, reason='', selection=None, **parameters):
    '''A record for G; FAIL records get a replayable counterexample.'''
    counterexample = None
    if outcome == FAIL:
        counterexample = {
            'version': FORMAT_VERSION,
            'theorem_id': theorem_id,
            'group': group_payload(G),
            'selection': list(selection) if selection is not None else None,
            'reason': reason,
        }
    return VerificationRecord(G.label, theorem_id, outcome, reason, parameters,
                              counterexample, G.order)


def passed(G, theorem_id, reason='', **parameters):
    return make_record(G, theorem_id, PASS, reason, **parameters)


def failed(G, theorem_id, reason, selection=None, **parameters):
    return make_record(G, theorem_id, FAIL, reason, selection=selection, **parameters)


def skipped(G, theorem_id, reason, **parameters):
    return make_record(G, theorem_id, SKIP, reason, **parameters)


def summarize(records):
    '''{theorem_id: {PASS: n, FAIL: n, SKIP: n}}'''
    summary = {}
    for r in records:
        counts = summary.setdefault(r.theorem_id, {o: 0 for o in OUTCOMES})
        counts[r.outcome] += 1
    return summary


def emit_report(records, format='json'):
    if format == 'json':
        doc = {
            'version': FORMAT_VERSION,
            'records': [r.as_dict() for r in records],
            'summary': summarize(records),
        }
        return (json_encode(doc) + "\n").encode('utf8')
    if format == 'csv':
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for r in records:
            p = r.parameters
            writer.writerow([r.group_label, r.order, p.get('m', ''), p.get('sigma', ''),
                             r.theorem_id, r.outcome, p.get('case_id', ''), r.reason])
        return out.getvalue().encode('utf8')
    raise InputError("unknown report format %r" % format)


def load_report(data):
    import json
    doc = json.loads(data)
    if doc.get('version') != FORMAT_VERSION:
        raise InputError("unsupported report version %r" % doc.get('version'))
    return [VerificationRecord.from_dict(d) for d in doc['records']]
