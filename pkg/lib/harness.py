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
Corpus-wide verification. Each corpus group is checked independently,
possibly in worker processes; records come back in corpus order so a
report does not depend on the number of jobs.
'''

from concurrent.futures import ProcessPoolExecutor

from .util import InputError, ParseError, ResourceError, MAX_ORDER, profiler, print_error, set_verbosity
from . import util
from .simple_config import SimpleConfig, get_config
from .group import structural_predicates
from .lattice import all_subgroups, clear_cache
from .cover import sigma, verify_cover_theorems, verify_sigma_oracle
from .classify import verify_classification
from .corpus import corpus_generate
from .recipe import construct, prime_power
from .records import VerificationRecord, SKIP, FAIL
from .storage import GroupStorage, group_from_payload
from . import theorems


ORACLE_ORDER = 120
FRATTINI_ORDER = 60

COVER_IDS = ('Thm1.1', 'Lemma1.2', 'Cor1.3', 'Prop1.4')
CLASSIFY_IDS = ('Lemma3.2', 'Cor3.4', 'Thm3.6', 'Thm3.10', 'Classify')
THEOREM_IDS = COVER_IDS + CLASSIFY_IDS + (
    'SigmaOracle', 'Frattini', 'Prop3.1', 'Cor3.1.5', 'Lemma3.3', 'Rem3.1.5a', 'Rem3.1.5b',
    'Thm3.4p', 'Thm3.5', 'Prop3.8', 'Lemma3.7', 'Lemma3.9')


def _wanted(theorem, *ids):
    return theorem is None or theorem in ids


def _pairwise(G, tid, items, check):
    '''Records of check over items, or a single SKIP when none applies'''
    records = [check(*item) for item in items]
    kept = [r for r in records if r.outcome != SKIP]
    if kept:
        return kept
    reason = records[0].reason if records else "no candidate subgroups"
    return [VerificationRecord(G.label, tid, SKIP, reason, order=G.order)]


def group_records(G, theorem=None):
    '''Every applicable check of G, in a fixed order'''
    records = []
    preds = structural_predicates(G)
    sigma_result = None if preds.is_cyclic else sigma(G)
    if _wanted(theorem, 'SigmaOracle') and G.order <= ORACLE_ORDER:
        records.append(verify_sigma_oracle(G))
    if _wanted(theorem, 'Frattini') and G.order <= FRATTINI_ORDER:
        records.append(theorems.verify_frattini_non_generators(G))
    if _wanted(theorem, *COVER_IDS):
        records += verify_cover_theorems(G, sigma_result)
    if _wanted(theorem, *CLASSIFY_IDS):
        records.append(verify_classification(G, sigma_result))
    if _wanted(theorem, 'Prop3.1'):
        records.append(theorems.verify_prop_3_1(G, sigma_result))
    if _wanted(theorem, 'Cor3.1.5'):
        records.append(theorems.verify_cor_3_1_5(G, sigma_result))
    if _wanted(theorem, 'Lemma3.3'):
        records.append(theorems.verify_lemma_3_3(G, sigma_result))
    if _wanted(theorem, 'Rem3.1.5a'):
        records.append(theorems.verify_sigma_equals_m_primitive(G, sigma_result))
    if _wanted(theorem, 'Rem3.1.5b'):
        records.append(theorems.verify_m_equals_3(G))
    if preds.is_soluble and not preds.is_nilpotent:
        if _wanted(theorem, 'Thm3.4p'):
            records += _pairwise(G, 'Thm3.4p', [(G, s) for s in theorems.thm_3_4p_selections(G)],
                                 theorems.verify_thm_3_4p)
        if _wanted(theorem, 'Thm3.5'):
            records += _pairwise(G, 'Thm3.5', [(G,) + p for p in theorems.thm_3_5_pairs(G)],
                                 theorems.verify_thm_3_5)
        if _wanted(theorem, 'Prop3.8'):
            records += _pairwise(G, 'Prop3.8', [(G,) + p for p in theorems.prop_3_8_pairs(G)],
                                 theorems.verify_prop_3_8)
    if theorem is not None:
        records = [r for r in records if r.theorem_id == theorem]
    return records


def verify_label(label, theorem=None):
    '''Worker entry point: checks for one recipe label'''
    try:
        G = construct(label)
        return group_records(G, theorem)
    except ResourceError as e:
        print_error("[harness]", label, "aborted:", e)
        return [VerificationRecord(label, theorem or 'Resource', SKIP, str(e))]
    finally:
        # lattices are not shared between corpus groups
        clear_cache()


def global_records(max_order, theorem=None):
    '''Checks that are not tied to one corpus group'''
    records = []
    if _wanted(theorem, 'Lemma3.7'):
        for n in (2, 3, 5):
            if 2 ** n * (2 ** n - 1) <= max_order:
                records.append(theorems.verify_lemma_3_7(n))
    if _wanted(theorem, 'Lemma3.9'):
        records.append(theorems.verify_lemma_3_9())
    return records


def _init_worker(options, verbose):
    set_verbosity(verbose)
    SimpleConfig(options, read_system_config_function=lambda: {},
                 read_user_config_function=lambda path: {},
                 read_user_dir_function=lambda: None)


@profiler
def run_corpus_verification(max_order, theorem=None, jobs=None):
    if max_order > MAX_ORDER:
        raise InputError("max order %d above %d" % (max_order, MAX_ORDER))
    if theorem is not None and theorem not in THEOREM_IDS:
        raise InputError("unknown theorem id %r" % theorem)
    config = get_config()
    if jobs is None:
        jobs = config.jobs() if config else 1
    labels = [G.label for G in corpus_generate(max_order)]
    print_error("[harness]", len(labels), "groups,", jobs, "jobs")
    if jobs > 1 and len(labels) > 1:
        options = {'max_lattice': config.max_lattice(), 'witness_cap': config.witness_cap()} \
            if config else {}
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                 initargs=(options, util.is_verbose)) as pool:
            # largest orders first, then restore corpus order
            backwards = labels[::-1]
            per_group = list(pool.map(verify_label, backwards, [theorem] * len(labels)))[::-1]
    else:
        per_group = [verify_label(label, theorem) for label in labels]
    records = [r for rs in per_group for r in rs]
    if labels:
        records += global_records(max_order, theorem)
    return records


def _lattice_selection(G, positions):
    subs = all_subgroups(G).subgroups
    try:
        return [subs[i] for i in positions]
    except (IndexError, TypeError):
        raise ParseError("selection %r does not index the subgroup lattice" % (positions,))


def replay_payload(payload):
    '''Re-run the check a counterexample payload came from'''
    tid = payload.get('theorem_id')
    if tid == 'Lemma3.9':
        p_max, exp_max = payload['bounds']
        return [theorems.verify_lemma_3_9(p_max, exp_max)]
    if 'group' not in payload:
        raise ParseError("counterexample: missing field 'group'")
    G = group_from_payload(payload['group'], where='counterexample group')
    selection = payload.get('selection') or []
    if tid in COVER_IDS:
        return [r for r in verify_cover_theorems(G) if r.theorem_id == tid]
    if tid == 'SigmaOracle':
        return [verify_sigma_oracle(G)]
    if tid in CLASSIFY_IDS:
        return [verify_classification(G)]
    simple = {
        'Prop3.1': theorems.verify_prop_3_1,
        'Cor3.1.5': theorems.verify_cor_3_1_5,
        'Lemma3.3': theorems.verify_lemma_3_3,
        'Rem3.1.5a': theorems.verify_sigma_equals_m_primitive,
        'Rem3.1.5b': theorems.verify_m_equals_3,
        'Frattini': theorems.verify_frattini_non_generators,
    }
    if tid in simple:
        return [simple[tid](G)]
    if tid == 'Thm3.4p':
        return [theorems.verify_thm_3_4p(G, _lattice_selection(G, selection))]
    if tid in ('Thm3.5', 'Prop3.8'):
        subs = _lattice_selection(G, selection)
        if len(subs) != 2:
            raise ParseError("counterexample: %s needs a selection of two subgroups" % tid)
        check = theorems.verify_thm_3_5 if tid == 'Thm3.5' else theorems.verify_prop_3_8
        return [check(G, *subs)]
    if tid == 'Lemma3.7':
        pk = prime_power(G.order & -G.order)
        return [theorems.verify_lemma_3_7(pk[1])]
    raise ParseError("counterexample: unknown theorem id %r" % tid)


def replay(path):
    '''Replay a counterexample file, or every FAIL of a report'''
    storage = GroupStorage(path)
    if not storage.file_exists():
        raise ParseError("%s: no such file" % path)
    if 'records' in storage.data:
        payloads = [r['counterexample'] for r in storage.get('records')
                    if r.get('outcome') == FAIL and r.get('counterexample')]
    else:
        payloads = [storage.data]
    records = []
    for payload in payloads:
        records += replay_payload(payload)
    return records
