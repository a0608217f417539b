import os
import json
import shutil
import tempfile
import unittest

from lib.util import InputError, ParseError
from lib.records import PASS, FAIL, SKIP, emit_report
from lib.simple_config import set_config
from lib.constructors import symmetric
from lib.harness import (verify_label, global_records, run_corpus_verification,
                         replay_payload, replay, _pairwise, THEOREM_IDS)


class TestGroupRecords(unittest.TestCase):

    def test_s3_fails_only_for_the_normal_pair(self):
        records = verify_label("S(3)")
        ids = set(r.theorem_id for r in records)
        for tid in ('SigmaOracle', 'Frattini', 'Thm1.1', 'Lemma3.2', 'Cor3.1.5', 'Thm3.4p',
                    'Thm3.5', 'Prop3.8'):
            self.assertIn(tid, ids)
        failures = [r for r in records if r.outcome == FAIL]
        self.assertEqual(['Thm3.5'], [r.theorem_id for r in failures])
        self.assertEqual("ℓ = 2 does not divide both r_i", failures[0].reason)
        again = replay_payload(failures[0].counterexample)
        self.assertEqual([FAIL], [r.outcome for r in again])
        self.assertEqual(3, len([r for r in records if r.theorem_id == 'Prop3.8']))

    def test_empty_pairwise_check_is_one_skip(self):
        records = _pairwise(symmetric(3), 'Thm3.5', [], None)
        self.assertEqual(1, len(records))
        self.assertEqual(SKIP, records[0].outcome)
        self.assertEqual("no candidate subgroups", records[0].reason)

    def test_theorem_filter(self):
        records = verify_label("D(8)", 'Rem3.1.5b')
        self.assertEqual(['Rem3.1.5b'], [r.theorem_id for r in records])
        self.assertEqual(PASS, records[0].outcome)

    def test_cyclic_groups_skip(self):
        records = verify_label("C(6)", 'Thm1.1')
        self.assertEqual([SKIP], [r.outcome for r in records])

    def test_global_records(self):
        self.assertEqual([], global_records(1, 'Thm1.1'))
        records = global_records(12)
        self.assertEqual(['Lemma3.7', 'Lemma3.9'], [r.theorem_id for r in records])
        self.assertEqual([PASS, PASS], [r.outcome for r in records])


class TestCorpusRun(unittest.TestCase):

    def tearDown(self):
        set_config(None)

    def test_empty_corpus(self):
        self.assertEqual([], run_corpus_verification(1))

    def test_three_maximals(self):
        records = run_corpus_verification(8, 'Rem3.1.5b', jobs=1)
        self.assertEqual(13, len(records))
        passing = sorted(r.group_label for r in records if r.outcome == PASS)
        self.assertEqual(["C(2) x C(4)", "D(8)", "E(4)", "Q(8)"], passing)
        self.assertEqual([], [r for r in records if r.outcome == FAIL])

    def test_worker_count_does_not_change_the_report(self):
        serial = emit_report(run_corpus_verification(12, jobs=1))
        parallel = emit_report(run_corpus_verification(12, jobs=2))
        self.assertEqual(serial, parallel)

    def test_bad_arguments(self):
        with self.assertRaises(InputError):
            run_corpus_verification(5000)
        with self.assertRaises(InputError):
            run_corpus_verification(8, 'Thm9.9')

    def test_theorem_ids(self):
        self.assertEqual(len(set(THEOREM_IDS)), len(THEOREM_IDS))
        self.assertIn('Lemma3.9', THEOREM_IDS)


class TestReplay(unittest.TestCase):

    def setUp(self):
        super(TestReplay, self).setUp()
        self.user_dir = tempfile.mkdtemp()

    def tearDown(self):
        super(TestReplay, self).tearDown()
        shutil.rmtree(self.user_dir)

    def _s4_failure(self):
        records = verify_label("S(4)", 'Thm3.4p')
        self.assertEqual([PASS, PASS, FAIL], [r.outcome for r in records])
        return records

    def test_replay_payload(self):
        failure = self._s4_failure()[2]
        again = replay_payload(failure.counterexample)
        self.assertEqual(1, len(again))
        self.assertEqual(FAIL, again[0].outcome)
        self.assertEqual(failure.reason, again[0].reason)

    def test_replay_report_file(self):
        path = os.path.join(self.user_dir, "report.json")
        with open(path, "wb") as f:
            f.write(emit_report(self._s4_failure()))
        records = replay(path)
        self.assertEqual([('Thm3.4p', FAIL)], [(r.theorem_id, r.outcome) for r in records])

    def test_replay_counterexample_file(self):
        path = os.path.join(self.user_dir, "ce.json")
        with open(path, "w") as f:
            json.dump({'version': 1, 'theorem_id': 'Frattini',
                       'group': {'kind': 'recipe', 'label': "Q(8)"}}, f)
        records = replay(path)
        self.assertEqual([PASS], [r.outcome for r in records])

    def test_lemma_3_9_payload(self):
        records = replay_payload({'theorem_id': 'Lemma3.9', 'bounds': [10, 3]})
        self.assertEqual(PASS, records[0].outcome)
        self.assertEqual(5, records[0].parameters['solutions'])

    def test_bad_payloads(self):
        group = {'kind': 'recipe', 'label': "S(3)"}
        with self.assertRaisesRegex(ParseError, "missing field 'group'"):
            replay_payload({'theorem_id': 'Thm1.1'})
        with self.assertRaisesRegex(ParseError, "unknown theorem id"):
            replay_payload({'theorem_id': 'Thm9.9', 'group': group})
        with self.assertRaisesRegex(ParseError, "does not index"):
            replay_payload({'theorem_id': 'Thm3.4p', 'group': group, 'selection': [99]})
        with self.assertRaisesRegex(ParseError, "two subgroups"):
            replay_payload({'theorem_id': 'Thm3.5', 'group': group, 'selection': [1]})
        with self.assertRaisesRegex(ParseError, "no such file"):
            replay(os.path.join(self.user_dir, "absent.json"))
