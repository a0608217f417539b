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

import ast
import argparse
import inspect
from functools import wraps

from .util import PreconditionError, INFINITE
from .group import structural_predicates
from .lattice import all_subgroups, frattini, m_count
from .cover import sigma as compute_sigma, cover_subgroups, classify_sigma_cover, maximal_class_ids
from .classify import classify_frattini_quotient
from .corpus import corpus_generate
from .records import emit_report, summarize
from .recipe import construct as construct_recipe
from .storage import load_group, save_group
from . import harness

known_commands = {}


class Command:

    def __init__(self, func, s):
        self.name = func.__name__
        self.requires_group = 'g' in s
        self.description = func.__doc__
        self.help = self.description.split('.')[0] if self.description else None
        spec = inspect.getfullargspec(func)
        varnames = spec.args[1:]
        self.defaults = spec.defaults
        if self.defaults:
            n = len(self.defaults)
            self.params = list(varnames[:-n])
            self.options = list(varnames[-n:])
        else:
            self.params = list(varnames)
            self.options = []
            self.defaults = []


def command(s):
    def decorator(func):
        global known_commands
        name = func.__name__
        known_commands[name] = Command(func, s)
        @wraps(func)
        def func_wrapper(*args, **kwargs):
            return func(*args, **kwargs)
        return func_wrapper
    return decorator


class Commands:

    def __init__(self, config):
        self.config = config

    @command('')
    def commands(self):
        """List of commands"""
        return ' '.join(sorted(known_commands.keys()))

    @command('')
    def getconfig(self, key):
        """Return a configuration variable. """
        return self.config.get(key)

    @command('')
    def setconfig(self, key, value):
        """Set a configuration variable. 'value' may be a string or a Python expression."""
        try:
            value = ast.literal_eval(value)
        except (ValueError, SyntaxError):
            pass
        self.config.set_key(key, value)
        return True

    @command('g')
    def analyze(self, groupfile):
        """Print m(G), σ(G), the order of Φ(G) and the classification of
        G/Φ(G). """
        G = load_group(groupfile)
        preds = structural_predicates(G)
        result = {
            'label': G.label,
            'order': G.order,
            'predicates': dict(preds._asdict()),
            'm': m_count(G),
            'phi_order': frattini(G).size,
        }
        sigma_result = compute_sigma(G)
        result['sigma'] = sigma_result.value
        try:
            result['classification'] = classify_frattini_quotient(G, sigma_result).as_dict()
        except PreconditionError as e:
            result['classification'] = {'skipped': str(e)}
        return result

    @command('g')
    def sigma(self, groupfile, witnesses=5):
        """Covering number of a group, with some minimal covers. """
        G = load_group(groupfile)
        result = compute_sigma(G)
        out = {'label': G.label, 'order': G.order, 'sigma': result.value,
               'exhaustive': result.exhaustive_flag, 'witness_count': len(result.witnesses)}
        if result.value is INFINITE:
            return out
        class_of = maximal_class_ids(G)
        shown = []
        for w in result.witnesses[:witnesses]:
            kind = classify_sigma_cover(G, cover_subgroups(G, w), result, class_of)
            shown.append({'positions': w, 'kind': kind.kind, 'indices': list(kind.indices)})
        out['witnesses'] = shown
        return out

    @command('')
    def verify(self, max_order=None, theorem=None, jobs=None, format='json', out=None, replay=None):
        """Run the theorem checks over the corpus, or replay a
        counterexample. """
        if replay:
            records = harness.replay(replay)
        else:
            records = harness.run_corpus_verification(max_order or 60, theorem, jobs)
        data = emit_report(records, format)
        if out:
            with open(out, 'wb') as f:
                f.write(data)
            return summarize(records)
        return data.decode('utf8')

    @command('')
    def construct(self, recipe, out=None):
        """Build a group from a recipe label. """
        G = construct_recipe(recipe)
        if out:
            save_group(G, out)
        return {'label': G.label, 'order': G.order, 'path': out}

    @command('')
    def corpus(self, max_order=60):
        """List the corpus groups up to an order. """
        return [{'label': G.label, 'order': G.order} for G in corpus_generate(max_order)]

    @command('g')
    def lattice(self, groupfile):
        """Subgroup counts by order and the maximal subgroups. """
        G = load_group(groupfile)
        lattice = all_subgroups(G)
        d = lattice.as_dict()
        d.update(label=G.label, m=len(lattice.maximal_indices))
        return d


param_descriptions = {
    'groupfile': 'Group file (JSON with kind table, perm or recipe)',
    'recipe': 'Recipe label, for instance "E(4):C(3) x C(5)"',
    'key': 'Configuration key',
    'value': 'Configuration value',
}

command_options = {
    'witnesses': (None, "--witnesses", "Number of σ-covers to show"),
    'max_order': (None, "--max-order", "Largest corpus group order"),
    'theorem':   (None, "--theorem",   "Only emit records of this theorem id"),
    'jobs':      ("-j", "--jobs",      "Number of worker processes"),
    'format':    (None, "--format",    "Report format, json or csv"),
    'out':       ("-o", "--out",       "Output path"),
    'replay':    (None, "--replay",    "Counterexample or report file to replay"),
}

arg_types = {
    'witnesses': int,
    'max_order': int,
    'jobs': int,
}

arg_choices = {
    'format': ['json', 'csv'],
    'theorem': list(harness.THEOREM_IDS),
}


def add_global_options(parser):
    group = parser.add_argument_group('global options')
    group.add_argument("-v", "--verbose", action="store_true", dest="verbose", default=False, help="Show debugging information")
    group.add_argument("-D", "--dir", dest="gcover_path", help="gcover directory")
    group.add_argument("--max-lattice", dest="max_lattice", type=int, default=None, help="Abort lattice enumeration above this many subgroups")
    group.add_argument("--witness-cap", dest="witness_cap", type=int, default=None, help="Enumerate at most this many σ-covers")


def get_parser():
    parser = argparse.ArgumentParser(
        epilog="Run 'gcover <command> -h' to see the help for a command")
    add_global_options(parser)
    subparsers = parser.add_subparsers(dest='cmd', metavar='<command>')
    subparsers.required = True
    for cmdname in sorted(known_commands.keys()):
        cmd = known_commands[cmdname]
        p = subparsers.add_parser(cmdname, help=cmd.help, description=cmd.description)
        add_global_options(p)
        for optname, default in zip(cmd.options, cmd.defaults):
            a, b, help = command_options[optname]
            args = (a, b) if a else (b,)
            p.add_argument(*args, dest=optname, default=default, help=help,
                           type=arg_types.get(optname, str), choices=arg_choices.get(optname))
        for param in cmd.params:
            p.add_argument(param, help=param_descriptions.get(param, ''))
    return parser
