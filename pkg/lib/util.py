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

import os
import sys
import json
import time
import hashlib
from functools import wraps

import numpy as np


MAX_ORDER = 2000           # hard bound on group orders
MAX_LATTICE = 10 ** 6      # subgroup lattice abort threshold
WITNESS_CAP = 10 ** 4      # maximum number of σ-covers enumerated
ASSOC_FULL_LIMIT = 256     # full associativity check up to this order
INFINITE = None            # σ of cyclic groups


class GroupError(Exception):
    '''Base class of every error raised by gcover'''
    pass

class InputError(GroupError): pass

class LatinSquareError(InputError): pass

class AssociativityError(InputError): pass

class ParseError(InputError): pass

class PreconditionError(GroupError): pass

class ResourceError(GroupError):

    def __init__(self, what, threshold):
        GroupError.__init__(self, what, threshold)
        self.what = what
        self.threshold = threshold

    def __str__(self):
        return "%s exceeds the threshold %d" % (self.what, self.threshold)


class GroupEncoder(json.JSONEncoder):
    def default(self, obj):
        if hasattr(obj, 'as_dict'):
            return obj.as_dict()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        return super(GroupEncoder, self).default(obj)


class PrintError(object):
    '''A handy base class'''
    def diagnostic_name(self):
        return self.__class__.__name__

    def print_error(self, *msg):
        print_error("[%s]" % self.diagnostic_name(), *msg)

    def print_msg(self, *msg):
        print_msg("[%s]" % self.diagnostic_name(), *msg)


is_verbose = False
def set_verbosity(b):
    global is_verbose
    is_verbose = b


def print_error(*args):
    if not is_verbose: return
    print_stderr(*args)

def print_stderr(*args):
    args = [str(item) for item in args]
    sys.stderr.write(" ".join(args) + "\n")
    sys.stderr.flush()

def print_msg(*args):
    # Stringify args
    args = [str(item) for item in args]
    sys.stdout.write(" ".join(args) + "\n")
    sys.stdout.flush()

def json_encode(obj):
    try:
        s = json.dumps(obj, sort_keys = True, indent = 4, cls=GroupEncoder)
    except TypeError:
        s = repr(obj)
    return s

def json_decode(x):
    try:
        return json.loads(x)
    except ValueError:
        return x

# decorator that prints execution time
def profiler(func):
    @wraps(func)
    def do_profile(*args, **kw_args):
        t0 = time.time()
        o = func(*args, **kw_args)
        t = time.time() - t0
        print_error("[profiler]", func.__name__, "%.4f"%t)
        return o
    return do_profile


def table_digest(table):
    '''sha256 of a Cayley table; identifies a group up to labelling'''
    a = np.ascontiguousarray(table, dtype=np.int32)
    h = hashlib.sha256()
    h.update(str(a.shape[0]).encode('ascii'))
    h.update(a.tobytes())
    return h.hexdigest()


def seeded_rng(*parts):
    '''A deterministic random generator seeded by hashing parts.
    The same inputs always sample the same values, so sampled
    checks are reproducible run to run.'''
    h = hashlib.sha256()
    for part in parts:
        h.update(str(part).encode('utf8'))
    return np.random.default_rng(int.from_bytes(h.digest()[:8], 'big'))


def user_dir():
    if 'GCOVER_DIR' in os.environ:
        return os.environ['GCOVER_DIR']
    elif os.name == 'posix':
        return os.path.join(os.environ["HOME"], ".gcover")
    elif "APPDATA" in os.environ:
        return os.path.join(os.environ["APPDATA"], "gcover")
    elif "LOCALAPPDATA" in os.environ:
        return os.path.join(os.environ["LOCALAPPDATA"], "gcover")
    else:
        return
