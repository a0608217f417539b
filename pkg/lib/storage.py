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
import copy
import json
import stat
import threading

from .util import PrintError, ParseError, ResourceError, MAX_ORDER, json_encode, profiler
from .version import FORMAT_VERSION
from .group import Group
from .records import group_payload
from . import constructors, recipe


GROUP_KINDS = ('table', 'perm', 'recipe')


class GroupStorage(PrintError):
    '''A versioned JSON document on disk: group files, reports and
    counterexample payloads all go through it.'''

    def __init__(self, path, load=True):
        self.print_error("path", path)
        self.lock = threading.RLock()
        self.data = {}
        self.path = path
        self.modified = False
        if load and self.file_exists():
            with open(self.path, "r", encoding='utf8') as f:
                self.raw = f.read()
            self.load_data(self.raw)

    def load_data(self, s):
        try:
            data = json.loads(s)
        except ValueError as e:
            raise ParseError("%s: not a JSON document (line %d)" % (self.path, e.lineno))
        if not isinstance(data, dict):
            raise ParseError("%s: top level must be an object" % self.path)
        self.data = data
        self.check_version()

    def check_version(self):
        version = self.data.get('version')
        if version != FORMAT_VERSION:
            raise ParseError("%s: field 'version' is %r, expected %d"
                             % (self.path, version, FORMAT_VERSION))

    def file_exists(self):
        return self.path and os.path.exists(self.path)

    def get(self, key, default=None):
        with self.lock:
            v = self.data.get(key)
            if v is None:
                v = default
            else:
                v = copy.deepcopy(v)
        return v

    def require(self, key):
        v = self.get(key)
        if v is None:
            raise ParseError("%s: missing field %r" % (self.path, key))
        return v

    def put(self, key, value):
        with self.lock:
            if value is not None:
                if self.data.get(key) != value:
                    self.modified = True
                    self.data[key] = copy.deepcopy(value)
            elif key in self.data:
                self.modified = True
                self.data.pop(key)

    def update(self, d):
        for k, v in d.items():
            self.put(k, v)

    @profiler
    def write(self):
        self.put('version', FORMAT_VERSION)
        with self.lock:
            self._write()

    def _write(self):
        if not self.modified:
            return
        s = json_encode(self.data) + "\n"
        temp_path = "%s.tmp.%s" % (self.path, os.getpid())
        with open(temp_path, "w", encoding='utf8') as f:
            f.write(s)
            f.flush()
            os.fsync(f.fileno())
        mode = os.stat(self.path).st_mode if os.path.exists(self.path) else stat.S_IREAD | stat.S_IWRITE
        os.replace(temp_path, self.path)
        os.chmod(self.path, mode)
        self.print_error("saved", self.path)
        self.modified = False


def _int_field(d, key, where):
    v = d.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError("%s: field %r must be an integer" % (where, key))
    return v


def group_from_payload(d, where='group'):
    '''Build a group from a {kind: table | perm | recipe, ...} object'''
    kind = d.get('kind')
    if kind not in GROUP_KINDS:
        raise ParseError("%s: field 'kind' must be one of %s" % (where, ", ".join(GROUP_KINDS)))
    if kind == 'recipe':
        label = d.get('label')
        if not isinstance(label, str):
            raise ParseError("%s: field 'label' must be a string" % where)
        return recipe.construct(label)
    if kind == 'perm':
        degree = _int_field(d, 'degree', where)
        gens = d.get('generators')
        if not isinstance(gens, list):
            raise ParseError("%s: field 'generators' must be a list" % where)
        return constructors.from_permutations(constructors.PermutationGenSet(degree, gens))
    order = _int_field(d, 'order', where)
    if order < 1:
        raise ParseError("%s: field 'order' must be positive" % where)
    if order > MAX_ORDER:
        raise ResourceError("group file order %d" % order, MAX_ORDER)
    rows = d.get('rows')
    if not isinstance(rows, list) or len(rows) != order:
        raise ParseError("%s: field 'rows' must hold %d rows" % (where, order))
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != order:
            raise ParseError("%s: row %d must hold %d entries" % (where, i, order))
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise ParseError("%s: row %d holds a non-integer entry" % (where, i))
    return Group(rows, label=d.get('label', 'G'))


def load_group(path):
    storage = GroupStorage(path)
    if not storage.file_exists():
        raise ParseError("%s: no such file" % path)
    return group_from_payload(storage.data, where=path)


def save_group(G, path, kind=None):
    '''Write G as a group file: its recipe when the label is one, else
    the table; kind='table' forces the table.'''
    payload = G.as_dict() if kind == 'table' else group_payload(G)
    if payload['kind'] == 'table':
        payload['label'] = G.label
    storage = GroupStorage(path, load=False)
    storage.update(payload)
    storage.write()
    return storage
