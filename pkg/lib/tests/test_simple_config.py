import ast
import sys
import os
import unittest
import tempfile
import shutil
import json

from io import StringIO
from lib.simple_config import (SimpleConfig, read_system_config,
                               read_user_config, read_env_config,
                               configured, get_config, set_config)
from lib.util import MAX_LATTICE, WITNESS_CAP, MAX_ORDER


class Test_SimpleConfig(unittest.TestCase):

    def setUp(self):
        super(Test_SimpleConfig, self).setUp()
        # make sure "read_user_config" and "user_dir" return a temporary directory.
        self.gcover_dir = tempfile.mkdtemp()
        # Do the same for the user dir to avoid overwriting the real configuration
        self.user_dir = tempfile.mkdtemp()

        self.options = {"gcover_path": self.gcover_dir}
        self._saved_stdout = sys.stdout
        self._stdout_buffer = StringIO()
        sys.stdout = self._stdout_buffer

    def tearDown(self):
        super(Test_SimpleConfig, self).tearDown()
        # Remove the temporary directory after each test (to make sure we don't
        # pollute /tmp for nothing.
        shutil.rmtree(self.gcover_dir)
        shutil.rmtree(self.user_dir)
        set_config(None)

        # Restore the "real" stdout
        sys.stdout = self._saved_stdout

    def _config(self, options, system=None, user=None, environ=None):
        return SimpleConfig(options=options,
                            read_system_config_function=lambda: dict(system or {}),
                            read_user_config_function=lambda _: dict(user or {}),
                            read_user_dir_function=lambda: self.user_dir,
                            environ=environ or {})

    def test_simple_config_command_line_overrides_everything(self):
        """Options passed by command line override all other configuration
        sources"""
        config = self._config(self.options, system={"gcover_path": "a"},
                              user={"gcover_path": "b"})
        self.assertEqual(self.options.get("gcover_path"),
                         config.get("gcover_path"))

    def test_simple_config_unset_flags_do_not_override(self):
        """argparse leaves unset flags at None; they must not hide lower
        sources"""
        config = self._config({"max_lattice": None}, user={"max_lattice": 500})
        self.assertEqual(500, config.max_lattice())

    def test_simple_config_environment_overrides_user_config(self):
        config = self._config({}, user={"max_lattice": 500},
                              environ={"GCOVER_MAX_LATTICE": "700"})
        self.assertEqual(700, config.max_lattice())

    def test_simple_config_command_line_overrides_environment(self):
        config = self._config({"witness_cap": 3},
                              environ={"GCOVER_WITNESS_CAP": "9"})
        self.assertEqual(3, config.witness_cap())

    def test_simple_config_user_config_overrides_system_config(self):
        """Options passed in user config override system config."""
        config = self._config({}, system={"gcover_path": self.gcover_dir},
                              user={"gcover_path": "b"})
        self.assertEqual("b", config.get("gcover_path"))

    def test_simple_config_system_config_ignored_if_portable(self):
        """If gcover is started with the "portable" flag, system
        configuration is completely ignored."""
        config = self._config({"portable": True}, system={"some_key": "some_value"})
        self.assertEqual(config.get("some_key"), None)

    def test_simple_config_user_config_is_used_if_others_arent_specified(self):
        config = self._config({}, user={"gcover_path": self.gcover_dir})
        self.assertEqual(self.gcover_dir, config.get("gcover_path"))

    def test_cannot_set_options_passed_by_command_line(self):
        config = self._config(self.options, user={"gcover_path": "b"})
        config.set_key("gcover_path", "c")
        self.assertEqual(self.options.get("gcover_path"),
                         config.get("gcover_path"))

    def test_can_set_options_from_system_config(self):
        config = self._config({}, system={"jobs": 2})
        config.set_key("jobs", 4)
        self.assertEqual(4, config.jobs())

    def test_thresholds_default_to_constants(self):
        config = self._config({})
        self.assertEqual(MAX_LATTICE, config.max_lattice())
        self.assertEqual(WITNESS_CAP, config.witness_cap())
        self.assertEqual(1, config.jobs())
        self.assertEqual(MAX_ORDER, config.order_bound())

    def test_order_bound_is_never_raised(self):
        config = self._config({"order_bound": 5000})
        self.assertEqual(MAX_ORDER, config.order_bound())

    def test_non_integer_threshold_falls_back(self):
        config = self._config({"witness_cap": "many"})
        self.assertEqual(WITNESS_CAP, config.witness_cap())

    def test_constructor_installs_singleton(self):
        config = self._config({})
        self.assertIs(config, get_config())

    def test_configured_prefers_explicit_value(self):
        self._config({"max_lattice": 10})
        self.assertEqual(3, configured('max_lattice', 3, MAX_LATTICE))
        self.assertEqual(10, configured('max_lattice', None, MAX_LATTICE))
        set_config(None)
        self.assertEqual(MAX_LATTICE, configured('max_lattice', None, MAX_LATTICE))

    def test_user_config_is_not_written_with_read_only_config(self):
        """The user config does not contain command-line options or system
        options when saved."""
        self.options.update({"something": "c"})
        config = self._config(self.options, system={"something": "b"},
                              user={"something": "a"})
        config.save_user_config()
        contents = None
        with open(os.path.join(self.gcover_dir, "config"), "r") as f:
            contents = f.read()
        result = ast.literal_eval(contents)
        self.assertEqual({"something": "a"}, result)


class TestEnvConfig(unittest.TestCase):

    def test_known_variables_only(self):
        result = read_env_config({"GCOVER_MAX_LATTICE": "5", "HOME": "/root"})
        self.assertEqual({"max_lattice": "5"}, result)


class TestSystemConfig(unittest.TestCase):

    sample_conf = """
[gcover]
witness_cap = 5

[something_else]
everything = 42
"""

    def setUp(self):
        super(TestSystemConfig, self).setUp()
        self.thefile = tempfile.mkstemp(suffix=".gcover.test.conf")[1]

    def tearDown(self):
        super(TestSystemConfig, self).tearDown()
        os.remove(self.thefile)

    def test_read_system_config_file_does_not_exist(self):
        somefile = "/foo/I/do/not/exist/gcover.conf"
        result = read_system_config(somefile)
        self.assertEqual({}, result)

    def test_read_system_config_file_returns_file_options(self):
        with open(self.thefile, "w") as f:
            f.write(self.sample_conf)

        result = read_system_config(self.thefile)
        self.assertEqual({"witness_cap": "5"}, result)

    def test_read_system_config_file_no_sections(self):

        with open(self.thefile, "w") as f:
            f.write("witness_cap = 5")  # The file has no sections at all

        result = read_system_config(self.thefile)
        self.assertEqual({}, result)


class TestUserConfig(unittest.TestCase):

    def setUp(self):
        super(TestUserConfig, self).setUp()
        self._saved_stdout = sys.stdout
        self._stdout_buffer = StringIO()
        sys.stdout = self._stdout_buffer

        self.user_dir = tempfile.mkdtemp()

    def tearDown(self):
        super(TestUserConfig, self).tearDown()
        shutil.rmtree(self.user_dir)
        sys.stdout = self._saved_stdout

    def test_no_path_means_no_result(self):
       result = read_user_config(None)
       self.assertEqual({}, result)

    def test_path_with_json_dict(self):
        thefile = os.path.join(self.user_dir, "config")
        payload = {"max_lattice": 5}
        with open(thefile, "w") as f:
            f.write(json.dumps(payload))

        result = read_user_config(self.user_dir)
        self.assertEqual(payload, result)

    def test_path_without_config_file(self):
        """We pass a path but if does not contain a "config" file."""
        result = read_user_config(self.user_dir)
        self.assertEqual({}, result)

    def test_path_with_reprd_object(self):

        class something(object):
            pass

        thefile = os.path.join(self.user_dir, "config")
        payload = something()
        with open(thefile, "w") as f:
            f.write(repr(payload))

        result = read_user_config(self.user_dir)
        self.assertEqual({}, result)
