import json
import threading
import os

from copy import deepcopy
from .util import user_dir, print_error, print_msg, print_stderr, PrintError
from .util import MAX_LATTICE, WITNESS_CAP, MAX_ORDER, ASSOC_FULL_LIMIT

SYSTEM_CONFIG_PATH = "/etc/gcover.conf"

# environment variables and the config keys they set
ENV_KEYS = {
    'GCOVER_MAX_LATTICE': 'max_lattice',
    'GCOVER_WITNESS_CAP': 'witness_cap',
}

config = None


def get_config():
    global config
    return config


def set_config(c):
    global config
    config = c


class SimpleConfig(PrintError):
    """
    The SimpleConfig class is responsible for handling operations involving
    configuration files.

    There are 4 different sources of possible configuration values:
        1. Command line options.
        2. Environment variables (GCOVER_MAX_LATTICE, GCOVER_WITNESS_CAP)
        3. User configuration (in the user's config directory)
        4. System configuration (in /etc/)
    They are taken in order (1. overrides config options set in 2., that
    override config set in 3., and so on)
    """
    def __init__(self, options={}, read_system_config_function=None,
                 read_user_config_function=None, read_user_dir_function=None,
                 environ=None):

        # This lock needs to be acquired for updating and reading the config in
        # a thread-safe way.
        self.lock = threading.RLock()

        # The following functions are there for dependency injection when
        # testing.
        if read_system_config_function is None:
            read_system_config_function = read_system_config
        if read_user_config_function is None:
            read_user_config_function = read_user_config
        if read_user_dir_function is None:
            self.user_dir = user_dir
        else:
            self.user_dir = read_user_dir_function

        # The command line options, minus unset flags
        self.cmdline_options = {k: v for k, v in deepcopy(options).items()
                                if v is not None}
        self.env_options = read_env_config(os.environ if environ is None else environ)

        if self.cmdline_options.get('portable', False):
            self.system_config = {}
        else:
            self.system_config = read_system_config_function()

        # Set self.path and read the user config
        self.user_config = {}  # for self.get in gcover_path()
        self.path = self.gcover_path()
        self.user_config = read_user_config_function(self.path)
        # Make a singleton instance of 'self'
        set_config(self)

    def gcover_path(self):
        # Read gcover_path from command line / system configuration
        # Otherwise use the user's default data directory.
        path = self.get('gcover_path')
        if path is None:
            path = self.user_dir()
        if path is None:
            return
        # Make directory if it does not yet exist.
        if not os.path.exists(path):
            if os.path.islink(path):
                raise OSError('Dangling link: ' + path)
            os.makedirs(path)
        self.print_error("gcover directory", path)
        return path

    def set_key(self, key, value, save = True):
        if not self.is_modifiable(key):
            print_stderr("Warning: not changing config key '%s' set on the command line" % key)
            return

        with self.lock:
            self.user_config[key] = value
            if save:
                self.save_user_config()
        return

    def get(self, key, default=None):
        with self.lock:
            out = self.cmdline_options.get(key)
            if out is None:
                out = self.env_options.get(key)
            if out is None:
                out = self.user_config.get(key)
            if out is None:
                out = self.system_config.get(key, default)
        return out

    def is_modifiable(self, key):
        return not key in self.cmdline_options

    def save_user_config(self):
        if not self.path:
            return
        path = os.path.join(self.path, "config")
        s = json.dumps(self.user_config, indent=4, sort_keys=True)
        with open(path, "w") as f:
            f.write(s)

    def get_int(self, key, default):
        value = self.get(key, default)
        try:
            return int(value)
        except (TypeError, ValueError):
            print_stderr("Warning: ignoring non-integer config value %s=%r" % (key, value))
            return default

    def max_lattice(self):
        return self.get_int('max_lattice', MAX_LATTICE)

    def witness_cap(self):
        return self.get_int('witness_cap', WITNESS_CAP)

    def jobs(self):
        return max(1, self.get_int('jobs', 1))

    def order_bound(self):
        return min(MAX_ORDER, self.get_int('order_bound', MAX_ORDER))

    def assoc_full_limit(self):
        return self.get_int('assoc_full_limit', ASSOC_FULL_LIMIT)


def configured(key, value, default):
    '''Resolve a threshold: explicit argument, then the config singleton,
    then the built-in default.'''
    if value is not None:
        return value
    c = get_config()
    if c is not None:
        return c.get_int(key, default)
    return default


def read_env_config(environ):
    result = {}
    for var, key in ENV_KEYS.items():
        if var in environ:
            result[key] = environ[var]
    return result


def read_system_config(path=SYSTEM_CONFIG_PATH):
    """Parse and return the system config settings in /etc/gcover.conf."""
    result = {}
    if os.path.exists(path):
        import configparser
        p = configparser.ConfigParser()
        try:
            p.read(path)
            for k, v in p.items('gcover'):
                result[k] = v
        except (configparser.NoSectionError, configparser.MissingSectionHeaderError):
            pass
    return result

def read_user_config(path):
    """Parse and store the user config settings in gcover.conf into user_config[]."""
    if not path:
        return {}
    config_path = os.path.join(path, "config")
    if not os.path.exists(config_path):
        return {}
    try:
        with open(config_path, "r") as f:
            data = f.read()
        result = json.loads(data)
    except (IOError, ValueError):
        print_msg("Warning: Cannot read config file.", config_path)
        return {}
    if not type(result) is dict:
        return {}
    return result
