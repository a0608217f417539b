from .version import GCOVER_VERSION
from .util import print_msg, print_error, set_verbosity, GroupError
from .simple_config import SimpleConfig, get_config, set_config
from .group import Group, SubgroupSet, GroupHomomorphism
from .lattice import all_subgroups, maximal_subgroups, m_count, frattini
from .cover import sigma, SigmaResult
from .recipe import construct
from .storage import GroupStorage, load_group, save_group
from .commands import Commands, known_commands
