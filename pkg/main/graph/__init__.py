from .cfg import ControlFlowGraph
from .cfg import SccPartition
from .cfg import parse_cfg_text
from .cfg import read_cfg
from .cfg import validate
from .cfg import scc_partition
from .cfg import component_diagnostics
from .cfg import canonical_checksum
