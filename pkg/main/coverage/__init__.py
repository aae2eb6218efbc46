from .state import CoverageState
from .state import Summary
from .state import new_state
from .state import replay_run
from .state import merge
from .state import coverage_summary
from .state import check_trace
from .counts import save_counts
from .counts import load_counts
from .counts import dumps_counts
from .counts import loads_counts
from .traces import Trace
from .traces import parse_traces
from .traces import read_traces
