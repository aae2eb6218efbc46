from .tables import PathIndex
from .tables import InstrumentationTable
from .tables import index_paths
from .tables import record_sets
from .tables import init_sets
from .tables import discard_sets
from .tables import build_bitmasks
from .tables import instrumentation_table
from .tables import partition_bins
from .plan import Step
from .plan import InstrumentationPlan
from .plan import build_plan
from .plan import render_pseudo_source
from .plan import RECORD
from .plan import DISCARD
from .plan import INITIALIZE
