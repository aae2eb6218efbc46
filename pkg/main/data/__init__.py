from .utils import CONFIG
from .utils import PpcovError
from .utils import CfgSyntaxError
from .utils import CfgValidationError
from .utils import PathLimitExceeded
from .utils import OracleSizeError
from .utils import TraceError
from .utils import ChecksumMismatch
from .utils import MergeError
from .utils import CountsFormatError
