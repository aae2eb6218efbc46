from .report import ReportLine
from .report import path_directions
from .report import format_directions
from .report import suggest_run
from .report import text_report
from .report import machine_report
from .report import json_report
