"""Runner Module

Configuration, the batch commands and their reports.
"""

from .config import RunConfig, ToolkitConfig, build_run_config, create_config
from .reporting import DensityReport, GroupDensity, Verdict
from .pipeline import QContext, build_context, cmd_density
from .verify import cmd_verify
from .claims import cmd_pgl_claims
from .exporter import ExportResult, cmd_export

__all__ = [
    'RunConfig',
    'ToolkitConfig',
    'build_run_config',
    'create_config',
    'DensityReport',
    'GroupDensity',
    'Verdict',
    'QContext',
    'build_context',
    'cmd_density',
    'cmd_verify',
    'cmd_pgl_claims',
    'ExportResult',
    'cmd_export',
]
