"""Service layer package"""
from .actions import AnalysisActionService, build_builtin_state
from .command_router import CommandRouter
from .sweep import SweepRow, run_sweep, sweep_row

__all__ = ['AnalysisActionService', 'CommandRouter', 'SweepRow', 'build_builtin_state', 'run_sweep', 'sweep_row']
