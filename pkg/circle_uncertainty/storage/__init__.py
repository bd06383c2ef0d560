"""State files and sweep output"""

from .state_file import format_state, get_home_dir, read_state, write_state
from .validation import STATE_SCHEMA, validate_and_clean_state, validate_state_data

__all__ = [
    'format_state', 'get_home_dir', 'read_state', 'write_state',
    'STATE_SCHEMA', 'validate_and_clean_state', 'validate_state_data'
]
