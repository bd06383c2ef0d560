"""Reading and writing state files"""
import json
import os
import platform
from pathlib import Path

from ..constants import HOME_DIR_NAME, HOME_ENV_VAR, STATE_FILE_DIGITS
from ..errors import NormalizationError, StateInputError


def get_home_dir() -> Path:
    """Directory for logs and other per-user files, created if needed"""
    override = os.environ.get(HOME_ENV_VAR)
    home_dir = Path(override) if override else Path.home() / HOME_DIR_NAME
    home_dir.mkdir(parents=True, exist_ok=True)
    return home_dir


def _number(value: float) -> str:
    return format(float(value), f'.{STATE_FILE_DIGITS}g')


def format_state(state) -> str:
    """JSON text with every amplitude written to 17 significant digits"""
    pairs = ',\n    '.join(f'[{_number(c.real)}, {_number(c.imag)}]' for c in state.coeffs)
    return (
        '{\n'
        f'  "l_min": {state.l_min},\n'
        f'  "l_max": {state.l_max},\n'
        f'  "coeffs": [\n    {pairs}\n  ]\n'
        '}\n'
    )


def write_state(state, path) -> Path:
    """Write a state file atomically through a temporary sibling"""
    from ..utils.logging import log_debug, log_error
    
    path = Path(path)
    temp_path = path.with_name(f'{path.name}.tmp')
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(temp_path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(format_state(state))
        
        if platform.system() == 'Windows' and path.exists():
            path.unlink()
        temp_path.replace(path)
        log_debug(f"Wrote state file {path}")
        return path
    except OSError as e:
        log_error(f"Failed to write state file {path}: {e}", exc_info=True)
        try:
            if temp_path.exists():
                temp_path.unlink()
        except OSError as cleanup_error:
            log_error(f"Failed to clean up temp state file: {cleanup_error}")
        raise


def read_state(path, strict: bool = True):
    """
    Load and validate a state file.
    
    Args:
        path: JSON file in the {"l_min", "l_max", "coeffs"} format
        strict: Reject states whose norm differs from 1 by more than 1e-12
    
    Raises:
        StateInputError: unreadable file, malformed JSON or schema violation
        NormalizationError: denormalised state with strict=True
    """
    from ..states.circle_state import CircleState
    from ..utils.logging import log_error
    from .validation import validate_and_clean_state
    
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            raw_data = json.load(f)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as e:
        log_error(f"Failed to read state file {path}: {e}")
        raise StateInputError(f"Cannot read state file {path}: {e}") from e
    
    is_valid, cleaned_data, error_msg = validate_and_clean_state(raw_data)
    if not is_valid:
        log_error(f"State file {path} failed validation: {error_msg}")
        raise StateInputError(f"State file validation failed: {error_msg}")
    
    try:
        return CircleState.from_dict(cleaned_data, strict=strict)
    except NormalizationError:
        raise
    except ValueError as e:
        raise StateInputError(f"Invalid state in {path}: {e}") from e
