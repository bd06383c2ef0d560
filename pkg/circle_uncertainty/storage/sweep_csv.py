"""CSV output for parameter sweeps"""
import csv
import io
import platform
from pathlib import Path

from ..constants import REPORT_DIGITS, SWEEP_CSV_HEADER


def format_cell(value) -> str:
    """Locale-independent text for one CSV cell"""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format(value, f'.{REPORT_DIGITS}g')
    return str(value)


def render_sweep_csv(rows) -> str:
    """Header plus one line per row; rows are sequences in SWEEP_CSV_HEADER order"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(SWEEP_CSV_HEADER)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])
    return buffer.getvalue()


def write_sweep_csv(rows, path) -> Path:
    """Write the sweep atomically as UTF-8 with LF line endings"""
    from ..utils.logging import log_error, log_info
    
    path = Path(path)
    temp_path = path.with_name(f'{path.name}.tmp')
    text = render_sweep_csv(rows)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(temp_path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        if platform.system() == 'Windows' and path.exists():
            path.unlink()
        temp_path.replace(path)
    except OSError as e:
        log_error(f"Failed to write sweep CSV {path}: {e}", exc_info=True)
        if temp_path.exists():
            temp_path.unlink()
        raise
    log_info(f"Wrote {text.count(chr(10)) - 1} sweep rows to {path}")
    return path
