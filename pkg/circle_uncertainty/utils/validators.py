"""Validation of command-line values and builtin state specs"""
import math
import re

BUILTIN_FAMILIES = {
    'von-mises': ('k', 'l', 'a'),
    'x-extremal': ('k', 'l', 'a'),
    'cat': ('k',),
}
INTEGER_KEYS = {'l'}


def sanitize_input(user_input: str) -> str:
    """Strip control characters and surrounding whitespace"""
    if not isinstance(user_input, str):
        return ""
    return re.sub(r'[\x00-\x08\x0B-\x0C\x0E-\x1F\x7F]', '', user_input).strip()


def validate_integer_input(value, min_value=None, max_value=None, default=None):
    """
    Validate integer input with optional bounds.
    
    Returns:
        (is_valid, result_value, error_message)
    """
    try:
        num = int(str(value).strip())
    except ValueError:
        return (False, default, f"'{value}' is not a valid integer")
    
    if min_value is not None and num < min_value:
        return (False, default, f"Value must be at least {min_value}")
    if max_value is not None and num > max_value:
        return (False, default, f"Value cannot exceed {max_value}")
    return (True, num, None)


def validate_real_input(value, min_value=None, max_value=None, default=None):
    """
    Validate a finite real number with optional inclusive bounds.
    
    Returns:
        (is_valid, result_value, error_message)
    """
    try:
        num = float(str(value).strip())
    except ValueError:
        return (False, default, f"'{value}' is not a valid number")
    
    if not math.isfinite(num):
        return (False, default, "Value must be finite")
    if min_value is not None and num < min_value:
        return (False, default, f"Value must be at least {min_value}")
    if max_value is not None and num > max_value:
        return (False, default, f"Value cannot exceed {max_value}")
    return (True, num, None)


def parse_builtin_spec(text: str):
    """
    Parse `von-mises:k=<real>,l=<int>,a=<real>`, `cat:k=<real>`,
    `l-eigenstate:<int>` or `x-extremal:k=<real>,l=<int>,a=<real>`.
    
    Missing l and a default to 0.
    
    Returns:
        (is_valid, (family, params), error_message)
    """
    text = sanitize_input(text)
    family, sep, body = text.partition(':')
    family = family.strip().lower()
    if not sep:
        return (False, None, f"Builtin spec '{text}' needs the form <family>:<parameters>")
    
    if family == 'l-eigenstate':
        is_valid, l, error = validate_integer_input(body)
        if not is_valid:
            return (False, None, f"l-eigenstate: {error}")
        return (True, (family, {'l': l}), None)
    
    if family not in BUILTIN_FAMILIES:
        return (False, None, f"Unknown state family '{family}'")
    
    allowed = BUILTIN_FAMILIES[family]
    params = {}
    for item in filter(None, (part.strip() for part in body.split(','))):
        key, eq, raw = item.partition('=')
        key = key.strip().lower()
        if not eq or key not in allowed:
            return (False, None, f"{family}: unexpected parameter '{item}' (allowed: {', '.join(allowed)})")
        if key in params:
            return (False, None, f"{family}: parameter '{key}' given twice")
        validator = validate_integer_input if key in INTEGER_KEYS else validate_real_input
        is_valid, number, error = validator(raw)
        if not is_valid:
            return (False, None, f"{family}: {key}: {error}")
        params[key] = number
    
    if 'k' not in params:
        return (False, None, f"{family}: missing k=<real>")
    for key in allowed:
        params.setdefault(key, 0 if key in INTEGER_KEYS else 0.0)
    return (True, (family, params), None)
