"""Utility functions"""
from .validators import parse_builtin_spec, sanitize_input, validate_integer_input, validate_real_input

__all__ = [
    'parse_builtin_spec',
    'sanitize_input',
    'validate_integer_input',
    'validate_real_input'
]
