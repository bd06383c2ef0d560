"""Schema validation for state files"""
import math
from typing import Any, Dict, Optional

from ..constants import MAX_L_WINDOW


STATE_SCHEMA = {
    "type": "object",
    "required": ["l_min", "l_max", "coeffs"],
    "properties": {
        "l_min": {"type": "integer", "minimum": -MAX_L_WINDOW, "maximum": 0},
        "l_max": {"type": "integer", "minimum": 0, "maximum": MAX_L_WINDOW},
        "coeffs": {
            "type": "array",
            "items": {"type": "array"},
            "maxItems": 2 * MAX_L_WINDOW + 1  # Prevent resource exhaustion
        }
    },
    "additionalProperties": True
}


def _is_valid_type(value: Any, expected_type: str) -> bool:
    """Check if value matches expected JSON schema type"""
    if expected_type == "integer":
        return isinstance(value, int) and not isinstance(value, bool)
    if expected_type == "number":
        return isinstance(value, (int, float)) and not isinstance(value, bool)
    type_map = {
        "string": str,
        "array": list,
        "object": dict,
        "null": type(None)
    }
    if expected_type not in type_map:
        return True
    return isinstance(value, type_map[expected_type])


def validate_state_data(data: Dict[str, Any]) -> tuple[bool, Optional[str]]:
    """
    Validate state file data against STATE_SCHEMA.
    
    Args:
        data: Parsed JSON document
        
    Returns:
        Tuple of (is_valid, error_message); error_message is None when valid
    """
    if not isinstance(data, dict):
        return False, "State data must be a JSON object"
    
    missing_fields = [field for field in STATE_SCHEMA["required"] if field not in data]
    if missing_fields:
        return False, f"Missing required fields: {', '.join(missing_fields)}"
    
    properties = STATE_SCHEMA["properties"]
    for field_name, field_schema in properties.items():
        field_value = data[field_name]
        expected_type = field_schema["type"]
        if not _is_valid_type(field_value, expected_type):
            return False, f"Field '{field_name}' has invalid type. Expected {expected_type}, got {type(field_value).__name__}"
        
        if isinstance(field_value, int):
            if "minimum" in field_schema and field_value < field_schema["minimum"]:
                return False, f"Field '{field_name}' value {field_value} is below minimum {field_schema['minimum']}"
            if "maximum" in field_schema and field_value > field_schema["maximum"]:
                return False, f"Field '{field_name}' value {field_value} exceeds maximum {field_schema['maximum']}"
        
        if isinstance(field_value, list) and len(field_value) > field_schema.get("maxItems", math.inf):
            return False, f"Field '{field_name}' array length {len(field_value)} exceeds maximum {field_schema['maxItems']}"
    
    expected_count = data["l_max"] - data["l_min"] + 1
    if len(data["coeffs"]) != expected_count:
        return False, f"Expected {expected_count} coefficients for window [{data['l_min']}, {data['l_max']}], got {len(data['coeffs'])}"
    
    for index, pair in enumerate(data["coeffs"]):
        if not isinstance(pair, list) or len(pair) != 2:
            return False, f"Coefficient {index} must be a [re, im] pair"
        if not all(_is_valid_type(part, "number") and math.isfinite(part) for part in pair):
            return False, f"Coefficient {index} must hold two finite numbers"
    
    return True, None


def validate_and_clean_state(data: Dict[str, Any]) -> tuple[bool, Optional[Dict[str, Any]], Optional[str]]:
    """
    Validate state data and keep only the fields the loader uses.
    
    Returns:
        Tuple of (is_valid, cleaned_data, error_message)
    """
    is_valid, error = validate_state_data(data)
    if not is_valid:
        return False, None, error
    
    cleaned_data = {
        "l_min": data["l_min"],
        "l_max": data["l_max"],
        "coeffs": [[float(re), float(im)] for re, im in data["coeffs"]]
    }
    return True, cleaned_data, None
