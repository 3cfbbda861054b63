import re
from typing import Optional, Tuple, Union

NON_INTEGRAL = "nonintegral"

# every enumeration stays exact and fast below this rank
MAX_RANK = 10


def validate_rank(value, name: str = "n", allow_zero: bool = True) -> Tuple[bool, Optional[int], str]:
    """
    Validates a rank such as n or n_max.

    Args:
        value: The raw value (string from a widget or flag, or an int)
        name (str): Parameter name used in the error message
        allow_zero (bool): Whether 0 is accepted

    Returns:
        tuple: (is_valid, parsed_value, error_message)
    """
    if value is None or str(value).strip() == "":
        return False, None, f"{name} cannot be empty"

    text = str(value).strip()
    if not re.match(r'^[0-9]+$', text):
        return False, None, f"{name} must be a nonnegative integer, got {text!r}"

    parsed = int(text)
    if parsed == 0 and not allow_zero:
        return False, parsed, f"{name} must be positive"
    if parsed > MAX_RANK:
        return False, parsed, f"{name}={parsed} is above the supported maximum {MAX_RANK}"

    return True, parsed, ""


def validate_ratio(value, allow_nonintegral: bool = True) -> Tuple[bool, Optional[Union[int, str]], str]:
    """
    Validates the weight ratio r: a positive integer, or the literal
    "nonintegral" when every non-integral ratio is meant.

    Args:
        value: The raw value
        allow_nonintegral (bool): Whether the non-integral marker is accepted

    Returns:
        tuple: (is_valid, parsed_value, error_message)
    """
    if value is None or str(value).strip() == "":
        return False, None, "r cannot be empty"

    text = str(value).strip()
    if text.lower().replace("-", "").replace("_", "") == NON_INTEGRAL:
        if not allow_nonintegral:
            return False, NON_INTEGRAL, "r must be an integer here"
        return True, NON_INTEGRAL, ""

    if not re.match(r'^[0-9]+$', text):
        return False, None, f"r must be a positive integer or '{NON_INTEGRAL}', got {value!r}"

    parsed = int(text)
    if parsed < 1:
        return False, parsed, "r must be positive"

    return True, parsed, ""
