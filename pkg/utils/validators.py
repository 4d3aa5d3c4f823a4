"""
Custom validators and annotated types shared by the pydantic schemas.
Path: utils/validators.py

Complex numbers cross every file boundary as ``[re, im]`` pairs. Plain
numbers and Python complex literals in strings (``"1+2j"``) are accepted on
input as well; output is always the pair form.
"""
import math
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer


def coerce_complex(value: Any) -> complex:
    """
    Convert a configuration value into a Python complex.

    Valid forms:
    - ``[re, im]`` / ``(re, im)`` pairs
    - ``{"re": .., "im": ..}`` mappings
    - ints, floats, complex
    - strings parseable by ``complex()`` (``"1-2j"``)

    Raises:
        ValueError: for any other shape, or for non-finite parts.
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not complex numbers")
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError("complex pairs must have exactly two entries [re, im]")
        result = complex(float(value[0]), float(value[1]))
    elif isinstance(value, dict):
        if set(value) - {"re", "im"}:
            raise ValueError("complex mappings only accept 're' and 'im' keys")
        result = complex(float(value.get("re", 0.0)), float(value.get("im", 0.0)))
    elif isinstance(value, (int, float, complex)):
        result = complex(value)
    elif isinstance(value, str):
        try:
            result = complex(value.replace(" ", ""))
        except ValueError as exc:
            raise ValueError(f"cannot parse complex number from {value!r}") from exc
    else:
        raise ValueError(f"unsupported complex value {value!r}")
    if not (math.isfinite(result.real) and math.isfinite(result.imag)):
        raise ValueError("complex values must be finite")
    return result


def complex_pair(value: complex) -> list[float]:
    """Serialize a complex number as ``[re, im]``."""
    return [float(value.real), float(value.imag)]


ComplexValue = Annotated[
    complex,
    BeforeValidator(coerce_complex),
    PlainSerializer(complex_pair, return_type=list[float]),
]
