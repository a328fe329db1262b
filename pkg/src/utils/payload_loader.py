import json
import sys
from typing import Any

from ..errors import PayloadError


def load_payload(path: str = "-") -> Any:
    """Load a JSON payload from a file, or from standard input when path is '-'"""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as handle:
                text = handle.read()
        return json.loads(text)
    except FileNotFoundError:
        raise PayloadError(f"Payload file not found: {path}")
    except json.JSONDecodeError as e:
        raise PayloadError(f"Malformed JSON payload in {path}: {str(e)}")
    except OSError as e:
        raise PayloadError(f"Error loading payload {path}: {str(e)}")


def require_list(payload: Any, name: str = "payload") -> list:
    """Payload must be a JSON array"""
    if not isinstance(payload, list):
        raise PayloadError(f"Expected {name} to be an array, got {type(payload).__name__}")
    return payload


def require_object(payload: Any, name: str = "payload") -> dict:
    """Payload must be a JSON object"""
    if not isinstance(payload, dict):
        raise PayloadError(f"Expected {name} to be an object, got {type(payload).__name__}")
    return payload
