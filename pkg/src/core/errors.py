"""
Error types for the operad characteristic workbench

Every error raised on invalid input derives from ``WorkbenchError`` and from
``ValueError``, so callers may catch either.
"""
from typing import Optional, Sequence, Union


class WorkbenchError(Exception):
    """Base class of all workbench errors"""


class TruncationError(WorkbenchError, ValueError):
    """A value or result does not fit the declared truncation window"""


class PreconditionError(WorkbenchError, ValueError):
    """An operation was called outside its documented domain"""


class GraphValidationError(WorkbenchError, ValueError):
    """
    Raised by graph construction and contraction

    The ``code`` attribute names the violated condition so that callers can
    react without parsing the message.
    """

    CODES = (
        "non_involutive",
        "disconnected",
        "unstable",
        "leg_labels",
        "vertex_index",
        "genus",
        "not_an_edge",
    )

    def __init__(self, code: str, message: str):
        if code not in self.CODES:
            raise ValueError(f"Unknown graph validation code: {code}")
        super().__init__(f"[{code}] {message}")
        self.code = code


class SerializationError(WorkbenchError, ValueError):
    """A document failed schema validation or could not be decoded"""

    def __init__(self, message: str, path: Optional[Sequence[Union[str, int]]] = None):
        self.path = list(path) if path is not None else []
        location = "/".join(str(part) for part in self.path) or "<root>"
        super().__init__(f"{location}: {message}")
