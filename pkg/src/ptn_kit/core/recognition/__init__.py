"""PTN recognition and the explaining-labeling checks."""

from ptn_kit.core.recognition.explains import ExplainsResult, Violation, explains_check
from ptn_kit.core.recognition.forbidden import ForbiddenSet, forbidden
from ptn_kit.core.recognition.recognizer import (
    RecognitionResult,
    Refutation,
    explain_character,
    is_ptn,
    recognize,
)

__all__ = [
    "ExplainsResult",
    "Violation",
    "explains_check",
    "ForbiddenSet",
    "forbidden",
    "RecognitionResult",
    "Refutation",
    "explain_character",
    "is_ptn",
    "recognize",
]
