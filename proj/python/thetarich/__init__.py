"""Θ-palindromes, Θ-defect, Rauzy graphs and rich-word decompositions.

Words are plain strings (one letter per character) unless ``tokens=True``,
in which case letters are whitespace-separated. Antimorphisms use the same
specs as the command-line tool: ``"reversal"``, ``"pairs:a-b,c-c"`` or a
path to a JSON file.
"""

import json as _json

from ._core import (
    REPORT_SCHEMA,
    InputError,
    PreconditionError,
    __version__,
    apply_antimorphism,
    closure,
    complexity_table,
    defect,
    defect_profile,
    gamma,
    generate,
    is_theta_palindrome,
    palindrome_count,
    rauzy,
)
from . import _core


def analyze(word, theta="reversal", max_n=0, seed=0, tokens=False):
    """Analysis report as a dict."""
    return _json.loads(_core.analyze(word, theta, max_n, seed, tokens))


def decompose(word, method="return", theta="reversal", **kwargs):
    """Decomposition report as a dict; ``method`` is path, return or theorem3."""
    return _json.loads(_core.decompose(word, method, theta, **kwargs))


__all__ = [
    "REPORT_SCHEMA",
    "InputError",
    "PreconditionError",
    "__version__",
    "analyze",
    "apply_antimorphism",
    "closure",
    "complexity_table",
    "decompose",
    "defect",
    "defect_profile",
    "gamma",
    "generate",
    "is_theta_palindrome",
    "palindrome_count",
    "rauzy",
]
