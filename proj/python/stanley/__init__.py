"""Python access to the stanley library.

Instances may be given as JSON text, the line format, or a dict in the JSON
layout. Every function returns decoded JSON.
"""

import json

from . import _core
from ._core import ParseError, SweepError

__all__ = [
    "ParseError",
    "SweepError",
    "analyze",
    "classify",
    "closure",
    "counts",
    "evaluate",
    "extensions",
    "extreme_dirs",
    "range_profile",
    "split",
    "sweep",
]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def counts(instance):
    return json.loads(_core.counts(_text(instance)))["counts"]


def extensions(instance, variant=None):
    return json.loads(_core.extensions(_text(instance), variant))


def classify(instance):
    return json.loads(_core.classify(_text(instance)))


def closure(instance):
    return json.loads(_core.closure(_text(instance)))


def split(instance, r, s):
    return json.loads(_core.split(_text(instance), r, s))


def range_profile(instance):
    return json.loads(_core.range_profile(_text(instance)))


def extreme_dirs(instance):
    return json.loads(_core.extreme_dirs(_text(instance)))


def analyze(instance, closure=True):
    return json.loads(_core.analyze(_text(instance), closure))


def evaluate(instance, checks="all", closure=True):
    return json.loads(_core.evaluate(_text(instance), checks, closure))


def sweep(**kwargs):
    """Run a sweep in-process; returns {"findings": [...], "summary": {...}}."""
    return json.loads(_core.sweep(**kwargs))
