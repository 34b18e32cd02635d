"""Dynamic game semantics: terms, interpretation, hiding and the dynamic correspondence."""

import json

from . import _core
from ._core import DomainError, TermSyntaxError, TermTypeError, nf, run_cli, steps

__all__ = [
    "DomainError",
    "TermSyntaxError",
    "TermTypeError",
    "check",
    "nf",
    "plays",
    "run_cli",
    "steps",
    "trace",
    "verify_corpus",
    "verify_trace",
]


def _ctx(ctx):
    return list((ctx or {}).items())


def _bounds(bounds):
    return json.dumps(bounds) if bounds else ""


def check(term, ctx=None):
    """Type, execution number and class of a term."""
    return json.loads(_core.check(term, _ctx(ctx)))


def plays(term, ctx=None, hide=0, bounds=None):
    """Rendered plays of the interpretation; hide="omega" hides every internal move."""
    depth = -1 if hide == "omega" else int(hide)
    return _core.plays(term, _ctx(ctx), depth, _bounds(bounds))


def trace(term, ctx=None, ctx_answer=0, inputs=()):
    """One play against an Opponent answering context and argument questions."""
    return json.loads(_core.trace(term, _ctx(ctx), ctx_answer, list(inputs)))


def verify_trace(term, ctx=None, bounds=None):
    """Step-by-step dynamic correspondence report."""
    return json.loads(_core.verify_trace(term, _ctx(ctx), _bounds(bounds)))


def verify_corpus(seed=1, count=100, max_size=8, max_numeral=5):
    """Dynamic correspondence over a seeded corpus of closed programs."""
    return json.loads(_core.verify_corpus(seed, count, max_size, max_numeral))
