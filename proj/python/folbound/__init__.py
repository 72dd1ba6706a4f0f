"""Exact resolution of plane branches and multiplicity bounds for foliations."""

import json

from . import _folbound
from ._folbound import FolboundError

__all__ = ["FolboundError", "analyze", "branch_summary", "corpus", "dot", "error_code", "generate"]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def analyze(document, truncation=None, configs=False):
    """Full report for an input document (dict or JSON text)."""
    return json.loads(_folbound.analyze(_text(document), truncation, configs))


def branch_summary(document):
    """Invariants and tower of the document's branch, plus the oracle comparison."""
    return json.loads(_folbound.branch_summary(_text(document)))


def dot(document):
    return _folbound.dot(_text(document))


def generate(family, *params, truncation=48):
    """Input document for monomial P Q, gamma N, two-pair N or sharp."""
    return json.loads(_folbound.generate(family, list(params), truncation))


def corpus():
    """The built-in corpus as input documents, each with a "name" field."""
    return [json.loads(d) for d in _folbound.corpus()]


def error_code(exc):
    return exc.args[0] if exc.args else None
