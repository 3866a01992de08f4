"""Jets, the differential group action and its invariants.

Documents are plain dicts in the same JSON layout the command line tool reads
and writes. Results come back as dicts.
"""

import json

from ._jetinv import DomainError, JetinvError, ParseError
from ._jetinv import run as _run
from ._jetinv import selftest as _selftest

__all__ = [
    "DomainError",
    "JetinvError",
    "ParseError",
    "act",
    "compose",
    "dim",
    "invariants",
    "invert",
    "orbit_check",
    "prolong",
    "random",
    "selftest",
    "transform",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _call(command, docs, **options):
    return json.loads(_run(command, [_text(d) for d in docs], options))


def invariants(velocity, chart=None, scalar=None, tol=None):
    return _call("invariants", [velocity], chart=chart, scalar=scalar, tol=tol)


def compose(a, b, scalar=None, tol=None):
    return _call("compose", [a, b], scalar=scalar, tol=tol)


def invert(a, scalar=None, tol=None):
    return _call("invert", [a], scalar=scalar, tol=tol)


def act(velocity, group, scalar=None, tol=None):
    return _call("act", [velocity, group], scalar=scalar, tol=tol)


def orbit_check(u, v, scalar=None, tol=None):
    return _call("orbit-check", [u, v], scalar=scalar, tol=tol)


def transform(chart, target, target_chart=None, scalar=None, tol=None):
    return _call("transform", [chart, target], chart=target_chart, scalar=scalar, tol=tol)


def prolong(polynomial_map, order, at=None, scalar=None):
    point = None if at is None else [str(x) for x in at]
    return _call("prolong", [polynomial_map], order=order, at=point, scalar=scalar)


def random(kind="velocity", n=1, m=1, r=2, seed=None, scalar=None):
    return _call("random", [], kind=kind, n=n, m=m, r=r, seed=seed, scalar=scalar)


def dim(n, m, r):
    return _call("dim", [], n=n, m=m, r=r)


def selftest(seed=None):
    return _selftest(seed)
