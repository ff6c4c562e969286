"""Cheeger constants and Cheeger sets of planar convex bodies.

Bodies are JSON objects (dicts or strings) in the same format the `cheeger`
executable reads, or catalog names. Results come back as parsed JSON.
"""

import json

from . import _cheeger

__all__ = [
    "CheegerError",
    "InvalidInput",
    "NumericFailure",
    "catalog",
    "catalog_names",
    "cheeger_constant",
    "oracle",
    "render",
    "solve",
    "symmetry",
]


class CheegerError(Exception):
    pass


class InvalidInput(CheegerError, ValueError):
    pass


class NumericFailure(CheegerError, RuntimeError):
    pass


def _call(command, body=None, *, name=None, params=None, allow=(0,), **opts):
    if body is not None and name is not None:
        raise InvalidInput("give either a body or a catalog name, not both")
    if isinstance(body, dict):
        body = json.dumps(body)
    kv = [f"{k}={v!r}" for k, v in (params or {}).items()]
    code, out, err = _cheeger.run(command, body, name, kv, **opts)
    # nonzero allowed codes still have to carry a JSON result
    if code in allow and (code == 0 or out):
        return code, out
    msg = err.strip()
    if code == 1:
        raise InvalidInput(msg)
    raise NumericFailure(msg)


def catalog_names():
    return list(_cheeger.catalog_names())


def catalog(name=None, **params):
    """Constraint JSON and boundary of a catalog shape; no name lists them."""
    _, out = _call("catalog", name=name, params=params)
    return json.loads(out)


def solve(body=None, *, name=None, params=None, tol=None):
    _, out = _call("solve", body, name=name, params=params, tol=tol)
    return json.loads(out)


def cheeger_constant(body=None, *, name=None, params=None, tol=None):
    return solve(body, name=name, params=params, tol=tol)["h"]


def symmetry(body=None, k=None, *, name=None, params=None, tol=None, contact_tol=None, sym_tol=None):
    """Symmetry report; a rejected k gives {"accepted": False, ...}."""
    if k is None:
        raise InvalidInput("k is required")
    _, out = _call("symmetry", body, name=name, params=params, allow=(0, 3), k=k, tol=tol,
                   contact_tol=contact_tol, sym_tol=sym_tol)
    return json.loads(out)


def oracle(body=None, *, name=None, params=None, grid=1024):
    """Raster estimate next to the exact value; check "rel_err" yourself."""
    _, out = _call("oracle", body, name=name, params=params, allow=(0, 2), grid=grid)
    return json.loads(out)


def render(body=None, k=None, *, name=None, params=None):
    """SVG text of the body, its Cheeger set and, with k, dots and witnesses."""
    _, out = _call("render", body, name=name, params=params, k=k)
    return out
