"""Canonical JSON reports.

All CLI output is deterministic: keys sorted, rationals rendered as p/q
strings, no timestamps or timing fields, trailing newline.  The same
input therefore always produces byte-identical output.
"""

import json
from fractions import Fraction

from .fileio import rational_to_string


def jsonable(obj):
    """Recursively convert report data into JSON-safe values."""
    if isinstance(obj, Fraction):
        return rational_to_string(obj)
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = list(obj)
        if isinstance(obj, (set, frozenset)):
            items = sorted(items, key=repr)
        return [jsonable(v) for v in items]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        return obj
    return repr(obj)


def _key(k):
    if isinstance(k, str):
        return k
    if isinstance(k, bool):
        return "true" if k else "false"
    if isinstance(k, int):
        return str(k)
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return repr(k)


def canonical_json(obj):
    return json.dumps(jsonable(obj), sort_keys=True, indent=2,
                      ensure_ascii=True) + "\n"


def vector_doc(vec):
    """{index: Fraction} -> {"i": "p/q"} with sorted integer keys."""
    return {str(k): rational_to_string(v) for k, v in sorted(vec.items())}
