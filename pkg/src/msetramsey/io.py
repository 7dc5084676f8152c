"""JSON file formats for monoids, M-sets, chains, forests and colorings.

Formats:
  monoid: { "size": n, "identity": i, "table": [[...]], "well_order": [...]? }
  mset:   { "monoid": <monoid object or path string>, "carrier": [...],
            "action": [[...]], "order": [...]? }
  unary algebra: { "alphabet": [...], "carrier": [...]?,
                   "generator_actions": { "f": [...] }, "order": [...]? }
  chain:  [label, label, ...]
  forest: { "carrier": [...], "parent": {label: label}, "order": [...]? }
  coloring: [int, int, ...]

Labels read from JSON are used as-is (JSON scalars); every loader routes
through the corresponding validator so malformed files surface the same
witness-carrying errors as programmatic construction.
"""

import hashlib
import json
import os

from .chains import Chain
from .errors import InputError
from .forests import make_forest
from .monoid import validate_monoid
from .mset import UnaryAlgebra, validate_mset


def file_sha256(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _require(data, field, where):
    if not isinstance(data, dict) or field not in data:
        raise InputError(f"{where}: missing field {field!r}")
    return data[field]


def monoid_from_json(data, where="monoid"):
    if isinstance(data, str):
        return monoid_from_json(load_json(data), where=data)
    size = _require(data, "size", where)
    table = _require(data, "table", where)
    identity = _require(data, "identity", where)
    return validate_monoid(size, table, identity, data.get("well_order"))


def load_monoid(path):
    return monoid_from_json(load_json(path), where=path)


def mset_from_json(data, where="mset", base_dir="."):
    monoid = _require(data, "monoid", where)
    if isinstance(monoid, str):
        monoid = os.path.join(base_dir, monoid)
    monoid = monoid_from_json(monoid, where=f"{where}.monoid")
    carrier = tuple(_require(data, "carrier", where))
    action = _require(data, "action", where)
    order = data.get("order")
    return validate_mset(monoid, carrier, action,
                         tuple(order) if order is not None else None)


def load_mset(path):
    return mset_from_json(load_json(path), where=path,
                          base_dir=os.path.dirname(path) or ".")


def unary_algebra_from_json(data, where="unary algebra"):
    alphabet = tuple(_require(data, "alphabet", where))
    actions = {s: tuple(row) for s, row in
               _require(data, "generator_actions", where).items()}
    if not actions:
        raise InputError(f"{where}: no generator actions")
    carrier = data.get("carrier")
    if carrier is None:
        carrier = list(range(len(next(iter(actions.values())))))
    return UnaryAlgebra(alphabet, tuple(carrier), actions)


def load_unary_algebra(path):
    return unary_algebra_from_json(load_json(path), where=path)


def chain_from_json(data, where="chain"):
    if not isinstance(data, list):
        raise InputError(f"{where}: a chain file is a JSON array")
    return Chain(tuple(tuple(x) if isinstance(x, list) else x for x in data))


def load_chain(path):
    return chain_from_json(load_json(path), where=path)


def forest_from_json(data, where="forest"):
    carrier = tuple(_require(data, "carrier", where))
    parent_map = _require(data, "parent", where)
    index = {str(x): i for i, x in enumerate(carrier)}
    parent = []
    for x in carrier:
        key = str(x)
        if key not in parent_map:
            raise InputError(f"{where}: no parent for element {x!r}")
        parent.append(index[str(parent_map[key])])
    order = data.get("order")
    if order is not None:
        order = tuple(carrier.index(lab) for lab in order)
    return make_forest(carrier, parent, order)


def load_forest(path):
    return forest_from_json(load_json(path), where=path)


def load_coloring(path):
    data = load_json(path)
    if not isinstance(data, list) or \
            any(not isinstance(c, int) for c in data):
        raise InputError(f"{path}: a coloring file is a JSON array of ints")
    return tuple(data)


def dump_report(report, out=None):
    """Serialize a report deterministically (sorted keys, fixed layout)."""
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out is None:
        print(text, end="")
    else:
        with open(out, "w") as fh:
            fh.write(text)
    return text
