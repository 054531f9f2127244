"""JSON instance and design files.

Indices are 0-based everywhere.  Field elements are integers: the residue for
prime fields, otherwise sum(c_i * p**i) over the coefficient vector reduced by
the modulus stored in the header.

Instance file::

    {"schema_version": 1, "n": 4, "k": 2, "zero_sets": [[0, 1], [2]]}

or, for block queries, ``{"schema_version": 1, "n": 2, "k": 2,
"blocks": [{"set": [0], "r": 1}, {"set": [1], "r": 1}]}``.
"""

from __future__ import annotations

import json

from .constraints import ConstraintInstance, GeneralInstance
from .designer import CodeDesign
from .field import FieldContext

SCHEMA_VERSION = 1


class FormatError(ValueError):
    pass


class MismatchError(ValueError):
    """Design and instance files do not describe the same problem."""


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _read(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON ({exc})") from exc


def _int_list(value, what):
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool)
                                              for v in value):
        raise FormatError(f"{what} must be a list of integers")
    return value


def instance_to_json(inst):
    return {"schema_version": SCHEMA_VERSION, "n": inst.n, "k": inst.k,
            "zero_sets": [sorted(s) for s in inst.sets]}


def general_to_json(inst):
    return {"schema_version": SCHEMA_VERSION, "n": inst.n, "k": inst.k,
            "blocks": [{"set": sorted(s), "r": r} for s, r in inst.blocks]}


def parse_instance(data):
    if not isinstance(data, dict) or "zero_sets" not in data:
        raise FormatError("instance needs 'n' and 'zero_sets'")
    try:
        sets = [_int_list(s, "zero_sets entry") for s in data["zero_sets"]]
        k = data.get("k", len(sets))
        if k != len(sets):
            raise FormatError(f"k = {k} but {len(sets)} zero sets given")
        return ConstraintInstance.from_lists(int(data["n"]), sets)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid instance: {exc}") from exc


def parse_general(data):
    """Block form, or zero_sets read as blocks (S_i, 1)."""
    if not isinstance(data, dict):
        raise FormatError("instance must be a JSON object")
    try:
        if "blocks" in data:
            blocks = [(_int_list(b["set"], "block set"), int(b["r"])) for b in data["blocks"]]
        elif "zero_sets" in data:
            blocks = [(_int_list(s, "zero_sets entry"), 1) for s in data["zero_sets"]]
        else:
            raise FormatError("instance needs 'blocks' or 'zero_sets'")
        k = sum(r for _, r in blocks)
        if data.get("k", k) != k:
            raise FormatError(f"k = {data['k']} but the block sizes sum to {k}")
        return GeneralInstance(k=k, n=int(data["n"]), blocks=tuple(blocks))
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid block instance: {exc}") from exc


def load_instance(path):
    return parse_instance(_read(path))


def load_general(path):
    return parse_general(_read(path))


def design_to_json(des, seed=None):
    ctx = des.ctx
    out = {
        "schema_version": SCHEMA_VERSION,
        "field": {"q": ctx.q, "p": ctx.p, "m": ctx.m, "modulus": list(ctx.modulus)},
        "n": des.n, "k": des.k, "ell": des.ell, "d": des.d,
        "zero_sets": [sorted(s) for s in des.instance.sets],
        "alphas": list(des.alphas),
        "eval_points": list(des.eval_points),
        "aux_roots": [list(a) for a in des.aux_roots],
        "T_full": [list(r) for r in des.T_full],
        "T": [list(r) for r in des.T],
        "G": [list(r) for r in des.G],
        "search": dict(des.stats),
    }
    if seed is not None:
        out["seed"] = seed
    return out


def parse_design(data):
    """Rebuild a CodeDesign; returns it with the G stored in the file.

    The stored G is returned separately and left untouched so verification
    audits exactly what was written.
    """
    try:
        f = data["field"]
        ctx = FieldContext(int(f["p"]), int(f["m"]), f["modulus"] if int(f["m"]) > 1 else None)
        if ctx.q != f["q"]:
            raise FormatError(f"field header q = {f['q']} disagrees with p^m = {ctx.q}")
        inst = ConstraintInstance.from_lists(int(data["n"]), data["zero_sets"])
        des = CodeDesign(
            ctx=ctx, instance=inst, n=inst.n, k=inst.k, ell=int(data["ell"]), d=int(data["d"]),
            alphas=tuple(ctx.check(a) for a in _int_list(data["alphas"], "alphas")),
            aux_roots=tuple(tuple(_int_list(a, "aux_roots entry")) for a in data["aux_roots"]),
            T_full=tuple(tuple(_int_list(r, "T_full row")) for r in data["T_full"]),
            stats=dict(data.get("search", {})),
        )
        stored_g = [list(_int_list(r, "G row")) for r in data["G"]]
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid design file: {exc}") from exc
    if len(des.T_full) != des.ell or any(len(r) != des.ell for r in des.T_full):
        raise MismatchError("T_full is not ell x ell")
    if len(stored_g) != des.k or any(len(r) != des.n for r in stored_g):
        raise MismatchError("G is not k x n")
    if any(not 0 <= v < ctx.q for row in stored_g for v in row):
        raise MismatchError("G has entries outside the field")
    return des, stored_g


def load_design(path):
    return parse_design(_read(path))
