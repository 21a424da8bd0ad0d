"""JSON descriptions of groups, maps and crossed modules."""

from __future__ import annotations

import json
import os
from typing import Any

from .errors import ParseError
from .fp import todd_coxeter
from .perm import (GroupHom, Perm, PermGroup, cyclic_group, dihedral_group, symmetric_group)
from .words import Presentation, format_word, parse_word
from .xmod import CrossedModule, xmod_central_epi, xmod_identity, xmod_normal_inclusion

BUILDERS = {"cyclic": cyclic_group, "dihedral": dihedral_group, "symmetric": symmetric_group}


def load_json(path_or_text: str) -> Any:
    """Parse a file path, or inline JSON text."""
    try:
        if os.path.exists(path_or_text):
            with open(path_or_text, encoding="utf-8") as fh:
                return json.load(fh)
        if not path_or_text.lstrip().startswith(("{", "[")):
            raise ParseError(f"no such file: {path_or_text!r}")
        return json.loads(path_or_text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path_or_text!r}: {exc}") from None
    except OSError as exc:
        raise ParseError(str(exc)) from None


def parse_perm(data: Any, degree: int) -> Perm:
    """A permutation as a list of cycles, or as a flat image list."""
    try:
        if isinstance(data, list) and all(isinstance(v, int) for v in data) and len(data) == degree:
            return Perm(data)
        if isinstance(data, list) and all(isinstance(c, list) for c in data):
            return Perm.from_cycles(degree, data)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"cannot read permutation {data!r} of degree {degree}")


def parse_group(data: Any) -> PermGroup:
    if isinstance(data, str):
        if ":" in data:
            kind, _, arg = data.partition(":")
            if kind in BUILDERS:
                try:
                    return BUILDERS[kind](int(arg))
                except ValueError as exc:
                    raise ParseError(f"bad builder argument in {data!r}: {exc}") from None
        if os.path.exists(data):
            return parse_group(load_json(data))
        raise ParseError(f"unknown group description {data!r}")
    if not isinstance(data, dict):
        raise ParseError("group description must be a string or an object")
    if "relators" in data:
        pres = Presentation.from_json(data)
        G, _ = todd_coxeter(pres)
        return PermGroup(G.degree, G.generators, names=pres.generators, presentation=pres)
    try:
        degree = int(data["degree"])
        raw = data.get("generators", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad group description: {exc}") from None
    gens = [parse_perm(g, degree) for g in raw]
    names = data.get("names")
    if names is not None and (len(names) != len(gens) or len(set(names)) != len(names)):
        raise ParseError("names must be distinct, one per generator")
    return PermGroup(degree, gens, names=names)


def parse_element(data: Any, G: PermGroup) -> Perm:
    """A word in the generator names of ``G``, or an explicit permutation."""
    if isinstance(data, str):
        g = G.evaluate(parse_word(data, G.names))
    else:
        g = parse_perm(data, G.degree)
    if g not in G:
        raise ParseError(f"{data!r} is not an element of the group")
    return g


def parse_map(data: Any, source: PermGroup, target: PermGroup) -> GroupHom:
    """Generator images: a list, ``{"images": [...]}``, or a comma-separated word list."""
    if isinstance(data, dict):
        data = data.get("images")
    if isinstance(data, str):
        stripped = data.strip()
        if stripped.startswith("[") or stripped.startswith("{"):
            return parse_map(load_json(stripped), source, target)
        if os.path.exists(stripped):
            return parse_map(load_json(stripped), source, target)
        data = [w.strip() for w in stripped.split(",")] if stripped else []
    if not isinstance(data, list) or len(data) != len(source.generators):
        raise ParseError(f"expected {len(source.generators)} generator images")
    return GroupHom(source, target, [parse_element(x, target) for x in data])


def parse_xmod(data: Any) -> CrossedModule:
    if isinstance(data, str):
        data = load_json(data)
    if not isinstance(data, dict):
        raise ParseError("crossed module description must be an object")
    kind = data.get("kind")
    try:
        if kind == "identity":
            return xmod_identity(parse_group(data["P"]))
        if kind == "normal_inclusion":
            Q = parse_group(data["Q"])
            N = PermGroup(Q.degree, [parse_element(x, Q) for x in data["N"]])
            return xmod_normal_inclusion(Q, N)
        if kind == "central_epi":
            M, P = parse_group(data["M"]), parse_group(data["P"])
            return xmod_central_epi(parse_map(data["boundary"], M, P))
        if kind not in (None, "explicit"):
            raise ParseError(f"unknown crossed module kind {kind!r}")
        M, P = parse_group(data["M"]), parse_group(data["P"])
        boundary = parse_map(data["boundary"], M, P)
        action_data = data["action"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc}") from None
    if not isinstance(action_data, list) or len(action_data) != len(P.generators):
        raise ParseError("action needs one list of images per generator of P")
    action = [parse_map(imgs, M, M) for imgs in action_data]
    return CrossedModule(M, P, boundary, action)


# ---------------------------------------------------------------- output

def element_text(g: Perm, G: PermGroup) -> str:
    return format_word(G.word(g), G.names)


def group_summary(G: PermGroup) -> dict:
    from .perm import abelian_invariants

    return {
        "order": G.order,
        "abelian": G.is_abelian(),
        "abelian_invariants": list(abelian_invariants(G)),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
