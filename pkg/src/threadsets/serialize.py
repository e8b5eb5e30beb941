"""External formats: poset/tuple/family/form JSON, the text poset form, DOT.

All emitters are deterministic (element-index order throughout) so that
equal values serialize byte-identically; every parser rejects malformed
input with ParseError carrying line/column information where available.
"""

from __future__ import annotations

import json
from typing import Any

from .classify import PAYLOAD_KEYS, NormalForm
from .errors import ParseError
from .families import ChainFamily, family
from .poset import Poset, build_poset
from .tuples import SubsetTuple

RELATION_SEPARATOR = " < "


# -- posets

def poset_to_dict(P: Poset) -> dict:
    relations = [f"{P.elements[i]}{RELATION_SEPARATOR}{P.elements[j]}"
                 for i, j in P.covers]
    return {"elements": list(P.elements), "relations": relations}


def _split_relation(text: str, line: int | None = None) -> tuple[str, str]:
    pieces = text.split(RELATION_SEPARATOR)
    if len(pieces) != 2 or not pieces[0] or not pieces[1]:
        raise ParseError(
            f"relation {text!r} must be exactly 'lower{RELATION_SEPARATOR}upper'",
            line=line)
    return pieces[0], pieces[1]


def poset_from_dict(data: Any) -> Poset:
    if (not isinstance(data, dict) or not isinstance(data.get("elements"), list)
            or not isinstance(data.get("relations"), list)):
        raise ParseError("poset document needs 'elements' and 'relations' lists")
    for e in data["elements"]:
        if not isinstance(e, str):
            raise ParseError(f"element {e!r} is not a string")
    relations = []
    for rel in data["relations"]:
        if not isinstance(rel, str):
            raise ParseError(f"relation {rel!r} is not a string")
        relations.append(_split_relation(rel))
    return build_poset(data["elements"], relations)


def poset_to_text(P: Poset) -> str:
    lines = list(P.elements)
    lines += [f"{P.elements[i]}{RELATION_SEPARATOR}{P.elements[j]}"
              for i, j in P.covers]
    return "\n".join(lines) + "\n"


def poset_from_text(text: str) -> Poset:
    """Line-oriented form: an element or a relation per line, '#' comments.

    Elements may be introduced implicitly by relations; the element order
    is the order of first appearance.
    """
    elements: list[str] = []
    seen: set[str] = set()

    def note(e: str) -> None:
        if e not in seen:
            seen.add(e)
            elements.append(e)

    relations: list[tuple[str, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if RELATION_SEPARATOR in stripped or "<" in stripped:
            lo, hi = _split_relation(stripped, line=number)
            note(lo)
            note(hi)
            relations.append((lo, hi))
        else:
            note(stripped)
    return build_poset(elements, relations)


def poset_to_dot(P: Poset) -> str:
    lines = ["digraph poset {"]
    for e in P.elements:
        lines.append(f'  "{e}";')
    for i, j in P.covers:
        lines.append(f'  "{P.elements[i]}" -> "{P.elements[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- subset tuples

def tuple_to_lists(P: Poset, parts: SubsetTuple) -> list[list[str]]:
    return [list(P.labels(part)) for part in parts]


def tuple_from_lists(P: Poset, data: Any) -> SubsetTuple:
    if not isinstance(data, list) or not data:
        raise ParseError("a subset tuple is a non-empty array of arrays")
    parts = []
    for part in data:
        if not isinstance(part, list):
            raise ParseError(f"tuple part {part!r} is not an array")
        if len(set(part)) != len(part):
            raise ParseError(f"tuple part {part!r} repeats an element")
        parts.append(P.subset(part))
    return tuple(parts)


# -- chain families

def family_to_dict(P: Poset, F: ChainFamily) -> dict:
    return {"generators": [list(P.labels(g)) for g in F.sorted_generators()]}


def family_from_dict(P: Poset, data: Any) -> ChainFamily:
    if not isinstance(data, dict) or not isinstance(data.get("generators"), list):
        raise ParseError("a chain family document needs a 'generators' array")
    gens = []
    for g in data["generators"]:
        if not isinstance(g, list) or not g:
            raise ParseError(f"generator {g!r} is not a non-empty array")
        gens.append(P.subset(g))
    return family(P, gens)


# -- normal forms

def form_to_dict(P: Poset, nf: NormalForm) -> dict:
    if nf.tag == "Unresolved":
        return {"form": "Unresolved",
                "canonical": tuple_to_lists(P, nf.payload)}
    out: dict[str, Any] = {"form": nf.tag}
    for key, mask in zip(PAYLOAD_KEYS[nf.tag], nf.payload):
        out[key] = list(P.labels(mask))
    return out


def form_from_dict(P: Poset, data: Any) -> NormalForm:
    if not isinstance(data, dict) or "form" not in data:
        raise ParseError("a normal form document needs a 'form' tag")
    tag = data["form"]
    if tag == "Unresolved":
        return NormalForm("Unresolved", tuple_from_lists(P, data.get("canonical")))
    if tag not in PAYLOAD_KEYS:
        raise ParseError(f"unknown form tag {tag!r}")
    payload = []
    for key in PAYLOAD_KEYS[tag]:
        part = data.get(key)
        if not isinstance(part, list):
            raise ParseError(f"form {tag} needs the subset field {key!r}")
        payload.append(P.subset(part))
    return NormalForm(tag, tuple(payload))


# -- shared helpers

def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None


def load_poset(text: str) -> Poset:
    """Parse a poset from JSON or the line-oriented text form (sniffed)."""
    if text.lstrip().startswith("{"):
        return poset_from_dict(loads(text))
    return poset_from_text(text)
