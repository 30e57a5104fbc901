"""JSON lattice documents, custom family files, and DOT export."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import Lattice, build_lattice
from .errors import LatticeError
from .filters import FilterFamily, custom_family


class DocumentError(LatticeError):
    pass


@dataclass(frozen=True)
class LatticeDocument:
    elements: tuple
    covers: tuple

    @classmethod
    def from_json(cls, data) -> "LatticeDocument":
        if not isinstance(data, dict) or "elements" not in data or "covers" not in data:
            raise DocumentError('lattice document needs "elements" and "covers" keys')
        elements, covers = data["elements"], data["covers"]
        if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
            raise DocumentError('"elements" must be a list of strings')
        if not isinstance(covers, list) or not all(
            isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c) for c in covers
        ):
            raise DocumentError('"covers" must be a list of [lower, upper] name pairs')
        return cls(tuple(elements), tuple(tuple(c) for c in covers))

    @classmethod
    def from_lattice(cls, L: Lattice) -> "LatticeDocument":
        covers = sorted(L.covers)
        return cls(L.names, tuple((L.names[a], L.names[b]) for a, b in covers))

    def to_lattice(self) -> Lattice:
        return build_lattice(list(self.elements), list(self.covers))

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"


def canonical_dumps(L: Lattice) -> str:
    """Serialize a lattice with covers reduced to the Hasse diagram."""
    return LatticeDocument.from_lattice(L).dumps()


def _read_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise DocumentError(f"{path} is not valid UTF-8 JSON: {exc}") from None


def load_document(path) -> LatticeDocument:
    return LatticeDocument.from_json(_read_json(path))


def load_lattice(path) -> Lattice:
    return load_document(path).to_lattice()


def load_family(L: Lattice, path) -> FilterFamily:
    """Read a custom family: a JSON list of element-name lists."""
    data = _read_json(path)
    if not isinstance(data, list) or not all(isinstance(s, list) for s in data):
        raise DocumentError("custom family must be a list of element-name lists")
    return custom_family(L, [[L.index(str(x)) for x in s] for s in data])


def family_to_json(F: FilterFamily) -> list:
    return [f.names() for f in F]


def to_dot(L: Lattice, name: str = "lattice") -> str:
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
    for a in L.elements:
        lines.append(f"  n{a} [label={json.dumps(L.names[a], ensure_ascii=False)}];")
    for lo, hi in L.covers:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
