"""Plain-text poset files and the emit formats.

Grammar, one statement per line: ``a < b`` declares a cover pair (a
covered by b), a bare identifier declares an isolated point, ``@base x``
names a basepoint, ``#`` starts a comment.  Identifiers match
[A-Za-z0-9_]+ and labels are created in order of first appearance.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass

from .errors import DuplicateCoverError, ParseError
from .order_complex import faces_text, order_complex
from .poset import FinitePoset, HasseDiagram

_IDENT = re.compile(r"[A-Za-z0-9_]+$")

FORMATS = ("poset", "json", "dot", "faces")


@dataclass(frozen=True)
class PosetDocument:
    """Parsed poset file: labels, cover pairs (as indices) and basepoint."""

    labels: tuple[str, ...]
    covers: tuple[tuple[int, int], ...]
    base: int | None = None

    def to_hasse(self) -> HasseDiagram:
        return HasseDiagram(len(self.labels), frozenset(self.covers), self.labels)

    def to_poset(self) -> FinitePoset:
        return FinitePoset.from_covers(self.to_hasse())


def parse_poset(text: str) -> PosetDocument:
    """Parse poset text; raises ParseError (with line number) or CycleError.

    Duplicate cover declarations warn (DuplicateCoverError) and are
    dropped.  A ``@base`` point must be declared by some other statement.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    covers: list[tuple[int, int]] = []
    seen_covers = set()
    base_name = None
    base_line = None

    def intern(name: str, lineno: int) -> int:
        if not _IDENT.match(name):
            raise ParseError(lineno, f"bad identifier {name!r}")
        if name not in index:
            index[name] = len(labels)
            labels.append(name)
        return index[name]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@"):
            parts = line.split()
            if parts[0] != "@base" or len(parts) != 2:
                raise ParseError(lineno, f"unknown directive {line!r}")
            base_name, base_line = parts[1], lineno
            continue
        if "<" in line:
            sides = [s.strip() for s in line.split("<")]
            if len(sides) != 2 or not sides[0] or not sides[1]:
                raise ParseError(lineno, f"expected 'a < b', got {line!r}")
            x = intern(sides[0], lineno)
            y = intern(sides[1], lineno)
            if x == y:
                raise ParseError(lineno, f"{sides[0]!r} cannot cover itself")
            if (x, y) in seen_covers:
                warnings.warn(
                    f"line {lineno}: duplicate cover {sides[0]} < {sides[1]}",
                    DuplicateCoverError,
                    stacklevel=2,
                )
                continue
            seen_covers.add((x, y))
            covers.append((x, y))
            continue
        if len(line.split()) != 1:
            raise ParseError(lineno, f"cannot parse {line!r}")
        intern(line, lineno)

    if not labels:
        raise ParseError(1, "no points declared")
    base = None
    if base_name is not None:
        if base_name not in index:
            raise ParseError(base_line, f"basepoint {base_name!r} never declared")
        base = index[base_name]
    doc = PosetDocument(tuple(labels), tuple(covers), base)
    doc.to_poset()  # validates acyclicity now, with no file context lost
    return doc


def _emittable_label(p: FinitePoset, x: int) -> str:
    name = p.label(x)
    if not _IDENT.match(name):
        raise ValueError(f"label {name!r} cannot appear in a poset file")
    return name


def emit(p: FinitePoset, format: str = "poset", base: int | None = None) -> str:
    """Render a poset as text: poset file, json, graphviz dot, or the
    order-complex face list.  Output ordering is deterministic."""
    if format == "poset":
        return _emit_poset(p, base)
    if format == "json":
        return _emit_json(p, base)
    if format == "dot":
        return _emit_dot(p)
    if format == "faces":
        return faces_text(order_complex(p))
    raise ValueError(f"unknown format {format!r}; pick one of {', '.join(FORMATS)}")


def _emit_poset(p: FinitePoset, base: int | None) -> str:
    covers = sorted(p.hasse().covers)
    touched = {v for pair in covers for v in pair}
    lines = [_emittable_label(p, x) for x in range(p.n) if x not in touched]
    lines += [f"{_emittable_label(p, x)} < {_emittable_label(p, y)}" for x, y in covers]
    if base is not None:
        lines.append(f"@base {_emittable_label(p, base)}")
    return "\n".join(lines) + "\n"


def _emit_json(p: FinitePoset, base: int | None) -> str:
    doc = {
        "labels": [p.label(x) for x in range(p.n)],
        "covers": [[p.label(x), p.label(y)] for x, y in sorted(p.hasse().covers)],
        "base": p.label(base) if base is not None else None,
    }
    return json.dumps(doc, indent=2) + "\n"


def _emit_dot(p: FinitePoset) -> str:
    """Hasse diagram with lower elements below: rank groups by level."""
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=plaintext];"]
    by_level: dict[int, list[int]] = {}
    for x in range(p.n):
        by_level.setdefault(p.levels[x], []).append(x)
    for level in sorted(by_level):
        names = " ".join(f'"{p.label(x)}";' for x in by_level[level])
        lines.append(f"  {{ rank=same; {names} }}")
    for x, y in sorted(p.hasse().covers):
        lines.append(f'  "{p.label(x)}" -> "{p.label(y)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_map(text: str, src: PosetDocument, dst: PosetDocument) -> list[int]:
    """Parse ``a -> b`` lines into a total map from src points to dst points."""
    src_index = {name: i for i, name in enumerate(src.labels)}
    dst_index = {name: i for i, name in enumerate(dst.labels)}
    mapping: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [s.strip() for s in line.split("->")]
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError(lineno, f"expected 'src -> dst', got {line!r}")
        a, b = parts
        if a not in src_index:
            raise ParseError(lineno, f"{a!r} is not a point of the source")
        if b not in dst_index:
            raise ParseError(lineno, f"{b!r} is not a point of the target")
        if src_index[a] in mapping:
            raise ParseError(lineno, f"{a!r} mapped twice")
        mapping[src_index[a]] = dst_index[b]
    missing = [name for name, i in src_index.items() if i not in mapping]
    if missing:
        raise ParseError(0, f"unmapped source points: {', '.join(sorted(missing))}")
    return [mapping[i] for i in range(len(src.labels))]
