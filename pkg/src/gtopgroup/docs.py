"""JSON documents for spaces, groups, maps, instances and reports.

Parsing is strict and every failure becomes :class:`DocumentError` whose
message is anchored as ``path:line:col: detail``.  Serialization is
canonical (sorted keys, fixed layout) so equal objects give equal bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import group as grp, setfam
from .errors import WorkbenchError
from .group import FiniteGroup
from .setfam import GenTopology, elements, from_elements
from .space import GTMap


class DocumentError(WorkbenchError):
    def __init__(self, path: str, line: int, col: int, message: str):
        super().__init__(f"{path}:{line}:{col}: {message}")
        self.path, self.line, self.col = path, line, col


def _locate(text: str, key: str) -> tuple[int, int]:
    idx = text.find(f'"{key}"')
    if idx < 0:
        return 1, 1
    line = text.count("\n", 0, idx) + 1
    col = idx - (text.rfind("\n", 0, idx) + 1) + 1
    return line, col


def load_json(text: str, path: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(path, exc.lineno, exc.colno, exc.msg) from None


def _int(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"{what} must be an integer, got {v!r}")
    return v


def _int_list(v, what: str) -> list[int]:
    if not isinstance(v, list):
        raise ValueError(f"{what} must be a list")
    return [_int(x, what) for x in v]


def _require(doc, keys: tuple[str, ...]):
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    for k in keys:
        if k not in doc:
            raise KeyError(k)


def _anchored(text: str, path: str, build, key_for_error: str):
    """Run ``build`` and turn any validation error into a DocumentError."""
    try:
        return build()
    except KeyError as exc:
        raise DocumentError(path, 1, 1, f"missing field {exc.args[0]!r}") from None
    except (ValueError, TypeError, WorkbenchError) as exc:
        line, col = _locate(text, key_for_error)
        detail = f"{type(exc).__name__}: {exc}" if isinstance(exc, WorkbenchError) else str(exc)
        raise DocumentError(path, line, col, detail) from None


# -- spaces -----------------------------------------------------------------

def space_doc(t: GenTopology) -> dict:
    return {"n": t.n, "opens": [elements(o) for o in t.opens]}


def space_from_doc(doc) -> GenTopology:
    _require(doc, ("n", "opens"))
    n = _int(doc["n"], "n")
    setfam.check_capacity(n)
    if not isinstance(doc["opens"], list):
        raise ValueError("opens must be a list of lists")
    fam = [from_elements(_int_list(o, "open set")) for o in doc["opens"]]
    return setfam.validate_topology(fam, n)


def parse_space(text: str, path: str = "<input>") -> GenTopology:
    doc = load_json(text, path)
    return _anchored(text, path, lambda: space_from_doc(doc), "opens")


# -- groups ------------------------------------------------------------------

def group_doc(g: FiniteGroup) -> dict:
    return {"n": g.n, "table": [list(r) for r in g.table]}


def group_from_doc(doc, name: str = "") -> FiniteGroup:
    _require(doc, ("n", "table"))
    n = _int(doc["n"], "n")
    table = doc["table"]
    if not isinstance(table, list) or len(table) != n:
        raise ValueError(f"table must have {n} rows")
    rows = [_int_list(r, "table entry") for r in table]
    return grp.validate_group(rows, name or doc.get("name", ""))


def parse_group(text: str, path: str = "<input>") -> FiniteGroup:
    doc = load_json(text, path)
    return _anchored(text, path, lambda: group_from_doc(doc), "table")


# -- maps --------------------------------------------------------------------

def map_doc(f: GTMap) -> dict:
    return {"dom": f.dom, "cod": f.cod, "images": list(f.images)}


def map_from_doc(doc) -> GTMap:
    _require(doc, ("dom", "cod", "images"))
    return GTMap(_int(doc["dom"], "dom"), _int(doc["cod"], "cod"),
                 tuple(_int_list(doc["images"], "image")))


def parse_map(text: str, path: str = "<input>") -> GTMap:
    doc = load_json(text, path)
    return _anchored(text, path, lambda: map_from_doc(doc), "images")


# -- instances ---------------------------------------------------------------

def instance_doc(g: FiniteGroup, t: GenTopology) -> dict:
    return {"n": g.n, "table": [list(r) for r in g.table],
            "opens": [elements(o) for o in t.opens]}


def instance_from_doc(doc) -> tuple[FiniteGroup, GenTopology]:
    g = group_from_doc(doc)
    t = space_from_doc(doc)
    return g, t


def parse_instance(text: str, path: str = "<input>") -> tuple[FiniteGroup, GenTopology]:
    doc = load_json(text, path)
    return _anchored(text, path, lambda: instance_from_doc(doc), "table")


def parse_instances(text: str, path: str = "<input>") -> list[tuple[FiniteGroup, GenTopology]]:
    """Instances from a single document, a JSON list, or one document per line.

    Line-per-document files may end with a summary record (an object with a
    ``summary`` key), which is skipped.
    """
    stripped = text.strip()
    if stripped.startswith("[") or stripped.count("\n") == 0 or not _is_json_lines(stripped):
        doc = load_json(text, path)
        docs = doc if isinstance(doc, list) else [doc]
        return _anchored(text, path, lambda: [instance_from_doc(d) for d in docs], "table")
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DocumentError(path, lineno, exc.colno, exc.msg) from None
        if isinstance(doc, dict) and "summary" in doc:
            continue
        try:
            out.append(instance_from_doc(doc))
        except KeyError as exc:
            raise DocumentError(path, lineno, 1, f"missing field {exc.args[0]!r}") from None
        except (ValueError, TypeError, WorkbenchError) as exc:
            col = max(line.find('"table"'), 0) + 1
            detail = f"{type(exc).__name__}: {exc}" if isinstance(exc, WorkbenchError) else str(exc)
            raise DocumentError(path, lineno, col, detail) from None
    return out


def _is_json_lines(text: str) -> bool:
    first = text.splitlines()[0]
    try:
        json.loads(first)
    except json.JSONDecodeError:
        return False
    return True


def dumps_line(doc) -> str:
    """Compact single-line JSON for line-per-document output."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


# -- output ------------------------------------------------------------------

def dumps(doc) -> str:
    """Canonical JSON text with a trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DocumentError(path, 1, 1, exc.strerror or str(exc)) from None
