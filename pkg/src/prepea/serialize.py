"""JSON and plain-text model files.

Both formats go through :class:`Bundle`, a loose container of a carrier plus
whatever tables, maps and order a file carries.  :meth:`Bundle.to_model`
turns it into a typed model for the declared kind.

Text format (``#`` starts a comment, blank lines are ignored)::

    kind: gppea
    elements: 0 a b 1
    zero: 0
    table /
         0 a b 1
      0  0 . . .
      a  a 0 . .
      b  b . 0 .
      1  1 a a 0
    leq:
      0: a b
      a: 1
      b: 1

Undefined cells are ``.`` or ``-``.  A ``table`` block is introduced by the
operation name (``+``, ``\\`` or ``/``), then a header row of column labels,
then one row per element.  ``leq:`` lists, per element, elements above it;
the reflexive-transitive closure is taken.  Maps are single lines such as
``L: 1 b a 0`` giving images in element order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NotPartialOrder, ParseError, PrepeaError
from .structures import (
    Carrier,
    DocPoset,
    GppeaModel,
    PartialBinTable,
    Poset,
    UnaryMap,
    WppeaModel,
    make_docposet,
)

KINDS = ("wppea", "ppea", "gppea", "poset", "docposet", "tables")
OPS = {"+": "plus", "\\": "rminus", "/": "lminus"}
OP_SYMBOL = {v: k for k, v in OPS.items()}
UNDEF_TOKENS = {".", "-", "null", "None"}


@dataclass
class Bundle:
    kind: str
    carrier: Carrier
    tables: dict[str, PartialBinTable] = field(default_factory=dict)
    maps: dict[str, UnaryMap] = field(default_factory=dict)
    leq: Poset | None = None

    @property
    def n(self) -> int:
        return self.carrier.size

    def require(self, *names: str):
        missing = [x for x in names if x not in self.tables and x not in self.maps
                   and not (x == "leq" and self.leq is not None)]
        if missing:
            raise ParseError(f"{self.kind} file lacks {', '.join(missing)}")

    def to_model(self, kind: str | None = None):
        kind = kind or self.kind
        if kind == "ppea":
            kind = "wppea"
        try:
            if kind == "wppea":
                self.require("plus", "L", "R")
                if self.carrier.unit is None:
                    raise ParseError("wppea file needs a unit")
                return WppeaModel(self.carrier, self.tables["plus"], self.maps["L"], self.maps["R"])
            if kind == "gppea":
                self.require("plus", "rminus", "lminus")
                return GppeaModel(self.carrier, self.tables["plus"], self.tables["rminus"],
                                  self.tables["lminus"])
            if kind == "poset":
                self.require("leq")
                return self.leq
            if kind == "docposet":
                self.require("leq", "L", "R")
                return make_docposet(self.leq, self.maps["L"], self.maps["R"], self.carrier.labels)
        except ParseError:
            raise
        except PrepeaError as exc:
            raise ParseError(f"invalid {kind}: {exc}") from exc
        if kind == "tables":
            return self
        raise ParseError(f"unknown kind {kind!r}")

    @classmethod
    def from_model(cls, obj, labels=None) -> Bundle:
        if isinstance(obj, Bundle):
            return obj
        if isinstance(obj, WppeaModel):
            return cls("wppea", obj.carrier, {"plus": obj.plus}, {"L": obj.lsupp, "R": obj.rsupp})
        if isinstance(obj, GppeaModel):
            return cls("gppea", obj.carrier,
                       {"plus": obj.plus, "rminus": obj.rminus, "lminus": obj.lminus})
        if isinstance(obj, DocPoset):
            return cls("docposet", obj.carrier, {}, {"L": obj.lcompl, "R": obj.rcompl}, obj.poset)
        if isinstance(obj, Poset):
            return cls("poset", Carrier(obj.size, obj.bottom() or 0, None, labels), {}, {}, obj)
        raise TypeError(f"cannot serialize {type(obj).__name__}")


# -- JSON ------------------------------------------------------------------


def to_json_dict(obj) -> dict:
    b = Bundle.from_model(obj)
    c = b.carrier
    out: dict = {"kind": b.kind, "n": c.size, "zero": c.zero, "unit": c.unit}
    if c.labels is not None:
        out["labels"] = list(c.labels)
    for name in ("plus", "lminus", "rminus"):
        if name in b.tables:
            out[name] = [list(r) for r in b.tables[name].cells]
    if "L" in b.maps:
        out["lsupp"] = list(b.maps["L"].image)
    if "R" in b.maps:
        out["rsupp"] = list(b.maps["R"].image)
    if b.leq is not None:
        out["leq"] = [list(r) for r in b.leq.leq]
    return out


def dumps_json(obj, indent: int | None = 1) -> str:
    return json.dumps(to_json_dict(obj), indent=indent)


def from_json_dict(d: dict) -> Bundle:
    try:
        kind = d["kind"]
        if kind not in KINDS:
            raise ParseError(f"unknown kind {kind!r}")
        n = int(d["n"])
        carrier = Carrier(n, int(d.get("zero", 0)), d.get("unit"), d.get("labels"))
        tables = {name: PartialBinTable(tuple(tuple(r) for r in d[name]))
                  for name in ("plus", "lminus", "rminus") if name in d}
        maps = {}
        if "lsupp" in d:
            maps["L"] = UnaryMap(tuple(d["lsupp"]))
        if "rsupp" in d:
            maps["R"] = UnaryMap(tuple(d["rsupp"]))
        leq = None
        if "leq" in d:
            from .structures import validate_poset
            leq = validate_poset(d["leq"])
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, NotPartialOrder, PrepeaError) as exc:
        raise ParseError(f"bad JSON model: {exc}") from exc
    for part in list(tables.values()) + list(maps.values()) + ([leq] if leq else []):
        if part.size != n:
            raise ParseError("component size differs from n")
    return Bundle(kind, carrier, tables, maps, leq)


def loads_json(text: str) -> Bundle:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(d, dict):
        raise ParseError("JSON model must be an object")
    return from_json_dict(d)


# -- text ------------------------------------------------------------------


def dumps_text(obj) -> str:
    b = Bundle.from_model(obj)
    c = b.carrier
    names = c.names
    width = max(len(x) for x in names)
    lines = [f"kind: {b.kind}", f"elements: {' '.join(names)}", f"zero: {names[c.zero]}"]
    if c.unit is not None:
        lines.append(f"unit: {names[c.unit]}")
    for name in ("plus", "lminus", "rminus"):
        if name not in b.tables:
            continue
        t = b.tables[name]
        lines.append(f"table {OP_SYMBOL[name]}")
        lines.append(" " * (width + 2) + " ".join(x.rjust(width) for x in names))
        for a in range(c.size):
            cells = " ".join(c.name(v).rjust(width) for v in t.cells[a])
            lines.append(f"{names[a].rjust(width)}  {cells}")
    for key in ("L", "R"):
        if key in b.maps:
            lines.append(f"{key}: " + " ".join(names[v] for v in b.maps[key].image))
    if b.leq is not None:
        lines.append("leq:")
        for a in range(c.size):
            ups = [names[x] for x in range(c.size) if b.leq.lt(a, x)]
            if ups:
                lines.append(f"  {names[a]}: {' '.join(ups)}")
    return "\n".join(lines) + "\n"


def _strip(line: str) -> str:
    pos = line.find("#")
    return (line if pos < 0 else line[:pos]).rstrip()


def loads_text(text: str) -> Bundle:
    lines = [(i + 1, _strip(raw)) for i, raw in enumerate(text.splitlines())]
    lines = [(i, s) for i, s in lines if s.strip()]
    kind = None
    names: list[str] | None = None
    zero_name = unit_name = None
    raw_tables: dict[str, tuple[int, list[str], list[list[str]]]] = {}
    raw_maps: dict[str, tuple[int, list[str]]] = {}
    raw_leq: list[tuple[int, str, list[str]]] | None = None
    k = 0

    def fail(lineno, msg):
        raise ParseError(f"line {lineno}: {msg}")

    while k < len(lines):
        lineno, s = lines[k]
        t = s.strip()
        head, _, rest = t.partition(":")
        key = head.strip().lower()
        if t.startswith("table"):
            op = t[len("table"):].strip()
            if op not in OPS:
                fail(lineno, f"unknown operation {op!r}")
            if k + 1 >= len(lines):
                fail(lineno, "table without header")
            header = lines[k + 1][1].replace("|", " ").split()
            rows = []
            k += 2
            while k < len(lines) and len(rows) < len(header):
                rows.append(lines[k][1].replace("|", " ").split())
                k += 1
            if len(rows) != len(header):
                fail(lineno, "table has fewer rows than columns")
            raw_tables[OPS[op]] = (lineno, header, rows)
            continue
        if key == "leq" and not rest.strip():
            raw_leq = []
            k += 1
            while k < len(lines) and lines[k][1][:1].isspace():
                ln, entry = lines[k]
                lo, sep, his = entry.strip().partition(":")
                if not sep:
                    fail(ln, "expected 'x: y z' in leq block")
                raw_leq.append((ln, lo.strip(), his.split()))
                k += 1
            continue
        if key == "kind":
            kind = rest.strip()
        elif key == "elements":
            names = rest.split()
        elif key == "zero":
            zero_name = rest.strip()
        elif key == "unit":
            unit_name = rest.strip()
        elif key in ("l", "r"):
            raw_maps[key.upper()] = (lineno, rest.split())
        else:
            fail(lineno, f"unrecognised line {t!r}")
        k += 1

    if kind is None:
        raise ParseError("missing 'kind:' line")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}")
    if names is None:
        if not raw_tables:
            raise ParseError("missing 'elements:' line")
        names = next(iter(raw_tables.values()))[1]
    if len(set(names)) != len(names):
        raise ParseError("duplicate element names")
    index = {x: i for i, x in enumerate(names)}
    n = len(names)

    def elem(lineno, tok, allow_undef=False):
        if allow_undef and tok in UNDEF_TOKENS:
            return None
        if tok not in index:
            fail(lineno, f"unknown element {tok!r}")
        return index[tok]

    zero = elem(0, zero_name) if zero_name is not None else 0
    unit = elem(0, unit_name) if unit_name is not None else None
    labels = None if names == [str(i) for i in range(n)] else tuple(names)
    try:
        carrier = Carrier(n, zero, unit, labels)
    except PrepeaError as exc:
        raise ParseError(str(exc)) from exc

    tables = {}
    for name, (lineno, header, rows) in raw_tables.items():
        if sorted(header) != sorted(names):
            fail(lineno, "table header must list every element once")
        cells = [[None] * n for _ in range(n)]
        seen = set()
        for row in rows:
            if len(row) != len(header) + 1:
                fail(lineno, f"row {row[:1]} has {len(row) - 1} cells, expected {len(header)}")
            a = elem(lineno, row[0])
            if a in seen:
                fail(lineno, f"row {row[0]} repeated")
            seen.add(a)
            for col, tok in zip(header, row[1:]):
                cells[a][index[col]] = elem(lineno, tok, allow_undef=True)
        tables[name] = PartialBinTable(tuple(map(tuple, cells)))
    maps = {}
    for key, (lineno, toks) in raw_maps.items():
        if len(toks) != n:
            fail(lineno, f"map {key} needs {n} images")
        maps[key] = UnaryMap(tuple(elem(lineno, x) for x in toks))
    leq = None
    if raw_leq is not None:
        pairs = []
        for ln, lo, his in raw_leq:
            a = elem(ln, lo)
            pairs.extend((a, elem(ln, h)) for h in his)
        try:
            leq = Poset.from_covers(n, pairs)
        except NotPartialOrder as exc:
            raise ParseError(f"leq block is not a partial order: {exc}") from exc
    return Bundle(kind, carrier, tables, maps, leq)


def loads(text: str) -> Bundle:
    """Parse either format, sniffing JSON by its leading brace."""
    return loads_json(text) if text.lstrip().startswith("{") else loads_text(text)


def load_path(path: str) -> Bundle:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)
