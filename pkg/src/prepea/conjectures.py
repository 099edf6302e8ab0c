"""Exhaustive scans for four open claims about small generalized models.

* C1: a left minus admits at most one generalized structure.
* C2: ``a+b = a+c`` and ``b >= c`` imply ``b/c = 0``.
* C3: ``b+a = c+a`` and ``b >= c`` imply ``b\\c = 0``.
* C4: some quotient by a congruence has a non-antisymmetric induced order.

Each claim yields a :class:`ConjectureRecord`: either the counterexamples
found, or an exhaustion statement for the sizes scanned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .canon import canonical_form
from .checks import check_gppea
from .congruence import enumerate_congruences, quotient
from .enumeration import all_gppea
from .errors import OrderInvalid, SizeLimitExceeded
from .derive import order_from_minus
from .serialize import to_json_dict
from .structures import Carrier, GppeaModel, PartialBinTable

MAX_CONJECTURE_SIZE = 6

STATEMENTS = {
    "C1": "a fixed left minus has exactly one completion to a generalized model",
    "C2": "a+b = a+c and b >= c imply b/c = 0",
    "C3": "b+a = c+a and b >= c imply b\\c = 0",
    "C4": "a quotient by a congruence can fail antisymmetry of its induced order",
}


@dataclass
class ConjectureRecord:
    id: str
    max_n: int
    models_scanned: int
    counterexamples: list = field(default_factory=list)
    cases_scanned: int = 0

    @property
    def status(self) -> str:
        if self.id == "C4":
            return "instance-found" if self.counterexamples else "no-instance"
        return "counterexample" if self.counterexamples else "exhausted"

    def to_dict(self) -> dict:
        return {"id": self.id, "statement": STATEMENTS[self.id], "max_n": self.max_n,
                "status": self.status, "models_scanned": self.models_scanned,
                "cases_scanned": self.cases_scanned,
                "counterexamples": self.counterexamples}

    def render(self) -> str:
        head = f"{self.id} (n <= {self.max_n}, {self.models_scanned} models): {self.status}"
        if self.counterexamples:
            head += f", {len(self.counterexamples)} found"
        return head


def count_completions(lminus: PartialBinTable, zero: int = 0, limit: int = 2) -> int:
    """Number of ``(+, \\)`` pairs making a generalized model with this ``/``.

    Independent of the infimum construction: each ``b+c`` cell keeps only the
    values that satisfy the fourth axiom's biconditional for every ``a``,
    each ``a\\b`` cell the values satisfying the third axiom's biconditional
    for every ``c``; the surviving combinations are then checked in full.
    Counting stops at ``limit``.
    """
    try:
        po = order_from_minus(lminus)
    except OrderInvalid:
        return 0
    n = po.size
    le = po.leq
    lm = lminus.cells
    values = [None] + list(range(n))
    plus_opts = []
    for b, c in product(range(n), repeat=2):
        ok = []
        for v in values:
            if all((lm[a][b] is not None and le[c][lm[a][b]]) == (v is not None and le[v][a])
                   for a in range(n)):
                ok.append(v)
        if not ok:
            return 0
        plus_opts.append(ok)
    count = 0
    carrier = Carrier(n, zero)
    for choice in product(*plus_opts):
        p = [choice[i * n:(i + 1) * n] for i in range(n)]
        rm_opts = []
        for a, b in product(range(n), repeat=2):
            if not le[b][a]:
                rm_opts.append([None])
                continue
            ok = [v for v in range(n)
                  if all(le[c][v] == (p[c][b] is not None and le[p[c][b]][a]) for c in range(n))]
            if not ok:
                break
            rm_opts.append(ok)
        else:
            for rchoice in product(*rm_opts):
                rm = tuple(tuple(rchoice[i * n:(i + 1) * n]) for i in range(n))
                model = GppeaModel(carrier, PartialBinTable(tuple(map(tuple, p))),
                                   PartialBinTable(rm), lminus)
                if check_gppea(model).overall:
                    count += 1
                    if count >= limit:
                        return count
    return count


def _lminus_key(m: GppeaModel) -> bytes:
    empty = PartialBinTable.empty(m.n)
    return canonical_form(GppeaModel(m.carrier, empty, empty, m.lminus)).encoding


def _scan_c1(models, max_n) -> ConjectureRecord:
    rec = ConjectureRecord("C1", max_n, len(models))
    groups: dict[bytes, list[int]] = {}
    for i, m in enumerate(models):
        groups.setdefault(_lminus_key(m), []).append(i)
    for idx in groups.values():
        if len(idx) > 1:
            rec.counterexamples.append({"kind": "shared-lminus",
                                        "models": [to_json_dict(models[i]) for i in idx]})
    for m in models:
        rec.cases_scanned += 1
        k = count_completions(m.lminus, m.zero)
        if k != 1:
            rec.counterexamples.append({"kind": "completions", "completions": k,
                                        "model": to_json_dict(m)})
    return rec


def _scan_c23(models, max_n, which: str) -> ConjectureRecord:
    rec = ConjectureRecord(which, max_n, len(models))
    for m in models:
        n, z = m.n, m.zero
        p, rm, lm = m.plus.cells, m.rminus.cells, m.lminus.cells
        for a, b, c in product(range(n), repeat=3):
            if rm[b][c] is None:  # b >= c fails
                continue
            if which == "C2":
                s, t, diff = p[a][b], p[a][c], lm[b][c]
            else:
                s, t, diff = p[b][a], p[c][a], rm[b][c]
            if s is None or s != t:
                continue
            rec.cases_scanned += 1
            if diff != z:
                rec.counterexamples.append({"witness": [a, b, c], "model": to_json_dict(m)})
    return rec


def _scan_c4(models, max_n) -> ConjectureRecord:
    rec = ConjectureRecord("C4", max_n, len(models))
    for m in models:
        for part in enumerate_congruences(m):
            rec.cases_scanned += 1
            q, report = quotient(m, part)
            if "GPPEA2" in report and not report["GPPEA2"].passed:
                rec.counterexamples.append({
                    "partition": [list(b) for b in part.blocks],
                    "witness": list(report["GPPEA2"].witness),
                    "model": to_json_dict(m),
                    "quotient": to_json_dict(q),
                })
    return rec


@dataclass
class ConjectureReport:
    max_n: int
    records: list[ConjectureRecord]

    def __getitem__(self, cid: str) -> ConjectureRecord:
        for r in self.records:
            if r.id == cid:
                return r
        raise KeyError(cid)

    def to_dict(self) -> dict:
        return {"max_n": self.max_n, "records": [r.to_dict() for r in self.records]}


def conjecture_scan(n: int) -> ConjectureReport:
    """Scan every generalized model with at most ``n`` elements."""
    if n > MAX_CONJECTURE_SIZE:
        raise SizeLimitExceeded("conjecture_scan", n, MAX_CONJECTURE_SIZE)
    models = [m for k in range(1, n + 1) for m in all_gppea(k)]
    return ConjectureReport(n, [
        _scan_c1(models, n),
        _scan_c23(models, n, "C2"),
        _scan_c23(models, n, "C3"),
        _scan_c4(models, n),
    ])
