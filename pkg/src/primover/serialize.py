"""Report serialization (JSON/CSV/text) and b-file parsing.

All big integers travel as decimal strings in JSON so that arbitrary
precision survives any parser. Field order is fixed, making output
deterministic and diffable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from primover.classify import ClassificationReport
from primover.cyclotomic import FamilyNumber

VERDICT_KEYS = ("fermat", "strong", "super", "over", "primover")


def report_to_dict(report: ClassificationReport) -> dict:
    return {
        "n": str(report.n),
        "base": str(report.base),
        "verdicts": {
            "fermat": report.is_fermat_psp,
            "strong": report.is_strong_psp,
            "super": report.is_super_psp,
            "over": report.is_overpseudoprime,
            "primover": report.is_primover,
        },
        "order": None if report.order is None else str(report.order),
        "coset_count": None if report.coset_count is None else str(report.coset_count),
        "factors": [
            [str(p), str(e)] for p, e in
            (report.factorization.factors if report.factorization else ())
        ],
        "wieferich": [
            {"prime": str(p), "order": str(w)} for p, w in report.wieferich
        ],
    }


def report_to_json(report: ClassificationReport) -> str:
    return json.dumps(report_to_dict(report))


def report_to_csv(report: ClassificationReport) -> str:
    d = report_to_dict(report)
    header = "n,base,fermat,strong,super,over,primover,order,coset_count,factors"
    factors = ";".join(f"{p}^{e}" for p, e in d["factors"])
    row = ",".join(str(x) for x in (
        d["n"], d["base"],
        *(d["verdicts"][k] for k in VERDICT_KEYS),
        d["order"], d["coset_count"], factors,
    ))
    return f"{header}\n{row}"


def _flag(value) -> str:
    if value is None:
        return "unknown"
    return "true" if value else "false"


def report_to_text(report: ClassificationReport) -> str:
    lines = [
        f"n = {report.n}",
        f"base = {report.base}",
        f"prime = {_flag(report.is_prime)} ({report.primality.kind})",
        f"fermat = {_flag(report.is_fermat_psp)}",
        f"strong = {_flag(report.is_strong_psp)}",
        f"super = {_flag(report.is_super_psp)}",
        f"over = {_flag(report.is_overpseudoprime)}",
        f"primover = {_flag(report.is_primover)}",
    ]
    if report.factorization is not None:
        fac = " * ".join(
            f"{p}^{e}" if e > 1 else str(p)
            for p, e in report.factorization.factors
        )
        lines.append(f"factors = {fac}")
    if report.order is not None:
        lines.append(f"order = {report.order}")
    if report.coset_count is not None:
        lines.append(f"coset_count = {report.coset_count}")
    for p, w in report.wieferich:
        lines.append(f"wieferich = prime {p}, order {w}")
    if not report.complete:
        lines.append("incomplete = true (factoring budget exhausted)")
    return "\n".join(lines)


def family_to_dict(fam: FamilyNumber) -> dict:
    return {
        "family": fam.family,
        "base": str(fam.base),
        "parameters": [str(x) for x in fam.parameters],
        "index": str(fam.index),
        "value": str(fam.value),
        "reduced": str(fam.reduced),
        "primover": fam.is_primover,
        "report": report_to_dict(fam.verdict),
    }


def family_to_json(fam: FamilyNumber) -> str:
    return json.dumps(family_to_dict(fam))


def family_to_text(fam: FamilyNumber) -> str:
    lines = [
        f"family = {fam.family}",
        f"base = {fam.base}",
        f"parameters = {', '.join(str(x) for x in fam.parameters)}",
        f"value = {fam.value}",
    ]
    if fam.reduced != fam.value:
        lines.append(f"reduced = {fam.reduced}")
    lines.append(f"primover = {_flag(fam.is_primover)}")
    lines.append("")
    lines.append(report_to_text(fam.verdict))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# b-files

@dataclass(frozen=True)
class BFileEntry:
    index: int
    value: int


class BFileFormatError(ValueError):
    def __init__(self, line_no: int, line: str, reason: str):
        self.line_no = line_no
        self.line = line
        super().__init__(f"line {line_no}: {reason}: {line.strip()!r}")


def parse_bfile(path) -> list[BFileEntry]:
    """Parse "index value" lines; '#' comments and blank lines are ignored.

    Indices must be strictly increasing.
    """
    entries: list[BFileEntry] = []
    with open(path) as fh:
        for line_no, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise BFileFormatError(line_no, line, "expected two fields")
            try:
                index, value = int(parts[0]), int(parts[1])
            except ValueError:
                raise BFileFormatError(line_no, line, "fields must be integers")
            if entries and index <= entries[-1].index:
                raise BFileFormatError(line_no, line, "indices must increase")
            entries.append(BFileEntry(index=index, value=value))
    return entries
