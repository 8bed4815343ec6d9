"""Verification sweep reports: per-n comparison rows and their lossless
CSV/JSON serializations.

Exact values travel as decimal strings (C_30 already exceeds 53-bit JSON
integer safety); floats are serialized with repr so parsing round-trips
bit-identically.  CSV carries the document metadata as leading `# key=value`
comment lines ahead of the RFC-4180 table; golden-file comparisons ignore
the generated_utc line.
"""

from __future__ import annotations

import csv
import datetime
import io
import json
from dataclasses import asdict, dataclass, field

from .errors import DomainError
from .exact import catalan_exact
from .quadrature import DEFAULT_ABS_TOL, DEFAULT_MAX_EVALS
from .representations import ReprResult, catalan_via_duplication, catalan_via_feaux

__all__ = [
    "ROW_ERROR_BOUND",
    "REPRESENTATION_TAGS",
    "VerificationRow",
    "ReportDocument",
    "verification_row",
    "run_verification",
    "row_passes",
    "report_passes",
    "to_json",
    "from_json",
    "to_csv",
    "from_csv",
]

TOOL_VERSION = "0.1.0"

# Every representation is required to hit this absolute log-space error.
ROW_ERROR_BOUND = 1e-8

CSV_FIELDS = ("n", "repr", "exact", "log_estimate", "abs_log_error", "n_evals", "converged")

_RUNNERS = {
    "feaux": catalan_via_feaux,
    "duplication": catalan_via_duplication,
}

REPRESENTATION_TAGS = tuple(sorted(_RUNNERS))


@dataclass(frozen=True)
class VerificationRow:
    """One (n, representation) comparison against the exact Catalan number."""

    n: int
    repr: str
    exact: str  # decimal string of the exact C_n
    log_estimate: float
    abs_log_error: float
    n_evals: int
    converged: bool


@dataclass
class ReportDocument:
    """A sweep report: metadata plus rows sorted by (n, repr)."""

    metadata: dict[str, str]
    rows: list[VerificationRow] = field(default_factory=list)

    def sort(self) -> None:
        self.rows.sort(key=lambda r: (r.n, r.repr))


def _row_from_result(tag: str, result: ReprResult) -> VerificationRow:
    return VerificationRow(
        n=result.n,
        repr=tag,
        exact=str(catalan_exact(result.n)),
        log_estimate=result.log_value,
        abs_log_error=result.abs_log_error,
        n_evals=result.integral.n_evals,
        converged=result.integral.converged,
    )


def verification_row(
    n: int,
    tag: str,
    abs_tol: float = DEFAULT_ABS_TOL,
    max_evals: int = DEFAULT_MAX_EVALS,
) -> VerificationRow:
    """Evaluate one representation at one index and package the comparison."""
    try:
        runner = _RUNNERS[tag]
    except KeyError:
        raise DomainError(
            f"unknown representation {tag!r}; expected one of {REPRESENTATION_TAGS}"
        ) from None
    return _row_from_result(tag, runner(n, abs_tol, max_evals))


def run_verification(
    max_n: int,
    tags: tuple[str, ...] = REPRESENTATION_TAGS,
    abs_tol: float = DEFAULT_ABS_TOL,
) -> ReportDocument:
    """Sweep n = 1..max_n across the requested representations."""
    if max_n < 1:
        raise DomainError(f"sweep needs max_n >= 1, got {max_n}")
    for tag in tags:
        if tag not in _RUNNERS:
            raise DomainError(
                f"unknown representation {tag!r}; expected one of {REPRESENTATION_TAGS}"
            )
    doc = ReportDocument(
        metadata={
            "tool_version": TOOL_VERSION,
            "tolerance": repr(abs_tol),
            "generated_utc": _utc_now(),
        }
    )
    for n in range(1, max_n + 1):
        for tag in sorted(tags):
            doc.rows.append(verification_row(n, tag, abs_tol))
    doc.sort()
    return doc


def _utc_now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def row_passes(row: VerificationRow) -> bool:
    return row.converged and row.abs_log_error <= ROW_ERROR_BOUND


def report_passes(doc: ReportDocument) -> bool:
    return all(row_passes(row) for row in doc.rows)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def to_json(doc: ReportDocument) -> str:
    payload = {"metadata": doc.metadata, "rows": [asdict(r) for r in doc.rows]}
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> ReportDocument:
    payload = json.loads(text)
    doc = ReportDocument(metadata=dict(payload["metadata"]))
    doc.rows = [VerificationRow(**row) for row in payload["rows"]]
    return doc


def to_csv(doc: ReportDocument) -> str:
    out = io.StringIO()
    for key, value in doc.metadata.items():
        out.write(f"# {key}={value}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in doc.rows:
        writer.writerow(
            [
                r.n,
                r.repr,
                r.exact,
                repr(r.log_estimate),
                repr(r.abs_log_error),
                r.n_evals,
                "true" if r.converged else "false",
            ]
        )
    return out.getvalue()


def from_csv(text: str) -> ReportDocument:
    metadata: dict[str, str] = {}
    table_lines: list[str] = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            metadata[key] = value
        elif line:
            table_lines.append(line)
    reader = csv.DictReader(table_lines)
    doc = ReportDocument(metadata=metadata)
    for rec in reader:
        doc.rows.append(
            VerificationRow(
                n=int(rec["n"]),
                repr=rec["repr"],
                exact=rec["exact"],
                log_estimate=float(rec["log_estimate"]),
                abs_log_error=float(rec["abs_log_error"]),
                n_evals=int(rec["n_evals"]),
                converged=rec["converged"] == "true",
            )
        )
    return doc
