"""Reporting Module

This module turns pipeline results into the run artifacts: the JSON
report (validated before it is written), the per-(q, group) CSV summary,
the verdict tables and the predicted-versus-computed density table.
"""

from typing import Dict, Iterable, List, Optional
from dataclasses import asdict, dataclass, field
from pathlib import Path
import json
import logging

import pandas as pd
from jinja2 import Template
from marshmallow import EXCLUDE, Schema, ValidationError, fields, validate

from src.errors import VerificationError

logger = logging.getLogger(__name__)

REPORT_FILE = 'report.json'
SUMMARY_FILE = 'summary.csv'
VERDICTS_FILE = 'verdicts.csv'

FRACTION_PATTERN = r'^-?\d+/\d+$'

SUMMARY_COLUMNS = [
    'q', 'group', 'group_order', 'vertices', 'alpha', 'rho', 'predicted',
    'source', 'match', 'budget_exceeded', 'nodes_explored', 'elapsed', 'error',
]


@dataclass
class GroupDensity:
    """Computed and predicted density of one group"""
    group: str
    group_order: int
    stabilizer_order: int
    alpha: Optional[int] = None
    rho: Optional[str] = None
    predicted: Optional[str] = None
    source: Optional[str] = None
    match: bool = False
    budget_exceeded: bool = False
    nodes_explored: int = 0
    elapsed: float = 0.0
    witness: List[int] = field(default_factory=list)


@dataclass
class DensityReport:
    """Everything computed for one q"""
    q: int
    vertices: Optional[int] = None
    groups: Dict[str, GroupDensity] = field(default_factory=dict)
    weak_array: List[str] = field(default_factory=list)
    computed_array: List[str] = field(default_factory=list)
    monotone: Optional[bool] = None
    subconstituent: Optional[dict] = None
    verdicts: Dict[str, bool] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)
    error: Optional[str] = None
    error_type: Optional[str] = None

    @property
    def ok(self) -> bool:
        """No error, every computed value matches and every check passed"""
        return (
            self.error is None
            and all(g.match for g in self.groups.values())
            and self.monotone is not False
            and all(self.verdicts.values())
        )

    def to_dict(self) -> dict:
        data = asdict(self)
        data['ok'] = self.ok
        return data


@dataclass
class Verdict:
    """One named pass/fail row"""
    q: int
    check: str
    passed: bool
    detail: str = ''


class GroupDensitySchema(Schema):
    group = fields.Str(required=True, validate=validate.OneOf(['psl', 'pgl']))
    group_order = fields.Int(required=True, validate=validate.Range(min=1))
    stabilizer_order = fields.Int(required=True, validate=validate.OneOf([3, 6]))
    alpha = fields.Int(allow_none=True)
    rho = fields.Str(allow_none=True, validate=validate.Regexp(FRACTION_PATTERN))
    predicted = fields.Str(allow_none=True, validate=validate.Regexp(FRACTION_PATTERN))
    source = fields.Str(allow_none=True)
    match = fields.Bool(required=True)
    budget_exceeded = fields.Bool(required=True)
    nodes_explored = fields.Int(required=True)
    elapsed = fields.Float(required=True)
    witness = fields.List(fields.Int(), required=True)

    class Meta:
        unknown = EXCLUDE


class DensityReportSchema(Schema):
    """Schema mirroring schemas/report.schema.json"""
    q = fields.Int(required=True, validate=validate.Range(min=3))
    vertices = fields.Int(allow_none=True)
    groups = fields.Dict(keys=fields.Str(), values=fields.Nested(GroupDensitySchema), required=True)
    weak_array = fields.List(fields.Str(validate=validate.Regexp(FRACTION_PATTERN)), required=True)
    computed_array = fields.List(fields.Str(validate=validate.Regexp(FRACTION_PATTERN)), required=True)
    monotone = fields.Bool(allow_none=True)
    subconstituent = fields.Dict(allow_none=True)
    verdicts = fields.Dict(keys=fields.Str(), values=fields.Bool(), required=True)
    timings = fields.Dict(keys=fields.Str(), values=fields.Float(), required=True)
    error = fields.Str(allow_none=True)
    error_type = fields.Str(allow_none=True)
    ok = fields.Bool(required=True)

    class Meta:
        unknown = EXCLUDE


class RunReportSchema(Schema):
    reports = fields.List(fields.Nested(DensityReportSchema), required=True)
    ok = fields.Bool(required=True)

    class Meta:
        unknown = EXCLUDE


def report_document(reports: Iterable[DensityReport]) -> dict:
    """Validated JSON-ready document for a batch of reports"""
    reports = list(reports)
    document = {
        'reports': [r.to_dict() for r in reports],
        'ok': all(r.ok for r in reports),
    }
    errors = RunReportSchema().validate(document)
    if errors:
        logger.error(f"Report failed schema validation: {errors}")
        raise VerificationError(f"Report failed schema validation: {errors}")
    return document


def write_report(reports: Iterable[DensityReport], out_dir: Path) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / REPORT_FILE
    document = report_document(reports)
    path.write_text(json.dumps(document, indent=2, sort_keys=True) + "\n")
    logger.info(f"Report written to {path}")
    return path


def load_report(path: Path) -> dict:
    """Read a report file back, validating it"""
    try:
        return RunReportSchema().load(json.loads(Path(path).read_text()))
    except ValidationError as e:
        raise VerificationError(f"{path} is not a valid report: {e.messages}") from e


def summary_frame(reports: Iterable[DensityReport], groups: List[str]) -> pd.DataFrame:
    """One row per requested (q, group); failed q values get error rows"""
    rows = []
    for report in reports:
        for group in groups:
            entry = report.groups.get(group)
            row = {column: None for column in SUMMARY_COLUMNS}
            row.update(q=report.q, group=group, vertices=report.vertices, error=report.error)
            if entry is not None:
                row.update(
                    group_order=entry.group_order,
                    alpha=entry.alpha,
                    rho=entry.rho,
                    predicted=entry.predicted,
                    source=entry.source,
                    match=entry.match,
                    budget_exceeded=entry.budget_exceeded,
                    nodes_explored=entry.nodes_explored,
                    elapsed=round(entry.elapsed, 3),
                )
            rows.append(row)
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def write_summary(reports: Iterable[DensityReport], groups: List[str], out_dir: Path) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / SUMMARY_FILE
    summary_frame(reports, groups).to_csv(path, index=False)
    return path


def verdict_frame(verdicts: Iterable[Verdict]) -> pd.DataFrame:
    return pd.DataFrame([asdict(v) for v in verdicts], columns=['q', 'check', 'passed', 'detail'])


def write_verdicts(verdicts: Iterable[Verdict], out_dir: Path, name: str = VERDICTS_FILE) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    verdict_frame(verdicts).to_csv(path, index=False)
    return path


VERDICT_TEMPLATE = Template(
    "{% for v in verdicts %}"
    "q={{ '%-4d'|format(v.q) }} {{ '%-28s'|format(v.check) }} {{ 'pass' if v.passed else 'FAIL' }}"
    "{% if v.detail %}  {{ v.detail }}{% endif %}\n"
    "{% endfor %}"
)

DENSITY_TABLE_TEMPLATE = Template(
    "{{ '%-6s'|format('q') }} {{ '%-22s'|format('predicted') }} {{ '%-22s'|format('computed') }} status\n"
    "{% for row in rows %}"
    "{{ '%-6d'|format(row.q) }} {{ '%-22s'|format(row.predicted) }} {{ '%-22s'|format(row.computed) }} {{ row.status }}\n"
    "{% endfor %}"
)


def render_verdicts(verdicts: Iterable[Verdict]) -> str:
    return VERDICT_TEMPLATE.render(verdicts=list(verdicts))


def render_density_table(reports: Iterable[DensityReport]) -> str:
    """Predicted weak density array next to the computed one, per q"""
    rows = []
    for report in reports:
        if report.error is not None:
            status = f"error: {report.error_type}"
        else:
            status = 'ok' if report.ok else 'MISMATCH'
        rows.append({
            'q': report.q,
            'predicted': '[' + ', '.join(report.weak_array) + ']',
            'computed': '[' + ', '.join(report.computed_array) + ']',
            'status': status,
        })
    return DENSITY_TABLE_TEMPLATE.render(rows=rows)
