"""Report serialization for stress runs.

Both formats are canonical: JSON has sorted keys and numbers rounded to
at most 12 significant digits, CSV has a fixed column order, so the same
inputs always produce byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .analytics import ExposureReport
from .model import StressResult


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _result_doc(result: StressResult, report: ExposureReport) -> dict:
    return {
        "scenario_id": result.scenario_id,
        "rows": [
            {
                "id": row.id,
                "pd_s": _round12(row.pd_s),
                "lgd_s": _round12(row.lgd_s),
                "el_s": _round12(row.el_s),
                "dv_s": _round12(row.dv_s),
            }
            for row in result.rows
        ],
        "total_el": _round12(result.total_el),
        "climate_var": _round12(result.climate_var),
        "report": {
            "el_by_geo": {k: _round12(v) for k, v in report.el_by_geo.items()},
            "el_by_hazard_channel": {
                k: _round12(v) for k, v in report.el_by_hazard_channel.items()
            },
            "el_by_sector": {k: _round12(v) for k, v in report.el_by_sector.items()},
            "hhi_geo": _round12(report.hhi_geo),
            "hhi_sector": _round12(report.hhi_sector),
            "hhi_channel": _round12(report.hhi_channel),
            "hhi_geo_ead": _round12(report.hhi_geo_ead),
            "top_contributors": [
                {"id": c.id, "el_s": _round12(c.el_s), "share": _round12(c.share)}
                for c in report.top_contributors
            ],
            "weight_source": report.weight_source,
        },
    }


def emit_report(
    results: Sequence[tuple[StressResult, ExposureReport]], format: str = "json"
) -> bytes:
    """Serialize one entry per scenario, in input order."""
    if not results:
        raise ValueError("emit_report needs at least one result")
    if format == "json":
        docs = [_result_doc(result, report) for result, report in results]
        return (json.dumps(docs, sort_keys=True, indent=2) + "\n").encode("utf-8")
    if format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["scenario_id", "instrument_id", "pd_s", "lgd_s", "el_s", "dv_s"])
        for result, _ in results:
            for row in result.rows:
                writer.writerow(
                    [
                        result.scenario_id,
                        row.id,
                        f"{row.pd_s:.12g}",
                        f"{row.lgd_s:.12g}",
                        f"{row.el_s:.12g}",
                        f"{row.dv_s:.12g}",
                    ]
                )
        writer.writerow([])
        writer.writerow(["scenario_id", "total_el", "climate_var"])
        for result, _ in results:
            writer.writerow(
                [
                    result.scenario_id,
                    f"{result.total_el:.12g}",
                    f"{result.climate_var:.12g}",
                ]
            )
        return out.getvalue().encode("utf-8")
    raise ValueError(f"unknown format {format!r}")
