"""End-to-end scenario evaluation over a linked portfolio."""

from __future__ import annotations

from .analytics import ExposureReport, exposure_summary
from .credit import portfolio_credit
from .ingest import LinkedPortfolio
from .model import StressResult, StressRow
from .scenarios import Scenario
from .valuation import portfolio_valuation


def run_scenario(
    linked: LinkedPortfolio, scenario: Scenario, top_k: int = 10
) -> tuple[StressResult, ExposureReport]:
    """Evaluate credit and valuation layers and build the diagnostics.

    The linked portfolio is reusable across scenarios: link once,
    evaluate many.
    """
    credit_rows, total_el = portfolio_credit(linked, scenario)
    valuation_rows, metric = portfolio_valuation(linked, scenario, credit_rows)
    result = StressResult(
        scenario_id=scenario.id,
        rows=tuple(
            StressRow(id=c.id, pd_s=c.pd_s, lgd_s=c.lgd_s, el_s=c.el_s, dv_s=v.dv_s)
            for c, v in zip(credit_rows, valuation_rows)
        ),
        total_el=total_el,
        climate_var=metric,
    )
    report = exposure_summary(
        linked, scenario, credit_rows, valuation_rows, metric, top_k=top_k
    )
    return result, report
