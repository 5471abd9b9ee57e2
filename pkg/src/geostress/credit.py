"""Credit transmission: scenario PD, scenario LGD, and expected loss.

Scenario PD multiplies the baseline by an exponential response to the
hazard, transition, and fragility shocks, attenuated by adaptation, and
clamps at 1. Scenario LGD rises linearly in hazard intensity with a
clamp at 1. Expected loss is the PD x LGD x EAD triple product.

The per-instrument scalar hazard intensity is the maximum across the
four hazard types of (scenario multiplier x baseline intensity): the
binding hazard drives the response, so correlated hazards are not
double-counted. An additive combination can be emulated by folding the
sum into a single hazard's baseline if desired.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .ingest import ExposureContext, LinkedPortfolio
from .model import BetaParams
from .scenarios import Scenario


@dataclass(frozen=True)
class CreditRow:
    """Per-instrument credit outcome under one scenario."""

    id: str
    pd_s: float
    lgd_s: float
    el_s: float


def _require_nonnegative(**kwargs: float) -> None:
    for name, value in kwargs.items():
        if value < 0.0:
            raise DomainError(f"{name} must be >= 0, got {value}")


def scenario_pd(
    pd0: float,
    hazard: float,
    transition: float,
    fragility: float,
    adaptation: float,
    betas: BetaParams,
) -> float:
    """Scenario default probability.

    min(1, pd0 * exp(b_H*hazard + b_T*transition + b_U*fragility
                     - b_A*adaptation)).
    """
    if not 0.0 <= pd0 <= 1.0:
        raise DomainError(f"pd0 must lie in [0,1], got {pd0}")
    _require_nonnegative(
        hazard=hazard,
        transition=transition,
        fragility=fragility,
        adaptation=adaptation,
        beta_hazard=betas.hazard,
        beta_transition=betas.transition,
        beta_fragility=betas.fragility,
        beta_adaptation=betas.adaptation,
    )
    exponent = (
        betas.hazard * hazard
        + betas.transition * transition
        + betas.fragility * fragility
        - betas.adaptation * adaptation
    )
    return min(1.0, pd0 * math.exp(exponent))


def scenario_lgd(lgd0: float, hazard: float, lgd_gamma: float) -> float:
    """Scenario loss given default: min(1, lgd0 * (1 + gamma * hazard))."""
    if not 0.0 <= lgd0 <= 1.0:
        raise DomainError(f"lgd0 must lie in [0,1], got {lgd0}")
    _require_nonnegative(hazard=hazard, lgd_gamma=lgd_gamma)
    return min(1.0, lgd0 * (1.0 + lgd_gamma * hazard))


def expected_loss(pd: float, lgd: float, ead: float) -> float:
    """Expected loss: pd * lgd * ead."""
    if not 0.0 <= pd <= 1.0:
        raise DomainError(f"pd must lie in [0,1], got {pd}")
    if not 0.0 <= lgd <= 1.0:
        raise DomainError(f"lgd must lie in [0,1], got {lgd}")
    if ead < 0.0:
        raise DomainError(f"ead must be >= 0, got {ead}")
    return pd * lgd * ead


def effective_hazard(context: ExposureContext, scenario: Scenario) -> float:
    """Binding scaled hazard intensity for one exposure."""
    return max(
        scenario.hazard_multipliers.get(h, 1.0) * baseline
        for h, baseline in context.baseline_hazards.items()
    )


def portfolio_credit(
    linked: LinkedPortfolio, scenario: Scenario
) -> tuple[list[CreditRow], float]:
    """Evaluate the credit layer for every instrument.

    Rows come back in portfolio order; the total is a deterministic
    left-to-right sum, so identical inputs give bit-identical totals.
    """
    rows: list[CreditRow] = []
    total_el = 0.0
    for inst, context in zip(linked.portfolio.instruments, linked.contexts):
        hazard = effective_hazard(context, scenario)
        transition = scenario.transition.for_sector(inst.sector)
        pd_s = scenario_pd(
            inst.pd0, hazard, transition, context.fragility, inst.adaptation, scenario.betas
        )
        lgd_s = scenario_lgd(inst.lgd0, hazard, scenario.lgd_gamma)
        el_s = expected_loss(pd_s, lgd_s, inst.ead)
        rows.append(CreditRow(id=inst.id, pd_s=pd_s, lgd_s=lgd_s, el_s=el_s))
        total_el += el_s
    return rows, total_el
