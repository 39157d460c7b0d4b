"""
One dimensional Muskat integrals over [0, oo):

    A_confined = 2 dz2(0) int dz1 sinh(z1) sin(z2) (1/(cosh z1 - cos z2)^2 + 1/(cosh z1 + cos z2)^2)
    A_flat     = 8 dz2(0) int dz1 z1 z2 / (z1^2 + z2^2)^2

I1 of the confined inhomogeneous problem is A_confined of the bifurcation family.

Near eta = 0 the singular fraction is 0/0 (numerator of order 6, denominator of order 4),
so the window [0, NEAR_WINDOW] goes through cancel_expand(). Beyond the support radius the
integrands vanish because z2 does, which is certified on [support, support + 1].
"""

import dataclasses
import logging
from collections.abc import Callable

from capverify.errors import BudgetExhausted, CertificateFailed
from capverify.interval_core import ZERO, Interval
from capverify.muskat_verify.curves import CurveFamily, CurvePoint, curve_bifurcation
from capverify.quad_rigor import Enclosure, integrate_adaptive, value_enclosure
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET
from capverify.singular_quad import cancel_expand
from capverify.taylor_ad import JetFunction, TaylorJet, as_jet, jet_cos, jet_cosh, jet_sin, jet_sinh, jet_variable


logger = logging.getLogger(__name__)

NEAR_WINDOW = 1e-2
NEAR_ORDER = 8
NEAR_DROP = 4
DEFAULT_MUSKAT_TOL = 1e-4

CurveExpression = Callable[[CurvePoint], TaylorJet]


@dataclasses.dataclass(frozen=True)
class CurveIntegrand:
    """
    prefactor * dz2(0) * int numerator / denominator + regular
    where numerator / denominator is 0/0 at eta = 0.
    """

    name: str
    prefactor: int
    numerator: CurveExpression
    denominator: CurveExpression
    regular: CurveExpression | None = None


def _confined_numerator(p: CurvePoint) -> TaylorJet:
    return p.dz1 * jet_sinh(p.z1) * jet_sin(p.z2)


def _confined_denominator(p: CurvePoint) -> TaylorJet:
    difference = jet_cosh(p.z1) - jet_cos(p.z2)
    return difference * difference


def _confined_regular(p: CurvePoint) -> TaylorJet:
    total = jet_cosh(p.z1) + jet_cos(p.z2)
    return _confined_numerator(p) / (total * total)


def _flat_numerator(p: CurvePoint) -> TaylorJet:
    return p.dz1 * p.z1 * p.z2


def _flat_denominator(p: CurvePoint) -> TaylorJet:
    square = p.z1 * p.z1 + p.z2 * p.z2
    return square * square


CONFINED = CurveIntegrand('a_confined', 2, _confined_numerator, _confined_denominator, _confined_regular)
FLAT = CurveIntegrand('a_flat', 8, _flat_numerator, _flat_denominator)


def singular_part(curve: CurveFamily, integrand: CurveIntegrand) -> JetFunction:
    def func(x: TaylorJet) -> TaylorJet:
        p = curve.at(x)
        return integrand.numerator(p) / integrand.denominator(p)

    return func


def regular_part(curve: CurveFamily, integrand: CurveIntegrand) -> JetFunction | None:
    if integrand.regular is None:
        return None
    regular = integrand.regular

    def func(x: TaylorJet) -> TaylorJet:
        return regular(curve.at(x))

    return func


def certify_support(curve: CurveFamily, integrand: CurveIntegrand) -> None:
    """The integrand must be exactly zero on [support, support + 1]."""
    window = Interval(curve.support_radius.hi, curve.support_radius.hi + 1.0)
    parts = [singular_part(curve, integrand), regular_part(curve, integrand)]
    for part in parts:
        if part is None:
            continue
        value = value_enclosure(part, window)
        if value != ZERO:
            raise CertificateFailed(f'{integrand.name} integrand is {value} on {window}, not zero')
    logger.debug(f'{integrand.name}: integrand vanishes on {window}')


def near_window(curve: CurveFamily, integrand: CurveIntegrand, tol: float) -> Enclosure:
    """Integral of the singular fraction over [0, NEAR_WINDOW] via cancellation at eta = 0."""
    point = jet_variable(0, NEAR_ORDER)
    window = jet_variable(Interval(0.0, NEAR_WINDOW), NEAR_ORDER)
    at_point = curve.at(point)
    at_window = curve.at(window)
    ratio = cancel_expand(
        as_jet(integrand.numerator(at_point), like=point),
        as_jet(integrand.denominator(at_point), like=point),
        NEAR_DROP,
        num_window=as_jet(integrand.numerator(at_window), like=window),
        den_window=as_jet(integrand.denominator(at_window), like=window),
    )
    return ratio.integrate(0, NEAR_WINDOW, tol=tol)


def integrate_curve(
    curve: CurveFamily,
    integrand: CurveIntegrand,
    tol: float = DEFAULT_MUSKAT_TOL,
    budget: int = DEFAULT_BUDGET,
    sign: int = 1,
) -> Enclosure:
    """
    Enclosure of prefactor * dz2(0) * int_0^oo integrand, with width <= tol unless the budget runs out.
    `sign=-1` flips the integrand.
    """
    if sign not in (1, -1):
        raise ValueError(f'sign must be 1 or -1, got {sign}')
    if NEAR_WINDOW >= curve.support_radius.lo:
        raise ValueError(f'Support {curve.support_radius} is inside the near window')
    certify_support(curve, integrand)

    scale = curve.dz2_at_zero() * (integrand.prefactor * sign)
    magnitude = scale.magnitude()
    inner_tol = tol / 3 if magnitude == 0 else tol / (3 * magnitude)
    support = curve.support_radius
    breakpoints = curve.breakpoints

    exhausted = []

    def run(name: str, compute: Callable[[], Enclosure]) -> tuple[str, Enclosure]:
        try:
            return name, compute()
        except BudgetExhausted as err:
            logger.info(f'{integrand.name} {name}: {err}')
            exhausted.append(str(err))
            return name, err.enclosure

    parts = [
        run('near', lambda: near_window(curve, integrand, inner_tol)),
        run(
            'singular',
            lambda: integrate_adaptive(
                singular_part(curve, integrand), NEAR_WINDOW, support, inner_tol, budget, breakpoints
            ),
        ),
    ]
    regular = regular_part(curve, integrand)
    if regular is not None:
        parts.append(run('regular', lambda: integrate_adaptive(regular, 0, support, inner_tol, budget, breakpoints)))

    main = ZERO
    error = ZERO
    cells = 0
    for _, part in parts:
        main = main + part.main
        error = error + part.error_term
        cells += part.cells
    enclosure = Enclosure.build(
        main * scale,
        error * scale,
        cells=cells,
        scheme=integrand.name,
        parts=tuple((name, part.scaled(scale)) for name, part in parts),
    )
    logger.info(f'{integrand.name} of {curve.name!r} curve: {enclosure.value}')
    if exhausted:
        raise BudgetExhausted('; '.join(exhausted), enclosure=enclosure)
    return enclosure


def a_confined(
    curve: CurveFamily, tol: float = DEFAULT_MUSKAT_TOL, budget: int = DEFAULT_BUDGET, sign: int = 1
) -> Enclosure:
    return integrate_curve(curve, CONFINED, tol, budget, sign)


def a_flat(
    curve: CurveFamily, tol: float = DEFAULT_MUSKAT_TOL, budget: int = DEFAULT_BUDGET, sign: int = 1
) -> Enclosure:
    return integrate_curve(curve, FLAT, tol, budget, sign)


def i1(h2: Interval | float, tol: float = DEFAULT_MUSKAT_TOL, budget: int = DEFAULT_BUDGET) -> Enclosure:
    """I1 is the confined integral of the bifurcation curve."""
    enclosure = a_confined(curve_bifurcation(h2), tol, budget)
    return dataclasses.replace(enclosure, scheme='i1')
