"""
Coloured R-Matrix Verification
==============================

Coloured Yang-Baxter equation, coloured unitarity, braided YBE,
characteristic equation of R̂, specializations and the one-parameter case.
"""

from typing import Mapping, Optional, Tuple
import logging

from ...core.matrix import ParamMatrix, flip_matrix, leg_embed, mat_inverse
from ...core.params import Deformation, resolve
from ...core.report import VerificationReport
from ...core.scalars import ScalarLike, scalar_ring
from ..representation.checks import check_defining_relations
from ..representation.rep import universal_R_rep
from .rmatrix import braid_operator, coloured_R, specialize


logger = logging.getLogger('jordanian.coloured.checks')

DEFAULT_HECKE_WITNESS = {'h': '1', 's': '1', 'lambda': '1', 'mu': '2'}


def ybe_residual(lam: ScalarLike, mu: ScalarLike, nu: ScalarLike, params: Optional[Deformation] = None) -> ParamMatrix:
    """R12(λ,μ) R13(λ,ν) R23(μ,ν) - R23(μ,ν) R13(λ,ν) R12(λ,μ)"""
    params, (lam, mu, nu) = resolve(lam, mu, nu, params=params)
    r12 = leg_embed(coloured_R(lam, mu, params).matrix, (1, 2), 2)
    r13 = leg_embed(coloured_R(lam, nu, params).matrix, (1, 3), 2)
    r23 = leg_embed(coloured_R(mu, nu, params).matrix, (2, 3), 2)
    return r12 * r13 * r23 - r23 * r13 * r12


def verify_coloured_ybe(
    lam: ScalarLike,
    mu: ScalarLike,
    nu: ScalarLike,
    params: Optional[Deformation] = None
) -> VerificationReport:
    """Coloured Yang-Baxter equation as an exact 8×8 identity"""
    report = VerificationReport('coloured-ybe')
    report.check_matrix(
        "R12(l,m) R13(l,n) R23(m,n) = R23(m,n) R13(l,n) R12(l,m)",
        lambda: ybe_residual(lam, mu, nu, params)
    )
    return report


def verify_universal_agreement(
    lam: ScalarLike,
    mu: ScalarLike,
    params: Optional[Deformation] = None,
    bound: Optional[int] = None
) -> VerificationReport:
    """Universal R in π_λ ⊗ π_μ equals the directly built coloured R, which is unit upper-triangular"""
    params, (lam, mu) = resolve(lam, mu, params=params)
    report = VerificationReport('universal-agreement')
    direct = coloured_R(lam, mu, params)
    report.check_matrix(
        "(pi_l x pi_m) universal R = R(l,m)",
        lambda: universal_R_rep(lam, mu, params, bound) - direct.matrix
    )
    problems = direct.invariant_violations()
    report.add_fact(
        "R(l,m) is unit upper-triangular with polynomial entries",
        not problems,
        {'problems': problems} if problems else None
    )
    return report


def verify_coloured_unitarity(lam: ScalarLike, mu: ScalarLike, params: Optional[Deformation] = None) -> VerificationReport:
    """
    Coloured form of triangularity

    R^{(λ,μ)} · P R^{(μ,λ)} P = 1, and P R^{(μ,λ)} P = (R^{(λ,μ)})^{-1}.
    """
    params, (lam, mu) = resolve(lam, mu, params=params)
    ring = params.ring
    report = VerificationReport('coloured-unitarity')
    flip = flip_matrix(2, ring)
    forward = coloured_R(lam, mu, params).matrix
    swapped = flip * coloured_R(mu, lam, params).matrix * flip

    report.check_matrix("R(l,m) P R(m,l) P = 1", lambda: forward * swapped - ParamMatrix.identity(4, ring))
    report.check_matrix("P R(m,l) P = R(l,m)^-1", lambda: swapped - mat_inverse(forward))
    return report


def braided_ybe_residual(lam: ScalarLike, mu: ScalarLike, nu: ScalarLike, params: Optional[Deformation] = None) -> ParamMatrix:
    """R̂23(λ,μ) R̂12(λ,ν) R̂23(μ,ν) - R̂12(μ,ν) R̂23(λ,ν) R̂12(λ,μ)"""
    params, (lam, mu, nu) = resolve(lam, mu, nu, params=params)
    b_lm = braid_operator(lam, mu, params).matrix
    b_ln = braid_operator(lam, nu, params).matrix
    b_mn = braid_operator(mu, nu, params).matrix
    lhs = leg_embed(b_lm, (2, 3), 2) * leg_embed(b_ln, (1, 2), 2) * leg_embed(b_mn, (2, 3), 2)
    rhs = leg_embed(b_mn, (1, 2), 2) * leg_embed(b_ln, (2, 3), 2) * leg_embed(b_lm, (1, 2), 2)
    return lhs - rhs


def verify_braided_ybe(
    lam: ScalarLike,
    mu: ScalarLike,
    nu: ScalarLike,
    params: Optional[Deformation] = None
) -> VerificationReport:
    report = VerificationReport('braided-ybe')
    report.check_matrix(
        "Rh23(l,m) Rh12(l,n) Rh23(m,n) = Rh12(m,n) Rh23(l,n) Rh12(l,m)",
        lambda: braided_ybe_residual(lam, mu, nu, params)
    )
    return report


def _factor_products(braid: ParamMatrix) -> Tuple[ParamMatrix, ParamMatrix, ParamMatrix]:
    """(R̂-1)(R̂+1), (R̂-1)^2(R̂+1), (R̂-1)^3(R̂+1)"""
    eye = ParamMatrix.identity(braid.rows, braid.ring)
    minus, plus = braid - eye, braid + eye
    first = minus * plus
    second = minus * first
    return first, second, minus * second


def verify_characteristic_equation(
    lam: ScalarLike,
    mu: ScalarLike,
    params: Optional[Deformation] = None,
    witness: Optional[Mapping[str, str]] = None
) -> VerificationReport:
    """
    Spectral structure of the braid operator

    - (R̂-1)^3 (R̂+1) = 0 with the given colours
    - at a witness point with λ ≠ μ, (R̂-1)(R̂+1) and (R̂-1)^2 (R̂+1) do not
      vanish, so R̂ is not of Hecke type
    - at equal colours R̂^2 = 1

    Args:
        lam: First colour
        mu: Second colour
        params: Values of h and s
        witness: Values for h, s, lambda, mu (default h=s=1, λ=1, μ=2)
    """
    params, (lam, mu) = resolve(lam, mu, params=params)
    ring = params.ring
    witness = dict(witness or DEFAULT_HECKE_WITNESS)
    report = VerificationReport('characteristic-equation')

    report.check_matrix(
        "(Rh - 1)^3 (Rh + 1) = 0",
        lambda: _factor_products(braid_operator(lam, mu, params).matrix)[2]
    )

    def hecke_failure() -> Tuple[bool, dict]:
        point = Deformation(ring, ring(witness['h']), ring(witness['s']))
        w_lam, w_mu = ring(witness['lambda']), ring(witness['mu'])
        first, second, third = _factor_products(braid_operator(w_lam, w_mu, point).matrix)
        details = {
            'witness': dict(witness),
            'hecke_product_vanishes': first.is_zero(),
            'cubic_product_vanishes': second.is_zero(),
            'quartic_product_vanishes': third.is_zero(),
        }
        return w_lam != w_mu and not first.is_zero() and not second.is_zero() and third.is_zero(), details

    report.check_fact("(Rh - 1)(Rh + 1) != 0 and (Rh - 1)^2 (Rh + 1) != 0 at the witness", hecke_failure)

    report.check_matrix(
        "Rh(l,l)^2 = 1",
        lambda: _square_minus_identity(braid_operator(lam, lam, params).matrix)
    )
    return report


def _square_minus_identity(m: ParamMatrix) -> ParamMatrix:
    return m * m - ParamMatrix.identity(m.rows, m.ring)


def verify_specializations() -> VerificationReport:
    """
    Monochromatic limits of R^{(λ,μ)}

    The two-parameter preset gives [[1,z',-z',zz'],[0,1,0,z],[0,0,1,-z],[0,0,0,1]];
    the one-parameter preset gives [[1,h,-h,h^2],[0,1,0,h],[0,0,1,-h],[0,0,0,1]].
    Both run with symbolic h and s in the ring of λ, μ.
    """
    ring = scalar_ring(['lambda', 'mu'])
    params = Deformation.symbolic(ring)
    report = VerificationReport('specializations')
    r = coloured_R(ring.gen('lambda'), ring.gen('mu'), params)

    def two_parameter() -> ParamMatrix:
        special = specialize(r, preset='two-parameter')
        target = special.ring
        z, zp = target.gen('z'), target.gen('zprime')
        expected = ParamMatrix.from_rows(
            [[1, zp, -zp, z * zp], [0, 1, 0, z], [0, 0, 1, -z], [0, 0, 0, 1]], target
        )
        return special.matrix - expected

    def one_parameter() -> ParamMatrix:
        h = ring.h
        expected = ParamMatrix.from_rows(
            [[1, h, -h, h ** 2], [0, 1, 0, h], [0, 0, 1, -h], [0, 0, 0, 1]], ring
        )
        return specialize(r, preset='one-parameter').matrix - expected

    report.check_matrix("lambda = mu = eta, z' = h + eta s, z = h - eta s gives the (z, z') matrix", two_parameter)
    report.check_matrix("lambda = mu = 0 gives the one-parameter matrix", one_parameter)
    return report


def one_parameter_check(
    eta: ScalarLike,
    lam: ScalarLike,
    mu: ScalarLike,
    nu: ScalarLike,
    params: Optional[Deformation] = None
) -> VerificationReport:
    """Defining relations in π_η and the coloured YBE with s = h"""
    params, (eta, lam, mu, nu) = resolve(eta, lam, mu, nu, params=params)
    single = Deformation(params.ring, params.h, params.h)
    report = VerificationReport('one-parameter')
    for entry in check_defining_relations(eta, single):
        report.add_entry({**entry, 'identity': f"s = h: {entry['identity']}"})
    report.check_matrix(
        "s = h: coloured Yang-Baxter equation",
        lambda: ybe_residual(lam, mu, nu, single)
    )
    return report
