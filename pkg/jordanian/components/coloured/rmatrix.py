"""
Coloured Jordanian R-Matrix
===========================

Direct construction of R^{(λ,μ)}, the braid operator R̂ = P·R and the
monochromatic specializations.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional
import logging

from sympy.polys.fields import FracElement

from ...core.exceptions import ScalarException, ValidationException
from ...core.matrix import ParamMatrix, flip_matrix
from ...core.params import Deformation, resolve
from ...core.scalars import ScalarLike, ScalarRing, is_polynomial, scalar_ring


logger = logging.getLogger('jordanian.coloured')

PRESETS = ('two-parameter', 'one-parameter')


@dataclass(frozen=True)
class ColouredRMatrix:
    """R^{(λ,μ)} together with its colours"""
    lam: FracElement
    mu: FracElement
    matrix: ParamMatrix

    @property
    def ring(self) -> ScalarRing:
        return self.matrix.ring

    def invariant_violations(self) -> List[str]:
        """Unit upper-triangular with polynomial entries"""
        problems = []
        m = self.matrix
        for i in range(4):
            for j in range(4):
                value = m[i, j]
                if i == j and value != self.ring.one:
                    problems.append(f"diagonal entry ({i + 1},{j + 1}) is not 1")
                elif i > j and value:
                    problems.append(f"entry ({i + 1},{j + 1}) below the diagonal is nonzero")
                if not is_polynomial(value):
                    problems.append(f"entry ({i + 1},{j + 1}) is not polynomial")
        return problems


@dataclass(frozen=True)
class BraidOperator:
    """R̂^{(λ,μ)} = P·R^{(λ,μ)}"""
    lam: FracElement
    mu: FracElement
    matrix: ParamMatrix


def coloured_R(lam: ScalarLike, mu: ScalarLike, params: Optional[Deformation] = None) -> ColouredRMatrix:
    """
    The coloured Jordanian R-matrix

    Rows: (1, h+λs, -(h+μs), f(λ,μ)), (0, 1, 0, h-μs), (0, 0, 1, -(h-λs)),
    (0, 0, 0, 1).

    Args:
        lam: First colour
        mu: Second colour
        params: Values of h and s

    Returns:
        ColouredRMatrix: R^{(λ,μ)}
    """
    params, (lam, mu) = resolve(lam, mu, params=params)
    rows = [
        [1, params.plus(lam), -params.plus(mu), params.f(lam, mu)],
        [0, 1, 0, params.minus(mu)],
        [0, 0, 1, -params.minus(lam)],
        [0, 0, 0, 1],
    ]
    return ColouredRMatrix(lam, mu, ParamMatrix.from_rows(rows, params.ring))


def braid_operator(lam: ScalarLike, mu: ScalarLike, params: Optional[Deformation] = None) -> BraidOperator:
    """R̂^{(λ,μ)} = P·R^{(λ,μ)}"""
    r = coloured_R(lam, mu, params)
    return BraidOperator(r.lam, r.mu, flip_matrix(2, r.ring) * r.matrix)


def _symbol(ring: ScalarRing, value: FracElement, role: str) -> str:
    try:
        return ring.symbol_name(value)
    except ScalarException:
        raise ValidationException(f"Preset needs {role} to be a colour symbol", {role: ring.format(value)})


def preset_bindings(r: ColouredRMatrix, preset: str) -> Dict[str, object]:
    """
    Bindings and target ring for a named preset

    ``two-parameter``: λ = μ = η with z' = h + ηs and z = h - ηs, written as
    h -> (z + zprime)/2 and λ, μ -> (zprime - z)/(2s) in a ring with the
    colours z and zprime.

    ``one-parameter``: λ = μ = 0.
    """
    ring = r.ring
    lam_name = _symbol(ring, r.lam, 'lambda')
    mu_name = _symbol(ring, r.mu, 'mu')

    if preset == 'one-parameter':
        return {'bindings': {lam_name: 0, mu_name: 0}, 'target': ring}
    if preset == 'two-parameter':
        remaining = [c for c in ring.colours if c not in (lam_name, mu_name)]
        target = scalar_ring(remaining + ['z', 'zprime'])
        z, zprime = target.gen('z'), target.gen('zprime')
        eta = (zprime - z) / (2 * target.s)
        return {
            'bindings': {'h': (z + zprime) / 2, lam_name: eta, mu_name: eta},
            'target': target,
        }
    raise ValidationException(f"Unknown preset '{preset}'", {'presets': list(PRESETS)})


def specialize(
    r: ColouredRMatrix,
    bindings: Optional[Mapping[str, ScalarLike]] = None,
    preset: Optional[str] = None
) -> ColouredRMatrix:
    """
    Substitute symbols in R^{(λ,μ)} entrywise

    Args:
        r: Coloured R-matrix
        bindings: Symbol name -> value (in r's ring)
        preset: 'two-parameter' or 'one-parameter' instead of bindings

    Returns:
        ColouredRMatrix: Specialized matrix with substituted colours
    """
    target: ScalarRing = r.ring
    if preset is not None:
        resolved = preset_bindings(r, preset)
        bindings, target = resolved['bindings'], resolved['target']
    bindings = dict(bindings or {})
    if not bindings and target is r.ring:
        return r

    ring = r.ring
    lam = ring.substitute(r.lam, bindings, target)
    mu = ring.substitute(r.mu, bindings, target)
    logger.debug(f"Specializing R with {sorted(bindings)} into {target!r}")
    return ColouredRMatrix(lam, mu, r.matrix.substitute(bindings, target))
