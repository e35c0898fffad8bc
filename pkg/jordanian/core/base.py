"""
Jordanian Base Classes
======================

Abstract verification suite and the context every suite runs in.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional
import logging

from sympy.polys.fields import FracElement

from .config import VerificationSettings
from .exceptions import ValidationException
from .params import Deformation
from .report import VerificationReport
from .scalars import ScalarRing, scalar_ring, symbols_in


COLOUR_ROLES = ('lambda', 'mu', 'nu', 'eta')
PARAMETERS = ('h', 's')


@dataclass(frozen=True)
class SuiteContext:
    """Colours, deformation parameters and settings shared by a run"""
    params: Deformation
    colours: Dict[str, FracElement]
    settings: VerificationSettings = field(default_factory=VerificationSettings)

    @property
    def ring(self) -> ScalarRing:
        return self.params.ring

    @property
    def lam(self) -> FracElement:
        return self.colours['lambda']

    @property
    def mu(self) -> FracElement:
        return self.colours['mu']

    @property
    def nu(self) -> FracElement:
        return self.colours['nu']

    @property
    def eta(self) -> FracElement:
        return self.colours['eta']

    def describe(self) -> Dict[str, str]:
        described = {role: self.ring.format(value) for role, value in self.colours.items()}
        described.update(self.params.describe())
        return described


def build_context(
    colours: Optional[Mapping[str, str]] = None,
    at: Optional[Mapping[str, str]] = None,
    settings: Optional[VerificationSettings] = None
) -> SuiteContext:
    """
    Resolve colour expressions and ``--at`` bindings into a context

    Colours default to the symbols lambda, mu, nu and eta. Bindings may set
    h, s and any colour symbol; the values are parsed in the ring of the
    colour expressions (so ``s=h`` is allowed) and the bound colour symbols
    are removed from the ring of the result.

    Args:
        colours: Role ('lambda', 'mu', 'nu', 'eta') -> scalar expression
        at: Symbol -> scalar expression
        settings: Verification settings

    Returns:
        SuiteContext: Ready-to-run context

    Raises:
        ValidationException: Unknown colour role
        ScalarException / ExpressionException: Malformed values
    """
    texts = {role: role for role in COLOUR_ROLES}
    for role, text in (colours or {}).items():
        if role not in COLOUR_ROLES:
            raise ValidationException(f"Unknown colour role '{role}'", {'roles': list(COLOUR_ROLES)})
        texts[role] = str(text)
    at = {str(k): str(v) for k, v in (at or {}).items()}

    names = []
    for text in list(texts.values()) + list(at.values()):
        for name in symbols_in(text):
            if name not in PARAMETERS and name not in names:
                names.append(name)
    base = scalar_ring(names)
    values = {role: base(text) for role, text in texts.items()}

    if not at:
        return SuiteContext(Deformation.symbolic(base), values, settings or VerificationSettings())

    unknown = [k for k in at if k not in base.symbols]
    if unknown:
        raise ValidationException(f"Cannot bind unknown symbol '{unknown[0]}'", {'symbols': list(base.symbols)})
    bindings = {name: base(text) for name, text in at.items()}
    target = scalar_ring([n for n in names if n not in bindings])
    params = Deformation(
        target,
        base.substitute(base.h, bindings, target),
        base.substitute(base.s, bindings, target),
    )
    values = {role: base.substitute(value, bindings, target) for role, value in values.items()}
    return SuiteContext(params, values, settings or VerificationSettings())


class BaseSuite(ABC):
    """Basic class for all verification suites"""

    name: str = ''

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Args:
            config: Suite configuration
        """
        self.config = config or {}
        self.logger = self._setup_logger()
        self._initialized = False

    def _setup_logger(self) -> logging.Logger:
        """Configuring the logger for a suite"""
        logger_name = f"jordanian.{self.__class__.__name__.lower()}"
        return logging.getLogger(logger_name)

    def initialize(self) -> None:
        """Suite initialization"""
        self._initialized = True

    def validate_config(self) -> bool:
        """Configuration validation: no unknown keys"""
        unknown = set(self.config) - set(self.config_keys())
        if unknown:
            self.logger.error(f"Unknown configuration keys: {sorted(unknown)}")
            return False
        return True

    def config_keys(self) -> tuple:
        return ()

    @abstractmethod
    def run(self, context: SuiteContext) -> VerificationReport:
        """Verify every identity of the suite"""
        pass

    def is_initialized(self) -> bool:
        """Initialization verification"""
        return self._initialized

    def get_info(self) -> Dict[str, Any]:
        """Getting info on a suite"""
        return {
            'name': self.name,
            'class': self.__class__.__name__,
            'initialized': self._initialized,
            'config': self.config
        }

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.name!r})"
