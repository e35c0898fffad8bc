"""
Jordanian Custom Exceptions
===========================

Exception hierarchy shared by every layer of the library.
"""


class JordanianException(Exception):
    """Basic exception for all Jordanian errors"""

    def __init__(self, message: str, details: dict = None):
        """
        Args:
            message: Error message
            details: Additional error details
        """
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self):
        if self.details:
            return f"{self.message} | Details: {self.details}"
        return self.message


class ScalarException(JordanianException):
    """Scalar field exception (zero division, vanishing denominator)"""
    pass


class ExpressionException(JordanianException):
    """Scalar expression could not be parsed"""

    @property
    def position(self):
        return self.details.get('position')


class MatrixException(JordanianException):
    """Matrix shape or invertibility exception"""
    pass


class SectorLimitException(JordanianException):
    """Word sector larger than the configured limit"""
    pass


class ConfigException(JordanianException):
    """Configuration exception"""
    pass


class ValidationException(JordanianException):
    """Input validation exception"""
    pass


class PipelineException(JordanianException):
    """Exception in verification pipeline"""
    pass
