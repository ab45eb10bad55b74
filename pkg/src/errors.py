from typing import Dict


class DomainError(ValueError):
    """Raised when an input falls outside the combinatorial model."""

    def __init__(self, message: str, code: str = "domain_error"):
        super().__init__(message)
        self.code = code
        self.message = message

    def to_dict(self) -> Dict[str, str]:
        return {'error': self.code, 'message': self.message}


class ConfigError(DomainError):
    """Raised for malformed configuration files."""

    def __init__(self, message: str):
        super().__init__(message, code="config_error")
