from typing import Optional, Union

from ..errors import DomainError
from .models import Base, CharacterLabel, Duality, SimpleParameter, TypeTag


def _power(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def sign_of_simple(sp: SimpleParameter, kappa_a: Optional[int] = None) -> Union[TypeTag, int]:
    """Type of (tau, b): a duality tag for Plain tau, a sign for QuadraticExt tau."""
    tau = sp.tau
    if not tau.is_self_dual:
        raise DomainError(f"{tau.id} is not self-dual", code="not_self_dual")

    if tau.base == Base.PLAIN:
        orthogonal = (tau.duality == Duality.ORTHOGONAL) == (sp.b % 2 == 1)
        return Duality.ORTHOGONAL if orthogonal else Duality.SYMPLECTIC

    if kappa_a is not None and tau.eta != kappa_a * _power(tau.a - 1):
        raise DomainError(
            f"inconsistent kappa_a={kappa_a} for {tau.id}: eta_tau must equal kappa_a(-1)^(a-1)",
            code="inconsistent_sign")
    return tau.eta * _power(sp.b - 1)


def kappa_ab(kappa_a: int, a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise DomainError(f"a and b must be positive, got a={a}, b={b}", code="invalid_parameter")
    return kappa_a * _power(a * b - a - b + 1)


def kappa_of(tau_eta: int, a: int) -> int:
    """The kappa_a with eta_tau = kappa_a(-1)^(a-1)."""
    return tau_eta * _power(a - 1)


def eta_of_simple(sp: SimpleParameter) -> CharacterLabel:
    """Central character of (tau, b): omega_tau to the power b."""
    token = sp.tau.central_token
    return CharacterLabel.of(token) if token and sp.b % 2 else CharacterLabel()


def parity_sign(exponent: int) -> int:
    return _power(exponent)
