import re
from dataclasses import dataclass, replace
from enum import Enum
from typing import FrozenSet, Optional, Tuple

from ..errors import DomainError


class Base(str, Enum):
    PLAIN = 'Plain'
    QUADRATIC_EXT = 'QuadraticExt'


class Duality(str, Enum):
    """Type of a self-dual datum; also the type tag of a simple parameter."""
    ORTHOGONAL = 'Orthogonal'
    SYMPLECTIC = 'Symplectic'

    @classmethod
    def parse(cls, text: str) -> 'Duality':
        try:
            return cls(text.strip().capitalize())
        except ValueError:
            raise DomainError(f"Unknown duality type: {text}", code="unknown_duality")


TypeTag = Duality


@dataclass(frozen=True)
class CharacterLabel:
    """Symbolic quadratic character: a product of order-two tokens."""
    tokens: FrozenSet[str] = frozenset()

    @classmethod
    def of(cls, *tokens: Optional[str]) -> 'CharacterLabel':
        label = cls()
        for token in tokens:
            if token:
                label = label * cls(frozenset([token]))
        return label

    @classmethod
    def parse(cls, text: str) -> 'CharacterLabel':
        text = text.strip()
        if text in ('', '1'):
            return cls()
        return cls.of(*[t.strip() for t in text.split('*')])

    def __mul__(self, other: 'CharacterLabel') -> 'CharacterLabel':
        return CharacterLabel(self.tokens ^ other.tokens)

    @property
    def is_trivial(self) -> bool:
        return not self.tokens

    def __str__(self) -> str:
        return '*'.join(sorted(self.tokens)) if self.tokens else '1'


@dataclass(frozen=True)
class CuspidalDatum:
    """An abstract cuspidal representation tau of GL(a), known only by its invariants."""
    id: str
    a: int
    base: Base = Base.PLAIN
    duality: Optional[Duality] = Duality.ORTHOGONAL
    eta: Optional[int] = None
    central_nonvanishing: Optional[bool] = None
    is_character: bool = False
    partner: Optional[str] = None
    central_character: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.a, int) or self.a < 1:
            raise DomainError(f"{self.id}: dimension a must be a positive integer", code="invalid_tau")
        if self.is_character and self.a != 1:
            raise DomainError(f"{self.id}: a character must have a = 1", code="invalid_tau")
        if self.base == Base.PLAIN:
            if self.eta is not None:
                raise DomainError(f"{self.id}: eta only applies to QuadraticExt data", code="invalid_tau")
            if self.is_self_dual and self.duality is None:
                raise DomainError(f"{self.id}: self-dual Plain datum needs a duality", code="invalid_tau")
            if self.duality == Duality.SYMPLECTIC and self.a % 2:
                raise DomainError(f"{self.id}: symplectic type requires even a", code="invalid_tau")
        else:
            if self.duality is not None:
                object.__setattr__(self, 'duality', None)
            if self.is_self_dual and self.eta not in (1, -1):
                raise DomainError(f"{self.id}: QuadraticExt datum needs eta = +1 or -1", code="invalid_tau")

    @property
    def is_self_dual(self) -> bool:
        return self.partner is None or self.partner == self.id

    @property
    def central_token(self) -> Optional[str]:
        """Token of the (quadratic) central character, None when trivial."""
        if self.central_character is not None:
            return None if self.central_character == '1' else self.central_character
        if self.base != Base.PLAIN or self.duality == Duality.SYMPLECTIC:
            return None
        if self.is_character:
            return None if self.id == '1' else self.id
        return f"omega_{self.id}"

    def dual(self) -> 'CuspidalDatum':
        if self.is_self_dual:
            return self
        return replace(self, id=self.partner, partner=self.id)


TRIVIAL = CuspidalDatum(id='1', a=1, is_character=True)


@dataclass(frozen=True)
class SimpleParameter:
    tau: CuspidalDatum
    b: int

    def __post_init__(self):
        if not isinstance(self.b, int) or self.b < 1:
            raise DomainError(f"b must be a positive integer, got {self.b}", code="invalid_parameter")

    @property
    def size(self) -> int:
        return self.tau.a * self.b

    def key(self) -> Tuple[str, int]:
        return (self.tau.id, self.b)

    def __str__(self) -> str:
        return f"({self.tau.id},{self.b})"


def _sort_key(sp: SimpleParameter):
    return (sp.tau.id, -sp.b)


@dataclass(frozen=True)
class ArthurParameter:
    """Formal sum of simple parameters, stored in a canonical order."""
    summands: Tuple[SimpleParameter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'summands', tuple(sorted(self.summands, key=_sort_key)))

    @classmethod
    def of(cls, *pairs) -> 'ArthurParameter':
        """ArthurParameter.of((tau, 3), (chi, 1)) or of(SimpleParameter, ...)."""
        summands = []
        for pair in pairs:
            summands.append(pair if isinstance(pair, SimpleParameter) else SimpleParameter(*pair))
        return cls(tuple(summands))

    @property
    def N(self) -> int:
        return sum(sp.size for sp in self.summands)

    def taus(self) -> Tuple[CuspidalDatum, ...]:
        seen = {}
        for sp in self.summands:
            seen.setdefault(sp.tau.id, sp.tau)
        return tuple(seen[k] for k in sorted(seen))

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __contains__(self, sp: SimpleParameter) -> bool:
        return sp in self.summands

    def __str__(self) -> str:
        if not self.summands:
            return '0'
        return ' ⊞ '.join(str(sp) for sp in self.summands)


class GroupFamily(str, Enum):
    SO_ODD = 'SOodd'
    SP = 'Sp'
    SO_EVEN = 'SOeven'
    MP = 'Mp'
    U = 'U'

    @classmethod
    def parse(cls, text: str) -> 'GroupFamily':
        for member in cls:
            if member.value.lower() == text.strip().lower():
                return member
        raise DomainError(f"Unknown group family: {text}", code="unknown_family")


_GROUP = re.compile(r'^\s*(SOodd|Sp|SOeven|Mp|U)\s*\(\s*(\d+)\s*(?:,\s*([^)]*))?\)\s*$', re.I)


@dataclass(frozen=True)
class GroupDatum:
    """Classical group by rank: SOodd(n)=SO_{2n+1}, Sp(n)=Sp_{2n}, SOeven(n)=SO_{2n},
    Mp(n)=Mp_{2n}; U(N) is unitary in N variables."""
    family: GroupFamily
    rank: int
    eta: Optional[CharacterLabel] = None
    kappa: Optional[int] = None
    form: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 0:
            raise DomainError(f"{self.family.value}: negative rank {self.rank}", code="negative_rank")
        if self.kappa is not None and self.kappa not in (1, -1):
            raise DomainError(f"kappa must be +1 or -1, got {self.kappa}", code="invalid_sign")
        if self.kappa is not None and self.family != GroupFamily.U:
            raise DomainError("kappa only applies to unitary groups", code="invalid_sign")
        if self.eta is not None and self.family != GroupFamily.SO_EVEN:
            raise DomainError("eta only applies to even orthogonal groups", code="invalid_label")

    @property
    def defining_size(self) -> int:
        if self.family == GroupFamily.SO_ODD:
            return 2 * self.rank + 1
        if self.family == GroupFamily.U:
            return self.rank
        return 2 * self.rank

    @property
    def twisted_size(self) -> int:
        """Size N of the general linear group the dual group embeds into."""
        if self.family == GroupFamily.SP:
            return 2 * self.rank + 1
        if self.family == GroupFamily.U:
            return self.rank
        return 2 * self.rank

    def same_shape(self, other: 'GroupDatum') -> bool:
        if self.family != other.family or self.rank != other.rank:
            return False
        if self.family == GroupFamily.U and None not in (self.kappa, other.kappa):
            return self.kappa == other.kappa
        return True

    @property
    def label(self) -> str:
        if self.family == GroupFamily.U and self.kappa is not None:
            return f"U({self.rank},{'+' if self.kappa > 0 else '-'})"
        return f"{self.family.value}({self.rank})"

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, text: str) -> 'GroupDatum':
        """Parse "Sp(4)", "SOeven(2, omega_t)" or "U(5,+)"."""
        match = _GROUP.match(text)
        if not match:
            raise DomainError(f"Bad group literal: {text}", code="bad_literal")
        family = GroupFamily.parse(match.group(1))
        rank = int(match.group(2))
        extra = (match.group(3) or '').strip()
        if family == GroupFamily.U:
            kappa = {'+': 1, '+1': 1, '1': 1, '-': -1, '-1': -1}.get(extra) if extra else None
            if extra and kappa is None:
                raise DomainError(f"Bad unitary sign in {text}", code="bad_literal")
            return cls(family, rank, kappa=kappa)
        if family == GroupFamily.SO_EVEN:
            return cls(family, rank, eta=CharacterLabel.parse(extra) if extra else None)
        if extra:
            raise DomainError(f"{family.value} takes no decoration: {text}", code="bad_literal")
        return cls(family, rank)


def orthogonal(size: int, eta: Optional[CharacterLabel] = None, form: Optional[str] = None) -> GroupDatum:
    """Orthogonal group of a given defining size."""
    if size < 0:
        raise DomainError(f"negative orthogonal size {size}", code="negative_rank")
    if size % 2:
        return GroupDatum(GroupFamily.SO_ODD, (size - 1) // 2, form=form)
    return GroupDatum(GroupFamily.SO_EVEN, size // 2, eta=eta, form=form)

