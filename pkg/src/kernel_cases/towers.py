from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from loguru import logger

from ..errors import DomainError
from ..parameters import (
    ArthurParameter, Base, CuspidalDatum, Duality, GroupDatum, GroupFamily, SimpleParameter,
    TRIVIAL, boxminus, boxplus, classifies_into, orthogonal, sign_of_simple
)

SO_ODD, SP, SO_EVEN, MP = GroupFamily.SO_ODD, GroupFamily.SP, GroupFamily.SO_EVEN, GroupFamily.MP

ORTHOGONAL_TOWER = 'orthogonal'
METAPLECTIC_TOWER = 'metaplectic'
DESCENT_CHAIN = 'descent-chain'


@dataclass(frozen=True)
class TowerNode:
    """One level of a tower; level_b is negative on the descending branch."""
    level_b: int
    group: GroupDatum
    parameter: ArthurParameter
    annotation: str = ''


@dataclass
class Tower:
    base: GroupDatum
    base_parameter: ArthurParameter
    tau: CuspidalDatum
    shape: str
    nodes: List[TowerNode] = field(default_factory=list)

    def __iter__(self) -> Iterator[TowerNode]:
        return iter(self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class TriangleVertex:
    group: GroupDatum
    parameter: ArthurParameter


@dataclass(frozen=True)
class Triangle:
    name: str
    vertices: Tuple[TriangleVertex, TriangleVertex, TriangleVertex]
    edges: Tuple[Tuple[int, int, str], ...]


@dataclass(frozen=True)
class TriangleRecord:
    tau: CuspidalDatum
    l: int
    basic: Triangle
    dual: Optional[Triangle] = None


def _required_type(family: GroupFamily) -> Duality:
    return Duality.SYMPLECTIC if family in (SO_ODD, MP) else Duality.ORTHOGONAL


def _plus(psi: ArthurParameter, tau: CuspidalDatum, b: int) -> ArthurParameter:
    if b == 0:
        return psi
    return boxplus(psi, ArthurParameter((SimpleParameter(tau, b),)))


def _check_tau(tau: CuspidalDatum):
    if not tau.is_self_dual or tau.base != Base.PLAIN:
        raise DomainError(f"towers need a self-dual tau over F, got {tau.id}", code="invalid_tau")


def _linear_tower(base: GroupDatum, psi_base: ArthurParameter, tau: CuspidalDatum, steps: int,
                  b0: int, grow) -> List[TowerNode]:
    """Levels b0, b0+2, ... upwards, and psi_base minus (tau, b) downwards while possible."""
    a = tau.a
    nodes = []
    for k in range(steps):
        b = b0 + 2 * k
        nodes.append(TowerNode(b, grow(a * b), _plus(psi_base, tau, b), f"⊞({tau.id},{b})"))

    b = b0 if b0 else 2
    while True:
        sp = SimpleParameter(tau, b)
        if sp not in psi_base:
            break
        if grow(-a * b) is None:
            logger.warning(f"descending branch truncated at ({tau.id},{b}): group size would be negative")
            break
        nodes.append(TowerNode(-b, grow(-a * b), boxminus(psi_base, sp), f"⊟({tau.id},{b})"))
        b += 2
    return sorted(nodes, key=lambda n: n.level_b)


def build_tower(base: GroupDatum, psi_base: ArthurParameter, tau: CuspidalDatum,
                steps: int) -> Tower:
    """Tower of constructions obtained by letting b vary for a fixed tau."""
    _check_tau(tau)
    if steps < 0:
        raise DomainError(f"steps must be non-negative, got {steps}", code="invalid_parameter")
    if psi_base.N != base.twisted_size:
        raise DomainError(f"base parameter has N = {psi_base.N}, {base.label} needs {base.twisted_size}",
                          code="size_mismatch")
    a = tau.a

    if a % 2 == 0 and base.family in (SP, MP) and tau.duality == Duality.SYMPLECTIC:
        return _descent_chain(base, psi_base, tau, steps)

    if a % 2 == 0 and base.family in (SO_ODD, SO_EVEN):
        wanted = _required_type(base.family)
        b0 = 1 if sign_of_simple(SimpleParameter(tau, 1)) == wanted else 2
        size = base.defining_size

        def grow(delta):
            return orthogonal(size + delta) if size + delta >= 0 else None
        shape = ORTHOGONAL_TOWER
    elif a % 2 == 1 and tau.duality == Duality.ORTHOGONAL and base.family in (SO_ODD, MP):
        b0 = 0
        if base.family == SO_ODD:
            size = base.defining_size - 1

            def grow(delta):
                return GroupDatum(MP, (size + delta) // 2) if size + delta >= 0 else None
        else:
            size = base.defining_size + 1

            def grow(delta):
                return orthogonal(size + delta) if size + delta >= 1 else None
        shape = METAPLECTIC_TOWER
    else:
        raise DomainError(
            f"no tower shape for base {base.label} with {tau.duality.value.lower()} tau of dimension {a}",
            code="no_tower_shape")

    nodes = _linear_tower(base, psi_base, tau, steps, b0, grow)
    logger.debug(f"{shape} tower over {base.label}: {len(nodes)} nodes")
    return Tower(base, psi_base, tau, shape, nodes)


def _chain_parameter(tau: CuspidalDatum, b: int) -> ArthurParameter:
    summands = []
    if b:
        summands.append(SimpleParameter(tau, b))
    if b % 2 == 0:
        summands.append(SimpleParameter(TRIVIAL, 1))
    return ArthurParameter(tuple(summands))


def _chain_group(tau: CuspidalDatum, b: int) -> GroupDatum:
    return GroupDatum(MP if b % 2 else SP, tau.a * b // 2)


def _descent_chain(base: GroupDatum, psi_base: ArthurParameter, tau: CuspidalDatum,
                   steps: int) -> Tower:
    if tau.central_nonvanishing is not True:
        raise DomainError(f"descent chain needs L(1/2, {tau.id}) != 0", code="hypothesis_missing")
    levels = [sp.b for sp in psi_base if sp.tau.id == tau.id]
    start = levels[0] if levels else 0
    if psi_base != _chain_parameter(tau, start) or not _chain_group(tau, start).same_shape(base):
        raise DomainError(f"{psi_base} on {base.label} is not a level of the descent chain of {tau.id}",
                          code="no_tower_shape")
    nodes = []
    for b in range(start + 1, start + 1 + steps):
        nodes.append(TowerNode(b, _chain_group(tau, b), _chain_parameter(tau, b), f"({tau.id},{b})"))
    return Tower(base, psi_base, tau, DESCENT_CHAIN, nodes)


def tower(base: GroupDatum, psi_base: ArthurParameter, tau: CuspidalDatum, steps: int) -> List[TowerNode]:
    return build_tower(base, psi_base, tau, steps).nodes


def basic_triangles(tau: CuspidalDatum, l: int) -> TriangleRecord:
    """The basic triangle at level l and, for l >= 1, its dual triangle."""
    _check_tau(tau)
    if tau.duality != Duality.SYMPLECTIC or tau.central_nonvanishing is not True:
        raise DomainError(f"basic triangles need tau symplectic with L(1/2, tau) != 0, got {tau.id}",
                          code="hypothesis_missing")
    if l < 0:
        raise DomainError(f"l must be non-negative, got {l}", code="invalid_parameter")

    def vertex(b: int) -> TriangleVertex:
        return TriangleVertex(_chain_group(tau, b), _chain_parameter(tau, b))

    edges = ((0, 1, 'FJ'), (1, 2, 'LFT'), (2, 0, 'RES'))
    basic = Triangle('basic', (vertex(2 * l + 2), vertex(2 * l + 1), vertex(2 * l)), edges)
    dual = None
    if l >= 1:
        dual = Triangle('dual', (vertex(2 * l + 1), vertex(2 * l), vertex(2 * l - 1)), edges)
    for triangle in filter(None, (basic, dual)):
        for v in triangle.vertices:
            assert classifies_into(v.parameter, v.group), f"{v.parameter} does not live on {v.group.label}"
    return TriangleRecord(tau, l, basic, dual)
