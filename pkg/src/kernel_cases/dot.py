from typing import Iterable, List, Union

from ..errors import DomainError
from .towers import Tower, TowerNode, Triangle, TriangleRecord


def _quote(text: str) -> str:
    return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"') + '"'


def _node_lines(name: str, group, parameter) -> str:
    return f"  {name} [label={_quote(f'{group.label} / {parameter}')}];"


def _tower_dot(nodes: List[TowerNode], title: str) -> List[str]:
    ordered = sorted(nodes, key=lambda n: n.level_b)
    lines = [f"digraph {_quote(title)} {{", "  rankdir=BT;"]
    for i, node in enumerate(ordered):
        lines.append(_node_lines(f"n{i}", node.group, node.parameter))
    for i in range(len(ordered) - 1):
        lines.append(f"  n{i} -> n{i + 1} [label={_quote(ordered[i + 1].annotation)}];")
    lines.append("}")
    return lines


def _triangle_dot(triangle: Triangle, prefix: str) -> List[str]:
    lines = [f"  subgraph {_quote('cluster_' + triangle.name)} {{", f"    label={_quote(triangle.name)};"]
    for i, vertex in enumerate(triangle.vertices):
        lines.append("  " + _node_lines(f"{prefix}{i}", vertex.group, vertex.parameter))
    lines.append("  }")
    for src, dst, label in triangle.edges:
        lines.append(f"  {prefix}{src} -> {prefix}{dst} [label={_quote(label)}];")
    return lines


def to_dot(obj: Union[Tower, TriangleRecord, Triangle, Iterable[TowerNode]]) -> str:
    """Render a tower or triangle as Graphviz DOT text. Output is deterministic."""
    if isinstance(obj, Tower):
        lines = _tower_dot(obj.nodes, f"{obj.shape} tower {obj.tau.id}")
    elif isinstance(obj, TriangleRecord):
        lines = [f"digraph {_quote(f'triangles {obj.tau.id} l={obj.l}')} {{"]
        lines.extend(_triangle_dot(obj.basic, 't'))
        if obj.dual is not None:
            lines.extend(_triangle_dot(obj.dual, 'd'))
        lines.append("}")
    elif isinstance(obj, Triangle):
        lines = [f"digraph {_quote(obj.name)} {{"] + _triangle_dot(obj, 't') + ["}"]
    else:
        nodes = list(obj)
        if not all(isinstance(n, TowerNode) for n in nodes):
            raise DomainError("to_dot expects a tower, a triangle or tower nodes", code="invalid_argument")
        lines = _tower_dot(nodes, "tower")
    return "\n".join(lines) + "\n"
