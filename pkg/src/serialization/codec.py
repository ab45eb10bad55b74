import json
import os
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional

import jsonschema

from ..endoscopy import EndoscopyDatum
from ..errors import DomainError
from ..jordan import PoleProfile
from ..kernel_cases import ConstructionCase, Tower, TowerNode, Triangle, TriangleRecord
from ..orbits import FormLabel, RationalOrbitKey, WeightedGrading
from ..parameters import (
    ArthurParameter, Base, CharacterLabel, CuspidalDatum, Duality, GroupDatum, SimpleParameter
)
from ..partitions import Partition
from ..spectral import LFactor

SCHEMA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
                          'schemas')


def fraction_str(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _group(g: GroupDatum) -> Dict:
    out = {'family': g.family.value, 'rank': g.rank, 'size': g.defining_size, 'label': g.label}
    if g.eta is not None:
        out['eta'] = str(g.eta)
    if g.kappa is not None:
        out['kappa'] = g.kappa
    if g.form is not None:
        out['form'] = g.form
    return out


def _cuspidal(tau: CuspidalDatum) -> Dict:
    out = {'id': tau.id, 'a': tau.a, 'base': tau.base.value,
           'duality': tau.duality.value if tau.duality else None}
    if tau.eta is not None:
        out['eta'] = tau.eta
    if tau.central_nonvanishing is not None:
        out['L_half_nonzero'] = tau.central_nonvanishing
    if tau.is_character:
        out['is_character'] = True
    if tau.partner is not None:
        out['partner'] = tau.partner
    return out


def _parameter(psi: ArthurParameter) -> Dict:
    taus = {}
    for sp in psi:
        taus[sp.tau.id] = _cuspidal(sp.tau)
    return {
        'N': psi.N,
        'text': str(psi),
        'taus': [taus[k] for k in sorted(taus)],
        'summands': [{'tau': sp.tau.id, 'b': sp.b} for sp in psi],
    }


def _endoscopy(E: EndoscopyDatum) -> Dict:
    return {
        'target': _group(E.target),
        'factors': [_group(g) for g in E.factors],
        'signs': list(E.signs) if E.signs else None,
        'eta_pair': [str(e) for e in E.eta_pair] if E.eta_pair else None,
        'conjecture_basis': E.conjecture_basis,
        'variant': E.variant,
        'twisted': E.twisted,
        'sign_convention': E.sign_convention,
        'alternatives': [_endoscopy(alt) for alt in E.alternatives],
    }


def _case(case: ConstructionCase) -> Dict:
    return {
        'target': _group(case.target),
        'tau': _cuspidal(case.tau),
        'a': case.a, 'b': case.b, 'c': case.c, 'd': case.d, 'r': case.r,
        'ambient': _group(case.ambient),
        'psi0': _parameter(case.psi0),
        'coefficient': case.coefficient.value,
        'endoscopy': _endoscopy(case.endoscopy),
        'conjecture_tag': case.conjecture_tag,
        'constraints': [{'name': name, 'ok': ok} for name, ok in case.constraints],
        'satisfied': case.satisfied,
        'partition': case.partition.to_list(),
        'stabilizer': [_group(g) for g in case.stabilizer] if case.stabilizer else None,
        'identity_transfer': case.identity_transfer,
    }


def _node(node: TowerNode) -> Dict:
    return {'level_b': node.level_b, 'group': _group(node.group),
            'parameter': _parameter(node.parameter), 'annotation': node.annotation}


def _triangle(t: Triangle) -> Dict:
    return {
        'name': t.name,
        'vertices': [{'group': _group(v.group), 'parameter': _parameter(v.parameter)} for v in t.vertices],
        'edges': [{'from': s, 'to': d, 'label': label} for s, d, label in t.edges],
    }


def to_dict(obj: Any) -> Any:
    """JSON-ready form of any arthurkit value."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return fraction_str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Partition):
        return obj.to_list()
    if isinstance(obj, CharacterLabel):
        return str(obj)
    if isinstance(obj, GroupDatum):
        return _group(obj)
    if isinstance(obj, CuspidalDatum):
        return _cuspidal(obj)
    if isinstance(obj, SimpleParameter):
        return {'tau': obj.tau.id, 'b': obj.b}
    if isinstance(obj, ArthurParameter):
        return _parameter(obj)
    if isinstance(obj, EndoscopyDatum):
        return _endoscopy(obj)
    if isinstance(obj, WeightedGrading):
        return {'partition': obj.partition.to_list(), 'family': obj.family.value,
                'weights': list(obj.weights), 'dims': {str(j): n for j, n in obj.dims}}
    if isinstance(obj, FormLabel):
        return {'dimension': obj.dimension, 'invariant': obj.invariant}
    if isinstance(obj, RationalOrbitKey):
        return {'partition': obj.partition.to_list(), 'q_d': to_dict(obj.q_d), 'q_1': to_dict(obj.q_1)}
    if isinstance(obj, LFactor):
        return {'kind': obj.kind.value, 'slope': obj.slope, 'intercept': fraction_str(obj.intercept),
                'rho': obj.rho_name, 'index': obj.index}
    if isinstance(obj, ConstructionCase):
        return _case(obj)
    if isinstance(obj, TowerNode):
        return _node(obj)
    if isinstance(obj, Tower):
        return {'base': _group(obj.base), 'base_parameter': _parameter(obj.base_parameter),
                'tau': _cuspidal(obj.tau), 'shape': obj.shape, 'nodes': [_node(n) for n in obj.nodes]}
    if isinstance(obj, Triangle):
        return _triangle(obj)
    if isinstance(obj, TriangleRecord):
        return {'tau': _cuspidal(obj.tau), 'l': obj.l, 'basic': _triangle(obj.basic),
                'dual': _triangle(obj.dual) if obj.dual else None}
    if isinstance(obj, PoleProfile):
        return {'entries': {k: [fraction_str(s) for s in v] for k, v in obj.entries.items()},
                'taus': [_cuspidal(obj.data[k]) for k in sorted(obj.data)]}
    if isinstance(obj, Mapping):
        return {str(k): to_dict(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_dict(v) for v in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    raise TypeError(f"Cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_dict(obj), sort_keys=True, indent=2, ensure_ascii=False)


def cuspidal_from_dict(record: Mapping) -> CuspidalDatum:
    if not isinstance(record, Mapping):
        raise DomainError(f"cuspidal record must be an object, got {record!r}", code="bad_record")
    try:
        base = Base(record.get('base', 'Plain'))
        duality = record.get('duality', 'Orthogonal' if base == Base.PLAIN else None)
        return CuspidalDatum(
            id=str(record['id']),
            a=record['a'],
            base=base,
            duality=Duality.parse(duality) if duality else None,
            eta=record.get('eta'),
            central_nonvanishing=record.get('L_half_nonzero'),
            is_character=bool(record.get('is_character', False)),
            partner=record.get('partner'),
            central_character=record.get('central_character'),
        )
    except KeyError as e:
        raise DomainError(f"cuspidal record is missing {e}", code="bad_record")
    except ValueError as e:
        if isinstance(e, DomainError):
            raise
        raise DomainError(f"bad cuspidal record {dict(record)}: {e}", code="bad_record")


def load_pool(records: Iterable[Mapping]) -> Dict[str, CuspidalDatum]:
    pool = {}
    for record in records:
        tau = cuspidal_from_dict(record)
        if tau.id in pool:
            raise DomainError(f"duplicate tau id {tau.id}", code="bad_record")
        pool[tau.id] = tau
    return pool


def parameter_from_dict(record: Mapping, pool: Optional[Mapping[str, CuspidalDatum]] = None) -> ArthurParameter:
    """Read {"taus": [...], "summands": [{"tau": id, "b": n}]}; taus default to the pool."""
    check_input(record, "parameter_input")
    taus = dict(pool or {})
    taus.update(load_pool(record.get('taus', [])))
    summands = []
    for item in record.get('summands', []):
        tau_id = str(item.get('tau'))
        if tau_id not in taus:
            raise DomainError(f"unknown tau id {tau_id}", code="unknown_tau")
        summands.append(SimpleParameter(taus[tau_id], item.get('b')))
    return ArthurParameter(tuple(summands))


def profile_from_dict(record: Mapping, pool: Optional[Mapping[str, CuspidalDatum]] = None) -> PoleProfile:
    """Read {"entries": {id: ["3/2", ...]}, "taus": [...]}; taus are optional."""
    check_input(record, "profile_input")
    data = {k: v for k, v in (pool or {}).items() if k in record.get('entries', {})}
    data.update(load_pool(record.get('taus', [])))
    try:
        entries = {str(k): tuple(Fraction(str(s)) for s in v) for k, v in record.get('entries', {}).items()}
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"bad pole value: {e}", code="bad_record")
    return PoleProfile(entries, data)


def load_json(path: str) -> Any:
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except FileNotFoundError:
        raise DomainError(f"file not found: {path}", code="file_not_found")
    except json.JSONDecodeError as e:
        raise DomainError(f"{path} is not valid JSON: {e}", code="bad_json")


def load_schema(name: str) -> Dict:
    with open(os.path.join(SCHEMA_DIR, f"{name}.json"), 'r') as f:
        return json.load(f)


def validate_output(instance: Any, name: str) -> List[str]:
    """Validate a JSON value against schemas/<name>.json; returns error messages."""
    schema = load_schema(name)
    validator = jsonschema.Draft7Validator(schema)
    return [e.message for e in sorted(validator.iter_errors(instance), key=lambda e: list(e.path))]


def check_input(record: Any, name: str):
    """Raise bad_record unless an input file matches schemas/<name>.json."""
    validator = jsonschema.Draft7Validator(load_schema(name))
    errors = sorted(validator.iter_errors(record), key=lambda e: [str(p) for p in e.path])
    if errors:
        first = errors[0]
        where = '/'.join(str(p) for p in first.path) or 'root'
        raise DomainError(f"malformed {name.replace('_', ' ')} at {where}: {first.message}",
                          code="bad_record")
