"""JSON forms of the domain types used in job files, task payloads and reports."""
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from algebra.eigenvalue_orbits import Eigenvalue, FieldParam, normalize
from algebra.partitions import Bipartition, Partition
from algebra.tori import SemisimpleElement, TorusDatum, identity_element
from algebra.weyl import FClassLabel, Family, GroupKind
from pairings.reeder_engine import DualTorusPair
from representations.unipotent_reps import SeriesDatum, SeriesOrbit

SAFE_INTEGER = 2 ** 53


def jsonable(value: Any) -> Any:
    """Plain JSON data; integers beyond 2^53 and fractions become strings."""
    if is_dataclass(value) and not isinstance(value, type):
        return jsonable(asdict(value))
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > SAFE_INTEGER else value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else jsonable(value.numerator)
    return str(value)


def decode_eigenvalue(data: Dict) -> Eigenvalue:
    return Eigenvalue(int(data['level']), int(data['exponent']))


def encode_eigenvalue(y: Eigenvalue) -> Dict:
    return {'level': y.level, 'exponent': y.exponent}


def decode_group(data: Dict, field: FieldParam) -> GroupKind:
    return GroupKind(Family(data['family']), int(data['n']), field)


def encode_group(kind: GroupKind) -> Dict:
    return {'family': kind.family.value, 'n': kind.n}


def decode_pair(data: Dict, field: FieldParam) -> DualTorusPair:
    """Torus label plus element; coordinates follow the mu blocks, largest first, then the lam blocks."""
    kind = decode_group(data['group'], field)
    label = FClassLabel(kind, Partition(tuple(data.get('mu', ()))), Partition(tuple(data.get('lam', ()))),
                        data.get('split_sign'))
    torus = TorusDatum(label)
    if data.get('element') is None:
        return DualTorusPair(torus, identity_element(torus))
    # coordinates are compared at their smallest field level
    coords = (decode_eigenvalue(y) for y in data['element'])
    return DualTorusPair(torus, SemisimpleElement(tuple(normalize(field, y.level, y.exponent) for y in coords)))


def encode_pair(pair: DualTorusPair) -> Dict:
    label = pair.torus.label
    data = {
        'group': encode_group(pair.kind), 'mu': list(label.mu.parts), 'lam': list(label.lam.parts),
        'element': [encode_eigenvalue(y) for y in pair.element.coords],
    }
    if label.split_sign is not None:
        data['split_sign'] = label.split_sign
    return data


def decode_shape(data: Dict) -> Bipartition:
    return Bipartition(Partition(tuple(data.get('mu', ()))), Partition(tuple(data.get('lam', ()))))


def encode_shape(shape: Bipartition) -> Dict:
    return {'mu': list(shape.first.parts), 'lam': list(shape.second.parts)}


def decode_series(data: Dict, field: FieldParam) -> SeriesDatum:
    orbits = tuple(
        SeriesOrbit(decode_eigenvalue(orbit['seed']), int(orbit['nu']), Partition(tuple(orbit['lambda'])))
        for orbit in data.get('orbits', ())
    )
    return SeriesDatum(decode_group(data['group'], field), orbits, data.get('split_sign') or 1)


def encode_series(datum: SeriesDatum) -> Dict:
    data = {
        'group': encode_group(datum.group),
        'orbits': [{'seed': encode_eigenvalue(o.seed), 'nu': o.nu, 'lambda': list(o.lam.parts)}
                   for o in datum.orbits],
    }
    if datum.group.family is Family.SO_EVEN_PLUS:
        data['split_sign'] = datum.split_sign
    return data


def encode_summand(family: str, big: DualTorusPair, small: DualTorusPair, shape: Bipartition) -> Dict:
    return {'family': family, 'q': big.kind.q, 'big': encode_pair(big), 'small': encode_pair(small),
            'shape': encode_shape(shape)}


def decode_fraction(text: Optional[str]) -> Fraction:
    return Fraction(text)
