"""
Pairings <R^G_{T,chi}, R^H_{S,eta}>_{H^F} between Deligne-Lusztig characters of a
basic pair H < G, computed from dual data (T*, t) and (S*, s).

Two routes:

* ``reeder_direct`` sums one term per common sub-torus shape [iota], each term
  built from brute-force restriction counts M(T, t, T', t') and M(S, s, T', t').
* ``reeder_closed_form`` evaluates the same sum as a product over the
  eigenvalue classes shared by t and s.
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import logging

from algebra.partitions import Bipartition, c_coeff, contains, sub_multisets
from algebra.tori import (
    SemisimpleElement, TorusDatum, block_weight, eigenvalue_key, m_count,
    restriction_multiplicities, validate_element,
)
from algebra.weyl import GroupKind, f_centralizer_order

from .families import FamilyRegistry, PairFamily

logger = logging.getLogger(__name__)

__all__ = [
    'DualTorusPair', 'PairingReport', 'dl_inner_product_same_group',
    'iota_shapes', 'iota_summand', 'reeder_direct', 'reeder_closed_form',
]

Mapper = Callable[[Callable, List[tuple]], Sequence[Fraction]]


@dataclass(frozen=True, order=True)
class DualTorusPair:
    torus: TorusDatum
    element: SemisimpleElement

    def __post_init__(self):
        validate_element(self.torus, self.element)

    @property
    def kind(self) -> GroupKind:
        return self.torus.ambient

    def __str__(self):
        return f'({self.torus}, {self.element.coords})'


@dataclass
class PairingReport:
    value: int
    route: str
    family: str
    breakdown: List[Dict] = field(default_factory=list)
    signs: Dict[str, int] = field(default_factory=dict)


def _resolve(family) -> PairFamily:
    return family if isinstance(family, PairFamily) else FamilyRegistry.get_family(family)


def _prepare(family, big: DualTorusPair, small: DualTorusPair) -> PairFamily:
    family = _resolve(family)
    family.check_groups(big.kind, small.kind)
    family.check_hypothesis(big.torus, big.element.coords)
    family.check_hypothesis(small.torus, small.element.coords)
    return family


def dl_inner_product_same_group(group: GroupKind, a: DualTorusPair, b: DualTorusPair) -> int:
    """#{w in W(T)^F : w.t = t'}; zero when the two tori are not conjugate."""
    if a.kind != group or b.kind != group:
        raise ValueError(f"Both pairs must live on {group}")
    if a.torus.label != b.torus.label:
        return 0
    full = Bipartition(a.torus.label.mu, a.torus.label.lam)
    return m_count(a.torus, a.element, full, b.element)


def iota_shapes(big: TorusDatum, small: TorusDatum) -> List[Bipartition]:
    shapes = []
    for mu in sub_multisets(small.label.mu):
        if not contains(big.label.mu, mu):
            continue
        for lam in sub_multisets(small.label.lam):
            if contains(big.label.lam, lam):
                shapes.append(Bipartition(mu, lam))
    return shapes


def iota_summand(family, big: DualTorusPair, small: DualTorusPair, shape: Bipartition) -> Fraction:
    """#[iota] * X_iota for one shape, exactly."""
    family = _resolve(family)
    weight = c_coeff(small.torus.label.mu, shape.first) * c_coeff(small.torus.label.lam, shape.second)
    sign = family.iota_sign(big.torus, small.torus, shape)
    denominator = family.complement_order(big.torus, shape) * f_centralizer_order(small.torus.label)
    big_counts = restriction_multiplicities(big.torus, big.element, shape)
    small_counts = restriction_multiplicities(small.torus, small.element, shape)
    matched = sum(count * small_counts[coords] for coords, count in big_counts.items())
    value = Fraction(weight * sign * matched, denominator)
    logger.debug(f"iota {shape}: weight={weight} sign={sign} sum MM={matched} / {denominator} -> {value}")
    return value


def _serial_map(fn: Callable, items: List[tuple]) -> List[Fraction]:
    return [fn(*item) for item in items]


def reeder_direct(family, big: DualTorusPair, small: DualTorusPair,
                  mapper: Optional[Mapper] = None) -> PairingReport:
    """Sum over [iota]; ``mapper`` may evaluate the summands in parallel, results are added in shape order."""
    family = _prepare(family, big, small)
    logger.info(f"Direct pairing for {family} pair {big} / {small}")
    shapes = iota_shapes(big.torus, small.torus)
    items = [(family.name, big, small, shape) for shape in shapes]
    terms = list((mapper or _serial_map)(iota_summand, items))
    if len(terms) != len(shapes):
        raise RuntimeError(f"Expected {len(shapes)} summands, mapper returned {len(terms)}")
    total = sum(terms, Fraction(0))
    if total.denominator != 1:
        raise AssertionError(f"Direct pairing is not an integer: {total}")
    breakdown = [{'shape': str(shape), 'term': str(term)} for shape, term in zip(shapes, terms)]
    logger.info(f"Direct pairing = {total.numerator}")
    return PairingReport(value=total.numerator, route='direct', family=family.name, breakdown=breakdown)


def _class_blocks(pair: DualTorusPair) -> Tuple[Counter, Dict[Tuple, int]]:
    kind = pair.kind
    counts: Counter = Counter()
    weights: Dict[Tuple, int] = {}
    for block, y in zip(pair.torus.blocks, pair.element.coords):
        key = (eigenvalue_key(kind, y), block.kind, block.size)
        counts[key] += 1
        weights[key] = block_weight(kind, block, y)
    return counts, weights


def _matching_sum(a: int, b: int, weight: int, sign: int) -> int:
    return sum(sign ** k * comb(a, k) * comb(b, k) * factorial(k) * weight ** k for k in range(min(a, b) + 1))


def reeder_closed_form(family, big: DualTorusPair, small: DualTorusPair) -> PairingReport:
    family = _prepare(family, big, small)
    logger.info(f"Closed-form pairing for {family} pair {big} / {small}")
    big_counts, weights = _class_blocks(big)
    small_counts, _ = _class_blocks(small)
    sign = family.global_sign(big.torus, small.torus)
    value = sign
    breakdown = []
    for key in sorted(set(big_counts) & set(small_counts)):
        eigenvalue, block_kind, size = key
        factor = _matching_sum(big_counts[key], small_counts[key], weights[key], family.part_sign(block_kind, size))
        breakdown.append({
            'orbit': f'({eigenvalue.level},{eigenvalue.exponent})', 'block': f'{block_kind}{size}',
            'big': big_counts[key], 'small': small_counts[key], 'factor': factor,
        })
        value *= factor
    logger.info(f"Closed-form pairing = {value}")
    return PairingReport(value=value, route='closed_form', family=family.name,
                         breakdown=breakdown, signs={'global': sign})
