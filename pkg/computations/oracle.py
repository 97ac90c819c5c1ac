"""
Brute-force self checks.  Every invariant family yields (case, ok) pairs; the
summary counts them per family so a failing family points at the module to read.
"""
from dataclasses import dataclass, field
from itertools import product
from math import factorial
from typing import Callable, Dict, Iterator, List, Sequence, Tuple
import logging

from tqdm import tqdm

from algebra.eigenvalue_orbits import FieldParam
from algebra.exceptions import RankBoundExceeded
from algebra.partitions import Bipartition, partitions_of, sub_multisets
from algebra.tori import (
    SemisimpleElement, TorusDatum, decompose_by_orbit, element_from_residues, eigenvalue_key, m_count,
    restriction_class_count_bruteforce, restriction_classes, restriction_multiplicities, torus_factor_orders,
)
from algebra.weyl import Family, GroupKind, enumerate_f_centralizer, enumeration_bound, f_centralizer_order, f_classes
from pairings.exceptions import HypothesisViolation, RouteDisagreement
from pairings.lusztig_decomposition import factorized_pairing
from pairings.reeder_engine import DualTorusPair, dl_inner_product_same_group, reeder_closed_form, reeder_direct
from representations.unipotent_reps import (
    SeriesDatum, SeriesOrbit, degree, ggp_multiplicity, unipotent_expansion,
)

logger = logging.getLogger(__name__)

Case = Tuple[str, bool]

PAIR_SHAPES = [
    ('GL', Family.GL, Family.GL, 1),
    ('U', Family.U, Family.U, 1),
    ('SO', Family.SO_ODD, Family.SO_EVEN_PLUS, 0),
    ('SO', Family.SO_ODD, Family.SO_EVEN_MINUS, 0),
]


@dataclass
class InvariantResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)

    def record(self, case: str, ok: bool) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if len(self.failures) < 5:
            self.failures.append(case)


def weyl_order(family: Family, n: int) -> int:
    if family.is_linear:
        return factorial(n)
    if family.is_even_orthogonal:
        return 2 ** (n - 1) * factorial(n)
    return 2 ** n * factorial(n)


def sample_pairs(kind: GroupKind, width: int = 2) -> Iterator[DualTorusPair]:
    for label in f_classes(kind):
        torus = TorusDatum(label)
        ranges = [range(min(order, width)) for order in torus_factor_orders(torus)]
        for residues in product(*ranges):
            yield DualTorusPair(torus, element_from_residues(torus, residues))


def _targets(torus: TorusDatum) -> Iterator[Bipartition]:
    for mu in sub_multisets(torus.label.mu):
        for lam in sub_multisets(torus.label.lam):
            yield Bipartition(mu, lam)


def _kinds(bound: int, q: int, families: Sequence[Family] = tuple(Family)) -> Iterator[GroupKind]:
    for family in families:
        for n in range(1, bound + 1):
            yield GroupKind(family, n, FieldParam(q))


def check_class_equation(bound: int, q: int) -> Iterator[Case]:
    for kind in _kinds(bound, q):
        order = weyl_order(kind.family, kind.n)
        total = sum(order // f_centralizer_order(label) for label in f_classes(kind))
        yield f'{kind}: sum |W|/|C| = {total}', total == order


def check_centralizer_orders(bound: int, q: int) -> Iterator[Case]:
    for kind in _kinds(bound, q):
        for label in f_classes(kind):
            enumerated = len(enumerate_f_centralizer(label))
            yield f'{kind} {label}: {enumerated} vs {f_centralizer_order(label)}', enumerated == f_centralizer_order(label)


def check_m_counts(bound: int, q: int) -> Iterator[Case]:
    for kind in _kinds(bound, q):
        for pair in sample_pairs(kind):
            for target in _targets(pair.torus):
                for coords, count in restriction_multiplicities(pair.torus, pair.element, target).items():
                    value = m_count(pair.torus, pair.element, target, SemisimpleElement(coords))
                    yield f'{pair} -> {target} at {coords}: {value} vs {count}', value == count


def check_restriction_classes(bound: int, q: int) -> Iterator[Case]:
    for kind in _kinds(bound, q):
        for pair in sample_pairs(kind):
            for target in _targets(pair.torus):
                listed = len(restriction_classes(pair.torus, pair.element, target))
                counted = restriction_class_count_bruteforce(pair.torus, pair.element, target)
                yield f'{pair} -> {target}: {listed} vs {counted}', listed == counted


def _pair_groups(bound: int, q: int) -> Iterator[Tuple[str, GroupKind, GroupKind]]:
    field_param = FieldParam(q)
    for name, big_family, small_family, shift in PAIR_SHAPES:
        for n in range(1, min(bound, 2) + 1):
            yield name, GroupKind(big_family, n + shift, field_param), GroupKind(small_family, n, field_param)


def _admissible_pairs(name: str, big_kind: GroupKind, small_kind: GroupKind):
    for big in sample_pairs(big_kind):
        for small in sample_pairs(small_kind):
            try:
                value = reeder_closed_form(name, big, small).value
            except HypothesisViolation:
                continue
            yield big, small, value


def check_route_equivalence(bound: int, q: int) -> Iterator[Case]:
    for name, big_kind, small_kind in _pair_groups(bound, q):
        for big, small, closed in _admissible_pairs(name, big_kind, small_kind):
            direct = reeder_direct(name, big, small).value
            factorized = factorized_pairing(name, big, small).value
            yield f'{big} / {small}: {direct}, {closed}, {factorized}', direct == closed == factorized


def _support(pair: DualTorusPair) -> set:
    return {eigenvalue_key(pair.kind, y) for y in pair.element.coords}


def check_regular_multiplicity_one(bound: int, q: int) -> Iterator[Case]:
    for name, big_kind, small_kind in _pair_groups(bound, q):
        for big, small, value in _admissible_pairs(name, big_kind, small_kind):
            if _support(big) & _support(small):
                continue
            if dl_inner_product_same_group(big.kind, big, big) != 1 or dl_inner_product_same_group(small.kind, small, small) != 1:
                continue
            sign = big.kind.sign * big.torus.sign * small.kind.sign * small.torus.sign
            yield f'{big} / {small}: {sign * value}', sign * value == 1


def check_unipotent_orthonormality(bound: int, q: int) -> Iterator[Case]:
    for kind in _kinds(bound + 1, q, (Family.GL, Family.U)):
        labels = partitions_of(kind.n)
        for lam in labels:
            pi = unipotent_expansion(kind, lam)
            yield f'{kind} {lam}: degree {degree(pi)}', degree(pi) > 0
            for nu in labels:
                value = pi.inner(unipotent_expansion(kind, nu))
                yield f'{kind} <{lam}, {nu}> = {value}', value == (1 if lam == nu else 0)


def series_from_pair(pair: DualTorusPair) -> Iterator[SeriesDatum]:
    """Every uniform series member attached to the element of ``pair``."""
    entries = decompose_by_orbit(pair.torus, pair.element).entries
    # a split torus fixes the SO^+ class of its elements; other tori reach both, so take +1
    split_sign = pair.torus.label.split_sign or 1
    for labels in product(*(partitions_of(entry.nu) for entry in entries)):
        yield SeriesDatum(pair.kind, tuple(
            SeriesOrbit(entry.key, entry.nu, lam) for entry, lam in zip(entries, labels)), split_sign)


def check_ggp_multiplicity(bound: int, q: int) -> Iterator[Case]:
    for name, big_kind, small_kind in _pair_groups(bound, q):
        if name == 'GL':
            continue
        seen = set()
        for big, small, _ in _admissible_pairs(name, big_kind, small_kind):
            for pi in series_from_pair(big):
                for sigma in series_from_pair(small):
                    key = (pi, sigma)
                    if key in seen:
                        continue
                    seen.add(key)
                    try:
                        report = ggp_multiplicity(pi, sigma)
                    except (RouteDisagreement, AssertionError, ValueError) as e:
                        yield f'{pi} / {sigma}: {e}', False
                        continue
                    yield f'{pi} / {sigma}: {report.value}', True


CHECKS: Dict[str, Callable[[int, int], Iterator[Case]]] = {
    'class_equation': check_class_equation,
    'centralizer_orders': check_centralizer_orders,
    'm_counts': check_m_counts,
    'restriction_classes': check_restriction_classes,
    'route_equivalence': check_route_equivalence,
    'regular_multiplicity_one': check_regular_multiplicity_one,
    'unipotent_orthonormality': check_unipotent_orthonormality,
    'ggp_multiplicity': check_ggp_multiplicity,
}


def run_oracle(bound: int = 2, q_values: Sequence[int] = (3,), progress: bool = False) -> Dict:
    limit = min(enumeration_bound(GroupKind(Family.GL, 1, FieldParam(3))),
                enumeration_bound(GroupKind(Family.SP, 1, FieldParam(3))))
    if bound > limit:
        raise RankBoundExceeded('oracle', bound, limit)
    results = {name: InvariantResult(name) for name in CHECKS}
    for name, check in tqdm(CHECKS.items(), desc='oracle', disable=not progress):
        for q in q_values:
            for case, ok in check(bound, q):
                results[name].record(case, ok)
        logger.info(f"Oracle {name}: {results[name].passed} passed, {results[name].failed} failed")
    summary = {
        name: {'passed': r.passed, 'failed': r.failed, 'failures': r.failures}
        for name, r in results.items()
    }
    return {'bound': bound, 'q_values': list(q_values), 'families': summary,
            'all_passed': all(r.failed == 0 for r in results.values())}
