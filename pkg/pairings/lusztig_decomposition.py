"""
Factorization of a pairing over eigenvalue classes.

For every class [a] occurring in t or s, the centralizer factor is a GL or U
group over F_{q^h}; the side with the larger multiplicity nu supplies H'[a]
and S'[a], the group one larger is G'[a], and T'[a] is the other side's block
shape plus a padding torus T''[a] carrying a character theta[a] without
eigenvalue 1.  The pairing equals

    eps_{t,s} * prod_[a] eps_[a] * <R^{G'[a]}_{T'[a], theta[a] x 1}, R^{H'[a]}_{S'[a], 1}>
"""
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterator, List, Optional, Tuple
import logging

from algebra.eigenvalue_orbits import Eigenvalue, frobenius_orbit, from_residue, identity
from algebra.partitions import Partition
from algebra.tori import (
    OrbitEntry, assemble, block_level, block_order, decompose_by_orbit,
)
from algebra.weyl import Block, Family, GroupKind

from .exceptions import HypothesisViolation
from .families import FamilyRegistry, PairFamily
from .reeder_engine import DualTorusPair, PairingReport, reeder_closed_form, reeder_direct

logger = logging.getLogger(__name__)

__all__ = [
    'CentralizerFactor', 'PrimedDatum', 'factor_group', 'centralizer_decomposition',
    'padding_partition', 'theta_candidates', 'fresh_thetas', 'build_primed_data', 'signs', 'factorized_pairing',
]

READINGS = ('union', 'shared')
BASE_ROUTES = ('closed_form', 'direct')


@dataclass(frozen=True)
class CentralizerFactor:
    key: Eigenvalue
    orbit_size: int
    self_inverse: bool
    group: GroupKind
    nu: int
    parts: Partition


@dataclass(frozen=True)
class PrimedDatum:
    key: Eigenvalue
    Gp: GroupKind
    Hp: GroupKind
    Tp: DualTorusPair
    Sp: DualTorusPair
    padding: Partition
    eps_a: int
    nu_big: int
    nu_small: int
    larger: str


def base_family(ambient: GroupKind, orbit_size: int, self_inverse: bool) -> Tuple[Family, int]:
    """(family, field exponent) of the centralizer factor of a class with the given orbit."""
    if ambient.family is Family.GL:
        return Family.GL, orbit_size
    if ambient.family is Family.U:
        return (Family.GL if orbit_size % 2 == 0 else Family.U), orbit_size
    if not self_inverse:
        return Family.GL, orbit_size
    if orbit_size % 2:
        raise HypothesisViolation(
            f"Self-inverse class of odd size {orbit_size} in {ambient} has an orthogonal centralizer", orbit='±1',
        )
    return Family.U, orbit_size // 2


def factor_group(ambient: GroupKind, entry: OrbitEntry, nu: Optional[int] = None) -> GroupKind:
    family, h = base_family(ambient, entry.orbit_size, entry.self_inverse)
    return GroupKind(family, entry.nu if nu is None else nu, ambient.field.power_field(h))


def centralizer_decomposition(pair: DualTorusPair) -> List[CentralizerFactor]:
    kind = pair.kind
    if kind.family.is_signed:
        FamilyRegistry.get_family('SO').check_hypothesis(pair.torus, pair.element.coords)
    factors = []
    for entry in decompose_by_orbit(pair.torus, pair.element).entries:
        factors.append(CentralizerFactor(
            key=entry.key, orbit_size=entry.orbit_size, self_inverse=entry.self_inverse,
            group=factor_group(kind, entry), nu=entry.nu, parts=entry.weights,
        ))
    logger.debug(f"C({pair}) = " + ' x '.join(str(f.group) for f in factors))
    return factors


def padding_partition(family: Family, k: int, variant: int = 0) -> Partition:
    """Shape of T''[a] of size k; GL shapes have an odd number of parts, U shapes no even parts."""
    if k < 1:
        raise ValueError(f"Padding needs a positive size, got {k}")
    if family is Family.GL:
        if variant == 1 and k >= 3:
            return Partition((k - 2, 1, 1))
        return Partition((k,))
    if variant == 1:
        return Partition((1,) * k)
    return Partition((k,)) if k % 2 else Partition((k - 1, 1))


def theta_candidates(kind: GroupKind, size: int) -> Iterator[Eigenvalue]:
    """Non-identity points of the size-``size`` factor of ``kind`` with a Frobenius orbit of full size."""
    block = Block('mu', size, 0)
    level, order = block_level(kind, block), block_order(kind, block)
    for j in range(1, order):
        y = from_residue(kind.field, level, order, j)
        if frobenius_orbit(kind.field, kind.family.twist, y).size == size:
            yield y


def _theta(kind: GroupKind, size: int, seed: int, used: set) -> Eigenvalue:
    index = 0
    for y in theta_candidates(kind, size):
        key = frobenius_orbit(kind.field, kind.family.twist, y).key
        if key in used:
            continue
        if index == seed:
            used.add(key)
            return y
        index += 1
    block = Block('mu', size, 0)
    fallback = from_residue(kind.field, block_level(kind, block), block_order(kind, block), 1)
    logger.warning(f"No fresh regular theta of size {size} in {kind} for seed {seed}; using {fallback}")
    return fallback


def fresh_thetas(kind: GroupKind, shape: Partition, seed: int = 0, avoid=()) -> List[Eigenvalue]:
    """One regular eigenvalue per part of ``shape``, never 1, in pairwise distinct orbits outside ``avoid``."""
    used = {identity(), *avoid}
    return [_theta(kind, size, seed, used) for size in shape.parts]


def build_primed_data(big: DualTorusPair, small: DualTorusPair, key: Eigenvalue,
                      padding_variant: int = 0, theta_seed: int = 0) -> PrimedDatum:
    big_dec = decompose_by_orbit(big.torus, big.element)
    small_dec = decompose_by_orbit(small.torus, small.element)
    if key not in big_dec and key not in small_dec:
        raise ValueError(f"Class {key} occurs on neither side")
    nu_big, nu_small = big_dec.nu(key), small_dec.nu(key)
    if nu_big >= nu_small:
        larger, entry, other = 'big', big_dec[key], (small_dec[key] if key in small_dec else None)
    else:
        larger, entry, other = 'small', small_dec[key], (big_dec[key] if key in big_dec else None)
    nu_large, nu_other = entry.nu, (other.nu if other else 0)
    ambient = big.kind
    Hp = factor_group(ambient, entry, nu_large)
    Gp = Hp.with_n(nu_large + 1)
    padding = padding_partition(Hp.family, nu_large + 1 - nu_other, padding_variant)
    theta = fresh_thetas(Gp, padding, theta_seed)
    other_parts = other.weights.parts if other else ()
    t_blocks = [('mu', size, identity()) for size in other_parts] + [
        ('mu', size, y) for size, y in zip(padding.parts, theta)]
    Tp = DualTorusPair(*assemble(Gp, t_blocks))
    Sp = DualTorusPair(*assemble(Hp, [('mu', size, identity()) for size in entry.weights.parts]))
    padding_torus, _ = assemble(Gp.with_n(padding.size), [('mu', s, identity()) for s in padding.parts])
    datum = PrimedDatum(
        key=key, Gp=Gp, Hp=Hp, Tp=Tp, Sp=Sp, padding=padding, eps_a=padding_torus.sign,
        nu_big=nu_big, nu_small=nu_small, larger=larger,
    )
    logger.debug(f"Primed data at {key}: {Gp} > {Hp}, T'={Tp.torus.label} S'={Sp.torus.label} padding={padding}")
    return datum


def _union_keys(big: DualTorusPair, small: DualTorusPair, reading: str) -> List[Eigenvalue]:
    big_keys = set(decompose_by_orbit(big.torus, big.element).keys())
    small_keys = set(decompose_by_orbit(small.torus, small.element).keys())
    if reading not in READINGS:
        raise ValueError(f"Unknown reading '{reading}', expected one of {READINGS}")
    return sorted(big_keys | small_keys if reading == 'union' else big_keys & small_keys)


def signs(big: DualTorusPair, small: DualTorusPair, family, reading: str = 'union') -> Tuple[int, Dict[Eigenvalue, int]]:
    """(eps_{t,s}, {class: eps_[a]}) over the classes selected by ``reading``."""
    family = family if isinstance(family, PairFamily) else FamilyRegistry.get_family(family)
    big_dec = decompose_by_orbit(big.torus, big.element)
    small_dec = decompose_by_orbit(small.torus, small.element)
    rows = []
    eps_a = {}
    for key in _union_keys(big, small, reading):
        entry = big_dec[key] if key in big_dec else small_dec[key]
        base, _ = base_family(big.kind, entry.orbit_size, entry.self_inverse)
        rows.append((base, big_dec.nu(key), small_dec.nu(key)))
        eps_a[key] = -1 if base is Family.GL else 1
    return family.eps_ts(big.kind, small.kind, rows, reading), eps_a


def factorized_pairing(family, big: DualTorusPair, small: DualTorusPair, base_route: str = 'closed_form',
                       reading: str = 'union', padding_variant: int = 0, theta_seed: int = 0) -> PairingReport:
    family = family if isinstance(family, PairFamily) else FamilyRegistry.get_family(family)
    family.check_groups(big.kind, small.kind)
    family.check_hypothesis(big.torus, big.element.coords)
    family.check_hypothesis(small.torus, small.element.coords)
    if base_route not in BASE_ROUTES:
        raise ValueError(f"Unknown base route '{base_route}', expected one of {BASE_ROUTES}")
    logger.info(f"Factorized pairing for {family} pair {big} / {small} (base={base_route}, reading={reading})")
    eps_ts, eps_map = signs(big, small, family, reading)
    engine = reeder_closed_form if base_route == 'closed_form' else reeder_direct
    breakdown = []
    factors = []
    for key in _union_keys(big, small, reading):
        datum = build_primed_data(big, small, key, padding_variant, theta_seed)
        if datum.eps_a != eps_map[key]:
            raise AssertionError(f"Padding {datum.padding} at {key} has sign {datum.eps_a}, expected {eps_map[key]}")
        base = engine(datum.Gp.family.value, datum.Tp, datum.Sp).value
        factors.append(datum.eps_a * base)
        breakdown.append({
            'orbit': f'({key.level},{key.exponent})', 'Gp': str(datum.Gp), 'Hp': str(datum.Hp),
            'Tp': str(datum.Tp.torus.label), 'Sp': str(datum.Sp.torus.label), 'padding': str(datum.padding),
            'nu_big': datum.nu_big, 'nu_small': datum.nu_small, 'eps_a': datum.eps_a, 'base': base,
        })
    value = eps_ts * prod(factors)
    logger.info(f"Factorized pairing = {value}")
    return PairingReport(value=value, route='factorized', family=family.name,
                         breakdown=breakdown, signs={'eps_ts': eps_ts})
