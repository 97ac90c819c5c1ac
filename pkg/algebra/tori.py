"""
F-stable maximal tori, semisimple elements on their dual side, and the
restriction counts M, D and P between a torus and a sub-torus.

A torus is given by its F-class label; its rational points are a product of
cyclic factors, one per block of the label.  An element stores one eigenvalue
per block; ``expand`` recovers the full diagonal tuple by running around each
cycle of the torus operator w' (x[w'(i)] = x[i]^(phi * sign_i)).  The Weyl
group W_G(T)^F is the centralizer of w' in W and acts on blocks through
``local_group`` (cyclic shifts, plus inversions for orthogonal types) and by
permuting blocks of equal type.
"""
from collections import Counter, OrderedDict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
import logging

from .eigenvalue_orbits import (
    Eigenvalue, FieldParam, class_key, from_residue, frobenius_orbit,
    has_order_dividing, identity, inverse, power,
)
from .partitions import Bipartition, Partition, contains
from .weyl import (
    Block, FClassLabel, Family, GroupKind, WeylElement, enumerate_f_centralizer,
    label_blocks, splits, torus_operator,
)

logger = logging.getLogger(__name__)

__all__ = [
    'TorusDatum', 'SemisimpleElement', 'OrbitEntry', 'OrbitDecomposition', 'RestrictionClass',
    'torus_factor_orders', 'element_from_residues', 'identity_element', 'validate_element',
    'expand', 'eigenvalue_multiset', 'decompose_by_orbit', 'weyl_action', 'restrict',
    'restriction_classes', 'm_count', 'm_count_bruteforce', 'restriction_multiplicities',
    'restriction_class_count_bruteforce', 'assemble', 'sub_torus',
]


@dataclass(frozen=True, order=True)
class TorusDatum:
    label: FClassLabel

    @property
    def ambient(self) -> GroupKind:
        return self.label.kind

    @property
    def field(self) -> FieldParam:
        return self.label.kind.field

    @property
    def blocks(self) -> Tuple[Block, ...]:
        return label_blocks(self.label)

    @property
    def rank(self) -> int:
        family = self.ambient.family
        if family is Family.GL:
            return len(self.label.mu)
        if family is Family.U:
            return sum(1 for p in self.label.mu.parts if p % 2 == 0)
        return len(self.label.mu)

    @property
    def sign(self) -> int:
        return (-1) ** self.rank

    @property
    def order(self) -> int:
        return prod(torus_factor_orders(self))

    def __str__(self):
        return f'T{self.label} in {self.ambient}'


@dataclass(frozen=True, order=True)
class SemisimpleElement:
    coords: Tuple[Eigenvalue, ...] = ()

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True)
class OrbitEntry:
    key: Eigenvalue
    orbit_size: int
    self_inverse: bool
    mu: Partition
    lam: Partition
    weights: Partition
    nu: int


@dataclass(frozen=True)
class OrbitDecomposition:
    entries: Tuple[OrbitEntry, ...] = ()

    def __getitem__(self, key: Eigenvalue) -> OrbitEntry:
        for entry in self.entries:
            if entry.key == key:
                return entry
        raise KeyError(key)

    def __contains__(self, key: Eigenvalue) -> bool:
        return any(entry.key == key for entry in self.entries)

    def keys(self) -> List[Eigenvalue]:
        return [entry.key for entry in self.entries]

    def nu(self, key: Eigenvalue) -> int:
        return self[key].nu if key in self else 0


@dataclass(frozen=True)
class RestrictionClass:
    torus: TorusDatum
    element: SemisimpleElement
    p_label: Dict[Eigenvalue, Bipartition] = field(default_factory=dict)


def block_level(kind: GroupKind, block: Block) -> int:
    if kind.family is Family.U:
        return block.size if block.size % 2 == 0 else 2 * block.size
    if block.kind == 'lam':
        return 2 * block.size
    return block.size


def block_order(kind: GroupKind, block: Block) -> int:
    q = kind.q
    if kind.family is Family.U:
        return q ** block.size - (-1) ** block.size
    if block.kind == 'lam':
        return q ** block.size + 1
    return q ** block.size - 1


def torus_factor_orders(torus: TorusDatum) -> List[int]:
    return [block_order(torus.ambient, b) for b in torus.blocks]


def element_from_residues(torus: TorusDatum, residues: Sequence[int]) -> SemisimpleElement:
    if len(residues) != len(torus.blocks):
        raise ValueError(f"{torus} has {len(torus.blocks)} factors, got {len(residues)} residues")
    kind = torus.ambient
    return SemisimpleElement(tuple(
        from_residue(kind.field, block_level(kind, b), block_order(kind, b), r)
        for b, r in zip(torus.blocks, residues)
    ))


def identity_element(torus: TorusDatum) -> SemisimpleElement:
    return SemisimpleElement((identity(),) * len(torus.blocks))


def validate_element(torus: TorusDatum, element: SemisimpleElement) -> None:
    if len(element) != len(torus.blocks):
        raise ValueError(f"{torus} has {len(torus.blocks)} factors, element has {len(element)} coordinates")
    kind = torus.ambient
    for index, (block, y) in enumerate(zip(torus.blocks, element.coords)):
        level, order = block_level(kind, block), block_order(kind, block)
        if not has_order_dividing(kind.field, y, level, order):
            raise ValueError(
                f"Coordinate {index} ({y.level},{y.exponent}) is not in the order-{order} factor of {torus}"
            )


def expand(torus: TorusDatum, element: SemisimpleElement) -> Tuple[Eigenvalue, ...]:
    kind = torus.ambient
    w = torus_operator(torus.label)
    x: List[Optional[Eigenvalue]] = [None] * kind.n
    for block, y in zip(torus.blocks, element.coords):
        i = block.start
        x[i] = y
        for _ in range(block.size - 1):
            j = w.perm[i]
            x[j] = power(kind.field, x[i], kind.phi * w.signs[i])
            i = j
    return tuple(x)


def eigenvalue_multiset(torus: TorusDatum, element: SemisimpleElement) -> Counter:
    values = expand(torus, element)
    counts = Counter(values)
    if torus.ambient.family.is_signed:
        counts.update(inverse(torus.field, v) for v in values)
    return counts


def eigenvalue_key(kind: GroupKind, y: Eigenvalue) -> Eigenvalue:
    """Label of the eigenvalue class of y: its Frobenius orbit, closed under inversion for orthogonal types."""
    if kind.family.is_signed:
        return class_key(kind.field, y)
    return frobenius_orbit(kind.field, kind.family.twist, y).key


def block_weight(kind: GroupKind, block: Block, y: Eigenvalue) -> int:
    """Multiplicity of each eigenvalue of y's class among the block's eigenvalues."""
    orbit = frobenius_orbit(kind.field, kind.family.twist, y)
    if kind.family.is_linear:
        return block.size // orbit.size
    if block.kind == 'lam' or orbit.self_inverse:
        return 2 * block.size // orbit.size
    return block.size // orbit.size


def decompose_by_orbit(torus: TorusDatum, element: SemisimpleElement) -> OrbitDecomposition:
    kind = torus.ambient
    grouped: Dict[Eigenvalue, Dict[str, list]] = OrderedDict()
    for block, y in zip(torus.blocks, element.coords):
        key = eigenvalue_key(kind, y)
        slot = grouped.setdefault(key, {'mu': [], 'lam': [], 'weights': []})
        slot[block.kind].append(block.size)
        slot['weights'].append(block_weight(kind, block, y))
    counts = eigenvalue_multiset(torus, element)
    entries = []
    for key in sorted(grouped):
        slot = grouped[key]
        orbit = frobenius_orbit(kind.field, kind.family.twist, key)
        nu = counts[key]
        if nu != sum(slot['weights']):
            raise AssertionError(f"Orbit multiplicity mismatch at {key}: {nu} != {sum(slot['weights'])}")
        entries.append(OrbitEntry(
            key=key, orbit_size=orbit.size, self_inverse=orbit.self_inverse,
            mu=Partition(tuple(slot['mu'])), lam=Partition(tuple(slot['lam'])),
            weights=Partition(tuple(slot['weights'])), nu=nu,
        ))
    return OrbitDecomposition(tuple(entries))


def in_weyl_group_of(torus: TorusDatum, w: WeylElement) -> bool:
    wp = torus_operator(torus.label)
    if w.n != wp.n or w * wp != wp * w:
        return False
    family = torus.ambient.family
    if family.weyl_type == 'A' and any(s != 1 for s in w.signs):
        return False
    if family.weyl_type == 'D' and w.sign_product != 1:
        return False
    return True


def weyl_action(torus: TorusDatum, w: WeylElement, element: SemisimpleElement) -> SemisimpleElement:
    if not in_weyl_group_of(torus, w):
        raise ValueError(f"Weyl element {w} does not normalize {torus}")
    field_ = torus.field
    moved = w.act(expand(torus, element), lambda y: inverse(field_, y))
    return SemisimpleElement(tuple(moved[b.start] for b in torus.blocks))


@lru_cache(maxsize=None)
def local_group(kind: GroupKind, block_kind: str, size: int) -> Tuple[Tuple[int, int], ...]:
    """The block's own symmetries as (exponent multiplier, sign product) pairs."""
    if kind.family.is_linear:
        return tuple((kind.phi ** r, 1) for r in range(size))
    q = kind.q
    if block_kind == 'lam':
        return tuple((q ** r, (-1) ** r) for r in range(2 * size))
    flip_sign = (-1) ** size
    return tuple((q ** r, 1) for r in range(size)) + tuple((-(q ** r), flip_sign) for r in range(size))


def _stabilizer(kind: GroupKind, local, y: Eigenvalue) -> int:
    return sum(1 for k, _ in local if power(kind.field, y, k) == y)


def _psi(kind: GroupKind, local, x: Eigenvalue, y: Eigenvalue) -> int:
    return sum(s for k, s in local if power(kind.field, x, k) == y)


def sub_torus(torus: TorusDatum, target: Bipartition) -> TorusDatum:
    """The torus with label ``target`` inside the group of the same series; orthogonal targets use type B."""
    kind = torus.ambient
    if kind.family.is_linear:
        if target.second:
            raise ValueError(f"Linear tori have no lambda parts, got {target}")
        return TorusDatum(FClassLabel(kind.with_n(target.size), target.first))
    return TorusDatum(FClassLabel(kind.with_n(target.size, Family.SO_ODD), target.first, target.second))


def _type_groups(torus: TorusDatum, coords: Sequence[Eigenvalue]) -> Dict[Tuple[str, int], List[Eigenvalue]]:
    groups: Dict[Tuple[str, int], List[Eigenvalue]] = OrderedDict()
    for block, y in zip(torus.blocks, coords):
        groups.setdefault(block.type_key, []).append(y)
    return groups


def _as_bipartition(target) -> Bipartition:
    return target if isinstance(target, Bipartition) else Bipartition(target)


def restrict(torus: TorusDatum, element: SemisimpleElement, target) -> SemisimpleElement:
    """Coordinates on the sub-torus ``target``, embedded as the first blocks of each block type."""
    target = _as_bipartition(target)
    wanted = _type_counts(target)
    groups = _type_groups(torus, element.coords)
    coords: List[Eigenvalue] = []
    for type_key in _ordered_types(target):
        available = groups.get(type_key, [])
        if wanted[type_key] > len(available):
            raise ValueError(f"Target {target} does not fit in {torus}")
        coords.extend(available[:wanted[type_key]])
    return SemisimpleElement(tuple(coords))


def _type_counts(target: Bipartition) -> Counter:
    return Counter([('mu', p) for p in target.first.parts] + [('lam', p) for p in target.second.parts])


def _ordered_types(target: Bipartition) -> List[Tuple[str, int]]:
    seen: List[Tuple[str, int]] = []
    for kind, parts in (('mu', target.first.parts), ('lam', target.second.parts)):
        for size in parts:
            if (kind, size) not in seen:
                seen.append((kind, size))
    return seen


def _fits(torus: TorusDatum, target: Bipartition) -> bool:
    return contains(torus.label.mu, target.first) and contains(torus.label.lam, target.second)


def m_count(torus: TorusDatum, element: SemisimpleElement, target, restricted: SemisimpleElement) -> int:
    """#{w in W_G(T)^F : (w.t)|_{T'} = t'} from the closed counting formulas."""
    target = _as_bipartition(target)
    if not _fits(torus, target):
        return 0
    kind = torus.ambient
    sub = sub_torus(torus, target)
    if len(restricted) != len(sub.blocks):
        raise ValueError(f"Restricted element has {len(restricted)} coordinates, {sub} needs {len(sub.blocks)}")
    groups = _type_groups(torus, element.coords)
    sub_groups = _type_groups(sub, restricted.coords)
    even_type = kind.family.weyl_type == 'D'
    total = 1
    signed = 1
    for type_key, coords in groups.items():
        chosen = sub_groups.get(type_key, [])
        a, b = len(coords), len(chosen)
        local = local_group(kind, *type_key)
        have = Counter(eigenvalue_key(kind, y) for y in coords)
        need = Counter(eigenvalue_key(kind, y) for y in chosen)
        if any(k > have[c] for c, k in need.items()):
            return 0
        term = factorial(a - b) * len(local) ** (a - b)
        for c, k in need.items():
            stab = _stabilizer(kind, local, c)
            term *= factorial(have[c]) // factorial(have[c] - k) * stab ** k
        total *= term
        if even_type and signed:
            sign_sum = sum(s for _, s in local)
            rest = factorial(a - b) * sign_sum ** (a - b)
            if rest:
                rest *= sum(
                    prod(_psi(kind, local, coords[j], y) for j, y in zip(injection, chosen))
                    for injection in permutations(range(a), b)
                )
            signed *= rest
    if even_type:
        return (total + signed) // 2
    return total


def restriction_multiplicities(torus: TorusDatum, element: SemisimpleElement, target) -> Counter:
    """Counter of (w.t)|_{T'} over the explicitly enumerated W_G(T)^F."""
    target = _as_bipartition(target)
    counts: Counter = Counter()
    if not _fits(torus, target):
        return counts
    for w in enumerate_f_centralizer(torus.label):
        counts[restrict(torus, weyl_action(torus, w, element), target).coords] += 1
    return counts


def m_count_bruteforce(torus: TorusDatum, element: SemisimpleElement, target, restricted: SemisimpleElement) -> int:
    return restriction_multiplicities(torus, element, target)[restricted.coords]


def _distributions(total: int, capacities: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    if not capacities:
        if total == 0:
            yield ()
        return
    head, tail = capacities[0], capacities[1:]
    for k in range(min(head, total), -1, -1):
        for rest in _distributions(total - k, tail):
            yield (k,) + rest


def restriction_classes(torus: TorusDatum, element: SemisimpleElement, target) -> List[RestrictionClass]:
    """One representative per W(T')-class of D(T, t, T'), labelled by its map orbit -> sub-bipartition."""
    target = _as_bipartition(target)
    if not _fits(torus, target):
        return []
    kind = torus.ambient
    sub = sub_torus(torus, target)
    groups = _type_groups(torus, element.coords)
    wanted = _type_counts(target)
    per_type: List[List[List[Tuple[Eigenvalue, Tuple[str, int]]]]] = []
    for type_key in _ordered_types(target):
        have = Counter(eigenvalue_key(kind, y) for y in groups[type_key])
        keys = sorted(have)
        options = []
        for split in _distributions(wanted[type_key], [have[c] for c in keys]):
            options.append([(c, type_key) for c, k in zip(keys, split) for _ in range(k)])
        per_type.append(options)
    result: List[RestrictionClass] = []

    def build(depth: int, acc: List[Tuple[Eigenvalue, Tuple[str, int]]]):
        if depth == len(per_type):
            p_label: Dict[Eigenvalue, Dict[str, list]] = {}
            for c, (block_kind, size) in acc:
                p_label.setdefault(c, {'mu': [], 'lam': []})[block_kind].append(size)
            result.append(RestrictionClass(
                torus=sub,
                element=SemisimpleElement(tuple(c for c, _ in acc)),
                p_label={c: Bipartition(Partition(tuple(v['mu'])), Partition(tuple(v['lam'])))
                         for c, v in sorted(p_label.items())},
            ))
            return
        for option in per_type[depth]:
            build(depth + 1, acc + option)

    build(0, [])
    return result


def restriction_class_count_bruteforce(torus: TorusDatum, element: SemisimpleElement, target) -> int:
    """Number of W(T')-orbits met by D(T, t, T'), by explicit orbit partitioning."""
    target = _as_bipartition(target)
    image = set(restriction_multiplicities(torus, element, target))
    if not image:
        return 0
    sub = sub_torus(torus, target)
    group = enumerate_f_centralizer(sub.label)
    classes = 0
    remaining = set(image)
    while remaining:
        seed = SemisimpleElement(remaining.pop())
        orbit = {weyl_action(sub, w, seed).coords for w in group}
        remaining -= orbit
        classes += 1
    return classes


def assemble(kind: GroupKind, blocks: Sequence[Tuple[str, int, Eigenvalue]],
             split_sign: Optional[int] = None) -> Tuple[TorusDatum, SemisimpleElement]:
    """Glue (block kind, size, coordinate) triples into a torus of ``kind`` and an element on it.

    ``split_sign`` names the SO^+ class the glued element lies in. It is required when the glued
    label splits and ignored otherwise.
    """
    ordered = sorted(blocks, key=lambda b: (b[0] != 'mu', -b[1], b[2]))
    mu = Partition(tuple(size for block_kind, size, _ in ordered if block_kind == 'mu'))
    lam = Partition(tuple(size for block_kind, size, _ in ordered if block_kind == 'lam'))
    family = kind.family
    if family.is_even_orthogonal:
        family = Family.SO_EVEN_MINUS if len(lam) % 2 else Family.SO_EVEN_PLUS
        kind = kind.with_n(kind.n, family)
    if splits(kind, mu, lam):
        if split_sign not in (1, -1):
            raise ValueError(f"Glued label {Bipartition(mu, lam)} of {kind} splits; pass split_sign=1 or -1")
        label = FClassLabel(kind, mu, lam, split_sign)
    else:
        label = FClassLabel(kind, mu, lam)
    torus = TorusDatum(label)
    element = SemisimpleElement(tuple(y for _, _, y in ordered))
    validate_element(torus, element)
    return torus, element
