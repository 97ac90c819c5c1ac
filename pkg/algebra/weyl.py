"""
Weyl groups of the classical groups and their Frobenius-twisted conjugacy classes.

Elements are signed permutations of {0, ..., n-1}: ``w`` sends e_i to
``signs[i] * e_{perm[i]}``.  Type A uses trivial signs, type D keeps the even
sign products.  The Frobenius acts on W as conjugation by ``c``: the longest
element w0 for unitary groups, the flip of the last coordinate for SO^-_{2n},
the identity otherwise.  Writing w' = w c, the twisted centralizer
{x : x^-1 w F(x) = w} is the ordinary centralizer of w' intersected with W, and
w' is the element the maximal torus T_w is built from.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Callable, List, Optional, Sequence, Tuple
import logging

from django.conf import settings

from .eigenvalue_orbits import FieldParam, Twist
from .exceptions import RankBoundExceeded
from .partitions import Bipartition, Partition, bipartitions_of, partitions_of, z_order

logger = logging.getLogger(__name__)

__all__ = [
    'Family', 'GroupKind', 'FClassLabel', 'WeylElement', 'Block',
    'weyl_group', 'label_blocks', 'torus_operator', 'representative',
    'f_classes', 'f_centralizer_order', 'enumerate_f_centralizer', 'twisted_conjugate',
]


class Family(str, Enum):
    GL = 'GL'
    U = 'U'
    SP = 'Sp'
    SO_ODD = 'SOodd'
    SO_EVEN_PLUS = 'SOeven+'
    SO_EVEN_MINUS = 'SOeven-'

    @property
    def is_linear(self) -> bool:
        return self in (Family.GL, Family.U)

    @property
    def is_signed(self) -> bool:
        return not self.is_linear

    @property
    def is_even_orthogonal(self) -> bool:
        return self in (Family.SO_EVEN_PLUS, Family.SO_EVEN_MINUS)

    @property
    def weyl_type(self) -> str:
        if self.is_linear:
            return 'A'
        return 'D' if self.is_even_orthogonal else 'B'

    @property
    def twist(self) -> Twist:
        return Twist.UNITARY if self is Family.U else Twist.STANDARD


@dataclass(frozen=True, order=True)
class GroupKind:
    family: Family
    n: int
    field: FieldParam

    def __post_init__(self):
        object.__setattr__(self, 'family', Family(self.family))
        if self.n < 0:
            raise ValueError(f"Rank parameter must be >= 0, got {self.n}")
        if self.family.is_even_orthogonal and self.n < 1:
            raise ValueError("SO^±_{2n} needs n >= 1")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def phi(self) -> int:
        """The exponent Frobenius induces on the diagonal torus: q, or -q for unitary groups."""
        return self.family.twist.multiplier(self.field)

    @property
    def rank(self) -> int:
        if self.family is Family.GL:
            return self.n
        if self.family is Family.U:
            return self.n // 2
        if self.family is Family.SO_EVEN_MINUS:
            return self.n - 1
        return self.n

    @property
    def sign(self) -> int:
        return (-1) ** self.rank

    @property
    def order_p_prime(self) -> int:
        q, n = self.q, self.n
        if self.family is Family.GL:
            return prod(q ** i - 1 for i in range(1, n + 1))
        if self.family is Family.U:
            return prod(q ** i - (-1) ** i for i in range(1, n + 1))
        if self.family in (Family.SP, Family.SO_ODD):
            return prod(q ** (2 * i) - 1 for i in range(1, n + 1))
        eps = 1 if self.family is Family.SO_EVEN_PLUS else -1
        return (q ** n - eps) * prod(q ** (2 * i) - 1 for i in range(1, n))

    def with_n(self, n: int, family: Optional[Family] = None) -> 'GroupKind':
        return GroupKind(family or self.family, n, self.field)

    def __str__(self):
        names = {
            Family.GL: f'GL_{self.n}', Family.U: f'U_{self.n}', Family.SP: f'Sp_{2 * self.n}',
            Family.SO_ODD: f'SO_{2 * self.n + 1}', Family.SO_EVEN_PLUS: f'SO+_{2 * self.n}',
            Family.SO_EVEN_MINUS: f'SO-_{2 * self.n}',
        }
        return f'{names[self.family]}(F_{self.q})'


def splits(kind: GroupKind, mu: Partition, lam: Partition) -> bool:
    """True when the O-class of T_(mu, lam) falls apart into two SO^+ classes."""
    return kind.family is Family.SO_EVEN_PLUS and not lam and all(p % 2 == 0 for p in mu.parts)


@dataclass(frozen=True, order=True)
class FClassLabel:
    kind: GroupKind
    mu: Partition = field(default_factory=Partition)
    lam: Partition = field(default_factory=Partition)
    split_sign: Optional[int] = None

    def __post_init__(self):
        family = self.kind.family
        if family.is_linear and self.lam:
            raise ValueError(f"{self.kind} tori are labelled by a single partition, got lambda={self.lam}")
        if self.mu.size + self.lam.size != self.kind.n:
            raise ValueError(f"Label {self.bipartition} has size {self.mu.size + self.lam.size}, expected {self.kind.n}")
        if family is Family.SO_EVEN_PLUS and len(self.lam) % 2:
            raise ValueError(f"SO+ labels need an even number of lambda parts, got {self.lam}")
        if family is Family.SO_EVEN_MINUS and len(self.lam) % 2 == 0:
            raise ValueError(f"SO- labels need an odd number of lambda parts, got {self.lam}")
        if self.needs_split_sign:
            if self.split_sign not in (1, -1):
                raise ValueError(f"Label {self.bipartition} of {self.kind} needs a split sign")
        elif self.split_sign is not None:
            raise ValueError(f"Label {self.bipartition} of {self.kind} does not split")

    @property
    def needs_split_sign(self) -> bool:
        return splits(self.kind, self.mu, self.lam)

    @property
    def bipartition(self) -> Bipartition:
        return Bipartition(self.mu, self.lam)

    def __str__(self):
        body = str(self.mu) if self.kind.family.is_linear else str(self.bipartition)
        if self.split_sign is not None:
            body += '+' if self.split_sign == 1 else '-'
        return body


@dataclass(frozen=True)
class WeylElement:
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> 'WeylElement':
        return cls(tuple(range(n)), (1,) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: 'WeylElement') -> 'WeylElement':
        # apply ``other`` first
        return WeylElement(
            tuple(self.perm[j] for j in other.perm),
            tuple(s * self.signs[j] for s, j in zip(other.signs, other.perm)),
        )

    def inverse(self) -> 'WeylElement':
        perm = [0] * self.n
        signs = [1] * self.n
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            perm[j] = i
            signs[j] = s
        return WeylElement(tuple(perm), tuple(signs))

    @property
    def sign_product(self) -> int:
        return prod(self.signs)

    def act(self, values: Sequence, invert: Callable) -> tuple:
        out = [None] * self.n
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            out[j] = values[i] if s == 1 else invert(values[i])
        return tuple(out)


@dataclass(frozen=True)
class Block:
    kind: str  # 'mu' (split or linear cycle) or 'lam' (negative cycle)
    size: int
    start: int

    @property
    def type_key(self) -> Tuple[str, int]:
        return self.kind, self.size


@lru_cache(maxsize=None)
def weyl_group(weyl_type: str, n: int) -> Tuple[WeylElement, ...]:
    if weyl_type == 'A':
        return tuple(WeylElement(p, (1,) * n) for p in permutations(range(n)))
    elements = [WeylElement(p, s) for p in permutations(range(n)) for s in product((1, -1), repeat=n)]
    if weyl_type == 'D':
        elements = [w for w in elements if w.sign_product == 1]
    return tuple(elements)


def longest_element(n: int) -> WeylElement:
    return WeylElement(tuple(range(n - 1, -1, -1)), (1,) * n)


def last_flip(n: int) -> WeylElement:
    return WeylElement(tuple(range(n)), (1,) * (n - 1) + (-1,))


def frobenius_twist(kind: GroupKind) -> Optional[WeylElement]:
    if kind.family is Family.U and kind.n > 1:
        return longest_element(kind.n)
    if kind.family is Family.SO_EVEN_MINUS:
        return last_flip(kind.n)
    return None


def frobenius(kind: GroupKind, x: WeylElement) -> WeylElement:
    c = frobenius_twist(kind)
    return x if c is None else c * x * c


def twisted_conjugate(kind: GroupKind, x: WeylElement, w: WeylElement) -> WeylElement:
    return x.inverse() * w * frobenius(kind, x)


def label_blocks(label: FClassLabel) -> Tuple[Block, ...]:
    blocks: List[Block] = []
    start = 0
    for kind, parts in (('mu', label.mu.parts), ('lam', label.lam.parts)):
        for size in parts:
            blocks.append(Block(kind, size, start))
            start += size
    return tuple(blocks)


@lru_cache(maxsize=None)
def torus_operator(label: FClassLabel) -> WeylElement:
    """w' with T_w^F = {x : x = w'.x^phi}: one cycle per block, negative for lambda blocks."""
    n = label.kind.n
    perm = [0] * n
    signs = [1] * n
    for block in label_blocks(label):
        for j in range(block.size):
            i = block.start + j
            perm[i] = block.start + (j + 1) % block.size
            if block.kind == 'lam' and j == block.size - 1:
                signs[i] = -1
    w = WeylElement(tuple(perm), tuple(signs))
    if label.split_sign == -1:
        a = last_flip(n)
        w = a * w * a
    return w


@lru_cache(maxsize=None)
def representative(label: FClassLabel) -> WeylElement:
    c = frobenius_twist(label.kind)
    w = torus_operator(label)
    return w if c is None else w * c


@lru_cache(maxsize=None)
def f_classes(kind: GroupKind) -> Tuple[FClassLabel, ...]:
    if kind.family.is_linear:
        return tuple(FClassLabel(kind, mu) for mu in partitions_of(kind.n))
    labels: List[FClassLabel] = []
    for bp in bipartitions_of(kind.n):
        if kind.family is Family.SO_EVEN_PLUS and len(bp.second) % 2:
            continue
        if kind.family is Family.SO_EVEN_MINUS and len(bp.second) % 2 == 0:
            continue
        for split_sign in ((1, -1) if splits(kind, bp.first, bp.second) else (None,)):
            labels.append(FClassLabel(kind, bp.first, bp.second, split_sign))
    return tuple(labels)


def type_b_order(mu: Partition, lam: Partition) -> int:
    return (prod((2 * e) ** k * factorial(k) for e, k in mu.multiplicities().items())
            * prod((2 * f) ** k * factorial(k) for f, k in lam.multiplicities().items()))


def f_centralizer_order(label: FClassLabel) -> int:
    family = label.kind.family
    if family.is_linear:
        return z_order(label.mu)
    full = type_b_order(label.mu, label.lam)
    if family.is_even_orthogonal and not label.needs_split_sign:
        return full // 2
    return full


def enumeration_bound(kind: GroupKind) -> int:
    if kind.family.is_linear:
        return getattr(settings, 'GGP_ORACLE_BOUND_LINEAR', 8)
    return getattr(settings, 'GGP_ORACLE_BOUND_SIGNED', 6)


@lru_cache(maxsize=None)
def _enumerate(label: FClassLabel) -> Tuple[WeylElement, ...]:
    w = representative(label)
    group = weyl_group(label.kind.family.weyl_type, label.kind.n)
    return tuple(x for x in group if twisted_conjugate(label.kind, x, w) == w)


def enumerate_f_centralizer(label: FClassLabel, bound: Optional[int] = None) -> List[WeylElement]:
    """Brute-force W_G(T_w)^F for the representative w of ``label``."""
    limit = enumeration_bound(label.kind) if bound is None else bound
    if label.kind.n > limit:
        raise RankBoundExceeded(f'W({label.kind})', label.kind.n, limit)
    elements = _enumerate(label)
    logger.debug(f"Enumerated {len(elements)} F-centralizer elements for {label} in {label.kind}")
    return list(elements)
