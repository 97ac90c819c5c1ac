"""
Eigenvalues in the multiplicative group of the algebraic closure of F_q.

An element is stored as an exponent ``e`` at a level ``k``: it is g_k**e for a
fixed generator g_k of F_{q^k}^x, with the generators chosen compatibly so that
F_{q^d}^x embeds in F_{q^k}^x by e -> e * (q^k - 1) / (q^d - 1) whenever d | k.
No polynomial arithmetic is ever needed: Frobenius orbits only depend on this
multiplicative structure.
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Tuple
import logging

from sympy import divisors, factorint

logger = logging.getLogger(__name__)

__all__ = [
    'FieldParam', 'Twist', 'Eigenvalue', 'FrobeniusOrbit',
    'normalize', 'identity', 'minus_one', 'inverse', 'power', 'lift',
    'frobenius_orbit', 'orbit_key', 'inverse_closed_class', 'class_key',
    'from_residue', 'has_order_dividing', 'describe',
]


@dataclass(frozen=True, order=True)
class FieldParam:
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or isinstance(self.q, bool) or self.q < 3:
            raise ValueError(f"q must be an odd prime power >= 3, got {self.q!r}")
        factors = factorint(self.q)
        if len(factors) != 1:
            raise ValueError(f"q must be a prime power, got {self.q}")
        if 2 in factors:
            raise ValueError(f"q must be odd (characteristic p > 2), got {self.q}")

    @property
    def p(self) -> int:
        return next(iter(factorint(self.q)))

    def modulus(self, level: int) -> int:
        return self.q ** level - 1

    def power_field(self, h: int) -> 'FieldParam':
        """F_{q^h}, the base field of the primed groups."""
        return FieldParam(self.q ** h)


class Twist(str, Enum):
    STANDARD = 'standard'
    UNITARY = 'unitary'

    def multiplier(self, field: FieldParam) -> int:
        return field.q if self is Twist.STANDARD else -field.q


@dataclass(frozen=True, order=True)
class Eigenvalue:
    level: int
    exponent: int

    @property
    def is_one(self) -> bool:
        return self.level == 1 and self.exponent == 0


@dataclass(frozen=True)
class FrobeniusOrbit:
    twist: Twist
    members: Tuple[Eigenvalue, ...]
    self_inverse: bool
    contains_one: bool
    contains_minus_one: bool

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def key(self) -> Eigenvalue:
        return self.members[0]


@lru_cache(maxsize=None)
def normalize(field: FieldParam, level: int, exponent: int) -> Eigenvalue:
    if level < 1:
        raise ValueError(f"Eigenvalue level must be >= 1, got {level}")
    modulus = field.modulus(level)
    e = exponent % modulus
    for d in divisors(level):
        step = modulus // field.modulus(d)
        if e % step == 0:
            return Eigenvalue(d, e // step)
    # d = level always divides; unreachable
    raise AssertionError(f"normalize failed for level={level}, exponent={exponent}")


def identity() -> Eigenvalue:
    return Eigenvalue(1, 0)


def minus_one(field: FieldParam) -> Eigenvalue:
    return Eigenvalue(1, (field.q - 1) // 2)


def power(field: FieldParam, a: Eigenvalue, k: int) -> Eigenvalue:
    return normalize(field, a.level, a.exponent * k)


def inverse(field: FieldParam, a: Eigenvalue) -> Eigenvalue:
    return power(field, a, -1)


def lift(field: FieldParam, a: Eigenvalue, level: int) -> int:
    """Exponent of ``a`` inside F_{q^level}^x; ``a.level`` must divide ``level``."""
    if level % a.level:
        raise ValueError(f"Eigenvalue of level {a.level} does not live at level {level}")
    return a.exponent * (field.modulus(level) // field.modulus(a.level))


def has_order_dividing(field: FieldParam, a: Eigenvalue, level: int, order: int) -> bool:
    if level % a.level:
        return False
    return lift(field, a, level) % (field.modulus(level) // order) == 0


def from_residue(field: FieldParam, level: int, order: int, residue: int) -> Eigenvalue:
    """The ``residue``-th power of a generator of the order-``order`` subgroup of F_{q^level}^x."""
    modulus = field.modulus(level)
    if modulus % order:
        raise ValueError(f"No cyclic subgroup of order {order} at level {level} over q={field.q}")
    return normalize(field, level, (residue % order) * (modulus // order))


@lru_cache(maxsize=None)
def frobenius_orbit(field: FieldParam, twist: Twist, a: Eigenvalue) -> FrobeniusOrbit:
    a = normalize(field, a.level, a.exponent)
    step = twist.multiplier(field)
    members = {a}
    x = power(field, a, step)
    while x != a:
        members.add(x)
        x = power(field, x, step)
    members = tuple(sorted(members))
    return FrobeniusOrbit(
        twist=twist,
        members=members,
        self_inverse=inverse(field, a) in members,
        contains_one=identity() in members,
        contains_minus_one=minus_one(field) in members,
    )


def orbit_key(orbit: FrobeniusOrbit) -> Eigenvalue:
    return orbit.key


@lru_cache(maxsize=None)
def inverse_closed_class(field: FieldParam, a: Eigenvalue) -> Tuple[Eigenvalue, ...]:
    """[a] together with [a^-1] under the standard twist, the eigenvalue classes of orthogonal groups."""
    orbit = frobenius_orbit(field, Twist.STANDARD, a)
    if orbit.self_inverse:
        return orbit.members
    other = frobenius_orbit(field, Twist.STANDARD, inverse(field, a))
    return tuple(sorted(orbit.members + other.members))


def class_key(field: FieldParam, a: Eigenvalue) -> Eigenvalue:
    return inverse_closed_class(field, a)[0]


def describe(field: FieldParam, a: Eigenvalue) -> str:
    if a.is_one:
        return '1'
    if a == minus_one(field):
        return '-1'
    return f'({a.level},{a.exponent})'
