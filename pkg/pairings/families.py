"""
Pair families (G, H) with H^F the smaller group, one class per family.

Each family knows which groups it accepts, its hypotheses on the dual
elements, and the signs its pairing formulas carry.  Engines look families up
through ``FamilyRegistry`` by name ('GL', 'U' or 'SO').
"""
from abc import ABC, abstractmethod
from typing import Iterable, Sequence, Tuple
import logging

from algebra.eigenvalue_orbits import describe, identity, minus_one
from algebra.partitions import Bipartition, multiset_difference, z_order
from algebra.tori import TorusDatum, eigenvalue_key
from algebra.weyl import Family, GroupKind, type_b_order

from .exceptions import HypothesisViolation

logger = logging.getLogger(__name__)

__all__ = ['PairFamily', 'GLPairFamily', 'UnitaryPairFamily', 'OrthogonalPairFamily',
           'FamilyRegistry', 'family_for']

# (base family of the class, nu on the big side, nu on the small side)
SignRow = Tuple[Family, int, int]


class PairFamily(ABC):
    name = ''

    @abstractmethod
    def check_groups(self, big: GroupKind, small: GroupKind) -> None:
        """Raise ValueError unless (big, small) is a basic pair of this family."""

    @abstractmethod
    def iota_sign(self, big: TorusDatum, small: TorusDatum, shape: Bipartition) -> int:
        """Sign of the summand attached to the common sub-torus ``shape``."""

    @abstractmethod
    def global_sign(self, big: TorusDatum, small: TorusDatum) -> int:
        pass

    @abstractmethod
    def part_sign(self, block_kind: str, size: int) -> int:
        """Sign picked up by each matched block of the given type in the closed form."""

    @abstractmethod
    def eps_ts(self, big: GroupKind, small: GroupKind, rows: Sequence[SignRow], reading: str) -> int:
        pass

    def complement_order(self, torus: TorusDatum, shape: Bipartition) -> int:
        """|W(T'')^F| for the blocks of ``torus`` left over once ``shape`` is removed."""
        mu = multiset_difference(torus.label.mu, shape.first)
        if torus.ambient.family.is_linear:
            return z_order(mu)
        return type_b_order(mu, multiset_difference(torus.label.lam, shape.second))

    def check_hypothesis(self, torus: TorusDatum, coords: Iterable) -> None:
        pass

    def __str__(self):
        return self.name


class GLPairFamily(PairFamily):
    name = 'GL'

    def check_groups(self, big, small):
        if big.family is not Family.GL or small.family is not Family.GL:
            raise ValueError(f"GL pairs need two general linear groups, got {big} and {small}")
        _check_common_field(big, small)
        if big.n != small.n + 1:
            raise ValueError(f"GL pairs need GL_(n+1) over GL_n, got {big} and {small}")

    def iota_sign(self, big, small, shape):
        return self.global_sign(big, small)

    def global_sign(self, big, small):
        return (-1) ** (1 + len(big.label.mu) + len(small.label.mu))

    def part_sign(self, block_kind, size):
        return 1

    def eps_ts(self, big, small, rows, reading):
        return (-1) ** (1 + len(rows))


class UnitaryPairFamily(PairFamily):
    name = 'U'

    def check_groups(self, big, small):
        if big.family is not Family.U or small.family is not Family.U:
            raise ValueError(f"Unitary pairs need two unitary groups, got {big} and {small}")
        _check_common_field(big, small)
        if big.n != small.n + 1:
            raise ValueError(f"Unitary pairs need U_(n+1) over U_n, got {big} and {small}")

    def iota_sign(self, big, small, shape):
        return (-1) ** (small.ambient.n - shape.first.size + big.rank + small.rank)

    def global_sign(self, big, small):
        return (-1) ** (small.ambient.n + big.rank + small.rank)

    def part_sign(self, block_kind, size):
        return (-1) ** size

    def eps_ts(self, big, small, rows, reading):
        a = sum(1 for base, _, _ in rows if base is Family.GL)
        b = sum(1 for base, nu_t, nu_s in rows
                if base is Family.U and nu_t > nu_s and (nu_t - nu_s) % 2)
        return (-1) ** (a + b)


class OrthogonalPairFamily(PairFamily):
    name = 'SO'

    def check_groups(self, big, small):
        if big.family is not Family.SO_ODD or not small.family.is_even_orthogonal:
            raise ValueError(f"Orthogonal pairs need SO_(2n+1) over SO^±_(2n), got {big} and {small}")
        _check_common_field(big, small)
        if big.n != small.n:
            raise ValueError(f"Orthogonal pairs need SO_(2n+1) over SO_(2n), got {big} and {small}")

    def iota_sign(self, big, small, shape):
        return (-1) ** (big.ambient.rank + small.ambient.rank + len(shape.second)
                        + len(big.label.mu) + len(small.label.mu))

    def global_sign(self, big, small):
        return (-1) ** (big.ambient.rank + small.ambient.rank + len(big.label.mu) + len(small.label.mu))

    def part_sign(self, block_kind, size):
        return -1 if block_kind == 'lam' else 1

    def eps_ts(self, big, small, rows, reading):
        if reading == 'shared':
            a = sum(1 for base, _, _ in rows if base is Family.GL)
            return (-1) ** (a + big.rank + small.rank)
        a = sum(1 for base, _, _ in rows if base is Family.GL)
        b = sum(1 for base, nu_t, nu_s in rows if base is Family.U and max(nu_t, nu_s) % 2)
        return (-1) ** (big.rank + small.rank + a + b)

    def check_hypothesis(self, torus, coords):
        kind = torus.ambient
        forbidden = {identity(): '1', minus_one(kind.field): '-1'}
        for y in coords:
            key = eigenvalue_key(kind, y)
            if key in forbidden:
                label = forbidden[key]
                logger.debug(f"Rejected {torus}: eigenvalue {label} occurs")
                raise HypothesisViolation(
                    f"±1 must not be an eigenvalue on {torus}; found orbit [{describe(kind.field, key)}]",
                    orbit=label,
                )


def _check_common_field(big: GroupKind, small: GroupKind) -> None:
    if big.field != small.field:
        raise ValueError(f"Groups must share the base field, got q={big.q} and q={small.q}")


class FamilyRegistry:
    _families = {
        'GL': GLPairFamily,
        'U': UnitaryPairFamily,
        'SO': OrthogonalPairFamily,
    }

    @classmethod
    def register_family(cls, family_name: str, family_class):
        cls._families[family_name.strip().upper()] = family_class

    @classmethod
    def get_family(cls, family_name: str) -> PairFamily:
        family_class = cls._families.get(family_name.strip().upper())
        if not family_class:
            raise ValueError(f"Pair family '{family_name}' not found.")
        return family_class()

    @classmethod
    def names(cls):
        return sorted(cls._families)


def family_for(kind: GroupKind) -> PairFamily:
    """The pair family whose big group is ``kind``."""
    names = {Family.GL: 'GL', Family.U: 'U', Family.SO_ODD: 'SO'}
    if kind.family not in names:
        raise ValueError(f"{kind} is not the larger group of a supported pair family")
    return FamilyRegistry.get_family(names[kind.family])
