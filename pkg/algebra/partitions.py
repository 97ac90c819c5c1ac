"""Integer partitions and bipartitions as multisets of parts."""
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Iterator, List, Tuple

from sympy.utilities.iterables import multiset_combinations, partitions

__all__ = [
    'Partition', 'Bipartition', 'contains', 'multiset_union', 'scale_div',
    'multiset_difference', 'c_coeff', 'sub_multisets', 'partitions_of', 'bipartitions_of', 'z_order',
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError(f"Partition parts must be positive, got {self.parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    def scale(self, h: int) -> 'Partition':
        return Partition(tuple(p * h for p in self.parts))

    def __str__(self):
        return '(' + ','.join(str(p) for p in self.parts) + ')'


@dataclass(frozen=True, order=True)
class Bipartition:
    first: Partition = field(default_factory=Partition)
    second: Partition = field(default_factory=Partition)

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def __str__(self):
        return f'({self.first},{self.second})'


def contains(mu: Partition, sub: Partition) -> bool:
    available = Counter(mu.parts)
    needed = Counter(sub.parts)
    return all(available[p] >= k for p, k in needed.items())


def multiset_union(*mus: Partition) -> Partition:
    return Partition(tuple(p for mu in mus for p in mu.parts))


def multiset_difference(mu: Partition, sub: Partition) -> Partition:
    if not contains(mu, sub):
        raise ValueError(f"{sub} is not contained in {mu}")
    rest = Counter(mu.parts)
    rest.subtract(Counter(sub.parts))
    return Partition(tuple(rest.elements()))


def scale_div(mu: Partition, h: int) -> Partition:
    if h <= 0:
        raise ValueError(f"Scale must be positive, got {h}")
    if any(p % h for p in mu.parts):
        raise ValueError(f"{h} does not divide every part of {mu}")
    return Partition(tuple(p // h for p in mu.parts))


def c_coeff(mu: Partition, sub: Partition, strict: bool = False) -> int:
    """Number of sub-multisets of ``mu`` equal to ``sub``: prod of C(a_i, b_i) over distinct part values."""
    if not contains(mu, sub):
        if strict:
            raise ValueError(f"{sub} is not contained in {mu}")
        return 0
    available = Counter(mu.parts)
    return prod(comb(available[p], k) for p, k in Counter(sub.parts).items())


def sub_multisets(mu: Partition) -> Iterator[Partition]:
    """Every distinct sub-multiset of the parts of ``mu``, smallest first."""
    for size in range(len(mu.parts) + 1):
        for chosen in multiset_combinations(list(mu.parts), size):
            yield Partition(tuple(chosen))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    if n < 0:
        raise ValueError(f"Cannot partition a negative integer: {n}")
    if n == 0:
        return (Partition(),)
    # sympy reuses the yielded dict, copy each one
    result = []
    for multiplicities in partitions(n):
        result.append(Partition(tuple(p for p, k in multiplicities.copy().items() for _ in range(k))))
    return tuple(sorted(result, reverse=True))


@lru_cache(maxsize=None)
def bipartitions_of(n: int) -> Tuple[Bipartition, ...]:
    result: List[Bipartition] = []
    for k in range(n, -1, -1):
        for mu in partitions_of(k):
            for lam in partitions_of(n - k):
                result.append(Bipartition(mu, lam))
    return tuple(result)


def z_order(mu: Partition) -> int:
    """prod d^{k_d} k_d!, the centralizer order of a permutation of cycle type ``mu``."""
    return prod(d ** k * factorial(k) for d, k in Counter(mu.parts).items())
