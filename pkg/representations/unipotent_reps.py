"""
Uniform representations as rational combinations of Deligne-Lusztig characters.

Unipotent characters of GL_n and U_n come from the symmetric group character
table; members of a Lusztig series E(G, s) glue the unipotent pieces of the
centralizer factors onto the tori of G.  ``ggp_multiplicity`` evaluates a
Bessel multiplicity twice, once by pairing the two expansions and once as a
product of per-class factors, and refuses to answer when the two disagree.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod
from typing import Dict, List, Optional, Tuple
import logging

from algebra.eigenvalue_orbits import Eigenvalue, frobenius_orbit, identity, normalize
from algebra.partitions import Partition, partitions_of
from algebra.tori import TorusDatum, assemble, eigenvalue_key, identity_element
from algebra.weyl import FClassLabel, Family, GroupKind, f_centralizer_order
from pairings.exceptions import HypothesisViolation, RouteDisagreement
from pairings.families import family_for
from pairings.lusztig_decomposition import base_family, fresh_thetas, padding_partition, theta_candidates
from pairings.reeder_engine import DualTorusPair, dl_inner_product_same_group, reeder_closed_form

logger = logging.getLogger(__name__)

__all__ = [
    'VirtualCharacter', 'SeriesOrbit', 'SeriesDatum', 'MultiplicityReport',
    'mn_character', 'unipotent_expansion', 'degree', 'series_member',
    'gl_multiplicity', 'reduce_to_basic', 'ggp_multiplicity',
]


@dataclass
class VirtualCharacter:
    group: GroupKind
    terms: Dict[DualTorusPair, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for pair in self.terms:
            if pair.kind != self.group:
                raise ValueError(f"Term {pair} does not live on {self.group}")
        self.terms = {pair: Fraction(c) for pair, c in self.terms.items() if c}

    def __neg__(self) -> 'VirtualCharacter':
        return VirtualCharacter(self.group, {pair: -c for pair, c in self.terms.items()})

    def inner(self, other: 'VirtualCharacter') -> Fraction:
        if other.group != self.group:
            raise ValueError(f"Cannot pair a character of {self.group} with one of {other.group}")
        total = Fraction(0)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                if a.torus.label == b.torus.label:
                    total += ca * cb * dl_inner_product_same_group(self.group, a, b)
        return total

    def __str__(self):
        body = ' + '.join(f'{c}*R[{pair.torus.label}]' for pair, c in sorted(self.terms.items()))
        return f'{body or "0"} on {self.group}'


@dataclass(frozen=True)
class SeriesOrbit:
    """One eigenvalue class of s: a seed eigenvalue, its multiplicity nu and the unipotent label."""
    seed: Eigenvalue
    nu: int
    lam: Partition


@dataclass(frozen=True)
class SeriesDatum:
    """A series member by its classes. ``split_sign`` picks one of the two SO^+ classes sharing them."""
    group: GroupKind
    orbits: Tuple[SeriesOrbit, ...] = ()
    split_sign: int = 1

    def __post_init__(self):
        if self.split_sign not in (1, -1):
            raise ValueError(f"split_sign must be 1 or -1, got {self.split_sign}")

    def factors(self) -> List[Tuple[Eigenvalue, int, GroupKind, SeriesOrbit]]:
        """(class key, orbit size, centralizer factor, orbit) per class, in key order."""
        kind = self.group
        rows = []
        for orbit in self.orbits:
            seed = normalize(kind.field, orbit.seed.level, orbit.seed.exponent)
            frob = frobenius_orbit(kind.field, kind.family.twist, seed)
            if kind.family.is_signed and (frob.contains_one or frob.contains_minus_one):
                label = '1' if frob.contains_one else '-1'
                logger.debug(f"Series datum for {kind} contains the eigenvalue {label}")
                raise HypothesisViolation(f"Eigenvalue {label} is excluded for {kind}", orbit=label)
            family, h = base_family(kind, frob.size, frob.self_inverse)
            rows.append((eigenvalue_key(kind, seed), frob.size, GroupKind(family, orbit.nu, kind.field.power_field(h)),
                         SeriesOrbit(seed, orbit.nu, orbit.lam)))
        return sorted(rows, key=lambda row: row[0])


@dataclass
class MultiplicityReport:
    value: int
    lhs: int
    rhs: int
    family: str
    factors: List[Dict] = field(default_factory=list)
    reduction: Optional[Dict] = None


@lru_cache(maxsize=None)
def _mn(beta: Tuple[int, ...], parts: Tuple[int, ...]) -> int:
    if not parts:
        return 1
    r, rest = parts[0], parts[1:]
    present = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or b - r in present:
            continue
        height = sum(1 for c in beta if b - r < c < b)
        total += (-1) ** height * _mn(tuple(sorted((present - {b}) | {b - r})), rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """chi_lam(w_mu) by removing rim hooks of sizes mu from the beta-set of lam."""
    if lam.size != mu.size:
        raise ValueError(f"Character {lam} and class {mu} have different sizes")
    k = len(lam)
    beta = tuple(sorted(p + k - 1 - i for i, p in enumerate(lam.parts)))
    return _mn(beta, mu.parts)


def _torus_degree(group: GroupKind, pair: DualTorusPair) -> Fraction:
    return Fraction(group.sign * pair.torus.sign * group.order_p_prime, pair.torus.order)


def degree(vc: VirtualCharacter) -> int:
    total = sum((c * _torus_degree(vc.group, pair) for pair, c in vc.terms.items()), Fraction(0))
    if total.denominator != 1:
        raise AssertionError(f"Degree of {vc} is not an integer: {total}")
    return total.numerator


@lru_cache(maxsize=None)
def unipotent_expansion(group: GroupKind, lam: Partition) -> VirtualCharacter:
    if not group.family.is_linear:
        raise ValueError(f"Unipotent expansions are available for GL and U, got {group}")
    if lam.size != group.n:
        raise ValueError(f"Label {lam} does not match {group}")
    terms = {}
    for mu in partitions_of(group.n):
        torus = TorusDatum(FClassLabel(group, mu))
        terms[DualTorusPair(torus, identity_element(torus))] = Fraction(
            mn_character(lam, mu), f_centralizer_order(torus.label))
    vc = VirtualCharacter(group, terms)
    dim = degree(vc)
    if dim == 0:
        raise AssertionError(f"Unipotent {lam} of {group} has degree zero")
    if dim < 0:
        vc = -vc
    return vc


def _glued_blocks(ambient: GroupKind, base: GroupKind, orbit_size: int, seed: Eigenvalue,
                  kappa: Partition) -> List[Tuple[str, int, Eigenvalue]]:
    if ambient.family.is_linear or base.family is Family.GL:
        return [('mu', orbit_size * part, seed) for part in kappa.parts]
    half = orbit_size // 2
    return [('mu' if part % 2 == 0 else 'lam', half * part, seed) for part in kappa.parts]


def _check_sizes(datum: SeriesDatum, rows) -> None:
    kind = datum.group
    keys = [row[0] for row in rows]
    if len(set(keys)) != len(keys):
        raise ValueError(f"Series datum for {kind} lists the class {keys} more than once")
    for _, _, base, orbit in rows:
        if orbit.lam.size != orbit.nu:
            raise ValueError(f"Label {orbit.lam} does not match multiplicity {orbit.nu}")
    if kind.family.is_linear:
        total, expected = sum(size * orbit.nu for _, size, _, orbit in rows), kind.n
    else:
        total = sum((size if base.family is Family.U else 2 * size) * orbit.nu
                    for _, size, base, orbit in rows)
        expected = 2 * kind.n
    if total != expected:
        raise ValueError(f"Series datum accounts for {total} eigenvalues, {kind} needs {expected}")


def series_member(datum: SeriesDatum) -> VirtualCharacter:
    """The uniform member of E(G, s) whose Lusztig image is the tensor product of the unipotent labels."""
    rows = datum.factors()
    _check_sizes(datum, rows)
    kind = datum.group
    pieces = [unipotent_expansion(base, orbit.lam) for _, _, base, orbit in rows]
    eps = kind.sign * prod(base.sign for _, _, base, _ in rows)
    terms: Dict[DualTorusPair, Fraction] = {}
    for choice in product(*(piece.terms.items() for piece in pieces)):
        blocks = []
        coefficient = Fraction(eps)
        for (_, size, base, orbit), (pair, c) in zip(rows, choice):
            blocks.extend(_glued_blocks(kind, base, size, orbit.seed, pair.torus.label.mu))
            coefficient *= c
        glued = DualTorusPair(*assemble(kind, blocks, datum.split_sign))
        if glued.kind != kind:
            raise ValueError(f"Series datum lands on {glued.kind}, not on {kind}")
        terms[glued] = terms.get(glued, Fraction(0)) + coefficient
    vc = VirtualCharacter(kind, terms)
    expected = Fraction(kind.order_p_prime, prod(base.order_p_prime for _, _, base, _ in rows))
    expected *= prod(degree(piece) for piece in pieces)
    dim = degree(vc)
    if dim != expected or dim <= 0:
        raise AssertionError(f"Series member on {kind} has degree {dim}, expected {expected}")
    logger.debug(f"Series member on {kind}: {len(terms)} terms, degree {dim}")
    return vc


def _class_keys(vc: VirtualCharacter) -> set:
    return {eigenvalue_key(vc.group, y) for pair in vc.terms for y in pair.element.coords}


def gl_multiplicity(pi: VirtualCharacter, sigma: VirtualCharacter, tau_seed: int = 0) -> int:
    """<pi, I(tau x sigma)> over GL_n with tau a regular character of the Coxeter torus of GL_{n+1-m}."""
    for vc in (pi, sigma):
        if vc.group.family is not Family.GL:
            raise ValueError(f"gl_multiplicity needs GL characters, got {vc.group}")
    if pi.group.field != sigma.group.field:
        raise ValueError(f"Fields differ: {pi.group} and {sigma.group}")
    if pi.group.n < sigma.group.n:
        pi, sigma = sigma, pi
    n, m = pi.group.n, sigma.group.n
    if n == 0:
        return 1
    k = n + 1 - m
    eps_tau = (-1) ** (k + 1)
    coxeter = GroupKind(Family.GL, k, pi.group.field)
    s_tau, = fresh_thetas(coxeter, Partition((k,)), tau_seed, avoid=_class_keys(pi) | _class_keys(sigma))
    big_group = pi.group.with_n(n + 1)
    total = Fraction(0)
    for s_pair, cs in sigma.terms.items():
        blocks = [('mu', b.size, y) for b, y in zip(s_pair.torus.blocks, s_pair.element.coords)]
        big = DualTorusPair(*assemble(big_group, blocks + [('mu', k, s_tau)]))
        for t_pair, ct in pi.terms.items():
            total += cs * ct * eps_tau * reeder_closed_form('GL', big, t_pair).value
    if total.denominator != 1 or total < 0:
        raise AssertionError(f"GL multiplicity of {pi.group} x {sigma.group} is {total}")
    logger.debug(f"m({pi.group}, {sigma.group}) = {total}")
    return total.numerator


def _fresh_class(kind: GroupKind, size: int, used: set, seed: int) -> Eigenvalue:
    block_kind = GroupKind(kind.family if kind.family is Family.U else Family.GL, size, kind.field)
    index = 0
    for y in theta_candidates(block_kind, size):
        frob = frobenius_orbit(kind.field, kind.family.twist, y)
        key = eigenvalue_key(kind, y)
        if frob.self_inverse or key in used:
            continue
        if index == seed:
            return y
        index += 1
    raise ValueError(f"No fresh class of size {size} for {kind}; use a larger q")


def reduce_to_basic(pi: SeriesDatum, sigma: SeriesDatum, seed: int = 0) -> Tuple[SeriesDatum, SeriesDatum, Optional[Dict]]:
    """(big, small, trace): the basic pair whose pairing equals m(pi, sigma)."""
    G, H = pi.group, sigma.group
    if G.field != H.field:
        raise ValueError(f"Fields differ: {G} and {H}")
    if G.family is Family.U and H.family is Family.U:
        corank = G.n - H.n
        if corank <= 0:
            raise ValueError(f"pi must live on the larger group, got {G} and {H}")
        if corank % 2 == 0:
            raise ValueError(f"Even corank {corank} is a Fourier-Jacobi case")
        if corank == 1:
            return pi, sigma, None
        size, lifted = corank + 1, H.with_n(G.n + 1)
    elif G.family is Family.SO_ODD and H.family.is_even_orthogonal:
        if G.n != H.n:
            raise ValueError(f"{G} > {H} needs pi on the even orthogonal group")
        return pi, sigma, None
    elif G.family.is_even_orthogonal and H.family is Family.SO_ODD:
        if H.n >= G.n:
            raise ValueError(f"pi must live on the larger group, got {G} and {H}")
        size, lifted = G.n - H.n, H.with_n(G.n)
    else:
        raise ValueError(f"No Bessel reduction for {G} > {H}")
    used = {row[0] for datum in (pi, sigma) for row in datum.factors()}
    x = _fresh_class(G, size, used, seed)
    sigma_plus = SeriesDatum(lifted, sigma.orbits + (SeriesOrbit(x, 1, Partition((1,))),))
    trace = {'corank': 2 * (G.n - H.n) - 1 if G.family.is_signed else G.n - H.n,
             'lifted_group': str(lifted), 'fresh_seed': [x.level, x.exponent], 'fresh_size': size}
    logger.info(f"Reduced {G} > {H} to {lifted} > {G} with fresh class {x}")
    return sigma_plus, pi, trace


def _pairing_sum(family_name: str, big: VirtualCharacter, small: VirtualCharacter) -> Fraction:
    total = Fraction(0)
    for a, ca in big.terms.items():
        for b, cb in small.terms.items():
            total += ca * cb * reeder_closed_form(family_name, a, b).value
    return total


def _unitary_factor(base: GroupKind, lam_big: Partition, lam_small: Partition,
                    nu_big: int, nu_small: int, theta_seed: int) -> int:
    if nu_big >= nu_small:
        larger, lam_large, nu_other, lam_other = nu_big, lam_big, nu_small, lam_small
    else:
        larger, lam_large, nu_other, lam_other = nu_small, lam_small, nu_big, lam_big
    rho = unipotent_expansion(base.with_n(larger), lam_large)
    other = unipotent_expansion(base.with_n(nu_other), lam_other)
    k = larger + 1 - nu_other
    padding = padding_partition(Family.U, k)
    thetas = fresh_thetas(base.with_n(larger + 1), padding, theta_seed)
    padding_torus, _ = assemble(base.with_n(k), [('mu', size, identity()) for size in padding.parts])
    eps_tau = base.with_n(k).sign * padding_torus.sign
    induced: Dict[DualTorusPair, Fraction] = {}
    for pair, c in other.terms.items():
        blocks = [('mu', b.size, identity()) for b in pair.torus.blocks]
        blocks += [('mu', size, y) for size, y in zip(padding.parts, thetas)]
        induced[DualTorusPair(*assemble(base.with_n(larger + 1), blocks))] = eps_tau * c
    total = _pairing_sum('U', VirtualCharacter(base.with_n(larger + 1), induced), rho)
    if total.denominator != 1:
        raise AssertionError(f"Unitary factor on {base} is not an integer: {total}")
    if k % 2 == 0:
        # even corank: the induced pairing is only defined up to sign
        return abs(total.numerator)
    if total < 0:
        raise AssertionError(f"Unitary factor on {base} at corank {k} is negative: {total}")
    return total.numerator


def ggp_multiplicity(pi: SeriesDatum, sigma: SeriesDatum, tau_seed: int = 0) -> MultiplicityReport:
    """m(pi, sigma), evaluated as the pairing of the expansions and as a product over eigenvalue classes."""
    if pi.group.family is Family.GL:
        raise ValueError("GL pairs are not a Bessel family")
    big, small, trace = reduce_to_basic(pi, sigma, tau_seed)
    family = family_for(big.group)
    family.check_groups(big.group, small.group)
    logger.info(f"GGP multiplicity for {big.group} > {small.group}")
    lhs = _pairing_sum(family.name, series_member(big), series_member(small))
    if lhs.denominator != 1:
        raise AssertionError(f"Paired expansions give a non-integer {lhs}")
    big_rows = {row[0]: row for row in big.factors()}
    small_rows = {row[0]: row for row in small.factors()}
    factors = []
    rhs = 1
    for key in sorted(set(big_rows) | set(small_rows)):
        row = big_rows.get(key) or small_rows[key]
        base = row[2].with_n(0)
        nu_big = big_rows[key][3].nu if key in big_rows else 0
        nu_small = small_rows[key][3].nu if key in small_rows else 0
        lam_big = big_rows[key][3].lam if key in big_rows else Partition()
        lam_small = small_rows[key][3].lam if key in small_rows else Partition()
        if base.family is Family.GL:
            value = gl_multiplicity(unipotent_expansion(base.with_n(nu_small), lam_small),
                                    unipotent_expansion(base.with_n(nu_big), lam_big), tau_seed)
        else:
            value = _unitary_factor(base, lam_big, lam_small, nu_big, nu_small, tau_seed)
        factors.append({
            'orbit': f'({key.level},{key.exponent})', 'group': str(base.with_n(max(nu_big, nu_small))),
            'nu_big': nu_big, 'nu_small': nu_small, 'lambda_big': list(lam_big.parts),
            'lambda_small': list(lam_small.parts), 'factor': value,
        })
        rhs *= value
    lhs_value = lhs.numerator
    if lhs_value < 0 or lhs_value != rhs:
        logger.error(f"GGP multiplicity mismatch on {big.group} > {small.group}: lhs={lhs_value} rhs={rhs}")
        raise RouteDisagreement({'lhs': lhs_value, 'rhs': rhs})
    logger.info(f"GGP multiplicity = {lhs_value}")
    return MultiplicityReport(value=lhs_value, lhs=lhs_value, rhs=rhs, family=family.name,
                              factors=factors, reduction=trace)
