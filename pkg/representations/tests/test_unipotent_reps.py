from fractions import Fraction
from itertools import islice, product
from unittest import TestCase
from unittest.mock import patch

from algebra.eigenvalue_orbits import Eigenvalue, FieldParam, from_residue, identity
from algebra.partitions import Partition, partitions_of, z_order
from algebra.tori import TorusDatum, decompose_by_orbit, element_from_residues, torus_factor_orders
from algebra.weyl import Family, GroupKind, f_classes
from pairings.exceptions import HypothesisViolation, RouteDisagreement
from representations.unipotent_reps import (
    SeriesDatum, SeriesOrbit, VirtualCharacter, _unitary_factor, degree, ggp_multiplicity, gl_multiplicity,
    mn_character, reduce_to_basic, series_member, unipotent_expansion,
)

F3 = FieldParam(3)
F5 = FieldParam(5)


def P(*parts):
    return Partition(parts)


def series(family, n, *orbits, field=F3):
    return SeriesDatum(GroupKind(family, n, field), tuple(SeriesOrbit(seed, nu, P(*lam)) for seed, nu, lam in orbits))


class TestMurnaghanNakayama(TestCase):
    def test_two_by_two_table(self):
        self.assertEqual(mn_character(P(2), P(1, 1)), 1)
        self.assertEqual(mn_character(P(1, 1), P(2)), -1)
        self.assertEqual(mn_character(P(1, 1), P(1, 1)), 1)

    def test_trivial_and_sign(self):
        for mu in partitions_of(5):
            self.assertEqual(mn_character(P(5), mu), 1)
            self.assertEqual(mn_character(P(1, 1, 1, 1, 1), mu), (-1) ** (5 - len(mu)))

    def test_dimensions(self):
        self.assertEqual(mn_character(P(2, 1), P(1, 1, 1)), 2)
        self.assertEqual(mn_character(P(3, 1), P(1, 1, 1, 1)), 3)
        self.assertEqual(mn_character(P(2, 2), P(1, 1, 1, 1)), 2)
        self.assertEqual(mn_character(P(2, 1), P(3)), -1)

    def test_column_orthogonality(self):
        for n in range(1, 6):
            for mu in partitions_of(n):
                self.assertEqual(sum(mn_character(lam, mu) ** 2 for lam in partitions_of(n)), z_order(mu))

    def test_size_mismatch(self):
        with self.assertRaises(ValueError):
            mn_character(P(2), P(1))


class TestUnipotentExpansion(TestCase):
    def test_gl1(self):
        vc = unipotent_expansion(GroupKind(Family.GL, 1, F3), P(1))
        self.assertEqual(list(vc.terms.values()), [Fraction(1)])

    def test_gl2_trivial(self):
        vc = unipotent_expansion(GroupKind(Family.GL, 2, F3), P(2))
        self.assertEqual(sorted(vc.terms.values()), [Fraction(1, 2), Fraction(1, 2)])
        self.assertEqual(degree(vc), 1)

    def test_steinberg_degree(self):
        for q in (3, 5):
            vc = unipotent_expansion(GroupKind(Family.GL, 2, FieldParam(q)), P(1, 1))
            self.assertEqual(degree(vc), q)

    def test_unitary_degrees(self):
        u2 = GroupKind(Family.U, 2, F3)
        self.assertEqual(degree(unipotent_expansion(u2, P(2))), 1)
        self.assertEqual(degree(unipotent_expansion(u2, P(1, 1))), 3)
        u3 = GroupKind(Family.U, 3, F3)
        self.assertEqual(degree(unipotent_expansion(u3, P(3))), 1)
        self.assertEqual(degree(unipotent_expansion(u3, P(2, 1))), 6)
        self.assertEqual(degree(unipotent_expansion(u3, P(1, 1, 1))), 27)

    def test_orthonormal(self):
        for family in (Family.GL, Family.U):
            for q in (3, 5):
                for n in range(1, 5):
                    kind = GroupKind(family, n, FieldParam(q))
                    for lam in partitions_of(n):
                        a = unipotent_expansion(kind, lam)
                        self.assertGreater(degree(a), 0)
                        for nu in partitions_of(n):
                            expected = 1 if lam == nu else 0
                            self.assertEqual(a.inner(unipotent_expansion(kind, nu)), expected, f'{kind} {lam} {nu}')

    def test_rejects_orthogonal_groups(self):
        with self.assertRaises(ValueError):
            unipotent_expansion(GroupKind(Family.SO_ODD, 1, F3), P(1))
        with self.assertRaises(ValueError):
            unipotent_expansion(GroupKind(Family.GL, 2, F3), P(1))

    def test_terms_must_share_the_group(self):
        pair = next(iter(unipotent_expansion(GroupKind(Family.GL, 1, F3), P(1)).terms))
        with self.assertRaises(ValueError):
            VirtualCharacter(GroupKind(Family.U, 1, F3), {pair: Fraction(1)})


class TestSeriesMember(TestCase):
    def test_identity_class_is_unipotent(self):
        for family, n, lam in ((Family.GL, 2, (1, 1)), (Family.U, 3, (2, 1))):
            kind = GroupKind(family, n, F3)
            vc = series_member(series(family, n, (identity(), n, lam)))
            self.assertEqual(vc.terms, unipotent_expansion(kind, P(*lam)).terms)

    def test_regular_unitary_series(self):
        vc = series_member(series(Family.U, 2, (Eigenvalue(2, 1), 1, (1,))))
        self.assertEqual(list(vc.terms.values()), [Fraction(1)])
        self.assertEqual(next(iter(vc.terms)).torus.label.mu, P(2))
        self.assertEqual(vc.inner(vc), 1)
        self.assertEqual(degree(vc), 4)

    def test_two_disjoint_classes(self):
        vc = series_member(series(Family.U, 2, (identity(), 1, (1,)), (Eigenvalue(2, 2), 1, (1,))))
        self.assertEqual(list(vc.terms.values()), [Fraction(-1)])
        self.assertEqual(vc.inner(vc), 1)
        self.assertEqual(degree(vc), 2)

    def test_orthogonal_unitary_type_class(self):
        y = from_residue(F5, 2, 6, 1)
        vc = series_member(series(Family.SO_ODD, 1, (y, 1, (1,)), field=F5))
        pair, = vc.terms
        self.assertEqual(pair.torus.label.lam, P(1))
        self.assertEqual(vc.terms[pair], -1)
        self.assertEqual(degree(vc), 4)

    def test_orthogonal_gl_type_class(self):
        two = from_residue(F5, 1, 4, 1)
        vc = series_member(series(Family.SO_EVEN_PLUS, 1, (two, 1, (1,)), field=F5))
        self.assertEqual(list(vc.terms.values()), [Fraction(1)])
        self.assertEqual(degree(vc), 1)

    def test_split_orthogonal_tori(self):
        two = from_residue(F5, 1, 4, 1)
        kind = GroupKind(Family.SO_EVEN_PLUS, 2, F5)
        for sign in (1, -1):
            for lam, dim in (((2,), 6), ((1, 1), 30)):
                vc = series_member(SeriesDatum(kind, (SeriesOrbit(two, 2, P(*lam)),), sign))
                self.assertEqual({pair.torus.label.split_sign for pair in vc.terms}, {None, sign})
                self.assertEqual(degree(vc), dim)
        with self.assertRaises(ValueError):
            SeriesDatum(kind, (SeriesOrbit(two, 2, P(2)),), 0)

    def test_size_mismatch(self):
        with self.assertRaises(ValueError):
            series_member(series(Family.U, 3, (identity(), 2, (2,))))
        with self.assertRaises(ValueError):
            series_member(series(Family.U, 2, (identity(), 2, (1,))))

    def test_even_orthogonal_parity(self):
        y = from_residue(F5, 2, 6, 1)
        with self.assertRaises(ValueError):
            series_member(series(Family.SO_EVEN_PLUS, 1, (y, 1, (1,)), field=F5))

    def test_orthogonal_rejects_minus_one(self):
        minus = from_residue(F5, 1, 4, 2)
        with self.assertRaises(HypothesisViolation) as ctx:
            series_member(series(Family.SO_ODD, 1, (minus, 2, (2,)), field=F5))
        self.assertEqual(ctx.exception.orbit, '-1')


class TestGLMultiplicity(TestCase):
    def setUp(self):
        self.gl0 = unipotent_expansion(GroupKind(Family.GL, 0, F3), P())
        self.gl1 = unipotent_expansion(GroupKind(Family.GL, 1, F3), P(1))

    def test_trivial_groups(self):
        self.assertEqual(gl_multiplicity(self.gl0, self.gl0), 1)
        self.assertEqual(gl_multiplicity(self.gl1, self.gl0), 1)

    def test_gl1_independent_of_tau(self):
        gl1 = unipotent_expansion(GroupKind(Family.GL, 1, F5), P(1))
        self.assertEqual(gl_multiplicity(gl1, gl1, tau_seed=0), 2)
        self.assertEqual(gl_multiplicity(gl1, gl1, tau_seed=1), 2)
        self.assertEqual(gl_multiplicity(self.gl1, self.gl1), 2)

    def test_gl2_over_gl1(self):
        gl2 = GroupKind(Family.GL, 2, F3)
        trivial, steinberg = unipotent_expansion(gl2, P(2)), unipotent_expansion(gl2, P(1, 1))
        self.assertEqual(gl_multiplicity(trivial, self.gl1), 1)
        self.assertEqual(gl_multiplicity(steinberg, self.gl1), 2)
        self.assertEqual(gl_multiplicity(self.gl1, steinberg), 2)

    def test_rejects_unitary(self):
        u1 = unipotent_expansion(GroupKind(Family.U, 1, F3), P(1))
        with self.assertRaises(ValueError):
            gl_multiplicity(u1, self.gl1)


class TestReduceToBasic(TestCase):
    def setUp(self):
        self.steinberg = series(Family.U, 3, (identity(), 3, (1, 1, 1)))
        self.point = series(Family.U, 0)

    def test_corank_one_is_unchanged(self):
        pi = series(Family.U, 2, (Eigenvalue(2, 1), 1, (1,)))
        sigma = series(Family.U, 1, (Eigenvalue(2, 2), 1, (1,)))
        self.assertEqual(reduce_to_basic(pi, sigma), (pi, sigma, None))

    def test_even_corank_rejected(self):
        with self.assertRaises(ValueError):
            reduce_to_basic(series(Family.U, 2, (identity(), 2, (2,))), self.point)

    def test_shared_gl_type_class(self):
        x, c = Eigenvalue(2, 1), Eigenvalue(2, 2)
        report = ggp_multiplicity(series(Family.U, 3, (x, 1, (1,)), (c, 1, (1,))), series(Family.U, 2, (x, 1, (1,))))
        self.assertEqual((report.lhs, report.rhs), (2, 2))
        self.assertEqual([row['factor'] for row in report.factors], [2, 1])
        self.assertEqual(report.factors[0]['group'], 'GL_1(F_9)')

    def test_corank_three(self):
        big, small, trace = reduce_to_basic(self.steinberg, self.point)
        self.assertIs(small, self.steinberg)
        self.assertEqual(big.group, GroupKind(Family.U, 4, F3))
        self.assertEqual(trace['corank'], 3)
        self.assertEqual(trace['fresh_size'], 4)
        (key, size, base, orbit), = big.factors()
        self.assertEqual(size, 4)
        self.assertIs(base.family, Family.GL)
        lifted = series_member(big)
        self.assertEqual(lifted.inner(lifted), 1)
        self.assertGreater(degree(lifted), 0)

    def test_orthogonal_needs_even_group_for_pi(self):
        two = from_residue(F5, 1, 4, 1)
        pi = series(Family.SO_ODD, 2, (two, 2, (2,)), field=F5)
        sigma = series(Family.SO_EVEN_PLUS, 1, (two, 1, (1,)), field=F5)
        with self.assertRaises(ValueError):
            reduce_to_basic(pi, sigma)


class TestGGPMultiplicity(TestCase):
    def test_u1_over_u0(self):
        for seed in (identity(), Eigenvalue(2, 2)):
            report = ggp_multiplicity(series(Family.U, 1, (seed, 1, (1,))), series(Family.U, 0))
            self.assertEqual((report.value, report.lhs, report.rhs), (1, 1, 1))

    def test_regular_disjoint_unitary(self):
        pi = series(Family.U, 2, (Eigenvalue(2, 1), 1, (1,)))
        sigma = series(Family.U, 1, (Eigenvalue(2, 2), 1, (1,)))
        for seed in (0, 1):
            report = ggp_multiplicity(pi, sigma, tau_seed=seed)
            self.assertEqual(report.value, 1)
            self.assertEqual([row['factor'] for row in report.factors], [1, 1])
            self.assertIsNone(report.reduction)

    def test_corank_three(self):
        report = ggp_multiplicity(series(Family.U, 3, (identity(), 3, (1, 1, 1))), series(Family.U, 0))
        self.assertEqual(report.value, 1)
        self.assertEqual(report.reduction['corank'], 3)
        trivial = ggp_multiplicity(series(Family.U, 3, (identity(), 3, (3,))), series(Family.U, 0))
        self.assertEqual(trivial.value, 0)

    def test_orthogonal_pairs(self):
        y, z = from_residue(F5, 2, 6, 1), from_residue(F5, 2, 6, 2)
        two = from_residue(F5, 1, 4, 1)
        cases = [
            (series(Family.SO_ODD, 1, (y, 1, (1,)), field=F5), series(Family.SO_EVEN_MINUS, 1, (z, 1, (1,)), field=F5), 1),
            (series(Family.SO_ODD, 1, (y, 1, (1,)), field=F5), series(Family.SO_EVEN_MINUS, 1, (y, 1, (1,)), field=F5), 0),
            (series(Family.SO_ODD, 1, (two, 1, (1,)), field=F5), series(Family.SO_EVEN_PLUS, 1, (two, 1, (1,)), field=F5), 2),
        ]
        for pi, sigma, expected in cases:
            report = ggp_multiplicity(pi, sigma)
            self.assertEqual(report.family, 'SO')
            self.assertEqual((report.lhs, report.rhs), (expected, expected))

    def test_unitary_factor_sign(self):
        base = GroupKind(Family.U, 0, F3)
        self.assertGreaterEqual(_unitary_factor(base, P(1), P(1), 1, 1, 0), 0)
        with patch('representations.unipotent_reps._pairing_sum', return_value=Fraction(-2)):
            self.assertEqual(_unitary_factor(base, P(1), P(), 1, 0, 0), 2)
            with self.assertRaises(AssertionError):
                _unitary_factor(base, P(1), P(1), 1, 1, 0)

    def test_rejects_gl(self):
        with self.assertRaises(ValueError):
            ggp_multiplicity(series(Family.GL, 2, (identity(), 2, (2,))), series(Family.GL, 1, (identity(), 1, (1,))))

    def test_mismatch_is_reported(self):
        two = from_residue(F5, 1, 4, 1)
        pi = series(Family.SO_ODD, 1, (two, 1, (1,)), field=F5)
        sigma = series(Family.SO_EVEN_PLUS, 1, (two, 1, (1,)), field=F5)
        with patch('representations.unipotent_reps.gl_multiplicity', return_value=5):
            with self.assertLogs('representations.unipotent_reps', level='ERROR'):
                with self.assertRaises(RouteDisagreement) as ctx:
                    ggp_multiplicity(pi, sigma)
        self.assertEqual(ctx.exception.values, {'lhs': 2, 'rhs': 5})


def series_data(kind, width):
    """Distinct admissible series data met on the tori of ``kind``, first seen first."""
    found = []
    for label in f_classes(kind):
        t = TorusDatum(label)
        for residues in product(*(range(min(order, width)) for order in torus_factor_orders(t))):
            entries = decompose_by_orbit(t, element_from_residues(t, residues)).entries
            for labels in product(*(partitions_of(entry.nu) for entry in entries)):
                datum = SeriesDatum(kind, tuple(SeriesOrbit(entry.key, entry.nu, lam)
                                                for entry, lam in zip(entries, labels)), label.split_sign or 1)
                try:
                    datum.factors()
                except HypothesisViolation:
                    continue
                if datum not in found:
                    found.append(datum)
    return found


class TestMultiplicitySweep(TestCase):
    def assert_multiplicity(self, pi, sigma):
        report = ggp_multiplicity(pi, sigma)
        self.assertEqual(report.lhs, report.rhs, f'{pi} / {sigma}')
        self.assertGreaterEqual(report.value, 0)
        return report

    def test_unitary_three_over_two(self):
        pis = series_data(GroupKind(Family.U, 3, F3), 3)
        sigmas = series_data(GroupKind(Family.U, 2, F3), 3)
        pairs = list(islice(product(pis, sigmas), 60))
        self.assertGreaterEqual(len(pairs), 50)
        for pi, sigma in pairs:
            self.assert_multiplicity(pi, sigma)

    def test_orthogonal_five_over_four(self):
        pis = series_data(GroupKind(Family.SO_ODD, 2, F5), 5)
        sigmas = (series_data(GroupKind(Family.SO_EVEN_PLUS, 2, F5), 5)
                  + series_data(GroupKind(Family.SO_EVEN_MINUS, 2, F5), 5))
        self.assertIn(-1, {sigma.split_sign for sigma in sigmas})
        checked = set()
        for i, sigma in enumerate(sigmas):
            for pi in (pis[(2 * i) % len(pis)], pis[(2 * i + 1) % len(pis)]):
                self.assert_multiplicity(pi, sigma)
                checked.add((pi, sigma))
        self.assertGreaterEqual(len(checked), 20)
        self.assertEqual({sigma.group.family for _, sigma in checked}, {Family.SO_EVEN_PLUS, Family.SO_EVEN_MINUS})

    def test_split_sign_does_not_change_the_multiplicity(self):
        two = from_residue(F5, 1, 4, 1)
        y = from_residue(F5, 2, 6, 1)
        pi = series(Family.SO_ODD, 2, (two, 1, (1,)), (y, 1, (1,)), field=F5)
        values = set()
        for sign in (1, -1):
            sigma = SeriesDatum(GroupKind(Family.SO_EVEN_PLUS, 2, F5), (SeriesOrbit(two, 2, P(2)),), sign)
            values.add(self.assert_multiplicity(pi, sigma).value)
        self.assertEqual(len(values), 1)
