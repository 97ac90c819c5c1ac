from unittest import TestCase

from algebra.eigenvalue_orbits import (
    Eigenvalue, FieldParam, Twist, describe, frobenius_orbit, identity, inverse,
    inverse_closed_class, minus_one, normalize, orbit_key,
)


class TestFieldParam(TestCase):
    def test_accepts_odd_prime_powers(self):
        for q in (3, 5, 7, 9, 25, 27):
            self.assertEqual(FieldParam(q).q, q)
        self.assertEqual(FieldParam(9).p, 3)

    def test_rejects_even_and_composite(self):
        for q in (2, 4, 6, 8, 15, 1, 0):
            with self.assertRaises(ValueError):
                FieldParam(q)


class TestNormalize(TestCase):
    def setUp(self):
        self.f3 = FieldParam(3)

    def test_minus_one_descends_to_level_one(self):
        self.assertEqual(normalize(self.f3, 2, 4), Eigenvalue(1, 1))
        self.assertEqual(minus_one(self.f3), Eigenvalue(1, 1))

    def test_identity_from_any_level(self):
        self.assertEqual(normalize(self.f3, 5, 0), identity())

    def test_generator_stays_at_level_two(self):
        self.assertEqual(normalize(self.f3, 2, 1), Eigenvalue(2, 1))

    def test_exponent_reduced(self):
        self.assertEqual(normalize(self.f3, 2, 9), Eigenvalue(2, 1))
        self.assertEqual(normalize(self.f3, 2, -1), Eigenvalue(2, 7))

    def test_rejects_level_zero(self):
        with self.assertRaises(ValueError):
            normalize(self.f3, 0, 1)


class TestFrobeniusOrbit(TestCase):
    def setUp(self):
        self.f3 = FieldParam(3)

    def test_standard_orbit(self):
        orbit = frobenius_orbit(self.f3, Twist.STANDARD, Eigenvalue(2, 1))
        self.assertEqual(orbit.members, (Eigenvalue(2, 1), Eigenvalue(2, 3)))
        self.assertEqual(orbit.size, 2)
        self.assertFalse(orbit.contains_one)

    def test_unitary_orbit(self):
        orbit = frobenius_orbit(self.f3, Twist.UNITARY, Eigenvalue(2, 1))
        self.assertEqual(orbit.members, (Eigenvalue(2, 1), Eigenvalue(2, 5)))
        self.assertFalse(orbit.self_inverse)

    def test_orbit_of_one(self):
        for twist in Twist:
            orbit = frobenius_orbit(self.f3, twist, identity())
            self.assertEqual(orbit.members, (identity(),))
            self.assertTrue(orbit.contains_one)
            self.assertTrue(orbit.self_inverse)

    def test_orbit_keys(self):
        a = frobenius_orbit(self.f3, Twist.STANDARD, Eigenvalue(2, 1))
        b = frobenius_orbit(self.f3, Twist.STANDARD, Eigenvalue(2, 3))
        c = frobenius_orbit(self.f3, Twist.STANDARD, Eigenvalue(2, 2))
        self.assertEqual(orbit_key(a), orbit_key(b))
        self.assertEqual(orbit_key(a), Eigenvalue(2, 1))
        self.assertNotEqual(orbit_key(a), orbit_key(c))
        self.assertEqual(orbit_key(frobenius_orbit(self.f3, Twist.STANDARD, identity())), Eigenvalue(1, 0))

    def test_orbit_invariants_exhaustive(self):
        for q in (3, 5):
            field = FieldParam(q)
            for level in range(1, 4):
                for e in range(field.modulus(level)):
                    a = normalize(field, level, e)
                    for twist in Twist:
                        orbit = frobenius_orbit(field, twist, a)
                        # idempotent as a set
                        for member in orbit.members:
                            self.assertEqual(frobenius_orbit(field, twist, member).members, orbit.members)
                        bound = level if twist is Twist.STANDARD else 2 * level
                        self.assertEqual(bound % orbit.size, 0)
                        inverted = tuple(sorted(inverse(field, m) for m in orbit.members))
                        self.assertEqual(frobenius_orbit(field, twist, inverse(field, a)).members, inverted)

    def test_inverse_closed_class(self):
        f5 = FieldParam(5)
        two = Eigenvalue(1, 1)
        members = inverse_closed_class(f5, two)
        self.assertEqual(len(members), 2)
        self.assertIn(inverse(f5, two), members)

    def test_describe(self):
        self.assertEqual(describe(self.f3, identity()), '1')
        self.assertEqual(describe(self.f3, Eigenvalue(1, 1)), '-1')
        self.assertEqual(describe(self.f3, Eigenvalue(2, 1)), '(2,1)')
