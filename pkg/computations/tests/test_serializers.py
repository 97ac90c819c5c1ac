from rest_framework.test import APITestCase

from computations.serializers import DualPairSerializer, JobSpecSerializer, SeriesSerializer

GL_JOB = {
    'command': 'pair',
    'pair_kind': 'GL',
    'big': {'group': {'family': 'GL', 'n': 2}, 'mu': [1, 1]},
    'small': {'group': {'family': 'GL', 'n': 1}, 'mu': [1]},
}


class JobSpecSerializerTests(APITestCase):
    def test_valid_pair_job_gets_default_options(self):
        serializer = JobSpecSerializer(data=GL_JOB)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        data = serializer.validated_data
        self.assertEqual(data['q'], 3)
        self.assertEqual(data['options']['base_route'], 'closed_form')
        self.assertEqual(data['options']['reading'], 'union')
        self.assertNotIn('routes', data['options'])

    def test_pair_job_needs_both_sides(self):
        job = {key: value for key, value in GL_JOB.items() if key != 'small'}
        serializer = JobSpecSerializer(data=job)
        self.assertFalse(serializer.is_valid())
        self.assertIn('small', str(serializer.errors))

    def test_multiplicity_job_needs_series(self):
        serializer = JobSpecSerializer(data={'command': 'multiplicity'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('pi', str(serializer.errors))

    def test_oracle_job_needs_nothing(self):
        self.assertTrue(JobSpecSerializer(data={'command': 'oracle'}).is_valid())

    def test_even_q_rejected(self):
        serializer = JobSpecSerializer(data={**GL_JOB, 'q': 4})
        self.assertFalse(serializer.is_valid())
        self.assertIn('q', serializer.errors)

    def test_unknown_route_rejected(self):
        serializer = JobSpecSerializer(data={**GL_JOB, 'options': {'routes': ['guess']}})
        self.assertFalse(serializer.is_valid())

    def test_unknown_command_rejected(self):
        serializer = JobSpecSerializer(data={'command': 'plot'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('command', serializer.errors)


class DualPairSerializerTests(APITestCase):
    def test_element_length_must_match_blocks(self):
        serializer = DualPairSerializer(data={
            'group': {'family': 'GL', 'n': 2}, 'mu': [1, 1], 'element': [{'level': 1, 'exponent': 0}],
        })
        self.assertFalse(serializer.is_valid())
        self.assertIn('2 blocks', str(serializer.errors))

    def test_parts_must_be_positive(self):
        serializer = DualPairSerializer(data={'group': {'family': 'GL', 'n': 1}, 'mu': [0]})
        self.assertFalse(serializer.is_valid())


class SeriesSerializerTests(APITestCase):
    def test_lambda_key(self):
        serializer = SeriesSerializer(data={
            'group': {'family': 'U', 'n': 2},
            'orbits': [{'seed': {'level': 2, 'exponent': 1}, 'nu': 1, 'lambda': [1]}],
        })
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['orbits'][0]['lambda'], [1])
