from django.test import SimpleTestCase

from families import exceptions
from families.services.registry import FAMILIES, generate


class GenerateTests(SimpleTestCase):
    def test_defaults(self):
        g = generate('cycle')

        self.assertEqual(g.name, 'C6')
        self.assertEqual(g.order, 6)

    def test_explicit_parameters(self):
        self.assertEqual(generate('complete', m=5).edge_count, 10)
        self.assertEqual(generate('subdivided-complete', n=3, k=2).order, 9)
        self.assertEqual(generate('subdivided-grid', n=3).order, 13)

    def test_unset_parameters_fall_back(self):
        self.assertEqual(generate('subdivided-complete', n=None, k=0).order, 4)

    def test_unknown_family(self):
        with self.assertRaises(exceptions.UnknownFamily):
            generate('petersen')

    def test_foreign_parameter(self):
        with self.assertRaises(exceptions.InvalidParameters):
            generate('cycle', n=3)

    def test_out_of_range(self):
        with self.assertRaises(exceptions.InvalidParameters):
            generate('duality', n=3)

    def test_every_default_builds(self):
        for name in FAMILIES:
            if name != 'duality':
                self.assertGreater(generate(name).order, 0)
