import unittest
from stokes import words
from stokes.errors import WordError


class TestFamilies(unittest.TestCase):

    def test_polygon_config_word_01(self):
        self.assertEqual(words.parse_word('(s2 s1^3)^3'), words.polygon_config_word([2, 2, 2]))
        self.assertEqual(words.parse_word('(s2 s1^2)^4'), words.polygon_config_word([1, 1, 1, 1]))
        self.assertEqual(words.parse_word('s2 s1^3 s2 s1^4 s2 s1^4'), words.polygon_config_word([2, 3, 3]))

    def test_polygon_config_word_02(self):
        with self.assertRaises(WordError):
            words.polygon_config_word([1, 1])
        with self.assertRaises(WordError):
            words.polygon_config_word([1, 0, 1])

    def test_ngon_rotation_word_01(self):
        self.assertEqual(words.CyclicWord([1, 2] * 8), words.ngon_rotation_word(3, 8))
        self.assertEqual(words.CyclicWord([1] * 5), words.ngon_rotation_word(2, 5))
        self.assertEqual(words.parse_word('(s1 s3 s2 s4)^8'), words.ngon_rotation_word(5, 8))
        for n in range(2, 7):
            for m in range(1, 6):
                self.assertEqual(m * (n - 1), len(words.ngon_rotation_word(n, m)))


if __name__ == '__main__':
    unittest.main()
