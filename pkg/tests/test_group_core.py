import itertools
import tempfile
import unittest
from pathlib import Path

import numpy as np
from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from modules.errors import (
    ChainTooShort,
    DegreeTooLarge,
    GroupFormatError,
    InvalidChain,
    MalformedTable,
    NoIdentity,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    OrderOverflow,
    UnknownSpec,
)
from modules.group_core import (
    Subgroup,
    element_order,
    enumerate_proper_subgroups,
    is_abelian,
    is_cyclic,
    is_hamiltonian,
    is_normal,
    is_subgroup,
    make_chain,
    make_group,
    minimal_generators,
    parse_group,
    read_group_file,
    right_cosets,
    subgroup_closure,
    validate_table,
    write_group_file,
)

# a loop of order 5 in which every element squares to the identity
LOOP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


class TestValidateTable(unittest.TestCase):
    def test_accepts_cyclic_two(self):
        g = validate_table([[0, 1], [1, 0]])
        self.assertEqual(g.n, 2)
        self.assertEqual(g.identity, 0)
        self.assertEqual(g.inverse(1), 1)

    def test_rejects_repeated_column(self):
        with self.assertRaises(NotLatinSquare):
            validate_table([[0, 1], [0, 1]])

    def test_rejects_missing_identity(self):
        table = [[(i - j) % 5 for j in range(5)] for i in range(5)]
        with self.assertRaises(NoIdentity):
            validate_table(table)

    def test_rejects_nonassociative_loop(self):
        with self.assertRaises(NotAssociative) as ctx:
            validate_table(LOOP_5)
        self.assertEqual(len(ctx.exception.triple), 3)

    def test_rejects_malformed_input(self):
        with self.assertRaises(MalformedTable):
            validate_table([[0, 1]])
        with self.assertRaises(MalformedTable):
            validate_table([[0, 2], [1, 0]])
        with self.assertRaises(MalformedTable):
            validate_table([[0, 0.5], [0.5, 0]])
        with self.assertRaises(MalformedTable):
            validate_table(np.array([[0.0, 1.0], [1.0, 0.0]]))
        with self.assertRaises(MalformedTable):
            validate_table([["0", "1"], ["1", "0"]])

    def test_relabels_identity_to_zero(self):
        table = [[(i + j + 1) % 3 for j in range(3)] for i in range(3)]
        g = validate_table(table)
        self.assertEqual(g.relabeling, (2, 1, 0))
        self.assertTrue(np.array_equal(g.mul[0], np.arange(3)))
        self.assertTrue(np.array_equal(g.mul[:, 0], np.arange(3)))


class TestMakeGroup(unittest.TestCase):
    def test_cyclic_table(self):
        g = make_group("cyclic:4")
        for i in range(4):
            for j in range(4):
                self.assertEqual(g.mul[i, j], (i + j) % 4)

    def test_orders(self):
        cases = {
            "cyclic:1": 1,
            "dihedral:3": 6,
            "dihedral:4": 8,
            "quaternion": 8,
            "symmetric:3": 6,
            "cyclic:2xcyclic:4": 8,
            "cyclic:3 x cyclic:3": 9,
        }
        for descriptor, order in cases.items():
            with self.subTest(descriptor=descriptor):
                self.assertEqual(make_group(descriptor).n, order)

    def test_structure_flags(self):
        self.assertTrue(is_abelian(make_group("cyclic:2xcyclic:4")))
        self.assertFalse(is_cyclic(make_group("cyclic:2xcyclic:4")))
        self.assertTrue(is_cyclic(make_group("cyclic:2xcyclic:3")))
        self.assertFalse(is_abelian(make_group("dihedral:3")))
        self.assertFalse(is_abelian(make_group("symmetric:3")))

    def test_dihedral_has_three_reflections(self):
        g = make_group("dihedral:3")
        self.assertEqual(sum(1 for x in g.elements() if element_order(g, x) == 2), 3)

    def test_quaternion(self):
        g = make_group("quaternion")
        self.assertEqual(element_order(g, 1), 4)
        self.assertEqual([x for x in g.elements() if element_order(g, x) == 2], [4])
        self.assertTrue(is_hamiltonian(g))

    def test_unknown_family_suggests(self):
        with self.assertRaises(UnknownSpec) as ctx:
            make_group("cyclc:4")
        self.assertIn("cyclic", str(ctx.exception))

    def test_bad_descriptors(self):
        for descriptor in ("cyclic:x", "cyclic:0", "symmetric:6", "quaternion:2", "cyclic:2x"):
            with self.subTest(descriptor=descriptor):
                with self.assertRaises(UnknownSpec):
                    make_group(descriptor)

    def test_order_overflow(self):
        with self.assertRaises(OrderOverflow):
            make_group("cyclic:65")
        with self.assertRaises(OrderOverflow):
            make_group("cyclic:10", degree_limit=8)


class TestSubgroups(unittest.TestCase):
    def test_closure(self):
        g = make_group("cyclic:6")
        self.assertEqual(subgroup_closure(g, [2]).elements, (0, 2, 4))
        self.assertEqual(subgroup_closure(g, []).elements, (0,))
        self.assertEqual(subgroup_closure(g, [2, 3]).order, 6)

    def test_closure_is_idempotent(self):
        g = make_group("dihedral:4")
        h = subgroup_closure(g, [1, 4])
        self.assertEqual(subgroup_closure(g, h.elements), h)
        self.assertEqual(h.order, 8)

    def test_enumerate_small_groups(self):
        self.assertEqual(enumerate_proper_subgroups(make_group("cyclic:4")), [Subgroup((0, 2))])
        self.assertEqual(
            enumerate_proper_subgroups(make_group("cyclic:6")),
            [Subgroup((0, 3)), Subgroup((0, 2, 4))],
        )
        self.assertEqual(
            enumerate_proper_subgroups(make_group("cyclic:2xcyclic:2")),
            [Subgroup((0, 1)), Subgroup((0, 2)), Subgroup((0, 3))],
        )
        self.assertEqual(enumerate_proper_subgroups(make_group("cyclic:5")), [])

    def test_enumerate_matches_subset_search(self):
        for descriptor in ("cyclic:2xcyclic:4", "dihedral:4", "quaternion", "symmetric:3"):
            g = make_group(descriptor)
            rest = range(1, g.n)
            expected = set()
            for size in range(1, g.n - 2):
                for extra in itertools.combinations(rest, size):
                    candidate = Subgroup.of({0, *extra})
                    if is_subgroup(g, candidate):
                        expected.add(candidate)
            with self.subTest(descriptor=descriptor):
                self.assertEqual(set(enumerate_proper_subgroups(g)), expected)

    def test_cyclic_subgroup_with_non_generating_minimum(self):
        g = make_group("cyclic:2xcyclic:4")
        self.assertIn(Subgroup((0, 2, 5, 7)), enumerate_proper_subgroups(g))
        self.assertEqual(len(enumerate_proper_subgroups(g)), 6)

    def test_enumerate_respects_degree_limit(self):
        with self.assertRaises(DegreeTooLarge):
            enumerate_proper_subgroups(make_group("cyclic:12"), degree_limit=8)

    def test_lagrange(self):
        for descriptor in ("cyclic:12", "dihedral:4", "quaternion", "cyclic:3xcyclic:3"):
            g = make_group(descriptor)
            for h in enumerate_proper_subgroups(g):
                with self.subTest(descriptor=descriptor, h=str(h)):
                    self.assertTrue(is_subgroup(g, h))
                    self.assertEqual(g.n % h.order, 0)

    def test_minimal_generators(self):
        g = make_group("cyclic:2xcyclic:2")
        self.assertEqual(minimal_generators(g, Subgroup((0, 1, 2, 3))), [1, 2])
        self.assertEqual(minimal_generators(g, Subgroup((0,))), [])

    def test_normality(self):
        g = make_group("dihedral:3")
        self.assertTrue(is_normal(g, Subgroup((0, 1, 2))))
        self.assertFalse(is_normal(g, Subgroup((0, 3))))
        self.assertFalse(is_hamiltonian(g))
        self.assertFalse(is_hamiltonian(make_group("cyclic:4")))
        with self.assertRaises(NotASubgroup):
            is_normal(g, Subgroup((0, 1)))

    def test_right_cosets(self):
        g = make_group("cyclic:6")
        cosets = right_cosets(g, Subgroup((0, 3)))
        self.assertEqual(cosets.reps, (0, 1, 2))
        self.assertEqual(cosets.cosets, ((0, 3), (1, 4), (2, 5)))
        self.assertEqual((cosets.lam, cosets.mu), (3, 2))
        self.assertEqual(right_cosets(g, Subgroup((0,))).reps, tuple(range(6)))
        with self.assertRaises(NotASubgroup):
            right_cosets(g, Subgroup((0, 1)))

    def test_right_cosets_within(self):
        g = make_group("cyclic:8")
        cosets = right_cosets(g, Subgroup((0, 4)), within=Subgroup((0, 2, 4, 6)))
        self.assertEqual(cosets.reps, (0, 2))

    def test_nonabelian_cosets_partition(self):
        g = make_group("dihedral:3")
        cosets = right_cosets(g, Subgroup((0, 3)))
        self.assertEqual(cosets.reps, (0, 1, 2))
        self.assertEqual(cosets.cosets, ((0, 3), (1, 5), (2, 4)))

    @hsettings(max_examples=30, deadline=None)
    @given(st.integers(min_value=2, max_value=24))
    def test_cosets_partition_cyclic_groups(self, m):
        g = make_group(f"cyclic:{m}")
        for h in enumerate_proper_subgroups(g):
            cosets = right_cosets(g, h)
            points = sorted(x for c in cosets.cosets for x in c)
            self.assertEqual(points, list(range(m)))
            self.assertEqual(cosets.lam * cosets.mu, m)


class TestChains(unittest.TestCase):
    def test_make_chain(self):
        g = make_group("cyclic:8")
        chain = make_chain(g, Subgroup((0, 4)), Subgroup((0, 2, 4, 6)))
        self.assertEqual(chain.s, 3)

    def test_chain_too_short(self):
        with self.assertRaises(ChainTooShort):
            make_chain(make_group("cyclic:5"))

    def test_chain_not_nested(self):
        g = make_group("cyclic:6")
        with self.assertRaises(InvalidChain):
            make_chain(g, Subgroup((0, 3)), Subgroup((0, 2, 4)))
        with self.assertRaises(NotASubgroup):
            make_chain(g, Subgroup((0, 1)))


class TestGroupFiles(unittest.TestCase):
    def test_roundtrip(self):
        g = make_group("dihedral:4")
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "d4.txt"
            write_group_file(g, path)
            loaded = read_group_file(path)
        self.assertTrue(np.array_equal(loaded.mul, g.mul))

    def test_format_errors(self):
        for text in ("", "n=2\n0 1\n", "n=2\n0 1\n1\n", "n=2\n0 1\n1 0\nextra\n", "n=x\n", "n=2\n0 a\n1 0\n"):
            with self.subTest(text=text):
                with self.assertRaises(GroupFormatError):
                    parse_group(text)

    def test_parse_validates(self):
        with self.assertRaises(NotLatinSquare):
            parse_group("n=2\n0 1\n0 1\n")


if __name__ == '__main__':
    unittest.main()
