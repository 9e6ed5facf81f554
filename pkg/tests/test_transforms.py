import tempfile
import unittest
from pathlib import Path

from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from modules.errors import (
    BadBlockIndex,
    BadShape,
    ChainTooShort,
    DegenerateInput,
    DegreeMismatch,
    MissingSecondarySubgroup,
    NotAPermutation,
    NotInSubgroup,
    PermutationFormatError,
)
from modules.group_core import Subgroup, make_chain, make_group
from modules.permgroup import compose
from modules.signatures import breve_map, canonical_etls, random_etls
from modules.transforms import (
    BlockSystem,
    EhConfig,
    GeneratorFamily,
    Permutation,
    blockwise_perm,
    canonical_blocks,
    case_three_signature,
    choose_eh_config,
    choose_subgroups,
    diagonal_perm,
    eh_generating_set,
    named_eh_generators,
    parse_generator_set,
    parse_permutation,
    pgm_transform,
    read_generator_file,
    regular_perm,
    regular_tau,
    wreath_order,
    write_generator_file,
)


def etls(descriptor, *elements):
    g = make_group(descriptor)
    return canonical_etls(g, make_chain(g, Subgroup(tuple(elements))))


def perms(size):
    return st.permutations(list(range(size))).map(lambda images: Permutation(tuple(images)))


class TestPermutation(unittest.TestCase):
    def test_rejects_non_bijection(self):
        with self.assertRaises(NotAPermutation):
            Permutation((0, 0, 1))
        with self.assertRaises(NotAPermutation):
            Permutation((1, 2))

    def test_constructors(self):
        self.assertEqual(Permutation.identity(3).images, (0, 1, 2))
        self.assertEqual(Permutation.transposition(4, 1, 3).images, (0, 3, 2, 1))
        self.assertEqual(Permutation.cycle(5, 0, 2, 4).images, (2, 1, 4, 3, 0))

    def test_inspection(self):
        p = Permutation((2, 1, 4, 3, 0))
        self.assertEqual(p(0), 2)
        self.assertEqual(p.inverse().images, (4, 1, 0, 3, 2))
        self.assertEqual(p.support(), [0, 2, 4])
        self.assertEqual(p.cycles(), [(0, 2, 4)])
        self.assertEqual(str(p), "2 1 4 3 0")
        self.assertFalse(p.is_identity())
        self.assertTrue(Permutation.identity(5).is_identity())


class TestBlockSystem(unittest.TestCase):
    def test_canonical(self):
        blocks = canonical_blocks(3, 2)
        self.assertEqual(blocks.blocks, ((0, 3), (1, 4), (2, 5)))
        self.assertEqual(blocks.block_of(4), 1)
        self.assertEqual(str(blocks), "{{0,3},{1,4},{2,5}}")

    def test_from_cells_sorts(self):
        self.assertEqual(BlockSystem.from_cells([[3, 1], [2, 0]]), BlockSystem(2, 2, ((0, 2), (1, 3))))

    def test_bad_shapes(self):
        with self.assertRaises(BadShape):
            BlockSystem(1, 4, ((0, 1, 2, 3),))
        with self.assertRaises(BadShape):
            BlockSystem(2, 2, ((0, 1), (1, 2)))


class TestFamilies(unittest.TestCase):
    def test_blockwise(self):
        self.assertEqual(blockwise_perm(Permutation((1, 0, 2)), 3, 2).images, (1, 0, 2, 4, 3, 5))

    def test_diagonal(self):
        self.assertEqual(diagonal_perm(Permutation((1, 0)), 3, 2).images, (3, 4, 5, 0, 1, 2))

    def test_regular(self):
        alpha = etls("cyclic:6", 0, 3)
        self.assertEqual(regular_tau(alpha, 3).images, (1, 0))
        self.assertEqual(regular_perm(alpha, 1, 3).images, (0, 4, 2, 3, 1, 5))
        self.assertTrue(regular_perm(alpha, 2, 0).is_identity())
        with self.assertRaises(NotInSubgroup):
            regular_tau(alpha, 1)
        with self.assertRaises(BadBlockIndex):
            regular_perm(alpha, 3, 3)

    def test_shape_errors(self):
        with self.assertRaises(DegreeMismatch):
            blockwise_perm(Permutation((1, 0)), 3, 2)
        with self.assertRaises(BadShape):
            diagonal_perm(Permutation((0,)), 1, 1)

    def test_pgm_transform_degree_mismatch(self):
        a = breve_map(etls("cyclic:6", 0, 3).signature)
        b = breve_map(etls("cyclic:4", 0, 2).signature)
        with self.assertRaises(DegreeMismatch):
            pgm_transform(a, b)

    @hsettings(max_examples=50, deadline=None)
    @given(perms(4), perms(4))
    def test_blockwise_is_homomorphism(self, s, t):
        self.assertEqual(blockwise_perm(compose(s, t), 4, 3), compose(blockwise_perm(s, 4, 3), blockwise_perm(t, 4, 3)))

    @hsettings(max_examples=50, deadline=None)
    @given(perms(3), perms(3))
    def test_diagonal_is_homomorphism(self, s, t):
        self.assertEqual(diagonal_perm(compose(s, t), 4, 3), compose(diagonal_perm(s, 4, 3), diagonal_perm(t, 4, 3)))

    def test_regular_is_homomorphism(self):
        alpha = etls("quaternion", 0, 1, 4, 5)
        g = alpha.group
        for z0 in range(alpha.lam):
            for h1 in alpha.subgroup:
                for h2 in alpha.subgroup:
                    self.assertEqual(
                        regular_perm(alpha, z0, g.product(h1, h2)),
                        compose(regular_perm(alpha, z0, h1), regular_perm(alpha, z0, h2)),
                    )

    @hsettings(max_examples=30, deadline=None)
    @given(perms(3), perms(4), st.integers(0, 2), st.sampled_from([0, 3, 6, 9]))
    def test_families_preserve_blocks(self, tau, sigma, z0, h):
        alpha = etls("cyclic:12", 0, 3, 6, 9)
        blocks = canonical_blocks(3, 4)
        self.assertTrue(blocks.respected_by(blockwise_perm(tau, 3, 4)))
        self.assertTrue(blocks.respected_by(diagonal_perm(sigma, 3, 4)))
        self.assertTrue(blocks.respected_by(regular_perm(alpha, z0, h)))

    @hsettings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
    def test_transform_chain_rule(self, s1, s2, s3):
        g = make_group("dihedral:4")
        chain = make_chain(g, Subgroup((0, 2)))
        a, b, c = (breve_map(random_etls(g, chain, s).signature) for s in (s1, s2, s3))
        self.assertEqual(compose(pgm_transform(a, b), pgm_transform(b, c)), pgm_transform(a, c))
        self.assertTrue(pgm_transform(a, a).is_identity())


class TestSubgroupPolicy(unittest.TestCase):
    def test_choices(self):
        cases = {
            "cyclic:6": ((0, 3), (0, 2, 4)),
            "quaternion": ((0, 4), (0, 1, 4, 5)),
            "cyclic:2xcyclic:2": ((0, 1), (0, 2)),
            "dihedral:3": ((0, 3), (0, 1, 2)),
            "cyclic:3xcyclic:3": ((0, 1, 2), (0, 3, 6)),
        }
        for descriptor, (h, k) in cases.items():
            with self.subTest(descriptor=descriptor):
                self.assertEqual(choose_subgroups(make_group(descriptor)), (Subgroup(h), Subgroup(k)))

    def test_single_subgroup(self):
        self.assertEqual(choose_subgroups(make_group("cyclic:4")), (Subgroup((0, 2)), None))

    def test_prime_order(self):
        with self.assertRaises(ChainTooShort):
            choose_subgroups(make_group("cyclic:5"))

    def test_cross_dropped_without_second_subgroup(self):
        with self.assertLogs('modules.transforms.eh_set', level='WARNING'):
            cfg = choose_eh_config(make_group("cyclic:9"), include_cross=True)
        self.assertFalse(cfg.include_cross)
        self.assertIsNone(cfg.k)
        self.assertEqual((cfg.lam, cfg.mu), (3, 3))

    def test_config_requires_secondary(self):
        g = make_group("cyclic:6")
        with self.assertRaises(MissingSecondarySubgroup):
            EhConfig(group=g, primary_chain=make_chain(g, Subgroup((0, 3))), include_cross=True)


class TestCaseThree(unittest.TestCase):
    def test_regular_adjustment(self):
        alpha, beta = etls("cyclic:6", 0, 3), etls("cyclic:6", 0, 2, 4)
        adjusted = case_three_signature(alpha, beta, 3)
        self.assertEqual(adjusted.alpha1, (0, 2, 4))
        self.assertEqual(adjusted.alpha2, (0, 3))
        t = pgm_transform(breve_map(alpha.signature), breve_map(adjusted.signature))
        self.assertEqual(t.images, (0, 5, 2, 1, 4, 3))

    def test_diagonal_adjustment(self):
        alpha, beta = etls("dihedral:4", 0, 2), etls("dihedral:4", 0, 1, 2, 3)
        adjusted = case_three_signature(alpha, beta, 2)
        self.assertEqual(adjusted.alpha1, (0, 2, 1, 3))
        self.assertEqual(adjusted.alpha2, beta.alpha2)
        t = pgm_transform(breve_map(alpha.signature), breve_map(adjusted.signature))
        self.assertEqual(t(0), 0)
        self.assertNotEqual(t(breve_map(alpha.signature).backward[2]) % alpha.lam, 0)

    def test_elementary_abelian_unchanged(self):
        alpha, beta = etls("cyclic:3xcyclic:3", 0, 1, 2), etls("cyclic:3xcyclic:3", 0, 3, 6)
        self.assertIs(case_three_signature(alpha, beta, 1), beta)
        self.assertIs(case_three_signature(alpha, beta, 2), beta)

    def test_rejects_bad_h(self):
        alpha, beta = etls("cyclic:6", 0, 3), etls("cyclic:6", 0, 2, 4)
        with self.assertRaises(DegenerateInput):
            case_three_signature(alpha, beta, 0)
        with self.assertRaises(NotInSubgroup):
            case_three_signature(alpha, beta, 1)


class TestEhGenerators(unittest.TestCase):
    def test_structured_generators_match_families(self):
        g = make_group("dihedral:4")
        cfg = choose_eh_config(g)
        alpha = canonical_etls(g, cfg.primary_chain)
        for gen in named_eh_generators(cfg):
            with self.subTest(label=gen.label):
                if gen.family is GeneratorFamily.BLOCKWISE:
                    expected = blockwise_perm(Permutation(gen.params), cfg.lam, cfg.mu)
                elif gen.family is GeneratorFamily.DIAGONAL:
                    expected = diagonal_perm(Permutation(gen.params), cfg.lam, cfg.mu)
                else:
                    self.assertIs(gen.family, GeneratorFamily.REGULAR)
                    expected = regular_perm(alpha, *gen.params)
                self.assertEqual(gen.perm, expected)

    def test_no_identity_or_duplicates(self):
        for descriptor in ("cyclic:4", "cyclic:6", "cyclic:2xcyclic:2", "quaternion"):
            cfg = choose_eh_config(make_group(descriptor), include_cross=True, seeds=(0, 1))
            gens = eh_generating_set(cfg)
            with self.subTest(descriptor=descriptor):
                self.assertEqual(len(set(gens)), len(gens))
                self.assertFalse(any(p.is_identity() for p in gens))

    def test_cross_families(self):
        cfg = choose_eh_config(make_group("cyclic:6"), include_cross=True, seeds=(0, 1))
        families = {gen.family for gen in named_eh_generators(cfg)}
        self.assertIn(GeneratorFamily.CROSS, families)
        labels = [gen.label for gen in named_eh_generators(cfg)]
        self.assertIn("cross(3)", labels)
        self.assertIn("blockwise(1,0,2)", labels)

    def test_structured_set_keeps_blocks(self):
        cfg = choose_eh_config(make_group("cyclic:12"))
        blocks = canonical_blocks(cfg.lam, cfg.mu)
        self.assertTrue(all(blocks.respected_by(p) for p in eh_generating_set(cfg)))

    def test_wreath_order(self):
        self.assertEqual(wreath_order(2, 2), 8)
        self.assertEqual(wreath_order(3, 2), 48)
        self.assertEqual(wreath_order(3, 3), 1296)


class TestPermutationFiles(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(parse_permutation("2 0 1").images, (2, 0, 1))
        for line in ("", "0 0", "0 x"):
            with self.subTest(line=line):
                with self.assertRaises(PermutationFormatError):
                    parse_permutation(line)

    def test_generator_set_with_comments(self):
        text = "# blockwise\n1 0 2 3\n\n2 3 0 1  # swap halves\n"
        gens = parse_generator_set(text)
        self.assertEqual([p.images for p in gens], [(1, 0, 2, 3), (2, 3, 0, 1)])
        with self.assertRaises(DegreeMismatch):
            parse_generator_set("1 0\n0 2 1\n")
        with self.assertRaises(PermutationFormatError):
            parse_generator_set("1 0\n1 1\n")

    def test_roundtrip(self):
        cfg = choose_eh_config(make_group("cyclic:6"), include_cross=True)
        named = named_eh_generators(cfg)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "gens.txt"
            write_generator_file([n.perm for n in named], path, [n.label for n in named])
            self.assertEqual(read_generator_file(path), [n.perm for n in named])


if __name__ == '__main__':
    unittest.main()
