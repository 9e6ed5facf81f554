import logging
import tempfile
import unittest
from pathlib import Path

from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from modules.cipher import decrypt, encrypt, format_key, key_from_signatures, keygen, parse_key, read_key_file, write_key_file
from modules.errors import DegreeMismatch, KeyFormatError, OutOfRange
from modules.group_core import Subgroup, make_chain, make_group
from modules.permgroup import contains
from modules.signatures import canonical_etls, psquare_gamma
from modules.transforms import default_chain
from modules.verify import TEST_MATRIX
from modules.witnesses import build_proof_context


def setUpModule():
    # groups of order p^2 have no second subgroup for cross transforms
    logging.getLogger('modules.transforms.eh_set').setLevel(logging.ERROR)


def tearDownModule():
    logging.getLogger('modules.transforms.eh_set').setLevel(logging.NOTSET)


def psquare_key():
    gamma = psquare_gamma(2)
    g = gamma.group
    alpha = canonical_etls(g, make_chain(g, Subgroup((0, 2))))
    return key_from_signatures(g, alpha.signature, gamma)


class TestCipher(unittest.TestCase):
    def test_psquare_key(self):
        key = psquare_key()
        self.assertEqual(encrypt(key, 2), 1)
        self.assertEqual(encrypt(key, 0), 0)
        self.assertEqual(decrypt(key, 1), 2)
        self.assertIsNone(key.seed)

    def test_roundtrip_over_matrix(self):
        for seed in range(100):
            descriptor = TEST_MATRIX[seed % len(TEST_MATRIX)]
            g = make_group(descriptor)
            key = keygen(g, default_chain(g), seed)
            with self.subTest(descriptor=descriptor, seed=seed):
                self.assertEqual([decrypt(key, encrypt(key, m)) for m in range(g.n)], list(range(g.n)))
                self.assertEqual(key.enc.inverse(), key.dec)

    def test_keygen_is_deterministic(self):
        g = make_group("dihedral:4")
        chain = default_chain(g)
        self.assertEqual(keygen(g, chain, 3), keygen(g, chain, 3))
        self.assertEqual(keygen(g, chain, 3).seed, 3)

    def test_out_of_range(self):
        key = psquare_key()
        with self.assertRaises(OutOfRange):
            encrypt(key, 4)
        with self.assertRaises(OutOfRange):
            decrypt(key, -1)

    def test_degree_mismatch(self):
        g = make_group("cyclic:6")
        with self.assertRaises(DegreeMismatch):
            key_from_signatures(g, psquare_gamma(2), psquare_gamma(2))

    def test_key_lies_in_generated_group(self):
        for descriptor in TEST_MATRIX:
            g = make_group(descriptor)
            ctx = build_proof_context(g, True, seeds=(0, 1))
            chain = default_chain(g)
            for seed in range(5):
                with self.subTest(descriptor=descriptor, seed=seed):
                    self.assertTrue(contains(ctx.bsgs, keygen(g, chain, seed).enc))

    @hsettings(max_examples=30, deadline=None)
    @given(st.sampled_from(TEST_MATRIX), st.integers(0, 2**32))
    def test_encrypt_is_a_permutation(self, descriptor, seed):
        g = make_group(descriptor)
        key = keygen(g, default_chain(g), seed)
        self.assertEqual(sorted(encrypt(key, m) for m in range(g.n)), list(range(g.n)))


class TestKeyFiles(unittest.TestCase):
    def test_identity_off_zero_is_relabeled(self):
        key = psquare_key()
        swap = {0: 1, 1: 0, 2: 2, 3: 3}
        rows = [[0] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(4):
                rows[swap[i]][swap[j]] = swap[int(key.group.mul[i, j])]
        lines = ["n=4"] + [" ".join(str(v) for v in row) for row in rows]
        for sig in (key.alpha, key.beta):
            lines += [f"s={sig.s}", "radices=" + " ".join(str(r) for r in sig.radices)]
            lines += [" ".join(str(swap[x]) for x in block) for block in sig.blocks]
        loaded = parse_key("\n".join(lines) + "\nseed=none\n")
        self.assertEqual(loaded.group.relabeling, (1, 0, 2, 3))
        self.assertEqual((loaded.alpha.blocks, loaded.beta.blocks), (key.alpha.blocks, key.beta.blocks))
        self.assertEqual(loaded.enc, key.enc)

    def test_roundtrip(self):
        g = make_group("quaternion")
        key = keygen(g, default_chain(g), 11)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "key.txt"
            write_key_file(key, path)
            loaded = read_key_file(path)
        self.assertEqual(loaded.enc, key.enc)
        self.assertEqual(loaded.seed, 11)
        self.assertEqual(loaded, key)

    def test_seedless_key(self):
        text = format_key(psquare_key())
        self.assertTrue(text.endswith("seed=none\n"))
        self.assertIsNone(parse_key(text).seed)

    def test_format_errors(self):
        text = format_key(psquare_key())
        body = text[: -len("seed=none\n")]
        for bad in (body, body + "seed=x\n", text + "junk\n"):
            with self.subTest(bad=bad[-12:]):
                with self.assertRaises(KeyFormatError):
                    parse_key(bad)


if __name__ == '__main__':
    unittest.main()
