import argparse
from pathlib import Path
from typing import List

from modules.base_module import EnhancedBaseModule
from modules.cipher.key_io import format_key, read_key_file, write_key_file
from modules.cipher.pgm_cipher import decrypt, encrypt, keygen
from modules.group_core import make_group
from modules.transforms import default_chain


class CipherModule(EnhancedBaseModule):
    @property
    def name(self) -> str:
        return "Cipher"

    @property
    def commands(self) -> List[str]:
        return ["cipher", "c"]

    @property
    def example(self) -> str:
        return "cipher encrypt --key key.txt --m 2"

    def add_arguments(self, parser: argparse.ArgumentParser, common: argparse.ArgumentParser):
        actions = parser.add_subparsers(dest="action", required=True)
        gen = actions.add_parser("keygen", parents=[common], help="sample a key over the default chain of a group")
        gen.add_argument("--group", required=True)
        gen.add_argument("--out", type=Path)
        enc = actions.add_parser("encrypt", parents=[common], help="apply alpha o beta^-1 to a message block")
        enc.add_argument("--key", type=Path, required=True)
        enc.add_argument("--m", type=int, required=True)
        dec = actions.add_parser("decrypt", parents=[common], help="invert the round function")
        dec.add_argument("--key", type=Path, required=True)
        dec.add_argument("--c", type=int, required=True)

    def _run_impl(self, args: argparse.Namespace) -> int:
        if args.action == "keygen":
            g = make_group(args.group, self.settings.degree_limit)
            key = keygen(g, default_chain(g, self.settings.degree_limit), self.settings.default_seed)
            if args.out:
                write_key_file(key, args.out)
                self.logger.info(f"key for {args.group} written to {args.out}")
                print(f"wrote key n={key.n} seed={key.seed} to {args.out}")
            else:
                print(format_key(key), end="")
            return 0
        key = read_key_file(args.key)
        if args.action == "encrypt":
            print(encrypt(key, args.m))
        else:
            print(decrypt(key, args.c))
        return 0
