import argparse
from pathlib import Path
from typing import List

from modules.base_module import EnhancedBaseModule
from modules.group_core.group_factory import make_group
from modules.group_core.group_table import format_group, read_group_file, write_group_file
from modules.group_core.group_types import GroupTable
from modules.group_core.subgroups import enumerate_proper_subgroups, is_abelian, is_cyclic, is_hamiltonian


class GroupModule(EnhancedBaseModule):
    @property
    def name(self) -> str:
        return "Group"

    @property
    def commands(self) -> List[str]:
        return ["group", "g"]

    @property
    def example(self) -> str:
        return "group make --group dihedral:4"

    def add_arguments(self, parser: argparse.ArgumentParser, common: argparse.ArgumentParser):
        actions = parser.add_subparsers(dest="action", required=True)
        make = actions.add_parser("make", parents=[common], help="build a group table from a descriptor")
        make.add_argument("--group", required=True, help="e.g. cyclic:6, dihedral:3, quaternion, cyclic:2xcyclic:4")
        make.add_argument("--out", type=Path, help="write the table here instead of stdout")
        validate = actions.add_parser("validate", parents=[common], help="check a group file")
        validate.add_argument("--file", type=Path, required=True)
        info = actions.add_parser("info", parents=[common], help="list subgroups and structural flags")
        info.add_argument("--group", required=True)

    def _facts(self, g: GroupTable) -> List[str]:
        subgroups = enumerate_proper_subgroups(g, self.settings.degree_limit, self.settings.subgroup_generator_bound)
        lines = [
            f"descriptor={g.descriptor}",
            f"n={g.n}",
            f"abelian={is_abelian(g)}",
            f"cyclic={is_cyclic(g)}",
            f"hamiltonian={is_hamiltonian(g, self.settings.degree_limit)}",
            f"subgroups={len(subgroups)}",
        ]
        lines.extend(f"subgroup={h}" for h in subgroups)
        return lines

    def _run_impl(self, args: argparse.Namespace) -> int:
        if args.action == "make":
            g = make_group(args.group, self.settings.degree_limit)
            if args.out:
                write_group_file(g, args.out)
                self.logger.info(f"wrote {g.descriptor} to {args.out}")
                print(f"wrote n={g.n} to {args.out}")
            else:
                print(format_group(g), end="")
            return 0
        if args.action == "validate":
            g = read_group_file(args.file)
            print(f"valid n={g.n}")
            if g.relabeling:
                print("relabeling=" + " ".join(str(x) for x in g.relabeling))
            return 0
        self.emit(self._facts(make_group(args.group, self.settings.degree_limit)))
        return 0
