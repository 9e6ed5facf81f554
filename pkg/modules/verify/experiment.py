import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from modules.errors import VerificationMismatch
from modules.group_core import GroupTable, make_group
from modules.permgroup import analyze, brute_force_closure
from modules.transforms import choose_eh_config, choose_subgroups, eh_generating_set
from modules.verify.verify_types import ExperimentReport, PsquareReport, Verdict
from modules.witnesses import psquare_extra_generator
from settings import Settings

logger = logging.getLogger(__name__)

# cyclic:4 and cyclic:9 are the p^2 exceptions
TEST_MATRIX = (
    "cyclic:6",
    "cyclic:8",
    "cyclic:10",
    "cyclic:12",
    "dihedral:3",
    "dihedral:4",
    "quaternion",
    "cyclic:2xcyclic:2",
    "cyclic:3xcyclic:3",
    "cyclic:2xcyclic:4",
    "cyclic:4",
    "cyclic:9",
)


def predicted_verdict(g: GroupTable, include_cross: bool, settings: Optional[Settings] = None) -> Verdict:
    """Symmetric exactly when cross transforms over a second subgroup K are in play."""
    settings = settings or Settings()
    _, k = choose_subgroups(g, settings.degree_limit, settings.subgroup_generator_bound)
    return Verdict.SYMMETRIC if include_cross and k is not None else Verdict.PROPER_IMPRIMITIVE


def _closure_check(gens, n: int, order: int, settings: Settings) -> bool:
    if n > settings.closure_degree_limit:
        return False
    size = len(brute_force_closure(gens, n, settings.closure_degree_limit))
    if size != order:
        raise VerificationMismatch(
            f"Schreier-Sims and the brute-force closure disagree on degree {n}",
            expected={"order": size},
            computed={"order": order},
        )
    return True


def run_experiment(descriptor: str, include_cross: bool = True, seed: int = 0, settings: Optional[Settings] = None) -> ExperimentReport:
    settings = settings or Settings()
    start = time.perf_counter()
    g = make_group(descriptor, settings.degree_limit)
    seeds = range(seed, seed + settings.cross_seed_count)
    cfg = choose_eh_config(g, include_cross, seeds, settings.degree_limit, settings.subgroup_generator_bound)
    gens = eh_generating_set(cfg)
    facts = analyze(gens, g.n)
    checked = _closure_check(gens, g.n, facts.order, settings)
    report = ExperimentReport(
        descriptor=descriptor,
        n=g.n,
        h=cfg.h,
        k=cfg.k,
        include_cross=cfg.include_cross,
        seed=seed,
        generator_count=len(gens),
        order=facts.order,
        verdict=Verdict.of(facts),
        predicted=predicted_verdict(g, include_cross, settings),
        transitivity=facts.transitivity,
        block_systems=facts.minimal_block_systems,
        closure_checked=checked,
        elapsed=time.perf_counter() - start,
    )
    logger.info(f"{descriptor}: order {report.order} of {report.factorial}, verdict {report.verdict.value}")
    return report


def run_matrix(
    settings: Optional[Settings] = None,
    include_cross: bool = True,
    seed: int = 0,
    descriptors: Sequence[str] = TEST_MATRIX,
) -> List[ExperimentReport]:
    settings = settings or Settings()
    with ThreadPoolExecutor(max_workers=settings.batch_workers) as executor:
        futures = [executor.submit(run_experiment, d, include_cross, seed, settings) for d in descriptors]
        return [f.result() for f in futures]


def psquare_analysis(p: int, settings: Optional[Settings] = None) -> PsquareReport:
    """Eh on the cyclic group of order p^2 before and after adding alpha o gamma^-1."""
    settings = settings or Settings()
    extra = psquare_extra_generator(p, settings.degree_limit)
    g = make_group(f"cyclic:{p * p}", settings.degree_limit)
    cfg = choose_eh_config(g, False, (), settings.degree_limit, settings.subgroup_generator_bound)
    gens = eh_generating_set(cfg)
    before = analyze(gens, g.n)
    closure_size = None
    if _closure_check(gens, g.n, before.order, settings):
        closure_size = before.order
    after = analyze(gens + [extra], g.n)
    logger.info(f"p = {p}: order {before.order} before, {after.order} after the extra generator")
    return PsquareReport(p=p, before=before, after=after, extra=extra, closure_size=closure_size)
