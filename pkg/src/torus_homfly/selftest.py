"""
Golden-value and oracle sweeps behind the selftest and oracle subcommands.

Every check is a named callable returning bool; failures and package errors
become failed CheckRecords, never exceptions.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

from .combinatorics import Partition, PartitionTuple, degree_vectors_upto, partitions_of, tuples_of_degree
from .errors import TorusHomflyError
from .golden import G_TORUS_KNOT_2, G_TORUS_KNOT_3, G_TORUS_LINK_2, SSTAR_GOLDEN, GTableGolden, g_golden_laurent, knot_fundamental_closed_form, link_fundamental_closed_form, swap_two_colors
from .hecke_oracle import (
    block_projector,
    braid_pipeline,
    braid_relations_hold,
    cabled_trace_check,
    desk_instances,
    expected_projector_rank,
    full_twist_check,
    jm_projector,
    quadratic_relation_holds,
    seminormal_irrep,
    sum_of_squares_check,
)
from .lmv import build_z, extract_g, fhat_closed_form_T2k, fhat_from_f, fhat_vs_g_consistency, formal_log_series, plethystic_log, reformulated_table, run_lmv, tables_agree
from .records import CheckRecord
from .torus import TorusLinkSpec, colored_homfly_torus, homfly, invert_both, mirror, sstar_basis, skein_holds, skein_triple_two_strand

logger = logging.getLogger(__name__)

Check = Tuple[str, Callable[[], bool]]


def run_check(name: str, fn: Callable[[], bool]) -> CheckRecord:
    started = time.time()
    try:
        passed = bool(fn())
        detail = ""
    except (TorusHomflyError, ArithmeticError, ValueError) as e:
        passed = False
        detail = f"{type(e).__name__}: {e}"
    elapsed = time.time() - started
    if passed:
        logger.debug(f"check {name} passed in {elapsed:.2f}s")
    else:
        logger.warning(f"check {name} FAILED {detail}")
    return CheckRecord(name=name, passed=passed, detail=detail)


def run_checks(checks: Sequence[Check], jobs: int = 1) -> List[CheckRecord]:
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(lambda item: run_check(*item), checks))


# -- golden values -----------------------------------------------------------


def _sstar_checks(ks_by_r: dict) -> List[Check]:
    checks: List[Check] = []
    for golden in SSTAR_GOLDEN:
        for k in ks_by_r[golden.r]:
            colors = golden.partition_tuple()
            link = golden.link(k)

            def check(golden=golden, k=k, link=link, colors=colors) -> bool:
                return sstar_basis(link, colors).as_dict() == golden.expansion(k).as_dict() and sstar_basis(link, colors).v_exponent == golden.expansion(k).v_exponent

            checks.append((f"sstar {link.name()} colors={colors}", check))
    return checks


def _closed_form_checks(ks: Sequence[int]) -> List[Check]:
    checks: List[Check] = []
    single = PartitionTuple.of(Partition((1,)))
    pair = PartitionTuple.of(Partition((1,)), Partition((1,)))
    for k in ks:
        if k % 2:
            checks.append((f"closed form W T(2,{k})", lambda k=k: colored_homfly_torus(TorusLinkSpec(2, k), single).value == knot_fundamental_closed_form(k)))
        checks.append((f"closed form W T(2,{2 * k})", lambda k=k: colored_homfly_torus(TorusLinkSpec(1, k, 2), pair).value == link_fundamental_closed_form(k)))
    return checks


def _skein_checks(js: Sequence[int]) -> List[Check]:
    return [(f"skein sigma_1^{j}", lambda j=j: skein_holds(*skein_triple_two_strand(j))) for j in js]


def _mirror_checks() -> List[Check]:
    checks: List[Check] = []
    for r, k, l in ((2, 3, 1), (3, 2, 1), (1, 1, 2), (2, 1, 2)):  # noqa: E741
        link = TorusLinkSpec(r, k, l)
        checks.append((f"mirror {link.name()}", lambda link=link: homfly(mirror(link)) == invert_both(homfly(link))))
    return checks


def g_table_matches(link: TorusLinkSpec, golden: GTableGolden, max_sizes: Sequence[int], max_total: Optional[int] = None) -> bool:
    for degree in degree_vectors_upto(max_sizes):
        if max_total is not None and sum(degree) > max_total:
            continue
        table = extract_g(link, degree)
        if not (table.integral and table.palindromic):
            return False
        for colors in tuples_of_degree(degree):
            expected = {Partition.from_string(lam): g_golden_laurent(values) for lam, values in golden.get(str(colors), {}).items()}
            got = {lam: value for lam, value in table.entries.get(colors, {}).items() if value}
            if got != expected:
                logger.debug(f"g mismatch for {link.name()} colors={colors}: {got} != {expected}")
                return False
    return True


def _g_checks(quick: bool) -> List[Check]:
    knot_caps = 3 if quick else 4
    return [
        (f"g-table T(2,3) sizes<={knot_caps}", lambda: g_table_matches(TorusLinkSpec(2, 3), G_TORUS_KNOT_2, (knot_caps,))),
        ("g-table T(3,2) sizes<=2" if quick else "g-table T(3,2) sizes<=3", lambda: g_table_matches(TorusLinkSpec(3, 2), G_TORUS_KNOT_3, (2 if quick else 3,))),
        ("g-table T(2,2) sizes<=(2,2)", lambda: g_table_matches(TorusLinkSpec(1, 1, 2), swap_two_colors(G_TORUS_LINK_2), (2, 2)))
        if quick
        else ("g-table T(2,2) total size<=5", lambda: g_table_matches(TorusLinkSpec(1, 1, 2), swap_two_colors(G_TORUS_LINK_2), (4, 4), max_total=5)),
        ("f-hat from g T(2,3) sizes=(2,)", lambda: fhat_vs_g_consistency(TorusLinkSpec(2, 3), (2,))),
        ("formal and direct f-hat T(2,3) sizes<=(2,)", lambda: fhat_tables_agree(TorusLinkSpec(2, 3), (2,))),
        ("formal and direct f-hat T(2,2) sizes<=(1,1)", lambda: fhat_tables_agree(TorusLinkSpec(1, 1, 2), (1, 1))),
    ]


def _fhat_closed_form_checks(ks: Sequence[int]) -> List[Check]:
    checks: List[Check] = []
    for k in ks:

        def check(k=k) -> bool:
            run = run_lmv(TorusLinkSpec(2, k), (2,))
            fhat = run.degrees[-1].fhat
            return all(fhat[PartitionTuple.of(mu)] == fhat_closed_form_T2k(mu, k) for mu in (Partition((2,)), Partition((1, 1))))

        checks.append((f"f-hat closed form T(2,{k})", check))
    return checks


def _integrality_checks(quick: bool) -> List[Check]:
    cases = [(TorusLinkSpec(2, 3), (2,)), (TorusLinkSpec(1, 1, 2), (1, 1)), (TorusLinkSpec(3, 2), (1,))]
    if not quick:
        cases += [(TorusLinkSpec(2, 5), (3,)), (TorusLinkSpec(1, 2, 2), (2, 1)), (TorusLinkSpec(3, 2), (2,))]
    checks: List[Check] = [(f"integrality {link.name()} caps={caps}", lambda link=link, caps=caps: run_lmv(link, caps).passed()) for link, caps in cases]
    checks.append(("fault injection is caught", lambda: bool(run_lmv(TorusLinkSpec(2, 3), (1,), inject_fault=True).findings)))
    return checks


def golden_checks(quick: bool = False) -> List[Check]:
    ks_by_r = {1: (1, 2, -1), 2: (1, 3, -1), 3: (1, 2, 4)}
    if quick:
        ks_by_r = {1: (1, 2), 2: (1, 3), 3: (1, 2)}
    checks = _sstar_checks(ks_by_r)
    checks += _closed_form_checks((1, 3, 5, -3, 2))
    checks += _skein_checks(range(-2, 5))
    checks += _mirror_checks()
    checks += _fhat_closed_form_checks((3,) if quick else (3, 5))
    checks += _integrality_checks(quick)
    checks += _g_checks(quick)
    return checks


# -- Hecke oracle ------------------------------------------------------------


def _relation_checks(max_cells: int) -> List[Check]:
    checks: List[Check] = []
    for n in range(1, max_cells + 1):
        checks.append((f"sum of squares n={n}", lambda n=n: sum_of_squares_check(n)))
        for lam in partitions_of(n):
            irrep_name = f"S^{lam.label()}"
            checks.append((f"full twist {irrep_name}", lambda lam=lam: full_twist_check(lam)))
            if n >= 2:
                checks.append((f"quadratic relation {irrep_name}", lambda lam=lam: all(quadratic_relation_holds(seminormal_irrep(lam), i) for i in range(1, lam.size()))))
                checks.append((f"braid relations {irrep_name}", lambda lam=lam: braid_relations_hold(seminormal_irrep(lam))))
    return checks


def _projector_checks(max_cells: int) -> List[Check]:
    checks: List[Check] = []
    for n in range(2, max_cells + 1):
        for lam in partitions_of(n):
            for first in range(1, n):
                for mu in partitions_of(first):
                    for nu in partitions_of(n - first):
                        blocks = PartitionTuple.of(mu, nu)

                        def check(lam=lam, blocks=blocks) -> bool:
                            projector = jm_projector(lam.size(), blocks, lam)
                            return projector.is_idempotent() and projector.commutes_with_blocks() and projector.rank() == expected_projector_rank(lam, blocks)

                        checks.append((f"projector {blocks} in S^{lam.label()}", check))
            for mu in partitions_of(n):
                checks.append(
                    (
                        f"diagonal projector {mu.label()} in S^{lam.label()}",
                        lambda lam=lam, mu=mu: block_projector(lam, mu, 0).matrix == block_projector(lam, mu, 0, interpolate=True).matrix,
                    )
                )
    return checks


def _torus_oracle_checks(max_cells: int) -> List[Check]:
    checks: List[Check] = []
    for link, colors in desk_instances(max_cells):

        def matches_torus_formula(link=link, colors=colors) -> bool:
            return braid_pipeline(link, colors).value == colored_homfly_torus(link, colors).value

        checks.append((f"braid pipeline {link.name()} colors={colors}", matches_torus_formula))
        for lam in partitions_of(link.r * colors.size()):
            checks.append((f"cabled trace {link.name()} colors={colors} lam={lam.label()}", lambda link=link, colors=colors, lam=lam: cabled_trace_check(link.r, link.k, colors, lam)))
    return checks


def oracle_checks(max_cells: int) -> List[Check]:
    if max_cells < 1:
        raise ValueError(f"max_cells must be positive, got {max_cells}")
    return _relation_checks(max_cells) + _projector_checks(max_cells) + _torus_oracle_checks(max_cells)


def fhat_tables_agree(link: TorusLinkSpec, sizes: Sequence[int]) -> bool:
    """Direct and formal f-hat agree on every degree up to sizes."""
    direct_log = plethystic_log(build_z(link, sizes))
    formal = formal_log_series(link, sizes)
    return all(tables_agree(fhat_from_f(reformulated_table(direct_log, degree)), formal.fhat_table(degree)) for degree in degree_vectors_upto(sizes))
