"""
Command line entry point: torus-homfly {torus,lmv,g-table,oracle,selftest}.

Exit codes: 0 success, 1 usage or validation error, 2 mathematical finding or
failed check, 137 memory watchdog.
"""

import argparse
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import symchar
from .combinatorics import Partition, PartitionTuple
from .errors import TorusHomflyError, UsageError
from .hecke_oracle import desk_instances
from .lmv import Finding, GTableRun, LmvRun, g_table, run_lmv
from .memory_watchdog import start_memory_watchdog
from .paths import CACHE_DIR, character_cache_file
from .records import (
    BpsEntry,
    CheckRecord,
    CheckReport,
    ColoredInvariantRecord,
    DegreeReport,
    FindingRecord,
    GEntry,
    GTableRecord,
    GTableReport,
    LmvReport,
    SStarBasis,
    SStarTerm,
    laurent_terms,
    link_record,
    rational_record,
)
from .selftest import golden_checks, oracle_checks, run_checks
from .torus import ColoredInvariant, TorusLinkSpec, colored_homfly_torus, homfly_specialize, sstar_basis
from .types import OutputMode

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FINDING = 2

COMMANDS = ("torus", "lmv", "g-table", "oracle", "selftest")
KNOT_CAP_LIMIT = 6
LINK_CAP_LIMIT = 4
DEFAULT_CAPS = 2
DEFAULT_MAX_CELLS = 6
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad input; 2 is reserved for findings here.
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class RunConfig:
    command: str
    r: int = 1
    k: int = 1
    l: int = 1  # noqa: E741
    colors: Optional[str] = None
    sizes: Optional[str] = None
    caps: Optional[str] = None
    output: OutputMode = OutputMode.TEXT
    force: bool = False
    cache: Optional[Path] = None
    no_cache: bool = False
    jobs: int = 1
    verbose: bool = False
    memory_limit_mb: int = 0
    inject_fault: bool = False
    quick: bool = False
    max_cells: int = DEFAULT_MAX_CELLS

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}, expected one of {COMMANDS}")
        if not isinstance(self.output, OutputMode):
            raise TypeError("output must be an OutputMode.")
        if self.cache is not None and not isinstance(self.cache, Path):
            raise TypeError("cache must be a Path object.")
        if self.cache is not None and self.no_cache:
            raise UsageError("--cache and --no-cache are exclusive")
        if self.jobs < 1:
            raise UsageError(f"--jobs must be at least 1, got {self.jobs}")
        if self.memory_limit_mb < 0:
            raise UsageError(f"--memory-limit-mb must be nonnegative, got {self.memory_limit_mb}")
        if self.max_cells < 1:
            raise UsageError(f"--max-cells must be positive, got {self.max_cells}")
        if self.command == "torus" and not self.colors:
            raise UsageError("torus needs --colors, e.g. --colors '2|1,1'")

    def link(self) -> TorusLinkSpec:
        return TorusLinkSpec(self.r, self.k, self.l)

    def color_tuple(self) -> PartitionTuple:
        assert self.colors is not None
        return PartitionTuple.from_string(self.colors)

    def cap_vector(self) -> Tuple[int, ...]:
        """--caps N applies N to every component; "n1,n2,..." gives one cap each."""
        text = self.sizes if self.command == "g-table" and self.sizes else self.caps
        if text is None:
            caps = (DEFAULT_CAPS,) * self.l
        else:
            try:
                values = tuple(int(piece) for piece in text.split(","))
            except ValueError as e:
                raise UsageError(f"caps must be integers, got {text!r}") from e
            caps = values * self.l if len(values) == 1 else values
        if len(caps) != self.l:
            raise UsageError(f"{len(caps)} caps for {self.l} components")
        if any(c < 0 for c in caps) or not any(caps):
            raise UsageError(f"caps must be nonnegative and not all zero, got {caps}")
        limit = KNOT_CAP_LIMIT if self.l == 1 else LINK_CAP_LIMIT
        if sum(caps) > limit and not self.force:
            raise UsageError(f"total degree {sum(caps)} exceeds {limit}; pass --force to run it anyway")
        return caps

    @staticmethod
    def parse_args(argv: Optional[Sequence[str]] = None) -> "RunConfig":
        parser = _Parser(prog="torus-homfly", description="Colored HOMFLY polynomials of torus links and their integrality checks.")
        common = _Parser(add_help=False)
        common.add_argument("--json", action="store_true", help="Emit JSON instead of text.")
        common.add_argument("--cache", type=Path, default=None, help=f"Directory for the persistent character cache (default {CACHE_DIR}).")
        common.add_argument("--no-cache", action="store_true", help="Keep character tables in memory only.")
        common.add_argument("--jobs", type=int, default=1, help="Worker threads for independent work units.")
        common.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
        common.add_argument("--memory-limit-mb", type=int, default=0, help="Exit with code 137 above this resident size (0 = off).")
        subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

        def link_args(sub: argparse.ArgumentParser) -> None:
            sub.add_argument("-r", type=int, default=1, help="Strands per component.")
            sub.add_argument("-k", type=int, default=1, help="Twists; coprime to r, may be negative.")
            sub.add_argument("-l", type=int, default=1, help="Number of components.")

        torus = subparsers.add_parser("torus", parents=[common], help="Colored invariant W of T(rl, kl).")
        link_args(torus)
        torus.add_argument("--colors", required=True, help='Colors, e.g. "2|1,1".')

        lmv = subparsers.add_parser("lmv", parents=[common], help="Plethystic log, f-hat and BPS integers.")
        link_args(lmv)
        lmv.add_argument("--caps", default=None, help=f"Degree cap per component (default {DEFAULT_CAPS}).")
        lmv.add_argument("--force", action="store_true", help="Allow caps above the default limits.")
        lmv.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

        gtab = subparsers.add_parser("g-table", parents=[common], help="g-coefficient tables.")
        link_args(gtab)
        gtab.add_argument("--sizes", default=None, help='Maximum size per component, e.g. "3" or "2,2".')
        gtab.add_argument("--caps", default=None, help=argparse.SUPPRESS)
        gtab.add_argument("--force", action="store_true", help="Allow sizes above the default limits.")

        oracle = subparsers.add_parser("oracle", parents=[common], help="Hecke-matrix cross-checks.")
        oracle.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS, help="Largest r * sum|colors| to sweep.")

        selftest = subparsers.add_parser("selftest", parents=[common], help="Reference values and oracle sweep.")
        selftest.add_argument("--quick", action="store_true", help="Reduced matrix.")

        args = parser.parse_args(argv)
        return RunConfig(
            command=args.command,
            r=getattr(args, "r", 1),
            k=getattr(args, "k", 1),
            l=getattr(args, "l", 1),
            colors=getattr(args, "colors", None),
            sizes=getattr(args, "sizes", None),
            caps=getattr(args, "caps", None),
            output=OutputMode.JSON if args.json else OutputMode.TEXT,
            force=getattr(args, "force", False),
            cache=args.cache,
            no_cache=args.no_cache,
            jobs=args.jobs,
            verbose=args.verbose,
            memory_limit_mb=args.memory_limit_mb,
            inject_fault=getattr(args, "inject_fault", False),
            quick=getattr(args, "quick", False),
            max_cells=getattr(args, "max_cells", DEFAULT_MAX_CELLS),
        )


def setup_logging(verbose: bool) -> None:
    level_name = os.environ.get("TORUS_HOMFLY_LOG_LEVEL")
    level = logging.DEBUG if verbose else logging.WARNING
    if level_name:
        level = logging.getLevelName(level_name.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def banner(msg: str) -> str:
    """Frame a (possibly multi-line) message in #'s, with a leading blank line."""
    lines = msg.split("\n")
    inner = max(len(line) for line in lines)
    rule = "#" * (inner + 4)
    body = [f"# {line.ljust(inner)} #" for line in lines]
    return "\n" + "\n".join([rule, *body, rule]) + "\n"


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _finding_record(finding: Finding) -> FindingRecord:
    link = finding.link
    return FindingRecord(link=link_record(link.r, link.k, link.l), degree=list(finding.degree), stage=finding.stage, message=finding.message, witness=finding.witness)


def invariant_record(invariant: ColoredInvariant) -> ColoredInvariantRecord:
    link = invariant.link
    expansion = sstar_basis(link, invariant.colors)
    basis = SStarBasis(v_exponent=str(expansion.v_exponent), terms=[SStarTerm(partition=str(lam), c=c, t_exponent=str(e)) for lam, c, e in expansion.terms])
    single = Partition((1,))
    homfly = rational_record(homfly_specialize(invariant)) if all(entry == single for entry in invariant.colors) else None
    return ColoredInvariantRecord(link=link_record(link.r, link.k, link.l), colors=str(invariant.colors), value=rational_record(invariant.value), sstar_basis=basis, homfly=homfly)


def lmv_report(run: LmvRun) -> LmvReport:
    link = run.link
    degrees = []
    for result in run.degrees:
        bps = []
        if result.bps is not None:
            for (colors, g, q), n in sorted(result.bps.entries.items(), key=lambda item: (str(item[0][0]), item[0][1], item[0][2])):
                bps.append(BpsEntry(mu=str(colors), g=g, Q=str(q), N=str(n)))
        parities = sorted(set(result.bps.parity.values())) if result.bps is not None else []
        degrees.append(
            DegreeReport(
                degree=list(result.degree),
                f={str(colors): rational_record(value) for colors, value in result.f.sorted_items()},
                fhat={str(colors): rational_record(value) for colors, value in result.fhat.sorted_items()},
                bps=bps,
                all_integer=result.bps is not None and result.bps.all_integer,
                q_parity_uniform=result.bps is not None and result.bps.q_parity_uniform,
                q_parity=parities[0] if len(parities) == 1 else ("mixed" if parities else "none"),
            )
        )
    return LmvReport(
        link=link_record(link.r, link.k, link.l), caps=list(run.caps), degrees=degrees, q_parity_global=run.global_parity(), findings=[_finding_record(f) for f in run.findings]
    )


def _u_text(value) -> str:
    return str(value).replace("t", "u")


def gtable_report(run: GTableRun) -> GTableReport:
    link = run.link
    tables = []
    for table in sorted(run.tables, key=lambda t: t.sizes):
        for colors in sorted(table.entries, key=lambda c: [p.parts for p in c], reverse=True):
            row = table.entries[colors]
            entries = [GEntry(lam=str(lam), g=laurent_terms(row[lam]), text=_u_text(row[lam])) for lam in sorted(row, key=lambda p: p.parts, reverse=True) if row[lam]]
            tables.append(GTableRecord(sizes=list(table.sizes), colors=str(colors), entries=entries, integral=table.integral, palindromic=table.palindromic))
    return GTableReport(link=link_record(link.r, link.k, link.l), tables=tables, findings=[_finding_record(f) for f in run.findings])


def _dump(model) -> str:
    return model.model_dump_json(by_alias=True, indent=2)


def cmd_torus(config: RunConfig) -> int:
    invariant = colored_homfly_torus(config.link(), config.color_tuple())
    if config.output == OutputMode.JSON:
        _emit(_dump(invariant_record(invariant)))
        return EXIT_OK
    expansion = sstar_basis(invariant.link, invariant.colors)
    lines = [f"{invariant.link.name()} colors={invariant.colors}", f"v^({expansion.v_exponent}) * ("]
    for lam, c, e in expansion.terms:
        lines.append(f"  {c:+d} t^({e}) s*[{lam.label()}]")
    lines.append(")")
    lines.append(f"W = {invariant.value}")
    if all(entry == Partition((1,)) for entry in invariant.colors):
        lines.append(f"P = {homfly_specialize(invariant)}")
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_lmv(config: RunConfig) -> int:
    started = time.time()
    run = run_lmv(config.link(), config.cap_vector(), jobs=config.jobs, inject_fault=config.inject_fault)
    logger.info(f"lmv {run.link.name()} caps={run.caps} done in {time.time() - started:.2f}s")
    if config.output == OutputMode.JSON:
        _emit(_dump(lmv_report(run)))
    else:
        lines = [f"{run.link.name()} caps={run.caps} Q-parity={run.global_parity()}"]
        for result in run.degrees:
            if result.bps is None:
                lines.append(f"degree {result.degree}: no BPS table")
                continue
            lines.append(f"degree {result.degree}: all_integer={result.bps.all_integer} q_parity_uniform={result.bps.q_parity_uniform}")
            for (colors, g, q), n in sorted(result.bps.entries.items(), key=lambda item: (str(item[0][0]), item[0][1], item[0][2])):
                lines.append(f"  N[{colors}; g={g}, Q={q}] = {n}")
        for finding in run.findings:
            lines.append(f"FINDING {finding.stage} at degree {finding.degree}: {finding.message}")
        _emit("\n".join(lines))
    return EXIT_OK if run.passed() else EXIT_FINDING


def cmd_gtable(config: RunConfig) -> int:
    run = g_table(config.link(), config.cap_vector(), jobs=config.jobs)
    ok = not run.findings and all(table.integral and table.palindromic for table in run.tables)
    if config.output == OutputMode.JSON:
        _emit(_dump(gtable_report(run)))
    else:
        lines = [f"{run.link.name()} g-coefficients (u = t^-k)"]
        for table in sorted(run.tables, key=lambda t: t.sizes):
            for colors, lam, value in table.nonzero():
                if value:
                    lines.append(f"  g^[{lam.label()}]_[{colors}] = {_u_text(value)}")
            if not (table.integral and table.palindromic):
                lines.append(f"FINDING sizes={table.sizes}: integral={table.integral} palindromic={table.palindromic}")
        for finding in run.findings:
            lines.append(f"FINDING {finding.stage} at sizes {finding.degree}: {finding.message}")
        _emit("\n".join(lines))
    return EXIT_OK if ok else EXIT_FINDING


def _report_checks(kind: str, records: List[CheckRecord], config: RunConfig) -> int:
    passed = all(record.passed for record in records)
    if config.output == OutputMode.JSON:
        _emit(_dump(CheckReport(kind=kind, checks=records, passed=passed)))
    else:
        failures = [record for record in records if not record.passed]
        lines = [f"{'PASS' if record.passed else 'FAIL'} {record.name}" + (f"  [{record.detail}]" if record.detail else "") for record in records]
        lines.append(banner(f"{kind}: {len(records) - len(failures)}/{len(records)} passed"))
        _emit("\n".join(lines))
    return EXIT_OK if passed else EXIT_FINDING


def cmd_oracle(config: RunConfig) -> int:
    logger.info(f"oracle sweep over {len(desk_instances(config.max_cells))} torus instances")
    return _report_checks("oracle", run_checks(oracle_checks(config.max_cells), jobs=config.jobs), config)


def cmd_selftest(config: RunConfig) -> int:
    checks = golden_checks(quick=config.quick) + oracle_checks(3 if config.quick else DEFAULT_MAX_CELLS)
    return _report_checks("selftest", run_checks(checks, jobs=config.jobs), config)


HANDLERS = {"torus": cmd_torus, "lmv": cmd_lmv, "g-table": cmd_gtable, "oracle": cmd_oracle, "selftest": cmd_selftest}


def configure_cache(config: RunConfig) -> None:
    symchar.STORE.configure(None if config.no_cache else character_cache_file(config.cache))


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = RunConfig.parse_args(argv)
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except (UsageError, TypeError, ValueError) as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    setup_logging(config.verbose)
    configure_cache(config)
    start_memory_watchdog(config.memory_limit_mb)
    try:
        return HANDLERS[config.command](config)
    except (UsageError, TypeError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    except (TorusHomflyError, ArithmeticError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FINDING
    except KeyboardInterrupt:
        sys.stderr.write("Exiting...\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
