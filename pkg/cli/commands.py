"""Command handler functions for CLI operations."""

from analysis.scans import analyze_code, corollary_scan, scan_corpus
from cli.constants import EXIT_OK, EXIT_PROPERTY_FALSE
from cli.models import AnalyzeCommand, CheckCommand, CommandRequest, CommandResult, FactorizeCommand, RunConfig, ScanCommand
from cli.schemas import (
    AnalyzeResponse,
    CheckResponse,
    CodeSchema,
    CorpusHeader,
    FactorizeResponse,
    RunConfigSchema,
    ScanResponse,
)
from codes.corpus import generate_corpus
from codes.factorizing import search_positive_factorization
from codes.io import read_code
from codes.predicates import code_class, is_code, measure
from common.exceptions import PreconditionError, TheoremViolationError
from common.logging_config import get_logger
from common.types import sorted_set
from cyclic.factorization import check_bound, enumerate_factorizations
from cyclic.hajos import hajos_enumerate
from cyclic.krasner import enumerate_krasner

logger = get_logger(__name__)


def _run(run: RunConfig) -> RunConfigSchema:
    return RunConfigSchema(**run.to_json())


def handle_factorize(cmd: FactorizeCommand, run: RunConfig) -> CommandResult:
    """
    Handle 'factorize' command.

    Args:
        cmd: FactorizeCommand with n and kind
        run: Effective run configuration

    Returns:
        Listing of the requested factorizations in canonical order

    Raises:
        EnumerationBoundError: If n exceeds the n-bound
    """
    logger.info(f"Executing factorize command: n={cmd.n} kind={cmd.kind}")
    check_bound(cmd.n, run.n_bound)
    if cmd.kind == "krasner":
        pairs = enumerate_krasner(cmd.n)
    elif cmd.kind == "hajos":
        pairs = hajos_enumerate(cmd.n, run.n_bound)
    else:
        pairs = enumerate_factorizations(cmd.n, run.n_bound)
    response = FactorizeResponse(
        run=_run(run),
        n=cmd.n,
        kind=cmd.kind,
        count=len(pairs),
        pairs=[pair.to_json() for pair in pairs],
    )
    return CommandResult(response)


def handle_check(cmd: CheckCommand, run: RunConfig) -> CommandResult:
    """
    Handle 'check' command.

    The code check runs first: a word set that is not a code fails the
    maximality and factorization checks without attempting them.

    Args:
        cmd: CheckCommand with the code file and the requested checks
        run: Effective run configuration

    Returns:
        Report with exit code 0 iff every requested check passes

    Raises:
        CodeParseError: If the code file cannot be read
        SearchBudgetExceededError: If the factorization search exceeds the budget
    """
    logger.info(f"Executing check command: {cmd.path} checks={list(cmd.checks)}")
    code = read_code(cmd.path)
    fields: dict = {}
    failures = []

    verdict = is_code(code)
    if "code" in cmd.checks:
        fields["is_code"] = verdict.to_json()
        if not verdict:
            failures.append("code")
    if "class" in cmd.checks:
        fields["code_class"] = code_class(code).to_json()
    if "maximal" in cmd.checks:
        value = measure(code)
        fields["measure"] = str(value)
        fields["maximal"] = bool(verdict) and value == 1
        if not fields["maximal"]:
            failures.append("maximal")
    if "factorization" in cmd.checks:
        if verdict and measure(code) == 1:
            found = search_positive_factorization(code, run.budget)
            if found is not None:
                fields["factorization"] = found.to_json()
        if "factorization" not in fields:
            failures.append("factorization")

    response = CheckResponse(
        run=_run(run),
        code=CodeSchema(**code.to_json()),
        checks=list(cmd.checks),
        passed=not failures,
        failures=failures,
        **fields,
    )
    return CommandResult(response, EXIT_PROPERTY_FALSE if failures else EXIT_OK)


def handle_analyze(cmd: AnalyzeCommand, run: RunConfig) -> CommandResult:
    """
    Handle 'analyze' command.

    Args:
        cmd: AnalyzeCommand with the code file, the letter and an optional corollary
        run: Effective run configuration

    Returns:
        System of factorizations, X_w tables, arrangements and triangle statuses;
        exit code 1 when some X_w fails the triangle inequalities

    Raises:
        NotMaximalError: If the code is not maximal
        TheoremViolationError: If a pair of the system is not a factorization
            or a guaranteed construction fails
    """
    logger.info(f"Executing analyze command: {cmd.path} letter={cmd.letter!r}")
    code = read_code(cmd.path)
    if cmd.letter not in code.alphabet:
        raise PreconditionError(f"letter {cmd.letter!r} is not in the alphabet {code.alphabet!r}")
    analysis = analyze_code(code, cmd.letter, run.budget)
    violations = analysis.system.violations()
    if violations:
        raise TheoremViolationError(
            f"{len(violations)} pairs of the system are not factorizations of Z_{analysis.system.n}",
            {
                "code": code.to_json(),
                "letter": cmd.letter,
                "pairs": [[sorted_set(p), sorted_set(q)] for p, q in violations],
            },
        )
    corollary = None
    if cmd.corollary:
        corollary = corollary_scan(code, cmd.corollary, cmd.letter, run.budget).to_json()

    report = analysis.to_json()
    response = AnalyzeResponse(
        run=_run(run),
        code=CodeSchema(**report["code"]),
        letter=report["letter"],
        n=report["n"],
        lefts=report["lefts"],
        rights=report["rights"],
        krasner_in_system=report["krasner_in_system"],
        separators=report["separators"],
        triangle=analysis.triangle_ok,
        corollary=corollary,
    )
    return CommandResult(response, EXIT_OK if analysis.triangle_ok else EXIT_PROPERTY_FALSE)


def handle_scan(cmd: ScanCommand, run: RunConfig) -> CommandResult:
    """
    Handle 'scan' command.

    Args:
        cmd: ScanCommand with the mode and corpus parameters
        run: Effective run configuration (its seed drives the corpus)

    Returns:
        Tallies over the corpus; codes over budget are skipped and flag the report partial
    """
    logger.info(f"Executing scan command: mode={cmd.mode} size={cmd.corpus_size} seed={run.seed}")
    entries = generate_corpus(cmd.corpus_size, run.seed, cmd.max_order, cmd.max_words)
    report = scan_corpus(entries, cmd.mode, cmd.letter, run.budget).to_json()
    header = CorpusHeader(
        seed=run.seed,
        size=cmd.corpus_size,
        max_order=cmd.max_order,
        max_words=cmd.max_words,
        generated=len(entries),
    )
    response = ScanResponse(run=_run(run), corpus=header, **report)
    return CommandResult(response)


def dispatch_command(cmd: CommandRequest, run: RunConfig) -> CommandResult:
    """Dispatch parsed command to appropriate handler."""
    if isinstance(cmd, FactorizeCommand):
        return handle_factorize(cmd, run)
    elif isinstance(cmd, CheckCommand):
        return handle_check(cmd, run)
    elif isinstance(cmd, AnalyzeCommand):
        return handle_analyze(cmd, run)
    elif isinstance(cmd, ScanCommand):
        return handle_scan(cmd, run)
    raise PreconditionError(f"Unknown command type: {type(cmd).__name__}")
