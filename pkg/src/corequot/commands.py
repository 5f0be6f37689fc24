"""Library-level command dispatch shared by the CLI and batch runs.

Each handler takes the positional arguments, the options and the active
Settings and returns (passed, payload). Handlers raise CoreQuotError for bad
input; run_command turns that into an error report.
"""

import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from .characters import centralizer_order, character_degree, count_partitions, mn_character
from .config import Settings
from .database import RunStore
from .exceptions import CoreQuotError, ValidationError
from .littlewood_richardson import lr_coefficient, lr_expand_product
from .partitions import (
    Partition,
    beta_set,
    core_label,
    enumerate_partitions,
    removable_dominoes,
    two_quotient_triplet,
    two_sign,
)
from .reporter import RunReport, RunStatus
from .runner import run_ordered
from .symfunc import GradedPolynomial, parse_polynomial, reduced_schur, schur
from .theorems import (
    Weight,
    basis_for_weight,
    gauss_series_check,
    multiplicity_report,
    verify_maximal_vectors,
    verify_proposition1,
    verify_sign_consistency,
    verify_theorem2,
    verify_theorem3,
    weight_of,
    weight_space,
)
from .utils import format_partition, format_rational, parse_partition
from .vertex import (
    Operator,
    as_odd_polynomial,
    commutator_table,
    heisenberg_relations,
    vertex_relations,
)

logger = logging.getLogger("corequot")

Payload = Dict[str, Any]
Handler = Callable[[Tuple[str, ...], Dict[str, Any], Settings], Tuple[bool, Payload]]

BATCH_CHECKS = ("theorem3", "proposition1", "sign")


@dataclass
class CommandRequest:
    """One subcommand with its partition arguments, numeric flags and output format."""

    name: str
    arguments: Tuple[str, ...] = ()
    options: Dict[str, Any] = field(default_factory=dict)
    output_format: str = "pretty"

    def parameters(self) -> Dict[str, Any]:
        params: Dict[str, Any] = {k: v for k, v in self.options.items() if v is not None}
        if self.arguments:
            params["arguments"] = list(self.arguments)
        return params


def _expect(args: Tuple[str, ...], count: int, usage: str) -> Tuple[str, ...]:
    if len(args) != count:
        raise ValidationError(f"expected {count} argument(s): {usage}")
    return args


def _int_argument(text: str, name: str) -> int:
    try:
        value = int(text)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be an integer, got {text!r}") from None
    if value < 0:
        raise ValidationError(f"{name} must be non-negative, got {value}")
    return value


def _option(options: Dict[str, Any], name: str, default: int) -> int:
    value = options.get(name)
    if value is None:
        return default
    return _int_argument(value, name)


def _weight_record(w: Weight) -> Dict[str, Any]:
    return {"weight": str(w), "r": w.r, "n": w.n, "degree": w.degree}


# ---------------------------------------------------------------------------
# Combinatorics
# ---------------------------------------------------------------------------


def _quotient(args, options, settings):
    (text,) = _expect(args, 1, "quotient <Y>")
    p = parse_partition(text)
    padding = options.get("padding")
    padding = None if padding is None else _int_argument(padding, "padding")
    beads = beta_set(p, padding)
    t = two_quotient_triplet(p, padding)
    return True, {
        "partition": str(p),
        "padding": beads.padded_length,
        "beta_set": list(beads.entries),
        "core": str(t.core),
        "core_index": t.core_index,
        "quotient0": str(t.quotient0),
        "quotient1": str(t.quotient1),
    }


def _core(args, options, settings):
    (text,) = _expect(args, 1, "core <Y>")
    p = parse_partition(text)
    t = two_quotient_triplet(p)
    return True, {
        "partition": str(p),
        "core": str(t.core),
        "core_index": t.core_index,
        "core_label": core_label(t.core_index),
        "dominoes_removed": (p.size - t.core.size) // 2,
        "is_core": p == t.core,
    }


def _sign(args, options, settings):
    (text,) = _expect(args, 1, "sign <Y>")
    p = parse_partition(text)
    return True, {
        "partition": str(p),
        "sign": str(two_sign(p)),
        "triplet": str(two_quotient_triplet(p)),
        "removable_dominoes": [
            {"row": d.row, "orientation": "column" if d.vertical else "row", "result": str(d.result)}
            for d in removable_dominoes(p)
        ],
    }


def _schur(args, options, settings):
    (text,) = _expect(args, 1, "schur <Y> [--reduced]")
    p = parse_partition(text)
    reduced = bool(options.get("reduced"))
    f = reduced_schur(p) if reduced else schur(p)
    return True, {
        "partition": str(p),
        "reduced": reduced,
        "polynomial": f.pretty(),
        "terms": f.to_json(),
    }


def _character(args, options, settings):
    shape_text, cycles_text = _expect(args, 2, "character <lambda> <nu>")
    shape, cycles = parse_partition(shape_text), parse_partition(cycles_text)
    return True, {
        "shape": str(shape),
        "cycles": str(cycles),
        "value": mn_character(shape, cycles),
        "degree": character_degree(shape),
        "centralizer": centralizer_order(cycles),
    }


def _lr(args, options, settings):
    outer, inner, content = (parse_partition(a) for a in _expect(args, 3, "lr <outer> <inner> <content>"))
    return True, {
        "outer": str(outer),
        "inner": str(inner),
        "content": str(content),
        "coefficient": lr_coefficient(outer, inner, content),
    }


def _lr_expand(args, options, settings):
    mu, nu = (parse_partition(a) for a in _expect(args, 2, "lr-expand <mu> <nu>"))
    product = lr_expand_product(mu, nu)
    return True, {
        "mu": str(mu),
        "nu": str(nu),
        "product": [{"shape": str(shape), "coefficient": c} for shape, c in product.items()],
    }


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------


def _weight(args, options, settings):
    (text,) = _expect(args, 1, "weight <Y>")
    p = parse_partition(text)
    payload = {"partition": str(p)}
    payload.update(_weight_record(weight_of(p)))
    return True, payload


def _weight_from_args(args, usage) -> Weight:
    r_text, n_text = _expect(args, 2, usage)
    return Weight(_int_argument(r_text, "r"), _int_argument(n_text, "n"))


def _basis(args, options, settings):
    w = _weight_from_args(args, "basis <r> <n>")
    payload = _weight_record(w)
    payload["basis"] = [str(z) for z in basis_for_weight(w)]
    payload["dimension"] = count_partitions(w.n)
    return True, payload


def _weight_space(args, options, settings):
    w = _weight_from_args(args, "weight-space <r> <n>")
    payload = _weight_record(w)
    payload["members"] = [
        {
            "partition": format_partition(y, pretty=True),
            "triplet": str(two_quotient_triplet(y)),
            "reduced_schur": reduced_schur(y).pretty(),
        }
        for y in weight_space(w)
    ]
    payload["basis"] = [str(z) for z in basis_for_weight(w)]
    return True, payload


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------


def _summary(checks: List[Dict[str, Any]], **extra) -> Tuple[bool, Payload]:
    failed = sum(1 for c in checks if not c["passed"])
    payload: Payload = dict(extra)
    payload.update({"total": len(checks), "passed": len(checks) - failed, "failed": failed, "checks": checks})
    return failed == 0, payload


def _partitions_up_to(max_size: int) -> List[Partition]:
    return [y for size in range(max_size + 1) for y in enumerate_partitions(size)]


def _theorem3_record(y: Partition) -> Dict[str, Any]:
    report = verify_theorem3(y)
    record = {"subject": str(y), "weight": str(weight_of(y)), "basis_size": len(report.basis), "passed": report.match}
    if not report.match:
        record["formula"] = [format_rational(c) for c in report.formula or []]
        record["solved"] = [format_rational(c) for c in report.solved or []]
    return record


def _verify_theorem2(args, options, settings):
    _expect(args, 0, "verify theorem2 [--r R] [--n N]")
    # a missing --r or --n sweeps up to the configured bound
    rs = [_option(options, "r", 0)] if options.get("r") is not None else range(settings.verify.max_r + 1)
    ns = [_option(options, "n", 0)] if options.get("n") is not None else range(settings.verify.max_n + 1)
    weights = [Weight(r, n) for r in rs for n in ns]

    def check(w: Weight) -> Dict[str, Any]:
        report = verify_theorem2(w)
        record = _weight_record(w)
        record.update({"rank": report.rank, "expected": report.expected, "passed": report.passed})
        return record

    return _summary(run_ordered(check, weights, settings.threads, label="theorem2"))


def _verify_theorem3(args, options, settings):
    if len(args) > 1:
        raise ValidationError("expected at most one partition: verify theorem3 [--max-size S | <Y>]")
    if args:
        if options.get("max_size") is not None:
            raise ValidationError("give either a partition or --max-size, not both")
        report = verify_theorem3(parse_partition(args[0]))
        payload = report.to_json()
        payload["status"] = report.status
        return report.match, payload
    max_size = _option(options, "max_size", settings.verify.max_size)
    subjects = _partitions_up_to(max_size)
    return _summary(run_ordered(_theorem3_record, subjects, settings.threads, label="theorem3"), max_size=max_size)


def _verify_multiplicity(args, options, settings):
    _expect(args, 0, "verify multiplicity --max-degree D")
    d_max = _option(options, "max_degree", settings.verify.max_degree)
    checks = [
        {
            "degree": row.degree,
            "contributions": " + ".join(f"p({n})" for _, n, _ in row.contributions),
            "total": row.total,
            "odd_partitions": row.odd_count,
            "passed": row.passed,
        }
        for row in multiplicity_report(d_max)
    ]
    return _summary(checks, max_degree=d_max)


def _verify_gauss(args, options, settings):
    _expect(args, 0, "verify gauss --order Q")
    report = gauss_series_check(_option(options, "order", settings.verify.order))
    return report.passed, report.to_json()


def _verify_proposition1(args, options, settings):
    _expect(args, 0, "verify proposition1 --max-size S")
    max_size = _option(options, "max_size", settings.verify.max_size)

    def check(y: Partition) -> Dict[str, Any]:
        result = verify_proposition1(y)
        return {"subject": str(y), "degree": y.size, "passed": result.passed, "reason": result.reason}

    subjects = _partitions_up_to(max_size)
    return _summary(run_ordered(check, subjects, settings.threads, label="proposition1"), max_size=max_size)


def _verify_maximal(args, options, settings):
    _expect(args, 0, "verify maximal --max-r R")
    r_max = _option(options, "max_r", settings.verify.max_r)
    checks = [
        {"subject": str(c.subject), "passed": c.passed, "reason": c.reason} for c in verify_maximal_vectors(r_max)
    ]
    return _summary(checks, max_r=r_max)


def _verify_batch(args, options, settings):
    (path,) = _expect(args, 1, "verify batch FILE --check theorem3|proposition1|sign")
    return _batch(path, options.get("check") or "theorem3", settings)


# ---------------------------------------------------------------------------
# Vertex operators
# ---------------------------------------------------------------------------


def _polynomial_or_partition(text: str) -> GradedPolynomial:
    stripped = text.strip()
    if stripped.startswith("[") or "t" in stripped:
        return as_odd_polynomial(parse_polynomial(stripped))
    return reduced_schur(parse_partition(stripped))


def _vertex_apply(args, options, settings):
    (text,) = _expect(args, 1, "vertex apply --k K <poly-or-Y>")
    if options.get("operator"):
        operator = Operator.parse(options["operator"])
    else:
        k = options.get("k")
        if k is None:
            raise ValidationError("vertex apply needs --k K or --operator")
        try:
            operator = Operator("X", int(k))
        except (TypeError, ValueError):
            raise ValidationError(f"--k must be an integer, got {k!r}") from None
    f = _polynomial_or_partition(text)
    image = operator.apply(f)
    return True, {
        "operator": str(operator),
        "input": f.pretty(),
        "output": image.pretty(),
        "degree_shift": -operator.degree_shift,
        "terms": image.to_json(),
    }


def _vertex_commutators(args, options, settings):
    _expect(args, 0, "vertex commutators --degree D")
    degree = _option(options, "degree", settings.verify.vertex_degree)
    max_a = _option(options, "max_a", 7)
    max_k = _option(options, "max_k", 4)
    max_x = _option(options, "max_x", 2)

    relations = heisenberg_relations(max_a, degree) + vertex_relations(max_a, max_k, degree)
    checks = [
        {
            "relation": c.relation,
            "passed": c.holds,
            "witness": c.witness.pretty() if c.witness is not None else None,
        }
        for c in relations
    ]
    fits = []
    for fit in commutator_table(max_x, degree):
        record = fit.to_json()
        record["combination"] = fit.combination()
        fits.append(record)
        # an inconsistent fit fails the run
        if not fit.consistent:
            checks.append({"relation": record["commutator"], "passed": False, "witness": record["witness"]})
    return _summary(checks, degree=degree, fits=fits)


# ---------------------------------------------------------------------------
# History
# ---------------------------------------------------------------------------


def _history(args, options, settings):
    _expect(args, 0, "history [--limit N] [--filter COMMAND]")
    limit = _option(options, "limit", 20)
    with RunStore(settings.database_path) as store:
        runs = store.recent_runs(limit, command=options.get("filter"))
    return True, {"database": settings.database_path, "runs": runs}


COMMANDS: Dict[str, Handler] = {
    "quotient": _quotient,
    "core": _core,
    "sign": _sign,
    "schur": _schur,
    "character": _character,
    "lr": _lr,
    "lr-expand": _lr_expand,
    "weight": _weight,
    "basis": _basis,
    "weight-space": _weight_space,
    "verify theorem2": _verify_theorem2,
    "verify theorem3": _verify_theorem3,
    "verify multiplicity": _verify_multiplicity,
    "verify gauss": _verify_gauss,
    "verify proposition1": _verify_proposition1,
    "verify maximal": _verify_maximal,
    "verify batch": _verify_batch,
    "vertex apply": _vertex_apply,
    "vertex commutators": _vertex_commutators,
    "history": _history,
}


def run_command(request: CommandRequest, settings: Optional[Settings] = None) -> RunReport:
    """Dispatch a request and wrap the outcome in a timed RunReport.

    Unknown subcommands and malformed input give an error report, never an exception.
    """
    settings = settings or Settings()
    start = time.perf_counter()
    handler = COMMANDS.get(request.name)
    report = RunReport(request.name, RunStatus.error, parameters=request.parameters())
    if handler is None:
        report.message = f"unknown subcommand: {request.name}"
    else:
        try:
            passed, payload = handler(tuple(request.arguments), dict(request.options), settings)
            report.status = RunStatus.passed if passed else RunStatus.failed
            report.payload = payload
        except CoreQuotError as e:
            report.message = str(e)
    report.timing_ms = (time.perf_counter() - start) * 1000
    if report.status is RunStatus.error:
        logger.debug(f"{request.name} failed: {report.message}")
    else:
        logger.info(f"{request.name}: {report.status.value} in {report.timing_ms:.1f} ms")
    return report


def _read_batch(path: str) -> List[Tuple[int, Partition]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ValidationError(f"cannot read batch file {path}: {e}") from e
    subjects = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            subjects.append((number, parse_partition(line)))
        except ValidationError as e:
            raise ValidationError(f"line {number}: {e}", number) from e
    return subjects


def _batch_check(check: str) -> Callable[[Tuple[int, Partition]], Dict[str, Any]]:
    def theorem3(item):
        number, y = item
        record = _theorem3_record(y)
        return {"line": number, **record}

    def proposition1(item):
        number, y = item
        result = verify_proposition1(y)
        return {"line": number, "subject": str(y), "passed": result.passed, "reason": result.reason}

    def sign(item):
        number, y = item
        result = verify_sign_consistency(y)
        return {"line": number, "subject": str(y), "sign": str(two_sign(y)), "passed": result.passed, "reason": result.reason}

    return {"theorem3": theorem3, "proposition1": proposition1, "sign": sign}[check]


def _batch(path: str, check: str, settings: Settings) -> Tuple[bool, Payload]:
    if check not in BATCH_CHECKS:
        raise ValidationError(f"unknown batch check {check!r}; choose from {', '.join(BATCH_CHECKS)}")
    subjects = _read_batch(path)
    logger.info(f"batch {path}: {len(subjects)} partition(s), check {check}")
    checks = run_ordered(_batch_check(check), subjects, settings.threads, label=f"batch {check}")
    return _summary(checks, file=str(path), check=check)


def run_batch(path: str, check: str = "theorem3", settings: Optional[Settings] = None) -> RunReport:
    """Apply one verification to every partition line of a file; results keep line order."""
    return run_command(CommandRequest("verify batch", (path,), {"check": check}), settings)
