"""Classification sweeps: max(d_min), optimal counts and nice counts per type.

Work is split into shards of consecutive candidate indices. Each shard returns
a `ShardResult`; `ShardResult.merge` is associative and commutative, so the
final records do not depend on shard boundaries, worker count or scheduling.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from tqdm import tqdm

from scripts import genmat, words
from scripts.config import (CLASSIFY_LENGTH_GUARD, DEFAULT_SHARD_SIZE, NICE_LENGTH_DEFAULT,
                            NICE_POLICIES, OPTIMAL_INDEX_CAP)
from scripts.duality import is_qsd, is_self_orthogonal, is_type_iv, nice_report
from scripts.errors import InvalidType, LengthTooLarge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassifyOptions:
    with_nice: bool = False
    jobs: int = 1
    allow_long_nice: bool = False
    optimal_cap: int = OPTIMAL_INDEX_CAP
    shard_size: int = DEFAULT_SHARD_SIZE
    progress: bool = False


@dataclass
class ShardResult:
    codes: int = 0
    max_dmin: int = 0
    optimal_count: int = 0
    optimal_indices: list = field(default_factory=list)
    nice_counts: dict = field(default_factory=dict)
    nice_optimal_counts: dict = field(default_factory=dict)
    self_orthogonal_count: int = 0
    qsd_count: int = 0
    type_iv_count: int = 0

    def merge(self, other, cap=OPTIMAL_INDEX_CAP):
        if self.max_dmin > other.max_dmin:
            top = self
        elif other.max_dmin > self.max_dmin:
            top = other
        else:
            top = None
        if top is None:
            optimal_count = self.optimal_count + other.optimal_count
            optimal_indices = sorted(self.optimal_indices + other.optimal_indices)[:cap]
            nice_optimal = _add_counts(self.nice_optimal_counts, other.nice_optimal_counts)
        else:
            optimal_count = top.optimal_count
            optimal_indices = list(top.optimal_indices)
            nice_optimal = _add_counts(top.nice_optimal_counts, {})
        return ShardResult(
            codes=self.codes + other.codes,
            max_dmin=max(self.max_dmin, other.max_dmin),
            optimal_count=optimal_count,
            optimal_indices=optimal_indices,
            nice_counts=_add_counts(self.nice_counts, other.nice_counts),
            nice_optimal_counts=nice_optimal,
            self_orthogonal_count=self.self_orthogonal_count + other.self_orthogonal_count,
            qsd_count=self.qsd_count + other.qsd_count,
            type_iv_count=self.type_iv_count + other.type_iv_count,
        )


def _add_counts(c1, c2):
    return {key: c1.get(key, 0) + c2.get(key, 0) for key in sorted(set(c1) | set(c2))}


@dataclass
class TypeRecord:
    n: int
    k0: int
    k1: int
    total_codes: int
    max_dmin: int
    optimal_count: int
    nice_counts: dict | None = None
    nice_optimal_counts: dict | None = None
    self_orthogonal_count: int | None = None
    qsd_count: int | None = None
    type_iv_count: int | None = None
    optimal_indices: list = field(default_factory=list)
    optimal_indices_truncated: bool = False

    @property
    def k(self):
        return Fraction(self.k0) + Fraction(self.k1, 2)

    @property
    def label(self):
        return f"{{{self.k0},{self.k1}}}"

    def to_dict(self):
        return {
            "n": self.n,
            "k0": self.k0,
            "k1": self.k1,
            "k": float(self.k),
            "total_codes": self.total_codes,
            "max_dmin": self.max_dmin,
            "optimal_count": self.optimal_count,
            "nice_counts": self.nice_counts,
            "nice_optimal_counts": self.nice_optimal_counts,
            "self_orthogonal_count": self.self_orthogonal_count,
            "qsd_count": self.qsd_count,
            "type_iv_count": self.type_iv_count,
            "optimal_indices": self.optimal_indices,
            "optimal_indices_truncated": self.optimal_indices_truncated,
        }


@dataclass
class LengthReport:
    n: int
    records: list
    total_enumerated: int
    nice_totals: dict | None = None

    def record(self, k0, k1):
        for rec in self.records:
            if (rec.k0, rec.k1) == (k0, k1):
                return rec
        raise KeyError((k0, k1))

    def to_dict(self):
        return {
            "n": self.n,
            "records": [rec.to_dict() for rec in self.records],
            "total_enumerated": self.total_enumerated,
            "nice_totals": self.nice_totals,
        }


# --- Shard worker ---
def classify_shard(n, k0, k1, start, stop, with_nice=False, cap=OPTIMAL_INDEX_CAP):
    result = ShardResult()
    if with_nice:
        result.nice_counts = {p: 0 for p in NICE_POLICIES}
        result.nice_optimal_counts = {p: 0 for p in NICE_POLICIES}
    for index in range(start, stop):
        spec = genmat.spec_from_index(n, k0, k1, index)
        generators = genmat.packed_generator_rows(spec)
        packed = genmat.span_packed(generators)
        weights = words.packed_weights(packed[1:], n)
        d = int(weights.min())
        result.codes += 1
        if d > result.max_dmin:
            result.max_dmin = d
            result.optimal_count = 0
            result.optimal_indices = []
            result.nice_optimal_counts = {p: 0 for p in result.nice_optimal_counts}
        optimal = d == result.max_dmin
        if optimal:
            result.optimal_count += 1
            if len(result.optimal_indices) < cap:
                result.optimal_indices.append(index)
        if with_nice:
            code = genmat.Code(n, packed, spec=spec, generators=generators)
            report = nice_report(code)
            for policy in NICE_POLICIES:
                if report.flag(policy):
                    result.nice_counts[policy] += 1
                    if optimal:
                        result.nice_optimal_counts[policy] += 1
            if is_self_orthogonal(code):
                result.self_orthogonal_count += 1
                if is_qsd(code):
                    result.qsd_count += 1
                    if is_type_iv(code):
                        result.type_iv_count += 1
    return result


def _run_shard(task):
    return classify_shard(*task)


def _shard_bounds(total, shard_size):
    return [(start, min(start + shard_size, total)) for start in range(0, total, shard_size)]


def _check_nice_length(n, options):
    if not options.with_nice or n <= NICE_LENGTH_DEFAULT:
        return
    if not options.allow_long_nice:
        raise LengthTooLarge(f"nice computation is limited to n <= {NICE_LENGTH_DEFAULT}, got n={n}")
    logger.warning("nice computation unlocked at n=%d; expect a long run", n)


def _classify_type(n, k0, k1, options, executor):
    if (k0, k1) == (0, 0):
        raise InvalidType("type {0,0} (the zero code) is not classified")
    total = genmat.code_count(n, k0, k1)
    _check_nice_length(n, options)
    tasks = [(n, k0, k1, start, stop, options.with_nice, options.optimal_cap)
             for start, stop in _shard_bounds(total, options.shard_size)]
    mapper = executor.map if executor is not None else map
    results = tqdm(mapper(_run_shard, tasks), total=len(tasks), leave=False,
                   desc=f"n={n} {{{k0},{k1}}}", disable=not options.progress)
    merged = reduce(lambda a, b: a.merge(b, options.optimal_cap), results, ShardResult())
    if merged.codes != total:
        raise AssertionError(f"type {{{k0},{k1}}} at n={n}: enumerated {merged.codes} of {total} codes")
    logger.debug("n=%d {%d,%d}: max_dmin=%d M=%d", n, k0, k1, merged.max_dmin, merged.optimal_count)
    return TypeRecord(
        n=n, k0=k0, k1=k1,
        total_codes=total,
        max_dmin=merged.max_dmin,
        optimal_count=merged.optimal_count,
        nice_counts=merged.nice_counts if options.with_nice else None,
        nice_optimal_counts=merged.nice_optimal_counts if options.with_nice else None,
        self_orthogonal_count=merged.self_orthogonal_count if options.with_nice else None,
        qsd_count=merged.qsd_count if options.with_nice else None,
        type_iv_count=merged.type_iv_count if options.with_nice else None,
        optimal_indices=merged.optimal_indices,
        optimal_indices_truncated=merged.optimal_count > len(merged.optimal_indices),
    )


def _executor(options):
    if options.jobs > 1:
        return ProcessPoolExecutor(max_workers=options.jobs)
    return nullcontext()


def classify_type(n, k0, k1, options=None):
    options = options or ClassifyOptions()
    genmat.check_type(n, k0, k1)
    with _executor(options) as executor:
        return _classify_type(n, k0, k1, options, executor)


def classify_length(n, options=None, types=None, max_length=CLASSIFY_LENGTH_GUARD):
    """Every valid type of length n (or just `types`), in table order."""
    options = options or ClassifyOptions()
    if not 1 <= n <= max_length:
        raise InvalidType(f"classification covers 1 <= n <= {max_length}, got n={n}")
    types = genmat.valid_types(n) if types is None else list(types)
    records = []
    with _executor(options) as executor:
        for k0, k1 in types:
            genmat.check_type(n, k0, k1)
            records.append(_classify_type(n, k0, k1, options, executor))
    nice_totals = None
    if options.with_nice:
        nice_totals = {p: sum(rec.nice_counts[p] for rec in records) for p in NICE_POLICIES}
    return LengthReport(n=n, records=records,
                        total_enumerated=sum(rec.total_codes for rec in records),
                        nice_totals=nice_totals)


def aggregate_totals(n_min, n_max, policy="both", options=None, reports=None):
    """n -> (total_enumerated, nice_total); nice_total is None where niceness was not computed."""
    reports = dict(reports or {})
    totals = {}
    for n in range(n_min, n_max + 1):
        if n not in reports:
            opts = options or ClassifyOptions(with_nice=n <= NICE_LENGTH_DEFAULT)
            reports[n] = classify_length(n, opts)
        report = reports[n]
        nice_total = report.nice_totals[policy] if report.nice_totals is not None else None
        if not report.records:
            nice_total = 0
        totals[n] = (report.total_enumerated, nice_total)
    return totals


def closed_form_total(n):
    return sum(genmat.code_count(n, k0, k1) for k0, k1 in genmat.valid_types(n))


def enumerated_total(n):
    """Count of specs the iterator actually yields, summed over the valid types."""
    return sum(sum(1 for _ in genmat.enumerate_specs(n, k0, k1)) for k0, k1 in genmat.valid_types(n))


def symmetry_counterexamples(report):
    """Types where {k0,k1} and {k1,k0} disagree on max_dmin or M; logged, never raised."""
    found = []
    for rec in report.records:
        if rec.k0 >= rec.k1:
            continue
        try:
            twin = report.record(rec.k1, rec.k0)
        except KeyError:
            continue
        if (rec.max_dmin, rec.optimal_count) != (twin.max_dmin, twin.optimal_count):
            logger.warning("n=%d: %s and %s differ (%d/%d vs %d/%d)", report.n, rec.label, twin.label,
                           rec.max_dmin, rec.optimal_count, twin.max_dmin, twin.optimal_count)
            found.append((rec.k0, rec.k1))
    return found
