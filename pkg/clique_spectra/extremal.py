"""
Exhaustive sweeps for extremal graphs among 2K_r-free graphs.

A sweep walks a graph population in fixed-size chunks, keeps the graphs
passing the forbidden-copies filter, and collects every graph whose
objective value is within `equality_slack` of the best. Chunk boundaries
depend only on the population, and chunk results are reduced in chunk
order, so a report never depends on the worker count. Maximizers are
deduplicated by canonical code and re-evaluated on the canonical form.
"""

import functools
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from tqdm import tqdm

from .canonical import canonical_code
from .cliques import (clique_degrees, enumerate_cliques,
                      find_disjoint_cliques, is_2kr_free)
from .core import PKG_LOGGER
from .exceptions import (InapplicableError, InvalidArgument,
                         NonConvergenceError, VerificationFailure)
from .graph6 import graph6_decode, graph6_encode, read_graph6_lines
from .graphs import (Graph, check_enumerable, complete_graph, edge_pairs,
                     k3_join_empty, km_join_turan, kn_union_empty,
                     labeled_graph_count, pendant_graph_g0)
from .spectral import (DEFAULT_MAX_ITER, DEFAULT_SHIFT, DEFAULT_TOL,
                       mu3_k3_join_empty, mu_km_join_turan,
                       recognize_closed_form, spectral_radius)
from .util import format_number

LABELED = 'labeled-enumeration'
CATALOG = 'graph6-catalog'

MU = 'mu'
MU_SUM = 'mu-sum'
CLIQUE_COUNT = 'clique-count'

DEFAULT_SLACK = 1e-8
CHUNK_SIZE = 1 << 14
MEMO_LIMIT = 1 << 16

CSV_COLUMNS = ['n', 'r', 'objective', 'graph6', 'value', 'is_maximizer']


def _rounded(value):
    return None if value is None else float(format_number(value))


@dataclass(frozen=True)
class Objective(object):
    """What a sweep maximizes: mu_k, mu_k + ... + mu_upper, or |C_k|."""

    kind: str
    k: int
    upper: Optional[int] = None

    def __post_init__(self):
        if self.kind not in (MU, MU_SUM, CLIQUE_COUNT):
            raise InvalidArgument("unknown objective %r" % self.kind)
        if self.k < 2:
            raise InvalidArgument("objective order must be >= 2")
        if self.kind == MU_SUM and (self.upper is None or self.upper < self.k):
            raise InvalidArgument("mu-sum needs upper >= k")

    @property
    def orders(self):
        if self.kind == MU_SUM:
            return list(range(self.k, self.upper + 1))
        return [self.k]

    @property
    def label(self):
        if self.kind == MU_SUM:
            return 'mu_sum(%d,%d)' % (self.k, self.upper)
        if self.kind == MU:
            return 'mu(%d)' % self.k
        return 'clique_count(%d)' % self.k


@dataclass(frozen=True)
class SweepConfig(object):
    """Everything that determines a sweep's report."""

    n: int
    r: int
    objective: Objective
    source: str = LABELED
    catalog: Optional[str] = None
    tol: float = DEFAULT_TOL
    equality_slack: float = DEFAULT_SLACK
    forbidden_copies: int = 2
    max_iter: int = DEFAULT_MAX_ITER
    shift: float = DEFAULT_SHIFT
    keep_records: bool = False

    def __post_init__(self):
        if self.r < 2:
            raise InvalidArgument("forbidden clique order must be >= 2")
        if not 2 <= self.objective.k <= self.n:
            raise InvalidArgument(
                "objective order %d outside [2, %d]"
                % (self.objective.k, self.n)
            )
        if self.tol <= 0:
            raise InvalidArgument("tolerance must be positive")
        if self.equality_slack <= self.tol:
            raise InvalidArgument("equality slack must exceed the tolerance")
        if self.forbidden_copies < 2:
            raise InvalidArgument("forbidden copies must be >= 2")
        if self.source == LABELED:
            check_enumerable(self.n)
        elif self.source == CATALOG:
            if not self.catalog:
                raise InvalidArgument("a catalog sweep needs a catalog path")
        else:
            raise InvalidArgument("unknown source %r" % self.source)

    def as_dict(self):
        return {
            'n': self.n,
            'r': self.r,
            'objective': self.objective.label,
            'source': self.source,
            'catalog': self.catalog,
            'tol': self.tol,
            'equality_slack': self.equality_slack,
            'forbidden_copies': self.forbidden_copies,
            'max_iter': self.max_iter,
            'shift': self.shift,
        }


@dataclass(frozen=True)
class Maximizer(object):
    graph6: str
    value: float
    closed_form: Optional[str] = None
    exact_value: Optional[float] = None

    def as_dict(self):
        return {
            'graph6': self.graph6,
            'value': _rounded(self.value),
            'closed_form': self.closed_form,
            'exact_value': _rounded(self.exact_value),
        }


@dataclass(frozen=True)
class SweepRecord(object):
    index: int
    graph6: str
    value: float
    is_maximizer: bool


@dataclass(frozen=True)
class ExtremalReport(object):
    config: SweepConfig
    examined: int
    admitted: int
    best_value: Optional[float]
    maximizers: tuple
    runtime: float = field(default=0.0, compare=False)
    records: tuple = ()

    @property
    def maximizer_codes(self):
        return [maximizer.graph6 for maximizer in self.maximizers]

    def as_dict(self, include_runtime=False):
        summary = {
            'config': self.config.as_dict(),
            'examined': self.examined,
            'admitted': self.admitted,
            'best_value': _rounded(self.best_value),
            'maximizers': [item.as_dict() for item in self.maximizers],
        }
        if include_runtime:
            summary['runtime'] = round(self.runtime, 3)
        return summary

    def to_json(self, include_runtime=False):
        return json.dumps(
            self.as_dict(include_runtime), indent=2, sort_keys=True
        )

    def csv_rows(self):
        """Rows matching CSV_COLUMNS, one per record."""
        return [
            [
                self.config.n, self.config.r, self.config.objective.label,
                record.graph6, format_number(record.value),
                int(record.is_maximizer)
            ]
            for record in self.records
        ]


def _admits(graph, cliques, config):
    if config.forbidden_copies == 2:
        return is_2kr_free(graph, config.r, cliques)
    return find_disjoint_cliques(
        graph, config.r, config.forbidden_copies, cliques
    ) is None


class _Evaluator(object):
    """Objective evaluation with per-order clique reuse and memoization."""

    def __init__(self, config):
        self.config = config
        self.memo = {}

    def cliques(self, graph, filter_cliques):
        found = {}
        for order in self.config.objective.orders:
            if order == self.config.r:
                found[order] = filter_cliques
            else:
                found[order] = enumerate_cliques(graph, order)
        return found

    def upper_bound(self, graph, found):
        objective = self.config.objective
        if objective.kind == CLIQUE_COUNT:
            return float(len(found[objective.k]))
        total = 0.0
        for order, cliques in found.items():
            degrees = clique_degrees(graph, order, cliques).d
            total += max(degrees) if degrees else 0
        return total

    def lower_bound(self, found):
        """Rayleigh quotient of the uniform vector on each clique support."""
        objective = self.config.objective
        if objective.kind == CLIQUE_COUNT:
            return float(len(found[objective.k]))
        total = 0.0
        for order, cliques in found.items():
            if len(cliques):
                total += float(order * len(cliques)) / len(cliques.support)
        return total

    def value(self, graph, found):
        config = self.config
        objective = config.objective
        if objective.kind == CLIQUE_COUNT:
            return float(len(found[objective.k]))
        key = tuple(found[order].cliques for order in objective.orders)
        if key in self.memo:
            return self.memo[key]
        total = 0.0
        for order in objective.orders:
            try:
                total += spectral_radius(
                    graph, order, config.tol, config.max_iter, config.shift,
                    cliques=found[order]
                ).radius
            except NonConvergenceError as exc:
                exc.order = order
                exc.graph6 = graph6_encode(graph)
                raise
        if len(self.memo) >= MEMO_LIMIT:
            self.memo.clear()
        self.memo[key] = total
        return total

    def evaluate(self, graph):
        """Return the objective value, or None when the filter rejects."""
        filter_cliques = enumerate_cliques(graph, self.config.r)
        if not _admits(graph, filter_cliques, self.config):
            return None
        return self.value(graph, self.cliques(graph, filter_cliques))


@dataclass
class _ChunkResult(object):
    examined: int = 0
    admitted: int = 0
    best: Optional[float] = None
    candidates: list = field(default_factory=list)
    records: list = field(default_factory=list)


def _chunk_graphs(config, work):
    if config.source == LABELED:
        start, stop = work
        pairs = edge_pairs(config.n)
        for mask in range(start, stop):
            yield mask, Graph.from_edge_mask(config.n, mask, pairs)
    else:
        for line_number, text in work:
            graph = graph6_decode(text, line_number)
            if graph.n != config.n:
                continue
            yield line_number, graph


def _evaluate_chunk(config, work):
    """Evaluate one chunk; module level so worker processes can run it."""
    evaluator = _Evaluator(config)
    slack = config.equality_slack
    result = _ChunkResult()
    # every graph below `floor` - slack is certainly not a maximizer
    floor = 0.0
    for index, graph in _chunk_graphs(config, work):
        result.examined += 1
        filter_cliques = enumerate_cliques(graph, config.r)
        if not _admits(graph, filter_cliques, config):
            continue
        result.admitted += 1
        found = evaluator.cliques(graph, filter_cliques)
        if not config.keep_records:
            floor = max(floor, evaluator.lower_bound(found))
            bound = evaluator.upper_bound(graph, found)
            if bound + config.tol < floor - slack:
                continue
        value = evaluator.value(graph, found)
        if config.keep_records:
            result.records.append((index, graph6_encode(graph), value))
        if result.best is None or value > result.best:
            result.best = value
            result.candidates = [
                item for item in result.candidates
                if item[2] >= value - slack
            ]
        if value >= result.best - slack:
            result.candidates.append((index, graph6_encode(graph), value))
    return result


def _work_items(config):
    if config.source == LABELED:
        total = labeled_graph_count(config.n)
        return [
            (start, min(start + CHUNK_SIZE, total))
            for start in range(0, total, CHUNK_SIZE)
        ]
    lines = read_graph6_lines(config.catalog)
    return [
        lines[start:start + CHUNK_SIZE]
        for start in range(0, len(lines), CHUNK_SIZE)
    ]


def _run_chunks(config, work, jobs, progress):
    task = functools.partial(_evaluate_chunk, config)
    bar = tqdm(
        total=len(work), disable=not progress, file=sys.stderr,
        desc="sweep n=%d" % config.n, unit='chunk'
    )
    try:
        if jobs <= 1 or len(work) <= 1:
            for item in work:
                yield task(item)
                bar.update(1)
        else:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                for result in executor.map(task, work):
                    yield result
                    bar.update(1)
    finally:
        bar.close()


def _closed_form_check(graph, config, value):
    objective = config.objective
    if objective.kind != MU:
        return None, None
    recognized = recognize_closed_form(graph, objective.k)
    if recognized is None:
        return None, None
    name, exact = recognized
    if abs(exact - value) > config.equality_slack:
        raise VerificationFailure(
            "maximizer value %r disagrees with its %s value %r"
            % (value, name, exact),
            counterexample=graph6_encode(graph)
        )
    return name, exact


def sweep(config, jobs=1, progress=False):
    """
    Evaluate the objective on every admitted graph and report maximizers.

    Args
    ----
        config (:obj:`SweepConfig`): the sweep definition
        jobs (int): worker processes; the report does not depend on it
        progress (bool): show a chunk counter on stderr

    Raises
    ------
        CatalogError: If the catalog cannot be read.
        NonConvergenceError: Tagged with the graph6 code of the graph.
        VerificationFailure: If a maximizer fails its re-check.
    """
    started = time.perf_counter()
    work = _work_items(config)
    PKG_LOGGER.info("sweeping {} chunks for n={} r={} {}".format(
        len(work), config.n, config.r, config.objective.label
    ))

    examined = admitted = 0
    best = None
    candidates = []
    records = []
    for result in _run_chunks(config, work, jobs, progress):
        examined += result.examined
        admitted += result.admitted
        records.extend(result.records)
        if result.best is None:
            continue
        if best is None or result.best > best:
            best = result.best
        candidates.extend(result.candidates)

    maximizers = []
    if best is not None:
        evaluator = _Evaluator(config)
        classes = {}
        for index, text, value in candidates:
            if value < best - config.equality_slack:
                continue
            code = canonical_code(graph6_decode(text))
            classes.setdefault(code, index)
        for code in sorted(classes):
            graph = graph6_decode(code)
            value = evaluator.evaluate(graph)
            if value is None:
                raise VerificationFailure(
                    "maximizer fails the forbidden-copies filter",
                    counterexample=code
                )
            name, exact = _closed_form_check(graph, config, value)
            maximizers.append(Maximizer(code, value, name, exact))
        best = max(item.value for item in maximizers)
        maximizers = [
            item for item in maximizers
            if item.value >= best - config.equality_slack
        ]

    if config.keep_records:
        threshold = None if best is None else best - config.equality_slack
        records = tuple(
            SweepRecord(index, text, value, value >= threshold)
            for index, text, value in sorted(records)
        )
    else:
        records = tuple(
            SweepRecord(index, item.graph6, item.value, True)
            for index, item in enumerate(maximizers)
        )

    runtime = time.perf_counter() - started
    PKG_LOGGER.info("examined {} graphs, admitted {}, in {:.1f}s".format(
        examined, admitted, runtime
    ))
    return ExtremalReport(
        config=config, examined=examined, admitted=admitted,
        best_value=best, maximizers=tuple(maximizers), runtime=runtime,
        records=records
    )


def _sweep_config(n, r, objective, source, **kwargs):
    if source:
        return SweepConfig(
            n, r, objective, source=CATALOG, catalog=source, **kwargs
        )
    return SweepConfig(n, r, objective, **kwargs)


@dataclass(frozen=True)
class VerificationResult(object):
    name: str
    passed: bool
    report: ExtremalReport
    expected_value: Optional[float]
    expected_codes: tuple
    counterexample: Optional[str] = None
    message: str = ''

    def as_dict(self, include_runtime=False):
        return {
            'name': self.name,
            'passed': self.passed,
            'expected_value': _rounded(self.expected_value),
            'expected_maximizers': list(self.expected_codes),
            'counterexample': self.counterexample,
            'message': self.message,
            'report': self.report.as_dict(include_runtime),
        }


def theorem_1_8_extremal(n):
    """
    Return the extremal graphs and the maximum of mu_3 over 2K_3-free graphs.

    The answer is piecewise in n: K_n up to 5 vertices, K_5 with an isolated
    or pendant vertex at 6, K_3 join (n-3)K_1 from 7 to 13, and
    K_1 join T_2(n-1) from 14 on.
    """
    if n < 3:
        raise InvalidArgument("need n >= 3, got %d" % n)
    if n <= 5:
        return [complete_graph(n)], float(math.comb(n - 1, 2))
    if n == 6:
        return [kn_union_empty(6), pendant_graph_g0(6)], 6.0
    if n <= 13:
        return [k3_join_empty(n)], mu3_k3_join_empty(n)
    return [km_join_turan(n, 1, 3)], mu_km_join_turan(n, 1, 3)


def _compare_maximizers(name, report, expected_codes, expected_value, slack,
                        subset=False):
    observed = report.maximizer_codes
    counterexample = None
    messages = []
    value_ok = report.best_value is not None \
        and abs(report.best_value - expected_value) <= slack
    if not value_ok:
        messages.append("best value %s, expected %s" % (
            format_number(report.best_value), format_number(expected_value)
        ))
    unexpected = [code for code in observed if code not in expected_codes]
    missing = [code for code in expected_codes if code not in observed]
    if unexpected and not subset:
        counterexample = unexpected[0]
        messages.append("unexpected maximizer %s" % counterexample)
    if missing:
        counterexample = counterexample or missing[0]
        messages.append("expected maximizer %s not attained" % missing[0])
    passed = value_ok and not missing and (subset or not unexpected)
    if passed:
        messages.append("%d maximizer class(es) as expected" % len(observed))
    return VerificationResult(
        name=name, passed=passed, report=report,
        expected_value=expected_value, expected_codes=tuple(expected_codes),
        counterexample=counterexample, message='; '.join(messages)
    )


def verify_theorem_1_8(n, source=None, jobs=1, progress=False,
                       tol=DEFAULT_TOL, slack=DEFAULT_SLACK):
    """Check the maximum of mu_3 over 2K_3-free graphs on n vertices."""
    graphs, expected_value = theorem_1_8_extremal(n)
    expected_codes = sorted(set(canonical_code(graph) for graph in graphs))
    config = _sweep_config(
        n, 3, Objective(MU, 3), source, tol=tol, equality_slack=slack
    )
    report = sweep(config, jobs, progress)
    return _compare_maximizers(
        '1.8', report, expected_codes, expected_value, slack
    )


def verify_theorem_1_7_top_case(n, r, source=None, jobs=1, progress=False,
                                tol=DEFAULT_TOL, slack=DEFAULT_SLACK):
    """
    Check that max mu_{2r-1} over 2K_r-free graphs is 1.

    The maximum must be attained exactly by graphs holding a single
    (2r-1)-clique; any such graph has mu = 1 by the row-sum bounds, so it
    suffices that every maximizer has exactly one.
    """
    k = 2 * r - 1
    if r < 2 or n < k:
        raise InvalidArgument(
            "need r >= 2 and n >= 2r-1, got n=%d r=%d" % (n, r)
        )
    config = _sweep_config(
        n, r, Objective(MU, k), source, tol=tol, equality_slack=slack
    )
    report = sweep(config, jobs, progress)
    messages = []
    counterexample = None
    value_ok = report.best_value is not None \
        and abs(report.best_value - 1.0) <= slack
    if not value_ok:
        messages.append("best value %s, expected 1" % format_number(
            report.best_value
        ))
    for code in report.maximizer_codes:
        count = len(enumerate_cliques(graph6_decode(code), k))
        if count != 1:
            counterexample = code
            messages.append(
                "maximizer %s has %d %d-cliques" % (code, count, k)
            )
            break
    passed = value_ok and counterexample is None
    if passed:
        messages.append(
            "%d maximizer class(es), each with one %d-clique"
            % (len(report.maximizers), k)
        )
    return VerificationResult(
        name='1.7-top', passed=passed, report=report, expected_value=1.0,
        expected_codes=(), counterexample=counterexample,
        message='; '.join(messages)
    )


def theorem_1_7_threshold(r, k):
    """Return (2r-k-1)(e r^4 k^(k/2))^(k/(2k-2r+1)) + k."""
    if not r <= k <= 2 * r - 1:
        raise InvalidArgument("need r <= k <= 2r-1")
    base = math.e * r ** 4 * k ** (k / 2.0)
    return (2 * r - k - 1) * base ** (k / (2.0 * k - 2 * r + 1)) + k


@dataclass(frozen=True)
class ExplorationReport(object):
    report: ExtremalReport
    conjectured_graph6: str
    conjectured_value: float
    threshold: float
    agrees: bool

    @property
    def hypothesis_met(self):
        return self.report.config.n >= self.threshold

    def as_dict(self, include_runtime=False):
        return {
            'conjectured_graph6': self.conjectured_graph6,
            'conjectured_value': _rounded(self.conjectured_value),
            'threshold': _rounded(self.threshold),
            'hypothesis_met': self.hypothesis_met,
            'agrees': self.agrees,
            'report': self.report.as_dict(include_runtime),
        }


def explore_theorem_1_7(n, r, k, source=None, jobs=1, progress=False,
                        tol=DEFAULT_TOL, slack=DEFAULT_SLACK):
    """
    Compare the observed maximum of mu_k + ... + mu_{2r-1} with the value of
    K_{2k-2r+1} join T_{2r-k-1}(n-2k+2r-1). Nothing is asserted.
    """
    if not r <= k <= 2 * r - 2:
        raise InvalidArgument(
            "need r <= k <= 2r-2, got r=%d k=%d" % (r, k)
        )
    m = 2 * k - 2 * r + 1
    conjectured = km_join_turan(n, m, k)
    value = mu_km_join_turan(n, m, k)
    code = canonical_code(conjectured)
    config = _sweep_config(
        n, r, Objective(MU_SUM, k, 2 * r - 1), source, tol=tol,
        equality_slack=slack
    )
    report = sweep(config, jobs, progress)
    agrees = report.best_value is not None \
        and abs(report.best_value - value) <= slack \
        and code in report.maximizer_codes
    return ExplorationReport(
        report, code, value, theorem_1_7_threshold(r, k), agrees
    )


def generalized_turan(n, s, r, source=None, jobs=1, progress=False):
    """Return the sweep maximizing |C_s| over 2K_r-free graphs."""
    config = _sweep_config(n, r, Objective(CLIQUE_COUNT, s), source)
    return sweep(config, jobs, progress)


def turan_2k3_count(n):
    """Return max{3n-8, floor((n-1)^2/4)}, the 2K_3-free triangle maximum."""
    if n < 7:
        raise InapplicableError("formula needs n >= 7, got %d" % n)
    return max(3 * n - 8, (n - 1) ** 2 // 4)


def verify_theorem_1_3(n, source=None, jobs=1, progress=False):
    """Check the triangle maximum over 2K_3-free graphs and its extremal graph."""
    expected = turan_2k3_count(n)
    graphs = []
    if 3 * n - 8 >= (n - 1) ** 2 // 4:
        graphs.append(k3_join_empty(n))
    if (n - 1) ** 2 // 4 >= 3 * n - 8:
        graphs.append(km_join_turan(n, 1, 3))
    expected_codes = sorted(set(canonical_code(graph) for graph in graphs))
    report = generalized_turan(n, 3, 3, source, jobs, progress)
    return _compare_maximizers(
        '1.3', report, expected_codes, float(expected), 0.5, subset=True
    )


@dataclass(frozen=True)
class ProbeReport(object):
    report: ExtremalReport
    k: int
    bound: float
    hypothesis_met: bool
    status: str

    @property
    def passed(self):
        return self.status != 'fail'

    def as_dict(self, include_runtime=False):
        return {
            'k': self.k,
            'bound': _rounded(self.bound),
            'hypothesis_met': self.hypothesis_met,
            'status': self.status,
            'report': self.report.as_dict(include_runtime),
        }


def lemma_2_10_probe(n, r, k, source=None, jobs=1, progress=False):
    """
    Compare the exact maximum of |C_r| over (k+1)K_r-free graphs with
    k r^2 ((n-kr)/(r-1))^(r-1). The inequality is only asserted when
    r >= 3 and n >= 2kr^3.
    """
    if k < 1:
        raise InvalidArgument("k must be at least 1")
    config = _sweep_config(
        n, r, Objective(CLIQUE_COUNT, r), source, forbidden_copies=k + 1
    )
    report = sweep(config, jobs, progress)
    bound = k * r ** 2 * (float(n - k * r) / (r - 1)) ** (r - 1)
    hypothesis = r >= 3 and n >= 2 * k * r ** 3
    if not hypothesis:
        status = 'hypothesis unmet'
    elif report.best_value is None or report.best_value <= bound:
        status = 'pass'
    else:
        status = 'fail'
    return ProbeReport(report, k, bound, hypothesis, status)


@dataclass(frozen=True)
class ComparisonRow(object):
    n: int
    values: tuple
    leader: str
    expected_leader: str
    passed: bool


COMPARISON_NAMES = ('K1+T2(n-1)', 'K3+(n-3)K1', 'K5u(n-5)K1')


def _expected_leader(n):
    if n == 6:
        return COMPARISON_NAMES[2]
    if n <= 13:
        return COMPARISON_NAMES[1]
    return COMPARISON_NAMES[0]


def check_comparison_claims(n_values=range(6, 19), tol=DEFAULT_TOL,
                            slack=DEFAULT_SLACK):
    """
    Order mu_3 of the three candidate extremal graphs for each n.

    Closed forms are cross-checked against iteration; a row passes when the
    expected graph beats both others by more than `slack`.
    """
    rows = []
    for n in n_values:
        if n < 6:
            raise InvalidArgument("comparison needs n >= 6, got %d" % n)
        closed = (
            mu_km_join_turan(n, 1, 3), mu3_k3_join_empty(n), 6.0
        )
        graphs = (km_join_turan(n, 1, 3), k3_join_empty(n),
                  kn_union_empty(n, 5))
        iterated = tuple(
            spectral_radius(graph, 3, tol).radius for graph in graphs
        )
        agree = all(
            abs(a - b) <= max(slack, slack * abs(a))
            for a, b in zip(closed, iterated)
        )
        leader_index = max(range(3), key=lambda index: closed[index])
        leader = COMPARISON_NAMES[leader_index]
        margin = all(
            closed[leader_index] - closed[index] > slack
            for index in range(3) if index != leader_index
        )
        expected = _expected_leader(n)
        rows.append(ComparisonRow(
            n, closed, leader, expected,
            agree and margin and leader == expected
        ))
    return rows, all(row.passed for row in rows)


def crossover_holds():
    """The cube-root value beats K_1 join T_2(n-1) at 13 but not at 14."""
    return mu3_k3_join_empty(13) > 36.0 ** (2.0 / 3) \
        and mu3_k3_join_empty(14) < 42.0 ** (2.0 / 3)
