"""Provide one command class per subcommand of the command line interface."""

import os

from ..core import PKG_LOGGER, require
from ..exceptions import CliqueSpectraConfigException, InvalidArgument
from ..extremal import (CATALOG, CSV_COLUMNS, LABELED, MU, MU_SUM,
                        ExplorationReport, Objective, ProbeReport,
                        SweepConfig, VerificationResult,
                        check_comparison_claims, crossover_holds,
                        explore_theorem_1_7, generalized_turan,
                        lemma_2_10_probe, sweep, verify_theorem_1_3,
                        verify_theorem_1_7_top_case, verify_theorem_1_8)
from ..graph6 import graph6_decode, graph6_encode, read_graph6_catalog
from ..graphs import (LABELED_ENUMERATION_LIMIT, MultipartiteSpec,
                      complete_graph, complete_multipartite, cycle_graph,
                      empty_graph, flower, k3_join_empty, km_join_turan,
                      kn_union_empty, path_graph, pendant_graph_g0,
                      turan_graph)
from ..spectral import bound_summary, closed_form_radius, spectral_radius
from ..util import format_number
from .emitters import emit_csv, emit_graph6, emit_json, emit_text


class CommandMixin(object):
    """
    Functionality common to commands.

    - Read graphs from `--graph6` or `--input`.
    - Dispatch results to the `_emit_<format>` method chosen by `--emit`.
    """

    command_title = ""
    command_usage = ""
    # Formats this command can write, the first being the default.
    emit_formats = ['text']

    def __init__(self, app):
        self.app = app

    @property
    def config(self):
        return self.app.config

    @property
    def stream(self):
        return self.app.stream

    @property
    def emit_format(self):
        chosen = getattr(self.config, 'emit', None) or self.emit_formats[0]
        if chosen not in self.emit_formats:
            raise CliqueSpectraConfigException(
                "{} cannot emit {}; choose from {}".format(
                    self.command_title, chosen, ", ".join(self.emit_formats)
                )
            )
        return chosen

    def graphs(self):
        """Return `(label, graph)` pairs from the configured graph input."""
        if getattr(self.config, 'graph6', None):
            return [(self.config.graph6, graph6_decode(self.config.graph6))]
        if getattr(self.config, 'input', None):
            return [
                (graph6_encode(graph), graph)
                for _, graph in read_graph6_catalog(self.config.input)
            ]
        raise CliqueSpectraConfigException(
            "{} requires --graph6 or --input".format(self.command_title)
        )

    def catalog_source(self, n):
        """Return the catalog path a sweep over n vertices reads, or None."""
        if getattr(self.config, 'input', None):
            return self.config.input
        if n <= LABELED_ENUMERATION_LIMIT:
            return None
        catalog_dir = getattr(self.config, 'catalog_dir', None)
        if not catalog_dir:
            raise CliqueSpectraConfigException(
                "sweeps over {} vertices need --input or --catalog-dir"
                .format(n)
            )
        return os.path.join(catalog_dir, 'graph{}.g6'.format(n))

    def emit(self, result):
        getattr(self, '_emit_{}'.format(self.emit_format))(result)

    def run(self):
        PKG_LOGGER.debug("running {}".format(self.command_title))
        return self.emit(self.compute())

    def compute(self):
        raise NotImplementedError()


class SpectralCommand(CommandMixin):
    command_title = "spectral"
    command_usage = "spectral (--graph6 CODE | --input PATH) --r R"
    emit_formats = ['text', 'csv', 'json']
    columns = ['graph6', 'r', 'radius', 'method', 'iterations', 'residual']

    def compute(self):
        r = require(self.config, 'r')
        rows = []
        for label, graph in self.graphs():
            if self.config.method == 'closed-form':
                result = closed_form_radius(graph, r)
            else:
                result = spectral_radius(
                    graph, r, self.config.tol, self.config.max_iter,
                    self.config.shift
                )
            rows.append([
                label, r, result.radius, result.method, result.iterations,
                result.residual
            ])
        return rows

    def _emit_text(self, rows):
        emit_text(self.stream, [format_number(row[2]) for row in rows])

    def _emit_csv(self, rows):
        emit_csv(self.stream, self.columns, rows)

    def _emit_json(self, rows):
        emit_json(self.stream, [dict(zip(self.columns, row)) for row in rows])


class ConstructCommand(CommandMixin):
    command_title = "construct"
    command_usage = "construct --family FAMILY [--n N --m M --r R ...]"
    emit_formats = ['graph6', 'text', 'json']

    def _parts(self):
        raw = require(self.config, 'parts')
        try:
            return [int(part) for part in raw.split(',')]
        except ValueError:
            raise InvalidArgument("--parts must be integers, got %r" % raw)

    def compute(self):
        config = self.config
        family = require(config, 'family')
        if family == 'complete':
            return complete_graph(require(config, 'n'))
        if family == 'empty':
            return empty_graph(require(config, 'n'))
        if family == 'cycle':
            return cycle_graph(require(config, 'n'))
        if family == 'path':
            return path_graph(require(config, 'n'))
        if family == 'turan':
            return turan_graph(*require(config, 'n', 'r'))
        if family == 'multipartite':
            return complete_multipartite(MultipartiteSpec(self._parts()))
        if family == 'k-join-turan':
            return km_join_turan(*require(config, 'n', 'm', 'r'))
        if family == 'k3-join-empty':
            return k3_join_empty(require(config, 'n'))
        if family == 'flower':
            return flower(*require(config, 'r', 'k', 'petals'))
        if family == 'k5-union-empty':
            return kn_union_empty(require(config, 'n'), 5)
        if family == 'g0':
            return pendant_graph_g0(config.n or 6)
        raise InvalidArgument("unknown family %r" % family)

    def _emit_graph6(self, graph):
        emit_graph6(self.stream, [graph6_encode(graph)])

    def _emit_text(self, graph):
        lines = ["n {} m {}".format(graph.n, graph.edge_count)]
        lines.extend("{} {}".format(i, j) for i, j in graph.edges())
        emit_text(self.stream, lines)

    def _emit_json(self, graph):
        emit_json(self.stream, {
            'graph6': graph6_encode(graph),
            'n': graph.n,
            'edges': [list(edge) for edge in graph.edges()],
        })


class BoundsCommand(CommandMixin):
    command_title = "bounds"
    command_usage = "bounds (--graph6 CODE | --input PATH) --r R"
    emit_formats = ['text', 'csv', 'json']
    columns = [
        'graph6', 'r', 'clique_count', 'omega', 'row_sum_low', 'radius',
        'row_sum_high', 'clique_count_bound', 'method'
    ]

    def compute(self):
        r = require(self.config, 'r')
        rows = []
        for label, graph in self.graphs():
            summary = bound_summary(
                graph, r, self.config.tol, self.config.max_iter,
                self.config.shift
            )
            rows.append([
                label, r, summary.clique_count, summary.omega, summary.low,
                summary.radius, summary.high, summary.liu, summary.method
            ])
        return rows

    def _emit_text(self, rows):
        lines = []
        for row in rows:
            label, r, count, omega, low, radius, high, liu, _ = row
            line = "{} r={} cliques={} omega={} {} <= mu <= {} mu={}".format(
                label, r, count, omega, format_number(low),
                format_number(high), format_number(radius)
            )
            if liu is not None:
                line += " clique-count-bound={}".format(format_number(liu))
            lines.append(line)
        emit_text(self.stream, lines)

    def _emit_csv(self, rows):
        emit_csv(self.stream, self.columns, rows)

    def _emit_json(self, rows):
        emit_json(self.stream, [dict(zip(self.columns, row)) for row in rows])


class ReportMixin(object):
    """Emitters shared by commands whose result is an `ExtremalReport`."""

    def _report(self, result):
        return result

    def _emit_json(self, result):
        emit_json(self.stream, result.as_dict(self.config.timing))

    def _emit_csv(self, result):
        report = self._report(result)
        emit_csv(self.stream, CSV_COLUMNS, report.csv_rows())

    def _emit_graph6(self, result):
        emit_graph6(self.stream, self._report(result).maximizer_codes)

    def _report_lines(self, report):
        lines = [
            "n={} r={} objective={} source={}".format(
                report.config.n, report.config.r,
                report.config.objective.label, report.config.source
            ),
            "examined {} admitted {}".format(
                report.examined, report.admitted
            ),
            "best {}".format(format_number(report.best_value)),
        ]
        for maximizer in report.maximizers:
            line = "maximizer {} {}".format(
                maximizer.graph6, format_number(maximizer.value)
            )
            if maximizer.closed_form:
                line += " {} {}".format(
                    maximizer.closed_form,
                    format_number(maximizer.exact_value)
                )
            lines.append(line)
        if self.config.timing:
            lines.append("runtime {:.3f}s".format(report.runtime))
        return lines


class SweepCommand(ReportMixin, CommandMixin):
    command_title = "sweep"
    command_usage = (
        "sweep --n N --r R [--objective mu|mu-sum|clique-count --k K]"
    )
    emit_formats = ['json', 'csv', 'graph6', 'text']

    def objective(self, r):
        kind = self.config.objective or MU
        k = self.config.k if self.config.k is not None else r
        if kind == MU_SUM:
            return Objective(MU_SUM, k, 2 * r - 1)
        return Objective(kind, k)

    def compute(self):
        config = self.config
        n, r = require(config, 'n', 'r')
        catalog = self.catalog_source(n)
        sweep_config = SweepConfig(
            n, r, self.objective(r),
            source=CATALOG if catalog else LABELED, catalog=catalog,
            tol=config.tol, equality_slack=config.slack,
            max_iter=config.max_iter, shift=config.shift,
            keep_records=config.keep_records
        )
        return sweep(sweep_config, config.jobs, config.progress)

    def _emit_text(self, report):
        emit_text(self.stream, self._report_lines(report))


class TuranCountCommand(SweepCommand):
    command_title = "turan-count"
    command_usage = "turan-count --n N --r R --k S"
    emit_formats = ['text', 'json', 'csv', 'graph6']

    def compute(self):
        n, r, k = require(self.config, 'n', 'r', 'k')
        return generalized_turan(
            n, k, r, self.catalog_source(n), self.config.jobs,
            self.config.progress
        )


class ComparisonOutcome(object):
    """Rows of the three-way mu_3 comparison with an overall verdict."""

    name = '1.8-compare'
    columns = ['n', 'K1+T2(n-1)', 'K3+(n-3)K1', 'K5u(n-5)K1', 'leader',
               'expected', 'passed']

    def __init__(self, rows, passed):
        self.rows = rows
        self.passed = passed

    @property
    def message(self):
        return "comparison claims {}".format("hold" if self.passed else "fail")

    def table(self):
        return [
            [row.n] + list(row.values)
            + [row.leader, row.expected_leader, row.passed]
            for row in self.rows
        ]

    def as_dict(self, include_runtime=False):
        return {
            'name': self.name,
            'passed': self.passed,
            'rows': [dict(zip(self.columns, row)) for row in self.table()],
        }


class VerifyCommand(ReportMixin, CommandMixin):
    """Run one of the exhaustive checks; failures exit with status 1."""

    command_title = "verify"
    command_usage = "verify --theorem THEOREM [--n N --r R --k K]"
    emit_formats = ['text', 'json', 'csv', 'graph6']

    theorem_actions = {
        '1.8': 'theorem_1_8',
        '1.7-top': 'theorem_1_7_top',
        '1.7-explore': 'theorem_1_7_explore',
        '1.3': 'theorem_1_3',
        '1.8-compare': 'comparison',
        '2.10': 'probe',
    }

    def compute(self):
        theorem = require(self.config, 'theorem')
        return getattr(
            self, '_action_{}'.format(self.theorem_actions[theorem])
        )()

    def _sweep_kwargs(self, n, numerics=True):
        kwargs = dict(
            source=self.catalog_source(n), jobs=self.config.jobs,
            progress=self.config.progress
        )
        if numerics:
            kwargs.update(tol=self.config.tol, slack=self.config.slack)
        return kwargs

    def _action_theorem_1_8(self):
        n = require(self.config, 'n')
        return verify_theorem_1_8(n, **self._sweep_kwargs(n))

    def _action_theorem_1_7_top(self):
        n, r = require(self.config, 'n', 'r')
        return verify_theorem_1_7_top_case(n, r, **self._sweep_kwargs(n))

    def _action_theorem_1_7_explore(self):
        n, r, k = require(self.config, 'n', 'r', 'k')
        return explore_theorem_1_7(n, r, k, **self._sweep_kwargs(n))

    def _action_theorem_1_3(self):
        n = require(self.config, 'n')
        return verify_theorem_1_3(n, **self._sweep_kwargs(n, numerics=False))

    def _action_comparison(self):
        rows, passed = check_comparison_claims(
            range(6, 19), self.config.tol, self.config.slack
        )
        return ComparisonOutcome(rows, passed and crossover_holds())

    def _action_probe(self):
        n, r, k = require(self.config, 'n', 'r', 'k')
        return lemma_2_10_probe(
            n, r, k, **self._sweep_kwargs(n, numerics=False)
        )

    def _report(self, result):
        if isinstance(result, ComparisonOutcome):
            raise CliqueSpectraConfigException(
                "{} has no sweep report to emit".format(result.name)
            )
        return result.report

    def run(self):
        result = self.compute()
        self.emit(result)
        passed = getattr(result, 'passed', True)
        if not passed:
            PKG_LOGGER.warning("verification failed: {}".format(
                getattr(result, 'message', '')
            ))
        return 0 if passed else 1

    def _emit_csv(self, result):
        if isinstance(result, ComparisonOutcome):
            emit_csv(self.stream, result.columns, result.table())
            return
        super(VerifyCommand, self)._emit_csv(result)

    def _emit_text(self, result):
        lines = []
        if isinstance(result, (VerificationResult, ComparisonOutcome)):
            lines.append("{} {}: {}".format(
                "PASS" if result.passed else "FAIL", result.name,
                result.message
            ))
        if isinstance(result, ComparisonOutcome):
            for row in result.table():
                lines.append(" ".join(
                    format_number(cell) if isinstance(cell, float)
                    else str(cell)
                    for cell in row
                ))
            emit_text(self.stream, lines)
            return
        if isinstance(result, ExplorationReport):
            lines.append("conjectured {} {} agrees={} threshold {}".format(
                result.conjectured_graph6,
                format_number(result.conjectured_value), result.agrees,
                format_number(result.threshold)
            ))
        if isinstance(result, ProbeReport):
            lines.append("bound {} status {}".format(
                format_number(result.bound), result.status
            ))
        lines.extend(self._report_lines(result.report))
        emit_text(self.stream, lines)
