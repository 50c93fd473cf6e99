import numpy as np
import pytest
from rich.console import Console

from analytics.verification import (
    LOW_COVERAGE_SAMPLES,
    CheckResult,
    InvariantSuite,
    VerificationReport,
    run_invariant_suite,
)
from utils.exceptions import ConfigError, ConvergenceError
from utils.tolerances import DEFAULT_TOLERANCES

FAST = dict(oracle_samples=6, envelope_samples=401)


@pytest.fixture(scope="module")
def default_report():
    return run_invariant_suite(display=False, **FAST)


class TestInvariantSuite:
    """The invariant suite over the default tolerance table."""

    def test_default_run_passes(self, default_report):
        assert default_report.passed, default_report.failing
        assert not default_report.low_coverage

    def test_every_check_reported_in_order(self, default_report):
        names = [r.name for r in default_report.results]
        assert names == list(DEFAULT_TOLERANCES)

    def test_oracle_covers_square_grid(self, default_report):
        oracle = next(r for r in default_report.results if r.name == "fold_oracle")
        assert oracle.samples == 36

    def test_impossible_tolerance_fails(self):
        report = run_invariant_suite(display=False, uniform_tolerance=1e-18, **FAST)
        assert not report.passed
        assert "spheres" in report.failing
        assert all(r.tolerance == 1e-18 for r in report.results)

    def test_two_samples_flag_low_coverage(self):
        report = run_invariant_suite(display=False, samples=2, **FAST)
        assert report.low_coverage
        assert report.samples == 2 < LOW_COVERAGE_SAMPLES
        assert report.passed, report.failing

    def test_uniform_s_grid(self):
        report = run_invariant_suite(display=False, grid="uniform-s", **FAST)
        assert report.passed, report.failing

    def test_raising_check_is_reported_as_failure(self, monkeypatch):
        suite = InvariantSuite(**FAST)

        def broken():
            raise ConvergenceError("no bracket")

        monkeypatch.setattr(suite, "_caustic_cusp", broken)
        report = suite.run(display=False)
        cusp = next(r for r in report.results if r.name == "caustic_cusp")
        assert cusp.value == np.inf
        assert report.failing == ["caustic_cusp"]

    def test_unknown_tolerance_rejected(self):
        with pytest.raises(ConfigError):
            InvariantSuite(tolerances={"no_such_check": 1e-3})


class TestVerificationReport:
    """Tabular and console views of a report."""

    def test_frame_columns(self, default_report):
        frame = default_report.to_frame()
        assert list(frame.columns) == [
            "check",
            "max_residual",
            "tolerance",
            "samples",
            "passed",
        ]
        assert len(frame) == len(DEFAULT_TOLERANCES)
        assert frame["passed"].all()

    def test_render_lists_failures(self):
        report = VerificationReport(
            results=[
                CheckResult("spheres", 1.0, 1e-9, 10),
                CheckResult("tangency", 0.0, 1e-6, 5),
            ],
            samples=10,
            low_coverage=True,
        )
        out = Console(record=True, width=120)
        report.render(out)
        text = out.export_text()
        assert "Low coverage" in text
        assert "Failing checks: spheres" in text

    @pytest.mark.parametrize(
        "value, samples, expected",
        [(0.5, 3, False), (1e-13, 3, True), (np.inf, 0, True)],
    )
    def test_check_result_passed(self, value, samples, expected):
        assert CheckResult("named_points", value, 1e-12, samples).passed is expected
