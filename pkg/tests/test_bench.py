"""Benchmark Harness Tests

Timing methodology with injected clocks, the bytes model, CSV output and
relative performance.
"""

import io
import json
import math
import time

import pytest

from app.bench import (
    BenchConfig,
    BenchRecord,
    bytes_moved,
    expand_configs,
    load_config_file,
    read_csv,
    records_to_csv,
    relative_performance,
    render_table,
    rhs_bytes,
    run_benchmark,
    spmv_bytes,
)
from app.systems.problems import make_problem
from app.utils.errors import ConfigError, CsvFormatError


class FakeClock:
    """Nanosecond clock that advances by ``tick`` per read and by ``jump`` on demand."""

    def __init__(self, durations_s=None, tick_ns=1000):
        self.now = 0
        self.reads = 0
        self.tick_ns = tick_ns
        self._durations = list(durations_s or [])
        self._started = False

    def __call__(self):
        self.reads += 1
        if self._durations:
            if not self._started:
                self._started = True
                return self.now
            self._started = False
            self.now += int(self._durations.pop(0) * 1e9)
            value = self.now
            self.now += 10**9
            return value
        self.now += self.tick_ns
        return self.now


def small_config(**overrides):
    settings = dict(
        system="lorenz", backend="serial", sizes=[16], steps=2, repetitions=3, warmup=0
    )
    settings.update(overrides)
    return BenchConfig(**settings)


class TestTimingMethodology:
    """Median of repeated runs, untimed setup and warmup."""

    def test_median_of_ten_injected_times(self):
        """Test times [3,1,2,5,4,9,8,7,6,10] -> median 5.5 exactly."""
        # Arrange
        clock = FakeClock([3, 1, 2, 5, 4, 9, 8, 7, 6, 10])
        config = small_config(repetitions=10)

        # Act
        (record,) = run_benchmark(config, clock=clock)

        # Assert
        assert record.median_seconds == 5.5
        assert record.min_seconds == 1.0
        assert record.max_seconds == 10.0
        assert record.times == [3.0, 1.0, 2.0, 5.0, 4.0, 9.0, 8.0, 7.0, 6.0, 10.0]

    def test_single_repetition_median_is_that_time(self):
        """Test repetitions = 1."""
        # Act
        (record,) = run_benchmark(small_config(repetitions=1), clock=FakeClock([2.5]))

        # Assert
        assert record.median_seconds == 2.5

    def test_warmup_runs_do_not_read_the_clock(self):
        """Test that only timed repetitions read the clock, twice each."""
        # Arrange
        clock = FakeClock()

        # Act
        run_benchmark(small_config(repetitions=4, warmup=3), clock=clock)

        # Assert
        assert clock.reads == 8

    def test_setup_delay_is_not_timed(self):
        """Test that a slow problem construction leaves the median unchanged."""
        # Arrange
        clock = FakeClock()

        def slow_factory(*args, **kwargs):
            clock.now += 10**9
            return make_problem(*args, **kwargs)

        # Act
        (fast,) = run_benchmark(small_config(), clock=FakeClock())
        (slow,) = run_benchmark(small_config(), clock=clock, problem_factory=slow_factory)

        # Assert
        assert slow.median_seconds == fast.median_seconds

    def test_setup_sleep_excluded_from_wall_clock(self):
        """Test a real 0.5 s delay in problem construction against the real clock."""
        # Arrange
        def sleepy_factory(*args, **kwargs):
            time.sleep(0.5)
            return make_problem(*args, **kwargs)

        # Act
        (record,) = run_benchmark(small_config(repetitions=1), problem_factory=sleepy_factory)

        # Assert
        assert record.median_seconds < 0.25

    def test_out_of_memory_size_is_skipped(self):
        """Test that a failing size is recorded and the sweep continues."""
        # Arrange
        def factory(system_id, n, *args, **kwargs):
            if n == 32:
                raise MemoryError("cannot allocate")
            return make_problem(system_id, n, *args, **kwargs)

        # Act
        records = run_benchmark(small_config(sizes=[16, 32, 64]), problem_factory=factory)

        # Assert
        assert [r.failed for r in records] == [False, True, False]
        assert "cannot allocate" in records[1].error

    def test_pass_count_constant_across_sizes(self):
        """Test passes per step for Lorenz RK4: 4 RHS x 3 passes + 4 stepper passes."""
        # Act
        records = run_benchmark(small_config(sizes=[10, 100, 1000]))

        # Assert
        assert [r.pass_count for r in records] == [16, 16, 16]

    def test_fused_backend_counts_fewer_passes(self):
        """Test passes per step for fused Lorenz RK4: 4 RHS x 1 pass + 4 stepper passes."""
        # Act
        (record,) = run_benchmark(small_config(backend="fused"))

        # Assert
        assert record.fused
        assert record.pass_count == 8

    def test_serial_and_parallel_runs_end_in_the_same_state(self):
        """Test checksums of Lorenz N = 10^4 after 100 steps on two backends."""
        # Arrange
        serial = small_config(sizes=[10_000], steps=100, repetitions=1)
        parallel = small_config(sizes=[10_000], steps=100, repetitions=1, backend="parallel")

        # Act
        (a,) = run_benchmark(serial)
        (b,) = run_benchmark(parallel)

        # Assert
        assert a.checksum == b.checksum
        assert a.pass_count == b.pass_count

    def test_throughput_from_bytes_and_median(self):
        """Test gbps = bytes / median / 1e9 and the peak fraction."""
        # Act
        record = BenchRecord.from_times(
            "lorenz", "serial", False, 10, 1, [2.0, 4.0], 8e9, 12, peak_gbps=4.0
        )

        # Assert
        assert record.median_seconds == 3.0
        assert record.gbps == pytest.approx(8 / 3)
        assert record.peak_frac == pytest.approx(2 / 3)

    def test_zero_median_gives_nan_throughput(self):
        """Test that an unmeasurably short run does not divide by zero."""
        # Act
        record = BenchRecord.from_times("lorenz", "serial", False, 10, 0, [0.0], 0, 0)

        # Assert
        assert math.isnan(record.gbps)


class TestBytesModel:
    """Declared accounting rule."""

    def test_fused_lorenz_rhs(self):
        """Test 8 x (4000 reads + 3000 writes) for M = 1000."""
        assert rhs_bytes("lorenz", 1000, fused=True) == 56_000

    def test_unfused_lorenz_moves_more(self):
        """Test that the unfused form is strictly more expensive."""
        assert rhs_bytes("lorenz", 1000, fused=False) > rhs_bytes("lorenz", 1000, fused=True)

    def test_zero_steps(self):
        """Test that no steps move no bytes."""
        assert bytes_moved("phase", 1000, 0, fused=True) == 0

    def test_single_entry_spmv(self):
        """Test the 1 x 1 grid product: 8 + 8 + 8 + 4 bytes."""
        assert spmv_bytes(1, 1) == 28

    def test_linear_in_steps(self):
        """Test that the model scales with the step count."""
        assert bytes_moved("lattice", 900, 10, False) == 10 * bytes_moved("lattice", 900, 1, False)

    def test_unknown_system(self):
        """Test system id validation."""
        with pytest.raises(ConfigError):
            rhs_bytes("pendulum", 10, True)


class TestBenchConfig:
    """Validation and JSON expansion."""

    @pytest.mark.parametrize(
        "overrides",
        [
            {"repetitions": 0},
            {"sizes": [100, 10]},
            {"sizes": [100, 100]},
            {"sizes": []},
            {"steps": -1},
            {"system": "pendulum"},
            {"backend": "gpu"},
            {"workers": 0},
            {"peak_gbps": 0.0},
        ],
    )
    def test_invalid_settings_rejected(self, overrides):
        """Test every validation rule."""
        with pytest.raises(ConfigError):
            small_config(**overrides)

    def test_default_sweep(self):
        """Test the logarithmic default sweep 10^2 .. 10^7 and ten repetitions."""
        # Act
        config = BenchConfig(system="phase", backend="serial")

        # Assert
        assert config.sizes == [10**k for k in range(2, 8)]
        assert config.repetitions == 10
        assert config.warmup == 1

    def test_lists_expand_to_cross_product(self):
        """Test system and backend lists."""
        # Act
        configs = expand_configs(
            {"system": ["lorenz", "phase"], "backend": ["serial", "fused"], "sizes": [10]}
        )

        # Assert
        assert [(c.system, c.backend) for c in configs] == [
            ("lorenz", "serial"),
            ("lorenz", "fused"),
            ("phase", "serial"),
            ("phase", "fused"),
        ]

    def test_unknown_key_rejected(self):
        """Test that typos in config files are reported."""
        with pytest.raises(ConfigError, match="repeats"):
            expand_configs({"system": "lorenz", "backend": "serial", "repeats": 3})

    def test_load_config_file(self, tmp_path):
        """Test reading a JSON config file."""
        # Arrange
        path = tmp_path / "bench.json"
        path.write_text(json.dumps({"system": "lorenz", "backend": "serial", "steps": 5}))

        # Act
        settings = load_config_file(path)

        # Assert
        assert settings["steps"] == 5

    def test_invalid_json_rejected(self, tmp_path):
        """Test that a broken file is a configuration error."""
        # Arrange
        path = tmp_path / "bench.json"
        path.write_text("{not json")

        # Act & Assert
        with pytest.raises(ConfigError):
            load_config_file(path)


class TestReport:
    """CSV schema and the text table."""

    @pytest.fixture
    def records(self):
        """Fixture providing a two-backend, two-size sweep with synthetic times."""
        out = []
        for backend, scale in (("serial", 1.0), ("parallel", 0.5)):
            for n in (100, 1000):
                out.append(
                    BenchRecord.from_times(
                        "lorenz", backend, False, n, 10, [scale * n / 1e4], 56 * n, 16, 100.0
                    )
                )
        return out

    def test_header_and_row_count(self, records):
        """Test the CSV header and one line per record."""
        # Act
        lines = records_to_csv(records).splitlines()

        # Assert
        assert lines[0] == (
            "system,backend,fused,N,steps,median_s,min_s,max_s,bytes,gbps,peak_frac,passes"
        )
        assert len(lines) == 5

    def test_csv_is_self_consistent(self, records):
        """Test gbps == bytes / median_s / 1e9 for every parsed row."""
        # Act
        parsed = read_csv(io.StringIO(records_to_csv(records)))

        # Assert
        for row in parsed:
            assert row.gbps == pytest.approx(row.bytes_moved / row.median_seconds / 1e9, rel=1e-15)

    def test_measured_sweep_is_self_consistent(self):
        """Test self-consistency on a real measured sweep."""
        # Arrange
        records = run_benchmark(small_config(sizes=[10, 100, 1000]))

        # Act
        parsed = read_csv(io.StringIO(records_to_csv(records)))

        # Assert
        assert len(parsed) == 3
        for row, original in zip(parsed, records):
            assert row.median_seconds == original.median_seconds
            assert row.gbps == pytest.approx(row.bytes_moved / row.median_seconds / 1e9, rel=1e-15)

    def test_failed_records_are_not_written(self):
        """Test that failed sizes are skipped in the CSV."""
        # Arrange
        failed = BenchRecord.failure("lorenz", "serial", False, 10**9, 10, "out of memory")

        # Act
        lines = records_to_csv([failed]).splitlines()

        # Assert
        assert len(lines) == 1

    def test_malformed_line_is_numbered(self):
        """Test that parse errors name the line."""
        # Arrange
        text = records_to_csv([]) + "lorenz,serial,false,10\n"

        # Act & Assert
        with pytest.raises(CsvFormatError, match="line 2") as excinfo:
            read_csv(io.StringIO(text))
        assert excinfo.value.line == 2

    def test_bad_number_is_numbered(self, records):
        """Test a non-numeric field on the third line."""
        # Arrange
        lines = records_to_csv(records).splitlines()
        lines[2] = lines[2].replace("lorenz,serial,false,1000", "lorenz,serial,false,many")

        # Act & Assert
        with pytest.raises(CsvFormatError, match="line 3"):
            read_csv(io.StringIO("\n".join(lines)))

    def test_wrong_header(self):
        """Test header validation."""
        with pytest.raises(CsvFormatError, match="line 1"):
            read_csv(io.StringIO("a,b,c\n"))

    def test_table_layout(self, records):
        """Test systems as column groups and backends as rows at the largest size."""
        # Act
        table = render_table(records)

        # Assert
        lines = table.splitlines()
        assert "lorenz (N=1000)" in lines[0]
        assert lines[1].split() == ["backend", "time", "[s]", "GB/s", "%", "peak"]
        assert lines[3].split()[0] == "serial"
        assert lines[4].split()[0] == "parallel"
        assert lines[3].split()[1] == "0.1"


class TestRelativePerformance:
    """Ratios against a reference backend."""

    def _record(self, backend, n, seconds, system="lorenz"):
        return BenchRecord.from_times(system, backend, False, n, 1, [seconds], 0, 0)

    def test_reference_row_is_one(self):
        """Test that the reference divided by itself is exactly 1."""
        # Act
        cells = relative_performance([self._record("serial", 10, 0.3)], "serial")

        # Assert
        assert cells[0].ratio == 1.0

    def test_ratio(self):
        """Test time 2.0 against reference 1.0."""
        # Act
        cells = relative_performance(
            [self._record("serial", 10, 1.0), self._record("parallel", 10, 2.0)], "serial"
        )

        # Assert
        assert [c.ratio for c in cells] == [1.0, 2.0]

    def test_missing_reference_gives_diagnostic(self):
        """Test that a cell without reference reports why instead of failing."""
        # Act
        cells = relative_performance(
            [
                self._record("serial", 10, 1.0),
                self._record("parallel", 10, 0.5),
                self._record("parallel", 20, 0.5),
            ],
            "serial",
        )

        # Assert
        assert [c.ok for c in cells] == [True, True, False]
        assert "no serial reference" in cells[2].diagnostic
        assert math.isnan(cells[2].ratio)

    def test_ratios_reproduce_csv_division(self):
        """Test that ratios equal dividing the median_s columns of the emitted CSV."""
        # Arrange
        records = [
            self._record("serial", 100, 0.125),
            self._record("fused", 100, 0.1),
            self._record("serial", 1000, 1.5),
            self._record("fused", 1000, 1.25),
        ]
        parsed = read_csv(io.StringIO(records_to_csv(records)))

        # Act
        cells = relative_performance(parsed, "serial")

        # Assert
        assert cells[1].ratio == parsed[1].median_seconds / parsed[0].median_seconds
        assert cells[3].ratio == parsed[3].median_seconds / parsed[2].median_seconds
