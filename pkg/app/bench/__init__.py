from app.bench.bytes_model import bytes_moved, rhs_bytes, spmv_bytes
from app.bench.config import BenchConfig, expand_configs, load_config_file
from app.bench.relative import RelativeCell, relative_performance
from app.bench.report import CSV_HEADER, read_csv, records_to_csv, render_table, write_csv
from app.bench.runner import BenchRecord, run_benchmark, state_checksum

__all__ = [
    "BenchConfig",
    "BenchRecord",
    "CSV_HEADER",
    "RelativeCell",
    "bytes_moved",
    "expand_configs",
    "load_config_file",
    "read_csv",
    "records_to_csv",
    "relative_performance",
    "render_table",
    "rhs_bytes",
    "run_benchmark",
    "spmv_bytes",
    "state_checksum",
    "write_csv",
]
