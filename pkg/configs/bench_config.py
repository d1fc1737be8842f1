import os
from dotenv import load_dotenv

load_dotenv()

benchRepetitions = int(os.getenv("BENCH_REPETITIONS", "10"))
benchWarmup = int(os.getenv("BENCH_WARMUP", "1"))
benchSteps = int(os.getenv("BENCH_STEPS", "100"))
benchDt = float(os.getenv("BENCH_DT", "0.01"))
benchSeed = int(os.getenv("BENCH_SEED", "42"))
benchPeakGbps = os.getenv("BENCH_PEAK_GBPS")

# Logarithmic sweep 10^2 .. 10^7
benchSizes = [10**k for k in range(2, 8)]


bench_config_dict = {
    "BENCH_SIZES": benchSizes,
    "BENCH_STEPS": benchSteps,
    "BENCH_REPETITIONS": benchRepetitions,
    "BENCH_WARMUP": benchWarmup,
    "BENCH_DT": benchDt,
    "BENCH_SEED": benchSeed,
    "BENCH_PEAK_GBPS": float(benchPeakGbps) if benchPeakGbps else None,
}
