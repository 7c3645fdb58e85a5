import os
from dotenv import load_dotenv

load_dotenv()


def parse_bool(value: str) -> bool:
    return str(value).strip().lower() in {"1", "true", "yes", "on"}


class Config:
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

    # Worker processes for simulation and certification
    ECC_WORKERS = int(os.getenv("ECC_WORKERS", "1"))

    # Exhaustive 3-wise certification is capped here unless --long-running
    ECC_CERTIFY_MAX_R = int(os.getenv("ECC_CERTIFY_MAX_R", "8"))

    # Random codewords per exhaustive sweep (the all-zero word is always added)
    ECC_SWEEP_CODEWORDS = int(os.getenv("ECC_SWEEP_CODEWORDS", "10"))

    ECC_DEFAULT_SEED = int(os.getenv("ECC_DEFAULT_SEED", "2024"))
    ECC_RESULTS_PATH = os.getenv("ECC_RESULTS_PATH", "ecc_results.json")
    ECC_STRICT = parse_bool(os.getenv("ECC_STRICT", "false"))


def resolve_workers(workers: int | None = None) -> int:
    """
    Pick the worker count for partitioned jobs.

    An explicit value wins; otherwise the environment default applies.
    Anything below one is treated as one.
    """
    value = Config.ECC_WORKERS if workers is None else workers
    return max(1, int(value))
