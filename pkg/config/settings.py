"""
Global configuration settings for crcartan.

Values are read from environment variables, which can be conveniently
managed via a local ".env" file (see env.example).
"""

import os

from dotenv import load_dotenv

# Load variables from .env if present (safe no-op in production).
load_dotenv()

DEFAULT_SEED: int = int(os.getenv("CRCARTAN_SEED", "0"))
SAMPLE_COUNT: int = int(os.getenv("CRCARTAN_SAMPLES", "20"))
NUMERATOR_BOUND: int = int(os.getenv("CRCARTAN_NUMERATOR_BOUND", "16"))
DENOMINATOR_BOUND: int = int(os.getenv("CRCARTAN_DENOMINATOR_BOUND", "16"))
MAX_REJECTIONS_PER_POINT: int = int(os.getenv("CRCARTAN_MAX_REJECTIONS", "25"))

# Float mode never drops below 60 significant bits.
PRECISION_BITS: int = max(60, int(os.getenv("CRCARTAN_PRECISION_BITS", "96")))
FLOAT_TOLERANCE: float = float(os.getenv("CRCARTAN_FLOAT_TOLERANCE", "1e-9"))

LOG_LEVEL: str = os.getenv("CRCARTAN_LOG_LEVEL", "WARNING")

REPORT_SCHEMA_VERSION = "1.0"

SCALAR_MODES = ["exact", "float"]

OUTPUT_FORMATS = ["json", "text"]

VERIFY_SUITES = [
    "brackets",
    "structure",
    "lemmas",
    "invariants",
    "model",
    "liealg",
    "all",
]


def env_seed() -> int:
    """Seed from CRCARTAN_SEED as currently set, falling back to DEFAULT_SEED."""
    raw = os.getenv("CRCARTAN_SEED")
    if raw is None or not raw.strip():
        return DEFAULT_SEED
    return int(raw)
