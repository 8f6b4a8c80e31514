import os
from dataclasses import dataclass

from scripts.errors import InvalidParameter

# --- Guards ---
DUAL_LENGTH_GUARD = 12           # 4^12 words is still a desk-scale scan
NICE_LENGTH_DEFAULT = 6          # niceness is tabulated up to n = 6
CLASSIFY_LENGTH_GUARD = 7
INSPECT_DUAL_LISTING_GUARD = 8
OPTIMAL_INDEX_CAP = 10 ** 6
DEFAULT_SHARD_SIZE = 4096
DENSE_LENGTH_LIMIT = 16          # codes are held as dense arrays of packed words
SPAN_SIZE_CAP = 1 << 24

JOBS_ENV_VAR = "NUR4_JOBS"

NICE_POLICIES = ("left", "right", "both", "intersection")
EMIT_CHOICES = ("summary", "full")
FORMAT_CHOICES = ("json", "csv", "xlsx")


def default_jobs():
    """Worker count from NUR4_JOBS, 1 when unset."""
    raw = os.environ.get(JOBS_ENV_VAR, "").strip()
    if not raw:
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise InvalidParameter(f"{JOBS_ENV_VAR} must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise InvalidParameter(f"{JOBS_ENV_VAR} must be >= 1, got {jobs}")
    return jobs


@dataclass(frozen=True)
class RunConfig:
    """Everything a `classify` run needs, as collected from flags and environment."""
    n: int
    k0: int | None = None
    k1: int | None = None
    nice_policy: str = "both"
    with_nice: bool = False
    allow_long_nice: bool = False
    emit: str = "summary"
    format: str = "json"
    out_path: str = "."
    jobs: int = 1
    optimal_cap: int = OPTIMAL_INDEX_CAP
    with_codewords: bool = False
    progress: bool = True

    def validate(self):
        if self.jobs < 1:
            raise InvalidParameter(f"jobs must be >= 1, got {self.jobs}")
        if not 1 <= self.n <= CLASSIFY_LENGTH_GUARD:
            raise InvalidParameter(f"n must lie in 1..{CLASSIFY_LENGTH_GUARD}, got {self.n}")
        if (self.k0 is None) != (self.k1 is None):
            raise InvalidParameter("--k0 and --k1 must be given together")
        if self.nice_policy not in NICE_POLICIES:
            raise InvalidParameter(f"unknown nice policy {self.nice_policy!r}")
        if self.emit not in EMIT_CHOICES:
            raise InvalidParameter(f"unknown emit mode {self.emit!r}")
        if self.format not in FORMAT_CHOICES:
            raise InvalidParameter(f"unknown format {self.format!r}")
        if self.optimal_cap < 0:
            raise InvalidParameter("optimal cap must be non-negative")
        if self.with_nice and self.n > NICE_LENGTH_DEFAULT and not self.allow_long_nice:
            raise InvalidParameter(
                f"nice computation is limited to n <= {NICE_LENGTH_DEFAULT}; "
                "pass --allow-long-nice to unlock it")
        return self
