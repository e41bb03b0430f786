"""
Run configuration for verification suites.
"""
from dataclasses import dataclass, field
from typing import Optional

from config import settings
from src.core.exceptions import ConfigError

SUITE_NAMES = ("algebra", "appell", "fueter", "elementary", "rkhs", "polyanalytic")
OUTPUT_FORMATS = ("json", "csv", "text")
PROFILES = ("quick", "acceptance")

# Minimum sample sizes per randomized check under the acceptance profile.
ACCEPTANCE_FLOORS = {
    "products": 1000,
    "diagram": 50,
    "range": 100,
    "operators": 200,
    "bound-points": 500,
}


@dataclass(frozen=True)
class RunConfig:
    """Parameters shared by every suite."""

    n: int = 3
    truncation: int = 12
    tolerance: float = field(default_factory=lambda: settings.DEFAULT_TOLERANCE)
    seed: int = field(default_factory=lambda: settings.DEFAULT_SEED)
    output_format: str = "json"
    suite: str = "all"
    trials: int = 20
    max_k: int = 12
    max_degree: int = 7
    m: int = 2
    timings: bool = False
    profile: str = "quick"

    def __post_init__(self) -> None:
        """Validate ranges; raises ConfigError."""
        if self.n < 1 or self.n % 2 == 0:
            raise ConfigError(f"n must be odd and >= 1, got {self.n}")
        if self.n > settings.MAX_DIMENSION:
            raise ConfigError(f"n={self.n} exceeds the maximum dimension {settings.MAX_DIMENSION}")
        if self.tolerance <= 0:
            raise ConfigError(f"Tolerance must be positive, got {self.tolerance}")
        if self.truncation < 0:
            raise ConfigError(f"Truncation must be nonnegative, got {self.truncation}")
        if self.trials < 1:
            raise ConfigError(f"Trials must be at least 1, got {self.trials}")
        if self.max_k < 0 or self.max_degree < 0 or self.m < 0:
            raise ConfigError("max_k, max_degree and m must be nonnegative")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format {self.output_format!r}")
        if self.suite != "all" and self.suite not in SUITE_NAMES:
            raise ConfigError(f"Unknown suite {self.suite!r}; choose from {', '.join(SUITE_NAMES)} or all")
        if self.profile not in PROFILES:
            raise ConfigError(f"Unknown profile {self.profile!r}; choose from {', '.join(PROFILES)}")

    def count(self, check: str, base: Optional[int] = None) -> int:
        """
        Number of random trials for a check.

        Starts from base (default: trials); the acceptance profile raises it to
        the floor listed in ACCEPTANCE_FLOORS.
        """
        value = self.trials if base is None else base
        if self.profile == "acceptance":
            value = max(value, ACCEPTANCE_FLOORS.get(check, 0))
        return value
