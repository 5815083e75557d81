"""Run configurations for the experiment scripts."""
from __future__ import annotations

from dataclasses import dataclass, field

from .hollowlab import WIDTH_THREE, default_threads


@dataclass(frozen=True)
class CensusConfig:
    seeds: tuple = WIDTH_THREE
    min_width: int = 2
    out_dir: str = "census_out"
    threads: int = field(default_factory=default_threads)

    def path_for(self, seed: str) -> str:
        return f"{self.out_dir}/census_{seed}_w{self.min_width}.jsonl"


@dataclass(frozen=True)
class LiftSearchConfig:
    """Tight-lift search over a fixed base; completeness only up to the bound."""
    base: str = "hz"
    height_bound: int = 4
    size_bound: int = 5
