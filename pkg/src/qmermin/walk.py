"""Derivative-free random-walk maximizer with step halving and seeded restarts."""
from __future__ import annotations

import hashlib
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from .errors import NumericalConsistencyError

Objective = Callable[[np.ndarray], float]


@dataclass(frozen=True)
class WalkConfig:
    start: tuple[float, ...]
    step_init: float = 5.0
    step_min: float = 1e-2
    iter_max: int = 100
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "start", tuple(float(x) for x in self.start))
        if not self.start:
            raise ValueError("start point must have at least one coordinate")
        if not 0 < self.step_min < self.step_init:
            raise ValueError("need 0 < step_min < step_init")
        if self.iter_max < 1:
            raise ValueError("iter_max must be >= 1")

    def digest(self) -> str:
        blob = json.dumps(asdict(self), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass
class WalkResult:
    argmax: np.ndarray
    value: float
    evaluations: int
    accepted: list[float] = field(default_factory=list, repr=False)


def _evaluate(objective: Objective, x: np.ndarray) -> float:
    value = float(objective(x))
    if not math.isfinite(value):
        raise NumericalConsistencyError(f"objective returned {value} at {x.tolist()}")
    return value


def optimize(objective: Objective, cfg: WalkConfig) -> WalkResult:
    """Maximize ``objective`` by an accept-if-better random walk.

    Each step moves a distance ``step`` along a direction drawn uniformly from
    the unit sphere and is kept only on strict improvement. After ``iter_max``
    consecutive rejections the step is halved; the walk ends once the step
    drops below ``step_min``.
    """
    rng = np.random.default_rng(cfg.seed)
    x = np.array(cfg.start, dtype=float)
    fx = _evaluate(objective, x)
    evaluations = 1
    accepted = [fx]
    step = cfg.step_init
    misses = 0
    while step >= cfg.step_min:
        d = rng.standard_normal(x.size)
        y = x + step * d / np.linalg.norm(d)
        fy = _evaluate(objective, y)
        evaluations += 1
        if fy > fx:
            x, fx = y, fy
            accepted.append(fx)
            misses = 0
        else:
            misses += 1
            if misses >= cfg.iter_max:
                step /= 2
                misses = 0
    value = _evaluate(objective, x)
    return WalkResult(x, value, evaluations + 1, accepted)


def derive_seed(seed: int, *keys: int) -> int:
    """Independent child seed for the stream labelled ``keys``."""
    return int(np.random.SeedSequence([seed, *keys]).generate_state(1, dtype=np.uint64)[0])


def restart_seed(seed: int, restart: int) -> int:
    return derive_seed(seed, restart)


class WalkCache:
    """JSON file of finished walks keyed by objective label and config digest.

    Purely an accelerator: a missing or deleted file only costs recomputation.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)
        self._data: dict[str, dict] = {}
        if os.path.exists(self.path):
            with open(self.path) as fh:
                self._data = json.load(fh)

    @staticmethod
    def key(label: str, cfg: WalkConfig) -> str:
        return f"{label}|{cfg.digest()}"

    def get(self, label: str, cfg: WalkConfig) -> WalkResult | None:
        hit = self._data.get(self.key(label, cfg))
        if hit is None:
            return None
        return WalkResult(np.array(hit["argmax"]), hit["value"], hit["evaluations"])

    def put(self, label: str, cfg: WalkConfig, result: WalkResult) -> None:
        self._data[self.key(label, cfg)] = {
            "argmax": result.argmax.tolist(),
            "value": result.value,
            "evaluations": result.evaluations,
        }
        tmp = self.path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(self._data, fh, indent=1, sort_keys=True)
        os.replace(tmp, self.path)


def restart_configs(cfg: WalkConfig, restarts: int) -> list[WalkConfig]:
    return [replace(cfg, seed=restart_seed(cfg.seed, r)) for r in range(restarts)]


def optimize_restarts(
    objective: Objective,
    cfg: WalkConfig,
    restarts: int = 5,
    jobs: int = 1,
) -> WalkResult:
    """Best of ``restarts`` independently seeded walks from ``cfg.start``.

    Ties go to the lowest restart index, so the result does not depend on
    ``jobs``.
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    configs = restart_configs(cfg, restarts)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: optimize(objective, c), configs))
    else:
        results = [optimize(objective, c) for c in configs]
    best = max(range(restarts), key=lambda i: (results[i].value, -i))
    return results[best]


def ones(dim: int) -> Sequence[float]:
    return (1.0,) * dim
