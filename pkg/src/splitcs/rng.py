"""Counter-based random streams keyed by (master seed, purpose key).

Every stream is an immutable descriptor; the underlying Philox generator is
rebuilt from scratch on each use, so draws are a pure function of
(master_seed, key, counter) and independent of worker scheduling.  Normal
variates are produced by the Box-Muller transform over the stream's uniform
output (fixed here so results do not depend on numpy's choice of normal
algorithm).
"""

import math
from dataclasses import dataclass, replace

import numpy as np

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RngStream:
    """Descriptor of a deterministic substream."""

    master_seed: int
    key: tuple[int, ...]
    counter: int = 0

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(self.master_seed, spawn_key=self.key)
        bit_gen = np.random.Philox(seq)
        if self.counter:
            bit_gen.advance(self.counter)
        return np.random.Generator(bit_gen)

    def advanced(self, steps: int) -> "RngStream":
        """A new descriptor ``steps`` raw draws further along the counter."""
        return replace(self, counter=self.counter + steps)


def substream(master_seed: int, key) -> RngStream:
    """Derive the stream for a purpose key, e.g. (experiment, dim, rep)."""
    if master_seed < 0:
        raise ValueError(f"master seed must be non-negative, got {master_seed}")
    key = tuple(int(k) for k in key)
    if any(k < 0 for k in key):
        raise ValueError(f"stream key entries must be non-negative, got {key}")
    return RngStream(int(master_seed), key)


def standard_normals(gen: np.random.Generator, count: int) -> np.ndarray:
    """``count`` iid N(0,1) draws via Box-Muller on ``gen``'s uniforms."""
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    pairs = (count + 1) // 2
    if pairs == 0:
        return np.empty(0)
    u1 = 1.0 - gen.random(pairs)  # (0, 1], keeps the log finite
    u2 = gen.random(pairs)
    radius = np.sqrt(-2.0 * np.log(u1))
    out = np.empty(2 * pairs)
    out[0::2] = radius * np.cos(_TWO_PI * u2)
    out[1::2] = radius * np.sin(_TWO_PI * u2)
    return out[:count]


def normal_matrix(stream: RngStream, shape: tuple[int, ...]) -> np.ndarray:
    """Row-major matrix of iid standard normals from ``stream``."""
    size = int(np.prod(shape)) if shape else 1
    return standard_normals(stream.generator(), size).reshape(shape)


def logistic_draws(gen: np.random.Generator, count: int) -> np.ndarray:
    """Standard logistic draws via the inverse CDF on ``gen``'s uniforms."""
    u = gen.random(count)
    tiny = 1e-300
    return np.log(np.maximum(u, tiny)) - np.log(np.maximum(1.0 - u, tiny))


def mvn_sample(mean, chol_factor, rng: RngStream) -> np.ndarray:
    """One draw of N(mean, L L^T) as mean + L g, g from ``rng``."""
    mean = np.asarray(mean, dtype=np.float64)
    lo = np.asarray(chol_factor, dtype=np.float64)
    if lo.ndim != 2 or lo.shape[0] != lo.shape[1] or lo.shape[0] != mean.shape[0]:
        raise ValueError(
            f"factor shape {lo.shape} does not match mean of length {mean.shape[0]}"
        )
    g = standard_normals(rng.generator(), mean.shape[0])
    return mean + lo @ g


def mvn_matrix(mean, chol_factor, stream: RngStream, n: int) -> np.ndarray:
    """(n, d) draws of N(mean, L L^T) from a single stream."""
    mean = np.asarray(mean, dtype=np.float64)
    lo = np.asarray(chol_factor, dtype=np.float64)
    d = mean.shape[0]
    g = normal_matrix(stream, (n, d))
    return mean + g @ lo.T
