"""Named and parametric matrix generators.

Generator specs are small strings used by the CLI and tests:

* ``paper-t10``                      the 10x10 mixed-magnitude instance with
                                     three zero off-diagonal entries;
* ``matrix-2016``                    the 6x6 Toeplitz(1, 2016, 1);
* ``toeplitz(n, sub, diag, super)``  constant bands;
* ``random(n, seed, magnitude, zero_probability)``
                                     entries uniform on [-magnitude,
                                     magnitude], each off-diagonal entry
                                     independently zeroed with the given
                                     probability, redrawn (at most 100
                                     times) while the pivoted oracle calls
                                     the draw singular.

``generate`` accepts either a spec string or a parsed :class:`GeneratorSpec`.
"""

from dataclasses import dataclass

import numpy as np

from .core import TridiagonalMatrix, make_tridiagonal
from .errors import SingularMatrixError
from .matio import parse_number

__all__ = [
    "GeneratorSpec",
    "parse_generator",
    "generate",
    "t10",
    "toeplitz",
    "random_tridiagonal",
]

NAMED_KINDS = ("paper-t10", "matrix-2016")
PARAMETRIC_KINDS = ("toeplitz", "random")

MAX_REDRAWS = 100


@dataclass(frozen=True)
class GeneratorSpec:
    """A parsed generator: ``kind`` plus the parameters that kind uses."""

    kind: str
    n: int = 0
    sub: float = 0.0
    diag: float = 0.0
    sup: float = 0.0
    seed: int = 0
    magnitude: float = 0.0
    zero_probability: float = 0.0


def parse_generator(text: str) -> GeneratorSpec:
    """Parse a generator spec string.

    Raises ValueError (with the offending text) on anything malformed.
    """
    s = text.strip()
    if s in NAMED_KINDS:
        return GeneratorSpec(kind=s)
    if "(" in s and s.endswith(")"):
        kind, _, inner = s[:-1].partition("(")
        kind = kind.strip()
        args = [a.strip() for a in inner.split(",")] if inner.strip() else []
        if kind == "toeplitz":
            if len(args) != 4:
                raise ValueError(
                    f"toeplitz needs 4 parameters (n, sub, diag, super), got {len(args)}: {text!r}"
                )
            n = int(args[0])
            if n < 1:
                raise ValueError(f"toeplitz order must be >= 1, got {n}")
            return GeneratorSpec(
                kind="toeplitz",
                n=n,
                sub=parse_number(args[1]),
                diag=parse_number(args[2]),
                sup=parse_number(args[3]),
            )
        if kind == "random":
            if len(args) != 4:
                raise ValueError(
                    "random needs 4 parameters (n, seed, magnitude, "
                    f"zero_probability), got {len(args)}: {text!r}"
                )
            n = int(args[0])
            seed = int(args[1])
            magnitude = parse_number(args[2])
            zero_probability = parse_number(args[3])
            if n < 1:
                raise ValueError(f"random order must be >= 1, got {n}")
            if magnitude <= 0:
                raise ValueError(f"random magnitude must be > 0, got {magnitude}")
            if not 0.0 <= zero_probability < 1.0:
                raise ValueError(
                    f"zero_probability must lie in [0, 1), got {zero_probability}"
                )
            return GeneratorSpec(
                kind="random",
                n=n,
                seed=seed,
                magnitude=magnitude,
                zero_probability=zero_probability,
            )
    raise ValueError(
        f"unknown generator spec {text!r}; expected paper-t10, matrix-2016, "
        "toeplitz(n, sub, diag, super) or random(n, seed, magnitude, zero_probability)"
    )


def t10() -> TridiagonalMatrix:
    """The 10x10 instance with entries spanning eight orders of magnitude.

    Its bands mix integers with small rationals and contain three zero
    off-diagonal entries (a[1,2], a[9,8] and a[10,9]), so it exercises the
    zero-structure branches; its condition number is near 6e8.
    """
    diag = [1.0, 1 / 98, 1 / 84, 1 / 53, 92.0, 55.0, 86.0, 1 / 84, 1 / 49, 83.0]
    sup = [0.0, 1 / 83, 1 / 70, 1 / 65, 1 / 49, 16.0, 49.0, 57.0, 70.0]
    sub = [79.0, 61.0, 18.0, 3.0, 1 / 32, 1 / 37, 1 / 45, 0.0, 0.0]
    return make_tridiagonal(sub, diag, sup)


def toeplitz(n: int, sub: float, diag: float, sup: float) -> TridiagonalMatrix:
    """Constant-band tridiagonal matrix of order n."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return make_tridiagonal(
        np.full(n - 1, float(sub)), np.full(n, float(diag)), np.full(n - 1, float(sup))
    )


def random_tridiagonal(
    n: int, seed: int, magnitude: float, zero_probability: float = 0.0
) -> TridiagonalMatrix:
    """Random bands, uniform on [-magnitude, magnitude], optional exact zeros.

    Each off-diagonal entry is independently replaced by exact 0.0 with
    probability ``zero_probability``.  Draws the oracle calls singular (an
    exactly zero pivot) are rejected, at most :data:`MAX_REDRAWS` times.
    """
    from .oracle import gepp_factorize

    rng = np.random.default_rng(seed)
    for _ in range(MAX_REDRAWS):
        diag = rng.uniform(-magnitude, magnitude, size=n)
        sub = rng.uniform(-magnitude, magnitude, size=n - 1)
        sup = rng.uniform(-magnitude, magnitude, size=n - 1)
        if zero_probability > 0.0 and n > 1:
            sub[rng.random(n - 1) < zero_probability] = 0.0
            sup[rng.random(n - 1) < zero_probability] = 0.0
        A = make_tridiagonal(sub, diag, sup)
        try:
            gepp_factorize(A)
        except SingularMatrixError:
            continue
        return A
    raise RuntimeError(
        f"no nonsingular draw in {MAX_REDRAWS} attempts "
        f"(n={n}, seed={seed}, magnitude={magnitude}, zero_probability={zero_probability})"
    )


def generate(spec) -> TridiagonalMatrix:
    """Instantiate a generator spec (string or :class:`GeneratorSpec`)."""
    if isinstance(spec, str):
        spec = parse_generator(spec)
    if spec.kind == "paper-t10":
        return t10()
    if spec.kind == "matrix-2016":
        return toeplitz(6, 1.0, 2016.0, 1.0)
    if spec.kind == "toeplitz":
        return toeplitz(spec.n, spec.sub, spec.diag, spec.sup)
    if spec.kind == "random":
        return random_tridiagonal(spec.n, spec.seed, spec.magnitude, spec.zero_probability)
    raise ValueError(f"unknown generator kind {spec.kind!r}")
