"""Linear-optics engineering of pure N-mode Gaussian states.

The pipeline consumes exactly N(N-1)/2 free parameters: one seed
squeezing shared antisymmetrically by the first two modes, one squeezing
per mode 3..N, and one transmittivity per mode pair (j, i) with
2 <= j < i <= N.  Each additional mode is squeezed and then mixed with
every earlier mode (except the first) through a chain of beam splitters,
so the two-mode entanglement created by the seed gets distributed across
the register.  A final, fully determined balancing squeeze on every mode
leaves all single-mode blocks proportional to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputFormatError, RecipeError
from .symplectic import (
    CovarianceMatrix,
    apply_symplectic,
    beam_splitter,
    squeezer,
    vacuum_cm,
)

# transmittivities this close to 0 or 1 degenerate toward a product state
DEGENERACY_MARGIN = 1e-3


def parameter_count(n_modes: int) -> int:
    """Number of free parameters for an N-mode state: N(N-1)/2, exactly."""
    if n_modes < 1:
        raise ValueError(f"n_modes must be >= 1, got {n_modes}")
    return n_modes * (n_modes - 1) // 2


@dataclass(frozen=True)
class Recipe:
    """Parameter set for the engineering pipeline.

    Attributes:
        n_modes: number of modes N, at least 2.
        s: seed squeezing shared by modes 1 and 2 (mode 2 gets 1/s).
        r: squeezing factor per mode, keyed by mode index 3..N.
        b: transmittivity per beam-splitter pair, keyed by (j, i) with
            2 <= j < i <= N; applied in ascending i, then ascending j.
    """

    n_modes: int
    s: float
    r: dict = field(default_factory=dict)
    b: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        """JSON-ready document with string keys for ``r`` and a pair list for ``b``."""
        return {
            "n_modes": self.n_modes,
            "s": float(self.s),
            "r": {str(i): float(v) for i, v in sorted(self.r.items())},
            "b": [
                {"j": j, "i": i, "t": float(t)}
                for (j, i), t in sorted(self.b.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Recipe":
        """Parse the recipe document, validating the schema (not the physics)."""
        if not isinstance(doc, dict):
            raise InputFormatError("recipe document must be a JSON object")
        for key in ("n_modes", "s"):
            if key not in doc:
                raise InputFormatError(f"recipe document missing key {key!r}")
        n_modes = doc["n_modes"]
        if not isinstance(n_modes, int) or n_modes < 2:
            raise InputFormatError("n_modes must be an integer >= 2")
        if not isinstance(doc["s"], (int, float)) or isinstance(doc["s"], bool):
            raise InputFormatError("s must be a number")
        r = {}
        for key, value in doc.get("r", {}).items():
            try:
                index = int(key)
            except (TypeError, ValueError):
                raise InputFormatError(f"r key {key!r} is not an integer") from None
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise InputFormatError(f"r[{key!r}] must be a number")
            r[index] = float(value)
        b = {}
        for entry in doc.get("b", []):
            if not isinstance(entry, dict) or not {"j", "i", "t"} <= set(entry):
                raise InputFormatError(
                    'each b entry must be an object with keys "j", "i", "t"'
                )
            j, i, t = entry["j"], entry["i"], entry["t"]
            if not isinstance(j, int) or not isinstance(i, int):
                raise InputFormatError("b indices j, i must be integers")
            if not isinstance(t, (int, float)) or isinstance(t, bool):
                raise InputFormatError("b transmittivity t must be a number")
            if (j, i) in b:
                raise InputFormatError(f"duplicate beam-splitter pair ({j}, {i})")
            b[(j, i)] = float(t)
        return cls(n_modes, float(doc["s"]), r, b)


@dataclass(frozen=True)
class RecipeValidation:
    """Validation outcome; truthy iff there are no errors (warnings allowed)."""

    errors: tuple
    warnings: tuple

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok


def validate_recipe(recipe: Recipe) -> RecipeValidation:
    """Check counts, ranges, and pair coverage of a recipe.

    Every pair (j, i) with 2 <= j < i <= N must appear exactly once, all
    squeezings must be positive, and transmittivities must lie strictly
    inside (0, 1).  Transmittivities within ``DEGENERACY_MARGIN`` of the
    boundary only produce warnings: the state then degenerates toward a
    product across that link but remains valid.
    """
    errors = []
    warnings = []
    n = recipe.n_modes
    if n < 2:
        errors.append(f"n_modes must be >= 2, got {n}")
        return RecipeValidation(tuple(errors), tuple(warnings))
    if not recipe.s > 0.0:
        errors.append(f"seed squeezing s must be positive, got {recipe.s}")

    expected_r = set(range(3, n + 1))
    for index in sorted(expected_r - set(recipe.r)):
        errors.append(f"missing mode squeezing r[{index}]")
    for index in sorted(set(recipe.r) - expected_r):
        errors.append(f"unexpected mode squeezing r[{index}] for {n} modes")
    for index in sorted(expected_r & set(recipe.r)):
        if not recipe.r[index] > 0.0:
            errors.append(f"r[{index}] must be positive, got {recipe.r[index]}")

    expected_b = {(j, i) for i in range(3, n + 1) for j in range(2, i)}
    for j, i in sorted(expected_b - set(recipe.b), key=lambda p: (p[1], p[0])):
        errors.append(f"missing pair ({j}, {i})")
    for j, i in sorted(set(recipe.b) - expected_b, key=lambda p: (p[1], p[0])):
        errors.append(f"unexpected pair ({j}, {i}) for {n} modes")
    for j, i in sorted(expected_b & set(recipe.b), key=lambda p: (p[1], p[0])):
        t = recipe.b[(j, i)]
        if not 0.0 < t < 1.0:
            errors.append(
                f"transmittivity b[({j}, {i})] must lie strictly in (0, 1), got {t}"
            )
        elif t < DEGENERACY_MARGIN or t > 1.0 - DEGENERACY_MARGIN:
            warnings.append(
                f"b[({j}, {i})] = {t} is within {DEGENERACY_MARGIN} of the boundary; "
                "the state degenerates toward a product across this link"
            )
    return RecipeValidation(tuple(errors), tuple(warnings))


def _build(recipe: Recipe):
    """Run the full pipeline; returns (cm, number of free parameters used)."""
    check = validate_recipe(recipe)
    if not check:
        raise RecipeError("; ".join(check.errors))
    n = recipe.n_modes
    free = 0

    cm = vacuum_cm(n)
    # seed: squeeze modes 1 and 2 in orthogonal quadratures, mix 50:50
    cm = apply_symplectic(cm, squeezer(n, 1, recipe.s))
    free += 1
    cm = apply_symplectic(cm, squeezer(n, 2, 1.0 / recipe.s))  # fixed by s
    cm = apply_symplectic(cm, beam_splitter(n, 1, 2, 0.5))  # fixed 50:50
    # distribute: each new mode is squeezed, then mixed with modes 2..i-1
    for i in range(3, n + 1):
        cm = apply_symplectic(cm, squeezer(n, i, recipe.r[i]))
        free += 1
        for j in range(2, i):
            cm = apply_symplectic(cm, beam_splitter(n, j, i, recipe.b[(j, i)]))
            free += 1
    # balance: per-mode squeezes fixed by the state itself, making every
    # single-mode block proportional to the identity
    for k in range(1, n + 1):
        block = cm.mode_block(k)
        t = (block[1, 1] / block[0, 0]) ** 0.25
        cm = apply_symplectic(cm, squeezer(n, k, t))
    return cm, free


def engineer_state(recipe: Recipe) -> CovarianceMatrix:
    """Build the pure N-mode state described by a recipe.

    The output is q-p block diagonal (all position-momentum covariances
    vanish) with every single-mode block proportional to the identity.

    Raises:
        RecipeError: if :func:`validate_recipe` reports errors.
    """
    return _build(recipe)[0]


def free_parameter_audit(recipe: Recipe) -> int:
    """Run the pipeline and count the free parameters it actually consumed.

    Squeezings and transmittivities fixed by other parameters or by the
    evolving state (the mode-2 partner squeeze, the 50:50 seed splitter,
    the final balancing squeezes) do not count.
    """
    return _build(recipe)[1]


def random_recipe(n_modes: int, seed: int, s_max: float = 4.0) -> Recipe:
    """Draw a valid recipe deterministically from a seed.

    Squeezings (seed and per-mode) are log-uniform on [1/s_max, s_max];
    transmittivities are uniform on [0.05, 0.95].

    Args:
        n_modes: number of modes, at least 2.
        seed: RNG seed; equal seeds give identical recipes.
        s_max: upper squeezing bound, strictly greater than 1.
    """
    if n_modes < 2:
        raise ValueError(f"n_modes must be >= 2, got {n_modes}")
    if not s_max > 1.0:
        raise ValueError(f"s_max must exceed 1, got {s_max}")
    rng = np.random.default_rng(seed)
    log_bound = np.log(s_max)

    def draw_squeezing() -> float:
        return float(np.exp(rng.uniform(-log_bound, log_bound)))

    s = draw_squeezing()
    r = {i: draw_squeezing() for i in range(3, n_modes + 1)}
    b = {
        (j, i): float(rng.uniform(0.05, 0.95))
        for i in range(3, n_modes + 1)
        for j in range(2, i)
    }
    return Recipe(n_modes, s, r, b)
