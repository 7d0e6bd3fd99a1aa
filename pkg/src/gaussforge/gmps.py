"""Exact integer lower bounds on EPR bonds for Gaussian matrix product states.

A chain of N sites holding M infinitely entangled ancilla bonds per link,
projected site by site, carries N(2M+1)(2M)/2 parameters; matching the
N(N-1)/2 parameters of a target N-mode pure state requires
``2M(2M+1) >= N - 1``.  For translationally invariant rings the target
count drops to the number of distinct pairwise distances
``theta(N) = (N - N mod 2)/2`` and the bound becomes
``M(2M+1) >= theta(N)``.  theta is larger for even N, which raises the
even-ring threshold and underlies nearest-neighbor entanglement
frustration in odd rings.  All searches are exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class BondAnalysis:
    """Bond-count bounds for one ring/chain size.

    Attributes:
        n_modes: number of sites N.
        theta: distinct pairwise distances on the ring, (N - N mod 2)/2.
        min_bonds_general: minimal M with 2M(2M+1) >= N - 1.
        min_bonds_invariant: minimal M with M(2M+1) >= theta.
        parity_note: "odd" or "even".
        scaling_ratio: min_bonds_general / sqrt(N), the square-root
            scaling check.
    """

    n_modes: int
    theta: int
    min_bonds_general: int
    min_bonds_invariant: int
    parity_note: str
    scaling_ratio: float

    def to_dict(self) -> dict:
        return {
            "n_modes": self.n_modes,
            "theta": self.theta,
            "min_bonds_general": self.min_bonds_general,
            "min_bonds_invariant": self.min_bonds_invariant,
            "parity": self.parity_note,
            "scaling_ratio": self.scaling_ratio,
        }


def min_bonds_general(n_modes: int) -> int:
    """Smallest integer M >= 1 with 2M(2M+1) >= N - 1.

    Seeded by an integer square root, then corrected by direct search, so
    exact-threshold sizes resolve unambiguously without floating point.
    """
    if n_modes < 2:
        raise ValueError(f"n_modes must be >= 2, got {n_modes}")
    m = max(1, (math.isqrt(4 * n_modes - 3) - 1) // 4)
    while 2 * m * (2 * m + 1) < n_modes - 1:
        m += 1
    while m > 1 and 2 * (m - 1) * (2 * m - 1) >= n_modes - 1:
        m -= 1
    return m


def theta(n_modes: int) -> int:
    """Distinct pairwise distances on an N-site ring: (N - N mod 2)/2."""
    if n_modes < 1:
        raise ValueError(f"n_modes must be >= 1, got {n_modes}")
    return (n_modes - n_modes % 2) // 2


def min_bonds_invariant(n_modes: int) -> int:
    """Smallest integer M >= 1 with M(2M+1) >= theta(N), exact search."""
    if n_modes < 2:
        raise ValueError(f"n_modes must be >= 2, got {n_modes}")
    target = theta(n_modes)
    m = max(1, (math.isqrt(8 * target + 1) - 1) // 4)
    while m * (2 * m + 1) < target:
        m += 1
    while m > 1 and (m - 1) * (2 * m - 1) >= target:
        m -= 1
    return m


def parity_table(n_min: int, n_max: int) -> list:
    """Bond analysis over an inclusive range of sizes.

    Args:
        n_min: smallest size, at least 2.
        n_max: largest size, at least n_min.
    """
    if n_min < 2:
        raise ValueError(f"n_min must be >= 2, got {n_min}")
    if n_max < n_min:
        raise ValueError(f"n_max ({n_max}) must be >= n_min ({n_min})")
    rows = []
    for n in range(n_min, n_max + 1):
        general = min_bonds_general(n)
        rows.append(
            BondAnalysis(
                n_modes=n,
                theta=theta(n),
                min_bonds_general=general,
                min_bonds_invariant=min_bonds_invariant(n),
                parity_note="odd" if n % 2 else "even",
                scaling_ratio=general / math.sqrt(n),
            )
        )
    return rows


def table_csv(rows) -> str:
    """Render bond analyses as CSV with columns N, theta, M_general, M_invariant, parity."""
    lines = ["N,theta,M_general,M_invariant,parity"]
    for row in rows:
        lines.append(
            f"{row.n_modes},{row.theta},{row.min_bonds_general},"
            f"{row.min_bonds_invariant},{row.parity_note}"
        )
    return "\n".join(lines) + "\n"
