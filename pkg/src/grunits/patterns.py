"""Group-side realizability of mixed-class patterns in PSL(2,p^2).

A Sylow p-subgroup is modeled as the additive group of F_(p^2); an
order-p element with parameter lambda lies in the class c exactly when
lambda is a square of F_(p^2)^* (validated against brute-force conjugacy
in the enumerated group for small p).  A pair (g, h) with g of square and
h of non-square parameter realizes the pattern {i : g + i*h has square
parameter}.  Square scaling leaves the pattern invariant, so g may be
normalized to 1; the full (lambda, mu) enumeration is kept as an internal
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from itertools import combinations

from .finitefield import fq_make


@dataclass(frozen=True)
class Pattern:
    p: int
    members: frozenset[int]

    def is_balanced(self) -> bool:
        return len(self.members) == (self.p - 1) // 2

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


def _pattern_of(f, lam, mu) -> frozenset[int]:
    out = []
    for i in range(1, f.p):
        v = f.add(lam, f.mul(f.scalar(i), mu))
        if f.is_square(v):
            out.append(i)
    return frozenset(out)


def group_patterns(p: int) -> set[frozenset[int]]:
    """All patterns realized by pairs (g, h), g square class, h non-square."""
    f = fq_make(p)
    nonsquares = [e for e in f.elements() if e != f.zero and not f.is_square(e)]
    normalized = {_pattern_of(f, f.one, mu) for mu in nonsquares}
    squares = [e for e in f.elements() if e != f.zero and f.is_square(e)]
    full = {
        _pattern_of(f, lam, mu) for lam in squares for mu in nonsquares
    }
    if full != normalized:
        raise AssertionError("square-scaling normalization failed")
    return normalized


def balanced_patterns(p: int) -> list[frozenset[int]]:
    half = (p - 1) // 2
    return [frozenset(c) for c in combinations(range(1, p), half)]


def gap_report(p: int) -> dict:
    """Count balanced patterns against realizable ones and certify any gap."""
    realizable = group_patterns(p)
    half = (p - 1) // 2
    n_balanced = comb(p - 1, half)
    bound = (p * p - 1) // 2
    report = {
        "p": p,
        "balanced": n_balanced,
        "realizable": len(realizable),
        "pair_count_bound": bound,
        "counting_gap": n_balanced > bound,
        "gap": n_balanced > len(realizable),
    }
    if n_balanced <= 4096:
        missing = sorted(
            sorted(s) for s in set(balanced_patterns(p)) - realizable
        )
        report["missing"] = missing
    return report
