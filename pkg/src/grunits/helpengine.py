"""Character-restriction constraints on hypothesized elementary-abelian units.

A hypothesized subgroup U = C_p^k of normalized units assigns each of its
(p^k-1)/(p-1) cyclic subgroups to one of the two order-p classes of G.
Restricting a character theta of G to U must decompose into linear
characters of U with non-negative integer multiplicities; scanning the
class distributions for which that holds is the feasibility question.

All multiplicities are computed exactly.  The direct definition

    <theta|_U, chi> = (1/p^k) sum_{w in U} theta(class(w)) conj(chi(w))

is implemented verbatim in :func:`multiplicity`; scans use the equivalent
closed form obtained by summing each cyclic subgroup first (the root-of-
unity sum over a line is p-1 on the kernel and -1 off it), which keeps the
largest scans instant.  Tests pin the two routes against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .chardata import CharSlice, TableSlice
from .cyclotomic import Cyclotomic, cyclo, format_rational


class UnassignedClass(Exception):
    pass


Point = tuple[int, ...]


def subgroup_points(p: int, rank: int) -> list[Point]:
    """Canonical generators of the cyclic subgroups of C_p^rank.

    Normalized so the first nonzero coordinate is 1; lexicographic order.
    """
    points = []
    for v in itertools.product(range(p), repeat=rank):
        if any(v):
            lead = next(c for c in v if c)
            if lead == 1:
                points.append(v)
    return points


def hyperplane_table(p: int, rank: int) -> list[tuple[Point, frozenset[int]]]:
    """For each normalized nonzero functional e, the point indices it kills."""
    points = subgroup_points(p, rank)
    table = []
    for e in points:  # dual space points, same normalization
        inside = frozenset(
            i
            for i, v in enumerate(points)
            if sum(a * b for a, b in zip(e, v)) % p == 0
        )
        table.append((e, inside))
    return table


@dataclass(frozen=True)
class Assignment:
    """Map from each cyclic subgroup of U = C_p^rank to an order-p class id."""

    p: int
    rank: int
    subgroup_classes: dict[Point, str]

    def class_of(self, w: Point) -> str:
        lead = next(c for c in w if c)
        inv = pow(lead, -1, self.p)
        point = tuple(c * inv % self.p for c in w)
        try:
            return self.subgroup_classes[point]
        except KeyError as exc:
            raise UnassignedClass(f"no class assigned to subgroup {point}") from exc


def linear_characters(p: int, rank: int) -> list[Point]:
    return list(itertools.product(range(p), repeat=rank))


def multiplicity(theta: CharSlice, a: Assignment, chi: Point) -> Cyclotomic:
    """Exact inner product of theta restricted to U with the linear character chi.

    chi is given by its exponent vector: chi(w) = zeta_p^(chi . w).
    """
    p, rank = a.p, a.rank
    total = Cyclotomic.from_rational(0, p)
    for w in itertools.product(range(p), repeat=rank):
        if any(w):
            value = theta.values[a.class_of(w)]
        else:
            value = Fraction(theta.degree)
        e = sum(c * x for c, x in zip(chi, w)) % p
        total = total + cyclo(p, -e) * value
    return total * Fraction(1, p ** rank)


def _kernel_multiplicity(deg, vals, inside, p: int, size: int) -> Fraction:
    """Closed form for nontrivial chi: each cyclic subgroup sums its p-1
    nontrivial root-of-unity weights to p-1 (inside the kernel) or -1."""
    return Fraction(deg - sum(vals) + p * sum(vals[i] for i in inside), size)


def _trivial_multiplicity(deg, vals, p: int, size: int) -> Fraction:
    return Fraction(deg + (p - 1) * sum(vals), size)


def _is_nonneg_int(v: Fraction) -> bool:
    return v.denominator == 1 and v >= 0


def _int_rows(theta_set: list[CharSlice], class_ids) -> list[tuple[str, int, int, int]]:
    """(name, degree, value on first class, value on second class) as ints."""
    rows = []
    for theta in theta_set:
        va, vb = theta.values[class_ids[0]], theta.values[class_ids[1]]
        if va.denominator != 1 or vb.denominator != 1:
            raise ValueError("scan requires integer-valued slice rows")
        rows.append((theta.name, int(theta.degree), int(va), int(vb)))
    return rows


@dataclass
class ScanResult:
    p: int
    rank: int
    class_ids: tuple[str, str]
    feasible: list[int]
    feasible_kernel_only: list[int]
    witnesses: list[dict]
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "rank": self.rank,
            "classes": list(self.class_ids),
            "feasible": self.feasible,
            "feasible_kernel_only": self.feasible_kernel_only,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }


def _check_flags(rows, flags, p: int, size: int, hyperplanes,
                 include_trivial: bool = True):
    """First failing (theta, chi, value) for the 0/1 class flags, else None.

    flags[i] is 1 when cyclic subgroup i carries the first class.
    """
    n = len(flags)
    x = sum(flags)
    for name, deg, va, vb in rows:
        s = x * va + (n - x) * vb
        if include_trivial:
            num = deg + (p - 1) * s
            if num % size or num < 0:
                return name, "trivial", Fraction(num, size)
        for e, inside in hyperplanes:
            k = sum(va if flags[i] else vb for i in inside)
            num = deg - s + p * k
            if num % size or num < 0:
                return name, "ker=" + ",".join(map(str, e)), Fraction(num, size)
    return None


def _symmetry_probe(rows, p, rank, points, hyperplanes) -> bool:
    """Compare full multiplicity multisets of two distinct assignments with
    equal counts.  Valid for rank 2, where a kernel meets exactly one
    cyclic subgroup; the scan relies on this and verifies it once."""
    n = len(points)
    x = n // 2
    first = [1] * x + [0] * (n - x)
    second = list(first)
    second[0], second[-1] = second[-1], second[0]
    size = p ** rank

    def multiset(flags):
        out = []
        nn = len(flags)
        xx = sum(flags)
        for _name, deg, va, vb in rows:
            s = xx * va + (nn - xx) * vb
            ms = [Fraction(deg + (p - 1) * s, size)]
            for _e, inside in hyperplanes:
                k = sum(va if flags[i] else vb for i in inside)
                ms.append(Fraction(deg - s + p * k, size))
            out.append(sorted(ms))
        return out

    return multiset(first) == multiset(second)


def feasible_distributions(theta_set: list[CharSlice], p: int, rank: int,
                           class_ids: tuple[str, str]) -> ScanResult:
    """Scan class-distribution counts x for HeLP feasibility.

    x counts the cyclic subgroups assigned to class_ids[0].  For rank 2 the
    multiplicity multiset depends on x alone (verified per run), so one
    representative per x decides.  For rank 3 that symmetry genuinely fails:
    kernel hyperplanes see the geometry of the assigned point set, so any x
    passing the count-level tests is settled by exhausting all assignments
    with that count.
    """
    if p == 2:
        # a single involution class makes every assignment consistent
        n = 2 ** rank - 1
        return ScanResult(
            p, rank, class_ids, list(range(n + 1)), list(range(n + 1)), [],
            ["p = 2: one class of involutions, every distribution is consistent"],
        )
    if rank not in (2, 3):
        raise ValueError("rank must be 2 or 3")
    points = subgroup_points(p, rank)
    hyperplanes = hyperplane_table(p, rank)
    rows = _int_rows(theta_set, class_ids)
    n = len(points)
    size = p ** rank
    notes = []
    feasible: list[int] = []
    feasible_kernel: list[int] = []
    witnesses: list[dict] = []

    if rank == 2:
        if not _symmetry_probe(rows, p, rank, points, hyperplanes):
            raise AssertionError("count symmetry failed for rank 2")
        notes.append("rank 2: representative assignments suffice "
                     "(count symmetry verified this run)")
        for x in range(n + 1):
            flags = [1] * x + [0] * (n - x)
            fail_full = _check_flags(rows, flags, p, size, hyperplanes, True)
            fail_kernel = _check_flags(rows, flags, p, size, hyperplanes, False)
            if fail_full is None:
                feasible.append(x)
            else:
                name, chi, m = fail_full
                witnesses.append(
                    {"x": x, "theta": name, "chi": chi,
                     "multiplicity": format_rational(m)}
                )
            if fail_kernel is None:
                feasible_kernel.append(x)
    else:
        notes.append("rank 3: the multiplicity of a kernel character sees "
                     "which subgroups its hyperplane contains, not just the "
                     "counts, so surviving counts are settled by exhausting "
                     "all assignments with that count")
        for x in range(n + 1):
            # trivial-character multiplicities depend on the count alone
            count_fail = None
            for name, deg, va, vb in rows:
                num = deg + (p - 1) * (x * va + (n - x) * vb)
                if num % size or num < 0:
                    count_fail = (name, "trivial", Fraction(num, size))
                    break
            kernel_found = False
            full_found = False
            checked = 0
            example_fail = None
            for subset in itertools.combinations(range(n), x):
                flags = [0] * n
                for i in subset:
                    flags[i] = 1
                fail = _check_flags(rows, flags, p, size, hyperplanes, False)
                checked += 1
                if fail is None:
                    kernel_found = True
                    if count_fail is None:
                        full_found = True
                    break
                if example_fail is None:
                    example_fail = fail
            if kernel_found:
                feasible_kernel.append(x)
            if full_found:
                feasible.append(x)
            else:
                name, chi, m = count_fail or example_fail
                entry = {"x": x, "theta": name, "chi": chi,
                         "multiplicity": format_rational(m)}
                if count_fail is None:
                    entry["mode"] = "exhaustive"
                    entry["assignments_checked"] = checked
                witnesses.append(entry)

    if feasible != feasible_kernel:
        notes.append(
            f"full filter {feasible} is strictly stronger than the "
            f"kernel-character filter {feasible_kernel}"
        )
    return ScanResult(p, rank, class_ids, feasible, feasible_kernel,
                      witnesses, notes)
