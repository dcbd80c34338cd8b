"""Explicit elementary-abelian unit groups in distinguished components.

The units are presented as exact block-diagonal matrices in the one or two
Wedderburn components whose characters separate the two order-p classes;
everywhere else their character values are forced by the support
hypothesis (partial augmentations vanish off the order-p classes), so no
other component needs to be materialized.  Verification recovers every
element's partial augmentations from its character profile and checks
group structure, integrality and class counts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .chardata import TableSlice, psl2_slice, psl33_slice
from .cyclotomic import format_rational
from .finitefield import fq_make, is_prime
from .matrices import BlockDiag, QMatrix, companion_cyclotomic
from .partialaug import (
    CharProfile,
    Inconsistent,
    invert_profile,
    mrsw_conjugate_to_group_element,
)


class BadPattern(Exception):
    pass


MAX_PRIME = 13


@dataclass(frozen=True)
class BlockUnit:
    """Blocks in the distinguished components plus forced values elsewhere."""

    components: dict[str, BlockDiag]
    forced_values: dict[str, Fraction]


@dataclass
class UnitGroup:
    table: TableSlice
    p: int
    rank: int
    support: tuple[str, str]
    distinguished: dict[str, str]  # component name -> character row name
    generator_names: list[str]
    elements: dict[tuple[int, ...], dict[str, BlockDiag]] = field(
        default_factory=dict
    )
    pattern: frozenset[int] | None = None

    @property
    def generators(self) -> list[dict[str, BlockDiag]]:
        basis = []
        for i in range(self.rank):
            exp = tuple(1 if j == i else 0 for j in range(self.rank))
            basis.append(self.elements[exp])
        return basis

    def order(self) -> int:
        return len(self.elements)


def _power_cache(block_gens: dict[str, BlockDiag], p: int):
    cache = {}
    for name, g in block_gens.items():
        powers = [BlockDiag(QMatrix.identity(b.dim) for b in g.blocks)]
        for _ in range(p - 1):
            powers.append(powers[-1] * g)
        cache[name] = powers
    return cache


def _materialize(generators: list[dict[str, BlockDiag]], p: int,
                 rank: int) -> dict[tuple[int, ...], dict[str, BlockDiag]]:
    comp_names = generators[0].keys()
    caches = [
        _power_cache(gen, p) for gen in generators
    ]
    elements = {}
    for exps in itertools.product(range(p), repeat=rank):
        comp = {}
        for name in comp_names:
            acc = caches[0][name][exps[0]]
            for i in range(1, rank):
                acc = acc * caches[i][name][exps[i]]
            comp[name] = acc
        elements[exps] = comp
    return elements


def build_psl2_units(p: int, pattern) -> UnitGroup:
    """The pair u, v in the eta-component of PSL(2,p^2) realizing `pattern`.

    u = (1, E, A^(-i_1), ..., A^(-i_((p-1)/2))) and v = (1, A, ..., A) with
    A the order-p companion matrix appearing (p+1)/2 times; u*v^j then has
    trace (p+1)/2 exactly when j lies in the pattern.
    """
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if p > MAX_PRIME:
        raise ValueError(f"p capped at {MAX_PRIME}")
    members = frozenset(int(i) for i in pattern)
    if not members <= set(range(1, p)) or len(members) != (p - 1) // 2:
        raise BadPattern(
            f"pattern must be a subset of 1..{p - 1} of size {(p - 1) // 2}"
        )
    table = psl2_slice(p)
    A = companion_cyclotomic(p)
    E = QMatrix.identity(p - 1)
    one = QMatrix.identity(1)
    u = BlockDiag([one, E] + [A ** ((-i) % p) for i in sorted(members)])
    v = BlockDiag([one] + [A] * ((p + 1) // 2))
    generators = [{"eta": u}, {"eta": v}]
    ug = UnitGroup(
        table, p, 2, ("c", "d"), {"eta": "eta"}, ["u", "v"],
        _materialize(generators, p, 2), members,
    )
    return ug


def build_psl33_units() -> UnitGroup:
    """The rank-3 group generated by alpha, beta, gamma in the two
    distinguished components (degree 12 and degree 16) of PSL(3,3)."""
    table = psl33_slice()
    A = QMatrix([[0, -1], [1, -1]])
    E = QMatrix.identity(2)

    def blocks(letters: str) -> BlockDiag:
        pick = {"E": E, "A": A, "B": A * A}
        return BlockDiag(pick[s] for s in letters)

    alpha = {"chi": blocks("EEEEEA"), "phi": blocks("AAAAAAAA")}
    beta = {"chi": blocks("EEAAAA"), "phi": blocks("EEEAABBB")}
    gamma = {"chi": blocks("EAAEBA"), "phi": blocks("EABEBEAB")}
    generators = [alpha, beta, gamma]
    return UnitGroup(
        table, 3, 3, ("a", "b"), {"chi": "chi12", "phi": "chi16a"},
        ["alpha", "beta", "gamma"], _materialize(generators, 3, 3),
    )


def _solve_support_pair(ug: UnitGroup,
                        traces: dict[str, Fraction]) -> tuple[Fraction, Fraction]:
    """Partial augmentations on the support from the distinguished traces."""
    xa, xb = ug.support
    rows = [ug.table.char_by_name(name) for name in ug.distinguished.values()]
    if len(rows) == 1:
        # one distinguished row: combine with augmentation one
        r = rows[0]
        det = r.values[xa] - r.values[xb]
        t = traces[r.name]
        ea = (t - r.values[xb]) / det
        return ea, 1 - ea
    r1, r2 = rows[:2]
    det = r1.values[xa] * r2.values[xb] - r1.values[xb] * r2.values[xa]
    t1, t2 = traces[r1.name], traces[r2.name]
    ea = (t1 * r2.values[xb] - t2 * r1.values[xb]) / det
    eb = (r1.values[xa] * t2 - r2.values[xa] * t1) / det
    return ea, eb


def element_profile(ug: UnitGroup, exps: tuple[int, ...]) -> CharProfile:
    """Character profile: distinguished traces plus hypothesis-forced values."""
    comp = ug.elements[exps]
    if not any(exps):
        return CharProfile(
            ug.table, {ch.name: Fraction(ch.degree) for ch in ug.table.chars}
        )
    traces = {
        ug.distinguished[cname]: comp[cname].trace() for cname in comp
    }
    ea, eb = _solve_support_pair(ug, traces)
    xa, xb = ug.support
    values = dict(traces)
    for ch in ug.table.chars:
        if ch.name not in values:
            values[ch.name] = ea * ch.values[xa] + eb * ch.values[xb]
    return CharProfile(ug.table, values)


def element_profiles(ug: UnitGroup) -> dict[tuple[int, ...], CharProfile]:
    return {exps: element_profile(ug, exps) for exps in sorted(ug.elements)}


def verify_unit_group(ug: UnitGroup) -> dict:
    """Structural and augmentation checks for a constructed unit group.

    Checks: generators commute and have order p; the distinguished-component
    representation is faithful (so the group order is p^rank); every
    nontrivial element has an integral augmentation vector recovered exactly
    from its profile; per-class counts.
    """
    p, rank = ug.p, ug.rank
    problems: list[str] = []
    gens = ug.generators
    comp_names = list(gens[0].keys())

    for i in range(rank):
        for name in comp_names:
            g = gens[i][name]
            if not (g ** p).is_identity() or g.is_identity():
                problems.append(f"generator {ug.generator_names[i]} "
                                f"does not have order {p} in {name}")
        for j in range(i + 1, rank):
            for name in comp_names:
                a, b = gens[i][name], gens[j][name]
                if a * b != b * a:
                    problems.append(
                        f"generators {ug.generator_names[i]}, "
                        f"{ug.generator_names[j]} do not commute in {name}"
                    )

    distinct = {
        tuple(comp[name] for name in comp_names)
        for comp in ug.elements.values()
    }
    faithful = len(distinct) == p ** rank
    if not faithful:
        problems.append("distinguished components do not separate elements")

    xa, xb = ug.support
    per_element = []
    counts = {xa: 0, xb: 0, "other": 0}
    all_integral = True
    all_mrsw = True
    for exps in sorted(ug.elements):
        if not any(exps):
            continue
        profile = element_profile(ug, exps)
        try:
            aug = invert_profile(profile, list(ug.support))
        except Inconsistent as exc:
            problems.append(f"element {exps}: {exc}")
            continue
        integral = aug.is_integral()
        mrsw = mrsw_conjugate_to_group_element(aug)
        all_integral &= integral
        all_mrsw &= mrsw
        pair = (aug.values[xa], aug.values[xb])
        if pair == (1, 0):
            counts[xa] += 1
        elif pair == (0, 1):
            counts[xb] += 1
        else:
            counts["other"] += 1
        per_element.append(
            {
                "exponents": list(exps),
                "traces": {
                    name: format_rational(ug.elements[exps][name].trace())
                    for name in comp_names
                },
                "aug": aug.to_json(),
                "integral": integral,
                "mrsw": mrsw,
            }
        )

    report = {
        "group": ug.table.group,
        "p": p,
        "rank": rank,
        "order": ug.order(),
        "faithful": faithful,
        "counts": counts,
        "all_integral": all_integral,
        "all_mrsw": all_mrsw,
        "elements": per_element,
        "problems": problems,
        "ok": faithful and all_integral and not problems,
    }
    if ug.pattern is not None:
        eta = ug.table.char_by_name("eta")
        recovered = sorted(
            j
            for j in range(1, p)
            if ug.elements[(1, j % p)]["eta"].trace() == eta.values["c"]
        )
        report["pattern"] = sorted(ug.pattern)
        report["trace_pattern"] = recovered
        if recovered != sorted(ug.pattern):
            problems.append("trace pattern disagrees with requested pattern")
            report["ok"] = False
    return report


def unit_pattern_from_profiles(profiles: dict[tuple[int, int], CharProfile],
                               p: int) -> frozenset[int]:
    """Recover the mixed-class pattern of a rank-2 unit group from profiles.

    Requires the first generator on class c and the second on class d
    (read off the eta row).
    """
    table = next(iter(profiles.values())).table
    eta = table.char_by_name("eta")

    def cls(exps) -> str:
        v = profiles[exps].rational_value("eta")
        if v == eta.values["c"]:
            return "c"
        if v == eta.values["d"]:
            return "d"
        raise ValueError(f"element {exps} matches neither order-p class")

    if cls((1, 0)) != "c" or cls((0, 1)) != "d":
        raise ValueError("generators must lie on classes c and d respectively")
    return frozenset(i for i in range(1, p) if cls((1, i)) == "c")


def valenti_search(profiles: dict[tuple[int, int], CharProfile], p: int,
                   group_side: set[frozenset[int]]) -> dict | None:
    """Search for a character-value-preserving isomorphism onto a Sylow pair.

    A witness is a group-side generator pair realizing the unit group's
    mixed-class pattern; pattern equality is exactly value preservation on
    every element because powers stay in their generator's class.  None
    certifies that no such isomorphism exists.
    """
    target = unit_pattern_from_profiles(profiles, p)
    if target not in group_side:
        return None
    f = fq_make(p)
    for e in f.elements():
        if e == f.zero or f.is_square(e):
            continue
        realized = frozenset(
            i for i in range(1, p)
            if f.is_square(f.add(f.one, f.mul(f.scalar(i), e)))
        )
        if realized == target:
            return {
                "pattern": sorted(target),
                "g": f.format(f.one),
                "h": f.format(e),
            }
    raise AssertionError("pattern in group set but no realizing pair found")
