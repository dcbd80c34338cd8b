"""Character-table slices restricted to the identity and the order-p classes.

For PSL(2,p^2) the slice is generated from the classical class structure;
for PSL(3,3) it is loaded from a shipped data file.  Neither source is
trusted: both are validated by exact column orthogonality, and class sizes
are cross-checked against brute-force group enumeration elsewhere.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .cyclotomic import format_rational, parse_rational
from .finitefield import is_prime


class ParseError(Exception):
    pass


class ValidationError(Exception):
    pass


@dataclass(frozen=True)
class ClassInfo:
    id: str
    element_order: int
    class_size: int
    centralizer_order: int


@dataclass(frozen=True)
class CharSlice:
    name: str
    degree: int
    values: dict[str, Fraction]  # class id -> exact value


@dataclass(frozen=True)
class TableSlice:
    group: str
    group_order: int
    classes: list[ClassInfo]
    chars: list[CharSlice]
    notes: list[str] = field(default_factory=list)

    def class_by_id(self, cid: str) -> ClassInfo:
        for c in self.classes:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def char_by_name(self, name: str) -> CharSlice:
        for ch in self.chars:
            if ch.name == name:
                return ch
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "order": self.group_order,
            "classes": [
                {
                    "id": c.id,
                    "element_order": c.element_order,
                    "class_size": c.class_size,
                    "centralizer_order": c.centralizer_order,
                }
                for c in self.classes
            ],
            "chars": [
                {
                    "name": ch.name,
                    "degree": ch.degree,
                    "values": {
                        cid: format_rational(v) for cid, v in ch.values.items()
                    },
                }
                for ch in self.chars
            ],
            "notes": list(self.notes),
        }


def _mk_class(cid: str, order: int, size: int, group_order: int) -> ClassInfo:
    if group_order % size != 0:
        raise ValidationError(f"class size {size} does not divide |G| = {group_order}")
    return ClassInfo(cid, order, size, group_order // size)


def psl2_slice(p: int) -> TableSlice:
    """Slice of the PSL(2,p^2) table on the identity and the two order-p classes.

    The two size-((q^2-1)/2) unipotent classes c and d are separated only by
    the pair of degree-(q+1)/2 characters eta and eta_t, which swap their
    values (p+1)/2 and (1-p)/2 on c and d.  All remaining irreducible rows
    take equal values on c and d.
    """
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    q = p * p
    order = q * (q * q - 1) // 2
    usize = (q * q - 1) // 2
    classes = [
        _mk_class("1", 1, 1, order),
        _mk_class("c", p, usize, order),
        _mk_class("d", p, usize, order),
    ]

    def row(name, deg, vc, vd):
        return CharSlice(
            name,
            deg,
            {"1": Fraction(deg), "c": Fraction(vc), "d": Fraction(vd)},
        )

    chars = [row("triv", 1, 1, 1), row("steinberg", q, 0, 0)]
    for i in range((q - 5) // 4):
        chars.append(row(f"ps{i + 1}", q + 1, 1, 1))
    for i in range((q - 1) // 4):
        chars.append(row(f"ds{i + 1}", q - 1, -1, -1))
    half = (q + 1) // 2
    chars.append(row("eta", half, Fraction(p + 1, 2), Fraction(1 - p, 2)))
    chars.append(row("eta_t", half, Fraction(1 - p, 2), Fraction(p + 1, 2)))

    notes = [
        "degree of eta/eta_t fixed to (p^2+1)/2: it is forced by exact column "
        "orthogonality and by the block dimension count 1 + (p-1)(p+1)/2; the "
        "value (p^2-1)/2 sometimes quoted for these rows fails both checks"
    ]
    return TableSlice(f"PSL(2,{q})", order, classes, chars, notes)


def validate_orthogonality(t: TableSlice) -> dict:
    """Exact column orthogonality on every pair of included columns.

    sum_chi chi(x) * conj(chi(y)) equals the centralizer order of x when
    x = y and 0 otherwise.  All slice values are rational, so conjugation
    is the identity.  Failures are report entries, not exceptions.
    """
    checks = []
    for cx in t.classes:
        for cy in t.classes:
            total = sum(
                ch.values[cx.id] * ch.values[cy.id] for ch in t.chars
            )
            expected = Fraction(cx.centralizer_order if cx.id == cy.id else 0)
            checks.append(
                {
                    "columns": [cx.id, cy.id],
                    "expected": format_rational(expected),
                    "actual": format_rational(total),
                    "ok": total == expected,
                }
            )
    return {"group": t.group, "ok": all(c["ok"] for c in checks), "checks": checks}


def _validate(t: TableSlice) -> TableSlice:
    for ch in t.chars:
        if ch.values["1"] != ch.degree:
            raise ValidationError(f"row {ch.name}: value at identity != degree")
    report = validate_orthogonality(t)
    if not report["ok"]:
        bad = [c for c in report["checks"] if not c["ok"]]
        raise ValidationError(f"orthogonality fails: {bad}")
    return t


def load_table(path) -> TableSlice:
    """Parse a line-oriented table slice file and validate it exactly.

    Format: ``group <name> order <N>``, then ``class <id> <element_order>
    <class_size>`` lines, then ``char <name> <degree> <value per class>``
    lines with values as "a/b" in class order.
    """
    group = None
    order = None
    classes: list[ClassInfo] = []
    chars: list[CharSlice] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            try:
                if parts[0] == "group":
                    if parts[2] != "order":
                        raise ParseError(f"line {lineno}: bad group header")
                    group, order = parts[1], int(parts[3])
                elif parts[0] == "class":
                    if order is None:
                        raise ParseError(f"line {lineno}: class before group header")
                    classes.append(
                        _mk_class(parts[1], int(parts[2]), int(parts[3]), order)
                    )
                elif parts[0] == "char":
                    values = [parse_rational(v) for v in parts[3:]]
                    if len(values) != len(classes):
                        raise ParseError(
                            f"line {lineno}: expected {len(classes)} values"
                        )
                    deg_frac = parse_rational(parts[2])
                    if deg_frac.denominator != 1 or deg_frac <= 0:
                        raise ParseError(f"line {lineno}: bad degree {parts[2]}")
                    deg = int(deg_frac)
                    chars.append(
                        CharSlice(
                            parts[1],
                            deg,
                            {c.id: v for c, v in zip(classes, values)},
                        )
                    )
                else:
                    raise ParseError(f"line {lineno}: unknown directive {parts[0]}")
            except (IndexError, ValueError) as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
    if group is None or order is None:
        raise ParseError("missing group header")
    return _validate(TableSlice(group, order, classes, chars))


def data_dir() -> str:
    env = os.environ.get("GRS_DATA_DIR")
    if env:
        return env
    return str(resources.files("grunits").joinpath("data"))


def psl33_slice() -> TableSlice:
    """The shipped PSL(3,3) slice on classes {1, a, b}."""
    return load_table(os.path.join(data_dir(), "psl33.tbl"))


def mixed_rows(t: TableSlice, x: str, y: str) -> list[str]:
    """Names of character rows taking different values on classes x and y."""
    return [ch.name for ch in t.chars if ch.values[x] != ch.values[y]]


def mixed_value_decomposition(t: TableSlice, x: str, y: str,
                              base1: str, base2: str) -> dict:
    """Express each row's (x,y)-imbalance through the two designated rows.

    Every row theta must satisfy theta = n1*base1 + n2*base2 + rho with
    n1, n2 non-negative integers and rho equal on x and y with non-negative
    degree.  This is the structural fact that lets unit constructions pin
    only the two distinguished components.
    """
    b1, b2 = t.char_by_name(base1), t.char_by_name(base2)
    d1 = b1.values[x] - b1.values[y]
    d2 = b2.values[x] - b2.values[y]
    entries = []
    for ch in t.chars:
        delta = ch.values[x] - ch.values[y]
        if delta == 0:
            entries.append({"row": ch.name, "n1": 0, "n2": 0, "ok": True})
            continue
        # one of d1, d2 is positive and the other negative for the shipped data
        n1, n2 = Fraction(0), Fraction(0)
        if d1 != 0 and delta / d1 >= 0:
            n1 = delta / d1
        elif d2 != 0:
            n2 = delta / d2
        rest_deg = ch.degree - n1 * b1.degree - n2 * b2.degree
        ok = (
            n1.denominator == 1
            and n2.denominator == 1
            and n1 >= 0
            and n2 >= 0
            and rest_deg >= 0
        )
        entries.append({"row": ch.name, "n1": str(n1), "n2": str(n2), "ok": bool(ok)})
    return {"ok": all(e["ok"] for e in entries), "rows": entries}
