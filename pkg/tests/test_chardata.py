import os
from fractions import Fraction

import pytest

from grunits.chardata import (
    ParseError,
    ValidationError,
    load_table,
    mixed_rows,
    mixed_value_decomposition,
    psl2_slice,
    psl33_slice,
    validate_orthogonality,
)


def test_psl2_slice_p3_shape():
    t = psl2_slice(3)
    assert t.group_order == 360
    assert [c.class_size for c in t.classes] == [1, 40, 40]
    eta = t.char_by_name("eta")
    assert (eta.degree, eta.values["c"], eta.values["d"]) == (5, 2, -1)
    # total rows (q+5)/2
    assert len(t.chars) == 7


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_psl2_slice_row_inventory(p):
    q = p * p
    t = psl2_slice(p)
    assert len(t.chars) == (q + 5) // 2
    assert t.group_order == q * (q * q - 1) // 2
    degrees = sorted(ch.degree for ch in t.chars)
    assert degrees.count(q + 1) == (q - 5) // 4
    assert degrees.count(q - 1) == (q - 1) // 4
    eta, eta_t = t.char_by_name("eta"), t.char_by_name("eta_t")
    assert eta.degree == eta_t.degree == (q + 1) // 2
    assert eta.values["c"] - eta.values["d"] == p
    assert eta.values["c"] + eta.values["d"] == 1
    assert eta_t.values["c"] == eta.values["d"]
    assert eta_t.values["d"] == eta.values["c"]


def test_psl2_steinberg_p5():
    t = psl2_slice(5)
    st_row = next(ch for ch in t.chars if ch.degree == 25)
    assert (st_row.values["c"], st_row.values["d"]) == (0, 0)
    assert len(t.chars) == 15


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_psl2_orthogonality(p):
    report = validate_orthogonality(psl2_slice(p))
    assert report["ok"]
    # spot-check the diagonal entries: c vs c equals the centralizer order q
    q = p * p
    cc = next(ch for ch in report["checks"] if ch["columns"] == ["c", "c"])
    assert cc["actual"] == str(q)


def test_psl33_slice_rows():
    t = psl33_slice()
    assert t.group_order == 5616
    chi = t.char_by_name("chi12")
    phi = t.char_by_name("chi16a")
    assert (chi.degree, chi.values["a"], chi.values["b"]) == (12, 3, 0)
    assert (phi.degree, phi.values["a"], phi.values["b"]) == (16, -2, 1)
    assert validate_orthogonality(t)["ok"]
    assert sum(ch.degree ** 2 for ch in t.chars) == 5616


def test_psl33_mixed_rows_and_decomposition():
    t = psl33_slice()
    mixed = mixed_rows(t, "a", "b")
    assert set(mixed) >= {"chi12", "chi16a"}
    dec = mixed_value_decomposition(t, "a", "b", "chi12", "chi16a")
    assert dec["ok"]


def test_load_table_rejects_bad_orthogonality(tmp_path):
    bad = tmp_path / "bad.tbl"
    bad.write_text(
        "group X order 6\n"
        "class 1 1 1\n"
        "class a 2 3\n"
        "char triv 1 1 1\n"
        "char sgn 1 1 1\n"
    )
    with pytest.raises(ValidationError):
        load_table(str(bad))


def test_load_table_parse_error(tmp_path):
    bad = tmp_path / "bad.tbl"
    bad.write_text("group X order notanumber\n")
    with pytest.raises(ParseError):
        load_table(str(bad))


def test_grs_data_dir_env(tmp_path, monkeypatch):
    import shutil
    from grunits.chardata import data_dir
    src = os.path.join(data_dir(), "psl33.tbl")
    shutil.copy(src, tmp_path / "psl33.tbl")
    monkeypatch.setenv("GRS_DATA_DIR", str(tmp_path))
    t = psl33_slice()
    assert t.group_order == 5616
