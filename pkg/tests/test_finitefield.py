import pytest

from grunits.finitefield import (
    NotPrime,
    ZeroElement,
    fq_make,
    is_prime,
    square_lines,
)


def test_fq_make_orders():
    assert len(list(fq_make(3).elements())) == 9
    assert len(list(fq_make(7).elements())) == 49
    with pytest.raises(NotPrime):
        fq_make(4)


def test_is_prime_small():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_prime_subfield_squares_p7():
    f = fq_make(7)
    for a in range(1, 7):
        assert f.is_square(f.scalar(a))


def test_square_count_q49():
    f = fq_make(7)
    squares = [e for e in f.elements() if e != f.zero and f.is_square(e)]
    assert len(squares) == 24
    # brute-force cross-check against the squaring table
    table = {f.mul(e, e) for e in f.elements() if e != f.zero}
    assert set(squares) == table


def test_is_square_zero_raises():
    f = fq_make(5)
    with pytest.raises(ZeroElement):
        f.is_square(f.zero)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_square_xnor_multiplicativity(p):
    f = fq_make(p)
    nonzero = [e for e in f.elements() if e != f.zero]
    sample = nonzero[::3] or nonzero
    for e in sample:
        for g in sample:
            assert f.is_square(f.mul(e, g)) == (f.is_square(e) == f.is_square(g))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_unit_group_order_and_frobenius(p):
    f = fq_make(p)
    q = p * p
    fixed = []
    for e in f.elements():
        if e != f.zero:
            assert f.pow(e, q - 1) == f.one
        if f.frobenius(e) == e:
            fixed.append(e)
    assert sorted(fixed) == sorted(f.scalar(a) for a in range(p))
    # Frobenius is multiplicative
    a, b = (1, 1), (2, 1)
    assert f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b))


@pytest.mark.parametrize("p,expected", [(3, (2, 2)), (7, (4, 4)), (11, (6, 6))])
def test_square_lines_examples(p, expected):
    assert square_lines(p) == expected


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_square_lines_balanced(p):
    assert square_lines(p) == ((p + 1) // 2, (p + 1) // 2)


def test_encode_roundtrip_and_format():
    f = fq_make(5)
    for e in f.elements():
        assert f.decode(f.encode(e)) == e
    assert f.format((2, 3)) == "2+3*w"
