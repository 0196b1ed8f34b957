from __future__ import annotations

import random

import pytest

from esymlab.errors import NotSupported, ParseError, RingMismatch
from esymlab.partitions import ALL, BINARY, ODD, count_partitions_upto
from esymlab.aggregates import sigma_restricted
from esymlab.qparser import eval_expr, format_expr, parse_expr
from esymlab.series import (
    TruncatedSeries,
    check_identity,
    divisor_power_series,
    extract_power,
    product_over_source,
    series_from_values,
    substitute_power,
)

# every rational function shape exercised by the verification suites
DISPLAYED_EXPRESSIONS = [
    "q^6/((1-q^2)^2*(1-q^4)^2)",
    "1/(1-q)",
    "q^2/(1-q)^3",
    "q*(1+3*q)/(1-q)^3",
    "q*(3+q)/(1-q)^3",
    "q^6/((1-q^2)^2*(1-q^4)^2)+q^5/((1-q^2)^2*(1-q^4)*(1-q^6))",
    "(q^10+q^8+q^6)/((1-q^3)^2*(1-q^6)^2)+2*(q^9+q^8+q^7)/((1-q^6)*(1-q^3)^3)",
    "q^2/(1-q)*#binaryOddProd",
    "q^2/(1-q)*#binaryprod",
    "#e2p4",
    "#b12",
]


def test_geometric_series():
    s = eval_expr(parse_expr("1/(1-q)"), 5)
    assert s.coeffs == [1, 1, 1, 1, 1, 1]


def test_binomial_generating_functions():
    s = eval_expr(parse_expr("q^2/(1-q)^3"), 5)
    assert s.coeffs == [0, 0, 1, 3, 6, 10]
    s = eval_expr(parse_expr("q*(1+3*q)/(1-q)^3"), 4)
    assert s.coeffs == [0, 1, 6, 15, 28]
    s = eval_expr(parse_expr("q*(3+q)/(1-q)^3"), 4)
    assert s.coeffs == [0, 3, 10, 21, 36]


def test_parse_rejects_bad_denominator():
    with pytest.raises(ParseError) as exc:
        parse_expr("q/(1-2*q)")
    assert exc.value.pos == 2
    with pytest.raises(ParseError):
        parse_expr("1/(q-1)")
    with pytest.raises(ParseError):
        parse_expr("1/q")
    with pytest.raises(ParseError):
        parse_expr("1/(1-q^2)^0")


def test_parse_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_expr("1+")
    assert exc.value.pos == 2
    with pytest.raises(ParseError) as exc:
        parse_expr("(1-q")
    assert exc.value.pos == 4
    with pytest.raises(ParseError) as exc:
        parse_expr("1+$")
    assert exc.value.pos == 2


def test_parse_print_parse_fixed_point():
    for text in DISPLAYED_EXPRESSIONS:
        ast = parse_expr(text)
        printed = format_expr(ast)
        assert parse_expr(printed) == ast, text
        assert format_expr(parse_expr(printed)) == printed


def test_displayed_expressions_all_parse_and_evaluate():
    for text in DISPLAYED_EXPRESSIONS:
        s = eval_expr(parse_expr(text), 40)
        assert s.order == 40


def test_products_match_partition_counts():
    for src, name in ((ALL, "p"), (ODD, "Q"), (BINARY, "B")):
        prod = product_over_source(src, 200)
        counts = count_partitions_upto(200, src)
        assert prod.coeffs == counts, name


def test_product_examples():
    prod = product_over_source(BINARY, 6)
    assert prod.coeff(4) == 4 and prod.coeff(6) == 6
    assert product_over_source(ODD, 5).coeff(5) == 3
    assert product_over_source(ALL, 4).coeff(4) == 5


def test_divisor_power_series_matches_sigma():
    for src in (ALL, ODD, BINARY):
        for j in (1, 2, 3):
            s = divisor_power_series(j, src, 200)
            assert s.coeff(0) == 0
            for n in range(1, 201):
                assert s.coeff(n) == sigma_restricted(n, j, src), (src.label, j, n)


def test_substitute_and_extract():
    s = TruncatedSeries([1, 1, 1], 2)
    up = substitute_power(s, 2)
    assert up.coeffs == [1, 0, 1, 0, 1] and up.order == 4
    back = extract_power(up, 2)
    assert back.coeffs == [1, 1, 1]
    with pytest.raises(NotSupported):
        extract_power(TruncatedSeries([1, 0, 0, 1], 3), 2)


def test_check_identity_mismatch():
    lhs = eval_expr(parse_expr("1/(1-q)"), 5)
    rhs = eval_expr(parse_expr("1+q"), 5)
    mm = check_identity(lhs, rhs)
    assert mm is not None and mm.exponent == 2 and (mm.lhs, mm.rhs) == (1, 0)
    assert check_identity(lhs, lhs) is None


def test_ring_mismatch():
    a = TruncatedSeries([1, 2, 3], 2)
    b = TruncatedSeries([1, 2, 3], 2, modulus=5)
    with pytest.raises(RingMismatch):
        check_identity(a, b)
    with pytest.raises(RingMismatch):
        a + b


def test_min_order_rule():
    a = TruncatedSeries([1] * 11, 10)
    b = TruncatedSeries([1] * 6, 5)
    assert (a + b).order == 5
    assert (a * b).order == 5


def _random_expression(rng: random.Random, depth: int = 0) -> str:
    if depth >= 3 or rng.random() < 0.3:
        return rng.choice(["q", str(rng.randint(0, 9)), f"q^{rng.randint(1, 4)}"])
    op = rng.randint(0, 3)
    left = _random_expression(rng, depth + 1)
    right = _random_expression(rng, depth + 1)
    if op == 0:
        return f"({left}+{right})"
    if op == 1:
        return f"({left}-{right})"
    if op == 2:
        return f"({left}*{right})"
    a, e = rng.randint(1, 6), rng.randint(1, 3)
    return f"({left}/(1-q^{a})^{e})"


def test_native_mod_equals_exact_reduced():
    rng = random.Random(987654)
    for _ in range(50):
        text = _random_expression(rng)
        m = rng.choice([2, 3, 4, 5, 7, 12])
        ast = parse_expr(text)
        exact = eval_expr(ast, 100)
        native = eval_expr(ast, 100, modulus=m)
        assert exact.reduce_mod(m) == native, (text, m)


def test_series_from_values_and_scale():
    s = series_from_values([1, 2, 3], 5)
    assert s.coeffs == [1, 2, 3, 0, 0, 0]
    assert s.scale(2).coeffs == [2, 4, 6, 0, 0, 0]
    assert (-s).coeffs == [-1, -2, -3, 0, 0, 0]
    assert (s ** 0).coeffs == [1, 0, 0, 0, 0, 0]
