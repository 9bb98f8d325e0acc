from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from reals.arithmetic import ResolutionBudget
from reals.errors import InvalidWitness, UnresolvedPrecision
from reals.expr import (
    BinOp,
    Call,
    Dec,
    Int,
    Let,
    Neg,
    ParseError,
    Rat,
    RenderConfig,
    Var,
    evaluate,
    literal_stream,
    parse,
    render,
    run,
)
from reals.rational import detect_period
from reals.stream import LookaheadPolicy, decide_equiv_rational, from_rational

BUDGET = ResolutionBudget()


def ev(text, digits=20, fmt="sign", budget=BUDGET):
    return run(text, RenderConfig(digits, fmt), budget)


def test_rational_literals_in_a_sum():
    assert parse("1/3 + 2/3") == BinOp("+", Rat(1, 3), Rat(2, 3))


def test_repeating_decimal_literal():
    e = parse("0.1(6)")
    assert e == Dec(False, "0", "1", "6")
    assert e.value == Fraction(1, 6)


def test_square_roots_multiply():
    assert parse("sqrt(2)*sqrt(2)") == BinOp("*", Call("sqrt", (Int(2),)), Call("sqrt", (Int(2),)))


def test_precedence_and_associativity():
    assert parse("1 + 2 * 3 - 4") == BinOp("-", BinOp("+", Int(1), BinOp("*", Int(2), Int(3))), Int(4))


def test_unary_minus_folds_into_literals_only():
    assert parse("-40/3") == Rat(-40, 3)
    assert parse("-2.5") == Dec(True, "2", "5")
    assert parse("-sqrt(2)") == Neg(Call("sqrt", (Int(2),)))
    assert parse("-(5)") == Neg(Int(5))


def test_spaced_slash_is_division_with_inferred_witness():
    assert parse("1 / 3") == BinOp("/", Int(1), Int(3), 0)
    assert parse("sqrt(2) / 0.004") == BinOp("/", Call("sqrt", (Int(2),)), Dec(False, "0", "004"), 3)


def test_let_binding():
    assert parse("let x = sqrt(2) in x * x") == Let("x", Call("sqrt", (Int(2),)), BinOp("*", Var("x"), Var("x")))


def test_recip_witness_forms():
    assert parse("recip(sqrt(2); 1)") == parse("recip(sqrt(2), 1)") == Call("recip", (Call("sqrt", (Int(2),)),), 1)
    assert parse("div(1, sqrt(3), 1)") == Call("div", (Int(1), Call("sqrt", (Int(3),))), 1)


@pytest.mark.parametrize(
    "text",
    [
        "1 / sqrt(2)",
        "x + 1",
        "recip(sqrt(2))",
        "recip(sqrt(2); x)",
        "1 / 0",
        "1/0",
        "sqrt(1/2)",
        "sqrt(0)",
        "psi(1, 2)",
        "sup()",
        "1 +",
        "(1 + 2",
        "1 $ 2",
        "let psi = 1 in psi",
        "1 + cmp(1, 2)",
        "let x = cmp(1, 2) in 3",
        "abs(1; 2)",
    ],
)
def test_static_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse("1 + $")
    assert info.value.position == 4


CORPUS = [
    "1/3 + 2/3",
    "0.1(6)",
    "-0.(9)",
    "sqrt(2)*sqrt(2)",
    "-40/3",
    "1 - 1/2 - -3",
    "-(1/3) * -2.25",
    "let x = sqrt(2) in let y = recip(x; 1) in x * y",
    "sup(1/3, sqrt(2) - 1, 2/5) + inf(1, 2)",
    "div(1, sqrt(3), 1) / 7",
    "abs(psi(-7/2)) + sign(-1)",
    "cmp(1/3, 0.(3))",
    "--5",
    "-(-(2))",
]


@pytest.mark.parametrize("text", CORPUS)
def test_rendered_tree_reparses_identically(text):
    e = parse(text)
    assert parse(str(e)) == e


def test_five_halves_floor_digits():
    assert ev("5/2", 4, "floor") == "2.5000"


def test_negative_forty_thirds_floor_digits():
    assert ev("-40/3", 3, "floor") == "(-14).666"


def test_negative_forty_thirds_sign_magnitude():
    assert ev("-40/3", 2) == "-13.34"


def test_root_two_squared():
    assert ev("sqrt(2)*sqrt(2)", 6) == "1.999999"


def test_thirds_show_nines_and_class():
    assert ev("1/3 + 2/3", 6) == "0.999999... = 1"


def test_nines_literal():
    assert ev("0.(9)", 4) == "0.9999... = 1"


def test_subtraction_is_adding_the_complement():
    assert ev("1 - 1/2", 3) == "0.499... = 0.5"


def test_let_shares_the_bound_stream():
    assert ev("let x = sqrt(2) in x * x - 2", 10) == "-0.0000000001"


def test_function_evaluation():
    assert ev("recip(sqrt(2); 1)", 10) == "0.7071067811"
    assert ev("sup(1/3, 2/5)", 3) == "0.400"
    assert ev("inf(1/3, 2/5)", 3) == "0.333"
    assert ev("abs(-7/2)", 1) == "3.4... = 3.5"
    assert ev("sign(-7/2)", 0) == "1"
    assert ev("psi(1/4)", 2, "floor") == "(-1).74... = (-1).75"


def test_cmp_reports_a_verdict():
    assert ev("cmp(1/3, 0.(3))", 10) == "tied at precision 10"
    assert ev("cmp(1/3, 1/2)", 3) == "< at precision 3"


def test_unresolved_renders_interval_under_interval_policy():
    budget = ResolutionBudget(LookaheadPolicy(2, "interval"), fast_path=False)
    out = ev("1/3 + 2/3", 3, budget=budget)
    assert out.startswith("unresolved at digit 3: value in [")


def test_unresolved_raises_under_error_policy():
    with pytest.raises(UnresolvedPrecision):
        ev("1/3 + 2/3", 3, budget=ResolutionBudget(LookaheadPolicy(2), fast_path=False))


def test_invalid_witness_surfaces():
    with pytest.raises(InvalidWitness):
        ev("recip(1/1000; 1)")


def test_render_config_validation():
    with pytest.raises(ValueError):
        RenderConfig(-1)
    with pytest.raises(ValueError):
        RenderConfig(3, "roman")


@given(st.fractions(max_denominator=300).filter(lambda r: abs(r) < 1000))
def test_repeating_literal_matches_rational_form(r):
    p = detect_period(r)
    whole = abs(r).numerator // abs(r).denominator
    q = detect_period(abs(r))
    text = f"{'-' if r < 0 else ''}{whole}.{''.join(map(str, q.preperiod))}({''.join(map(str, q.period))})"
    x = evaluate(parse(text), BUDGET)
    assert decide_equiv_rational(x, from_rational(r))
    assert p.normalized() == p


@given(st.fractions(max_denominator=300).filter(lambda r: abs(r) < 1000), st.integers(0, 12))
def test_both_renderings_denote_the_same_rational(r, digits):
    x = literal_stream(Rat(r.numerator, r.denominator))
    a = render(x, RenderConfig(digits, "sign"), BUDGET)
    b = render(x, RenderConfig(digits, "floor"), BUDGET)
    fb = b.split("...")[0].replace("(", "").replace(")", "")
    ip, _, frac = fb.partition(".")
    floor_value = int(ip) + (Fraction(int(frac), 10 ** len(frac)) if frac else 0)
    assert Fraction(a.split("...")[0]) == floor_value
