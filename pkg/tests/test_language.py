import pytest
from hypothesis import given

from gacalc import (
    Blade, EvaluationError, LexError, ParseError, blade, evaluate, evaluate_text,
    format_multivector, from_terms, lex, one, parse, zero,
)
from gacalc.evaluator import check_oracle, check_signature, generator_word
from gacalc.parser import Add, Ans, BladeLit, Mul, Neg, Pow, ScalarLit, Sub
from gacalc.signature import Signature

from strategies import multivectors


def kinds(text):
    return [t.kind for t in lex(text)]


class TestLexer:
    def test_simple(self):
        toks = lex("1 + e[0]")
        assert kinds("1 + e[0]") == ["number", "plus", "blade", "end"]
        assert toks[2].value == Blade([0])
        assert [t.position for t in toks] == [0, 2, 4, 8]

    def test_pow(self):
        toks = lex("e[-1,2]^2")
        assert [t.kind for t in toks] == ["blade", "caret", "number", "end"]
        assert toks[0].value == Blade([-1, 2])

    def test_duplicate_index(self):
        with pytest.raises(LexError) as info:
            lex("e[1,1]")
        assert "duplicate" in str(info.value)
        assert info.value.offset == 4

    def test_blade_indices_are_sorted(self):
        assert lex("e[3,-1]")[0].value == Blade([-1, 3])

    def test_lexemes_reconstruct_input(self):
        text = " ( e[ -1 , 2 ] * 2.5e3 )  ^ 3 - ans "
        assert "".join(t.lexeme for t in lex(text)) == "".join(text.split())

    @pytest.mark.parametrize("number", ["0", "12", "3.25", ".5", "1e-05", "2E+3", "7."])
    def test_numbers(self, number):
        (tok, end) = lex(number)
        assert tok.kind == "number" and tok.value == float(number)

    @pytest.mark.parametrize("text, offset", [
        ("1 $ 2", 2), ("e[1", 0), ("e[a]", 2), ("e[1;2]", 3), ("é + 1", 0), ("1 + é", 4),
        ("e[1,]", 4),
    ])
    def test_errors_carry_byte_offsets(self, text, offset):
        with pytest.raises(LexError) as info:
            lex(text)
        assert info.value.offset == offset
        assert 0 <= info.value.offset <= len(text.encode())

    def test_positions_nondecreasing(self):
        pos = [t.position for t in lex("e[0]*e[1] + 3 - (ans)^2")]
        assert pos == sorted(pos)


class TestParser:
    def test_examples(self):
        assert parse("e[1]*e[2] + 1") == Add(
            Mul(BladeLit(Blade([1])), BladeLit(Blade([2]))), ScalarLit(1.0))
        assert parse("-e[0]^2") == Neg(Pow(BladeLit(Blade([0])), 2))

    def test_juxtaposition_rejected(self):
        with pytest.raises(ParseError) as info:
            parse("e[0] e[1]")
        assert info.value.offset == 5
        assert "'*'" in info.value.expected

    def test_left_associative(self):
        one_, two, three = ScalarLit(1.0), ScalarLit(2.0), ScalarLit(3.0)
        assert parse("1 - 2 - 3") == Sub(Sub(one_, two), three)
        assert parse("1 * 2 * 3") == Mul(Mul(one_, two), three)

    def test_precedence(self):
        a, b = BladeLit(Blade([0])), BladeLit(Blade([1]))
        assert parse("e[0] + e[1] * 2") == Add(a, Mul(b, ScalarLit(2.0)))
        assert parse("(e[0] + e[1])^2") == Pow(Add(a, b), 2)
        assert parse("--e[0]") == Neg(Neg(a))
        assert parse("2 * -e[0]") == Mul(ScalarLit(2.0), Neg(a))
        assert parse("ans^0") == Pow(Ans(), 0)

    @pytest.mark.parametrize("text, offset", [
        ("", 0), ("1 +", 3), ("(1", 2), ("e[0]^-1", 5), ("e[0]^1.5", 5), ("e[0]^2^2", 6),
        ("foo", 0), (")", 0), ("1 2", 2),
    ])
    def test_errors(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.offset == offset
        assert info.value.expected

    def test_parse_accepts_tokens(self):
        assert parse(lex("e[0]")) == parse("e[0]")


class TestEvaluate:
    def test_examples(self):
        assert evaluate_text("e[0]^2") == 1
        assert evaluate_text("e[-1]^2") == -1
        assert evaluate_text("(e[-1]*e[-2])^2") == -1
        assert evaluate_text("(e[0]+3)^0") == one()

    def test_ans(self):
        assert evaluate(parse("ans * 2"), ans=blade([1])) == from_terms([((1,), 2)])
        with pytest.raises(EvaluationError):
            evaluate(parse("ans"))

    def test_signature_gate(self):
        sig = Signature(1, 0)
        node = parse("e[1] * e[1]")
        with pytest.raises(EvaluationError):
            check_signature(node, evaluate(node), sig)
        node = parse("e[0] + 1")
        check_signature(node, evaluate(node), sig)

    def test_oracle(self):
        node = parse("e[2]*e[1]*e[-1,2]^3")
        assert generator_word(node) == [2, 1, -1, 2, -1, 2, -1, 2]
        assert check_oracle(node, evaluate(node))
        assert not check_oracle(parse("e[0] + e[1]"), evaluate_text("e[0] + e[1]"))
        with pytest.raises(EvaluationError):
            check_oracle(parse("e[2]*e[1]"), blade([1, 2]))


class TestFormat:
    def test_examples(self):
        assert format_multivector(zero()) == "0"
        assert format_multivector(evaluate_text("e[2]*e[1]")) == "-e[1,2]"
        assert format_multivector(evaluate_text("1 + 2*e[0]")) == "1 + 2*e[0]"

    @given(multivectors())
    def test_round_trip(self, x):
        assert evaluate(parse(lex(format_multivector(x)))) == x

    def test_round_trip_fractions(self):
        x = from_terms([((), 0.1), ((0,), -1 / 3), ((-2, 5), 1e-300), ((1,), 6.02e23)])
        assert evaluate_text(format_multivector(x)) == x
