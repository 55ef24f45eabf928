import pytest
from hypothesis import given

from gacalc import Blade, BladeError, alpha, beta, blade_product, intersect, parse_blade, sigma, sym_diff
from gacalc.blades import SignedBlade

from oracles import alpha_pairs, beta_common, intersect_sets, random_blade, seeded, sigma_direct, sym_diff_sets
from strategies import blades

B = Blade


class TestBlade:
    def test_unit_blade(self):
        assert B() == B([]) and B().grade == 0
        assert str(B()) == "e[]"

    def test_grade_and_text(self):
        b = B([-1, 0, 3])
        assert b.grade == 3
        assert b.indices == (-1, 0, 3)
        assert str(b) == "e[-1,0,3]"

    @pytest.mark.parametrize("bad", [[1, 1], [2, 1], [0, -1, 3]])
    def test_rejects_non_canonical(self, bad):
        with pytest.raises(BladeError):
            B(bad)

    def test_rejects_non_integers(self):
        with pytest.raises(BladeError):
            B([1.0])
        with pytest.raises(BladeError):
            B([True])

    def test_from_indices_sorts(self):
        assert B.from_indices({3, -2, 0}) == B([-2, 0, 3])

    @pytest.mark.parametrize("text, expected", [
        ("e[]", ()), ("e[0]", (0,)), ("e[-1,0,3]", (-1, 0, 3)), (" e[ -2 , 5 ] ", (-2, 5)),
    ])
    def test_parse_blade(self, text, expected):
        assert parse_blade(text) == B(expected)

    @pytest.mark.parametrize("text", ["e[1,1]", "e[2,1]", "f[1]", "e[1,]", "e[x]"])
    def test_parse_blade_rejects(self, text):
        with pytest.raises(BladeError):
            parse_blade(text)


@pytest.mark.parametrize("I, J, expected", [
    ((), (1, 2), 0),
    ((1, 3), (2,), 1),
    ((1, 2), (1, 2), 1),
])
def test_alpha_examples(I, J, expected):
    assert alpha(B(I), B(J)) == expected == alpha_pairs(I, J)


@pytest.mark.parametrize("I, J, expected", [
    ((1,), (1,), 0),
    ((-1, 2), (-1, 3), 1),
    ((-2, -1), (-2, -1), 2),
])
def test_beta_examples(I, J, expected):
    assert beta(B(I), B(J)) == expected == beta_common(I, J)


def test_sigma_examples():
    assert sigma(B(), B()) == 1
    assert sigma(B([1]), B([2])) == 1
    assert sigma(B([2]), B([1])) == -1
    assert sigma(B([-1]), B([-1])) == -1


@pytest.mark.parametrize("I, J, expected", [
    ((1, 2), (), (1, 2)),
    ((1, 2), (1, 2), ()),
    ((-1, 0), (0, 3), (-1, 3)),
])
def test_sym_diff_examples(I, J, expected):
    assert sym_diff(B(I), B(J)) == B(expected)


@pytest.mark.parametrize("I, J, expected", [
    ((0,), (0,), (1, ())),
    ((-1,), (-1,), (-1, ())),
    ((2,), (1,), (-1, (1, 2))),
])
def test_blade_product_examples(I, J, expected):
    sign, blade = expected
    assert blade_product(B(I), B(J)) == SignedBlade(sign, B(blade))


def test_signed_blade_text():
    assert str(SignedBlade(-1, B([1, 2]))) == "-e[1,2]"
    assert str(SignedBlade(1, B())) == "+e[]"


def test_merge_matches_enumeration():
    rng = seeded(1)
    for _ in range(10_000):
        I, J = random_blade(rng, -6, 6), random_blade(rng, -6, 6)
        assert alpha(I, J) == alpha_pairs(I, J)
        assert beta(I, J) == beta_common(I, J)
        assert sigma(I, J) == sigma_direct(I, J)
        assert sym_diff(I, J) == sym_diff_sets(I, J)
        assert intersect(I, J) == intersect_sets(I, J)


@given(blades(), blades())
def test_outputs_are_canonical(I, J):
    for out in (sym_diff(I, J), intersect(I, J), blade_product(I, J).blade):
        assert isinstance(out, Blade)
        assert list(out) == sorted(set(out))


@given(blades(), blades(), blades())
def test_cocycle_identity(I, J, K):
    assert sigma(I, J) * sigma(sym_diff(I, J), K) == sigma(I, sym_diff(J, K)) * sigma(J, K)


@given(blades(), blades(), blades())
def test_congruences(I, J, K):
    lhs = alpha(I, J) + alpha(sym_diff(I, J), K)
    rhs = alpha(I, sym_diff(J, K)) + alpha(J, K)
    assert (lhs - rhs) % 2 == 0
    lhs = beta(I, J) + beta(sym_diff(I, J), K)
    rhs = beta(I, sym_diff(J, K)) + beta(J, K)
    assert (lhs - rhs) % 2 == 0


@given(blades(), blades(), blades())
def test_inclusion_exclusion(I, J, K):
    assert alpha(sym_diff(I, J), K) == alpha(I, K) + alpha(J, K) - 2 * alpha(intersect(I, J), K)


@given(blades(), blades(), blades())
def test_sym_diff_associative(I, J, K):
    assert sym_diff(sym_diff(I, J), K) == sym_diff(I, sym_diff(J, K))


@given(blades())
def test_unit_laws(I):
    assert blade_product(B(), I) == blade_product(I, B()) == (1, I)


def test_unbounded_indices():
    big = B([-(10**12), 10**12])
    assert blade_product(big, big) == (1, B())  # alpha 1, beta 1
