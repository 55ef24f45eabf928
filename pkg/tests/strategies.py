import hypothesis.strategies as st

from gacalc import Blade, from_terms


def blades(lo=-6, hi=6):
    return st.sets(st.integers(lo, hi)).map(lambda s: Blade(sorted(s)))


def multivectors(lo=-4, hi=4, max_terms=8, coeff=9):
    return st.lists(
        st.tuples(blades(lo, hi), st.integers(-coeff, coeff)), max_size=max_terms
    ).map(from_terms)
