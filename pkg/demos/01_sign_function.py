"""
Signs of blade products
=======================

A basis blade is named by a finite set of integer indices.  Multiplying two
blades gives the blade of their symmetric difference, times a sign that
comes from two counts.
"""

# %%
# Blades are strictly increasing index tuples. ``e[]`` is the unit.
from gacalc import Blade, alpha, beta, blade_product, sigma, sym_diff

I = Blade([-1, 0, 3])
J = Blade([0, 2])
print(I, J, Blade())

# %%
# ``alpha`` counts the pairs (i, j) with i from I, j from J and j < i.
# ``beta`` counts indices that are shared and negative.
print("alpha =", alpha(I, J))  # (3, 0), (3, 2)
print("beta  =", beta(I, J))
print("sigma =", sigma(I, J))

# %%
# The product keeps what is in exactly one of the two sets.
print(sym_diff(I, J))
print(blade_product(I, J))

# %%
# Generators with negative index square to -1, the rest to +1, and
# distinct generators anticommute.
for i in (-2, -1, 0, 1):
    print(f"e[{i}]^2 ->", blade_product(Blade([i]), Blade([i])))
print(blade_product(Blade([1]), Blade([2])), blade_product(Blade([2]), Blade([1])))

# %%
# The sign is a cocycle, which is exactly what makes the product
# associative.  Check it on every triple of subsets of a small window.
from itertools import chain, combinations

window = range(-2, 2)
subsets = [Blade(c) for c in chain.from_iterable(combinations(window, k) for k in range(5))]
ok = all(
    sigma(A, B) * sigma(sym_diff(A, B), C) == sigma(A, sym_diff(B, C)) * sigma(B, C)
    for A in subsets for B in subsets for C in subsets
)
print(f"cocycle identity holds on all {len(subsets) ** 3} triples:", ok)
