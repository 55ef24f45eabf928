"""
Reducing generator words
========================

A word like ``[3, 1, 3]`` means e[3] e[1] e[3].  Bubble-sorting it with a
sign flip per swap, and cancelling equal neighbours, gives a normal form
without ever calling the sign function.  That makes it a good check on the
product.
"""

# %%
from gacalc import Blade, alpha, beta, blade, reduce_word, word_to_multivector
from gacalc.words import bubble_reduce, insertion_reduce

word = [3, 1, 3]
print(reduce_word(word))
print(word_to_multivector(word))

# %%
# Two strategies, same answer.  The swap counts differ, their parity doesn't.
word = [2, -1, 0, 2, -1, 5, 0]
for reducer in (bubble_reduce, insertion_reduce):
    r = reducer(word)
    print(reducer.__name__, r.sign, r.blade, "sign changes:", r.sign_changes)

# %%
# For two blades written one after the other, the sign changes match the
# cross-inversion count plus the shared negative indices.
I, J = Blade([-2, 0, 4]), Blade([-2, 1, 3])
r = bubble_reduce(list(I) + list(J))
print(r.sign_changes % 2, (alpha(I, J) + beta(I, J)) % 2)

# %%
# Random agreement check against the geometric product.
import random

rng = random.Random(0)
mismatches = 0
for _ in range(2000):
    w = [rng.randint(-4, 4) for _ in range(rng.randint(0, 8))]
    s, b = reduce_word(w)
    mismatches += word_to_multivector(w) != blade(b, s)
print("mismatches:", mismatches)
