"""
GA(p, q) and Cayley tables
==========================

GA(p, q) is the part of the big algebra generated by e[-q] ... e[p-1].
Because negative indices are the ones that square to -1, smaller algebras
sit inside larger ones without renaming anything.
"""

# %%
from gacalc import Signature
from gacalc import basis_vector as e
from gacalc.cli import format_table

complex_numbers = Signature(0, 1)
print(complex_numbers, "dimension", complex_numbers.dimension())
print(format_table(complex_numbers))

# %%
# The spacetime-like algebra GA(1, 1).
sta = Signature(1, 1)
print(sta.basis())
print(format_table(sta))

# %%
# Membership is a window check on the indices.
x = e(0) * e(-1)
print(Signature(1, 1).contains(x), Signature(1, 0).contains(x))
# anything in GA(1, 1) is also in every larger window
print(all(Signature(1 + dp, 1 + dq).contains(x) for dp in range(3) for dq in range(3)))

# %%
# Products never leave the window.
print(sta.closure_check(e(0) + 2, e(-1) * e(0)))

# %%
# Dimensions double with each generator.
for n in range(6):
    print(n, Signature(n, 0).dimension(), len(Signature(n, 0).basis()))

# %%
# The reals satisfy the relations of GA(1, 0) if e[0] is taken to be 1,
# but here e[0] is a basis element of its own.
print(e(0) * e(0) == 1, e(0) == 1)
