"""
Multivector arithmetic
======================

Multivectors are sparse sums of blades with real coefficients.  ``+`` and
``-`` work term by term; ``*`` is the geometric product.
"""

# %%
from gacalc import basis_vector as e
from gacalc import blade, grade_project, one

x = 1 + 2 * e(0) - 3 * blade([-1, 0])
print(x)
print(x.terms)

# %%
# Distinct generators anticommute, so a bivector squares to a scalar.
# With two negative generators the bivector behaves like a quaternion unit.
i = e(-1) * e(-2)
print("i   =", i)
print("i*i =", i * i)

j = e(-2) * e(-3)
print("i*j =", i * j, " j*i =", j * i)

# %%
# ``1 + e[1]`` is a zero divisor: e[1] squares to +1.
print((1 + e(1)) * (1 - e(1)))

# %%
# Rotating in the e[0]e[1] plane: the product of two unit vectors is a
# rotor, and R v R~ turns v by twice the angle between them.
import math

a = e(0)
b = math.cos(math.pi / 8) * e(0) + math.sin(math.pi / 8) * e(1)
R = b * a
R_rev = a * b
v = e(0)
print("rotated:", R * v * R_rev)

# %%
# Grade projection splits a multivector by blade size.
y = (e(0) + e(1)) * (e(1) + e(2))
for k in y.grades():
    print(k, grade_project(y, k))
print(y == one() + blade([0, 1]) + blade([0, 2]) + blade([1, 2]))
