"""Independent reference values, computed with sympy from first principles.

The numbers printed here are frozen in tests/test_oracles.cpp. Rerun with
`python3 tests/oracles/oracles.py` after changing any of the definitions.
"""
from itertools import combinations

import sympy as sp

q = sp.symbols("q")
z3 = sp.exp(2 * sp.pi * sp.I / 3)


def gauss_poly(l, k):
    # Coefficient of q^t counts k-subsets of range(l) with excess sum t.
    base = k * (k - 1) // 2
    return sp.expand(sum(q ** (sum(c) - base) for c in combinations(range(l), k)))


def q_fact(l, qq):
    return sp.prod([sum(qq ** t for t in range(i)) for i in range(1, l + 1)])


def stirling2(n, k):
    if n == k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


print("q_binomial at zeta3")
for l, k in [(3, 1), (6, 3), (6, 2), (4, 2), (5, 2)]:
    print(l, k, sp.nsimplify(sp.simplify(sp.expand_complex(gauss_poly(l, k).subs(q, z3)))))

print("q_binomial at 2")
for l, k in [(4, 2), (6, 3), (8, 4), (8, 1)]:
    print(l, k, gauss_poly(l, k).subs(q, 2))

print("stirling_partial(r, s) = r! S(s, r)")
for r, s in [(2, 2), (2, 3), (3, 4), (3, 5), (4, 6)]:
    print(r, s, sp.factorial(r) * stirling2(s, r))

# Dihedral truncated pairing at N = 1: <G^k' F2^e, g^s (u0)^k> = (-1)^(k k') s^e.
rows = [(k, s) for k in range(2) for s in (-1, 0, 1)]
cols = [(kp, e) for kp in range(2) for e in range(3)]
M = sp.Matrix([[(-1) ** (k * kp) * sp.Integer(s) ** e if not (s == 0 and e == 0) else (-1) ** (k * kp)
                for (kp, e) in cols] for (k, s) in rows])
print("dihedral gram |det|", abs(M.det()))

# Taft(3,1) truncated pairing at N = 1: xi^(j j') delta_{s s'} delta_{l l'} s'! l'!_q with q = xi.
entries = []
idx = [(j, s, l) for j in range(3) for s in range(2) for l in range(3)]
T = sp.Matrix([[z3 ** (j * jp) * sp.factorial(sp_) * q_fact(lp, z3) if (s, l) == (sp_, lp) else 0
                for (jp, sp_, lp) in idx] for (j, s, l) in idx])
print("taft gram |det|", sp.nsimplify(sp.simplify(abs(sp.expand_complex(T.det())))))

# Vandermonde on cube roots of unity, squared (discriminant of x^3 - 1).
V = sp.Matrix(3, 3, lambda a, b: z3 ** (a * b))
print("vandermonde3 det^2", sp.simplify(sp.expand_complex(V.det() ** 2)))

# phi_0 phi_1 in D(3,1,zeta6): (1 - gamma^-1 x)(1 - gamma^-2 x) with gamma = zeta3.
x = sp.symbols("x", real=True)
print("phi0 phi1", sp.simplify(sp.expand_complex(sp.expand((1 - z3 ** -1 * x) * (1 - z3 ** -2 * x)))))

# theta product for D(3,1,zeta6) at alpha = 2: m (1 - a^d) prod_{k=1}^{m-1} (1 - g^k a^d) / (1 - g^k).
m, d, a = 3, 1, 2
prod = m * (1 - a ** d)
for k in range(1, m):
    prod *= (1 - z3 ** k * a ** d) / (1 - z3 ** k)
print("theta product", sp.nsimplify(sp.simplify(sp.expand_complex(prod))), "expected", 1 - a ** (m * d))
