"""Print the d- and e-matrices for m = 4, n = 2 and check that they are inverse."""

from fockkl.fock import d_matrix, e_matrix
from fockkl.laurent import ONE, ZERO
from fockkl.partitions import conjugate

m, n = 4, 2
d = d_matrix(m, n)
e = e_matrix(m, n)
print(d.to_text())
print()
print(e.to_text())

# sum_nu e_{lam',nu'}(-q) d_{nu,mu}(q) should be the identity
ok = True
for lam in d.index:
    for mu in d.index:
        s = ZERO
        for nu in d.index:
            s = s + e[conjugate(lam), conjugate(nu)].substitute_neg_q() * d[nu, mu]
        ok &= s == (ONE if lam == mu else ZERO)
print("\ninverse relation:", "holds" if ok else "FAILS")
