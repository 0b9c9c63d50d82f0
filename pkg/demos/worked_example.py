"""Walk through the n = 3, mu = (6,2,1) example: labels, column and duality."""

from fockkl.fock import check_theorem2, ell_mu, gplus_vector
from fockkl.partitions import conjugate, hat, restricted_decomp, tilde

n, r, mu = 3, 3, (6, 2, 1)
rows = [(6, 2, 1), (7, 1, 1), (6, 3), (8, 1)]

mu0, mu1 = restricted_decomp(mu, n, r)
print(f"mu = {mu0} + {n}*{mu1}")
print(f"hat(mu) = {hat(mu, n, r)}, size {hat(mu, n, r).size}, l_mu = {ell_mu(mu, n, r)}")

print(f"\nG+ for the column {conjugate(mu)}:")
v = gplus_vector(mu, n, r, route="r")
for lam in v.support():
    print(f"  {str(lam):>18}  {v[lam]}")

print("\nd_{lam', mu'}(q) against q^shift d_{tilde lam, hat mu}(q^-1):")
for lam in rows:
    c = check_theorem2(lam, mu, n, r)
    print(f"  {str(tilde(lam, n, r)):>8}  lhs={c.lhs!s:<4} dual={c.dual!s:<4} shift={c.shift}  {'ok' if c.holds else 'MISMATCH'}")
