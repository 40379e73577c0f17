"""
Degree reduction, step by step
==============================

A t-nomial of huge degree can be traded for a handful of polynomials of
small degree with the same root accounting.  This demo shows the whole
certificate for one input: the small exponent multiplier e, the
centered exponents, and the reduced polynomials whose root counts sum
to k * R(f).
"""

from tnomial import (
    build,
    count_roots_bruteforce,
    degree_reduce,
    format_tnomial,
    make_prime_field,
)

field = make_prime_field(101)
f = build(field, [(0, 1), (23, 50), (96, 95)])
print(f"input over F_101: {format_tnomial(f)}   (degree {f.degree})")
print(f"direct root count: {count_roots_bruteforce(f)}")

cert = degree_reduce(f)
print(f"\nscanned multipliers e in [1, {cert.n})")
print(f"chosen e = {cert.e}, gcd(e, q-1) = {cert.k}"
      + ("  (the units split into that many cosets)" if cert.coset_split else ""))
print(f"centered exponents e*a + v: {[cert.e * a + vi for a, vi in zip(cert.original.exponents[1:], cert.v)]}")
print(f"max |centered exponent| M = {cert.M}  (so every reduced degree <= {2 * cert.M})")

print("\nreduced polynomials:")
for h, r in zip(cert.reduced_polys, cert.root_accounting):
    print(f"  deg {h.degree:>3}  R = {r}   {format_tnomial(h)}")

print(f"\nsum of reduced root counts = {sum(cert.root_accounting)} "
      f"= {cert.k} * {cert.root_count} = k * R(f)")
