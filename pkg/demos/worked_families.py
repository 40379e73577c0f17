"""
Three families with fully understood root structure
====================================================

Walks the closed-form families the library is calibrated against and
prints the count R(f) of distinct nonzero roots, the largest vanishing
coset size C(f), and the exponent parameters for each member.
"""

from tnomial import (
    analyze,
    build,
    compute_C,
    count_roots_bruteforce,
    find_vanishing_cosets,
    make_extension_field,
    make_prime_field,
    render_json,
)

# Family 1: x^((q-1)/2) + 1 vanishes exactly on the non-squares, which
# form a single coset of size (q-1)/2, so R = C = (q-1)/2.
print("== half-power binomials ==")
for q, field in [
    (7, make_prime_field(7)),
    (11, make_prime_field(11)),
    (13, make_prime_field(13)),
    (27, make_extension_field(3, 3)),
]:
    f = build(field, [(0, 1), ((q - 1) // 2, 1)])
    print(f"q={q:>2}: R={count_roots_bruteforce(f):>2}  C={compute_C(f):>2}  expected {(q - 1) // 2}")

# Family 2: the quotient (x^(q-1) - 1) / (x^((q-1)/t) - 1) expands to
# 1 + x^s + x^(2s) + ... with s = (q-1)/t.  Its roots are every unit
# that is not a t-th root of unity, i.e. t-1 full cosets of size s.
# (C can exceed s: the root set may also assemble into larger cosets.)
print("\n== unit-group quotients ==")
for q, t in [(7, 3), (13, 3), (13, 4)]:
    field = make_prime_field(q)
    s = (q - 1) // t
    f = build(field, [(i * s, 1) for i in range(t)])
    wits = find_vanishing_cosets(f, s)
    print(f"q={q:>2} t={t}: R={count_roots_bruteforce(f):>2}  C={compute_C(f)}  "
          f"vanishing size-{s} cosets: {len(wits)}  expected R={(q - 1) - s}, cosets={t - 1}")

# Family 3: x^sqrt(q) + x - 2 over F_q with square q.  The Frobenius
# fixed points of the prime subfield give sqrt(q) roots, yet no coset
# of size > 1 vanishes: many roots with C = 1.
print("\n== sqrt(q) trinomials ==")
for p in (3, 5, 7):
    field = make_extension_field(p, 2)
    f = build(field, [(p, 1), (1, 1), (0, -2)])
    print(f"q={p * p:>2}: R={count_roots_bruteforce(f)}  C={compute_C(f)}")

# The full report for one member, as the CLI would emit it.
print("\n== full report for x^3 + 1 over F_7 ==")
field = make_prime_field(7)
print(render_json(analyze(build(field, [(0, 1), (3, 1)]))))
