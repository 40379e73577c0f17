"""Vanishing of a t-nomial on cosets of multiplicative subgroups.

For k | q-1 the subgroup H = {x : x**k = 1} has order k; the coset of H
labelled by beta (an element of the order-(q-1)/k subgroup) is the
solution set of x**k = beta.  Writing each exponent as a_i = k*u_i + r_i,
f vanishes identically on that coset iff every residue-class sum

    sum over terms with r_i = r of  c_i * beta**u_i

is zero: substituting x**k = beta collapses f on the coset to one such
sum per residue class, weighted by x**r.

C(f) is the largest k for which a vanishing coset exists, with the
conventions C = 0 when f has no nonzero root at all and C = 1 when it
has roots but no vanishing coset of size larger than one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    BetaNotInSubgroup,
    InternalInvariantError,
    NotADivisor,
    TooFewTerms,
)
from .field import Element, FieldSpec, subgroup_elements
from .numtheory import prime_divisors
from .params import compute_S, compute_delta
from .poly import TNomial, count_roots_bruteforce, has_nonzero_root, normalize_lowest


@dataclass(frozen=True)
class CosetWitness:
    """A coset {x : x**k = beta} on which the polynomial vanishes.

    representative is the smallest power of the field generator lying in
    the coset; the full coset is representative times the subgroup of
    order (q-1)/k."""

    k: int
    beta: Element
    representative: Element


def _validate_beta(field: FieldSpec, k: int, beta: Element) -> None:
    n = field.q - 1
    if k < 1 or n % k != 0:
        raise NotADivisor(f"{k} does not divide the unit-group order {n}")
    if beta == field.zero or field.pow(beta, n // k) != field.one:
        raise BetaNotInSubgroup(
            f"beta must lie in the subgroup of order {n // k}"
        )


def vanishes_on_coset(f: TNomial, k: int, beta: Element) -> bool:
    """True iff f is identically zero on the coset {x : x**k = beta}."""
    F = f.field
    _validate_beta(F, k, beta)
    sums: dict[int, Element] = {}
    for a, c in f.terms:
        r, u = a % k, a // k
        contrib = F.mul(c, F.pow(beta, u))
        sums[r] = F.add(sums[r], contrib) if r in sums else contrib
    return all(v == F.zero for v in sums.values())


def find_vanishing_cosets(f: TNomial, k: int) -> list[CosetWitness]:
    """All cosets of the order-k subgroup on which f vanishes, ordered by
    the canonical integer label of beta."""
    F = f.field
    n = F.q - 1
    if k < 1 or n % k != 0:
        raise NotADivisor(f"{k} does not divide the unit-group order {n}")
    betas = [b for b in subgroup_elements(F, n // k) if vanishes_on_coset(f, k, b)]
    if not betas:
        return []
    reps = _coset_representatives(F, k, betas)
    betas.sort(key=F.element_to_int)
    return [CosetWitness(k=k, beta=b, representative=reps[b]) for b in betas]


def _coset_representatives(field: FieldSpec, k: int, betas) -> dict:
    """Smallest-power k-th root of each beta: one scan of g**0..g**(q-2).

    g**(m*k) walks the image subgroup, so the first m hitting beta gives
    the representative g**m."""
    pending = set(betas)
    out = {}
    gk = field.pow(field.g, k)
    xk = field.one
    x = field.one
    for _ in range(field.q - 1):
        if xk in pending:
            out[xk] = x
            pending.discard(xk)
            if not pending:
                break
        xk = field.mul(xk, gk)
        x = field.mul(x, field.g)
    return out


def compute_C(f: TNomial) -> int:
    """Largest k | q-1 with a vanishing coset of the order-k subgroup;
    0 if f has no nonzero root, 1 if it has roots but no such coset.

    Only k in S(f) can carry a vanishing coset (a residue class with a
    single term has a lone nonzero summand), so the search runs over
    S(f) from the top down.
    """
    fn = normalize_lowest(f)
    F = fn.field
    n = F.q - 1
    if fn.t >= 2:
        for k in sorted(compute_S(fn), reverse=True):
            if k == 1:
                break
            if any(
                vanishes_on_coset(fn, k, b) for b in subgroup_elements(F, n // k)
            ):
                return k
    return 1 if has_nonzero_root(fn) else 0


class CosetDecomposition(NamedTuple):
    delta: int
    coset_count: int
    bound: float


def root_coset_decomposition(f: TNomial) -> CosetDecomposition:
    """Group the roots of f into cosets of the order-delta subgroup.

    After normalizing the lowest exponent to 0, every exponent is a
    multiple of delta = gcd(exponents, q-1), so f factors through
    x**delta and its root set is a union of full cosets of
    H = {x : x**((q-1)/delta-th power...) } of size delta.  Returns
    (delta, number of cosets, 2*((q-1)/delta)**(1-1/(t-1))).

    The full-coset structure is verified on the way; a partial coset
    would indicate a bug.
    """
    if f.t < 2:
        raise TooFewTerms("decomposition needs t >= 2")
    fn = normalize_lowest(f)
    F = fn.field
    n = F.q - 1
    delta = compute_delta(fn)
    groups: dict[int, int] = {}
    # direct scan; group roots by the canonical label of x**delta
    powers = [F.one] * fn.t
    steps = [F.pow(F.g, a) for a, _ in fn.terms]
    coeffs = [c for _, c in fn.terms]
    xd = F.one
    gd = F.pow(F.g, delta)
    for _ in range(n):
        acc = F.zero
        for c, pw in zip(coeffs, powers):
            acc = F.add(acc, F.mul(c, pw))
        if acc == F.zero:
            key = F.element_to_int(xd)
            groups[key] = groups.get(key, 0) + 1
        powers = [F.mul(pw, s) for pw, s in zip(powers, steps)]
        xd = F.mul(xd, gd)
    for key, cnt in groups.items():
        if cnt != delta:
            raise InternalInvariantError(
                f"coset {key} contains {cnt} roots, expected the full {delta}"
            )
    eps = 1.0 / (fn.t - 1)
    bound = 2.0 * (n // delta) ** (1.0 - eps)
    return CosetDecomposition(delta=delta, coset_count=len(groups), bound=bound)
