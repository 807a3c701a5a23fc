"""Irreducibility testing, factorization and enumeration of GF(2) irreducibles.

Inputs of degree at most 20 are factored by trial division against the
cached table of irreducibles up to degree 10, which is enough to expose
every composite in that range; larger inputs go through squarefree
splitting, then distinct-degree and trace-based equal-degree splitting.
Both paths produce the same canonical Factorization and are tested
against each other.
"""

import random
from dataclasses import dataclass
from functools import lru_cache

from .gf2poly import (
    X, X1, degree, derivative, divexact, divrem, gcd, mul, pow_, rem,
    sqrt, square,
)

# trial division against irreducibles of degree <= _TRIAL_SIEVE_DEG is a
# complete factorization for inputs of degree <= 2*_TRIAL_SIEVE_DEG
_TRIAL_SIEVE_DEG = 10
_TRIAL_INPUT_DEG = 2 * _TRIAL_SIEVE_DEG

_EDF_SEED = 0x5EED


@dataclass(frozen=True)
class Factorization:
    """Multiset of (irreducible, exponent) pairs in ascending prime order."""

    value: int
    factors: tuple

    @property
    def omega(self):
        """Number of distinct irreducible factors."""
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def primes(self):
        """The distinct irreducible factors, ascending."""
        return [p for p, _ in self.factors]

    def product(self):
        """Reassemble the factorization; equals ``value`` by construction."""
        r = 1
        for p, e in self.factors:
            r = mul(r, pow_(p, e))
        return r

    def to_dict(self):
        """JSON-friendly form with hex primes."""
        return {
            'poly_hex': format(self.value, '#x'),
            'factors': [{'prime_hex': format(p, '#x'), 'exp': e}
                        for p, e in self.factors],
        }


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(p):
    """Rabin's criterion: x^(2^d) == x mod p, plus gcd checks at the
    maximal proper divisors d/r of d for each prime r dividing d."""
    d = degree(p)
    if d < 1:
        raise ValueError('irreducibility is undefined for constants')
    if d == 1:
        return True
    if p & 1 == 0:  # divisible by x
        return False
    checkpoints = {d // r for r in _prime_divisors(d)}
    h = X
    for i in range(1, d + 1):
        h = rem(square(h), p)
        if i in checkpoints and gcd(h ^ X, p) != 1:
            return False
    return h == X


@lru_cache(maxsize=None)
def _irreducibles_up_to(d):
    out = [X, X1]
    for n in range(2, d + 1):
        for c in range((1 << n) | 1, 1 << (n + 1), 2):
            # skip multiples of x+1 (even weight) before the full test
            if (c.bit_count() & 1) and is_irreducible(c):
                out.append(c)
    return tuple(out)


def irreducibles_up_to(d):
    """All irreducibles of degree <= d, ascending by (degree, bitmask)."""
    if d < 1:
        raise ValueError('degree bound must be >= 1')
    return list(_irreducibles_up_to(d))


def save_sieve_cache(path, polys):
    """Persist a sieve as hex bitmasks, one per line."""
    with open(path, 'w') as fh:
        for p in polys:
            fh.write(format(p, '#x') + '\n')


def load_sieve_cache(path):
    """Read back a sieve written by save_sieve_cache."""
    with open(path) as fh:
        return [int(line, 16) for line in fh if line.strip()]


def factorize(p, seed=None):
    """Complete factorization of a nonzero polynomial.

    The seed feeds the equal-degree splitting step only; the default is
    fixed so repeated runs are reproducible.
    """
    if p == 0:
        raise ValueError('cannot factor the zero polynomial')
    if p == 1:
        return Factorization(1, ())
    if degree(p) <= _TRIAL_INPUT_DEG:
        counts = _factor_trial(p)
    else:
        counts = {}
        _factor_general(p, 1, counts,
                        random.Random(_EDF_SEED if seed is None else seed))
    return Factorization(p, tuple(sorted(counts.items())))


def _factor_trial(p):
    counts = {}
    for q in _irreducibles_up_to(_TRIAL_SIEVE_DEG):
        if 2 * degree(q) > degree(p):
            break
        while True:
            quo, r = divrem(p, q)
            if r:
                break
            p = quo
            counts[q] = counts.get(q, 0) + 1
    if degree(p) >= 1:
        # no factor of degree <= deg(p)/2 remains, so p is irreducible
        counts[p] = counts.get(p, 0) + 1
    return counts


def _factor_general(p, mult, counts, rng):
    # peel squarefree layers: gcd(p, p') collects exactly the primes of
    # even multiplicity plus one copy less of the odd-multiplicity ones,
    # so the cofactor is squarefree and the rest is a perfect square
    while degree(p) >= 1:
        d = derivative(p)
        if d == 0:
            p = sqrt(p)
            mult *= 2
            continue
        g = gcd(p, d)
        for q in _factor_squarefree(divexact(p, g), rng):
            counts[q] = counts.get(q, 0) + mult
        p = g


def _factor_squarefree(w, rng):
    """Split a squarefree w into irreducibles (distinct-degree first)."""
    out = []
    h = X
    d = 1
    while 2 * d <= degree(w):
        h = rem(square(h), w)  # h = x^(2^d) mod w
        g = gcd(h ^ X, w)
        if g != 1:
            out.extend(_split_equal_degree(g, d, rng))
            w = divexact(w, g)
            h = rem(h, w)
        d += 1
    if degree(w) >= 1:
        out.append(w)
    return out


def _split_equal_degree(g, d, rng):
    """Split a product of distinct degree-d irreducibles via the trace map."""
    if degree(g) == d:
        return [g]
    while True:
        u = rng.randrange(1, 1 << degree(g))
        # trace u + u^2 + u^4 + ... + u^(2^(d-1)) lands in GF(2) on each factor
        t = u
        v = u
        for _ in range(d - 1):
            v = rem(square(v), g)
            t ^= v
        s = gcd(t, g)
        if 0 < degree(s) < degree(g):
            return (_split_equal_degree(s, d, rng)
                    + _split_equal_degree(divexact(g, s), d, rng))


def squarefree_part(p):
    """Product of the distinct irreducible factors of a nonzero p."""
    if p == 0:
        raise ValueError('squarefree part of the zero polynomial is undefined')
    r = 1
    for q, _ in factorize(p):
        r = mul(r, q)
    return r


def smallest_factor_tables(max_deg):
    """Tables (spf, quot) over all ints below 2^(max_deg+1).

    spf[a] is an irreducible factor of a (the least one, as an int) and
    quot[a] = a // spf[a]; entries 0 and 1 are left as zero.  Built by
    marking products p*m for every irreducible p of degree <= max_deg/2,
    first-set-wins; anything unmarked afterwards has no factor of degree
    <= max_deg/2 and is therefore itself irreducible.
    """
    import numpy as np

    size = 1 << (max_deg + 1)
    spf = np.zeros(size, dtype=np.uint32)
    quot = np.zeros(size, dtype=np.uint32)
    for p in _irreducibles_up_to(max_deg // 2):
        m = np.arange(1, 1 << (max_deg + 1 - degree(p)), dtype=np.uint32)
        prod = np.zeros_like(m)
        bits = p
        shift = 0
        while bits:
            if bits & 1:
                prod ^= m << shift
            bits >>= 1
            shift += 1
        unmarked = spf[prod] == 0
        prod = prod[unmarked]
        spf[prod] = p
        quot[prod] = m[unmarked]
    leftovers = np.nonzero(spf[2:] == 0)[0].astype(np.uint32) + 2
    spf[leftovers] = leftovers
    quot[leftovers] = 1
    return spf, quot
