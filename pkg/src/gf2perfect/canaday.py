"""Bounded machine verification of the classical structure lemmas.

These verifiers turn the toolkit behind the classification of even
perfect polynomials (largely Canaday, The sum of the divisors of a
polynomial, Duke Math. J. 8, 1941) into exhaustive scans: facts about
complete polynomials 1 + x + ... + x^h, coefficient-reversal symmetry,
and the factor structure of sigma on prime powers.  Each verifier scans
its full parameter range and returns what it found, so the caller can
compare against the classically claimed solution set; none of them
proves anything beyond the configured bounds.
"""

from dataclasses import dataclass

from .factor import factorize, irreducibles_up_to, is_irreducible
from .gf2poly import X1, degree, divrem, is_self_inverse, pow_, translate
from .sigma import sigma_prime_power


def _ones(n):
    # 1 + x + ... + x^n, the complete polynomial of degree n
    return (1 << (n + 1)) - 1


@dataclass(frozen=True)
class SpecialForm:
    """Witness that a polynomial equals x^a (x+1)^b + 1."""

    a: int
    b: int
    witness: int

    def __post_init__(self):
        rebuilt = (pow_(X1, self.b) << self.a) ^ 1
        if rebuilt != self.witness:
            raise ValueError('special form does not reproduce its witness')


def is_complete(p):
    """The h with p = 1 + x + ... + x^h, or None."""
    if p == 0:
        raise ValueError('the zero polynomial is not complete')
    if p & (p + 1):  # not an all-ones mask
        return None
    return degree(p)


def special_form(p):
    """Decompose p as x^a (x+1)^b + 1 via the factorization of p + 1."""
    if p == 0:
        raise ValueError('special form of the zero polynomial is undefined')
    v = p ^ 1
    if v == 0:
        return None
    a = (v & -v).bit_length() - 1
    w = v >> a
    b = degree(w)
    if w != pow_(X1, b):
        return None
    return SpecialForm(a, b, p)


def verify_lemma1_iv(max_deg):
    """All irreducible self-inverse special-form polynomials of degree
    2..max_deg; classically exactly 1+x+x^2 and 1+x+x^2+x^3+x^4."""
    if max_deg < 2:
        raise ValueError('max_deg must be >= 2')
    out = []
    for d in range(2, max_deg + 1):
        for a in range(d + 1):
            p = (pow_(X1, d - a) << a) ^ 1
            if is_self_inverse(p) and is_irreducible(p):
                out.append(p)
    return sorted(out)


def verify_lemma4(h_bound, k_bound):
    """All (h, k, P, Q) with sigma(x^(2h)) = P*Q for irreducible P, Q
    and P = sigma((x+1)^(2k)); classically the single solution
    (4, 1, 1+x+x^2, 1+x^3+x^6)."""
    if h_bound < 1 or k_bound < 1:
        raise ValueError('bounds must be >= 1')
    out = []
    for h in range(1, h_bound + 1):
        a = _ones(2 * h)
        for k in range(1, k_bound + 1):
            p = translate(_ones(2 * k))
            if degree(p) >= degree(a):
                break
            q, r = divrem(a, p)
            if r == 0 and is_irreducible(p) and is_irreducible(q):
                out.append((h, k, p, q))
    return out


def verify_lemma5(p_deg_bound, n_bound):
    """Flag any sigma(P^(2n)) that is a proper perfect power Q^m, m >= 2.

    The exponent is read off the factorization: sigma(P^(2n)) is a
    perfect power exactly when the gcd of its factor multiplicities
    exceeds 1.  Classically there are no violations.
    """
    import math

    violations = []
    for p, n, fac in _sigma_even_powers(p_deg_bound, n_bound):
        g = math.gcd(*(e for _, e in fac)) if fac.omega else 0
        if g >= 2:
            violations.append({'p': p, 'n': n, 'root': _root_of(fac, g),
                               'power': g})
    return violations


def verify_lemma6(p_deg_bound, n_bound):
    """Check the degree inequalities on repeated factors of sigma(P^(2n)).

    For every decomposition sigma(P^(2n)) = Q^m * A with m > 1 the
    classical claim is deg(P) > (m-1) deg(Q) for odd m and
    deg(P) > m deg(Q) for even m; every violation is reported.
    """
    violations = []
    for p, n, fac in _sigma_even_powers(p_deg_bound, n_bound):
        for q, e in fac:
            for m in range(2, e + 1):
                bound = (m - 1 if m % 2 else m) * degree(q)
                if not degree(p) > bound:
                    violations.append({'p': p, 'n': n, 'q': q, 'm': m})
    return violations


def _sigma_even_powers(p_deg_bound, n_bound):
    if p_deg_bound < 1 or n_bound < 1:
        raise ValueError('bounds must be >= 1')
    for p in irreducibles_up_to(p_deg_bound):
        for n in range(1, n_bound + 1):
            yield p, n, factorize(sigma_prime_power(p, 2 * n))


def _root_of(fac, g):
    from .gf2poly import mul

    root = 1
    for q, e in fac:
        root = mul(root, pow_(q, e // g))
    return root


def verify_theorem8(h_bound):
    """All h <= h_bound for which every prime factor of
    1 + x + ... + x^(2h) has a special form; classically {1, 2, 3}."""
    if h_bound < 3:
        raise ValueError('h_bound must be >= 3')
    out = []
    for h in range(1, h_bound + 1):
        fac = factorize(_ones(2 * h))
        if all(special_form(q) is not None for q in fac.primes()):
            out.append(h)
    return out


def verify_minimal_prime_parity(a):
    """True iff the number of minimal-degree primes dividing a is even.

    "Minimal" is read as minimal degree among the prime factors of a;
    a is expected to be perfect (the caller checks).
    """
    fac = factorize(a)
    if fac.omega == 0:
        return True
    dmin = min(degree(q) for q in fac.primes())
    return sum(1 for q in fac.primes() if degree(q) == dmin) % 2 == 0
