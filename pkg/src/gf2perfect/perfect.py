"""Perfection certificates, the known catalog, and the searches.

A polynomial A is perfect when sigma(A) = A.  Three search strategies:

- exhaustive_search walks every nonconstant polynomial up to a degree
  bound via the bulk sigma table;
- shape_search enumerates candidates x^h (x+1)^k P^l Q^m over distinct
  odd irreducibles P, Q, optionally pruning exponent patterns that the
  classical structure lemmas exclude;
- odd_square_search targets odd candidates whose exponents all equal 2.

Every search certifies its finds and reports them as
PerfectCertificate values inside a SearchReport.
"""

import json
import time
from dataclasses import dataclass, field

from .factor import Factorization, factorize, irreducibles_up_to
from .gf2poly import (
    X, X1, degree, derivative, gcd, mul, pow_, square, to_hex, to_text,
    translate,
)
from .sigma import (
    Parity, parity, sigma_of_factorization, sigma_prime_power, sigma_table,
)


@dataclass(frozen=True)
class PerfectCertificate:
    """Verdict sigma(poly) == poly together with both factorizations."""

    poly: int
    factorization: Factorization
    sigma_factorization: Factorization
    is_perfect: bool
    parity: Parity
    omega: int

    def to_dict(self):
        return {
            'poly_hex': to_hex(self.poly),
            'poly_text': to_text(self.poly),
            'degree': degree(self.poly),
            'factors': [{'prime_hex': to_hex(p), 'exp': e}
                        for p, e in self.factorization],
            'perfect': self.is_perfect,
            'parity': self.parity.value,
            'omega': self.omega,
        }


@dataclass(frozen=True)
class Shape:
    """Exponent pattern (h, k, l, m) for x^h (x+1)^k P^l Q^m candidates.

    The case tag names which structural family the pattern belongs to;
    l and m are oriented so the tag's constraint reads off directly
    (tag b: l = 2^n, m = 2^n - 1; tags c/d/e: m + 1 a power of two).
    """

    case_tag: str
    h: int
    k: int
    l: int
    m: int

    def __post_init__(self):
        if self.case_tag not in 'abcde':
            raise ValueError(f'unknown case tag {self.case_tag!r}')
        if min(self.h, self.k) < 0 or min(self.l, self.m) < 1:
            raise ValueError('exponents out of range')
        h, k, l, m = self.h, self.k, self.l, self.m
        mersenne = (m + 1) & m == 0
        ok = {
            'a': l % 2 == 0 and m % 2 == 0,
            'b': l >= 2 and l & (l - 1) == 0 and m == l - 1,
            'c': h % 2 == 0 and k % 2 == 0 and l % 2 == 1 and mersenne,
            'd': (h + k) % 2 == 1 and l % 2 == 1 and mersenne,
            'e': h % 2 == 1 and k % 2 == 1 and l % 2 == 1 and m % 2 == 1
                 and mersenne,
        }[self.case_tag]
        if not ok:
            raise ValueError(
                f'exponents ({h},{k},{l},{m}) violate case {self.case_tag!r}')


@dataclass
class SearchReport:
    """Outcome of one search run; counts are reproducible per config."""

    kind: str
    degree_bound: int
    config: dict
    candidates_examined: int
    shapes_pruned: dict
    perfects_found: list
    wall_time: float
    found_shapes: dict = field(default_factory=dict)  # poly -> record

    def found_polys(self):
        return [c.poly for c in self.perfects_found]

    def symmetry_pairs(self):
        """Finds grouped under the x -> x+1 symmetry, as sorted pairs."""
        pairs = {tuple(sorted((a, translate(a)))) for a in self.found_polys()}
        return sorted(pairs)

    def to_dict(self):
        d = {
            'kind': self.kind,
            'degree_bound': self.degree_bound,
            'config': self.config,
            'candidates_examined': self.candidates_examined,
            'shapes_pruned': self.shapes_pruned,
            'perfects_found': len(self.perfects_found),
            'certificates': [c.to_dict() for c in self.perfects_found],
            'symmetry_pairs': [[to_hex(a), to_hex(b)]
                               for a, b in self.symmetry_pairs()],
        }
        if self.found_shapes:
            d['found_shapes'] = [self.found_shapes[c.poly]
                                 for c in self.perfects_found]
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def iter_records(self):
        """Line-delimited certificate records, one JSON object per find."""
        for c in self.perfects_found:
            yield json.dumps(c.to_dict(), sort_keys=True)


def is_perfect(a, seed=None):
    """Certify whether sigma(a) = a, for nonzero a."""
    if a == 0:
        raise ValueError('perfection of the zero polynomial is undefined')
    fac = factorize(a, seed=seed)
    sv = sigma_of_factorization(fac)
    return PerfectCertificate(
        poly=a,
        factorization=fac,
        sigma_factorization=factorize(sv.sigma, seed=seed),
        is_perfect=sv.sigma == a,
        parity=parity(a) if a != 1 else Parity.ODD,
        omega=fac.omega,
    )


def trivial_perfect(n):
    """The n-th member (x^2+x)^(2^n - 1) of the trivial perfect family."""
    if n < 1:
        raise ValueError('n must be >= 1')
    return pow_(mul(X, X1), (1 << n) - 1)


def _product(*factors):
    r = 1
    for f in factors:
        r = mul(r, f)
    return r


# the classical sporadic perfect polynomials, by their catalog labels
T1 = _product(pow_(X, 2), X1, 0b111)                          # degree 5
T2 = _product(pow_(X, 3), pow_(X1, 4), 0b11001)               # degree 11
C1 = _product(pow_(X, 2), X1, square(0b111), 0b10011)         # degree 11
C2 = translate(C1)
C3 = _product(pow_(X, 4), pow_(X1, 4), 0b11111, 0b11001)      # degree 16
C4 = _product(pow_(X, 6), pow_(X1, 3), 0b1101, 0b1011)        # degree 15
C5 = translate(C4)
S1 = _product(pow_(X, 6), pow_(X1, 4), 0b1011, 0b1101, 0b11001)  # degree 20


def catalog():
    """Certificates for every known perfect polynomial with omega <= 5.

    The trivial family (x^2+x)^(2^n - 1) is truncated at n = 5; the
    sporadic entries are T1, T2, C1..C5, S1 and their x -> x+1 images.
    Sorted ascending by (degree, bitmask).
    """
    entries = [trivial_perfect(n) for n in range(1, 6)]
    entries += [T1, translate(T1), T2, translate(T2),
                C1, C2, C3, C4, C5, S1, translate(S1)]
    return [is_perfect(a) for a in sorted(entries)]


def exhaustive_search(max_deg):
    """Certify every nonconstant polynomial of degree <= max_deg.

    Candidates are scanned in ascending bitmask order off the bulk sigma
    table; sigma(1) = 1 is trivial, so constants are not candidates.
    """
    if max_deg < 1:
        raise ValueError('max_deg must be >= 1')
    t0 = time.perf_counter()
    table = sigma_table(max_deg)
    size = 1 << (max_deg + 1)
    found = [a for a in range(2, size) if table[a] == a]
    certs = [is_perfect(a) for a in found]
    return SearchReport(
        kind='exhaustive',
        degree_bound=max_deg,
        config={'max_deg': max_deg},
        candidates_examined=size - 2,
        shapes_pruned={},
        perfects_found=certs,
        wall_time=time.perf_counter() - t0,
    )


def _classify_pattern(l, m):
    """Map an exponent pattern to (allowed tag, pruning rule).

    Patterns with one even and one odd exponent must pair 2^n with
    2^n - 1 (else the even-exponent lemma prunes them); two odd
    exponents need at least one of Mersenne form (else the odd-exponent
    lemma prunes them).  'cde' is resolved to c, d or e once h and k
    are known.
    """
    l_even, m_even = l % 2 == 0, m % 2 == 0
    if l_even and m_even:
        return 'a', None
    if l_even != m_even:
        two_pow = l if l_even else m
        other = m if l_even else l
        if two_pow & (two_pow - 1) == 0 and other == two_pow - 1:
            return 'b', None
        return None, 'lemma11'
    if (l + 1) & l == 0 or (m + 1) & m == 0:
        return 'cde', None
    return None, 'lemma10'


def _resolve_tag(tag, h, k, l, m):
    """Final Shape for a certified hit, orienting (l, m) to the tag."""
    if tag == 'cde':
        tag = 'c' if h % 2 == 0 and k % 2 == 0 else \
              'e' if h % 2 == 1 and k % 2 == 1 else 'd'
        if (m + 1) & m != 0:  # put the Mersenne exponent in the m slot
            l, m = m, l
    elif tag == 'b' and l % 2 == 1:
        l, m = m, l
    return Shape(tag, h, k, l, m), l, m


def _hk_grid_size(budget):
    # pairs h, k >= 1 with h + k <= budget
    return budget * (budget - 1) // 2 if budget >= 2 else 0


def _shape_chunk(args):
    """Enumerate and certify one round-robin slice of the (P, Q) pairs.

    Top-level so a worker pool can run slices in parallel; the merge in
    shape_search is order-independent, so the outcome does not depend
    on the pool size.
    """
    deg_bound, p_deg_bound, use_pruning, chunk, chunks = args
    odd_primes = [p for p in irreducibles_up_to(p_deg_bound) if degree(p) >= 2]

    ones = [(1 << (h + 1)) - 1 for h in range(deg_bound + 1)]  # sigma(x^h)
    sig_x1 = [translate(v) for v in ones]                      # sigma((x+1)^k)
    x1_pow = [1]
    for _ in range(deg_bound):
        x1_pow.append(mul(x1_pow[-1], X1))

    examined = 0
    pruned = {'lemma10': 0, 'lemma11': 0}
    hits = []  # (poly, tag, h, k, l, m, P, Q)
    serial = -1
    for i, p in enumerate(odd_primes):
        dp = degree(p)
        for q in odd_primes[i + 1:]:
            serial += 1
            if serial % chunks != chunk:
                continue
            dq = degree(q)
            if dp + dq + 2 > deg_bound:
                continue
            # incremental powers and sigma values for both primes
            p_pow, p_sig = [1, p], [1, p ^ 1]
            for l in range(2, (deg_bound - dq - 2) // dp + 1):
                p_pow.append(mul(p_pow[-1], p))
                p_sig.append(p_sig[-1] ^ p_pow[-1])
            q_pow, q_sig = [1, q], [1, q ^ 1]
            for m in range(2, (deg_bound - dp - 2) // dq + 1):
                q_pow.append(mul(q_pow[-1], q))
                q_sig.append(q_sig[-1] ^ q_pow[-1])

            for l in range(1, len(p_pow)):
                for m in range(1, (deg_bound - l * dp - 2) // dq + 1):
                    budget = deg_bound - l * dp - m * dq
                    if use_pruning:
                        tag, rule = _classify_pattern(l, m)
                        if tag is None:
                            pruned[rule] += _hk_grid_size(budget)
                            continue
                    else:
                        tag, _ = _classify_pattern(l, m)
                    spq = mul(p_sig[l], q_sig[m])
                    apq = mul(p_pow[l], q_pow[m])
                    for k in range(1, budget):
                        sk = mul(sig_x1[k], spq)
                        ak = mul(x1_pow[k], apq)
                        for h in range(1, budget - k + 1):
                            examined += 1
                            if mul(ones[h], sk) == ak << h:
                                hits.append((ak << h, tag, h, k, l, m, p, q))
    return examined, pruned, hits


def shape_search(deg_bound, p_deg_bound, use_pruning=True, jobs=1):
    """Search x^h (x+1)^k P^l Q^m over distinct odd irreducibles P < Q.

    All four exponents are at least 1 (an even perfect polynomial with
    four prime factors has both linear primes present) and the total
    degree is capped by deg_bound; P and Q range over irreducibles of
    degree 2..p_deg_bound.  With pruning on, exponent patterns excluded
    by the structure lemmas are skipped and tallied per rule instead of
    certified.  jobs > 1 fans the (P, Q) pairs out to a worker pool.
    """
    if deg_bound < 1 or p_deg_bound < 1:
        raise ValueError('bounds must be >= 1')
    if jobs < 1:
        raise ValueError('jobs must be >= 1')
    t0 = time.perf_counter()
    work = [(deg_bound, p_deg_bound, use_pruning, c, jobs)
            for c in range(jobs)]
    if jobs == 1:
        parts = [_shape_chunk(work[0])]
    else:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_shape_chunk, work)

    examined = sum(part[0] for part in parts)
    pruned = {'lemma10': 0, 'lemma11': 0}
    hits = []
    for _, part_pruned, part_hits in parts:
        for rule, count in part_pruned.items():
            pruned[rule] += count
        hits.extend(part_hits)

    certs = []
    found_shapes = {}
    for poly, tag, h, k, l, m, p, q in sorted(hits):
        certs.append(is_perfect(poly))
        shape, l2, m2 = _resolve_tag(tag, h, k, l, m)
        found_shapes[poly] = {
            'case_tag': shape.case_tag, 'h': h, 'k': k, 'l': l2, 'm': m2,
            'p_hex': to_hex(p if l2 == l else q),
            'q_hex': to_hex(q if l2 == l else p),
        }
    return SearchReport(
        kind='shape',
        degree_bound=deg_bound,
        config={'deg_bound': deg_bound, 'p_deg_bound': p_deg_bound,
                'use_pruning': use_pruning},
        candidates_examined=examined,
        shapes_pruned=pruned if use_pruning else {},
        perfects_found=certs,
        wall_time=time.perf_counter() - t0,
        found_shapes=found_shapes,
    )


def odd_square_search(max_deg):
    """Look for odd perfect A = B^2 with B squarefree, deg(A) <= max_deg.

    B runs over squarefree polynomials coprime to x^2+x; the test is
    sigma(B^2) = B^2 assembled from the factorization of B.
    """
    if max_deg % 2 != 0:
        raise ValueError('max_deg must be even (candidates are squares)')
    t0 = time.perf_counter()
    examined = 0
    certs = []
    for b in range(2, 1 << (max_deg // 2 + 1)):
        # odd means unit constant term and a root-free value at 1
        if b & 1 == 0 or b.bit_count() % 2 == 0:
            continue
        if gcd(b, derivative(b)) != 1:
            continue  # not squarefree
        examined += 1
        s = 1
        for prime, _ in factorize(b):
            s = mul(s, sigma_prime_power(prime, 2))
        if s == square(b):
            certs.append(is_perfect(square(b)))
    return SearchReport(
        kind='odd-square',
        degree_bound=max_deg,
        config={'max_deg': max_deg},
        candidates_examined=examined,
        shapes_pruned={},
        perfects_found=certs,
        wall_time=time.perf_counter() - t0,
    )
