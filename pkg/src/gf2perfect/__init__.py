"""Sum-of-divisors arithmetic and perfect-polynomial searches over GF(2)[x]."""

from .factor import (
    Factorization, factorize, irreducibles_up_to, is_irreducible,
    load_sieve_cache, save_sieve_cache, squarefree_part,
)
from .gf2poly import (
    Poly, PolyParseError, add, degree, divrem, gcd, is_self_inverse, mul,
    parse, pow_, reverse, to_hex, to_text, translate,
)
from .perfect import (
    PerfectCertificate, SearchReport, Shape, catalog, exhaustive_search,
    is_perfect, odd_square_search, shape_search, trivial_perfect,
)
# NB: the sigma function itself lives at gf2perfect.sigma.sigma; exporting
# it here would shadow the submodule of the same name.
from .sigma import (
    Parity, SigmaValue, omega, parity, sigma_naive, sigma_prime_power,
)

__version__ = '0.1.0'
