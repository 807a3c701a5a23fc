"""Exact arithmetic on univariate polynomials over GF(2).

A polynomial is represented as a plain nonnegative int: bit i is the
coefficient of x^i.  The polynomial b_n x^n + ... + b_1 x + b_0 is the
integer b_n 2^n + ... + b_1 2 + b_0.  There are no wrapper objects; the
zero polynomial is 0 and the constant 1 is 1.  Ints are immutable, so
every operation here is a pure function and safe to share across threads.

Addition is xor.  degree(0) is the sentinel -1 (distinct from the
degree-0 constant 1).  All nonzero polynomials over GF(2) are monic.

Two textual forms round-trip bit-exactly:

- sum form, descending: "x^4+x+1"
- hex form, the coefficient bitmask: "0x13"

The parser also accepts products with '^', '*' and parentheses
(adjacency multiplies), so factored shapes such as
"x^6(x+1)^3(x^3+x^2+1)(x^3+x+1)" paste in directly.
"""

Poly = int

X = 2  # the polynomial x
X1 = 3  # the polynomial x+1


def degree(p):
    """Degree of p; -1 for the zero polynomial."""
    return p.bit_length() - 1


def add(p, q):
    """Add (equivalently, subtract) polynomials p and q."""
    return p ^ q


def mul(p, q):
    """Carryless (GF(2)) product of p and q."""
    if p < q:
        p, q = q, p
    # shift-and-xor over the bits of the smaller operand
    r = 0
    while q:
        if q & 1:
            r ^= p
        p <<= 1
        q >>= 1
    return r


def square(p):
    """p**2 via the Frobenius map: spread the bits apart."""
    r = 0
    i = 0
    while p:
        if p & 1:
            r |= 1 << (2 * i)
        p >>= 1
        i += 1
    return r


def divrem(p, d):
    """Quotient and remainder of p by d, with degree(r) < degree(d)."""
    if d == 0:
        raise ZeroDivisionError('division by zero polynomial')
    m = degree(p)
    n = degree(d)
    if m < n:
        return 0, p
    q = 0
    d <<= m - n
    for i in range(m - n + 1):
        q <<= 1
        if (p >> (m - i)) & 1:
            p ^= d
            q ^= 1
        d >>= 1
    return q, p


def divexact(p, d):
    """Quotient p // d, requiring the division to be exact."""
    q, r = divrem(p, d)
    if r:
        raise ValueError('division is not exact')
    return q


def rem(p, d):
    """Remainder of p modulo d."""
    if d == 0:
        raise ZeroDivisionError('division by zero polynomial')
    m = degree(p)
    n = degree(d)
    if m < n:
        return p
    d <<= m - n
    for i in range(m - n + 1):
        if (p >> (m - i)) & 1:
            p ^= d
        d >>= 1
    return p


def gcd(p, q):
    """Greatest common divisor; monic like every nonzero GF(2) poly."""
    if p == 0 and q == 0:
        raise ValueError('gcd(0, 0) is undefined')
    while q:
        p, q = q, rem(p, q)
    return p


def pow_(p, e):
    """p**e by repeated squaring; squarings use the Frobenius shortcut."""
    if e < 0:
        raise ValueError('negative exponent')
    r = 1
    while e:
        if e & 1:
            r = mul(r, p)
        p = square(p)
        e >>= 1
    return r


def mulmod(p, q, d):
    """p*q reduced modulo d."""
    return rem(mul(p, q), d)


def powmod(p, e, d):
    """p**e modulo d."""
    r = 1
    p = rem(p, d)
    while e:
        if e & 1:
            r = mulmod(r, p, d)
        p = rem(square(p), d)
        e >>= 1
    return r


def translate(p):
    """Compose with x+1: return p(x+1).  An involution."""
    # p(x+1) = xor of (x+1)^i over the set bits i of p
    r = 0
    t = 1
    while p:
        if p & 1:
            r ^= t
        t ^= t << 1
        p >>= 1
    return r


def reverse(p):
    """Coefficient reversal x^deg(p) * p(1/x) of a nonzero p.

    An involution exactly on polynomials with nonzero constant term.
    """
    if p == 0:
        raise ValueError('reverse of the zero polynomial is undefined')
    return int(format(p, 'b')[::-1], 2)


def is_self_inverse(p):
    """True iff p equals its own coefficient reversal."""
    return p == reverse(p)


def _even_positions_mask(n):
    # 0b...0101 with bit 0 set; (4^k - 1)/3 needs an even bit width
    return ((1 << (n + (n & 1))) - 1) // 3


def derivative(p):
    """Formal derivative: in characteristic 2 only odd-degree terms survive."""
    return (p >> 1) & _even_positions_mask(p.bit_length())


def is_square(p):
    """True iff p is a perfect square, i.e. all odd-index coefficients vanish."""
    return p & (_even_positions_mask(p.bit_length()) << 1) == 0


def sqrt(p):
    """Square root of a perfect square: compact the even-index bits."""
    r = 0
    i = 0
    while p:
        if p & 1:
            r |= 1 << i
        p >>= 2
        i += 1
    return r


class PolyParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message, pos):
        super().__init__(f'{message} (at position {pos})')
        self.pos = pos


def to_text(p):
    """Render p as a descending sum of terms, e.g. "x^4+x+1"."""
    if p == 0:
        return '0'
    terms = []
    for i in range(degree(p), -1, -1):
        if (p >> i) & 1:
            terms.append('1' if i == 0 else 'x' if i == 1 else f'x^{i}')
    return '+'.join(terms)


def to_hex(p):
    """Render p as the hex coefficient bitmask, e.g. "0x13"."""
    return format(p, '#x')


def parse(text):
    """Parse sum/product polynomial text, or a hex bitmask, into an int.

    Grammar: sums of products; a product is factors joined by '*' or by
    adjacency; a factor is '0', '1', 'x', a parenthesized sum, or a hex
    literal, optionally raised with '^' to a decimal exponent.
    """
    s = ''.join(text.split())
    if not s:
        raise PolyParseError('empty polynomial', 0)
    p, pos = _parse_sum(s, 0)
    if pos != len(s):
        raise PolyParseError(f'unexpected {s[pos]!r}', pos)
    return p


def _parse_sum(s, pos):
    p, pos = _parse_product(s, pos)
    while pos < len(s) and s[pos] == '+':
        q, pos = _parse_product(s, pos + 1)
        p ^= q
    return p, pos


def _parse_product(s, pos):
    p, pos = _parse_power(s, pos)
    while pos < len(s):
        if s[pos] == '*':
            q, pos = _parse_power(s, pos + 1)
        elif s[pos] in '(x01':  # adjacency multiplies
            q, pos = _parse_power(s, pos)
        else:
            break
        p = mul(p, q)
    return p, pos


def _parse_power(s, pos):
    p, pos = _parse_atom(s, pos)
    if pos < len(s) and s[pos] == '^':
        pos += 1
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise PolyParseError('missing exponent after "^"', start)
        p = pow_(p, int(s[start:pos]))
    return p, pos


def _parse_atom(s, pos):
    if pos >= len(s):
        raise PolyParseError('unexpected end of input', pos)
    c = s[pos]
    if c == '(':
        p, pos = _parse_sum(s, pos + 1)
        if pos >= len(s) or s[pos] != ')':
            raise PolyParseError('unbalanced parenthesis', pos)
        return p, pos + 1
    if s.startswith('0x', pos) or s.startswith('0X', pos):
        start = pos + 2
        pos = start
        while pos < len(s) and s[pos] in '0123456789abcdefABCDEF':
            pos += 1
        if pos == start:
            raise PolyParseError('missing digits in hex literal', start)
        return int(s[start:pos], 16), pos
    if c == 'x':
        return X, pos + 1
    if c in '01':
        return int(c), pos + 1
    raise PolyParseError(f'unexpected {c!r}', pos)
