"""Exact scalar arithmetic for all supported coefficient domains.

A scalar ring is a handle object; elements are plain hashable payloads
(ints for modular rings, coefficient tuples for extension fields and
polynomials, ``fractions.Fraction`` for the rationals).  All payloads are
canonical: equal values compare equal as Python objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import (
    CharacteristicZero,
    InfiniteRing,
    NoSuchDerivation,
    NonPrimeModulus,
    NotAUnit,
    ParseError,
    ReduciblePolynomial,
    UnsupportedVariableCount,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- univariate polynomials over F_p ------------------------------------------
# Coefficient tuples, lowest degree first, no trailing zeros; () is zero.

def upoly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def upoly_add(a, b, p):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return upoly_trim((x + y) % p for x, y in zip(a, b))


def upoly_neg(a, p):
    return tuple((-x) % p for x in a)


def upoly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return upoly_trim(out)


def upoly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and upoly_trim(a):
        a = list(upoly_trim(a))
        if len(a) < len(b):
            break
        c = (a[-1] * inv_lead) % p
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = (a[d + i] - c * y) % p
    return upoly_trim(q), upoly_trim(a)


def upoly_gcd(a, b, p):
    # Euclid with a monic result so the gcd is canonical.
    a, b = upoly_trim(a), upoly_trim(b)
    while b:
        _, r = upoly_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple((x * inv) % p for x in a)
    return a


def upoly_deriv(a, p):
    return upoly_trim((i * a[i]) % p for i in range(1, len(a)))


def upoly_const(c, p):
    c %= p
    return (c,) if c else ()


def upoly_format(a, var):
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            body = str(c)
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if c == 1 else f"{c}*{v}"
        parts.append(body)
    return " + ".join(parts)


# -- multivariate polynomials (at most two variables) -------------------------
# Canonical payload: tuple of (exponent-tuple, coeff), sorted descending by
# (total degree, exponents).  Coefficients are ints (reduced mod p when the
# base is a prime field); the zero polynomial is ().

def mpoly_canon(d, p):
    items = []
    for e, c in d.items():
        c = c % p if p else c
        if c:
            items.append((e, c))
    items.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
    return tuple(items)


def mpoly_add(a, b, p):
    d = dict(a)
    for e, c in b:
        d[e] = d.get(e, 0) + c
    return mpoly_canon(d, p)


def mpoly_neg(a, p):
    return mpoly_canon({e: -c for e, c in a}, p)


def mpoly_mul(a, b, p):
    d = {}
    for e1, c1 in a:
        for e2, c2 in b:
            e = tuple(x + y for x, y in zip(e1, e2))
            d[e] = d.get(e, 0) + c1 * c2
    return mpoly_canon(d, p)


def mpoly_const(c, nvars, p):
    return mpoly_canon({(0,) * nvars: c}, p)


def mpoly_deriv(a, i, p):
    d = {}
    for e, c in a:
        if e[i]:
            e2 = tuple(x - (j == i) for j, x in enumerate(e))
            d[e2] = d.get(e2, 0) + c * e[i]
    return mpoly_canon(d, p)


def mpoly_format(a, variables):
    if not a:
        return "0"
    parts = []
    first = True
    for e, c in a:
        factors = []
        for v, k in zip(variables, e):
            if k == 1:
                factors.append(v)
            elif k > 1:
                factors.append(f"{v}^{k}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if first:
            parts.append(body if c > 0 else "-" + body)
            first = False
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


# -- ring specs ---------------------------------------------------------------

@dataclass(frozen=True)
class ScalarRingSpec:
    """Description of a scalar ring kind plus its parameters."""

    kind: str
    params: tuple = ()
    derivations: tuple = field(default=())

    def to_json(self):
        k = self.kind
        p = dict(self.params)
        out = {"kind": k, **p}
        return out


def make_scalar_ring(spec):
    """Build a ring handle from a :class:`ScalarRingSpec` (or a dict)."""
    if isinstance(spec, dict):
        spec = spec_from_json(spec)
    kind = spec.kind
    params = dict(spec.params)
    if kind == "prime-field":
        return PrimeField(params["p"])
    if kind == "galois-field":
        return GaloisField(params["p"], params["k"], tuple(params["poly"]))
    if kind == "residue-ring":
        return ResidueRing(params["n"])
    if kind == "rationals":
        return RationalField()
    if kind == "polynomial-ring":
        return PolynomialRing(params["base"], tuple(params["vars"]))
    if kind == "rational-function-field":
        return RationalFunctionField(params["p"], params["var"])
    raise ParseError(f"unknown scalar ring kind {kind!r}")


def spec_from_json(d):
    kind = d["kind"]
    keys = {
        "prime-field": ("p",),
        "galois-field": ("p", "k", "poly"),
        "residue-ring": ("n",),
        "rationals": (),
        "polynomial-ring": ("base", "vars"),
        "rational-function-field": ("p", "var"),
    }
    if kind not in keys:
        raise ParseError(f"unknown scalar ring kind {kind!r}")
    params = []
    for k in keys[kind]:
        v = d[k]
        if isinstance(v, list):
            v = tuple(v)
        params.append((k, v))
    return ScalarRingSpec(kind, tuple(params))


# -- expression parsing -------------------------------------------------------

def _tokenize(s):
    tokens = []
    i = 0
    while i < len(s):
        c = s[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            tokens.append(("int", int(s[i:j])))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(s) and (s[j].isalnum() or s[j] == "_"):
                j += 1
            tokens.append(("name", s[i:j]))
            i = j
        elif c in "+-*/^()":
            tokens.append((c, c))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r} in {s!r}")
    tokens.append(("end", None))
    return tokens


class _ExprParser:
    """Recursive-descent evaluator for the scalar expression grammar."""

    def __init__(self, ring, s):
        self.ring = ring
        self.toks = _tokenize(s)
        self.pos = 0
        self.src = s

    def peek(self):
        return self.toks[self.pos][0]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def parse(self):
        v = self.expr()
        if self.peek() != "end":
            raise ParseError(f"trailing input in {self.src!r}")
        return v

    def expr(self):
        neg = False
        if self.peek() == "-":
            self.next()
            neg = True
        elif self.peek() == "+":
            self.next()
        v = self.term()
        if neg:
            v = self.ring.neg(v)
        while self.peek() in "+-":
            op = self.next()[0]
            w = self.term()
            v = self.ring.add(v, w) if op == "+" else self.ring.sub(v, w)
        return v

    def term(self):
        v = self.factor()
        while self.peek() in "*/":
            op = self.next()[0]
            w = self.factor()
            if op == "*":
                v = self.ring.mul(v, w)
            else:
                v = self.ring.mul(v, self.ring.invert(w))
        return v

    def factor(self):
        v = self.atom()
        if self.peek() == "^":
            self.next()
            kind, n = self.next()
            if kind != "int":
                raise ParseError(f"exponent must be an integer in {self.src!r}")
            v = self.ring.pow(v, n)
        return v

    def atom(self):
        kind, val = self.next()
        if kind == "int":
            return self.ring.from_int(val)
        if kind == "name":
            return self.ring.generator(val)
        if kind == "(":
            v = self.expr()
            if self.next()[0] != ")":
                raise ParseError(f"unbalanced parentheses in {self.src!r}")
            return v
        raise ParseError(f"unexpected token in {self.src!r}")


# -- ring handles -------------------------------------------------------------

class ScalarRing:
    """Base class for scalar ring handles.

    Elements are plain payloads; the handle supplies all arithmetic.
    Handles compare equal iff they describe the same ring.
    """

    kind = "abstract"
    is_field = False
    char = 0
    size = None          # None means infinite
    modulus = None       # set for rings whose payloads are ints mod n
    derivations = ()

    def key(self):
        return (self.kind,)

    def __eq__(self, other):
        return isinstance(other, ScalarRing) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self.describe()

    # arithmetic
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero

    def is_unit(self, a):
        try:
            self.invert(a)
            return True
        except NotAUnit:
            return False

    def pow(self, a, n):
        if n < 0:
            a = self.invert(a)
            n = -n
        out = self.one
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def sum(self, items):
        out = self.zero
        for x in items:
            out = self.add(out, x)
        return out

    def from_int(self, k):
        out = self.zero
        one = self.one
        neg = k < 0
        for _ in range(abs(k)):
            out = self.add(out, one)
        return self.neg(out) if neg else out

    def generator(self, name):
        raise ParseError(f"no symbol {name!r} in {self.describe()}")

    def derive(self, a, name):
        raise NoSuchDerivation(f"{self.describe()} has no derivation {name!r}")

    def frobenius(self, a):
        p = self.char
        if p == 0 or not is_prime(p):
            raise CharacteristicZero(
                f"{self.describe()} has no prime characteristic")
        return self.pow(a, p)

    def enumerate_elements(self):
        raise InfiniteRing(f"{self.describe()} is infinite")

    def parse(self, s):
        return _ExprParser(self, s).parse()

    def describe(self):
        return self.kind


class PrimeField(ScalarRing):
    """F_p, payloads are ints in [0, p)."""

    kind = "prime-field"
    is_field = True

    def __init__(self, p):
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.char = p
        self.size = p
        self.modulus = p
        self.zero = 0
        self.one = 1 % p

    def key(self):
        return (self.kind, self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def invert(self, a):
        if a % self.p == 0:
            raise NotAUnit(f"0 is not invertible in {self.describe()}")
        return pow(a, self.p - 2, self.p)

    def frobenius(self, a):
        return a % self.p

    def from_int(self, k):
        return k % self.p

    def enumerate_elements(self):
        return iter(range(self.p))

    def random_element(self, rng):
        return rng.randrange(self.p)

    def format(self, a):
        return str(a)

    def spec(self):
        return ScalarRingSpec(self.kind, (("p", self.p),))

    def describe(self):
        return f"F_{self.p}"


class ResidueRing(ScalarRing):
    """Z/nZ, payloads are ints in [0, n)."""

    kind = "residue-ring"

    def __init__(self, n):
        if n < 2:
            raise NonPrimeModulus(f"modulus must be at least 2, got {n}")
        self.n = n
        self.char = n
        self.size = n
        self.modulus = n
        self.is_field = is_prime(n)
        self.zero = 0
        self.one = 1

    def key(self):
        return (self.kind, self.n)

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def invert(self, a):
        if gcd(a, self.n) != 1:
            raise NotAUnit(f"{a} is not a unit modulo {self.n}")
        return pow(a, -1, self.n)

    def from_int(self, k):
        return k % self.n

    def enumerate_elements(self):
        return iter(range(self.n))

    def random_element(self, rng):
        return rng.randrange(self.n)

    def format(self, a):
        return str(a)

    def spec(self):
        return ScalarRingSpec(self.kind, (("n", self.n),))

    def describe(self):
        return f"Z_{self.n}"


class GaloisField(ScalarRing):
    """GF(p^k) as F_p[t]/(m(t)); payloads are coefficient tuples of length k."""

    kind = "galois-field"
    is_field = True
    var = "t"

    def __init__(self, p, k, poly):
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        poly = upoly_trim(x % p for x in poly)
        if len(poly) != k + 1:
            raise ReduciblePolynomial(
                f"defining polynomial must have degree {k}")
        self._check_irreducible(poly, p)
        self.p = p
        self.k = k
        self.poly = poly
        self.char = p
        self.size = p ** k
        self.zero = (0,) * k
        self.one = tuple([1 % p] + [0] * (k - 1))

    @staticmethod
    def _check_irreducible(poly, p):
        k = len(poly) - 1
        if k < 1:
            raise ReduciblePolynomial("degree must be positive")
        # trial division by every monic polynomial of degree up to k // 2
        for d in range(1, k // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                g = tuple(tail) + (1,)
                _, r = upoly_divmod(poly, g, p)
                if not r:
                    raise ReduciblePolynomial(
                        f"{upoly_format(poly, 't')} is divisible by "
                        f"{upoly_format(g, 't')}")

    def key(self):
        return (self.kind, self.p, self.k, self.poly)

    def _pad(self, c):
        return tuple(c) + (0,) * (self.k - len(c))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        prod = upoly_mul(upoly_trim(a), upoly_trim(b), self.p)
        _, r = upoly_divmod(prod, self.poly, self.p)
        return self._pad(r)

    def invert(self, a):
        at = upoly_trim(a)
        if not at:
            raise NotAUnit(f"0 is not invertible in {self.describe()}")
        # extended Euclid against the defining polynomial
        r0, r1 = self.poly, at
        s0, s1 = (), (1,)
        while r1:
            q, r = upoly_divmod(r0, r1, self.p)
            r0, r1 = r1, r
            s0, s1 = s1, upoly_add(s0, upoly_neg(upoly_mul(q, s1, self.p),
                                                 self.p), self.p)
        inv_c = pow(r0[0], self.p - 2, self.p)
        out = tuple((x * inv_c) % self.p for x in s0)
        _, out = upoly_divmod(out, self.poly, self.p)
        return self._pad(out)

    def from_int(self, k):
        return self._pad(upoly_const(k, self.p))

    def generator(self, name):
        if name != self.var:
            raise ParseError(f"no symbol {name!r} in {self.describe()}")
        if self.k == 1:
            raise ParseError("prime subfield has no generator symbol")
        return self._pad((0, 1))

    def enumerate_elements(self):
        return iter(itertools.product(range(self.p), repeat=self.k))

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def format(self, a):
        return upoly_format(upoly_trim(a), self.var)

    def spec(self):
        return ScalarRingSpec(
            self.kind, (("p", self.p), ("k", self.k), ("poly", self.poly)))

    def describe(self):
        return f"GF({self.p}^{self.k})"


class RationalField(ScalarRing):
    """The rationals; payloads are ``fractions.Fraction`` values."""

    kind = "rationals"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def invert(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible in Q")
        return 1 / a

    def from_int(self, k):
        return Fraction(k)

    def random_element(self, rng):
        return Fraction(rng.randrange(-20, 21), rng.randrange(1, 12))

    def format(self, a):
        return str(a)

    def spec(self):
        return ScalarRingSpec(self.kind)

    def describe(self):
        return "Q"


class PolynomialRing(ScalarRing):
    """Z[vars] or F_p[vars] with at most two variables.

    Payloads are canonical monomial tuples; each variable carries the
    partial derivation ``d/d<var>``.
    """

    kind = "polynomial-ring"

    def __init__(self, base, variables):
        variables = tuple(variables)
        if not 1 <= len(variables) <= 2:
            raise UnsupportedVariableCount(
                f"polynomial ring supports 1 or 2 variables, got "
                f"{len(variables)}")
        if base == "int":
            self.p = 0
        else:
            if not is_prime(base):
                raise NonPrimeModulus(f"{base} is not prime")
            self.p = base
        self.base = base
        self.vars = variables
        self.char = self.p
        self.nvars = len(variables)
        self.derivations = tuple(f"d/d{v}" for v in variables)
        self.zero = ()
        self.one = mpoly_const(1, self.nvars, self.p)

    def key(self):
        return (self.kind, self.base, self.vars)

    def add(self, a, b):
        return mpoly_add(a, b, self.p)

    def neg(self, a):
        return mpoly_neg(a, self.p)

    def mul(self, a, b):
        return mpoly_mul(a, b, self.p)

    def invert(self, a):
        if len(a) == 1 and sum(a[0][0]) == 0:
            c = a[0][1]
            if self.p:
                return mpoly_const(pow(c, self.p - 2, self.p), self.nvars,
                                   self.p)
            if c in (1, -1):
                return mpoly_const(c, self.nvars, 0)
        raise NotAUnit(f"{self.format(a)} is not a unit in {self.describe()}")

    def from_int(self, k):
        return mpoly_const(k, self.nvars, self.p)

    def generator(self, name):
        if name not in self.vars:
            raise ParseError(f"no symbol {name!r} in {self.describe()}")
        e = tuple(1 if v == name else 0 for v in self.vars)
        return mpoly_canon({e: 1}, self.p)

    def derive(self, a, name):
        if name not in self.derivations:
            raise NoSuchDerivation(
                f"{self.describe()} has no derivation {name!r}")
        return mpoly_deriv(a, self.derivations.index(name), self.p)

    def random_element(self, rng, degree=3):
        d = {}
        for _ in range(rng.randrange(1, 5)):
            e = tuple(rng.randrange(degree) for _ in range(self.nvars))
            c = rng.randrange(-4, 5) if not self.p else rng.randrange(self.p)
            d[e] = d.get(e, 0) + c
        return mpoly_canon(d, self.p)

    def format(self, a):
        return mpoly_format(a, self.vars)

    def spec(self):
        return ScalarRingSpec(
            self.kind, (("base", self.base), ("vars", self.vars)))

    def describe(self):
        base = "Z" if self.p == 0 else f"F_{self.p}"
        return f"{base}[{','.join(self.vars)}]"


class RationalFunctionField(ScalarRing):
    """F_p(t): fractions of univariate polynomials over F_p.

    Payloads are pairs (num, den) of coefficient tuples with monic,
    coprime denominator; zero is ((), (1,)).
    """

    kind = "rational-function-field"
    is_field = True

    def __init__(self, p, var):
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        if not isinstance(var, str) or not var:
            raise UnsupportedVariableCount("exactly one variable is required")
        self.p = p
        self.var = var
        self.char = p
        self.derivations = (f"d/d{var}",)
        self.zero = ((), (1,))
        self.one = ((1,), (1,))

    def key(self):
        return (self.kind, self.p, self.var)

    def _norm(self, num, den):
        p = self.p
        if not num:
            return ((), (1,))
        g = upoly_gcd(num, den, p)
        if len(g) > 1 or g[0] != 1:
            num, _ = upoly_divmod(num, g, p)
            den, _ = upoly_divmod(den, g, p)
        inv = pow(den[-1], p - 2, p)
        if inv != 1:
            num = tuple((x * inv) % p for x in num)
            den = tuple((x * inv) % p for x in den)
        return (num, den)

    def add(self, a, b):
        p = self.p
        num = upoly_add(upoly_mul(a[0], b[1], p), upoly_mul(b[0], a[1], p), p)
        return self._norm(num, upoly_mul(a[1], b[1], p))

    def neg(self, a):
        return (upoly_neg(a[0], self.p), a[1])

    def mul(self, a, b):
        p = self.p
        return self._norm(upoly_mul(a[0], b[0], p), upoly_mul(a[1], b[1], p))

    def invert(self, a):
        if not a[0]:
            raise NotAUnit(f"0 is not invertible in {self.describe()}")
        return self._norm(a[1], a[0])

    def from_int(self, k):
        return (upoly_const(k, self.p), (1,))

    def generator(self, name):
        if name != self.var:
            raise ParseError(f"no symbol {name!r} in {self.describe()}")
        return ((0, 1), (1,))

    def derive(self, a, name):
        if name not in self.derivations:
            raise NoSuchDerivation(
                f"{self.describe()} has no derivation {name!r}")
        p = self.p
        num, den = a
        d_num = upoly_deriv(num, p)
        d_den = upoly_deriv(den, p)
        top = upoly_add(upoly_mul(d_num, den, p),
                        upoly_neg(upoly_mul(num, d_den, p), p), p)
        return self._norm(top, upoly_mul(den, den, p))

    def random_element(self, rng, degree=3):
        num = upoly_trim(rng.randrange(self.p) for _ in range(degree))
        den = ()
        while not den:
            den = upoly_trim(rng.randrange(self.p) for _ in range(degree))
        return self._norm(num, den)

    def format(self, a):
        num, den = a
        if den == (1,):
            return upoly_format(num, self.var)
        return f"({upoly_format(num, self.var)})/({upoly_format(den, self.var)})"

    def spec(self):
        return ScalarRingSpec(self.kind, (("p", self.p), ("var", self.var)))

    def describe(self):
        return f"F_{self.p}({self.var})"


# -- convenience constructors -------------------------------------------------

def prime_field(p):
    return PrimeField(p)


def residue_ring(n):
    return ResidueRing(n)


def galois_field(p, k, poly=None):
    if poly is None:
        if (p, k) == (2, 2):
            poly = (1, 1, 1)
        else:
            poly = _find_irreducible(p, k)
    return GaloisField(p, k, poly)


def _find_irreducible(p, k):
    for tail in itertools.product(range(p), repeat=k):
        cand = tuple(tail) + (1,)
        try:
            GaloisField._check_irreducible(cand, p)
            return cand
        except ReduciblePolynomial:
            continue
    raise ReduciblePolynomial(f"no irreducible polynomial found for {p}^{k}")


def rationals():
    return RationalField()


def polynomial_ring(base, variables):
    return PolynomialRing(base, variables)


def rational_function_field(p, var="t"):
    return RationalFunctionField(p, var)


# stable public aliases for the operation names used throughout

def invert(ring, x):
    return ring.invert(x)


def derive(ring, x, name):
    return ring.derive(x, name)


def frobenius(ring, x):
    return ring.frobenius(x)


def enumerate_elements(ring):
    return ring.enumerate_elements()
