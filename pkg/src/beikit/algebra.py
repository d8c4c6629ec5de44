"""Sparse polynomials in the unknowns p[i,x] with exact coefficients.

A variable is a pair ``(i, x)`` with row ``i`` in 1..d0 and vertex ``x`` in
1..n.  Variables are ordered by plain tuple comparison, which is exactly the
order ``p[i,x] > p[j,y]`` iff ``i > j``, or ``i == j`` and ``x > y``.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable in
*descending* order, with positive exponents only.  With that layout the
lexicographic monomial order coincides with Python's tuple comparison, so a
monomial is its own sort key.

The auxiliary variable ``AUX`` used for ideal intersection is ranked above
every ``p[i,x]``, so the same lex order doubles as the elimination order.
"""

from fractions import Fraction
import sys

from .errors import InputError

AUX = (sys.maxsize, 0)

ONE = ()


# --------------------------------------------------------------------------
# coefficient fields
# --------------------------------------------------------------------------

def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


class RationalField:
    """The rationals, backed by ``fractions.Fraction``."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        return Fraction(value)

    def normalize(self, c):
        return c

    def inv(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(c)

    def format(self, c):
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) with elements stored as canonical ints 0..p-1."""

    def __init__(self, p):
        p = int(p)
        if not _is_prime(p):
            raise InputError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, value):
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def normalize(self, c):
        return c % self.p

    def inv(self, c):
        if c % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, -1, self.p)

    def format(self, c):
        return str(c)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()
GF32003 = PrimeField(32003)


def make_field(name):
    """``'rational'`` / ``'QQ'`` or a prime (int or numeric string)."""
    if isinstance(name, (RationalField, PrimeField)):
        return name
    if isinstance(name, str) and name.lower() in ("rational", "qq", "q"):
        return QQ
    try:
        return PrimeField(int(name))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"unknown field {name!r}") from None


# --------------------------------------------------------------------------
# variables and monomials
# --------------------------------------------------------------------------

def var(i, x):
    return (i, x)


def compare_vars(a, b):
    """Return 1, 0 or -1 as ``a`` is greater, equal or smaller than ``b``."""
    return (a > b) - (a < b)


def monomial(*factors):
    """Build a monomial from variables (repeats allowed) or ``(var, exp)`` pairs."""
    exps = {}
    for f in factors:
        if len(f) == 2 and isinstance(f[0], tuple):
            v, e = f
        else:
            v, e = f, 1
        if e:
            exps[v] = exps.get(v, 0) + e
    return from_exponents(exps)


def from_exponents(exps):
    return tuple(sorted(((v, e) for v, e in exps.items() if e), reverse=True))


def compare_monomials_lex(a, b):
    return (a > b) - (a < b)


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), reverse=True))


def mono_divides(a, b):
    """True iff monomial ``a`` divides ``b``."""
    if len(a) > len(b):
        return False
    eb = dict(b)
    for v, e in a:
        if eb.get(v, 0) < e:
            return False
    return True


def mono_div(a, b):
    """``a / b``; assumes ``b`` divides ``a``."""
    exps = dict(a)
    for v, e in b:
        exps[v] -= e
    return tuple((v, exps[v]) for v, _ in a if exps[v])


def mono_lcm(a, b):
    exps = dict(a)
    for v, e in b:
        if exps.get(v, 0) < e:
            exps[v] = e
    return from_exponents(exps)


def mono_coprime(a, b):
    va = {v for v, _ in a}
    return not any(v in va for v, _ in b)


def mono_degree(m):
    return sum(e for _, e in m)


def is_squarefree(m):
    return all(e == 1 for _, e in m)


def mono_variables(m):
    return [v for v, _ in m]


def multidegree(m, d0, n):
    """Row degrees (length d0) followed by column degrees (length n)."""
    deg = [0] * (d0 + n)
    for (i, x), e in m:
        if (i, x) == AUX:
            raise InputError("multidegree is undefined for the auxiliary variable")
        deg[i - 1] += e
        deg[d0 + x - 1] += e
    return tuple(deg)


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial: ``{monomial: coefficient}`` over a field."""

    __slots__ = ("terms", "field", "_hash")

    def __init__(self, terms=None, field=QQ):
        self.field = field
        clean = {}
        if terms:
            for m, c in terms.items():
                c = field(c)
                if c:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, field):
        # terms already normalized, zero-free
        p = object.__new__(cls)
        p.terms = terms
        p.field = field
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, field=QQ):
        return cls({ONE: c}, field)

    @classmethod
    def from_monomial(cls, m, c=1, field=QQ):
        return cls({m: c}, field)

    @classmethod
    def variable(cls, i, x, field=QQ):
        return cls({(((i, x), 1),): 1}, field)

    def _check(self, other):
        if self.field != other.field:
            raise InputError(f"mixed fields: {self.field} and {other.field}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.field(other), self.field)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._lift(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.normalize(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out, F)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial._raw({m: F.normalize(-c) for m, c in self.terms.items()}, F)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(self.field(other))
        self._check(other)
        F = self.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = F.normalize(out.get(m, 0) + c1 * c2)
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out, F)

    def __rmul__(self, other):
        return self.scale(self.field(other))

    def scale(self, c):
        F = self.field
        c = F.normalize(c)
        if not c:
            return Polynomial._raw({}, F)
        return Polynomial._raw({m: F.normalize(a * c) for m, a in self.terms.items()}, F)

    def mul_term(self, m, c):
        """Multiply by the single term ``c * m``."""
        F = self.field
        return Polynomial._raw(
            {mono_mul(k, m): F.normalize(a * c) for k, a in self.terms.items()}, F)

    def __pow__(self, k):
        out = Polynomial.constant(1, self.field)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self):
        """Terms in descending lex order."""
        return sorted(self.terms.items(), reverse=True)

    def leading_term(self):
        """``(monomial, coefficient)`` of the lex-greatest term."""
        if not self.terms:
            raise InputError("zero polynomial has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def monic(self):
        return self.scale(self.field.inv(self.leading_coefficient()))

    def monomials(self):
        return list(self.terms)

    def variables(self):
        return {v for m in self.terms for v, _ in m}

    def change_field(self, field):
        return Polynomial({m: field(c) for m, c in self.terms.items()}, field)

    def is_homogeneous(self, d0, n):
        """Homogeneous for the row/column multidegree."""
        degs = {multidegree(m, d0, n) for m in self.terms}
        return len(degs) <= 1

    def __repr__(self):
        from .io import format_polynomial
        return f"Polynomial({format_polynomial(self)!r}, {self.field!r})"


def leading_term(p):
    return p.leading_term()


def make_f(i, j, x, y, field=QQ):
    """The 2x2 minor ``p[i,x]*p[j,y] - p[i,y]*p[j,x]``."""
    if i == j or x == y:
        raise InputError("make_f needs i != j and x != y")
    return Polynomial({
        monomial((i, x), (j, y)): 1,
        monomial((i, y), (j, x)): -1,
    }, field)
