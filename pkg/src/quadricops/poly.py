"""Sparse multivariate polynomials over exact rationals.

Variables come in conjugate pairs (x1..xk, y1..yk), so a polynomial in the
standard setup lives in 2k variables.  Exponent vectors are plain tuples; the
monomial order used everywhere is graded lexicographic with
x1 > ... > xk > y1 > ... > yk, which makes the leading term of
Q* = x1*yk + ... + xk*y1 equal to x1*yk.

All coefficients are ``fractions.Fraction``; nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction

Mono = tuple  # exponent vector, length 2k (or other fixed width per context)


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(i + j for i, j in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True when the monomial with exponents a divides the one with b."""
    return all(i <= j for i, j in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    return tuple(i - j for i, j in zip(a, b))


def mono_key(m: Mono):
    """Sort key realizing graded lex; larger key = larger monomial."""
    return (sum(m), m)


class Poly:
    """Sparse polynomial: map from exponent tuple to nonzero Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        if terms is None:
            terms = {}
        # prune zeros defensively; most call sites already avoid storing them
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return cls(nvars, {})
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, c=1) -> "Poly":
        m = [0] * nvars
        m[i] = 1
        return cls(nvars, {tuple(m): Fraction(c)})

    @classmethod
    def monomial(cls, m: Mono, c=1) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return cls(len(m), {})
        return cls(len(m), {tuple(m): c})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def leading(self):
        """(monomial, coefficient) maximal in graded lex."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=mono_key)
        return m, self.terms[m]

    def coeff(self, m: Mono) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def constant(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable sets")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = Poly.__new__(Poly)
        out.nvars, out.terms = self.nvars, terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        out = Poly.__new__(Poly)
        out.nvars, out.terms = self.nvars, terms
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = {} if c == 0 else {m: c * v for m, v in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def deriv(self, i: int) -> "Poly":
        """Partial derivative with respect to variable index i."""
        terms: dict = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                terms[m2] = terms.get(m2, 0) + c * e
        return Poly(self.nvars, terms)

    def eval(self, point) -> Fraction:
        """Evaluate at a tuple of rationals."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for e, p in zip(m, point):
                if e:
                    v *= Fraction(p) ** e
            total += v
        return total

    def subs_vars(self, images: list) -> "Poly":
        """Substitute variable i by the polynomial images[i]."""
        nv = images[0].nvars
        total = Poly.zero(nv)
        for m, c in self.terms.items():
            term = Poly.const(nv, c)
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * images[i]
            total = total + term
        return total

    def embed(self, nvars: int, offset: int) -> "Poly":
        """Re-index into a larger variable set starting at ``offset``."""
        pad_l = (0,) * offset
        pad_r = (0,) * (nvars - offset - self.nvars)
        return Poly(nvars, {pad_l + m + pad_r: c for m, c in self.terms.items()})

    # -- printing ------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mono_key(mc[0]), reverse=True)

    def text(self, names: list | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = default_names(self.nvars)
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            if not factors:
                body = str(abs(c))
            else:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> list:
        return [
            {"exponents": list(m), "num": c.numerator, "den": c.denominator}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, nvars: int, data: list) -> "Poly":
        terms = {}
        for t in data:
            terms[tuple(t["exponents"])] = Fraction(t["num"], t["den"])
        return cls(nvars, terms)

    def __repr__(self):
        return f"Poly({self.text()})"


def default_names(nvars: int) -> list:
    """x1..xk, y1..yk when nvars is even; generic v1.. otherwise."""
    if nvars % 2 == 0:
        k = nvars // 2
        return [f"x{i+1}" for i in range(k)] + [f"y{i+1}" for i in range(k)]
    return [f"v{i+1}" for i in range(nvars)]


# -- the split quadratic form and its dual ----------------------------------


def q_form(k: int) -> Poly:
    """Q = x1*yk + x2*y_{k-1} + ... + xk*y1 in 2k variables."""
    terms = {}
    for i in range(k):
        m = [0] * (2 * k)
        m[i] = 1
        m[2 * k - 1 - i] = 1
        terms[tuple(m)] = Fraction(1)
    return Poly(2 * k, terms)


def b_form_value(k: int, a, b) -> Fraction:
    """The symmetric bilinear form B with Q(v) = B(v,v)/2, on rational tuples."""
    total = Fraction(0)
    for i in range(2 * k):
        total += Fraction(a[i]) * Fraction(b[2 * k - 1 - i])
    return total


def normal_form_mod_single(p: Poly, d: Poly):
    """Divide p by the single polynomial d in graded lex order.

    Returns (quotient, remainder) with p = quotient*d + remainder and no
    monomial of the remainder divisible by the leading monomial of d.  A
    single polynomial is a Groebner basis of the ideal it generates, so the
    remainder is the canonical representative of p modulo (d) and vanishes
    exactly when p lies in the ideal.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm, lc = d.leading()
    quotient = Poly.zero(p.nvars)
    remainder_terms: dict = {}
    work = dict(p.terms)
    while work:
        m = max(work, key=mono_key)
        c = work.pop(m)
        if mono_divides(lm, m):
            factor = Poly.monomial(mono_div(m, lm), c / lc)
            quotient = quotient + factor
            for m2, c2 in (factor * d).terms.items():
                if m2 == m:
                    continue
                s = work.get(m2, 0) - c2
                if s:
                    work[m2] = s
                else:
                    work.pop(m2, None)
        else:
            remainder_terms[m] = c
    return quotient, Poly(p.nvars, remainder_terms)


def reduce_mod(p: Poly, d: Poly) -> Poly:
    return normal_form_mod_single(p, d)[1]


def divides_exactly(d: Poly, p: Poly):
    """Return the exact quotient p/d, or None when d does not divide p."""
    q, r = normal_form_mod_single(p, d)
    return q if r.is_zero() else None


class QLaurent:
    """A polynomial divided by a power of Q, kept in lowest Q-power form.

    value = num / Q^qexp with the numerator not divisible by Q (unless it is
    zero, in which case qexp = 0).
    """

    __slots__ = ("k", "num", "qexp")

    def __init__(self, k: int, num: Poly, qexp: int = 0):
        if qexp < 0:
            raise ValueError("qexp must be nonnegative; use div_by_q for shifts")
        self.k = k
        q = q_form(k)
        while qexp > 0 and not num.is_zero():
            quo = divides_exactly(q, num)
            if quo is None:
                break
            num, qexp = quo, qexp - 1
        if num.is_zero():
            qexp = 0
        self.num = num
        self.qexp = qexp

    @classmethod
    def from_poly(cls, p: Poly) -> "QLaurent":
        return cls(p.nvars // 2, p, 0)

    @classmethod
    def one_over_q(cls, k: int, m: int = 1) -> "QLaurent":
        return cls(k, Poly.const(2 * k, 1), m)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.qexp == 0

    def __eq__(self, other):
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.k == other.k and self.qexp == other.qexp and self.num == other.num

    def __hash__(self):
        return hash((self.k, self.qexp, self.num))

    def _lift(self, other):
        if isinstance(other, Poly):
            other = QLaurent.from_poly(other)
        elif isinstance(other, (int, Fraction)):
            other = QLaurent(self.k, Poly.const(2 * self.k, other), 0)
        return other

    def __add__(self, other):
        other = self._lift(other)
        q = q_form(self.k)
        m = max(self.qexp, other.qexp)
        a = self.num * q ** (m - self.qexp)
        b = other.num * q ** (m - other.qexp)
        return QLaurent(self.k, a + b, m)

    __radd__ = __add__

    def __neg__(self):
        out = QLaurent.__new__(QLaurent)
        out.k, out.num, out.qexp = self.k, -self.num, self.qexp
        return out

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        return QLaurent(self.k, self.num * other.num, self.qexp + other.qexp)

    __rmul__ = __mul__

    def scale(self, c) -> "QLaurent":
        out = QLaurent.__new__(QLaurent)
        out.k, out.num, out.qexp = self.k, self.num.scale(c), self.qexp
        if out.num.is_zero():
            out.qexp = 0
        return out

    def div_by_q(self, m: int = 1) -> "QLaurent":
        return QLaurent(self.k, self.num, self.qexp + m)

    def mul_by_q(self, m: int = 1) -> "QLaurent":
        if m >= self.qexp:
            return QLaurent(self.k, self.num * q_form(self.k) ** (m - self.qexp), 0)
        return QLaurent(self.k, self.num, self.qexp - m)

    def deriv(self, i: int) -> "QLaurent":
        # quotient rule: d(n/Q^m) = (n' Q - m n Q_i) / Q^(m+1)
        q = q_form(self.k)
        if self.qexp == 0:
            return QLaurent(self.k, self.num.deriv(i), 0)
        top = self.num.deriv(i) * q - self.num.scale(self.qexp) * q.deriv(i)
        return QLaurent(self.k, top, self.qexp + 1)

    def text(self) -> str:
        if self.qexp == 0:
            return self.num.text()
        return f"({self.num.text()}) / Q^{self.qexp}"

    def __repr__(self):
        return f"QLaurent({self.text()})"
