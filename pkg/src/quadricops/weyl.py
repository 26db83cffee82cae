"""The Weyl algebra of polynomial differential operators in 2k variables.

Operators are stored in x-left normal order: each term is x^alpha d^beta with
the multiplication part on the left.  The exchange rule d*x = x*d + 1 per
conjugate pair produces the general reordering identities

    d^b x^a = sum_t  C(b,t) C(a,t) t!  x^(a-t) d^(b-t)        (x-left)
    x^a d^b = sum_t (-1)^|t| C(b,t) C(a,t) t!  d^(b-t) x^(a-t) (d-left)

applied independently in each variable.  Both one-sided normal forms are
unique, which is what makes the two right-division tests below decisive.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial

from .poly import Poly, QLaurent, default_names, divides_exactly, mono_key


class NotDivisible(Exception):
    """Raised when a right-division has no exact quotient."""


class WeylOp:
    """Sparse normal-ordered operator: map (alpha, beta) -> Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        if terms is None:
            terms = {}
        self.terms = {ab: c for ab, c in terms.items() if c != 0}

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "WeylOp":
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> "WeylOp":
        c = Fraction(c)
        z = (0,) * nvars
        return cls(nvars, {(z, z): c} if c else {})

    @classmethod
    def identity(cls, nvars: int) -> "WeylOp":
        return cls.const(nvars, 1)

    @classmethod
    def mult(cls, p: Poly) -> "WeylOp":
        """Multiplication by the polynomial p."""
        z = (0,) * p.nvars
        return cls(p.nvars, {(m, z): c for m, c in p.terms.items()})

    @classmethod
    def partial(cls, nvars: int, i: int, c=1) -> "WeylOp":
        z = (0,) * nvars
        b = list(z)
        b[i] = 1
        return cls(nvars, {(z, tuple(b)): Fraction(c)})

    @classmethod
    def from_dleft(cls, nvars: int, coeffs: dict) -> "WeylOp":
        """Rebuild from a d-left form {beta: Poly coefficient}."""
        out = cls.zero(nvars)
        for beta, poly in coeffs.items():
            dpart = cls(nvars, {((0,) * nvars, tuple(beta)): Fraction(1)})
            out = out + dpart * cls.mult(poly)
        return out

    # -- structure -----------------------------------------------------------

    def order(self) -> int:
        """Maximal |beta|; -1 for the zero operator."""
        if not self.terms:
            return -1
        return max(sum(b) for _, b in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _check(self, other: "WeylOp"):
        if self.nvars != other.nvars:
            raise ValueError("operators live in different variable sets")

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylOp.const(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for ab, c in other.terms.items():
            s = terms.get(ab, 0) + c
            if s:
                terms[ab] = s
            else:
                terms.pop(ab, None)
        out = WeylOp.__new__(WeylOp)
        out.nvars, out.terms = self.nvars, terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = WeylOp.__new__(WeylOp)
        out.nvars = self.nvars
        out.terms = {ab: -c for ab, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylOp.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "WeylOp":
        c = Fraction(c)
        out = WeylOp.__new__(WeylOp)
        out.nvars = self.nvars
        out.terms = {} if c == 0 else {ab: c * v for ab, v in self.terms.items()}
        return out

    # -- multiplication ------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        n = self.nvars
        terms: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                # reorder d^b1 x^a2 into x-left form variable by variable
                for t, w in _exchange_terms(b1, a2):
                    alpha = tuple(a1[i] + a2[i] - t[i] for i in range(n))
                    beta = tuple(b1[i] + b2[i] - t[i] for i in range(n))
                    c = c1 * c2 * w
                    s = terms.get((alpha, beta), 0) + c
                    if s:
                        terms[(alpha, beta)] = s
                    else:
                        del terms[(alpha, beta)]
        out = WeylOp.__new__(WeylOp)
        out.nvars, out.terms = n, terms
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "WeylOp":
        if n < 0:
            raise ValueError("negative operator power")
        result = WeylOp.identity(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def commutator(self, other: "WeylOp") -> "WeylOp":
        return self * other - other * self

    # -- action on functions --------------------------------------------------

    def apply(self, f):
        """Apply to a Poly or a QLaurent, exactly."""
        if isinstance(f, Poly):
            return self._apply_poly(f)
        if isinstance(f, QLaurent):
            return self._apply_qlaurent(f)
        raise TypeError(f"cannot apply operator to {type(f).__name__}")

    def _apply_poly(self, f: Poly) -> Poly:
        n = self.nvars
        terms: dict = {}
        for (a, b), c in self.terms.items():
            for m, cm in f.terms.items():
                if any(b[i] > m[i] for i in range(n)):
                    continue
                w = c * cm
                for i in range(n):
                    for j in range(b[i]):
                        w *= m[i] - j
                mono = tuple(m[i] - b[i] + a[i] for i in range(n))
                s = terms.get(mono, 0) + w
                if s:
                    terms[mono] = s
                else:
                    del terms[mono]
        return Poly(n, terms)

    def _apply_qlaurent(self, f: QLaurent) -> QLaurent:
        k = f.k
        total = QLaurent(k, Poly.zero(2 * k), 0)
        for (a, b), c in self.terms.items():
            g = f
            for i in range(self.nvars):
                for _ in range(b[i]):
                    g = g.deriv(i)
            g = g * Poly.monomial(a, c)
            total = total + g
        return total

    # -- normal forms and division --------------------------------------------

    def dleft(self) -> dict:
        """The d-left normal form as a map {beta: Poly coefficient}."""
        n = self.nvars
        out: dict = {}
        for (a, b), c in self.terms.items():
            for t, w in _exchange_terms(b, a):
                sign = -1 if sum(t) % 2 else 1
                beta = tuple(b[i] - t[i] for i in range(n))
                alpha = tuple(a[i] - t[i] for i in range(n))
                bucket = out.setdefault(beta, {})
                s = bucket.get(alpha, 0) + sign * w * c
                if s:
                    bucket[alpha] = s
                else:
                    del bucket[alpha]
        return {beta: Poly(n, tm) for beta, tm in out.items() if tm}

    def xleft_coeffs(self) -> dict:
        """The stored x-left form as {alpha: Poly in the d-symbols}."""
        n = self.nvars
        out: dict = {}
        for (a, b), c in self.terms.items():
            out.setdefault(a, {})[b] = c
        return {alpha: Poly(n, tm) for alpha, tm in out.items()}

    def symbol_poly(self) -> Poly:
        """Full commutative symbol: x^alpha d^beta read as a polynomial in 4k
        variables ordered (x-block, d-block)."""
        n = self.nvars
        terms = {a + b: c for (a, b), c in self.terms.items()}
        return Poly(2 * n, terms)

    def divide_right_by_mult(self, q: Poly) -> "WeylOp":
        """Solve w = u * (mult by q); raise NotDivisible if impossible.

        In d-left form w = sum d^beta v_beta(x), right-composing with a
        multiplication operator multiplies each d-left coefficient by q, so
        the quotient exists iff every v_beta is exactly divisible by q.
        """
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        coeffs = self.dleft()
        quo: dict = {}
        for beta, v in coeffs.items():
            u = divides_exactly(q, v)
            if u is None:
                raise NotDivisible(f"d-left coefficient at beta={beta} not divisible")
            quo[beta] = u
        return WeylOp.from_dleft(self.nvars, quo)

    def divide_right_by_constcoef(self, d: "WeylOp") -> "WeylOp":
        """Solve w = u * d for a constant-coefficient d.

        In x-left form w = sum x^alpha q_alpha(d); right-multiplying by d(d)
        multiplies each q_alpha by the symbol polynomial of d, so the quotient
        exists iff every q_alpha is divisible by that symbol.
        """
        z = (0,) * self.nvars
        if any(a != z for a, _ in d.terms):
            raise ValueError("divisor must have constant coefficients")
        if d.is_zero():
            raise ZeroDivisionError("division by the zero operator")
        dsym = Poly(self.nvars, {b: c for (_, b), c in d.terms.items()})
        out = WeylOp.zero(self.nvars)
        for alpha, qa in self.xleft_coeffs().items():
            u = divides_exactly(dsym, qa)
            if u is None:
                raise NotDivisible(f"x-left coefficient at alpha={alpha} not divisible")
            part = WeylOp(self.nvars, {(alpha, b): c for b, c in u.terms.items()})
            out = out + part
        return out

    def principal_symbol(self) -> Poly:
        """Top-order symbol in 4k variables: base point w, fiber point v.

        Each d_{x_i} contributes the fiber coordinate y_{k+1-i}(v) and each
        d_{y_i} the fiber coordinate x_{k+1-i}(v) (the fiber is paired with
        the base through the split form), so that sigma(Delta) = Q(v) and
        sigma(E) = B(v, w).
        """
        n = self.nvars
        k = n // 2
        r = self.order()
        terms: dict = {}
        if r < 0:
            return Poly(2 * n, {})
        for (a, b), c in self.terms.items():
            if sum(b) != r:
                continue
            fiber = [0] * n
            for i in range(k):
                fiber[2 * k - 1 - i] += b[i]          # d_{x_i} -> y_{k+1-i}(v)
                fiber[k - 1 - i] += b[k + i]          # d_{y_i} -> x_{k+1-i}(v)
            mono = a + tuple(fiber)
            s = terms.get(mono, 0) + c
            if s:
                terms[mono] = s
            else:
                del terms[mono]
        return Poly(2 * n, terms)

    # -- printing --------------------------------------------------------------

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda tc: (sum(tc[0][1]), mono_key(tc[0][1]), mono_key(tc[0][0])),
        )

    def text(self) -> str:
        if not self.terms:
            return "0"
        n = self.nvars
        names = default_names(n)
        dnames = ["d" + nm for nm in names]
        parts = []
        for (a, b), c in self.sorted_terms():
            factors = []
            for i, e in enumerate(a):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            for i, e in enumerate(b):
                if e == 1:
                    factors.append(dnames[i])
                elif e > 1:
                    factors.append(f"{dnames[i]}^{e}")
            if not factors:
                body = str(abs(c))
            else:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> list:
        return [
            {"x": list(a), "d": list(b), "num": c.numerator, "den": c.denominator}
            for (a, b), c in self.sorted_terms()
        ]

    def __repr__(self):
        return f"WeylOp({self.text()})"


def _exchange_terms(b, a):
    """Terms of d^b x^a in x-left order: yields (t, weight) over 0 <= t <= min(b,a)
    with weight = prod C(b_i,t_i) C(a_i,t_i) t_i!; the caller assembles exponents."""
    ranges = []
    hot = []
    for i, (bi, ai) in enumerate(zip(b, a)):
        m = min(bi, ai)
        if m:
            hot.append(i)
            ranges.append(range(m + 1))
    n = len(b)
    if not hot:
        yield (0,) * n, Fraction(1)
        return
    for combo in itertools.product(*ranges):
        t = [0] * n
        w = 1
        for i, ti in zip(hot, combo):
            t[i] = ti
            if ti:
                w *= comb(b[i], ti) * comb(a[i], ti) * factorial(ti)
        yield tuple(t), Fraction(w)


# -- standard operators -------------------------------------------------------


def euler_op(k: int) -> WeylOp:
    """E = sum x_i d_{x_i} + y_i d_{y_i}."""
    n = 2 * k
    terms = {}
    for i in range(n):
        a = [0] * n
        a[i] = 1
        terms[(tuple(a), tuple(a))] = Fraction(1)
    return WeylOp(n, terms)


def laplacian_op(k: int) -> WeylOp:
    """Delta = sum_i d_{x_i} d_{y_{k+1-i}}."""
    n = 2 * k
    z = (0,) * n
    terms = {}
    for i in range(k):
        b = [0] * n
        b[i] = 1
        b[n - 1 - i] = 1
        terms[(z, tuple(b))] = Fraction(1)
    return WeylOp(n, terms)


def monomials_up_to(nvars: int, degree: int):
    """All exponent tuples of total degree <= degree."""
    def rec(pos, rem):
        if pos == nvars:
            yield ()
            return
        for e in range(rem + 1):
            for tail in rec(pos + 1, rem - e):
                yield (e,) + tail
    yield from rec(0, degree)


def is_zero_extensional(op: WeylOp, order_bound: int | None = None) -> bool:
    """Decide op = 0 by applying it to all monomials of degree <= its order.

    An operator of order <= r is determined by its values on monomials of
    degree <= r (the action is triangular in total degree), so vanishing there
    forces the zero operator.
    """
    if op.is_zero():
        return True
    r = op.order() if order_bound is None else order_bound
    n = op.nvars
    for m in monomials_up_to(n, r):
        if not op.apply(Poly.monomial(m)).is_zero():
            return False
    return True


class LocalWeylOp:
    """Differential operator with Q-Laurent coefficients: sum coef * d^beta."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: list | None = None):
        self.k = k
        self.terms = [(c, tuple(b)) for c, b in (terms or []) if not c.is_zero()]

    @classmethod
    def from_weyl(cls, op: WeylOp) -> "LocalWeylOp":
        # group the x-left form by derivative part: coefficient acts after d^beta
        k = op.nvars // 2
        buckets: dict = {}
        for (a, b), c in op.terms.items():
            buckets.setdefault(b, {})[a] = c
        return cls(
            k,
            [(QLaurent.from_poly(Poly(op.nvars, tm)), b) for b, tm in buckets.items()],
        )

    def apply(self, f: QLaurent) -> QLaurent:
        total = QLaurent(self.k, Poly.zero(2 * self.k), 0)
        for c, b in self.terms:
            g = f
            for i in range(2 * self.k):
                for _ in range(b[i]):
                    g = g.deriv(i)
            total = total + c * g
        return total

    def __add__(self, other: "LocalWeylOp") -> "LocalWeylOp":
        return LocalWeylOp(self.k, self.terms + other.terms)

    def scale(self, c) -> "LocalWeylOp":
        return LocalWeylOp(self.k, [(t.scale(c), b) for t, b in self.terms])

    def order(self) -> int:
        return max((sum(b) for _, b in self.terms), default=-1)
