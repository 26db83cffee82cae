"""Differential operators on the quadric cone and the three realizations.

kappa[C] is the coordinate ring of the cone Q* = 0 inside the dual space,
presented by canonical normal forms modulo Q*.  Operators on the cone are
ambient Weyl-algebra elements that normalize the ideal (Q*), compared through
their canonical class: the d-left coefficients reduced modulo Q*.

Realizations of the conformal Lie algebra:
  phi       -- vector-field realization on V plus conformal weight k-1;
  rho_amb   -- the letterwise Fourier image tau(phi(.)) on the dual space;
  rho_tilde -- rho_amb corrected by A_xi = 2(d_{lam_flip} - alpha), which
               makes every image normalize (Q*).

The quadric Fourier automorphism F acts on formal words in the distinguished
generators, swapping coordinates with the second-order operators XX_i, YY_i.
"""

from __future__ import annotations

from fractions import Fraction

from .lie import LieElt
from .poly import Poly, default_names, mono_key, q_form, reduce_mod
from .weyl import (NotDivisible, WeylOp, euler_op, laplacian_op,
                   monomials_up_to)


def _dual(n: int, i: int) -> int:
    """Index pairing of the split form: x_i <-> y_{k+1-i}."""
    return n - 1 - i


def b_form_poly(k: int, vec) -> Poly:
    """B(vec, .) as a linear polynomial for a rational vector vec."""
    n = 2 * k
    out = Poly.zero(n)
    for i in range(n):
        if vec[i]:
            out = out + Poly.var(n, _dual(n, i), vec[i])
    return out


def coord_poly(k: int, vec) -> Poly:
    """The plain coordinate pairing <vec, .> as a linear polynomial."""
    n = 2 * k
    out = Poly.zero(n)
    for i in range(n):
        if vec[i]:
            out = out + Poly.var(n, i, vec[i])
    return out


def grad_pair(k: int, vec) -> WeylOp:
    """Directional derivative sum vec_i d_i."""
    n = 2 * k
    out = WeylOp.zero(n)
    for i in range(n):
        if vec[i]:
            out = out + WeylOp.partial(n, i, vec[i])
    return out


def grad_flip(k: int, vec) -> WeylOp:
    """The split-form-twisted directional derivative: e_{x_i} -> d_{y_{k+1-i}}."""
    n = 2 * k
    out = WeylOp.zero(n)
    for i in range(n):
        if vec[i]:
            out = out + WeylOp.partial(n, _dual(n, i), vec[i])
    return out


def phi(xi: LieElt) -> WeylOp:
    """Conformal-weight vector-field realization on V.

    phi(xi) = -d_mu - <Xv, grad> + alpha(E + k - 1)
              - B(lam, v)(E + k - 1) + Q(v) d_lam.
    """
    k = xi.k
    n = 2 * k
    E = euler_op(k)
    weight = E + WeylOp.const(n, k - 1)
    op = WeylOp.zero(n)
    op = op - grad_pair(k, xi.mu)
    # -<Xv, grad> = -sum_{a,b} X[a][b] v_b d_a
    for a in range(n):
        for b in range(n):
            c = xi.X[a][b]
            if c:
                op = op - WeylOp.mult(Poly.var(n, b, c)) * WeylOp.partial(n, a)
    if xi.alpha:
        op = op + weight.scale(xi.alpha)
    blam = b_form_poly(k, xi.lam)
    if not blam.is_zero():
        op = op - WeylOp.mult(blam) * weight
    if any(xi.lam):
        op = op + WeylOp.mult(q_form(k)) * grad_pair(k, xi.lam)
    return op


def tau(a: WeylOp) -> WeylOp:
    """Letterwise linear Fourier transform: v_i -> d_i, d_i -> -v_i.

    Applied to the x-left word x...x d...d of each term and renormal-ordered;
    an algebra isomorphism D_V -> D_{V*}.
    """
    n = a.nvars
    out = WeylOp.zero(n)
    for (alpha, beta), c in a.terms.items():
        word = WeylOp.const(n, c)
        for i in range(n):
            for _ in range(alpha[i]):
                word = word * WeylOp.partial(n, i)
        for i in range(n):
            for _ in range(beta[i]):
                word = word * WeylOp.mult(Poly.var(n, i, -1))
        out = out + word
    return out


def a_correction(xi: LieElt) -> WeylOp:
    """A_xi = 2(d_{lam_flip} - alpha)."""
    k = xi.k
    return (grad_flip(k, xi.lam) - WeylOp.const(2 * k, xi.alpha)).scale(2)


def rho_amb(xi: LieElt) -> WeylOp:
    """Ambient dual-space realization: tau(phi(xi))."""
    return tau(phi(xi))


class NotNormalizing(Exception):
    """Operator does not normalize the cone ideal."""


class ConeOp:
    """Ambient operator on the dual space with its canonical cone class.

    Writing the operator as sum p_beta(x) d^beta (multiplication applied
    last), it induces the zero map on kappa[C] exactly when every p_beta is
    divisible by Q* -- such operators are Q* times another operator, and
    conversely the reduced coefficients are recovered from the action on
    monomials by triangularity.  The canonical class is therefore the list of
    p_beta reduced mod Q*; two cone operators are equal iff the classes agree.
    """

    __slots__ = ("k", "op", "_canonical", "_preserves")

    def __init__(self, op: WeylOp):
        self.k = op.nvars // 2
        self.op = op
        self._canonical = None
        self._preserves = None

    def canonical(self) -> dict:
        if self._canonical is None:
            qs = q_form(self.k)
            buckets: dict = {}
            for (a, b), c in self.op.terms.items():
                buckets.setdefault(b, {})[a] = c
            out = {}
            for beta, tm in buckets.items():
                r = reduce_mod(Poly(2 * self.k, tm), qs)
                if not r.is_zero():
                    out[beta] = r
            self._canonical = out
        return self._canonical

    def is_zero_class(self) -> bool:
        return not self.canonical()

    def preserves_ideal(self) -> bool:
        if self._preserves is None:
            self._preserves = is_ideal_preserving(self.op)
        return self._preserves

    def apply(self, f: Poly) -> Poly:
        """Action on the canonical form of a cone function."""
        return reduce_mod(self.op.apply(f), q_form(self.k))

    def __eq__(self, other):
        if not isinstance(other, ConeOp):
            return NotImplemented
        return self.k == other.k and self.canonical() == other.canonical()

    def __hash__(self):
        can = self.canonical()
        return hash((self.k, frozenset((b, hash(p)) for b, p in can.items())))

    def __add__(self, other: "ConeOp") -> "ConeOp":
        return ConeOp(self.op + other.op)

    def __sub__(self, other: "ConeOp") -> "ConeOp":
        return ConeOp(self.op - other.op)

    def __mul__(self, other: "ConeOp") -> "ConeOp":
        return ConeOp(self.op * other.op)

    def scale(self, c) -> "ConeOp":
        return ConeOp(self.op.scale(c))

    def commutator(self, other: "ConeOp") -> "ConeOp":
        return ConeOp(self.op.commutator(other.op))

    def canonical_text(self) -> str:
        can = self.canonical()
        if not can:
            return "0"
        n = 2 * self.k
        names = default_names(n)
        parts = []
        for beta in sorted(can, key=lambda b: (sum(b), mono_key(b))):
            dfac = "*".join(
                f"d{names[i]}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(beta) if e
            )
            coef = can[beta].text()
            if dfac:
                parts.append(f"({coef})*{dfac}")
            else:
                parts.append(f"({coef})")
        return " + ".join(parts)

    def canonical_json(self) -> list:
        can = self.canonical()
        return [
            {"d": list(beta), "coefficient": can[beta].to_json()}
            for beta in sorted(can, key=lambda b: (sum(b), mono_key(b)))
        ]

    def __repr__(self):
        return f"ConeOp({self.canonical_text()})"


def is_ideal_preserving(a: WeylOp) -> bool:
    """Decide membership in the normalizer of the function ideal (Q*).

    a normalizes (Q*) iff a(Q* m) lies in (Q*) for all monomials m of degree
    at most the order of a; higher degrees follow by triangularity of the
    action in total degree.
    """
    k = a.nvars // 2
    qs = q_form(k)
    r = max(a.order(), 0)
    for m in monomials_up_to(2 * k, r):
        img = a.apply(qs * Poly.monomial(m))
        if not reduce_mod(img, qs).is_zero():
            return False
    return True


def rho_tilde(xi: LieElt) -> ConeOp:
    """The corrected cone realization rho_amb(xi) - A_xi.

    The correction removes the ideal defect of the ambient formula, making
    the image a genuine operator on the cone; fails loudly if the resulting
    operator does not normalize (Q*).
    """
    out = ConeOp(rho_amb(xi) - a_correction(xi))
    if not out.preserves_ideal():
        raise NotNormalizing("corrected realization does not normalize (Q*)")
    return out


def tau_hat(a: WeylOp) -> ConeOp:
    """The corrected Fourier-to-cone map: conjugate tau(a) by Q*.

    Computes the quotient eta' with Q* tau(a) = eta' Q* by right division;
    raises NotNormalizing if the division fails (a outside the normalizer of
    the left ideal generated by the Laplacian).
    """
    k = a.nvars // 2
    qs = q_form(k)
    w = WeylOp.mult(qs) * tau(a)
    try:
        quo = w.divide_right_by_mult(qs)
    except NotDivisible as exc:
        raise NotNormalizing(str(exc)) from exc
    return ConeOp(quo)


# -- distinguished generators ---------------------------------------------------


def euler_weight_op(k: int) -> WeylOp:
    """E + k - 1, the shifted Euler operator central to the weight ladder."""
    return euler_op(k) + WeylOp.const(2 * k, k - 1)


def xx_op(k: int, i: int) -> WeylOp:
    """XX_i = (E + k - 1) d_{y_{k+1-i}} - x_i Delta   (i is 1-based)."""
    n = 2 * k
    return (euler_weight_op(k) * WeylOp.partial(n, n - i)
            - WeylOp.mult(Poly.var(n, i - 1)) * laplacian_op(k))


def yy_op(k: int, i: int) -> WeylOp:
    """YY_i = (E + k - 1) d_{x_{k+1-i}} - y_i Delta   (i is 1-based)."""
    n = 2 * k
    return (euler_weight_op(k) * WeylOp.partial(n, k - i)
            - WeylOp.mult(Poly.var(n, k + i - 1)) * laplacian_op(k))


def d_op(k: int, i: int, j: int) -> WeylOp:
    """D_ij = x_j d_{x_i} - y_{k+1-i} d_{y_{k+1-j}}   (1-based indices)."""
    n = 2 * k
    return (WeylOp.mult(Poly.var(n, j - 1)) * WeylOp.partial(n, i - 1)
            - WeylOp.mult(Poly.var(n, n - i)) * WeylOp.partial(n, n - j))


def b_op(k: int, i: int, j: int) -> WeylOp:
    """B_ij = y_{k+1-j} d_{x_i} - y_{k+1-i} d_{x_j}   (1-based, i < j)."""
    n = 2 * k
    return (WeylOp.mult(Poly.var(n, n - j)) * WeylOp.partial(n, i - 1)
            - WeylOp.mult(Poly.var(n, n - i)) * WeylOp.partial(n, j - 1))


def c_op(k: int, i: int, j: int) -> WeylOp:
    """C_ij = x_j d_{y_{k+1-i}} - x_i d_{y_{k+1-j}}   (1-based, i < j)."""
    n = 2 * k
    return (WeylOp.mult(Poly.var(n, j - 1)) * WeylOp.partial(n, n - i)
            - WeylOp.mult(Poly.var(n, i - 1)) * WeylOp.partial(n, n - j))


# letters of generator words: ("x", i), ("y", i), ("XX", i), ("YY", i),
# ("Etil",), ("D", i, j), ("B", i, j), ("C", i, j) with 1-based indices.


def letter_op(k: int, letter) -> WeylOp:
    kind = letter[0]
    n = 2 * k
    if kind == "x":
        return WeylOp.mult(Poly.var(n, letter[1] - 1))
    if kind == "y":
        return WeylOp.mult(Poly.var(n, k + letter[1] - 1))
    if kind == "XX":
        return xx_op(k, letter[1])
    if kind == "YY":
        return yy_op(k, letter[1])
    if kind == "Etil":
        return euler_weight_op(k)
    if kind == "D":
        return d_op(k, letter[1], letter[2])
    if kind == "B":
        return b_op(k, letter[1], letter[2])
    if kind == "C":
        return c_op(k, letter[1], letter[2])
    raise ValueError(f"unknown generator letter {letter!r}")


def letter_lie_preimage(k: int, letter) -> LieElt:
    """The Lie algebra element realized as this generator by rho_tilde."""
    n = 2 * k
    kind = letter[0]
    if kind == "x":
        e = [0] * n
        e[letter[1] - 1] = 1
        return LieElt(k, mu=e)
    if kind == "y":
        e = [0] * n
        e[k + letter[1] - 1] = 1
        return LieElt(k, mu=e)
    if kind == "XX":
        e = [0] * n
        e[letter[1] - 1] = 1
        return LieElt(k, lam=e)
    if kind == "YY":
        e = [0] * n
        e[k + letter[1] - 1] = 1
        return LieElt(k, lam=e)
    if kind == "Etil":
        return LieElt(k, alpha=-1)
    # Levi letters: the matrix X with sum X[a][b] v_a d_b equal to the operator
    X = [[Fraction(0)] * n for _ in range(n)]
    if kind == "D":
        i, j = letter[1], letter[2]
        X[j - 1][i - 1] += 1
        X[n - i][n - j] -= 1
    elif kind == "B":
        i, j = letter[1], letter[2]
        X[n - j][i - 1] += 1
        X[n - i][j - 1] -= 1
    elif kind == "C":
        i, j = letter[1], letter[2]
        X[j - 1][n - i] += 1
        X[i - 1][n - j] -= 1
    else:
        raise ValueError(f"unknown generator letter {letter!r}")
    return LieElt(k, X=X)


def fourier_letter(letter):
    """Image of one letter under the quadric Fourier automorphism, with sign."""
    kind = letter[0]
    if kind == "x":
        return ("XX", letter[1]), 1
    if kind == "XX":
        return ("x", letter[1]), 1
    if kind == "y":
        return ("YY", letter[1]), 1
    if kind == "YY":
        return ("y", letter[1]), 1
    if kind == "Etil":
        return ("Etil",), -1
    return letter, 1


class GenWord:
    """Formal rational combination of words in the tagged generators."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict | None = None):
        self.k = k
        self.terms = {w: Fraction(c) for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def letter(cls, k: int, letter, c=1) -> "GenWord":
        return cls(k, {(tuple(letter),): Fraction(c)})

    @classmethod
    def const(cls, k: int, c) -> "GenWord":
        return cls(k, {(): Fraction(c)})

    def __add__(self, other: "GenWord") -> "GenWord":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, 0) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return GenWord(self.k, terms)

    def __sub__(self, other: "GenWord") -> "GenWord":
        return self + other.scale(-1)

    def scale(self, c) -> "GenWord":
        return GenWord(self.k, {w: Fraction(c) * v for w, v in self.terms.items()})

    def __mul__(self, other: "GenWord") -> "GenWord":
        terms: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = terms.get(w, 0) + c1 * c2
                if s:
                    terms[w] = s
                else:
                    del terms[w]
        return GenWord(self.k, terms)

    def __eq__(self, other):
        if not isinstance(other, GenWord):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def fourier(self) -> "GenWord":
        """Letterwise quadric Fourier transform; an involution."""
        out: dict = {}
        for word, c in self.terms.items():
            sign = 1
            new_word = []
            for letter in word:
                img, s = fourier_letter(letter)
                sign *= s
                new_word.append(img)
            w = tuple(new_word)
            s = out.get(w, 0) + sign * c
            if s:
                out[w] = s
            else:
                del out[w]
        return GenWord(self.k, out)

    def eval(self) -> ConeOp:
        total = WeylOp.zero(2 * self.k)
        for word, c in self.terms.items():
            op = WeylOp.const(2 * self.k, c)
            for letter in word:
                op = op * letter_op(self.k, letter)
            total = total + op
        return ConeOp(total)

    def text(self) -> str:
        if not self.terms:
            return "0"
        def letter_text(letter):
            kind = letter[0]
            if kind == "Etil":
                return "(E+k-1)"
            return kind + "".join(str(i) for i in letter[1:])
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[word]
            body = "*".join(letter_text(l) for l in word) if word else "1"
            if abs(c) != 1 or not word:
                body = f"{abs(c)}*{body}" if word else str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"GenWord({self.text()})"


def grading(a: ConeOp):
    """The degree d with [E, a] = d a in canonical class, or 'Mixed'."""
    E = ConeOp(euler_op(a.k))
    com = E.commutator(a).canonical()
    can = a.canonical()
    if not can or not com:
        return 0
    # candidate eigenvalue from any nonzero coefficient of the commutator
    beta, p = next(iter(com.items()))
    m, c = p.leading()
    base = can.get(beta)
    if base is None or base.coeff(m) == 0:
        return "Mixed"
    d = c / base.coeff(m)
    scaled = {b: q.scale(d) for b, q in can.items()}
    return int(d) if (d.denominator == 1 and scaled == com) else "Mixed"
