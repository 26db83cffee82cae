"""The conformal orthogonal Lie algebra of the extended split form.

The ambient form on kappa^(2k+2) is J+ = antidiag(1, J_V, 1) where
J_V = [[0, J_k], [J_k, 0]] with J_k the anti-diagonal identity.  A Lie
algebra element is stored in block coordinates (alpha, mu, X, lambda) and
assembles to

    [[ alpha, -lambda^T J_V,  0      ],
     [ mu,     X,             lambda ],
     [ 0,     -mu^T J_V,     -alpha  ]]

with X skew for J_V.  Group elements are exact rational matrices g with
g^T J+ g = J+.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, QLaurent, divides_exactly, q_form


def _frac_vec(v, n):
    v = [Fraction(c) for c in v]
    if len(v) != n:
        raise ValueError("wrong vector length")
    return v


def _zeros(n, m):
    return [[Fraction(0)] * m for _ in range(n)]


def mat_mul(a, b):
    n, p, m = len(a), len(b), len(b[0])
    out = _zeros(n, m)
    for i in range(n):
        ai = a[i]
        for l in range(p):
            c = ai[l]
            if c:
                bl = b[l]
                oi = out[i]
                for j in range(m):
                    if bl[j]:
                        oi[j] += c * bl[j]
    return out

def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_inv(a):
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(a)
    m = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def jv_matrix(k: int):
    """J_V: sends e_{x_i} to e_{y_{k+1-i}} and back."""
    n = 2 * k
    j = _zeros(n, n)
    for i in range(n):
        j[i][n - 1 - i] = Fraction(1)
    return j


def jplus_matrix(k: int):
    n = 2 * k + 2
    j = _zeros(n, n)
    for i in range(n):
        j[i][n - 1 - i] = Fraction(1)
    return j


def b_pair(k: int, a, b) -> Fraction:
    return sum((Fraction(a[i]) * Fraction(b[2 * k - 1 - i]) for i in range(2 * k)),
               Fraction(0))


def q_val(k: int, v) -> Fraction:
    return b_pair(k, v, v) / 2


class LieElt:
    """Element of the conformal Lie algebra in (alpha, mu, X, lambda) blocks."""

    __slots__ = ("k", "alpha", "mu", "X", "lam", "tag")

    def __init__(self, k, alpha=0, mu=None, X=None, lam=None, tag=None):
        n = 2 * k
        self.k = k
        self.alpha = Fraction(alpha)
        self.mu = _frac_vec(mu, n) if mu is not None else [Fraction(0)] * n
        self.lam = _frac_vec(lam, n) if lam is not None else [Fraction(0)] * n
        self.X = ([[Fraction(c) for c in row] for row in X]
                  if X is not None else _zeros(n, n))
        self.tag = tag
        # X^T J_V + J_V X = 0 reads entrywise X[a][b] = -X[nbar(b)][nbar(a)]
        for a in range(n):
            for b in range(n):
                if self.X[a][b] + self.X[n - 1 - b][n - 1 - a] != 0:
                    raise ValueError("X is not skew for the split form")

    def matrix(self):
        k, n = self.k, 2 * self.k
        jv = jv_matrix(k)
        m = _zeros(n + 2, n + 2)
        m[0][0] = self.alpha
        m[n + 1][n + 1] = -self.alpha
        lam_flip = [sum(self.lam[i] * jv[i][j] for i in range(n)) for j in range(n)]
        mu_flip = [sum(self.mu[i] * jv[i][j] for i in range(n)) for j in range(n)]
        for j in range(n):
            m[0][1 + j] = -lam_flip[j]
            m[n + 1][1 + j] = -mu_flip[j]
        for i in range(n):
            m[1 + i][0] = self.mu[i]
            m[1 + i][n + 1] = self.lam[i]
            for j in range(n):
                m[1 + i][1 + j] = self.X[i][j]
        return m

    @classmethod
    def from_matrix(cls, k: int, m, tag=None) -> "LieElt":
        n = 2 * k
        alpha = m[0][0]
        mu = [m[1 + i][0] for i in range(n)]
        lam = [m[1 + i][n + 1] for i in range(n)]
        X = [[m[1 + i][1 + j] for j in range(n)] for i in range(n)]
        elt = cls(k, alpha, mu, X, lam, tag=tag)
        # consistency of the redundant blocks
        assembled = elt.matrix()
        for i in range(n + 2):
            for j in range(n + 2):
                if assembled[i][j] != m[i][j]:
                    raise ValueError("matrix is not in the conformal Lie algebra")
        return elt

    def bracket(self, other: "LieElt") -> "LieElt":
        a, b = self.matrix(), other.matrix()
        return LieElt.from_matrix(self.k, mat_sub(mat_mul(a, b), mat_mul(b, a)))

    def ad_w0(self) -> "LieElt":
        """Conjugation by the Weyl inversion: swaps mu and lambda, flips alpha."""
        return LieElt(self.k, -self.alpha, self.lam, self.X, self.mu, tag=self.tag)

    def scale(self, c) -> "LieElt":
        c = Fraction(c)
        return LieElt(self.k, c * self.alpha, [c * v for v in self.mu],
                      [[c * v for v in row] for row in self.X],
                      [c * v for v in self.lam], tag=self.tag)

    def __add__(self, other: "LieElt") -> "LieElt":
        return LieElt(self.k, self.alpha + other.alpha,
                      [a + b for a, b in zip(self.mu, other.mu)],
                      [[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.X, other.X)],
                      [a + b for a, b in zip(self.lam, other.lam)])

    def __eq__(self, other):
        if not isinstance(other, LieElt):
            return NotImplemented
        return (self.k == other.k and self.alpha == other.alpha
                and self.mu == other.mu and self.X == other.X
                and self.lam == other.lam)

    def is_zero(self) -> bool:
        return (self.alpha == 0 and not any(self.mu) and not any(self.lam)
                and not any(any(row) for row in self.X))

    def __repr__(self):
        return (f"LieElt(alpha={self.alpha}, mu={self.mu}, "
                f"X={self.X}, lam={self.lam})")


def so_q_basis(k: int):
    """Basis of the Levi part: M_ab = E_ab - E_{bbar,abar} with ibar = 2k+1-i."""
    n = 2 * k
    out = []
    seen = set()
    for a in range(n):
        for b in range(n):
            if b == n - 1 - a:
                continue
            key = frozenset({(a, b), (n - 1 - b, n - 1 - a)})
            if key in seen:
                continue
            seen.add(key)
            X = _zeros(n, n)
            X[a][b] += Fraction(1)
            X[n - 1 - b][n - 1 - a] -= Fraction(1)
            out.append(X)
    return out


def basis(k: int):
    """Tagged basis: one alpha element, 2k mu, 2k lambda, dim o(Q) Levi."""
    n = 2 * k
    out = [LieElt(k, alpha=1, tag=("alpha",))]
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(LieElt(k, mu=e, tag=("mu", i)))
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(LieElt(k, lam=e, tag=("lam", i)))
    for idx, X in enumerate(so_q_basis(k)):
        out.append(LieElt(k, X=X, tag=("levi", idx)))
    return out


class GroupElt:
    """Exact rational matrix preserving the extended split form."""

    __slots__ = ("k", "m")

    def __init__(self, k: int, m):
        n = 2 * k + 2
        self.k = k
        self.m = [[Fraction(c) for c in row] for row in m]
        jp = jplus_matrix(k)
        mt = [[self.m[j][i] for j in range(n)] for i in range(n)]
        if mat_mul(mt, mat_mul(jp, self.m)) != jp:
            raise ValueError("matrix does not preserve the extended form")

    def __mul__(self, other: "GroupElt") -> "GroupElt":
        return GroupElt(self.k, mat_mul(self.m, other.m))

    def inv(self) -> "GroupElt":
        return GroupElt(self.k, mat_inv(self.m))

    def __eq__(self, other):
        if not isinstance(other, GroupElt):
            return NotImplemented
        return self.k == other.k and self.m == other.m

    def to_json(self):
        return [[{"num": c.numerator, "den": c.denominator} for c in row]
                for row in self.m]

    def __repr__(self):
        return f"GroupElt({self.m})"


def w0(k: int) -> GroupElt:
    """The Weyl inversion: swaps the two ends, fixes the middle block."""
    n = 2 * k + 2
    m = _zeros(n, n)
    m[0][n - 1] = Fraction(1)
    m[n - 1][0] = Fraction(1)
    for i in range(1, n - 1):
        m[i][i] = Fraction(1)
    return GroupElt(k, m)


def u(k: int, v) -> GroupElt:
    """Upper unipotent attached to v."""
    n = 2 * k
    v = _frac_vec(v, n)
    jv = jv_matrix(k)
    m = _zeros(n + 2, n + 2)
    m[0][0] = Fraction(1)
    m[n + 1][n + 1] = Fraction(1)
    vflip = [sum(v[i] * jv[i][j] for i in range(n)) for j in range(n)]
    for j in range(n):
        m[0][1 + j] = -vflip[j]
        m[1 + j][n + 1] = v[j]
        m[1 + j][1 + j] = Fraction(1)
    m[0][n + 1] = -q_val(k, v)
    return GroupElt(k, m)


def u_op(k: int, v) -> GroupElt:
    """Opposite unipotent attached to v (parametrizes the big cell)."""
    n = 2 * k
    v = _frac_vec(v, n)
    jv = jv_matrix(k)
    m = _zeros(n + 2, n + 2)
    m[0][0] = Fraction(1)
    m[n + 1][n + 1] = Fraction(1)
    vflip = [sum(v[i] * jv[i][j] for i in range(n)) for j in range(n)]
    for j in range(n):
        m[1 + j][0] = v[j]
        m[n + 1][1 + j] = -vflip[j]
        m[1 + j][1 + j] = Fraction(1)
    m[n + 1][0] = -q_val(k, v)
    return GroupElt(k, m)


def levi(k: int, a, h) -> GroupElt:
    """Levi element diag(a, h, a^{-1}) with h preserving the middle form."""
    n = 2 * k
    a = Fraction(a)
    m = _zeros(n + 2, n + 2)
    m[0][0] = a
    m[n + 1][n + 1] = 1 / a
    for i in range(n):
        for j in range(n):
            m[1 + i][1 + j] = Fraction(h[i][j])
    return GroupElt(k, m)


class DegenerateCell(Exception):
    """The pivot of the Bruhat factorization vanishes identically."""


class NotQLaurent(Exception):
    """The factorization pivot is not a constant times a power of Q."""


def _symbolic_uop_first_column(k: int):
    """First column of u_v^op with v symbolic: (1, v, -Q(v))^T as Poly list."""
    n = 2 * k
    col = [Poly.const(n, 1)]
    col += [Poly.var(n, i) for i in range(n)]
    col.append(q_form(k).scale(-1))
    return col


def bruhat_factor(g: GroupElt, k: int | None = None):
    """Factor g^{-1} u_v^op through the big cell at a symbolic point v.

    The first column of g^{-1} u_v^op equals t * (1, v', -Q(v'))^T; the pivot
    t is the conformal character value chi0(p(g, v)).  Returns (vPrime, chi0)
    with vPrime a vector of QLaurent and chi0 a QLaurent.  Raises
    DegenerateCell when the pivot is identically zero and NotQLaurent when it
    is not a rational multiple of a power of Q (the factorization then leaves
    the Q-Laurent class).
    """
    k = g.k if k is None else k
    n = 2 * k
    ginv = mat_inv(g.m)
    col = _symbolic_uop_first_column(k)
    # entry i of g^{-1} u_v^op's first column
    out = []
    for i in range(n + 2):
        acc = Poly.zero(n)
        for j in range(n + 2):
            if ginv[i][j]:
                acc = acc + col[j].scale(ginv[i][j])
        out.append(acc)
    pivot = out[0]
    if pivot.is_zero():
        raise DegenerateCell("factorization pivot vanishes identically")
    pivot_inv = _q_power_inverse(pivot, k)
    vprime = [QLaurent(k, out[1 + i], 0) * pivot_inv for i in range(n)]
    return vprime, QLaurent(k, pivot, 0)


def _as_q_power(p: Poly, k: int):
    """Return (c, m) with p = c * Q^m, or None."""
    q = q_form(k)
    m = 0
    work = p
    while not work.is_constant():
        quo = divides_exactly(q, work)
        if quo is None:
            return None
        work, m = quo, m + 1
    if work.is_zero():
        return None
    return (work.constant(), m)


def _q_power_inverse(p: Poly, k: int) -> QLaurent:
    """1/p for p = c * Q^m."""
    cm = _as_q_power(p, k)
    if cm is None:
        raise NotQLaurent("pivot is not a constant multiple of a Q power")
    c, m = cm
    return QLaurent(k, Poly.const(2 * k, 1 / c), m)


def chi0_at(g: GroupElt, point) -> Fraction:
    """chi0(p(g, v)) at a rational point v: the pivot of g^{-1} u_v^op."""
    k = g.k
    ginv = mat_inv(g.m)
    col = [Fraction(1)] + [Fraction(c) for c in point] + [-q_val(k, point)]
    return sum(ginv[0][j] * col[j] for j in range(2 * k + 2))


def act_at(g: GroupElt, point):
    """The rational action g(v) at a rational point, via the factorization."""
    k = g.k
    ginv = mat_inv(g.m)
    col = [Fraction(1)] + [Fraction(c) for c in point] + [-q_val(k, point)]
    vals = [sum(ginv[i][j] * col[j] for j in range(2 * k + 2))
            for i in range(2 * k + 2)]
    if vals[0] == 0:
        raise DegenerateCell("point outside the big cell for this g")
    return [v / vals[0] for v in vals[1:2 * k + 1]]
