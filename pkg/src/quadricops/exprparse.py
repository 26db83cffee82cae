"""Expression grammar for operators on the dual space.

Tokens: coordinates x<i>, y<i>; derivatives dx<i>, dy<i>; named operators
E, Delta, Q (multiplication by the dual form), XX<i>, YY<i>, Dop<i><j>,
Bop<i><j>, Cop<i><j>; integer literals; + - * ^ ( ).  Whitespace is
insignificant.  Precedence: ^ binds tightest, then *, then + and -;
multiplication is noncommutative and kept left-to-right.

The AST is a tree of tuples:
  ("int", n), ("var", name, i), ("gen", name, *indices),
  ("add", a, b), ("sub", a, b), ("mul", a, b), ("pow", a, n), ("neg", a).
"""

from __future__ import annotations

import re

from .coneops import b_op, c_op, d_op, xx_op, yy_op, GenWord
from .poly import Poly, q_form
from .weyl import WeylOp, euler_op, laplacian_op


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, expected=()):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.expected = tuple(expected)


_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<XX>XX(\d+))|(?P<YY>YY(\d+))|"
    r"(?P<Dop>Dop(\d)(\d))|(?P<Bop>Bop(\d)(\d))|(?P<Cop>Cop(\d)(\d))|"
    r"(?P<dx>dx(\d+))|(?P<dy>dy(\d+))|"
    r"(?P<x>x(\d+))|(?P<y>y(\d+))|"
    r"(?P<E>E)|(?P<Delta>Delta)|(?P<Q>Q)|"
    r"(?P<int>\d+)|(?P<op>[+\-*^()])"
    r")")


def tokenize(src: str, k: int):
    pos = 0
    out = []
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            stripped = src[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}",
                             pos, expected=("token",))
        kind = m.lastgroup if m.lastgroup != "op" else m.group("op")
        groups = [g for g in m.groups() if g is not None]
        if m.lastgroup in ("XX", "YY", "dx", "dy", "x", "y"):
            i = int(groups[1])
            if not 1 <= i <= k:
                raise IndexError(
                    f"index {i} out of range for k={k} in {m.group().strip()!r}")
            out.append((m.lastgroup, (i,), m.start()))
        elif m.lastgroup in ("Dop", "Bop", "Cop"):
            i, j = int(groups[1]), int(groups[2])
            if not (1 <= i <= k and 1 <= j <= k):
                raise IndexError(
                    f"indices ({i},{j}) out of range for k={k}")
            if m.lastgroup in ("Bop", "Cop") and not i < j:
                raise IndexError(
                    f"{m.lastgroup} requires i < j, got ({i},{j})")
            out.append((m.lastgroup, (i, j), m.start()))
        elif m.lastgroup == "int":
            out.append(("int", (int(groups[0]),), m.start()))
        elif m.lastgroup in ("E", "Delta", "Q"):
            out.append((m.lastgroup, (), m.start()))
        else:
            out.append((kind, (), m.start()))
        pos = m.end()
    out.append(("end", (), len(src)))
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}",
                             tok[2], expected=(kind,))
        return tok

    def parse_sum(self):
        node = self.parse_product()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.parse_product()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def parse_product(self):
        node = self.parse_power()
        while True:
            nxt = self.peek()[0]
            if nxt == "*":
                self.take()
                node = ("mul", node, self.parse_power())
            else:
                return node

    def parse_power(self):
        base = self.parse_atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("exponent must be an integer literal",
                                 tok[2], expected=("int",))
            return ("pow", base, tok[1][0])
        return base

    def parse_atom(self):
        tok = self.take()
        kind, args, pos = tok
        if kind == "int":
            return ("int", args[0])
        if kind == "-":
            return ("neg", self.parse_power())
        if kind == "+":
            return self.parse_power()
        if kind == "(":
            node = self.parse_sum()
            self.expect(")")
            return node
        if kind in ("x", "y"):
            return ("var", kind, args[0])
        if kind in ("XX", "YY", "dx", "dy"):
            return ("gen", kind, args[0])
        if kind in ("Dop", "Bop", "Cop"):
            return ("gen", kind, args[0], args[1])
        if kind in ("E", "Delta", "Q"):
            return ("gen", kind)
        raise ParseError(f"unexpected token {kind!r}", pos,
                         expected=("atom",))


def parse(src: str, k: int = 2):
    """Parse an expression; raises ParseError / IndexError on bad input."""
    p = _Parser(tokenize(src, k))
    node = p.parse_sum()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input starting with {tok[0]!r}", tok[2],
                         expected=("end",))
    return node


_PREC = {"add": 1, "sub": 1, "neg": 1, "mul": 2, "pow": 3}


def to_text(node) -> str:
    """Canonical printer; parse(to_text(t)) yields an equal tree."""
    def render(n, parent_prec):
        kind = n[0]
        if kind == "int":
            return str(n[1])
        if kind == "var":
            return f"{n[1]}{n[2]}"
        if kind == "gen":
            return n[1] + "".join(str(i) for i in n[2:])
        if kind == "neg":
            # unary - binds like ^'s operand, so guard mul/add bodies
            body = f"-{render(n[1], 3)}"
            return f"({body})" if parent_prec > 1 else body
        if kind in ("add", "sub"):
            op = " + " if kind == "add" else " - "
            # the right operand renders one level tighter so that
            # a - (b + c) and a + (b - c) keep their parentheses
            body = render(n[1], 1) + op + render(n[2], 2)
            return f"({body})" if parent_prec > 1 else body
        if kind == "mul":
            body = render(n[1], 2) + "*" + render(n[2], 3)
            return f"({body})" if parent_prec > 2 else body
        if kind == "pow":
            body = render(n[1], 4) + f"^{n[2]}"
            return f"({body})" if parent_prec > 3 else body
        raise ValueError(f"unknown node {kind!r}")
    return render(node, 0)


def eval_weyl(node, k: int) -> WeylOp:
    """Evaluate the AST to an ambient operator on the dual space."""
    n = 2 * k
    kind = node[0]
    if kind == "int":
        return WeylOp.const(n, node[1])
    if kind == "var":
        i = node[2]
        idx = i - 1 if node[1] == "x" else k + i - 1
        return WeylOp.mult(Poly.var(n, idx))
    if kind == "gen":
        g = node[1]
        if g == "E":
            return euler_op(k)
        if g == "Delta":
            return laplacian_op(k)
        if g == "Q":
            return WeylOp.mult(q_form(k))
        if g == "dx":
            return WeylOp.partial(n, node[2] - 1)
        if g == "dy":
            return WeylOp.partial(n, k + node[2] - 1)
        if g == "XX":
            return xx_op(k, node[2])
        if g == "YY":
            return yy_op(k, node[2])
        if g == "Dop":
            return d_op(k, node[2], node[3])
        if g == "Bop":
            return b_op(k, node[2], node[3])
        if g == "Cop":
            return c_op(k, node[2], node[3])
    if kind == "add":
        return eval_weyl(node[1], k) + eval_weyl(node[2], k)
    if kind == "sub":
        return eval_weyl(node[1], k) - eval_weyl(node[2], k)
    if kind == "mul":
        return eval_weyl(node[1], k) * eval_weyl(node[2], k)
    if kind == "pow":
        return eval_weyl(node[1], k) ** node[2]
    if kind == "neg":
        return -eval_weyl(node[1], k)
    raise ValueError(f"unknown node {kind!r}")


class NotGeneratorWord(ValueError):
    """Expression uses atoms outside the generator alphabet."""


def to_genword(node, k: int) -> GenWord:
    """Convert an AST into a formal generator word, when possible.

    The alphabet is x_i, y_i, XX_i, YY_i, Dop/Bop/Cop and E (expanded as
    (E+k-1) - (k-1)); derivatives, Delta and Q are not generator letters.
    """
    kind = node[0]
    if kind == "int":
        return GenWord.const(k, node[1])
    if kind == "var":
        return GenWord.letter(k, (node[1], node[2]))
    if kind == "gen":
        g = node[1]
        if g in ("XX", "YY"):
            return GenWord.letter(k, (g, node[2]))
        if g in ("Dop", "Bop", "Cop"):
            return GenWord.letter(k, (g[0], node[2], node[3]))
        if g == "E":
            return GenWord.letter(k, ("Etil",)) + GenWord.const(k, -(k - 1))
        raise NotGeneratorWord(f"{g} is not a generator letter")
    if kind == "add":
        return to_genword(node[1], k) + to_genword(node[2], k)
    if kind == "sub":
        return to_genword(node[1], k) - to_genword(node[2], k)
    if kind == "mul":
        return to_genword(node[1], k) * to_genword(node[2], k)
    if kind == "pow":
        out = GenWord.const(k, 1)
        for _ in range(node[2]):
            out = out * to_genword(node[1], k)
        return out
    if kind == "neg":
        return to_genword(node[1], k).scale(-1)
    raise ValueError(f"unknown node {kind!r}")


def genword_to_expr_text(w: GenWord, k: int) -> str:
    """Render a generator word back in the expression grammar."""
    if not w.terms:
        return "0"
    def letter_text(letter):
        kind = letter[0]
        if kind == "Etil":
            return f"(E + {k - 1})"
        if kind in ("D", "B", "C"):
            return f"{kind}op{letter[1]}{letter[2]}"
        return kind + "".join(str(i) for i in letter[1:])
    parts = []
    for word in sorted(w.terms, key=lambda ww: (len(ww), ww)):
        c = w.terms[word]
        body = "*".join(letter_text(l) for l in word) if word else "1"
        if abs(c) != 1 or not word:
            body = f"{abs(c)}*{body}" if word else str(abs(c))
        parts.append(("-" if c < 0 else "+", body))
    head_sign, head = parts[0]
    s = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
