"""Parsing of rational map descriptions.

Two input shapes are accepted:

    z^2 - 29/16            an affine rational function of z over Q
    [X^2+Y^2 : 2*X*Y]      an explicit homogeneous pair in X, Y

Operators are + - * / ^ with integer exponents ('**' is tolerated as '^');
multiplication is always explicit.  The affine form may be any rational
expression; numerator and denominator sharing a polynomial factor are
reduced before homogenization.  Homogeneous sides must be polynomials of
one common degree (division by constants is allowed).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ratmap import DegenerateMapError, HomogPair, make_pair

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]+)|(?P<op>\*\*|[-+*/^()\[\]:]))"
)


class MapSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise MapSyntaxError(f"unexpected character {stripped[0]!r}", at)
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            op = m.group("op")
            tokens.append(("op", "^" if op == "**" else op, m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over:  expr := term (('+'|'-') term)*
                                term := factor (('*'|'/') factor)*
                                factor := '-' factor | atom ('^' int)*
                                atom := int | variable | '(' expr ')'
    """

    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.tokens = _tokenize(text)
        self.variables = variables
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def accept(self, kind, value=None):
        tok = self.tokens[self.i]
        if tok[0] == kind and (value is None or tok[1] == value):
            self.i += 1
            return tok
        return None

    def expect_op(self, op):
        if not self.accept("op", op):
            tok = self.peek()
            raise MapSyntaxError(f"expected {op!r}", tok[2])

    def expr(self):
        node = self.term()
        while True:
            if self.accept("op", "+"):
                node = ("add", node, self.term())
            elif self.accept("op", "-"):
                node = ("sub", node, self.term())
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            if self.accept("op", "*"):
                node = ("mul", node, self.factor())
            elif self.accept("op", "/"):
                node = ("div", node, self.factor())
            else:
                return node

    def factor(self):
        if self.accept("op", "-"):
            return ("neg", self.factor())
        node = self.atom()
        while self.accept("op", "^"):
            tok = self.peek()
            exp = self.accept("int")
            if exp is None:
                raise MapSyntaxError("exponents must be nonnegative integers", tok[2])
            node = ("pow", node, exp[1])
        return node

    def atom(self):
        tok = self.peek()
        if self.accept("op", "("):
            node = self.expr()
            self.expect_op(")")
            return node
        if tok[0] == "int":
            self.i += 1
            return ("const", Fraction(tok[1]))
        if tok[0] == "name":
            if tok[1] not in self.variables:
                allowed = " or ".join(self.variables)
                raise MapSyntaxError(f"unknown variable {tok[1]!r}, expected {allowed}", tok[2])
            self.i += 1
            return ("var", tok[1])
        raise MapSyntaxError("expected a number, variable, or parenthesis", tok[2])


# --- univariate polynomials over Q, coefficient lists by ascending degree ---

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_add(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _poly_trim(out)


def _poly_neg(p):
    return [-c for c in p]


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, c in enumerate(p):
        if c:
            for j, e in enumerate(q):
                out[i + j] += c * e
    return _poly_trim(out)


def _poly_divmod(p, q):
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(rem) >= len(q):
        k = len(rem) - len(q)
        factor = rem[-1] / lead
        quot[k] = factor
        for i, c in enumerate(q):
            rem[k + i] -= factor * c
        _poly_trim(rem)
        if not rem:
            break
    return _poly_trim(quot), rem


def _poly_gcd(p, q):
    a, b = list(p), list(q)
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _eval_affine(node):
    """Evaluate an AST to a rational function (num, den) in z."""
    kind = node[0]
    if kind == "const":
        return [node[1]] if node[1] else [], [Fraction(1)]
    if kind == "var":
        return [Fraction(0), Fraction(1)], [Fraction(1)]
    if kind == "neg":
        n, d = _eval_affine(node[1])
        return _poly_neg(n), d
    if kind == "pow":
        n, d = _eval_affine(node[1])
        rn, rd = [Fraction(1)], [Fraction(1)]
        for _ in range(node[2]):
            rn = _poly_mul(rn, n)
            rd = _poly_mul(rd, d)
        return rn, rd
    n1, d1 = _eval_affine(node[1])
    n2, d2 = _eval_affine(node[2])
    if kind == "add":
        return _poly_add(_poly_mul(n1, d2), _poly_mul(n2, d1)), _poly_mul(d1, d2)
    if kind == "sub":
        return _poly_add(_poly_mul(n1, d2), _poly_neg(_poly_mul(n2, d1))), _poly_mul(d1, d2)
    if kind == "mul":
        return _poly_mul(n1, n2), _poly_mul(d1, d2)
    if kind == "div":
        if not n2:
            raise DegenerateMapError("division by an identically-zero expression")
        return _poly_mul(n1, d2), _poly_mul(d1, n2)
    raise AssertionError(kind)


# --- bivariate polynomials as {(deg_X, deg_Y): coefficient} ---

def _bi_add(p, q):
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, Fraction(0)) + c
    return {k: c for k, c in out.items() if c}


def _bi_mul(p, q):
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, Fraction(0)) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _eval_homog(node):
    kind = node[0]
    if kind == "const":
        return {(0, 0): node[1]} if node[1] else {}
    if kind == "var":
        return {(1, 0) if node[1] == "X" else (0, 1): Fraction(1)}
    if kind == "neg":
        return {k: -c for k, c in _eval_homog(node[1]).items()}
    if kind == "pow":
        base = _eval_homog(node[1])
        out = {(0, 0): Fraction(1)}
        for _ in range(node[2]):
            out = _bi_mul(out, base)
        return out
    p = _eval_homog(node[1])
    q = _eval_homog(node[2])
    if kind == "add":
        return _bi_add(p, q)
    if kind == "sub":
        return _bi_add(p, {k: -c for k, c in q.items()})
    if kind == "mul":
        return _bi_mul(p, q)
    if kind == "div":
        if not q:
            raise DegenerateMapError("division by an identically-zero expression")
        if set(q) != {(0, 0)}:
            raise DegenerateMapError("homogeneous sides may only be divided by constants")
        inv = 1 / q[(0, 0)]
        return {k: c * inv for k, c in p.items()}
    raise AssertionError(kind)


def _homog_side_coeffs(poly: dict, side: str):
    if not poly:
        raise DegenerateMapError(f"{side} side is identically zero")
    degrees = {i + j for i, j in poly}
    if len(degrees) != 1:
        raise DegenerateMapError(f"{side} side is not homogeneous")
    return degrees.pop()


def parse_map(text: str) -> HomogPair:
    """Parse a map description into a normalized homogeneous pair."""
    stripped = text.strip()
    if not stripped:
        raise MapSyntaxError("empty map description", 0)
    if stripped.lstrip().startswith("["):
        parser = _Parser(text, ("X", "Y"))
        parser.expect_op("[")
        f_ast = parser.expr()
        parser.expect_op(":")
        g_ast = parser.expr()
        parser.expect_op("]")
        if parser.peek()[0] != "end":
            raise MapSyntaxError("trailing input after the pair", parser.peek()[2])
        f_poly = _eval_homog(f_ast)
        g_poly = _eval_homog(g_ast)
        d1 = _homog_side_coeffs(f_poly, "first")
        d2 = _homog_side_coeffs(g_poly, "second")
        if d1 != d2:
            raise DegenerateMapError(f"sides have different degrees {d1} and {d2}")
        a = [f_poly.get((d1 - i, i), Fraction(0)) for i in range(d1 + 1)]
        b = [g_poly.get((d1 - i, i), Fraction(0)) for i in range(d1 + 1)]
        return make_pair(a, b, stripped)
    parser = _Parser(text, ("z",))
    ast = parser.expr()
    if parser.peek()[0] != "end":
        raise MapSyntaxError("trailing input after the expression", parser.peek()[2])
    num, den = _eval_affine(ast)
    if not num and not den:
        raise DegenerateMapError("the zero expression is not a map")
    common = _poly_gcd(num, den)
    if len(common) > 1:
        num = _poly_divmod(num, common)[0]
        den = _poly_divmod(den, common)[0]
    d = max(len(num), len(den)) - 1
    if d < 1:
        raise DegenerateMapError("constant expressions do not define a map")
    num = num + [Fraction(0)] * (d + 1 - len(num))
    den = den + [Fraction(0)] * (d + 1 - len(den))
    # a[i] is the X^(d-i) Y^i coefficient, i.e. the z^(d-i) coefficient
    a = [num[d - i] for i in range(d + 1)]
    b = [den[d - i] for i in range(d + 1)]
    return make_pair(a, b, stripped)
