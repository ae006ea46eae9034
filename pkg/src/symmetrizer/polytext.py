"""Textual polynomial format.

Grammar (whitespace ignored everywhere):

    poly     := term (('+' | '-') term)*
    term     := [rational '*'] factor ('*' factor)*
    factor   := 'x' index ['^' exponent]
    rational := integer ['/' positive-integer]

The canonical printer emits terms in descending lexicographic monomial
order, magnitudes after the first term (signs become separators), '*'
between all factors, and no unit coefficients except the bare leading
"-1*" that the grammar requires for a negative head term.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .forms import SymForm

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<var>x(?P<index>\d+))|(?P<sign>[+-])"
    r"|(?P<star>\*)|(?P<caret>\^)|(?P<slash>/))"
)


class ParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> tuple[str, str | int, int] | None:
        """(kind, value, position) of the next token without consuming."""
        rest = self.text[self.pos :]
        if not rest.strip():
            return None
        m = _TOKEN.match(self.text, self.pos)
        if m is None or m.end() == m.start():
            bad = self.pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {self.text[bad]!r}", bad)
        if m.group("number"):
            return ("number", int(m.group("number")), m.start("number"))
        if m.group("var"):
            return ("var", int(m.group("index")), m.start("var"))
        if m.group("sign"):
            return ("sign", m.group("sign"), m.start("sign"))
        if m.group("star"):
            return ("star", "*", m.start("star"))
        if m.group("caret"):
            return ("caret", "^", m.start("caret"))
        return ("slash", "/", m.start("slash"))

    def next(self) -> tuple[str, str | int, int] | None:
        tok = self.peek()
        if tok is not None:
            m = _TOKEN.match(self.text, self.pos)
            self.pos = m.end()
        return tok

    def expect(self, kind: str, what: str) -> tuple[str, str | int, int]:
        tok = self.next()
        if tok is None:
            raise ParseError(f"expected {what}, found end of input", len(self.text))
        if tok[0] != kind:
            raise ParseError(f"expected {what}", tok[2])
        return tok


def _parse_term(toks: _Tokens, sign: int) -> tuple[dict[int, int], Fraction, int]:
    """One term: returns (exponent-by-index, signed coefficient, position)."""
    tok = toks.peek()
    pos = tok[2] if tok else len(toks.text)
    coeff = Fraction(sign)
    if tok is not None and tok[0] == "number":
        toks.next()
        num = tok[1]
        den = 1
        nxt = toks.peek()
        if nxt is not None and nxt[0] == "slash":
            toks.next()
            dtok = toks.expect("number", "a positive denominator")
            den = dtok[1]
            if den == 0:
                raise ParseError("zero denominator", dtok[2])
        coeff *= Fraction(num, den)
        toks.expect("star", "'*' between coefficient and variables")
    exponents: dict[int, int] = {}
    while True:
        vtok = toks.expect("var", "a variable like x0")
        idx = vtok[1]
        exp = 1
        nxt = toks.peek()
        if nxt is not None and nxt[0] == "caret":
            toks.next()
            exp = toks.expect("number", "an exponent")[1]
        exponents[idx] = exponents.get(idx, 0) + exp
        nxt = toks.peek()
        if nxt is not None and nxt[0] == "star":
            toks.next()
            continue
        break
    return exponents, coeff, pos


def parse_poly(text: str, nvars: int | None = None) -> SymForm:
    """Parse polynomial text into a form.

    The input must be homogeneous of degree >= 3. The variable count is
    1 + the largest index used, unless overridden upward.
    """
    toks = _Tokens(text)
    if toks.peek() is None:
        raise ParseError("empty input", 0)
    terms: list[tuple[dict[int, int], Fraction, int]] = []
    first = True
    while toks.peek() is not None:
        sign = 1
        tok = toks.peek()
        if tok[0] == "sign":
            toks.next()
            sign = 1 if tok[1] == "+" else -1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", tok[2])
        terms.append(_parse_term(toks, sign))
        first = False

    degree = sum(terms[0][0].values())
    max_index = -1
    for exps, _, pos in terms:
        if sum(exps.values()) != degree:
            raise ParseError(
                f"term of degree {sum(exps.values())} in a degree-{degree} polynomial",
                pos,
            )
        max_index = max(max_index, max(exps))
    if degree < 3:
        raise ParseError(f"degree {degree} is below 3", terms[0][2])

    inferred = max_index + 1
    if nvars is None:
        nvars = inferred
    elif nvars < inferred:
        for exps, _, pos in terms:
            if max(exps) >= nvars:
                raise ParseError(
                    f"variable x{max(exps)} exceeds the declared count {nvars}", pos
                )
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for exps, c, _ in terms:
        alpha = tuple(exps.get(i, 0) for i in range(nvars))
        coeffs[alpha] = coeffs.get(alpha, Fraction(0)) + c
    return SymForm.from_coeffs(nvars, degree, coeffs)


def format_poly(F: SymForm) -> str:
    """Canonical text: descending-lex terms, explicit '*', no unit
    coefficients (except a leading -1* where the grammar needs it)."""
    if F.is_zero:
        return "0"
    parts = []
    for alpha, c in F.terms:
        body = "*".join(
            f"x{i}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(alpha)
            if e
        )
        mag = abs(c)
        if body:
            frag = body if mag == 1 else f"{mag}*{body}"
        else:
            frag = str(mag)
        if not parts:
            if c < 0:
                frag = f"-{mag}*{body}" if body else f"-{mag}"
            parts.append(frag)
        else:
            parts.append(("+ " if c > 0 else "- ") + frag)
    return " ".join(parts)
