"""Parser and printer for the identity description language.

The language declares univariate identities of the builtin shape without
recompiling anything::

    # gap >= 2 partitions vs parts +-1 (mod 5)
    identity rr1 :
      sum(j>=0) q^(j^2) / poch(q^1; q^1; j)
      == resprod(5; 1,4)

Grammar (ASCII, # comments to end of line, newline-insensitive):

    file      := { identity }
    identity  := "identity" NAME ":" sum "==" prod
    sum       := "sum" "(" "j" ">=" INT ")" term
    term      := factor { ("*" | "/") factor }
    factor    := "q" "^" "(" poly ")" | "poch" "(" qmono ";" qmono ";" lin ")" | INT
    prod      := pfact { ("*" | "/") pfact }
    pfact     := "pochinf" "(" qmono ";" qmono ")" | "Q" "(" qmono "," qmono ")"
               | "resprod" "(" INT ";" INT { "," INT } ")" | "q" "^" INT | INT
    qmono     := [ "-" ] "q" "^" lin | [ "-" ] INT        (INT only as 1, i.e. q^0)
    poly      := integer polynomial in j of degree <= 2; lin of degree <= 1
    NAME      := [A-Za-z][A-Za-z0-9_-]*

Parsing raises :class:`ParseError` with a 1-based position on syntax
errors and :class:`IdlValidationError` when a well-formed clause violates
a semantic constraint (non-growing exponent, residue out of range, and so
on).  ``parse_idl(print_idl(specs)) == specs`` for every valid spec list.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .identities import (
    ConstAtom,
    IdentitySpec,
    LinExpr,
    MonomialAtom,
    PochFactorSpec,
    PochInfAtom,
    ProductSideSpec,
    QuadExpr,
    QuintupleAtom,
    ResidueAtom,
    SumSideSpec,
)

KEYWORDS = frozenset(
    {"identity", "sum", "poch", "pochinf", "resprod", "Q", "q", "j"}
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # ident | integer | symbol | keyword
    text: str
    line: int
    column: int

    @property
    def end_column(self) -> int:
        return self.column + len(self.text)


class ParseError(Exception):
    """Syntax error with a 1-based source position."""

    def __init__(
        self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()
    ) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected


class IdlValidationError(Exception):
    """A parsed clause violating a semantic constraint."""

    def __init__(self, message: str, line: int, column: int, clause: str) -> None:
        super().__init__(f"{line}:{column}: {clause}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.clause = clause


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<sym2>==|>=)"
    r"|(?P<word>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<int>[0-9]+)"
    r"|(?P<sym>[:;,()*/^+\-])"
)


def tokenize(text: str) -> list[Token]:
    if not text.isascii():
        offset = next(i for i, ch in enumerate(text) if not ch.isascii())
        line, col = _position(text, offset)
        raise ParseError("non-ASCII character", line, col)
    line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            idx = bisect_right(line_starts, pos) - 1
            raise ParseError(
                f"unexpected character {text[pos]!r}",
                idx + 1,
                pos - line_starts[idx] + 1,
            )
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            idx = bisect_right(line_starts, pos) - 1
            word = m.group()
            if kind == "word":
                kind = "keyword" if word in KEYWORDS else "ident"
            elif kind == "int":
                kind = "integer"
            else:
                kind = "symbol"
            tokens.append(Token(kind, word, idx + 1, pos - line_starts[idx] + 1))
        pos = m.end()
    return tokens


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, tokens: list[Token], text: str) -> None:
        self.tokens = tokens
        self.pos = 0
        if tokens:
            last = tokens[-1]
            self.eof_line, self.eof_col = last.line, last.end_column
        else:
            self.eof_line, self.eof_col = 1, 1

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error(self, message: str, expected: frozenset[str] = frozenset()):
        tok = self.peek()
        if tok is None:
            raise ParseError(
                message + " (at end of input)", self.eof_line, self.eof_col, expected
            )
        raise ParseError(message, tok.line, tok.column, expected)

    def take(self) -> Token:
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok is None or tok.text != text:
            self.error(f"expected {text!r}", frozenset({text}))
        return self.take()

    def expect_int(self) -> tuple[int, Token]:
        tok = self.peek()
        if tok is None or tok.kind != "integer":
            self.error("expected an integer", frozenset({"INT"}))
        self.take()
        return int(tok.text), tok

    # -- names -------------------------------------------------------------

    def parse_name(self) -> str:
        tok = self.peek()
        if tok is None or tok.kind not in ("ident", "keyword"):
            self.error("expected an identity name", frozenset({"NAME"}))
        self.take()
        name = tok.text
        end = tok.end_column
        line = tok.line
        # hyphenated names like m18-1 arrive as word/-/int runs; join them
        # only when the pieces are adjacent in the source
        while True:
            dash = self.peek()
            if (
                dash is None
                or dash.text != "-"
                or dash.line != line
                or dash.column != end
            ):
                break
            nxt = (
                self.tokens[self.pos + 1]
                if self.pos + 1 < len(self.tokens)
                else None
            )
            if (
                nxt is None
                or nxt.kind not in ("ident", "keyword", "integer")
                or nxt.line != line
                or nxt.column != dash.end_column
            ):
                break
            self.take()
            self.take()
            name += "-" + nxt.text
            end = nxt.end_column
        return name

    # -- polynomials ---------------------------------------------------------

    def parse_poly(self, max_degree: int) -> tuple[int, int, int]:
        c2 = c1 = c0 = 0
        sign = 1
        tok = self.peek()
        if tok is not None and tok.text == "-":
            self.take()
            sign = -1
        while True:
            d, coef = self._parse_poly_term(max_degree)
            if d == 2:
                c2 += sign * coef
            elif d == 1:
                c1 += sign * coef
            else:
                c0 += sign * coef
            tok = self.peek()
            if tok is not None and tok.text in ("+", "-"):
                sign = 1 if tok.text == "+" else -1
                self.take()
                continue
            return c2, c1, c0

    def _parse_poly_term(self, max_degree: int) -> tuple[int, int]:
        tok = self.peek()
        if tok is None:
            self.error("expected a polynomial term", frozenset({"INT", "j"}))
        if tok.kind == "integer":
            self.take()
            coef = int(tok.text)
            nxt = self.peek()
            if nxt is not None and nxt.text == "*":
                self.take()
                deg = self._parse_jpow(max_degree)
                return deg, coef
            return 0, coef
        if tok.text == "j":
            deg = self._parse_jpow(max_degree)
            return deg, 1
        self.error("expected a polynomial term", frozenset({"INT", "j"}))

    def _parse_jpow(self, max_degree: int) -> int:
        self.expect("j")
        tok = self.peek()
        if tok is not None and tok.text == "^":
            self.take()
            value, vtok = self.expect_int()
            if value < 1 or value > max_degree:
                raise ParseError(
                    f"exponent of j must be between 1 and {max_degree}",
                    vtok.line,
                    vtok.column,
                )
            return value
        return 1

    def parse_lin(self, clause: str) -> tuple[LinExpr, Token]:
        tok = self.peek()
        if tok is None:
            self.error("expected a linear expression", frozenset({"INT", "j"}))
        c2, c1, c0 = self.parse_poly(1)
        if c2 != 0:  # pragma: no cover - degree capped by parse_poly
            raise IdlValidationError("degree exceeds 1", tok.line, tok.column, clause)
        return LinExpr(c1, c0), tok

    # -- q-monomials ------------------------------------------------------------

    def parse_qmono(self, clause: str, allow_j: bool) -> tuple[int, LinExpr, Token]:
        tok = self.peek()
        if tok is None:
            self.error("expected a q-monomial", frozenset({"q", "-", "INT"}))
        start = tok
        sign = 1
        if tok.text == "-":
            self.take()
            sign = -1
            tok = self.peek()
            if tok is None:
                self.error("expected a q-monomial", frozenset({"q", "INT"}))
        if tok.kind == "integer":
            value, vtok = self.expect_int()
            if value != 1:
                raise IdlValidationError(
                    "the only constant argument is 1 (meaning q^0)",
                    vtok.line,
                    vtok.column,
                    clause,
                )
            return sign, LinExpr(0, 0), start
        self.expect("q")
        self.expect("^")
        expr, etok = self.parse_lin(clause)
        if not allow_j and expr.c1 != 0:
            raise IdlValidationError(
                "j is not allowed in this position", etok.line, etok.column, clause
            )
        return sign, expr, start

    def _step_value(self, clause: str) -> int:
        sign, expr, tok = self.parse_qmono(clause, allow_j=False)
        if sign != 1 or expr.c1 != 0 or expr.c0 < 1:
            raise IdlValidationError(
                "the step must be a positive power q^t",
                tok.line,
                tok.column,
                clause,
            )
        return expr.c0

    # -- sum sides ---------------------------------------------------------------

    def parse_sum(self) -> SumSideSpec:
        sum_tok = self.expect("sum")
        self.expect("(")
        self.expect("j")
        self.expect(">=")
        start, _ = self.expect_int()
        self.expect(")")
        lead2 = lead1 = lead0 = 0
        const = Fraction(1)
        factors: list[PochFactorSpec] = []
        lead_tok: Token | None = None
        denominator = False
        while True:
            tok = self.peek()
            if tok is None:
                self.error(
                    "expected a sum-side factor", frozenset({"q", "poch", "INT"})
                )
            if tok.text == "q":
                if lead_tok is None:
                    lead_tok = tok
                self.take()
                self.expect("^")
                self.expect("(")
                c2, c1, c0 = self.parse_poly(2)
                self.expect(")")
                s = -1 if denominator else 1
                lead2 += s * c2
                lead1 += s * c1
                lead0 += s * c0
            elif tok.text == "poch":
                factors.append(self._parse_poch_factor(denominator, start))
            elif tok.kind == "integer":
                value, vtok = self.expect_int()
                if value == 0:
                    raise IdlValidationError(
                        "zero constant factor", vtok.line, vtok.column, "sum side"
                    )
                const = const / value if denominator else const * value
            else:
                self.error(
                    "expected a sum-side factor", frozenset({"q", "poch", "INT"})
                )
            nxt = self.peek()
            if nxt is not None and nxt.text in ("*", "/"):
                denominator = nxt.text == "/"
                self.take()
                continue
            break
        lead = QuadExpr(lead2, lead1, lead0)
        pos_tok = lead_tok or sum_tok
        if not lead.grows():
            raise IdlValidationError(
                "leading exponent must grow without bound "
                "(positive j^2 coefficient, or zero with positive j coefficient)",
                pos_tok.line,
                pos_tok.column,
                "leading exponent",
            )
        if lead.min_from(start) < 0:
            raise IdlValidationError(
                "leading exponent is negative for some j in range",
                pos_tok.line,
                pos_tok.column,
                "leading exponent",
            )
        return SumSideSpec(start, lead, tuple(factors), const=const)

    def _parse_poch_factor(self, denominator: bool, j0: int) -> PochFactorSpec:
        poch_tok = self.expect("poch")
        clause = "poch factor"
        self.expect("(")
        sign, base, base_tok = self.parse_qmono(clause, allow_j=True)
        self.expect(";")
        step = self._step_value(clause)
        self.expect(";")
        length, len_tok = self.parse_lin(clause)
        self.expect(")")
        if base.c1 < 0 or base.at(j0) < 0:
            raise IdlValidationError(
                "base exponent must stay non-negative",
                base_tok.line,
                base_tok.column,
                clause,
            )
        if length.c1 < 0 or length.at(j0) < 0:
            raise IdlValidationError(
                "length must stay non-negative",
                len_tok.line,
                len_tok.column,
                clause,
            )
        if denominator and sign == 1:
            hits_zero = (base.c1 == 0 and base.c0 == 0 and
                         (length.c1 != 0 or length.c0 != 0))
            hits_zero = hits_zero or (
                base.at(j0) == 0 and length.at(j0) >= 1
            )
            if hits_zero:
                raise IdlValidationError(
                    "denominator factor contains (1 - q^0)",
                    poch_tok.line,
                    poch_tok.column,
                    clause,
                )
        return PochFactorSpec(sign, base, step, length, denominator)

    # -- product sides --------------------------------------------------------------

    def parse_prod(self) -> ProductSideSpec:
        atoms: list = []
        denominator = False
        while True:
            tok = self.peek()
            if tok is None:
                self.error(
                    "expected a product atom",
                    frozenset({"pochinf", "Q", "resprod", "q", "INT"}),
                )
            if tok.text == "pochinf":
                atoms.append(self._parse_pochinf_atom(denominator))
            elif tok.text == "Q":
                atoms.append(self._parse_quintuple_atom(denominator))
            elif tok.text == "resprod":
                atoms.append(self._parse_resprod_atom(denominator))
            elif tok.text == "q":
                if denominator:
                    raise IdlValidationError(
                        "cannot divide by a q-power (negative exponents are "
                        "not representable)",
                        tok.line,
                        tok.column,
                        "product side",
                    )
                self.take()
                self.expect("^")
                value, _ = self.expect_int()
                atoms.append(MonomialAtom(value))
            elif tok.kind == "integer":
                value, vtok = self.expect_int()
                if value == 0:
                    raise IdlValidationError(
                        "zero constant atom", vtok.line, vtok.column, "product side"
                    )
                atoms.append(ConstAtom(value, denominator))
            else:
                self.error(
                    "expected a product atom",
                    frozenset({"pochinf", "Q", "resprod", "q", "INT"}),
                )
            nxt = self.peek()
            if nxt is not None and nxt.text in ("*", "/"):
                denominator = nxt.text == "/"
                self.take()
                continue
            break
        return ProductSideSpec(tuple(atoms))

    def _parse_pochinf_atom(self, denominator: bool) -> PochInfAtom:
        clause = "pochinf atom"
        self.expect("pochinf")
        self.expect("(")
        sign, base, base_tok = self.parse_qmono(clause, allow_j=False)
        self.expect(";")
        step = self._step_value(clause)
        self.expect(")")
        if base.c0 == 0 and sign == 1:
            raise IdlValidationError(
                "the infinite product over (1 - q^0) vanishes",
                base_tok.line,
                base_tok.column,
                clause,
            )
        return PochInfAtom(sign, base.c0, step, denominator)

    def _parse_quintuple_atom(self, denominator: bool) -> QuintupleAtom:
        clause = "quintuple atom"
        q_tok = self.expect("Q")
        self.expect("(")
        w_sign, w_expr, w_tok = self.parse_qmono(clause, allow_j=False)
        self.expect(",")
        x_sign, x_expr, x_tok = self.parse_qmono(clause, allow_j=False)
        self.expect(")")
        if w_sign != 1 or w_expr.c0 < 1:
            raise IdlValidationError(
                "first argument must be a positive power q^w",
                w_tok.line,
                w_tok.column,
                clause,
            )
        if x_sign != 1 or x_expr.c0 < 1:
            raise IdlValidationError(
                "second argument must be a positive power q^x",
                x_tok.line,
                x_tok.column,
                clause,
            )
        if w_expr.c0 - 2 * x_expr.c0 <= 0:
            raise IdlValidationError(
                "need w > 2x so that every factor exponent is positive",
                q_tok.line,
                q_tok.column,
                clause,
            )
        return QuintupleAtom(w_expr.c0, x_expr.c0, denominator)

    def _parse_resprod_atom(self, denominator: bool) -> ResidueAtom:
        clause = "resprod atom"
        self.expect("resprod")
        self.expect("(")
        modulus, mtok = self.expect_int()
        if modulus < 1:
            raise IdlValidationError(
                "modulus must be positive", mtok.line, mtok.column, clause
            )
        self.expect(";")
        residues = []
        while True:
            value, vtok = self.expect_int()
            if not 1 <= value <= modulus:
                raise IdlValidationError(
                    f"residue {value} outside 1..{modulus}",
                    vtok.line,
                    vtok.column,
                    clause,
                )
            residues.append(value)
            nxt = self.peek()
            if nxt is not None and nxt.text == ",":
                self.take()
                continue
            break
        self.expect(")")
        return ResidueAtom(modulus, frozenset(residues), denominator)

    # -- top level ---------------------------------------------------------------

    def parse_file(self) -> list[IdentitySpec]:
        specs = []
        while not self.at_end():
            self.expect("identity")
            name = self.parse_name()
            self.expect(":")
            lhs = self.parse_sum()
            self.expect("==")
            rhs = self.parse_prod()
            specs.append(IdentitySpec(name, lhs, rhs))
        return specs


def parse_idl(text: str) -> list[IdentitySpec]:
    """Parse an IDL document into identity specs (empty input is the empty
    list).  Raises ParseError or IdlValidationError with positions."""
    return _Parser(tokenize(text), text).parse_file()


def parse_prod_expr(text: str) -> ProductSideSpec:
    """Parse a standalone product expression (the ``prod`` nonterminal),
    e.g. ``1 / pochinf(q^1; q^1)``."""
    parser = _Parser(tokenize(text), text)
    spec = parser.parse_prod()
    if not parser.at_end():
        parser.error("trailing input after product expression")
    return spec


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------


def _poly_str(c2: int, c1: int, c0: int) -> str:
    parts: list[str] = []
    for coef, var in ((c2, "j^2"), (c1, "j"), (c0, "")):
        if coef == 0:
            continue
        mag = abs(coef)
        if not var:
            body = str(mag)
        elif mag == 1:
            body = var
        else:
            body = f"{mag}*{var}"
        if not parts:
            parts.append(body if coef > 0 else "-" + body)
        else:
            parts.append(("+" if coef > 0 else "-") + body)
    return "".join(parts) if parts else "0"


def _lin_str(expr: LinExpr) -> str:
    return _poly_str(0, expr.c1, expr.c0)


def _qmono_str(sign: int, expr: LinExpr) -> str:
    prefix = "-" if sign == -1 else ""
    if expr.c1 == 0 and expr.c0 == 0:
        return prefix + "1"
    return f"{prefix}q^{_lin_str(expr)}"


def _factor_str(f: PochFactorSpec) -> str:
    return (
        f"poch({_qmono_str(f.sign, f.base)}; q^{f.step}; {_lin_str(f.length)})"
    )


def _atom_str(atom) -> tuple[str, bool]:
    if isinstance(atom, PochInfAtom):
        return (
            f"pochinf({_qmono_str(atom.sign, LinExpr(0, atom.base))}; q^{atom.step})",
            atom.denominator,
        )
    if isinstance(atom, QuintupleAtom):
        return f"Q(q^{atom.w_exp}, q^{atom.x_exp})", atom.denominator
    if isinstance(atom, ResidueAtom):
        rs = ",".join(str(r) for r in sorted(atom.residues))
        return f"resprod({atom.modulus}; {rs})", atom.denominator
    if isinstance(atom, MonomialAtom):
        return f"q^{atom.exponent}", False
    if isinstance(atom, ConstAtom):
        return str(atom.value), atom.denominator
    raise TypeError(f"unknown atom {atom!r}")


def print_idl(specs: list[IdentitySpec]) -> str:
    """Render specs in the canonical layout; empty list prints as the
    empty document."""
    blocks = []
    for spec in specs:
        lhs = spec.lhs
        pieces = [f"q^({_poly_str(lhs.lead.c2, lhs.lead.c1, lhs.lead.c0)})"]
        if lhs.const.numerator != 1:
            pieces.append(f"* {lhs.const.numerator}")
        if lhs.const.denominator != 1:
            pieces.append(f"/ {lhs.const.denominator}")
        for f in lhs.factors:
            pieces.append(("/ " if f.denominator else "* ") + _factor_str(f))
        sum_text = " ".join(pieces)
        atom_pieces = []
        for i, atom in enumerate(spec.rhs.atoms):
            text, denom = _atom_str(atom)
            if i == 0 and denom:
                atom_pieces.append("1 / " + text)
            elif i == 0:
                atom_pieces.append(text)
            else:
                atom_pieces.append(("/ " if denom else "* ") + text)
        prod_text = " ".join(atom_pieces)
        blocks.append(
            f"identity {spec.name} :\n"
            f"  sum(j>={lhs.start}) {sum_text}\n"
            f"  == {prod_text}\n"
        )
    return "\n".join(blocks)
