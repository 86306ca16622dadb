"""Text formats: Lie expressions and presentation files.

Expression grammar::

    expr   := [sign] term (('+' | '-') term)*
    term   := [scalar '*'] atom
    atom   := letter | '[' expr ',' expr ']' | 'l(' letter (',' letter)+ ')'
    scalar := int ['/' int]

A lone ``0`` is also accepted as a term; it is how the zero element prints.

Presentation files are line based: ``field Q`` or ``field GF(p)``,
``alphabet x > z > y`` and one ``rel <expr>`` per relation; ``#`` starts a
comment.
"""

from __future__ import annotations

from .errors import DomainError, InputError, ParseError
from .gsb import Presentation
from .liealg import QQ, Field, LiePoly
from .words import Alphabet, Tree, left_normed_tree


class _ExprParser:
    def __init__(self, text: str, alphabet: Alphabet, field: Field, line: int | None = None, col0: int = 0):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet
        self.field = field
        self.line = line
        self.col0 = col0
        self._names = sorted(alphabet.names(), key=len, reverse=True)

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        col = (self.pos if pos is None else pos) + 1 + self.col0
        return ParseError(msg, line=self.line, column=col)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def parse(self) -> LiePoly:
        value = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return value

    def expr(self) -> LiePoly:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        total = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self) -> LiePoly:
        if self.peek().isdigit():
            start = self.pos
            coeff = self.scalar()
            if self.peek() != "*" and self.text[start:self.pos].strip() == "0":
                return LiePoly.zero(self.alphabet, self.field)  # how the zero element prints
            self.expect("*")
            return self.atom().scale(coeff)
        return self.atom()

    def scalar(self):
        start = self.pos
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            den = self.integer()
            if den == 0:
                raise self.error("division by zero", start)
            try:
                return self.field.div(num, den)
            except (InputError, DomainError):
                raise self.error(f"{den} is not invertible in {self.field.name}", start) from None
        return self.field(num)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def atom(self) -> LiePoly:
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return a.bracket(b)
        if self.text.startswith("l", self.pos) and self.text[self.pos + 1:].lstrip().startswith("("):
            start = self.pos
            self.pos += 1
            self.expect("(")
            leaves = [self.letter()]
            while self.peek() == ",":
                self.pos += 1
                leaves.append(self.letter())
            self.expect(")")
            if len(leaves) < 2:
                raise self.error("l(...) needs at least two letters", start)
            return LiePoly.from_tree(left_normed_tree(leaves), self.alphabet, self.field)
        return LiePoly.from_tree(self.letter(), self.alphabet, self.field)

    def letter(self) -> Tree:
        self.skip()
        for name in self._names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return Tree(self.alphabet.code(name))
        if self.pos >= len(self.text):
            raise self.error("unexpected end of input")
        raise self.error(f"unknown letter at {self.text[self.pos:self.pos + 8]!r}")


def parse_expr(text: str, alphabet: Alphabet, field: Field = QQ, line: int | None = None, col0: int = 0) -> LiePoly:
    """Parse a Lie expression; errors carry line and column."""
    return _ExprParser(text, alphabet, field, line, col0).parse()


def format_expr(p: LiePoly) -> str:
    """Inverse of :func:`parse_expr` up to equality of elements."""
    return p.format()


def parse_presentation(text: str) -> Presentation:
    field = QQ
    alphabet = None
    relations, labels = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        key, _, rest = stripped.partition(" ")
        col0 = len(line) - len(line.lstrip()) + len(key) + 1 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if key == "field":
            if relations:
                raise ParseError("field must come before the relations", line=lineno, column=1)
            try:
                field = Field.parse(rest)
            except InputError as e:
                raise ParseError(str(e), line=lineno, column=col0 + 1) from None
        elif key == "alphabet":
            if alphabet is not None:
                raise ParseError("alphabet given twice", line=lineno, column=1)
            try:
                alphabet = Alphabet.parse(rest)
            except InputError as e:
                raise ParseError(str(e), line=lineno, column=col0 + 1) from None
        elif key == "rel":
            if alphabet is None:
                raise ParseError("rel before alphabet", line=lineno, column=1)
            p = parse_expr(rest, alphabet, field, line=lineno, col0=col0)
            if not p:
                raise ParseError("relation is zero", line=lineno, column=col0 + 1)
            relations.append(p)
            labels.append(rest)
        else:
            raise ParseError(f"unknown directive {key!r}", line=lineno, column=1)
    if alphabet is None:
        raise ParseError("missing alphabet line", line=None, column=None)
    try:
        return Presentation(alphabet, field, relations, labels)
    except DomainError as e:
        raise ParseError(str(e)) from None


def format_presentation(pres: Presentation) -> str:
    lines = [f"field {pres.field.name}", f"alphabet {' > '.join(pres.alphabet.letters)}"]
    lines += [f"rel {r.format()}" for r in pres.relations]
    return "\n".join(lines) + "\n"
