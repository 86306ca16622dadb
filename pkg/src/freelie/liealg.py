"""Exact polynomials: the free associative algebra and Lie elements in the LS basis.

A :class:`LiePoly` stores its coordinates in the basis of Lyndon-Shirshov
trees.  Since an LS tree is determined by its associative word, the keys are
ALS code words; the tree itself is ``canonical_bracket(word)``.  The leading
word of a Lie element is the deg-lex greatest key, because the expansion of
``[w]`` has leading word ``w`` with coefficient 1.

Coefficients live in Q (``int``/``Fraction``) or GF(p) (``int`` residues).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from heapq import heapify, heappop, heappush
from typing import Iterable, Mapping

from .errors import DomainError, InputError, InvariantViolation, NotLieElementError
from .words import Alphabet, Tree, canonical_bracket, is_als, lead_key


class Field:
    """Q (``p == 0``) or the prime field GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p and (p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1))):
            raise InputError(f"GF({p}): {p} is not prime")
        self.p = p

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text in ("Q", "QQ"):
            return QQ
        if text.startswith("GF(") and text.endswith(")"):
            digits = text[3:-1].strip()
            if digits.isdigit():
                return cls(int(digits))
        raise InputError(f"unknown field {text!r}; expected Q or GF(p)")

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.p else "Q"

    @property
    def generators(self) -> tuple:
        """Generators of the field over its prime subfield."""
        return (1,)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return f"Field({self.name})"

    def __reduce__(self):
        return (Field, (self.p,))

    def __call__(self, value) -> int | Fraction:
        """Coerce an int, Fraction or ``"a/b"`` string into the field."""
        if isinstance(value, str):
            return self.parse_scalar(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise InputError(f"cannot use {value!r} as a coefficient")
        if self.p:
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise DomainError(f"{value} has no image in {self.name}")
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            return value % self.p
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        return value

    def norm(self, c):
        return c % self.p if self.p else c

    def inv(self, c):
        if not self.norm(c):
            raise DomainError("division by zero")
        if self.p:
            return pow(c, -1, self.p)
        return Fraction(1, 1) / c if isinstance(c, Fraction) else Fraction(1, c)

    def div(self, a, b):
        return self((a * self.inv(b)) if self.p else Fraction(a) / b)

    def parse_scalar(self, text: str):
        text = text.strip()
        if text.endswith(f"mod {self.p}") and self.p:
            text = text[: -len(f"mod {self.p}")].strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                if int(den) == 0:
                    raise DomainError("zero denominator")
                return self(Fraction(int(num), int(den)))
            return self(int(text))
        except ValueError:
            raise InputError(f"malformed scalar {text!r}") from None

    def format(self, c) -> str:
        """``"a/b"`` for rationals, ``"r mod p"`` for residues."""
        if self.p:
            return f"{c % self.p} mod {self.p}"
        return str(Fraction(c))

    def format_coeff(self, c) -> str:
        return str(c % self.p) if self.p else str(Fraction(c))


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# -- expansion ----------------------------------------------------------------


def commutator_terms(a: Mapping[str, object], b: Mapping[str, object], p: int = 0) -> dict:
    """Terms of ``a*b - b*a`` for associative polynomials given as dicts."""
    out: dict = {}
    get = out.get
    for u, cu in a.items():
        for v, cv in b.items():
            c = cu * cv
            k = u + v
            out[k] = get(k, 0) + c
            k = v + u
            out[k] = get(k, 0) - c
    if p:
        return {k: c % p for k, c in out.items() if c % p}
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=1 << 15)
def expand_tree(t: Tree) -> dict[str, int]:
    """Integer expansion of a bracket tree; shared cache, never mutate the result."""
    if t.is_leaf:
        return {t.word: 1}
    return commutator_terms(expand_tree(t.left), expand_tree(t.right))


def expand_lie_terms(terms: Mapping[str, object], p: int = 0) -> dict:
    """Expansion of ``sum c_w [w]`` given LS coordinates."""
    out: dict = {}
    get = out.get
    for w, c in terms.items():
        for v, d in expand_tree(canonical_bracket(w)).items():
            out[v] = get(v, 0) + c * d
    if p:
        return {k: c % p for k, c in out.items() if c % p}
    return {k: c for k, c in out.items() if c}


def ls_coordinates(assoc: Mapping[str, object], p: int = 0) -> dict:
    """Triangular elimination of an associative polynomial into LS coordinates."""
    residual = {w: c for w, c in assoc.items() if c}
    heap = [lead_key(w) for w in residual]
    heapify(heap)
    out = {}
    while heap:
        _, w = heappop(heap)
        c = residual.pop(w, 0)
        if not c:
            continue
        if not is_als(w):
            raise NotLieElementError("not a Lie element: leading word is not Lyndon-Shirshov")
        out[w] = c
        expansion = expand_tree(canonical_bracket(w))
        if expansion.get(w) != 1:
            raise InvariantViolation("leading coefficient of an LS tree expansion is not 1")
        for v, d in expansion.items():
            if v == w:
                continue
            old = residual.get(v)
            new = (old or 0) - c * d
            if p:
                new %= p
            if new:
                if old is None:
                    heappush(heap, lead_key(v))
                residual[v] = new
            elif old is not None:
                del residual[v]
    return out


# -- polynomial classes -------------------------------------------------------


def _clean(terms: Mapping[str, object], field: Field) -> dict:
    if field.p:
        return {w: c % field.p for w, c in terms.items() if c % field.p}
    return {w: c for w, c in terms.items() if c}


def _check_compatible(a, b):
    if a.alphabet != b.alphabet or a.field != b.field:
        raise InputError("operands live over different alphabets or fields")


def _format_terms(items, field: Field, show) -> str:
    if not items:
        return "0"
    parts = []
    for i, (key, c) in enumerate(items):
        if field.p:
            mag = c % field.p
            sign = "+"
        else:
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
        body = show(key)
        coeff = field.format_coeff(mag)
        term = body if coeff == "1" else f"{coeff}*{body}"
        if i == 0:
            parts.append(term if sign == "+" else f"-{term}")
        else:
            parts.append(f" {sign} {term}")
    return "".join(parts)


class AssocPoly:
    """Element of the free associative algebra: word -> coefficient."""

    __slots__ = ("terms", "alphabet", "field")

    def __init__(self, terms: Mapping[str, object], alphabet: Alphabet, field: Field = QQ):
        self.terms = _clean(terms, field)
        self.alphabet = alphabet
        self.field = field

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AssocPoly)
            and self.alphabet == other.alphabet
            and self.field == other.field
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"AssocPoly({self.format()})"

    def items(self) -> list[tuple[str, object]]:
        """Terms in deg-lex descending order."""
        return sorted(self.terms.items(), key=lambda kv: lead_key(kv[0]))

    def leading(self) -> tuple[str, object]:
        return leading_word(self)

    def __add__(self, other: "AssocPoly") -> "AssocPoly":
        _check_compatible(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return AssocPoly(out, self.alphabet, self.field)

    def __neg__(self) -> "AssocPoly":
        return AssocPoly({w: -c for w, c in self.terms.items()}, self.alphabet, self.field)

    def __sub__(self, other: "AssocPoly") -> "AssocPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AssocPoly):
            _check_compatible(self, other)
            out: dict = {}
            for u, cu in self.terms.items():
                for v, cv in other.terms.items():
                    out[u + v] = out.get(u + v, 0) + cu * cv
            return AssocPoly(out, self.alphabet, self.field)
        c = self.field(other)
        return AssocPoly({w: c * d for w, d in self.terms.items()}, self.alphabet, self.field)

    __rmul__ = __mul__

    def format(self) -> str:
        return _format_terms(self.items(), self.field, self.alphabet.spell)


def expand(t: Tree, alphabet: Alphabet, field: Field = QQ) -> AssocPoly:
    """Expansion of a bracket tree under ``[a, b] = ab - ba``."""
    return AssocPoly(expand_tree(t), alphabet, field)


def leading_word(p: AssocPoly) -> tuple[str, object]:
    """Deg-lex maximal word of ``p`` with its coefficient."""
    if not p.terms:
        raise DomainError("the zero polynomial has no leading word")
    w = min(p.terms, key=lead_key)
    return w, p.terms[w]


def to_ls_basis(p: AssocPoly) -> "LiePoly":
    """Rewrite the expansion of a Lie element in the Lyndon-Shirshov basis."""
    return LiePoly(ls_coordinates(p.terms, p.field.p), p.alphabet, p.field)


class LiePoly:
    """Lie element as a linear combination of Lyndon-Shirshov trees."""

    __slots__ = ("terms", "alphabet", "field", "_expansion", "_lead")

    def __init__(self, terms: Mapping[str, object], alphabet: Alphabet, field: Field = QQ):
        self.terms = _clean(terms, field)
        self.alphabet = alphabet
        self.field = field
        self._expansion = None
        self._lead = None

    # constructors

    @classmethod
    def zero(cls, alphabet: Alphabet, field: Field = QQ) -> "LiePoly":
        return cls({}, alphabet, field)

    @classmethod
    def letter(cls, name: str, alphabet: Alphabet, field: Field = QQ) -> "LiePoly":
        return cls({alphabet.code(name): 1}, alphabet, field)

    @classmethod
    def from_tree(cls, t: Tree, alphabet: Alphabet, field: Field = QQ) -> "LiePoly":
        return cls(ls_coordinates(expand_tree(t), field.p), alphabet, field)

    @classmethod
    def from_trees(cls, items: Iterable[tuple[Tree, object]], alphabet: Alphabet, field: Field = QQ):
        out: dict = {}
        for t, c in items:
            c = field(c)
            for w, d in expand_tree(t).items():
                out[w] = out.get(w, 0) + c * d
        return cls(ls_coordinates(_clean(out, field), field.p), alphabet, field)

    @classmethod
    def basis_element(cls, word: str, alphabet: Alphabet, field: Field = QQ) -> "LiePoly":
        if not is_als(word):
            raise DomainError("basis elements are indexed by ALS words")
        return cls({word: 1}, alphabet, field)

    # inspection

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LiePoly)
            and self.alphabet == other.alphabet
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"LiePoly({self.format()})"

    def __reduce__(self):
        return (LiePoly, (self.terms, self.alphabet, self.field))

    def leading(self) -> tuple[str, object]:
        if self._lead is None:
            if not self.terms:
                raise DomainError("the zero polynomial has no leading word")
            w = min(self.terms, key=lead_key)
            self._lead = (w, self.terms[w])
        return self._lead

    @property
    def leading_word(self) -> str:
        return self.leading()[0]

    @property
    def leading_coeff(self):
        return self.leading()[1]

    def is_monic(self) -> bool:
        return bool(self.terms) and self.leading_coeff == 1

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, n: int) -> "LiePoly":
        return LiePoly({w: c for w, c in self.terms.items() if len(w) == n}, self.alphabet, self.field)

    def items(self) -> list[tuple[str, object]]:
        return sorted(self.terms.items(), key=lambda kv: lead_key(kv[0]))

    def trees(self) -> list[tuple[Tree, object]]:
        """``(LS tree, coefficient)`` pairs in deg-lex descending order of the words."""
        return [(canonical_bracket(w), c) for w, c in self.items()]

    def expansion_terms(self) -> dict:
        if self._expansion is None:
            self._expansion = expand_lie_terms(self.terms, self.field.p)
        return self._expansion

    def expand(self) -> AssocPoly:
        return AssocPoly(self.expansion_terms(), self.alphabet, self.field)

    def letters_used(self) -> set[str]:
        return {c for w in self.terms for c in w}

    # arithmetic

    def __add__(self, other: "LiePoly") -> "LiePoly":
        _check_compatible(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return LiePoly(out, self.alphabet, self.field)

    def __neg__(self) -> "LiePoly":
        return LiePoly({w: -c for w, c in self.terms.items()}, self.alphabet, self.field)

    def __sub__(self, other: "LiePoly") -> "LiePoly":
        return self + (-other)

    def scale(self, c) -> "LiePoly":
        c = self.field(c)
        return LiePoly({w: c * d for w, d in self.terms.items()}, self.alphabet, self.field)

    def __mul__(self, c) -> "LiePoly":
        return self.scale(c)

    __rmul__ = __mul__

    def monic(self) -> "LiePoly":
        """Divide by the leading coefficient."""
        if not self.terms:
            raise DomainError("cannot make the zero polynomial monic")
        lc = self.leading_coeff
        if lc == 1:
            return self
        inv = self.field.inv(lc)
        return LiePoly({w: self.field(c * inv) for w, c in self.terms.items()}, self.alphabet, self.field)

    def bracket(self, other: "LiePoly") -> "LiePoly":
        _check_compatible(self, other)
        if not self.terms or not other.terms:
            return LiePoly.zero(self.alphabet, self.field)
        p = self.field.p
        e = commutator_terms(self.expansion_terms(), other.expansion_terms(), p)
        return LiePoly(ls_coordinates(e, p), self.alphabet, self.field)

    def format(self) -> str:
        a = self.alphabet
        return _format_terms(self.items(), self.field, lambda w: canonical_bracket(w).format(a))


def add(p: LiePoly, q: LiePoly) -> LiePoly:
    return p + q


def scale(c, p: LiePoly) -> LiePoly:
    return p.scale(c)


def monic(p: LiePoly) -> LiePoly:
    return p.monic()


def bracket(p: LiePoly, q: LiePoly) -> LiePoly:
    return p.bracket(q)
