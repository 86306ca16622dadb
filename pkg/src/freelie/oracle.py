"""Brute-force linear algebra over the truncated free Lie algebra.

Everything here is deliberately independent of the LS-basis machinery: Lie
elements are handled through their associative expansions, ideals are built
by repeatedly commuting with the generators, and ranks come from exact
Gaussian elimination.  For elimination a Lie element is projected onto its
coefficients at Lyndon-Shirshov words; this projection is injective on Lie
elements (the top LS word of a nonzero element always survives), so ranks and
memberships are unchanged while vectors get much shorter.

Only homogeneous relations are accepted: truncation and ideal generation
commute only in the graded case.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .errors import DomainError, InputError
from .liealg import Field, LiePoly
from .words import CODE_BASE, Alphabet, Tree, canonical_bracket, lead_key


def mobius(n: int) -> int:
    result, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    return -result if m > 1 else result


def witt_dimension(k: int, n: int) -> int:
    """Dimension of the degree-``n`` part of the free Lie algebra on ``k`` letters."""
    if k < 1 or n < 1:
        raise InputError("witt_dimension needs k >= 1 and n >= 1")
    total = sum(mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def _rotation_maximal(w: str) -> bool:
    # strictly greater than every rotation; codes order letters in reverse
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def _words(alphabet: Alphabet, n: int) -> Iterable[str]:
    codes = [chr(CODE_BASE + i) for i in range(len(alphabet))]
    for letters in product(codes, repeat=n):
        yield "".join(letters)


def graded_basis(alphabet: Alphabet, n: int) -> list[Tree]:
    """All LS trees of degree exactly ``n``, found by exhaustive search."""
    return [canonical_bracket(w) for w in _words(alphabet, n) if _rotation_maximal(w)]


# -- exact elimination --------------------------------------------------------


class Echelon:
    """Reduced row echelon form of sparse vectors (dicts) over a field."""

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        p = self.field.p
        v = {k: c for k, c in vec.items() if c}
        for k in [k for k in v if k in self.rows]:
            c = v.get(k)
            if not c:
                continue
            for kk, d in self.rows[k].items():
                new = v.get(kk, 0) - c * d
                if p:
                    new %= p
                if new:
                    v[kk] = new
                else:
                    v.pop(kk, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; True if it was independent of the current rows."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v, key=lead_key)
        inv = self.field.inv(v[pivot])
        p = self.field.p
        row = {k: (c * inv % p if p else c * inv) for k, c in v.items()}
        for other in self.rows.values():
            c = other.get(pivot)
            if c:
                for kk, d in row.items():
                    new = other.get(kk, 0) - c * d
                    if p:
                        new %= p
                    if new:
                        other[kk] = new
                    else:
                        other.pop(kk, None)
        self.rows[pivot] = row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[dict], field: Field) -> int:
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    return ech.dim


def project(vec: dict) -> dict:
    """Coefficients of an expansion at its Lyndon-Shirshov words."""
    return {w: c for w, c in vec.items() if _rotation_maximal(w)}


def ad_letter(vec: dict, x: str, p: int = 0) -> dict:
    """Expansion of ``[v, x]`` for a generator code ``x``."""
    out: dict = {}
    for w, c in vec.items():
        out[w + x] = out.get(w + x, 0) + c
        out[x + w] = out.get(x + w, 0) - c
    if p:
        return {k: c % p for k, c in out.items() if c % p}
    return {k: c for k, c in out.items() if c}


def commutator(a: dict, b: dict, p: int = 0) -> dict:
    out: dict = {}
    for u, cu in a.items():
        for v, cv in b.items():
            out[u + v] = out.get(u + v, 0) + cu * cv
            out[v + u] = out.get(v + u, 0) - cu * cv
    if p:
        return {k: c % p for k, c in out.items() if c % p}
    return {k: c for k, c in out.items() if c}


def free_lie_dimension(alphabet: Alphabet, n: int, field: Field | None = None) -> int:
    """Rank of all left-normed brackets of ``n`` letters (no Lyndon theory used)."""
    field = field or Field(0)
    ech = Echelon(field)
    for w in _words(alphabet, n):
        vec = {w[0]: 1}
        for x in w[1:]:
            vec = ad_letter(vec, x, field.p)
        if vec:
            ech.add(vec)
    return ech.dim


# -- ideals -------------------------------------------------------------------


class IdealSpan:
    """Homogeneous components of an ideal, degree by degree up to ``max_deg``.

    ``components[n]`` is an :class:`Echelon` of projected vectors and
    ``spanning[n]`` holds full expansions of independent elements spanning
    the degree-``n`` component.
    """

    def __init__(self, alphabet: Alphabet, field: Field, max_deg: int):
        self.alphabet = alphabet
        self.field = field
        self.max_deg = max_deg
        self.components: dict[int, Echelon] = {}
        self.spanning: dict[int, list[dict]] = {}

    def dim(self, n: int) -> int:
        return self.components[n].dim if n in self.components else 0

    def dims(self) -> list[int]:
        return [self.dim(n) for n in range(1, self.max_deg + 1)]

    def contains(self, p: LiePoly) -> bool:
        """Membership, one homogeneous component at a time."""
        if p.degree > self.max_deg:
            raise InputError("element exceeds the span's degree bound")
        vec = p.expansion_terms()
        for n in p.degrees():
            part = {w: c for w, c in vec.items() if len(w) == n}
            if part and (n not in self.components or not self.components[n].contains(project(part))):
                return False
        return True


def _check_homogeneous(relations: Sequence[LiePoly]) -> None:
    for r in relations:
        if not r.is_homogeneous():
            raise DomainError("the oracle only handles homogeneous relations")


def ideal_span(relations: Sequence[LiePoly], max_deg: int, alphabet: Alphabet | None = None,
               field: Field | None = None) -> IdealSpan:
    """Ideal generated by homogeneous relations, truncated at ``max_deg``.

    Degree ``n`` is spanned by the relations of degree ``n`` and the brackets
    ``[v, x]`` of a spanning set of degree ``n-1`` with the generators; that
    suffices because the generators generate the algebra.
    """
    _check_homogeneous(relations)
    if relations:
        alphabet = alphabet or relations[0].alphabet
        field = field or relations[0].field
    if alphabet is None:
        raise InputError("an alphabet is needed when there are no relations")
    field = field or Field(0)
    span = IdealSpan(alphabet, field, max_deg)
    letters = alphabet.codes()
    p = field.p
    previous: list[dict] = []
    for n in range(1, max_deg + 1):
        ech = Echelon(field)
        full = []
        candidates = [r.expansion_terms() for r in relations if r and r.degree == n]
        candidates += [ad_letter(v, x, p) for v in previous for x in letters]
        for vec in candidates:
            if vec and ech.add(project(vec)):
                full.append(vec)
        span.components[n] = ech
        span.spanning[n] = full
        previous = full
    return span


def quotient_dims(relations: Sequence[LiePoly], max_deg: int, alphabet: Alphabet | None = None,
                  field: Field | None = None) -> list[dict]:
    """Per degree: Witt dimension, ideal dimension, quotient dimension."""
    span = ideal_span(relations, max_deg, alphabet, field)
    k = len(span.alphabet)
    rows = []
    for n in range(1, max_deg + 1):
        witt = witt_dimension(k, n)
        ideal = span.dim(n)
        rows.append({"degree": n, "witt": witt, "ideal": ideal, "quotient": witt - ideal})
    return rows


def crosscheck(relations: Sequence[LiePoly], max_deg: int, alphabet: Alphabet | None = None) -> dict:
    """Compare oracle quotient dimensions with counts of S-reduced LS words.

    The relations are completed up to ``max_deg`` first; for homogeneous
    relations compositions above ``max_deg`` cannot affect lower degrees.
    """
    from . import gsb

    _check_homogeneous(relations)
    if alphabet is None:
        if not relations:
            raise InputError("an alphabet is needed when there are no relations")
        alphabet = relations[0].alphabet
    field = relations[0].field if relations else None
    completion = gsb.complete(relations, max_deg)
    words = gsb.reduced_basis_words(completion.relations, max_deg, alphabet)
    counts = [0] * (max_deg + 1)
    for t in words:
        counts[len(t.word)] += 1
    rows = quotient_dims(relations, max_deg, alphabet, field)
    for row in rows:
        row["reduced_words"] = counts[row["degree"]]
        row["match"] = row["reduced_words"] == row["quotient"]
    return {
        "ok": all(row["match"] for row in rows),
        "rows": rows,
        "completion_status": completion.status,
        "gsb_size": len(completion.relations),
    }


def intersection_vs_product(F: Sequence[LiePoly], G: Sequence[LiePoly], max_deg: int) -> list[dict]:
    """Per degree: dims of Id(F), Id(G), their intersection and [Id(F), Id(G)].

    ``product_inside`` records that every spanning bracket of the product lies
    in both ideals.
    """
    A = ideal_span(F, max_deg)
    B = ideal_span(G, max_deg)
    p = A.field.p
    rows = []
    for n in range(1, max_deg + 1):
        both = Echelon(A.field)
        for vec in A.spanning[n] + B.spanning[n]:
            both.add(project(vec))
        inter = A.dim(n) + B.dim(n) - both.dim
        prod = Echelon(A.field)
        inside = True
        for i in range(1, n):
            for a in A.spanning.get(i, []):
                for b in B.spanning.get(n - i, []):
                    vec = project(commutator(a, b, p))
                    if vec and prod.add(vec):
                        inside = inside and A.components[n].contains(vec) and B.components[n].contains(vec)
        rows.append({
            "degree": n,
            "ideal_f": A.dim(n),
            "ideal_g": B.dim(n),
            "intersection": inter,
            "product": prod.dim,
            "product_inside": inside,
        })
    return rows
