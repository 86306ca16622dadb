"""Encoding of addition through word relations and one relation α + β - γ.

Generators ``x, y, z`` carry a recursively presented algebra through the
elements ``<x y^i z>`` (left-normed).  Adjoining ``u, α, β, γ`` lets every sum
``<x y^i z> + <x y^j z>`` be rewritten as ``<x u^s (α + β) z>``, so the only
relation that is not an equality of words is ``α + β - γ``.  The index
functions ``n_i(j)`` and ``s(i, j)`` keep all the words involved distinct.

Everything infinite is truncated at an index bound ``N``.  The relation
families of the extended presentation are generated over the pairs whose
index-function value lives in rows ``<= N`` of the table, which is the
smallest truncation closed under the composition of ``<x u^n α z> - ...``
with ``α + β - γ``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, NamedTuple

from . import gsb
from .errors import InputError, InvariantViolation
from .bracketing import substitute_terms
from .liealg import QQ, Field, LiePoly, expand_tree, ls_coordinates
from .oracle import Echelon
from .words import (
    Alphabet,
    Occurrence,
    Tree,
    als_words,
    canonical_bracket,
    is_als,
    is_ls_tree,
    left_normed_tree,
    lex_compare,
)

X = Alphabet(["x", "z", "y"])
X1 = Alphabet(["x", "z", "α", "β", "γ", "u", "y"])
Y = Alphabet(["a", "c", "b"])

NAMED_FUNCTIONS: dict[str, Callable[[int, int], int]] = {
    "add": lambda i, j: i + j,
    "add1": lambda i, j: i + j + 1,
    "max1": lambda i, j: max(i, j) + 1,
}


def table_function(path: str | Path) -> Callable[[int, int], int]:
    """Read ``i j value`` lines into a function; missing pairs raise."""
    values = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            i, j, v = (int(t) for t in line.replace(",", " ").split())
        except ValueError:
            raise InputError(f"{path}:{lineno}: expected 'i j value'") from None
        if v < 1:
            raise InputError(f"{path}:{lineno}: values must be positive")
        values[i, j] = v

    def lookup(i: int, j: int) -> int:
        try:
            return values[i, j]
        except KeyError:
            raise InputError(f"table has no value for ({i}, {j})") from None

    return lookup


@dataclass
class EncodingConfig:
    phi: Callable[[int, int], int]
    psi: Callable[[int, int], int]
    N: int
    D1: frozenset = frozenset()
    D2: frozenset = frozenset()
    deltas: tuple = (1,)
    policy: str = "minimal"
    field: Field = QQ
    phi_name: str = "custom"
    psi_name: str = "custom"

    def __post_init__(self):
        if self.N < 1:
            raise InputError("N must be at least 1")
        self.D1 = frozenset(self.D1)
        self.D2 = frozenset(self.D2)
        for i, j in self.D1 | self.D2:
            if not (1 <= i <= self.N and 1 <= j <= self.N):
                raise InputError(f"pair ({i}, {j}) lies outside [1..{self.N}]^2")
        self.offset  # validates the policy

    @classmethod
    def named(cls, phi: str = "add", psi: str = "add1", **kw) -> "EncodingConfig":
        try:
            return cls(NAMED_FUNCTIONS[phi], NAMED_FUNCTIONS[psi], phi_name=phi, psi_name=psi, **kw)
        except KeyError as e:
            raise InputError(f"unknown function name {e.args[0]!r}") from None

    @property
    def offset(self) -> int:
        if self.policy == "minimal":
            return 0
        m = re.fullmatch(r"offset:(\d+)", self.policy)
        if not m:
            raise InputError(f"unknown policy {self.policy!r}")
        return int(m.group(1))

    def phi_pair(self, i: int, j: int) -> int:
        """φ on an unordered pair: the value defined for ``i > j``."""
        return self.phi(max(i, j), min(i, j))


def parse_config(text: str, base: Path | None = None) -> EncodingConfig:
    """Parse ``phi add | phi table <file>``, ``psi ...``, ``D1 {(i,j),...}``, ``D2``, ``N``, ``policy``."""
    opts: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key in ("phi", "psi"):
            if rest.startswith("table"):
                path = Path(rest[5:].strip())
                if base is not None and not path.is_absolute():
                    path = base / path
                opts[key] = table_function(path)
                opts[key + "_name"] = f"table {path.name}"
            elif rest in NAMED_FUNCTIONS:
                opts[key] = NAMED_FUNCTIONS[rest]
                opts[key + "_name"] = rest
            else:
                raise InputError(f"line {lineno}: unknown function {rest!r}")
        elif key in ("D1", "D2"):
            opts[key] = parse_pairs(rest, lineno)
        elif key == "N":
            try:
                opts["N"] = int(rest)
            except ValueError:
                raise InputError(f"line {lineno}: N must be an integer") from None
        elif key == "policy":
            opts["policy"] = rest
        elif key == "field":
            opts["field"] = Field.parse(rest)
        else:
            raise InputError(f"line {lineno}: unknown key {key!r}")
    missing = {"phi", "psi", "N"} - opts.keys()
    if missing:
        raise InputError(f"config lacks {', '.join(sorted(missing))}")
    return EncodingConfig(**opts)


def parse_pairs(text: str, lineno: int | None = None) -> frozenset:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise InputError(f"line {lineno}: expected {{(i,j),...}}")
    pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    leftover = re.sub(r"\(\s*\d+\s*,\s*\d+\s*\)|[\s,{}]", "", text)
    if leftover:
        raise InputError(f"line {lineno}: malformed pair set {text!r}")
    return frozenset((int(i), int(j)) for i, j in pairs)


# -- index functions ----------------------------------------------------------


@dataclass
class EncodingTables:
    """``n_i(j)`` and ``s(i, j)`` for indices up to ``N`` (rows up to ``N + 1``)."""

    N: int
    lower: dict = field(default_factory=dict)  # (i, j) with i > j
    overrides: dict = field(default_factory=dict)  # tampering of the i <= j rule

    def order(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(2, self.N + 2) for j in range(1, i)]

    def n(self, i: int, j: int) -> int:
        if (i, j) in self.overrides:
            return self.overrides[i, j]
        if i > j:
            key = (i, j)
        else:
            key = (j + 1, i)
        try:
            return self.lower[key]
        except KeyError:
            raise InputError(f"n_{i}({j}) lies outside the table") from None

    def s(self, i: int, j: int) -> int:
        if i == j:
            raise InputError("s(i, j) is defined for i != j only")
        return self.n(max(i, j), min(i, j))

    def tamper(self, i: int, j: int, value: int) -> "EncodingTables":
        """Copy with ``n_i(j)`` (``i <= j``) forced to ``value``; for negative controls."""
        return EncodingTables(self.N, dict(self.lower), {**self.overrides, (i, j): value})


def build_tables(cfg: EncodingConfig) -> EncodingTables:
    """Fill ``n_i(j)`` for ``i > j``, ``i <= N + 1`` in the order (2,1), (3,1), (3,2), ..."""
    tables = EncodingTables(cfg.N)
    lower = tables.lower
    for i, j in tables.order():
        bound = cfg.phi(i, j)
        if j >= 2:
            bound = max(bound, lower[i, j - 1] + 1)
        elif i == 2:
            bound = max(bound, 2)
        else:
            bound = max(bound, lower[i - 1, i - 2] + 1)
        lower[i, j] = bound + cfg.offset
    problems = check_tables(tables, cfg)
    if problems:
        raise InvariantViolation("; ".join(problems))
    return tables


def check_tables(tables: EncodingTables, cfg: EncodingConfig, limit: int | None = None) -> list[str]:
    """Violated table properties, as messages (empty when all hold)."""
    N = tables.N if limit is None else limit
    out = []
    order = tables.order()
    values = [tables.lower[key] for key in order]
    if any(a >= b for a, b in zip(values, values[1:])):
        out.append("n is not strictly increasing along the enumeration order")
    for i, j in order:
        if tables.lower[i, j] < cfg.phi(i, j):
            out.append(f"n_{i}({j}) < phi({i},{j})")
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if tables.n(i, j) < i:
                out.append(f"n_{i}({j}) < {i}")
            if i <= j and tables.n(i, j) != tables.n(j + 1, i):
                out.append(f"n_{i}({j}) != n_{j + 1}({i})")
            if i != j and tables.s(i, j) < cfg.phi_pair(i, j):
                out.append(f"s({i},{j}) < phi({i},{j})")
            if i != j and tables.s(i, j) != tables.s(j, i):
                out.append(f"s({i},{j}) != s({j},{i})")
    return out


# -- words and relations ------------------------------------------------------


def left_normed(letters) -> Tree:
    """``<x1 x2 ... xn>_l`` for a sequence of letter codes."""
    return left_normed_tree([Tree(c) for c in letters])


@lru_cache(maxsize=None)
def _lnorm_poly(alphabet: Alphabet, field: Field, spelling: tuple) -> LiePoly:
    return LiePoly.from_tree(left_normed(alphabet.word(spelling)), alphabet, field)


def lnorm(alphabet: Alphabet, field: Field, *parts) -> LiePoly:
    """Left-normed word from letter names and ``(name, power)`` pairs."""
    names = []
    for part in parts:
        if isinstance(part, tuple):
            names += [part[0]] * part[1]
        else:
            names.append(part)
    return _lnorm_poly(alphabet, field, tuple(names))


def t_elem(alphabet: Alphabet, field: Field, i: int, head="x", mid="y", tail="z") -> LiePoly:
    """``<x y^i z>_l``."""
    return lnorm(alphabet, field, head, (mid, i), tail)


def u_elem(field: Field, n: int, eps: str) -> LiePoly:
    """``<x u^n eps z>_l`` over the extended alphabet."""
    return lnorm(X1, field, "x", ("u", n), eps, "z")


def epsilon(i: int, j: int) -> str:
    return "α" if (i + j) % 2 == 0 else "β"


class Relation(NamedTuple):
    label: str
    family: str
    indices: tuple
    poly: LiePoly


def _rel(family, indices, poly) -> Relation | None:
    if not poly:
        return None
    label = f"({family})" + ("" if not indices else " " + ",".join(map(str, indices)))
    return Relation(label, family, tuple(indices), poly.monic())


def _x_families(cfg: EncodingConfig, alphabet: Alphabet, names: tuple[str, str, str], numbers: tuple[str, ...]):
    F = cfg.field
    T = lambda i: t_elem(alphabet, F, i, *names)  # noqa: E731
    N = cfg.N
    out = []
    for i in range(2, N + 1):
        for j in range(1, i):
            out.append(_rel(numbers[0], (i, j), T(i) + T(j) - T(cfg.phi(i, j))))
    for i in range(2, N + 1):
        for j in range(1, i):
            out.append(_rel(numbers[1], (i, j), T(i).bracket(T(j)) - T(cfg.psi(i, j))))
    for i, j in sorted(cfg.D1):
        for t, delta in enumerate(cfg.deltas, 1):
            out.append(_rel(numbers[2], (i, j, t), T(i).scale(delta) - T(j)))
    for i, j in sorted(cfg.D2):
        out.append(_rel(numbers[3], (i, j), T(i) - T(j)))
    return [r for r in out if r is not None]


def gen_relations_I(cfg: EncodingConfig) -> list[Relation]:
    """Families (1)-(4) over ``x > z > y``."""
    return _x_families(cfg, X, ("x", "y", "z"), ("1", "2", "3", "4"))


def gen_relations_J(cfg: EncodingConfig) -> list[Relation]:
    """Families (19)-(22) over ``a > c > b``."""
    return _x_families(cfg, Y, ("a", "b", "c"), ("19", "20", "21", "22"))


def s11_pairs(N: int) -> list[tuple[int, int]]:
    """Index pairs of family (11) kept by the truncation: i <= N, j <= N - 1."""
    return [(i, j) for i in range(1, N + 1) for j in range(1, N)]


def gen_relations_S(cfg: EncodingConfig, tables: EncodingTables | None = None) -> list[Relation]:
    """Families (11)-(16) over ``x > z > α > β > γ > u > y``; R is not included."""
    tables = tables or build_tables(cfg)
    F = cfg.field
    T = lambda i: t_elem(X1, F, i)  # noqa: E731
    N = cfg.N
    out = []
    for i, j in s11_pairs(N):
        out.append(_rel("11", (i, j), u_elem(F, tables.n(i, j), epsilon(i, j)) - T(i)))
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            out.append(_rel("12", (i, j), u_elem(F, tables.s(i, j), "γ") - T(cfg.phi_pair(i, j))))
    al, be, ga = (LiePoly.letter(n, X1, F) for n in "αβγ")
    out.append(_rel("13", (), al + be - ga))
    out += _x_families(cfg, X1, ("x", "y", "z"), ("13.5", "14", "15", "16"))
    out = [r for r in out if r is not None]
    greek = {X1.code(n) for n in "αβγ"}
    for r in out:
        if r.family in ("11", "12") and not (set(r.poly.leading_word) & greek):
            raise InvariantViolation(f"{r.label}: leading word is not the u-word")
        if not is_als(r.poly.leading_word):
            raise InvariantViolation(f"{r.label}: leading word is not ALS")
    return out


def embed(p: LiePoly, target: Alphabet) -> LiePoly:
    """Re-encode a Lie element over a larger alphabet with the same induced order."""
    src = p.alphabet
    ranks = [target.rank(name) for name in src.letters]
    if ranks != sorted(ranks):
        raise InputError("target alphabet does not induce the same order")
    table = {src.code(name): target.code(name) for name in src.letters}
    return LiePoly({"".join(table[c] for c in w): c_ for w, c_ in p.terms.items()}, target, p.field)


# -- R: the closure of (1)-(4) --------------------------------------------------


@dataclass
class RResult:
    relations: list[LiePoly]
    status: str
    completion: gsb.Completion
    in_t_subalgebra: list[bool]


def complete_R(cfg: EncodingConfig, max_deg: int, workers: int = 1) -> RResult:
    """Bounded approximation of R: what completion adds to (1)-(4)."""
    base = [r.poly for r in gen_relations_I(cfg)]
    top = max((r.degree for r in base), default=0)
    if max_deg < top:
        raise InputError(f"max_deg {max_deg} is below the relation degree {top}")
    completion = gsb.complete(base, max_deg, workers=workers)
    R = [g for g in completion.relations if g not in base]
    member = [in_t_subalgebra(g, max_deg) for g in R]
    return RResult(R, completion.status, completion, member)


def in_t_subalgebra(p: LiePoly, max_deg: int) -> bool:
    """Whether each homogeneous part of ``p`` is a Lie polynomial in the ``<x y^i z>``.

    Checked against the span of all left-normed brackets of those elements
    within ``max_deg``.
    """
    F = p.field
    A = p.alphabet
    for n in sorted(p.degrees()):
        ech = Echelon(F)
        for seq in _compositions(n, 3):
            vec = t_elem(A, F, seq[0] - 2)
            for part in seq[1:]:
                vec = vec.bracket(t_elem(A, F, part - 2))
            if vec:
                ech.add(vec.terms)
        if not ech.contains(p.component(n).terms):
            return False
    return True


def _compositions(n: int, smallest: int):
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in _compositions(n - first, smallest):
            yield (first, *rest)


# -- the two lemmas -----------------------------------------------------------


@dataclass
class Lemma41Report:
    i: int
    j: int
    exponents: tuple[int, int]
    epsilons: tuple[str, str]
    exponent_ok: bool
    epsilon_ok: bool
    certificate_ok: bool
    remainder: LiePoly
    trace: list

    @property
    def passed(self) -> bool:
        return self.exponent_ok and self.epsilon_ok and self.certificate_ok and not self.remainder


def verify_lemma_41(cfg: EncodingConfig, i: int, j: int, tables: EncodingTables | None = None,
                    R: list[LiePoly] | None = None, max_deg: int = 14) -> Lemma41Report:
    """Show that relation (1) for the pair lies in the ideal of the extended presentation.

    Checks ``n_i(j-1) = n_j(i)``, that the two ε's are α and β, that the
    sum equals an explicit combination of generators (5), (6) and a placed
    copy of α + β - γ, and that it reduces to zero modulo (11)-(16) together
    with R.  Without R the leftmost strategy can get stuck: several (13.5)
    relations share a leading word.
    """
    if not (1 <= i < j <= cfg.N):
        raise InputError("verify_lemma_41 needs 1 <= i < j <= N")
    tables = tables or build_tables(cfg)
    F = cfg.field
    T = lambda k: t_elem(X1, F, k)  # noqa: E731
    a, b = tables.n(i, j - 1), tables.n(j, i)
    e1, e2 = epsilon(i, j - 1), epsilon(j, i)
    s = tables.s(i, j)
    target = T(i) + T(j) - T(cfg.phi_pair(i, j))

    rel5 = lambda k, m, e: T(k) - u_elem(F, tables.n(k, m), e)  # noqa: E731
    rel6 = T(cfg.phi_pair(i, j)) - u_elem(F, s, "γ")
    rel7 = LiePoly.letter("α", X1, F) + LiePoly.letter("β", X1, F) - LiePoly.letter("γ", X1, F)
    ctx = X1.word(["x"] + ["u"] * s + ["α", "z"])
    placed = substitute_terms(rel7, ctx, Occurrence(s + 1, 1))
    placed = LiePoly(ls_coordinates(placed, F.p), X1, F)
    certificate = rel5(i, j - 1, e1) + rel5(j, i, e2) - rel6 + placed

    if R is None:
        R = complete_R(cfg, max_deg).relations
    S = [r.poly for r in gen_relations_S(cfg, tables)] + [embed(g, X1) for g in R]
    remainder, trace = gsb.reduce(target, S)
    return Lemma41Report(
        i, j, (a, b), (e1, e2),
        exponent_ok=a == b == s,
        epsilon_ok={e1, e2} == {"α", "β"},
        certificate_ok=certificate == target,
        remainder=remainder,
        trace=trace,
    )


@dataclass
class InclusionCheck:
    i: int
    j: int
    w: str
    trivial: bool
    decomposition_ok: bool
    terms_in_S: bool
    terms_below_w: bool
    record: gsb.CompositionRecord

    @property
    def passed(self) -> bool:
        return self.trivial and self.decomposition_ok and self.terms_in_S and self.terms_below_w


@dataclass
class Lemma42Report:
    separation_ok: bool
    separation_problems: list[str]
    inclusions: list[InclusionCheck]
    gsb_report: gsb.GSBReport
    relations: list[Relation]
    R_status: str

    @property
    def passed(self) -> bool:
        return self.separation_ok and all(c.passed for c in self.inclusions) and self.gsb_report.is_gsb


def paper_decomposition(cfg: EncodingConfig, tables: EncodingTables, i: int, j: int) -> list[tuple[int, LiePoly]]:
    """The three signed terms into which the (11)x(13) composition splits.

    For ``i <= j`` they use the pair ``(j+1, i)``, for ``i > j`` the pairs
    ``(j, i-1)`` and ``(i, j)``.
    """
    F = cfg.field
    T = lambda k: t_elem(X1, F, k)  # noqa: E731
    if i <= j:
        other, big, small = tables.n(j + 1, i), j + 1, i
        w11 = u_elem(F, other, "β") - T(j + 1)
    else:
        other, big, small = tables.n(j, i - 1), i, j
        w11 = u_elem(F, other, "β") - T(j)
    phi = cfg.phi_pair(big, small)
    w12 = u_elem(F, tables.s(small, big), "γ") - T(phi)
    w135 = T(big) + T(small) - T(phi)
    return [(-1, w11), (1, w12), (-1, w135)]


def verify_lemma_42(cfg: EncodingConfig, max_deg: int = 14, tables: EncodingTables | None = None,
                    R: list[LiePoly] | None = None, workers: int = 1) -> Lemma42Report:
    """Certify, at the truncation, that (11)-(17) is a Gröbner-Shirshov basis."""
    tables = tables or build_tables(cfg)
    F = cfg.field
    rels = gen_relations_S(cfg, tables)
    status = "given"
    if R is None:
        result = complete_R(cfg, max_deg, workers=workers)
        R, status = result.relations, result.status
    rels = rels + [Relation(f"(17) #{k + 1}", "17", (k + 1,), embed(g, X1)) for k, g in enumerate(R)]
    S = [r.poly for r in rels]

    greek = {X1.code(n) for n in "αβγ"}
    problems = []
    for r in rels:
        has = bool(set(r.poly.leading_word) & greek)
        if r.family in ("11", "12", "13") and not has:
            problems.append(f"{r.label} has no α, β, γ in its leading word")
        if r.family not in ("11", "12", "13") and set(r.poly.letters_used()) & greek:
            problems.append(f"{r.label} involves α, β or γ")

    g13 = next(r.poly for r in rels if r.family == "13")
    alpha = X1.code("α")
    checks = []
    for r in rels:
        if r.family != "11" or epsilon(*r.indices) != "α":
            continue
        i, j = r.indices
        f = r.poly
        w = f.leading_word
        site = gsb.CompositionSite("inclusion", w, Occurrence(0, len(w)), Occurrence(w.index(alpha), 1))
        record = gsb.is_trivial(f, g13, site, S)
        terms = paper_decomposition(cfg, tables, i, j)
        expected = LiePoly.zero(X1, F)
        for sign, term in terms:
            expected = expected + term.scale(sign)
        in_S = all(term.monic() in S for _, term in terms)
        below = all(
            len(term.leading_word) < len(w) or (len(term.leading_word) == len(w) and lex_compare(term.leading_word, w) < 0)
            for _, term in terms
        )
        checks.append(InclusionCheck(i, j, w, record.trivial, record.value == expected, in_S, below, record))

    report = gsb.is_gsb(S, max_deg)
    return Lemma42Report(not problems, problems, checks, report, rels, status)


# -- free generators of the subalgebra ------------------------------------------


@dataclass
class TFreeReport:
    max_deg: int
    als_ok: bool
    order_ok: bool
    ls_ok: bool
    leading_ok: bool
    independent: bool
    counts: dict
    failures: list[str]

    @property
    def passed(self) -> bool:
        return self.als_ok and self.order_ok and self.ls_ok and self.leading_ok and self.independent


def t_tree(i: int) -> Tree:
    return left_normed(Y.word(["a"] + ["b"] * i + ["c"]))


def check_T_free(max_deg: int, field: Field = QQ) -> TFreeReport:
    """Check that the ``<a b^i c>`` behave as free generators up to ``max_deg``."""
    top = max_deg - 2
    failures = []
    words = {i: Y.word(["a"] + ["b"] * i + ["c"]) for i in range(1, top + 1)}
    als_ok = all(is_als(w) for w in words.values())
    if not als_ok:
        failures.append("some <a b^i c> is not ALS")
    order_ok = all(lex_compare(words[i], words[j]) > 0 for i in words for j in words if i < j)
    if not order_ok:
        failures.append("the order on T does not match the order of the words")

    T = Alphabet([f"t{i}" for i in range(1, top + 1)]) if top >= 1 else None
    ls_ok = leading_ok = True
    by_degree: dict[int, list[dict]] = {}
    if T is not None:
        for tw in als_words(T, max(1, max_deg // 3)):
            idx = [T.rank(T.letter(c)) + 1 for c in tw]
            if sum(k + 2 for k in idx) > max_deg:
                continue
            y_tree = _substitute_leaves(canonical_bracket(tw), T)
            if not is_ls_tree(y_tree):
                ls_ok = False
                failures.append(f"{canonical_bracket(tw).format(T)} is not LS over Y")
            expansion = expand_tree(y_tree)
            top_word = min(expansion, key=lambda v: (-len(v), v))
            if top_word != y_tree.word or expansion[top_word] != 1:
                leading_ok = False
                failures.append(f"{canonical_bracket(tw).format(T)} has the wrong leading word")
            by_degree.setdefault(len(y_tree.word), []).append(expansion)
    independent = True
    counts = {}
    for n, vectors in sorted(by_degree.items()):
        ech = Echelon(field)
        for v in vectors:
            ech.add(v)
        counts[n] = (len(vectors), ech.dim)
        if ech.dim != len(vectors):
            independent = False
            failures.append(f"degree {n}: rank {ech.dim} < {len(vectors)}")
    return TFreeReport(max_deg, als_ok, order_ok, ls_ok, leading_ok, independent, counts, failures)


def _substitute_leaves(t: Tree, T: Alphabet) -> Tree:
    if t.is_leaf:
        return t_tree(T.rank(T.letter(t.word)) + 1)
    return Tree.node(_substitute_leaves(t.left, T), _substitute_leaves(t.right, T))
