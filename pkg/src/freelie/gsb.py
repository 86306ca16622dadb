"""Compositions, reduction and Gröbner-Shirshov bases for Lie relations.

All relations are monic :class:`LiePoly` objects over one alphabet and field.
Reduction works on associative expansions: the leading word of the residual
is either rewritten with a relation (subtracting ``c [a s b]_s``) or moved to
the normal form (subtracting ``c [w]``).  Both operations remove the leading
word exactly and introduce only smaller words, so the loop terminates.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from . import oracle
from .bracketing import substitute_terms
from .errors import DomainError, InputError, InvariantViolation, NotLieElementError
from .liealg import Field, LiePoly, expand_tree, ls_coordinates
from .words import (
    Alphabet,
    Occurrence,
    Tree,
    als_words,
    canonical_bracket,
    deglex_key,
    find_all,
    is_als,
    lead_key,
)


@dataclass
class Presentation:
    """Generators with their order, a coefficient field, and monic relations."""

    alphabet: Alphabet
    field: Field
    relations: list[LiePoly]
    labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        rels = []
        for r in self.relations:
            if not r:
                raise DomainError("a relation is zero")
            rels.append(r.monic())
        self.relations = rels
        if not self.labels:
            self.labels = [f"r{i + 1}" for i in range(len(rels))]


@dataclass(frozen=True)
class CompositionSite:
    """An ambiguity word ``w`` together with where ``f̄`` and ``ḡ`` sit in it."""

    kind: str  # "intersection" or "inclusion"
    w: str
    left_occ: Occurrence
    right_occ: Occurrence


class ReductionStep(NamedTuple):
    """One rewrite ``h -> h - coeff * [a s b]_s`` at ambient word ``word``."""

    index: int
    word: str
    occ: Occurrence
    coeff: object


@dataclass
class CompositionRecord:
    site: CompositionSite
    value: LiePoly
    remainder: LiePoly
    trace: list[ReductionStep]

    @property
    def trivial(self) -> bool:
        return not self.remainder


# -- sites and compositions ---------------------------------------------------


def _require_monic(*polys: LiePoly) -> None:
    for p in polys:
        if not p.is_monic():
            raise DomainError("relations must be monic and nonzero")


def find_sites(f: LiePoly, g: LiePoly) -> list[CompositionSite]:
    """All intersection and inclusion ambiguities of ``f`` (left) with ``g``."""
    _require_monic(f, g)
    a, b = f.leading_word, g.leading_word
    same = f == g
    sites = []
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            w = a + b[k:]
            sites.append(
                CompositionSite("intersection", w, Occurrence(0, len(a)), Occurrence(len(w) - len(b), len(b)))
            )
    for pos in find_all(a, b):
        if same and pos == 0:
            continue
        sites.append(CompositionSite("inclusion", a, Occurrence(0, len(a)), Occurrence(pos, len(b))))
    return sites


def _lie_from_assoc(terms: dict, like: LiePoly) -> LiePoly:
    out = LiePoly(ls_coordinates(terms, like.field.p), like.alphabet, like.field)
    out._expansion = terms
    return out


def compose_terms(f: LiePoly, g: LiePoly, site: CompositionSite) -> dict:
    """Expansion of the composition ``(f, g)_w``."""
    _require_monic(f, g)
    w = site.w
    if site.left_occ.check(w) != f.leading_word or site.right_occ.check(w) != g.leading_word:
        raise InputError("site does not match the leading words of f and g")
    if not is_als(w):
        raise InvariantViolation("ambiguity word of two Lie relations is not Lyndon-Shirshov")
    p = f.field.p
    if site.kind == "intersection":
        if not (site.left_occ.start == 0 and site.right_occ.end == len(w)
                and site.left_occ.length + site.right_occ.length > len(w)):
            raise InputError("not an intersection site")
        left = substitute_terms(f, w, site.left_occ)
    elif site.kind == "inclusion":
        if site.left_occ != Occurrence(0, len(w)):
            raise InputError("not an inclusion site")
        left = f.expansion_terms()
    else:
        raise InputError(f"unknown site kind {site.kind!r}")
    right = substitute_terms(g, w, site.right_occ)
    out = dict(left)
    for v, c in right.items():
        out[v] = out.get(v, 0) - c
    out = {v: (c % p if p else c) for v, c in out.items()}
    out = {v: c for v, c in out.items() if c}
    if out and lead_key(min(out, key=lead_key)) <= lead_key(w):
        raise InvariantViolation("composition does not lower the ambiguity word")
    return out


def compose(f: LiePoly, g: LiePoly, site: CompositionSite) -> LiePoly:
    """``[f u]_f - [v g]_g`` (intersection) or ``f - [u g v]_g`` (inclusion)."""
    return _lie_from_assoc(compose_terms(f, g, site), f)


# -- reduction ----------------------------------------------------------------


def reduce_terms(terms: dict, S: Sequence[LiePoly], like: LiePoly) -> tuple[dict, list[ReductionStep]]:
    """Reduce an expansion modulo ``S``; returns (LS coordinates of the normal form, trace)."""
    p = like.field.p
    leads = [s.leading_word for s in S]
    residual = {w: c for w, c in terms.items() if c}
    heap = [lead_key(w) for w in residual]
    heapq.heapify(heap)
    nf = {}
    trace = []
    while heap:
        _, w = heapq.heappop(heap)
        c = residual.pop(w, 0)
        if not c:
            continue
        if not is_als(w):
            raise NotLieElementError("reduction met a non-Lyndon-Shirshov leading word")
        for i, lw in enumerate(leads):
            pos = w.find(lw)
            if pos >= 0:
                occ = Occurrence(pos, len(lw))
                sub = substitute_terms(S[i], w, occ)
                trace.append(ReductionStep(i, w, occ, c))
                break
        else:
            nf[w] = c
            sub = expand_tree(canonical_bracket(w))
        if sub.get(w) != 1:
            raise InvariantViolation("rewriting term does not have leading coefficient 1")
        for v, d in sub.items():
            if v == w:
                continue
            old = residual.get(v)
            new = (old or 0) - c * d
            if p:
                new %= p
            if new:
                if old is None:
                    heapq.heappush(heap, lead_key(v))
                residual[v] = new
            elif old is not None:
                del residual[v]
    return nf, trace


def reduce(h: LiePoly, S: Sequence[LiePoly]) -> tuple[LiePoly, list[ReductionStep]]:
    """Normal form of ``h`` modulo ``S`` together with the rewriting trace.

    At each step the first relation of ``S`` whose leading word occurs in the
    current leading word is used, at its leftmost occurrence.  Every LS word
    of the normal form is S-reduced.
    """
    _require_monic(*S)
    nf, trace = reduce_terms(h.expansion_terms(), S, h)
    return LiePoly(nf, h.alphabet, h.field), trace


def trace_polynomial(trace: Sequence[ReductionStep], S: Sequence[LiePoly], like: LiePoly) -> LiePoly:
    """``sum coeff * [a s b]_s`` over a reduction trace."""
    total: dict = {}
    for step in trace:
        for v, d in substitute_terms(S[step.index], step.word, step.occ).items():
            total[v] = total.get(v, 0) + step.coeff * d
    p = like.field.p
    total = {v: (c % p if p else c) for v, c in total.items()}
    return LiePoly(ls_coordinates({v: c for v, c in total.items() if c}, p), like.alphabet, like.field)


def is_trivial(f: LiePoly, g: LiePoly, site: CompositionSite, S: Sequence[LiePoly]) -> CompositionRecord:
    """Reduce the composition to zero modulo ``S`` if the strategy allows it.

    A nonzero remainder means "not reduced to zero under the leftmost-first
    strategy"; that does not rule out some other trivializing decomposition.
    """
    value = compose(f, g, site)
    remainder, trace = reduce(value, S)
    return CompositionRecord(site, value, remainder, trace)


@dataclass
class SiteFailure:
    left: int
    right: int
    record: CompositionRecord


@dataclass
class GSBReport:
    max_deg: int
    checked: int = 0
    failures: list[SiteFailure] = field(default_factory=list)
    skipped: list[tuple[int, int, CompositionSite]] = field(default_factory=list)

    @property
    def is_gsb(self) -> bool:
        return not self.failures


def is_gsb(S: Sequence[LiePoly], max_deg: int) -> GSBReport:
    """Check every composition with ``|w| <= max_deg`` among elements of ``S``."""
    _require_monic(*S)
    report = GSBReport(max_deg)
    for i, f in enumerate(S):
        for j, g in enumerate(S):
            for site in find_sites(f, g):
                if len(site.w) > max_deg:
                    report.skipped.append((i, j, site))
                    continue
                report.checked += 1
                record = is_trivial(f, g, site, S)
                if not record.trivial:
                    report.failures.append(SiteFailure(i, j, record))
    return report


# -- completion ---------------------------------------------------------------


@dataclass
class Completion:
    relations: list[LiePoly]
    status: str  # "complete" or "bound_reached"
    max_deg: int
    skipped: int = 0
    processed: int = 0

    @property
    def complete(self) -> bool:
        return self.status == "complete"


def _compose_job(args):
    f, g, site = args
    return compose_terms(f, g, site)


def complete(S: Sequence[LiePoly], max_deg: int, workers: int = 1) -> Completion:
    """Degree-bounded critical-pair completion.

    Sites are processed in ascending deg-lex order of the ambiguity word
    (ties: order of creation).  With ``workers > 1`` upcoming compositions are
    evaluated in a process pool, but reductions are still committed one at a
    time in that same order, so the output does not depend on ``workers``.
    """
    basis: list[LiePoly] = []
    for r in S:
        if r:
            r = r.monic()
            if r not in basis:
                basis.append(r)
    if basis and max_deg < max(r.degree for r in basis):
        raise InputError("max_deg is below the degree of an input relation")

    heap: list = []
    counter = 0

    def push_sites(j: int) -> None:
        nonlocal counter
        pairs = [(j, j)] + [pair for k in range(j) for pair in ((j, k), (k, j))]
        for a, b in pairs:
            for site in find_sites(basis[a], basis[b]):
                heapq.heappush(heap, (deglex_key(site.w), counter, a, b, site))
                counter += 1

    for j in range(len(basis)):
        push_sites(j)

    skipped = processed = 0
    cache: dict[int, dict] = {}
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    like = basis[0] if basis else None
    try:
        while heap:
            if pool is not None and heap[0][1] not in cache:
                batch = [
                    item for item in heapq.nsmallest(8 * workers, heap)
                    if item[1] not in cache and len(item[4].w) <= max_deg
                ]
                jobs = [(basis[a], basis[b], site) for _, _, a, b, site in batch]
                for item, value in zip(batch, pool.map(_compose_job, jobs)):
                    cache[item[1]] = value
            _, tag, a, b, site = heapq.heappop(heap)
            if len(site.w) > max_deg:
                skipped += 1
                continue
            processed += 1
            value = cache.pop(tag) if tag in cache else compose_terms(basis[a], basis[b], site)
            nf, _ = reduce_terms(value, basis, like)
            if nf:
                basis.append(LiePoly(nf, like.alphabet, like.field).monic())
                push_sites(len(basis) - 1)
    finally:
        if pool is not None:
            pool.shutdown()

    status = "complete" if skipped == 0 else "bound_reached"
    return Completion(interreduce(basis, max_deg), status, max_deg, skipped, processed)


def interreduce(basis: Sequence[LiePoly], max_deg: int | None = None) -> list[LiePoly]:
    """Drop relations whose leading word contains another's, tail-reduce the rest.

    A relation above ``max_deg`` is never dropped, since the inclusion
    composition that justifies dropping it was not examined.  Output is
    sorted by ascending deg-lex leading word.
    """
    keep = []
    for i, s in enumerate(basis):
        lw = s.leading_word
        if max_deg is not None and len(lw) > max_deg:
            keep.append(s)
            continue
        dominated = any(
            j != i and basis[j].leading_word in lw and (basis[j].leading_word != lw or j < i)
            for j in range(len(basis))
        )
        if not dominated:
            keep.append(s)
    out = []
    for i, s in enumerate(keep):
        nf, _ = reduce(s, keep[:i] + keep[i + 1:])
        if nf.leading_word != s.leading_word:
            raise InvariantViolation("tail reduction changed a leading word")
        out.append(nf.monic())
    out.sort(key=lambda r: deglex_key(r.leading_word))
    return out


# -- quotient bases and membership --------------------------------------------


def reduced_basis_words(S: Sequence[LiePoly], max_deg: int, alphabet: Alphabet | None = None) -> list[Tree]:
    """LS trees of degree <= ``max_deg`` whose word avoids every leading word of ``S``."""
    if alphabet is None:
        if not S:
            raise InputError("an alphabet is needed when S is empty")
        alphabet = S[0].alphabet
    leads = [s.leading_word for s in S]
    words = [w for w in als_words(alphabet, max_deg) if not any(lw in w for lw in leads)]
    words.sort(key=deglex_key)
    return [canonical_bracket(w) for w in words]


def ideal_member(h: LiePoly, S_gsb: Sequence[LiePoly], max_deg: int) -> bool:
    """``h`` lies in the ideal iff it reduces to zero modulo a GSB."""
    if not h:
        return True
    if h.degree > max_deg:
        raise InputError(f"degree {h.degree} exceeds the completion bound {max_deg}")
    nf, _ = reduce(h, S_gsb)
    return not nf


# -- Id(f) ∩ Id(g) versus [Id(f), Id(g)] ---------------------------------------


@dataclass
class ProductReport:
    status: str  # "equal", "discrepancy", "hypothesis_not_satisfied", "refused"
    rows: list[dict] = field(default_factory=list)
    first_discrepancy: int | None = None
    reason: str = ""


def intersection_equals_product(f: LiePoly, g: LiePoly, max_deg: int) -> ProductReport:
    """Compare Id(f) ∩ Id(g) with the mutual commutator ideal, degree by degree.

    Only meaningful when ``f`` and ``g`` have no compositions in either order;
    otherwise the report is ``hypothesis_not_satisfied``.
    """
    if not (f.is_homogeneous() and g.is_homogeneous()):
        raise DomainError("the linear-algebra check is exact only for homogeneous f and g")
    f, g = f.monic(), g.monic()
    if f == g:
        return ProductReport("refused", reason="f and g coincide")
    sites = find_sites(f, g) + find_sites(g, f)
    if sites:
        where = ", ".join(f.alphabet.spell(s.w) for s in sites)
        return ProductReport("hypothesis_not_satisfied", reason=f"compositions at {where}")
    rows = oracle.intersection_vs_product([f], [g], max_deg)
    report = ProductReport("equal", rows)
    for row in rows:
        if row["intersection"] != row["product"] or not row["product_inside"]:
            report.status = "discrepancy"
            report.first_discrepancy = row["degree"]
            break
    return report
