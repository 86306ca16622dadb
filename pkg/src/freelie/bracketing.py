"""Bracketings of an ALS word aligned to distinguished ALS subwords.

Given an ALS word ``w`` and an ALS factor ``u`` of it, the canonical tree
``[w]`` always contains a subtree ``[uc]`` that starts where ``u`` starts.
Replacing it by the left-normed ``[...[[u][c1]]...[ck]]`` (``c1 <= ... <= ck``
the ALS factorization of ``c``) makes ``[u]`` an intact subtree without
changing the leading word of the expansion.  The same idea applied to two
(or more) disjoint factors gives a bracketing in which all of them are
subtrees at once.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DomainError, InputError, InvariantViolation
from .liealg import LiePoly, commutator_terms, expand_tree, ls_coordinates
from .words import (
    Occurrence,
    Tree,
    canonical_bracket,
    factor_containing,
    is_als,
    left_normed_tree,
    ls_factorize,
)


def _require_als(word: str, what: str) -> None:
    if not word or not is_als(word):
        raise DomainError(f"{what} is not an associative Lyndon-Shirshov word")


def shirshov_subtree(t: Tree, occ: Occurrence) -> tuple[int, Tree]:
    """Minimal subtree of ``t`` starting at ``occ.start`` and covering ``occ``.

    Returns ``(start, subtree)``.  For a canonical tree and an ALS occurrence
    the subtree's word is ``u c`` with ``u`` the occurrence word.
    """
    node, offset = t, 0
    best = None
    while True:
        if offset == occ.start and len(node.word) >= occ.length:
            best = (offset, node)
        if node.is_leaf:
            break
        split = offset + len(node.left.word)
        if occ.start < split:
            node = node.left
        else:
            node, offset = node.right, split
    if best is None:
        raise InvariantViolation(f"no subtree of [w] starts at {occ.start} and covers the occurrence")
    return best


def _locate(w: str, occ: Occurrence) -> tuple[int, Tree]:
    t = canonical_bracket(w)
    start, sub = shirshov_subtree(t, occ)
    if not sub.word.startswith(w[occ.start:occ.end]):
        raise InvariantViolation("the subtree found at the occurrence does not begin with it")
    return start, sub


def _left_normed_over(u: str, c: str, pieces: Sequence[Tree] | None = None) -> Tree:
    """``[...[[u][c1]]...[ck]]`` for the ALS factorization of ``c``."""
    if not c:
        return canonical_bracket(u)
    if pieces is None:
        pieces = [canonical_bracket(f) for f in ls_factorize(c)]
    return left_normed_tree([canonical_bracket(u), *pieces])


def special_bracket(w: str, u_occ: Occurrence) -> Tree:
    """Shirshov's special bracketing ``[w]_u`` relative to one occurrence."""
    _require_als(w, "w")
    u = u_occ.check(w)
    _require_als(u, "the occurrence word")
    t = canonical_bracket(w)
    start, sub = _locate(w, u_occ)
    replacement = _left_normed_over(u, sub.word[len(u):])
    return t.replace_at(start, len(sub.word), replacement)


def kukin_bracket(w: str, u_occ: Occurrence, v_occ: Occurrence) -> Tree:
    """Bracketing ``[w]_{u,v}`` in which both occurrences are intact subtrees."""
    _require_als(w, "w")
    u = u_occ.check(w)
    v = v_occ.check(w)
    _require_als(u, "u")
    _require_als(v, "v")
    if u_occ.end > v_occ.start:
        raise InputError("occurrences must be disjoint with u before v")
    t = canonical_bracket(w)
    us, uc = _locate(w, u_occ)
    uc_end = us + len(uc.word)

    if v_occ.start >= uc_end:
        # v lies in the part after [uc]; its own [vs] is disjoint from [uc]
        vs, vsub = _locate(w, v_occ)
        t = t.replace_at(us, len(uc.word), _left_normed_over(u, uc.word[len(u):]))
        return t.replace_at(vs, len(vsub.word), _left_normed_over(v, vsub.word[len(v):]))

    if v_occ.end > uc_end:
        raise InvariantViolation("v starts inside [uc] but does not end inside it")
    c = uc.word[len(u):]
    c_start = us + len(u)
    factors = ls_factorize(c)
    rel = Occurrence(v_occ.start - c_start, v_occ.length)
    index = factor_containing(factors, rel)
    pos = sum(len(f) for f in factors[:index])
    pieces = [canonical_bracket(f) for f in factors]
    if rel.start != pos or rel.length != len(factors[index]):
        pieces[index] = special_bracket(factors[index], Occurrence(rel.start - pos, rel.length))
    return t.replace_at(us, len(uc.word), _left_normed_over(u, c, pieces))


def multi_bracket(w: str, occs: Sequence[Occurrence]) -> Tree:
    """Bracketing with any number of disjoint ALS occurrences kept as subtrees.

    Folds the two-occurrence case analysis: occurrences outside every
    ``[uc]`` found so far get their own special bracketing, occurrences
    inside ``c`` are pushed into the ALS factor of ``c`` that contains them.
    """
    _require_als(w, "w")
    occs = sorted(Occurrence(*o) for o in occs)
    for o in occs:
        _require_als(o.check(w), "an occurrence word")
    for a, b in zip(occs, occs[1:]):
        if a.end > b.start:
            raise InputError("occurrences must be pairwise disjoint")
    return _fold(w, occs)


def _fold(w: str, occs: Sequence[Occurrence]) -> Tree:
    t = canonical_bracket(w)
    out = t
    i = 0
    while i < len(occs):
        occ = occs[i]
        start, sub = _locate(w, occ)
        end = start + len(sub.word)
        inner = []
        i += 1
        while i < len(occs) and occs[i].start < end:
            if occs[i].end > end:
                raise InvariantViolation("occurrence straddles the boundary of [uc]")
            inner.append(Occurrence(occs[i].start - start, occs[i].length))
            i += 1
        out = out.replace_at(start, len(sub.word), _special_with(sub.word, occ.length, inner))
    return out


def _special_with(uc: str, ulen: int, inner: Sequence[Occurrence]) -> Tree:
    u, c = uc[:ulen], uc[ulen:]
    if not c:
        return canonical_bracket(u)
    pieces = []
    pos = ulen
    placed = 0
    for f in ls_factorize(c):
        mine = [Occurrence(o.start - pos, o.length) for o in inner if pos <= o.start and o.end <= pos + len(f)]
        placed += len(mine)
        pieces.append(_fold(f, mine) if mine else canonical_bracket(f))
        pos += len(f)
    if placed != len(inner):
        raise InvariantViolation("an ALS occurrence straddles two factors")
    return left_normed_tree([canonical_bracket(u), *pieces])


# -- substitution -------------------------------------------------------------


def _expand_replacing(node: Tree, offset: int, occ: Occurrence, repl: dict, p: int) -> dict:
    if offset == occ.start and len(node.word) == occ.length:
        return repl
    if node.is_leaf:
        raise InvariantViolation("substitution site is not a subtree of the context")
    split = offset + len(node.left.word)
    if occ.end <= split:
        left = _expand_replacing(node.left, offset, occ, repl, p)
        right = expand_tree(node.right)
    elif occ.start >= split:
        left = expand_tree(node.left)
        right = _expand_replacing(node.right, split, occ, repl, p)
    else:
        raise InvariantViolation("substitution site is not a subtree of the context")
    return commutator_terms(left, right, p)


def substitute_terms(f: LiePoly, ctx_w: str, f_occ: Occurrence) -> dict:
    """Expansion of ``[a f b]_f`` as a word -> coefficient dict."""
    if not f.is_monic():
        raise DomainError("substitution needs a monic polynomial")
    if f_occ.check(ctx_w) != f.leading_word:
        raise InputError("the occurrence does not spell the leading word of f")
    _require_als(ctx_w, "the context word")
    t = special_bracket(ctx_w, f_occ)
    return _expand_replacing(t, 0, f_occ, f.expansion_terms(), f.field.p)


def substitute(f: LiePoly, ctx_w: str, f_occ: Occurrence) -> LiePoly:
    """``[a f b]_f``: the special bracketing of ``ctx_w`` with ``[f̄]`` replaced by ``f``."""
    terms = substitute_terms(f, ctx_w, f_occ)
    return LiePoly(ls_coordinates(terms, f.field.p), f.alphabet, f.field)
