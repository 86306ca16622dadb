from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freelie.errors import DomainError, InputError, InvariantViolation
from freelie.words import (
    Alphabet,
    Occurrence,
    Tree,
    all_words,
    als_occurrences,
    als_words,
    canonical_bracket,
    deglex_compare,
    factor_containing,
    is_als,
    is_ls_tree,
    left_normed_tree,
    lex_compare,
    ls_factorize,
)
from freelie.bracketing import shirshov_subtree

from conftest import XY, XZY


def ref_lex(u, v, alphabet):
    """Letter-by-letter evaluation of the order on spelled words."""
    if not u and not v:
        return 0
    if not v:
        return -1  # nonempty < empty
    if not u:
        return 1
    ru, rv = alphabet.rank(u[0]), alphabet.rank(v[0])
    if ru != rv:
        return 1 if ru < rv else -1
    return ref_lex(u[1:], v[1:], alphabet)


def ref_als(w):
    return all(lex_compare(w, w[i:] + w[:i]) > 0 for i in range(1, len(w)))


def words_over(alphabet, max_len):
    return st.lists(st.sampled_from(alphabet.letters), min_size=1, max_size=max_len).map(alphabet.word)


# -- alphabet -----------------------------------------------------------------


def test_alphabet_parse_and_ranks():
    A = Alphabet.parse("x > z > y")
    assert A.letters == ("x", "z", "y")
    assert [A.rank(c) for c in "xzy"] == [0, 1, 2]
    assert A.spell(A.word("xzy")) == "xzy"
    assert A.spell("") == "1"


def test_alphabet_rejects_duplicates():
    with pytest.raises(InputError, match="duplicate"):
        Alphabet.parse("x > x")


def test_alphabet_unknown_letter():
    with pytest.raises(InputError):
        XZY.word("xqy")


def test_greek_aliases():
    A = Alphabet(["x", "z", "α", "β", "γ", "u", "y"])
    assert A.word("alpha u z") == A.word("αuz")
    assert A.word(["x", "gamma"]) == A.word("xγ")


def test_multichar_letters_need_separators():
    A = Alphabet(["ab", "c"])
    assert A.word("ab c ab") == A.word(["ab", "c", "ab"])
    assert A.spell(A.word("ab c")) == "ab c"


# -- orders -------------------------------------------------------------------


def test_lex_examples():
    assert lex_compare(XY.word("x"), XY.word("y")) == 1
    assert lex_compare(XY.word("x"), XY.word("xy")) == 1
    # third letters decide: x > y
    assert lex_compare(XY.word("xyx"), XY.word("xyy")) == 1
    assert lex_compare(XY.word("xy"), XY.word("xy")) == 0


def test_deglex_examples():
    assert deglex_compare(XY.word("xy"), XY.word("x")) == 1
    assert deglex_compare(XY.word("xy"), XY.word("yx")) == 1
    assert deglex_compare(XZY.word("xzy"), XZY.word("xyz")) == 1


@given(words_over(XZY, 7), words_over(XZY, 7))
def test_lex_matches_reference(u, v):
    assert lex_compare(u, v) == ref_lex(XZY.spell(u), XZY.spell(v), XZY)


@given(words_over(XZY, 6), words_over(XZY, 4))
def test_prefix_is_greater(u, tail):
    assert lex_compare(u, u + tail) == 1
    assert lex_compare(u + tail, u) == -1


@given(words_over(XZY, 6), words_over(XZY, 6))
def test_deglex_equal_length_is_first_difference(u, v):
    if len(u) == len(v):
        expected = 0 if u == v else (1 if ref_lex(XZY.spell(u), XZY.spell(v), XZY) > 0 else -1)
        assert deglex_compare(u, v) == expected
    else:
        assert deglex_compare(u, v) == (1 if len(u) > len(v) else -1)


# -- ALS words ------------------------------------------------------------------


def test_is_als_examples():
    assert is_als(XY.word("x"))
    assert not is_als(XY.word("xx"))
    assert is_als(XZY.word("xzy"))
    with pytest.raises(InputError):
        is_als("")


@pytest.mark.parametrize("alphabet,n", [(XY, 9), (XZY, 6)])
def test_is_als_agrees_with_rotation_check(alphabet, n):
    for k in range(1, n + 1):
        for w in all_words(alphabet, k):
            assert is_als(w) == ref_als(w)


def test_als_words_enumeration_matches_filter():
    expected = sorted(w for k in range(1, 8) for w in all_words(XZY, k) if ref_als(w))
    assert sorted(als_words(XZY, 7)) == expected


def test_als_property_prefix_not_suffix():
    for w in als_words(XZY, 7):
        for k in range(1, len(w)):
            assert w[:k] != w[-k:]


def test_als_property_greater_than_suffixes():
    for w in als_words(XZY, 7):
        for k in range(1, len(w)):
            assert lex_compare(w, w[k:]) == 1


def test_als_property_concatenation():
    ws = als_words(XZY, 4)
    for u in ws:
        for v in ws:
            if lex_compare(u, v) > 0:
                assert is_als(u + v)


# -- factorization ------------------------------------------------------------


def test_factorize_examples():
    assert ls_factorize(XZY.word("xzy")) == (XZY.word("xzy"),)
    assert [XY.spell(f) for f in ls_factorize(XY.word("yx"))] == ["y", "x"]
    assert [XY.spell(f) for f in ls_factorize(XY.word("yxyx"))] == ["y", "xy", "x"]
    with pytest.raises(InputError):
        ls_factorize("")


def all_factorizations(w):
    """Every split into ALS factors that is nondecreasing in the order."""
    if not w:
        yield ()
        return
    for k in range(1, len(w) + 1):
        head = w[:k]
        if ref_als(head):
            for rest in all_factorizations(w[k:]):
                if not rest or lex_compare(head, rest[0]) <= 0:
                    yield (head, *rest)


@pytest.mark.parametrize("alphabet,n", [(XY, 8), (XZY, 6)])
def test_factorization_unique_by_exhaustion(alphabet, n):
    for k in range(1, n + 1):
        for w in all_words(alphabet, k):
            found = list(all_factorizations(w))
            assert found == [ls_factorize(w)]


def test_subword_lies_in_one_factor():
    for k in range(1, 7):
        for w in all_words(XZY, k):
            factors = ls_factorize(w)
            for occ in als_occurrences(w):
                i = factor_containing(factors, occ)
                start = sum(len(f) for f in factors[:i])
                assert start <= occ.start and occ.end <= start + len(factors[i])


def test_factor_containing_rejects_straddle():
    factors = (XY.word("y"), XY.word("x"))
    with pytest.raises(InvariantViolation):
        factor_containing(factors, Occurrence(0, 2))


# -- bracketings --------------------------------------------------------------


def test_canonical_bracket_examples():
    assert canonical_bracket(XY.word("xyy")).format(XY) == "[[x,y],y]"
    assert canonical_bracket(XZY.word("xzy")).format(XZY) == "[x,[z,y]]"
    with pytest.raises(DomainError):
        canonical_bracket(XY.word("yx"))


def all_bracketings(w):
    if len(w) == 1:
        yield Tree(w)
        return
    for k in range(1, len(w)):
        for left in all_bracketings(w[:k]):
            for right in all_bracketings(w[k:]):
                yield Tree.node(left, right)


def test_exactly_one_ls_bracketing():
    for w in als_words(XZY, 6):
        ls = [t for t in all_bracketings(w) if is_ls_tree(t)]
        assert ls == [canonical_bracket(w)]


def test_non_als_words_have_no_ls_bracketing():
    for k in range(2, 6):
        for w in all_words(XY, k):
            if not is_als(w):
                assert not any(is_ls_tree(t) for t in all_bracketings(w))


def test_left_normed_tree():
    leaves = [Tree(c) for c in XZY.word("xyz")]
    assert left_normed_tree(leaves).format(XZY) == "[[x,y],z]"
    assert left_normed_tree(leaves[:1]) == leaves[0]


def test_tree_replace_and_subtree():
    t = canonical_bracket(XY.word("xxyy"))
    sub = t.subtree_at(1, 2)
    assert sub is not None and sub.format(XY) == "[x,y]"
    assert t.replace_at(1, 2, sub) == t


def test_uc_subtree_contains_factor_subtrees():
    # [w] contains [uc] at u's start, and [uc] = [u [c1] ... [ck]]
    for w in als_words(XZY, 8):
        t = canonical_bracket(w)
        for occ in als_occurrences(w):
            start, sub = shirshov_subtree(t, occ)
            u = w[occ.start:occ.end]
            assert start == occ.start and sub.word.startswith(u)
            assert is_ls_tree(sub)
            pos = occ.start + len(u)
            for c in ls_factorize(sub.word[len(u):]) if len(sub.word) > len(u) else ():
                assert t.subtree_at(pos, len(c)) == canonical_bracket(c)
                pos += len(c)


@settings(max_examples=200)
@given(words_over(XZY, 9))
def test_factors_are_als_and_nondecreasing(w):
    factors = ls_factorize(w)
    assert "".join(factors) == w
    assert all(is_als(f) for f in factors)
    assert all(lex_compare(a, b) <= 0 for a, b in zip(factors, factors[1:]))
