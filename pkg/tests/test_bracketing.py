import pytest

from freelie.bracketing import kukin_bracket, multi_bracket, shirshov_subtree, special_bracket, substitute
from freelie.errors import DomainError, InputError
from freelie.liealg import expand_tree
from freelie.parse import parse_expr
from freelie.words import Occurrence, als_occurrences, als_words, canonical_bracket, lead_key, ls_factorize

from conftest import XY, XZY


def leading(t):
    exp = expand_tree(t)
    w = min(exp, key=lead_key)
    return w, exp[w]


def disjoint_pairs(w):
    occs = als_occurrences(w)
    return [(u, v) for u in occs for v in occs if u.end <= v.start]


def test_special_bracket_example():
    w = XZY.word("xzy")
    t = special_bracket(w, Occurrence(0, 2))
    assert t.format(XZY) == "[[x,z],y]"
    assert leading(t) == (w, 1)


def test_special_bracket_whole_word_is_canonical():
    for w in als_words(XZY, 6):
        assert special_bracket(w, Occurrence(0, len(w))) == canonical_bracket(w)


def test_special_bracket_errors():
    with pytest.raises(DomainError):
        special_bracket(XY.word("yx"), Occurrence(0, 1))
    with pytest.raises(DomainError):
        special_bracket(XY.word("xxy"), Occurrence(0, 2))  # xx is not ALS
    with pytest.raises(InputError):
        special_bracket(XY.word("xy"), Occurrence(1, 5))


def test_kukin_examples():
    w = XZY.word("xzxy")
    assert kukin_bracket(w, Occurrence(0, 2), Occurrence(2, 2)).format(XZY) == "[[x,z],[x,y]]"
    w = XZY.word("xzy")
    assert kukin_bracket(w, Occurrence(0, 1), Occurrence(1, 2)).format(XZY) == "[x,[z,y]]"


def test_kukin_rejects_overlap():
    w = XZY.word("xzy")
    with pytest.raises(InputError):
        kukin_bracket(w, Occurrence(0, 2), Occurrence(1, 2))


def test_kukin_keeps_both_subtrees_and_leading_word():
    for w in als_words(XZY, 7):
        for u, v in disjoint_pairs(w):
            t = kukin_bracket(w, u, v)
            assert leading(t) == (w, 1)
            assert t.subtree_at(u.start, u.length) == canonical_bracket(w[u.start:u.end])
            assert t.subtree_at(v.start, v.length) == canonical_bracket(w[v.start:v.end])


def test_kukin_degrades_to_special_on_whole_factor():
    # when v is one of the factors c_t of c, no rebracketing inside c is needed
    hits = 0
    for w in als_words(XY, 9):
        t = canonical_bracket(w)
        for u in als_occurrences(w):
            special = special_bracket(w, u)
            start, sub = shirshov_subtree(t, u)
            c = sub.word[u.length:]
            pos = start + u.length
            for f in ls_factorize(c) if c else ():
                v = Occurrence(pos, len(f))
                assert kukin_bracket(w, u, v) == special
                hits += 1
                pos += len(f)
    assert hits > 100


def test_multi_bracket_agrees_with_two_occurrence_case():
    for w in als_words(XZY, 7):
        for u, v in disjoint_pairs(w):
            assert multi_bracket(w, [u, v]) == kukin_bracket(w, u, v)


def test_multi_bracket_three_occurrences():
    checked = 0
    for w in als_words(XY, 9):
        occs = als_occurrences(w)
        for a in occs:
            for b in occs:
                if a.end > b.start:
                    continue
                for c in occs:
                    if b.end > c.start:
                        continue
                    t = multi_bracket(w, [a, b, c])
                    assert leading(t) == (w, 1)
                    for o in (a, b, c):
                        assert t.subtree_at(o.start, o.length) == canonical_bracket(w[o.start:o.end])
                    checked += 1
    assert checked > 1000


def test_substitution_examples():
    f = parse_expr("[x,y]", XY)
    assert substitute(f, XY.word("xyy"), Occurrence(0, 2)).format() == "[[x,y],y]"
    f = parse_expr("[x,y] - x", XY)
    assert substitute(f, XY.word("xyy"), Occurrence(0, 2)).format() == "[[x,y],y] - [x,y]"
    f = parse_expr("[z,y]", XZY)
    assert substitute(f, XZY.word("xzy"), Occurrence(1, 2)).format() == "[x,[z,y]]"


def test_substitution_errors():
    with pytest.raises(DomainError):
        substitute(parse_expr("2*[x,y]", XY), XY.word("xyy"), Occurrence(0, 2))
    with pytest.raises(InputError):
        substitute(parse_expr("[x,y]", XY), XY.word("xyy"), Occurrence(1, 2))
    with pytest.raises(DomainError):
        substitute(parse_expr("[x,y]", XY), XY.word("yxy"), Occurrence(1, 2))


def test_substitution_leading_word():
    f = parse_expr("[[x,y],y] + 2*[x,y] - y", XY)
    for w in als_words(XY, 8):
        for occ in als_occurrences(w):
            if w[occ.start:occ.end] == f.leading_word:
                g = substitute(f, w, occ)
                assert g.leading_word == w and g.leading_coeff == 1
