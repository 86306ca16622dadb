"""Free Lie algebras: Lyndon-Shirshov words, Gröbner-Shirshov bases, and a brute-force oracle."""

from .errors import DomainError, FreeLieError, InputError, InvariantViolation, NotLieElementError, ParseError
from .liealg import GF, QQ, AssocPoly, Field, LiePoly, expand, leading_word, to_ls_basis
from .words import (
    Alphabet,
    Occurrence,
    Tree,
    canonical_bracket,
    deglex_compare,
    is_als,
    is_ls_tree,
    lex_compare,
    ls_factorize,
)
from .bracketing import kukin_bracket, multi_bracket, special_bracket, substitute
from .gsb import (
    CompositionRecord,
    CompositionSite,
    Presentation,
    complete,
    compose,
    find_sites,
    ideal_member,
    intersection_equals_product,
    is_gsb,
    is_trivial,
    reduce,
    reduced_basis_words,
)
from .parse import format_expr, parse_expr, parse_presentation

__version__ = "0.1.0"
