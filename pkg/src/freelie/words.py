"""Ordered alphabets, associative words and Lyndon-Shirshov combinatorics.

Words are stored as *code strings*: every letter of an :class:`Alphabet` is
mapped to a single private code character whose code point grows with the
letter's rank (rank 0 is the greatest letter).  With that encoding the
lexicographic order used throughout the package (a nonempty word is smaller
than the empty word, a proper prefix is greater than its extensions) is
exactly the *reverse* of Python's built-in string order, and equal-length
comparisons reduce to a plain first-difference test.  The alphabet is applied
once, when a spelling is encoded; no global state is involved.

The empty word is the empty string.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DomainError, InputError, InvariantViolation

CODE_BASE = 0x100

GREEK_ALIASES = {
    "alpha": "α",
    "beta": "β",
    "gamma": "γ",
    "delta": "δ",
    "epsilon": "ε",
}

_RESERVED = set("[](),+-*/#<>= \t\r\n")


class Alphabet:
    """A finite alphabet with a strict total order.

    ``letters`` lists the letters from the greatest to the smallest, so the
    position of a letter is its rank.
    """

    __slots__ = ("letters", "_rank", "_tokens")

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise InputError("alphabet must contain at least one letter")
        seen = set()
        for name in letters:
            if not isinstance(name, str) or not name:
                raise InputError(f"invalid letter name {name!r}")
            if any(ch in _RESERVED for ch in name) or name[0].isdigit():
                raise InputError(f"invalid letter name {name!r}")
            if name in seen:
                raise InputError(f"duplicate letter {name!r} in alphabet")
            seen.add(name)
        self.letters = letters
        self._rank = {name: i for i, name in enumerate(letters)}
        tokens = dict(self._rank)
        for alias, greek in GREEK_ALIASES.items():
            if greek in self._rank and alias not in tokens:
                tokens[alias] = self._rank[greek]
            elif alias in self._rank and greek not in tokens:
                tokens[greek] = self._rank[alias]
        self._tokens = tokens

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        """Build an alphabet from ``"x > z > y"`` (greatest letter first)."""
        names = [part.strip() for part in text.split(">")]
        if any(not name for name in names):
            raise InputError(f"malformed alphabet declaration {text!r}")
        return cls(names)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({' > '.join(self.letters)!r})"

    def __reduce__(self):
        return (Alphabet, (self.letters,))

    def rank(self, letter: str) -> int:
        try:
            return self._tokens[letter]
        except KeyError:
            raise InputError(f"letter {letter!r} is not in the alphabet") from None

    def code(self, letter: str) -> str:
        return chr(CODE_BASE + self.rank(letter))

    def letter(self, code: str) -> str:
        rank = ord(code) - CODE_BASE
        if not 0 <= rank < len(self.letters):
            raise InputError(f"code {code!r} does not belong to this alphabet")
        return self.letters[rank]

    def tokenize(self, text: str) -> list[str]:
        """Split a spelling into letter names by greedy longest match."""
        out = []
        pos = 0
        longest = max(len(t) for t in self._tokens)
        while pos < len(text):
            for size in range(min(longest, len(text) - pos), 0, -1):
                piece = text[pos:pos + size]
                if piece in self._tokens:
                    out.append(piece)
                    pos += size
                    break
            else:
                raise InputError(f"unknown letter at {text[pos:]!r}")
        return out

    def word(self, spelling: str | Sequence[str] = "") -> str:
        """Encode a spelling into a code word.

        A string without whitespace is tokenized greedily (``"xzy"``,
        ``"xuuαz"``); a string with whitespace is split on it
        (``"alpha u z"``); a sequence is read as one letter per item.
        """
        if isinstance(spelling, str):
            names = spelling.split() if any(c.isspace() for c in spelling) else self.tokenize(spelling)
        else:
            names = list(spelling)
        return "".join(self.code(name) for name in names)

    def spell(self, word: str, sep: str | None = None) -> str:
        names = [self.letter(c) for c in word]
        if sep is None:
            sep = "" if all(len(n) == 1 for n in self.letters) else " "
        return sep.join(names) if names else "1"

    def names(self) -> list[str]:
        """Every accepted spelling of a letter, aliases included."""
        return list(self._tokens)

    def codes(self) -> list[str]:
        return [chr(CODE_BASE + i) for i in range(len(self.letters))]

    def contains_word(self, word: str) -> bool:
        n = len(self.letters)
        return all(0 <= ord(c) - CODE_BASE < n for c in word)


class Occurrence(NamedTuple):
    """A factor of a host word: ``host[start:start + length]``."""

    start: int
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length

    def check(self, host: str) -> str:
        """Validate against ``host`` and return the covered subword."""
        if self.length < 1 or self.start < 0 or self.end > len(host):
            raise InputError(f"occurrence {tuple(self)} out of range for a word of length {len(host)}")
        return host[self.start:self.end]


class Tree:
    """Nonassociative word: a leaf letter or a bracket ``[left, right]``."""

    __slots__ = ("word", "left", "right", "_hash")

    def __init__(self, word: str, left: "Tree | None" = None, right: "Tree | None" = None):
        self.word = word
        self.left = left
        self.right = right
        self._hash = hash((word, left, right))

    @classmethod
    def leaf(cls, letter: str) -> "Tree":
        if len(letter) != 1:
            raise InputError("a leaf holds exactly one letter code")
        return cls(letter)

    @classmethod
    def node(cls, left: "Tree", right: "Tree") -> "Tree":
        return cls(left.word + right.word, left, right)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __len__(self) -> int:
        return len(self.word)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tree) or self._hash != other._hash or self.word != other.word:
            return False
        return self.left == other.left and self.right == other.right

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tree({self._raw()})"

    def __reduce__(self):
        return (Tree, (self.word, self.left, self.right))

    def _raw(self) -> str:
        if self.is_leaf:
            return str(ord(self.word) - CODE_BASE)
        return f"[{self.left._raw()},{self.right._raw()}]"

    def format(self, alphabet: Alphabet) -> str:
        """Nested bracket notation, e.g. ``[[x,z],y]``."""
        if self.is_leaf:
            return alphabet.letter(self.word)
        return f"[{self.left.format(alphabet)},{self.right.format(alphabet)}]"

    def subtrees(self, start: int = 0) -> Iterator[tuple[int, "Tree"]]:
        """Yield ``(start, subtree)`` for every subtree, preorder."""
        yield start, self
        if not self.is_leaf:
            yield from self.left.subtrees(start)
            yield from self.right.subtrees(start + len(self.left.word))

    def subtree_at(self, start: int, length: int) -> "Tree | None":
        """The subtree whose leaf span is exactly ``[start, start + length)``."""
        node, offset = self, 0
        while True:
            if offset == start and len(node.word) == length:
                return node
            if node.is_leaf:
                return None
            split = offset + len(node.left.word)
            if start + length <= split:
                node = node.left
            elif start >= split:
                node, offset = node.right, split
            else:
                return None

    def replace_at(self, start: int, length: int, new: "Tree") -> "Tree":
        """Return a copy with the subtree spanning ``[start, start+length)`` replaced."""
        if new.word != self.word[start:start + length]:
            raise InvariantViolation("replacement must keep the associative word")
        return _replace(self, 0, start, length, new)


def _replace(node: Tree, offset: int, start: int, length: int, new: Tree) -> Tree:
    if offset == start and len(node.word) == length:
        return new
    if node.is_leaf:
        raise InputError(f"no subtree spans ({start}, {length})")
    split = offset + len(node.left.word)
    if start + length <= split:
        return Tree.node(_replace(node.left, offset, start, length, new), node.right)
    if start >= split:
        return Tree.node(node.left, _replace(node.right, split, start, length, new))
    raise InputError(f"no subtree spans ({start}, {length})")


def left_normed_tree(trees: Sequence[Tree]) -> Tree:
    """``[...[[t1, t2], t3], ..., tn]``."""
    if not trees:
        raise InputError("left-normed bracket of nothing")
    acc = trees[0]
    for t in trees[1:]:
        acc = Tree.node(acc, t)
    return acc


# -- orders -------------------------------------------------------------------


def lex_compare(u: str, v: str) -> int:
    """Compare in the lexicographic order; returns -1, 0 or 1.

    Any nonempty word is smaller than the empty word; otherwise the first
    letters decide and ties recurse on the tails.
    """
    i = 0
    while True:
        if i == len(u):
            return 0 if i == len(v) else 1
        if i == len(v):
            return -1
        if u[i] != v[i]:
            # smaller code = greater letter
            return 1 if u[i] < v[i] else -1
        i += 1


def deglex_compare(u: str, v: str) -> int:
    """Degree-lexicographic comparison: shorter words are smaller."""
    if len(u) != len(v):
        return -1 if len(u) < len(v) else 1
    return lex_compare(u, v)


def lead_key(w: str) -> tuple[int, str]:
    """Sort key that puts deg-lex *greater* words first (use with ``min``/``sorted``)."""
    return (-len(w), w)


def deglex_key(w: str) -> tuple[int, tuple[int, ...]]:
    """Ascending deg-lex sort key."""
    return (len(w), tuple(-ord(c) for c in w))


# -- Lyndon-Shirshov words ----------------------------------------------------


@lru_cache(maxsize=None)
def is_als(w: str) -> bool:
    """True iff ``w`` is strictly greater than each of its nontrivial rotations."""
    if not w:
        raise InputError("the empty word is not a Lyndon-Shirshov word")
    # equal lengths: greater in our order == smaller code string
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def ls_factorize(w: str) -> tuple[str, ...]:
    """Unique factorization ``w = c1 c2 ... cn`` into ALS words with c1 <= ... <= cn.

    Each factor is the longest ALS prefix of what remains.
    """
    if not w:
        raise InputError("cannot factorize the empty word")
    factors = []
    rest = w
    while rest:
        for k in range(len(rest), 0, -1):
            if is_als(rest[:k]):
                factors.append(rest[:k])
                rest = rest[k:]
                break
    return tuple(factors)


def longest_als_suffix(w: str) -> str:
    for k in range(1, len(w)):
        if is_als(w[k:]):
            return w[k:]
    raise DomainError("word of length < 2 has no proper suffix")


@lru_cache(maxsize=None)
def canonical_bracket(w: str) -> Tree:
    """The Lyndon-Shirshov bracketing ``[w]`` of an ALS word.

    ``[x] = x`` and ``[w] = [[u][v]]`` where ``v`` is the longest proper ALS
    suffix of ``w``.
    """
    if not w or not is_als(w):
        raise DomainError("canonical bracketing needs an associative Lyndon-Shirshov word")
    if len(w) == 1:
        return Tree(w)
    v = longest_als_suffix(w)
    return Tree.node(canonical_bracket(w[: len(w) - len(v)]), canonical_bracket(v))


def is_ls_tree(t: Tree) -> bool:
    """Check the three conditions defining a nonassociative Lyndon-Shirshov word."""
    if not is_als(t.word):
        return False
    if t.is_leaf:
        return True
    if not (is_ls_tree(t.left) and is_ls_tree(t.right)):
        return False
    if not t.left.is_leaf and lex_compare(t.left.right.word, t.right.word) > 0:
        return False
    return True


def factor_containing(factors: Sequence[str], occ: Occurrence) -> int:
    """Index of the factor that contains the occurrence entirely.

    The factors must be the ALS factorization of their concatenation and the
    occurrence must cover an ALS word; then such a factor always exists.
    """
    host = "".join(factors)
    occ.check(host)
    pos = 0
    for index, c in enumerate(factors):
        if pos <= occ.start and occ.end <= pos + len(c):
            return index
        if occ.start < pos + len(c):
            break
        pos += len(c)
    raise InvariantViolation(f"ALS occurrence {tuple(occ)} straddles a factor boundary")


# -- enumeration --------------------------------------------------------------


def all_words(alphabet: Alphabet, n: int) -> Iterator[str]:
    for letters in product(alphabet.codes(), repeat=n):
        yield "".join(letters)


def als_words(alphabet: Alphabet, max_len: int) -> list[str]:
    """All ALS words of length <= ``max_len``, by Duval's generation scheme."""
    k = len(alphabet)
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append("".join(chr(CODE_BASE + r) for r in w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def als_words_of_length(alphabet: Alphabet, n: int) -> list[str]:
    return [w for w in als_words(alphabet, n) if len(w) == n]


def als_occurrences(w: str) -> list[Occurrence]:
    """Every occurrence of an ALS factor in ``w``."""
    return [
        Occurrence(i, k)
        for i in range(len(w))
        for k in range(1, len(w) - i + 1)
        if is_als(w[i:i + k])
    ]


def find_all(host: str, sub: str) -> list[int]:
    """Start positions of (possibly overlapping) occurrences of ``sub`` in ``host``."""
    out = []
    i = host.find(sub)
    while i >= 0:
        out.append(i)
        i = host.find(sub, i + 1)
    return out
