"""Generator words and the forest-diagram model of the positive monoid P.

A tree is either ``None`` (a single node) or a pair ``(left, right)`` of
trees; a caret is ``(None, None)``. A :class:`BinaryForest` stores the
trees up to the last nontrivial one, the infinite tail of single nodes
being implicit, so structural equality is equality in P.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .plhomeo import IDENTITY, PLHomeo, compose, generator, generator_inverse

if TYPE_CHECKING:
    from .report import Report

__all__ = [
    "Word",
    "BinaryForest",
    "CARET",
    "forest_generator",
    "forest_product",
    "word_to_forest",
    "word_to_plhomeo",
    "forest_to_word",
    "free_words",
    "lemma1_check",
    "lemma2_check",
    "descriptor_index",
    "verify_relations",
    "verify_free_subsemigroup",
    "verify_lemmas",
    "verify_forest_oracle",
]

Tree = Optional[tuple]
CARET: Tree = (None, None)


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class Word:
    """A formal word in the generators ``x_k`` and their inverses.

    ``letters`` is a tuple of ``(index, sign)`` pairs, sign being +1 or -1.
    No free reduction is performed.
    """

    letters: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if i < 0 or s not in (1, -1):
                raise ValueError(f"bad letter x{i}^{s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def positive(cls, indices: Iterable[int]) -> "Word":
        return cls(tuple((i, 1) for i in indices))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"x0 x2^-1 x1"``; the empty string (or ``"e"``) is the empty word."""
        letters = []
        for tok in text.replace(",", " ").split():
            if tok in ("e", "1", "id"):
                continue
            if not tok.startswith("x"):
                raise ValueError(f"malformed generator token {tok!r}")
            body, _, power = tok[1:].partition("^")
            if not body.isdigit():
                raise ValueError(f"malformed generator token {tok!r}")
            if power in ("", "1", "+1"):
                sign = 1
            elif power == "-1":
                sign = -1
            else:
                raise ValueError(f"only exponents 1 and -1 are allowed: {tok!r}")
            letters.append((int(body), sign))
        return cls(tuple(letters))

    def __str__(self):
        if not self.letters:
            return ""
        return " ".join(f"x{i}" if s == 1 else f"x{i}^-1" for i, s in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((i, -s) for i, s in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(s == 1 for _, s in self.letters)

    def indices(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.letters)


WordLike = Union[Word, str, Sequence[int]]


def as_word(w: WordLike) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    return Word.positive(w)


def _positive_indices(w: WordLike) -> Tuple[int, ...]:
    word = as_word(w)
    if not word.is_positive():
        raise ValueError(f"word {word} contains inverse letters")
    return word.indices()


def word_to_plhomeo(w: WordLike) -> PLHomeo:
    """Evaluate a word as an element of F (letters applied left to right)."""
    f = IDENTITY
    for i, s in as_word(w):
        f = compose(f, generator(i) if s == 1 else generator_inverse(i))
    return f


def free_words(length: int, alphabet: Sequence[int] = (0, 1)) -> Iterator[Tuple[int, ...]]:
    """All positive words of the given length, in lexicographic order."""
    return product(alphabet, repeat=length)


# ---------------------------------------------------------------------------
# forests


def _leaves(t: Tree) -> int:
    if t is None:
        return 1
    return _leaves(t[0]) + _leaves(t[1])


def _carets(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + _carets(t[0]) + _carets(t[1])


def _tree_text(t: Tree) -> str:
    if t is None:
        return "."
    return f"({_tree_text(t[0])},{_tree_text(t[1])})"


class BinaryForest:
    """A bounded binary forest, trimmed of trailing single-node trees."""

    __slots__ = ("trees", "_hash")

    def __init__(self, trees: Iterable[Tree] = ()):
        ts = list(trees)
        while ts and ts[-1] is None:
            ts.pop()
        self.trees: Tuple[Tree, ...] = tuple(ts)
        self._hash = hash(self.trees)

    def __eq__(self, other):
        if not isinstance(other, BinaryForest):
            return NotImplemented
        return self.trees == other.trees

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.trees)

    def tree(self, k: int) -> Tree:
        return self.trees[k] if k < len(self.trees) else None

    def is_trivial(self) -> bool:
        return not self.trees

    def caret_count(self) -> int:
        """Number of carets; equals the length of every positive word for this element."""
        return sum(_carets(t) for t in self.trees)

    def leaf_count(self) -> int:
        """Leaves of the stored trees (the implicit tail is excluded)."""
        return sum(_leaves(t) for t in self.trees)

    def max_covered_leaf(self) -> int:
        """Index of the rightmost leaf lying under some caret, or -1."""
        return self.leaf_count() - 1 if self.trees else -1

    def add_caret(self, k: int) -> "BinaryForest":
        """Right-multiply by ``x_k``: join roots ``k`` and ``k + 1``."""
        ts = list(self.trees)
        if len(ts) < k + 2:
            ts.extend([None] * (k + 2 - len(ts)))
        ts[k : k + 2] = [(ts[k], ts[k + 1])]
        return BinaryForest(ts)

    def remove_caret(self, k: int) -> Optional["BinaryForest"]:
        """Right-divide by ``x_k`` inside P, or ``None`` when the result leaves P."""
        t = self.tree(k)
        if t is None:
            return None
        ts = list(self.trees)
        ts[k : k + 1] = [t[0], t[1]]
        return BinaryForest(ts)

    def to_text(self) -> str:
        return "[" + ", ".join(_tree_text(t) for t in self.trees) + "]"

    __str__ = to_text

    def __repr__(self):
        return f"BinaryForest({self.to_text()})"

    @classmethod
    def from_text(cls, text: str) -> "BinaryForest":
        s = text.replace(" ", "")
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError("forest text must be a bracketed list")
        pos = 1
        trees: List[Tree] = []

        def parse_tree() -> Tree:
            nonlocal pos
            if s[pos] == ".":
                pos += 1
                return None
            if s[pos] != "(":
                raise ValueError(f"unexpected {s[pos]!r} at {pos}")
            pos += 1
            left = parse_tree()
            if s[pos] != ",":
                raise ValueError(f"expected ',' at {pos}")
            pos += 1
            right = parse_tree()
            if s[pos] != ")":
                raise ValueError(f"expected ')' at {pos}")
            pos += 1
            return (left, right)

        while pos < len(s) - 1:
            trees.append(parse_tree())
            if s[pos] == ",":
                pos += 1
            elif pos != len(s) - 1:
                raise ValueError(f"unexpected {s[pos]!r} at {pos}")
        return cls(trees)


TRIVIAL = BinaryForest()


def forest_generator(n: int) -> BinaryForest:
    """The forest of ``x_n``: a single caret at root position ``n``."""
    if n < 0:
        raise ValueError("generator index must be non-negative")
    return BinaryForest([None] * n + [CARET])


def _graft(t: Tree, roots: Iterator[Tree]) -> Tree:
    if t is None:
        return next(roots)
    left = _graft(t[0], roots)
    return (left, _graft(t[1], roots))


def forest_product(f: BinaryForest, g: BinaryForest) -> BinaryForest:
    """The product ``fg``: stack ``g`` on top of ``f``, leaf ``i`` of ``g`` onto root ``i`` of ``f``."""
    if g.is_trivial():
        return f
    n = g.leaf_count()
    roots = list(f.trees[:n])
    roots.extend([None] * (n - len(roots)))
    it = iter(roots)
    out = [_graft(t, it) for t in g.trees]
    out.extend(f.trees[n:])
    return BinaryForest(out)


def word_to_forest(w: WordLike) -> BinaryForest:
    """Forest of a positive word, adding carets at the listed root positions in order."""
    forest = TRIVIAL
    for k in _positive_indices(w):
        forest = forest.add_caret(k)
    return forest


def forest_to_word(forest: BinaryForest) -> Tuple[int, ...]:
    """A positive word (as generator indices) whose forest is ``forest``.

    Root carets are peeled off the rightmost nontrivial tree one at a time.
    """
    letters = []
    while not forest.is_trivial():
        k = len(forest.trees) - 1
        letters.append(k)
        forest = forest.remove_caret(k)
    return tuple(reversed(letters))


# ---------------------------------------------------------------------------
# uniqueness lemmas
#
# Both lemmas quantify over every x_m w. Leaves are never renumbered by
# later carets, so the forest of x_m w covers leaf m + 1. Each caret extends
# the covered range by at most one leaf, so the forest of u = x_n v covers
# no leaf beyond n + |u|. Equal forests therefore force m <= n + |u| - 1;
# we enumerate m <= n + |u|, a safe superset.


@lru_cache(maxsize=256)
def descriptor_index(length: int, m_max: int) -> Dict[BinaryForest, Tuple[Tuple[int, Tuple[int, ...]], ...]]:
    """Map each forest of ``x_m w`` (``m <= m_max``, ``|w| = length``) to its descriptors ``(m, w)``."""
    index: Dict[BinaryForest, List[Tuple[int, Tuple[int, ...]]]] = {}
    tails = [(w, word_to_forest(w)) for w in free_words(length)]
    for m in range(m_max + 1):
        head = forest_generator(m)
        for w, fw in tails:
            index.setdefault(forest_product(head, fw), []).append((m, w))
    return {k: tuple(v) for k, v in index.items()}


def _unique_descriptor(n: int, tail: Tuple[int, ...]) -> bool:
    target = word_to_forest((n,) + tail)
    m_max = n + len(tail) + 1
    found = descriptor_index(len(tail), m_max).get(target, ())
    return found == ((n, tail),)


def _check_free(v: Tuple[int, ...], what: str):
    if any(i not in (0, 1) for i in v):
        raise ValueError(f"{what} must be a word over x0, x1")


def lemma1_check(n: int, v: WordLike) -> bool:
    """True iff ``x_n v`` equals no other ``x_m w`` (``w`` over x0, x1).

    Requires ``n >= 2`` and ``|v| <= n - 2``.
    """
    v = _positive_indices(v)
    _check_free(v, "v")
    if n < 2 or len(v) > n - 2:
        raise ValueError("lemma1_check needs n >= 2 and |v| <= n - 2")
    return _unique_descriptor(n, v)


def lemma2_check(n: int, v: WordLike, v_tail: WordLike) -> bool:
    """True iff ``x_n v x1 v'`` equals no other ``x_m w``; needs ``|v| = n - 2``."""
    v = _positive_indices(v)
    vt = _positive_indices(v_tail)
    _check_free(v, "v")
    _check_free(vt, "v'")
    if n < 2 or len(v) != n - 2:
        raise ValueError("lemma2_check needs n >= 2 and |v| = n - 2")
    return _unique_descriptor(n, v + (1,) + vt)


# ---------------------------------------------------------------------------
# reports


def verify_relations(n_max: int = 10) -> "Report":
    """``x_k x_n = x_{n+1} x_k`` for ``0 <= k < n <= n_max``, as PL maps and as forests."""
    from .report import Report

    rep = Report("verify_relations")
    for n in range(1, n_max + 1):
        for k in range(n):
            lhs = compose(generator(k), generator(n))
            rhs = compose(generator(n + 1), generator(k))
            rep.check("PL relation", lhs == rhs, k=k, n=n)
            fl = forest_product(forest_generator(k), forest_generator(n))
            fr = forest_product(forest_generator(n + 1), forest_generator(k))
            rep.check("forest relation", fl == fr, k=k, n=n)
            rep.check("forest product matches caret addition", fl == word_to_forest((k, n)), k=k, n=n)
    rep.details["n_max"] = n_max
    return rep


def verify_free_subsemigroup(length: int = 10) -> "Report":
    """All products of length ``<= length`` in ``a = x1`` and ``b = x0^-1 x1`` are distinct elements."""
    from .report import Report

    rep = Report("verify_free_subsemigroup")
    a = generator(1)
    b = compose(generator_inverse(0), generator(1))
    seen: Dict[PLHomeo, Tuple[int, ...]] = {}
    layer = [((), IDENTITY)]
    total = 0
    for _ in range(length):
        nxt = []
        for word, f in layer:
            for letter, step in ((0, a), (1, b)):
                w, h = word + (letter,), compose(f, step)
                total += 1
                other = seen.get(h)
                rep.check("products are distinct", other is None,
                          word=w, equal_to=other)
                seen.setdefault(h, w)
                nxt.append((w, h))
        layer = nxt
    rep.check("identity is not a nonempty product", IDENTITY not in seen)
    rep.check("count is 2^(l+1) - 2 nonempty products", len(seen) == 2 ** (length + 1) - 2, distinct=len(seen))
    rep.details.update({"length": length, "products": total + 1})
    return rep


def verify_lemmas(n1_max: int = 6, n2_max: int = 5, tail_max: int = 3) -> "Report":
    """Exhaustive uniqueness of the descriptors ``x_n v`` and ``x_n v x1 v'``."""
    from .report import Report

    rep = Report("verify_lemmas")
    for n in range(2, n1_max + 1):
        for L in range(n - 1):
            for v in free_words(L):
                rep.check("x_n v has a unique descriptor", lemma1_check(n, v), n=n, v=v)
    for n in range(2, n2_max + 1):
        for v in free_words(n - 2):
            for L in range(tail_max + 1):
                for vt in free_words(L):
                    rep.check("x_n v x1 v' has a unique descriptor", lemma2_check(n, v, vt), n=n, v=v, tail=vt)
    rep.details.update({"lemma1_n_max": n1_max, "lemma2_n_max": n2_max, "tail_max": tail_max})
    return rep


def verify_forest_oracle(length: int = 5, max_index: int = 4) -> "Report":
    """Forest equality and PL equality agree on all positive words of length ``<= length``."""
    from .report import Report

    rep = Report("verify_forest_oracle")
    by_forest: Dict[BinaryForest, PLHomeo] = {}
    by_pl: Dict[PLHomeo, BinaryForest] = {}
    words = 0
    for L in range(length + 1):
        for w in free_words(L, range(max_index + 1)):
            words += 1
            f, p = word_to_forest(w), word_to_plhomeo(w)
            rep.check("equal forests give equal maps", by_forest.setdefault(f, p) == p, word=w)
            rep.check("equal maps give equal forests", by_pl.setdefault(p, f) == f, word=w)
            rep.check("caret count equals word length", f.caret_count() == L, word=w)
    rep.details.update({"words": words, "elements": len(by_forest)})
    return rep
