"""Elements of Thompson's group F as piecewise-linear maps of [0, 1].

Products follow the right-action convention used throughout the package:
``compose(f, g)`` is the element ``fg`` with ``(fg)(t) = g(f(t))``.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from .exact import Dyadic, log2_quotient, parse_dyadic

__all__ = [
    "PLHomeo",
    "IDENTITY",
    "generator",
    "generator_inverse",
    "compose",
    "invert",
    "evaluate",
    "validate_membership",
    "stab_split",
    "stab_join",
    "HALF",
]

ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


class PLHomeo:
    """A PL homeomorphism of [0, 1] with dyadic breakpoints and slopes ``2**k``.

    Instances are always canonical (no redundant breakpoints), so ``==`` and
    ``hash`` are group-element equality. Construction raises ``ValueError``
    for anything that is not an element of F.
    """

    __slots__ = ("breakpoints", "values", "slopes", "_hash")

    def __init__(self, breakpoints: Iterable, values: Iterable):
        xs = tuple(Dyadic.coerce(x) for x in breakpoints)
        ys = tuple(Dyadic.coerce(y) for y in values)
        if len(xs) != len(ys) or len(xs) < 2:
            raise ValueError("need matching breakpoint and value sequences of length >= 2")
        if xs[0] != ZERO or xs[-1] != ONE or ys[0] != ZERO or ys[-1] != ONE:
            raise ValueError("endpoints must be fixed: f(0) = 0 and f(1) = 1")
        bx, by, slopes = [xs[0]], [ys[0]], []
        for i in range(1, len(xs)):
            dx, dy = xs[i] - xs[i - 1], ys[i] - ys[i - 1]
            if dx.sign() <= 0 or dy.sign() <= 0:
                raise ValueError("breakpoints and values must be strictly increasing")
            k = log2_quotient(dy, dx)
            if k is None:
                raise ValueError(f"slope {dy}/{dx} on segment {i - 1} is not a power of 2")
            if slopes and slopes[-1] == k:
                bx[-1], by[-1] = xs[i], ys[i]
            else:
                bx.append(xs[i])
                by.append(ys[i])
                slopes.append(k)
        self.breakpoints: Tuple[Dyadic, ...] = tuple(bx)
        self.values: Tuple[Dyadic, ...] = tuple(by)
        self.slopes: Tuple[int, ...] = tuple(slopes)
        self._hash = hash((self.breakpoints, self.values))

    @classmethod
    def _trusted(cls, xs, ys, slopes) -> "PLHomeo":
        self = object.__new__(cls)
        self.breakpoints, self.values, self.slopes = tuple(xs), tuple(ys), tuple(slopes)
        self._hash = hash((self.breakpoints, self.values))
        return self

    def __eq__(self, other):
        if not isinstance(other, PLHomeo):
            return NotImplemented
        return self.breakpoints == other.breakpoints and self.values == other.values

    def __hash__(self):
        return self._hash

    def __call__(self, t) -> Dyadic:
        return evaluate(self, t)

    def __mul__(self, other: "PLHomeo") -> "PLHomeo":
        return compose(self, other)

    def __invert__(self) -> "PLHomeo":
        return invert(self)

    def is_identity(self) -> bool:
        return len(self.breakpoints) == 2 and self.slopes == (0,)

    def interior_breakpoints(self) -> Tuple[Dyadic, ...]:
        return self.breakpoints[1:-1]

    def slope_log2_at(self, t: Dyadic) -> int:
        """log2 of the right derivative at ``t`` (left derivative at 1)."""
        i = bisect_right(self.breakpoints, t) - 1
        return self.slopes[min(i, len(self.slopes) - 1)]

    def pairs(self) -> Tuple[Tuple[Dyadic, Dyadic], ...]:
        return tuple(zip(self.breakpoints, self.values))

    def to_text(self) -> str:
        return "[" + ", ".join(f"({x}, {y})" for x, y in self.pairs()) + "]"

    __str__ = to_text

    def __repr__(self):
        return f"PLHomeo({self.to_text()})"

    @classmethod
    def from_text(cls, text: str) -> "PLHomeo":
        """Inverse of :meth:`to_text`: ``"[(0, 0), (1/2, 1/4), ..., (1, 1)]"``."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError("expected a bracketed list of (breakpoint, value) pairs")
        pairs = []
        for chunk in body[1:-1].split(")"):
            chunk = chunk.strip().lstrip(",").strip()
            if not chunk:
                continue
            if not chunk.startswith("("):
                raise ValueError(f"malformed pair near {chunk!r}")
            x, y = chunk[1:].split(",")
            pairs.append((parse_dyadic(x), parse_dyadic(y)))
        return cls([p[0] for p in pairs], [p[1] for p in pairs])


IDENTITY = PLHomeo([0, 1], [0, 1])


def evaluate(f: PLHomeo, t) -> Dyadic:
    """Exact image ``f(t)`` for dyadic ``t`` in [0, 1]."""
    t = Dyadic.coerce(t)
    if t < ZERO or t > ONE:
        raise ValueError(f"{t} lies outside [0, 1]")
    xs = f.breakpoints
    i = bisect_right(xs, t) - 1
    if i >= len(f.slopes):
        return ONE
    return f.values[i] + (t - xs[i]).scale(f.slopes[i])


def _evaluate_unchecked(f: PLHomeo, t: Dyadic) -> Dyadic:
    xs = f.breakpoints
    i = bisect_right(xs, t) - 1
    if i >= len(f.slopes):
        return ONE
    return f.values[i] + (t - xs[i]).scale(f.slopes[i])


def invert(f: PLHomeo) -> PLHomeo:
    return PLHomeo._trusted(f.values, f.breakpoints, [-k for k in f.slopes])


def compose(f: PLHomeo, g: PLHomeo) -> PLHomeo:
    """The product ``fg``: first ``f``, then ``g``."""
    if g.is_identity():
        return f
    if f.is_identity():
        return g
    finv = invert(f)
    pts = set(f.breakpoints)
    pts.update(_evaluate_unchecked(finv, b) for b in g.interior_breakpoints())
    xs = sorted(pts)
    ys = [_evaluate_unchecked(g, _evaluate_unchecked(f, x)) for x in xs]
    return _canonical(xs, ys)


def _canonical(xs: Sequence[Dyadic], ys: Sequence[Dyadic]) -> PLHomeo:
    bx, by, slopes = [xs[0]], [ys[0]], []
    for i in range(1, len(xs)):
        k = log2_quotient(ys[i] - ys[i - 1], xs[i] - xs[i - 1])
        if k is None:
            raise AssertionError("composition left the group; this is a bug")
        if slopes and slopes[-1] == k:
            bx[-1], by[-1] = xs[i], ys[i]
        else:
            bx.append(xs[i])
            by.append(ys[i])
            slopes.append(k)
    return PLHomeo._trusted(bx, by, slopes)


X0 = PLHomeo(["0", "1/2", "3/4", "1"], ["0", "1/4", "1/2", "1"])
X1 = PLHomeo(["0", "1/2", "3/4", "7/8", "1"], ["0", "1/2", "5/8", "3/4", "1"])


@lru_cache(maxsize=None)
def generator(n: int) -> PLHomeo:
    """The generator ``x_n``.

    For ``n >= 2`` this is the product ``x0^(n-1) x1 x0^-(n-1)``, which
    moves exactly the interval ``[1 - 2**-n, 1]``.
    """
    if n < 0:
        raise ValueError("generator index must be non-negative")
    if n == 0:
        return X0
    if n == 1:
        return X1
    return compose(compose(X0, generator(n - 1)), invert(X0))


@lru_cache(maxsize=None)
def generator_inverse(n: int) -> PLHomeo:
    return invert(generator(n))


def _to_fraction(x) -> Fraction:
    if isinstance(x, Dyadic):
        return x.to_fraction()
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def validate_membership(f) -> bool:
    """True iff ``f`` is an element of F.

    ``f`` may be a :class:`PLHomeo` or any sequence of ``(x, f(x))`` pairs
    whose entries are ints, fractions, dyadics or strings like ``"1/3"``.
    """
    if isinstance(f, PLHomeo):
        pairs = f.pairs()
    else:
        pairs = list(f)
    try:
        xs = [_to_fraction(p[0]) for p in pairs]
        ys = [_to_fraction(p[1]) for p in pairs]
    except (ValueError, ZeroDivisionError, TypeError):
        return False
    for v in xs + ys:
        d = v.denominator
        if d & (d - 1):
            return False
    try:
        PLHomeo([Dyadic.coerce(x) for x in xs], [Dyadic.coerce(y) for y in ys])
    except ValueError:
        return False
    return True


def stab_split(f: PLHomeo) -> Tuple[PLHomeo, PLHomeo]:
    """Split an element fixing 1/2 into its rescaled left and right halves.

    Left half: ``t -> 2 f(t/2)``; right half: ``t -> 2 f((t+1)/2) - 1``.
    """
    if evaluate(f, HALF) != HALF:
        raise ValueError("element does not fix 1/2")
    pairs = f.pairs()
    cut = f.breakpoints.index(HALF) if HALF in f.breakpoints else None
    if cut is None:
        # 1/2 sits inside a linear piece: insert it as a breakpoint
        i = bisect_right(f.breakpoints, HALF)
        pairs = pairs[:i] + ((HALF, HALF),) + pairs[i:]
        cut = i
    left = pairs[: cut + 1]
    right = pairs[cut:]
    fl = PLHomeo([x.scale(1) for x, _ in left], [y.scale(1) for _, y in left])
    fr = PLHomeo([x.scale(1) - 1 for x, _ in right], [y.scale(1) - 1 for _, y in right])
    return fl, fr


def stab_join(fl: PLHomeo, fr: PLHomeo) -> PLHomeo:
    """Inverse of :func:`stab_split`."""
    xs = [x.half() for x in fl.breakpoints] + [(x + 1).half() for x in fr.breakpoints[1:]]
    ys = [y.half() for y in fl.values] + [(y + 1).half() for y in fr.values[1:]]
    return PLHomeo(xs, ys)
