"""Exact dyadic rationals and the ring of numbers a + b*sqrt(2) over them.

Nothing in this package ever touches floating point. Dyadics are the
points Thompson's group acts on; ``QuadDyadic`` holds Haar coefficients,
which pick up factors of sqrt(2) from odd powers of two in slopes.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Union

__all__ = [
    "Dyadic",
    "QuadDyadic",
    "dyadic_make",
    "log2_quotient",
    "sqrt_pow2",
    "parse_dyadic",
    "parse_quad",
]


def _trailing_zeros(n: int) -> int:
    return (n & -n).bit_length() - 1


class Dyadic:
    """The number ``num / 2**exp`` in canonical form.

    Canonical means ``exp == 0`` or ``num`` is odd, and zero is ``(0, 0)``.
    There is deliberately no division operator; use :meth:`scale` for
    powers of two and :func:`log2_quotient` to test power-of-two ratios.
    """

    __slots__ = ("num", "exp", "_h")

    def __init__(self, num: int = 0, exp: int = 0):
        if not isinstance(num, int) or not isinstance(exp, int):
            raise TypeError("Dyadic needs integer numerator and exponent")
        if exp < 0:
            num <<= -exp
            exp = 0
        if num == 0:
            exp = 0
        elif exp and not num & 1:
            s = min(_trailing_zeros(num), exp)
            num >>= s
            exp -= s
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    def __reduce__(self):
        return (Dyadic, (self.num, self.exp))

    # -- conversions --------------------------------------------------

    @classmethod
    def coerce(cls, x) -> "Dyadic":
        if isinstance(x, Dyadic):
            return x
        if isinstance(x, bool):
            raise TypeError("refusing to coerce bool")
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, Fraction):
            d = x.denominator
            if d & (d - 1):
                raise ValueError(f"{x} is not a dyadic rational")
            return cls(x.numerator, d.bit_length() - 1)
        if isinstance(x, str):
            return parse_dyadic(x)
        raise TypeError(f"cannot interpret {x!r} as a dyadic rational")

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    @property
    def denominator(self) -> int:
        return 1 << self.exp

    def is_integer(self) -> bool:
        return self.exp == 0

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Dyadic):
            if not isinstance(other, int):
                return NotImplemented
            other = Dyadic(other)
        e1, e2 = self.exp, other.exp
        if e1 >= e2:
            return Dyadic(self.num + (other.num << (e1 - e2)), e1)
        return Dyadic((self.num << (e2 - e1)) + other.num, e2)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    def __pos__(self) -> "Dyadic":
        return self

    def __abs__(self) -> "Dyadic":
        return self if self.num >= 0 else -self

    def __sub__(self, other):
        if not isinstance(other, Dyadic):
            if not isinstance(other, int):
                return NotImplemented
            other = Dyadic(other)
        return self + (-other)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return Dyadic(other) - self

    def __mul__(self, other):
        if isinstance(other, Dyadic):
            return Dyadic(self.num * other.num, self.exp + other.exp)
        if isinstance(other, int) and not isinstance(other, bool):
            return Dyadic(self.num * other, self.exp)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, k: int) -> "Dyadic":
        """Multiply by ``2**k``; ``k`` may be negative."""
        if k >= 0:
            if k >= self.exp:
                return Dyadic(self.num << (k - self.exp), 0)
            return Dyadic(self.num, self.exp - k)
        return Dyadic(self.num, self.exp - k)

    def half(self) -> "Dyadic":
        return self.scale(-1)

    # -- order --------------------------------------------------------

    def _cmp(self, other: "Dyadic") -> int:
        e1, e2 = self.exp, other.exp
        if e1 >= e2:
            a, b = self.num, other.num << (e1 - e2)
        else:
            a, b = self.num << (e2 - e1), other.num
        return (a > b) - (a < b)

    def compare(self, other) -> int:
        """Return -1, 0 or 1."""
        return self._cmp(Dyadic.coerce(other))

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        if isinstance(other, int) and not isinstance(other, bool):
            return self.exp == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        try:
            return self._h
        except AttributeError:
            pass
        # agrees with int hashing so Dyadic(3) and 3 collide as dict keys
        h = hash(self.num) if self.exp == 0 else hash((self.num, self.exp))
        object.__setattr__(self, "_h", h)
        return h

    def __lt__(self, other):
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(Dyadic.coerce(other)) < 0

    def __le__(self, other):
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(Dyadic.coerce(other)) <= 0

    def __gt__(self, other):
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(Dyadic.coerce(other)) > 0

    def __ge__(self, other):
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(Dyadic.coerce(other)) >= 0

    def __bool__(self):
        return self.num != 0

    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    # -- text ---------------------------------------------------------

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __repr__(self):
        return f"Dyadic({str(self)!r})"


DyadicLike = Union[Dyadic, int, Fraction, str]


def dyadic_make(num: int, exp: int) -> Dyadic:
    """Canonical dyadic ``num / 2**exp`` (``exp`` non-negative)."""
    if exp < 0:
        raise ValueError("exp must be non-negative")
    return Dyadic(num, exp)


_DYADIC_RE = re.compile(
    r"^\s*(?P<num>[+-]?\d+)\s*(?:/\s*(?:(?P<den>\d+)|2\s*\^\s*(?P<e>\d+)))?\s*$"
)


def parse_dyadic(text: str) -> Dyadic:
    """Parse ``"3/8"``, ``"-5"`` or ``"3/2^3"``."""
    m = _DYADIC_RE.match(text)
    if not m:
        raise ValueError(f"malformed dyadic {text!r}")
    num = int(m.group("num"))
    if m.group("e") is not None:
        return Dyadic(num, int(m.group("e")))
    if m.group("den") is not None:
        den = int(m.group("den"))
        if den <= 0 or den & (den - 1):
            raise ValueError(f"denominator of {text!r} is not a power of two")
        return Dyadic(num, den.bit_length() - 1)
    return Dyadic(num)


def log2_quotient(x: Dyadic, y: Dyadic) -> Optional[int]:
    """Return ``k`` with ``x / y == 2**k``, or ``None`` if no such integer exists.

    Only positive quotients qualify.
    """
    if not x or not y or (x.num > 0) != (y.num > 0):
        return None
    a, b = abs(x.num), abs(y.num)
    sa, sb = _trailing_zeros(a), _trailing_zeros(b)
    if a >> sa != b >> sb:
        return None
    return (sa - x.exp) - (sb - y.exp)


class QuadDyadic:
    """Exact number ``a + b*sqrt(2)`` with dyadic ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a: DyadicLike = 0, b: DyadicLike = 0):
        object.__setattr__(self, "a", Dyadic.coerce(a))
        object.__setattr__(self, "b", Dyadic.coerce(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadDyadic is immutable")

    def __reduce__(self):
        return (QuadDyadic, (self.a, self.b))

    @classmethod
    def coerce(cls, x) -> "QuadDyadic":
        if isinstance(x, QuadDyadic):
            return x
        if isinstance(x, str):
            return parse_quad(x)
        return cls(Dyadic.coerce(x), 0)

    def __add__(self, other):
        other = _as_quad(other)
        if other is None:
            return NotImplemented
        return QuadDyadic(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadDyadic(-self.a, -self.b)

    def __sub__(self, other):
        other = _as_quad(other)
        if other is None:
            return NotImplemented
        return QuadDyadic(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _as_quad(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, Dyadic) or (isinstance(other, int) and not isinstance(other, bool)):
            return QuadDyadic(self.a * other, self.b * other)
        other = _as_quad(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return QuadDyadic(a * c + (b * d).scale(1), a * d + b * c)

    __rmul__ = __mul__

    def scale(self, k: int) -> "QuadDyadic":
        """Multiply by ``2**k``."""
        return QuadDyadic(self.a.scale(k), self.b.scale(k))

    def times_sqrt2(self) -> "QuadDyadic":
        # (a + b r) r = 2b + a r
        return QuadDyadic(self.b.scale(1), self.a)

    def conjugate(self) -> "QuadDyadic":
        return QuadDyadic(self.a, -self.b)

    def is_rational(self) -> bool:
        return not self.b

    def __eq__(self, other):
        other = _as_quad(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def sign(self) -> int:
        """Sign of the real number ``a + b*sqrt(2)``, decided exactly."""
        sa, sb = self.a.sign(), self.b.sign()
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 2 b^2
        diff = (self.a * self.a) - (self.b * self.b).scale(1)
        return sa * diff.sign()

    def __str__(self):
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*sqrt2"
        if self.b.sign() < 0:
            return f"{self.a}-{-self.b}*sqrt2"
        return f"{self.a}+{self.b}*sqrt2"

    def __repr__(self):
        return f"QuadDyadic({str(self)!r})"


def _as_quad(x) -> Optional[QuadDyadic]:
    if isinstance(x, QuadDyadic):
        return x
    if isinstance(x, Dyadic):
        return QuadDyadic(x, 0)
    if isinstance(x, int) and not isinstance(x, bool):
        return QuadDyadic(Dyadic(x), 0)
    return None


def parse_quad(text: str) -> QuadDyadic:
    """Parse the ``a+b*sqrt2`` format, e.g. ``"1/4+1/2*sqrt2"``, ``"-sqrt2"``, ``"3/8"``."""
    s = text.replace(" ", "")
    if not s.endswith("sqrt2"):
        return QuadDyadic(parse_dyadic(s), 0)
    rest = s[: -len("sqrt2")]
    if rest.endswith("*"):
        rest = rest[:-1]
    cut = max(rest.rfind("+"), rest.rfind("-"))
    if cut > 0:
        a_text, b_text = rest[:cut], rest[cut:]
    else:
        a_text, b_text = "0", rest
    if b_text in ("", "+"):
        b = Dyadic(1)
    elif b_text == "-":
        b = Dyadic(-1)
    else:
        b = parse_dyadic(b_text)
    return QuadDyadic(parse_dyadic(a_text), b)


def sqrt_pow2(k: int) -> QuadDyadic:
    """``2**(k/2)`` as an exact ``QuadDyadic``."""
    if k % 2 == 0:
        return QuadDyadic(Dyadic(1).scale(k // 2), 0)
    return QuadDyadic(0, Dyadic(1).scale((k - 1) // 2))
