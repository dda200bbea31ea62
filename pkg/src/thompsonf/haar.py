"""The unitary action of F on the Haar wavelet basis of L2[0, 1], computed exactly.

For ``g`` in F the operator is ``(pi_g u)(x) = sqrt((g^-1)'(x)) u(g^-1(x))``.
Slopes are powers of two, so every image of a basis function is a step
function with values in ``{a + b sqrt2}`` and has a finite expansion in the
basis. Products follow the package convention: ``pi`` of ``compose(f, g)``
is ``pi_f`` followed by ``pi_g``.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .exact import Dyadic, QuadDyadic, sqrt_pow2
from .graph import LabeledGraph
from .plhomeo import PLHomeo, evaluate, generator, invert
from .report import Report

__all__ = [
    "HaarIndex",
    "CONSTANT",
    "wavelet",
    "haar_point",
    "psi_inverse",
    "StepFunction",
    "HaarCombination",
    "basis_step",
    "pi_step",
    "expand_in_haar",
    "apply_pi",
    "apply_pi_combination",
    "reconstruct",
    "all_indices",
    "action_branches",
    "EXCEPTIONAL_INPUTS",
    "PRINTED_TABLES",
    "verify_action_equations",
    "verify_exceptional_tables",
    "verify_unitarity",
    "verify_homomorphism",
    "hilbert_schreier_graph",
    "verify_hilbert_graph",
    "matrix_slice",
]

ZERO, ONE = Dyadic(0), Dyadic(1)
QZERO, QONE = QuadDyadic(0), QuadDyadic(1)


@dataclass(frozen=True, order=True)
class HaarIndex:
    """``h^(i)_j`` for ``i >= 0``, ``1 <= j <= 2**i``; level ``-1`` is the constant function 1."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == -1:
            if self.j != 1:
                raise ValueError("the constant function has index (-1, 1)")
        elif self.i < 0 or not 1 <= self.j <= 2 ** self.i:
            raise ValueError(f"no Haar wavelet with i={self.i}, j={self.j}")

    @property
    def is_constant(self) -> bool:
        return self.i == -1

    def support(self) -> Tuple[Dyadic, Dyadic]:
        if self.is_constant:
            return ZERO, ONE
        return Dyadic(self.j - 1, self.i), Dyadic(self.j, self.i)

    def to_text(self) -> str:
        return "const" if self.is_constant else f"({self.i},{self.j})"

    def __str__(self):
        return "h^(0)" if self.is_constant else f"h^({self.i})_{self.j}"

    @classmethod
    def parse(cls, text: str) -> "HaarIndex":
        """Accepts ``"const"`` (also ``"h0"``, ``"constant"``) or ``"(i,j)"`` / ``"i,j"``."""
        s = text.strip().lower().replace(" ", "")
        if s in ("const", "constant", "h0", "h^(0)", "c"):
            return CONSTANT
        s = s.strip("()")
        parts = s.split(",")
        if len(parts) != 2:
            raise ValueError(f"cannot parse Haar index {text!r}")
        return cls(int(parts[0]), int(parts[1]))


CONSTANT = HaarIndex(-1, 1)


def wavelet(i: int, j: int) -> HaarIndex:
    return HaarIndex(i, j)


def all_indices(i_max: int) -> List[HaarIndex]:
    """The constant plus every wavelet of level at most ``i_max``."""
    out = [CONSTANT]
    for i in range(i_max + 1):
        out.extend(HaarIndex(i, j) for j in range(1, 2 ** i + 1))
    return out


def haar_point(i, j: Optional[int] = None) -> Dyadic:
    """The jump point ``(2j - 1) / 2**(i+1)`` of ``h^(i)_j``."""
    h = i if isinstance(i, HaarIndex) else HaarIndex(i, j)
    if h.is_constant:
        raise ValueError("the constant function has no jump point")
    return Dyadic(2 * h.j - 1, h.i + 1)


def psi_inverse(d) -> HaarIndex:
    """The wavelet whose jump point is the dyadic ``d`` in (0, 1)."""
    d = Dyadic.coerce(d)
    if d <= ZERO or d >= ONE:
        raise ValueError(f"{d} is not in (0, 1)")
    return HaarIndex(d.exp - 1, (d.num + 1) // 2)


# ---------------------------------------------------------------------------
# step functions and expansions


@dataclass(frozen=True)
class StepFunction:
    """A step function on [0, 1]: ``values[k]`` on ``(partition[k], partition[k+1])``."""

    partition: Tuple[Dyadic, ...]
    values: Tuple[QuadDyadic, ...]

    def __post_init__(self):
        p = tuple(Dyadic.coerce(x) for x in self.partition)
        v = tuple(QuadDyadic.coerce(x) for x in self.values)
        if len(p) < 2 or p[0] != ZERO or p[-1] != ONE or len(v) != len(p) - 1:
            raise ValueError("partition must run from 0 to 1 with one value per cell")
        if any(a >= b for a, b in zip(p, p[1:])):
            raise ValueError("partition must be strictly increasing")
        object.__setattr__(self, "partition", p)
        object.__setattr__(self, "values", v)

    def value_at(self, t) -> QuadDyadic:
        """Value on the cell containing ``t`` (right-continuous convention)."""
        t = Dyadic.coerce(t)
        k = min(bisect_right(self.partition, t) - 1, len(self.values) - 1)
        return self.values[k]

    def _cumulative(self) -> List[QuadDyadic]:
        acc, out = QZERO, [QZERO]
        for k, v in enumerate(self.values):
            acc = acc + v * (self.partition[k + 1] - self.partition[k])
            out.append(acc)
        return out

    def integral_to(self, t: Dyadic, cumulative: Optional[List[QuadDyadic]] = None) -> QuadDyadic:
        """Exact integral over ``[0, t]``."""
        cum = cumulative if cumulative is not None else self._cumulative()
        k = bisect_right(self.partition, t) - 1
        if k >= len(self.values):
            return cum[-1]
        return cum[k] + self.values[k] * (t - self.partition[k])

    def simplify(self) -> "StepFunction":
        """Merge neighbouring cells with equal values."""
        ps, vs = [self.partition[0]], []
        for k, v in enumerate(self.values):
            if vs and vs[-1] == v:
                ps[-1] = self.partition[k + 1]
            else:
                vs.append(v)
                ps.append(self.partition[k + 1])
        return StepFunction(tuple(ps), tuple(vs))

    def __add__(self, other: "StepFunction") -> "StepFunction":
        pts = sorted(set(self.partition) | set(other.partition))
        vals = [self.value_at((a + b).half()) + other.value_at((a + b).half()) for a, b in zip(pts, pts[1:])]
        return StepFunction(tuple(pts), tuple(vals))

    def scaled(self, c: QuadDyadic) -> "StepFunction":
        return StepFunction(self.partition, tuple(v * c for v in self.values))

    def __eq__(self, other):
        if not isinstance(other, StepFunction):
            return NotImplemented
        a, b = self.simplify(), other.simplify()
        return a.partition == b.partition and a.values == b.values

    def __hash__(self):
        s = self.simplify()
        return hash((s.partition, s.values))


class HaarCombination(Mapping):
    """A finitely supported combination of basis functions with exact coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[HaarIndex, object]] = None):
        clean: Dict[HaarIndex, QuadDyadic] = {}
        for h, c in (terms or {}).items():
            c = QuadDyadic.coerce(c)
            if c:
                clean[h] = c
        self._terms = dict(sorted(clean.items()))

    def __getitem__(self, h: HaarIndex) -> QuadDyadic:
        return self._terms[h]

    def coefficient(self, h: HaarIndex) -> QuadDyadic:
        return self._terms.get(h, QZERO)

    def __iter__(self) -> Iterator[HaarIndex]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, HaarCombination):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == HaarCombination(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "HaarCombination") -> "HaarCombination":
        out = dict(self._terms)
        for h, c in other.items():
            out[h] = out.get(h, QZERO) + c
        return HaarCombination(out)

    def scaled(self, c) -> "HaarCombination":
        c = QuadDyadic.coerce(c)
        return HaarCombination({h: v * c for h, v in self._terms.items()})

    def inner(self, other: "HaarCombination") -> QuadDyadic:
        """Inner product (the basis is orthonormal and the coefficients are real)."""
        acc = QZERO
        for h, c in self._terms.items():
            d = other._terms.get(h)
            if d is not None:
                acc = acc + c * d
        return acc

    def norm_squared(self) -> QuadDyadic:
        return self.inner(self)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*{h}" for h, c in self._terms.items())

    def __repr__(self):
        return f"HaarCombination({self.to_text()})"

    def to_json_dict(self) -> dict:
        return {h.to_text(): {"a": str(c.a), "b": str(c.b)} for h, c in self._terms.items()}


def _basis_value(h: HaarIndex, t: Dyadic) -> QuadDyadic:
    """Value of ``h`` at a point ``t`` that is not a jump of ``h``."""
    if h.is_constant:
        return QONE
    lo, hi = h.support()
    if t <= lo or t >= hi:
        return QZERO
    amp = sqrt_pow2(h.i)
    return -amp if t < haar_point(h) else amp


def basis_step(h: HaarIndex) -> StepFunction:
    if h.is_constant:
        return StepFunction((ZERO, ONE), (QONE,))
    lo, hi = h.support()
    amp = sqrt_pow2(h.i)
    pts = [ZERO, lo, haar_point(h), hi, ONE]
    vals = [QZERO, -amp, amp, QZERO]
    keep_p, keep_v = [ZERO], []
    for k in range(4):
        if pts[k + 1] > pts[k]:
            keep_p.append(pts[k + 1])
            keep_v.append(vals[k])
    return StepFunction(tuple(keep_p), tuple(keep_v)).simplify()


def pi_step(g: PLHomeo, h: HaarIndex, density: str = "inverse") -> StepFunction:
    """The step function ``pi_g h``.

    ``density="inverse"`` uses ``sqrt((g^-1)'(x))``, the unitary choice.
    ``density="literal"`` uses ``sqrt(g'(x))`` instead, kept only to
    document that this variant disagrees with the known coefficients.
    """
    if density not in ("inverse", "literal"):
        raise ValueError("density must be 'inverse' or 'literal'")
    ginv = invert(g)
    pts = set(g.values)
    pts.update(evaluate(g, p) for p in basis_step(h).partition)
    xs = sorted(pts)
    vals = []
    for a, b in zip(xs, xs[1:]):
        mid = (a + b).half()
        y = evaluate(ginv, mid)
        if density == "inverse":
            s = ginv.slope_log2_at(mid)
        else:
            s = g.slope_log2_at(mid)
        vals.append(sqrt_pow2(s) * _basis_value(h, y))
    return StepFunction(tuple(xs), tuple(vals)).simplify()


def expand_in_haar(f: StepFunction) -> HaarCombination:
    """Exact Haar expansion of a step function with dyadic partition.

    The coefficient of ``h^(i)_j`` is ``2**(i/2)`` times (integral over the
    right half minus integral over the left half). Subintervals on which
    ``f`` is constant contribute nothing further, so the recursion stops
    there.
    """
    for p in f.partition:
        if not isinstance(p, Dyadic):
            raise TypeError("partition must be dyadic")
    cum = f._cumulative()
    part = f.partition
    terms: Dict[HaarIndex, QuadDyadic] = {CONSTANT: cum[-1]}
    stack = [(0, 1)]
    while stack:
        i, j = stack.pop()
        lo, hi = Dyadic(j - 1, i), Dyadic(j, i)
        # any breakpoint strictly inside (lo, hi)?
        k = bisect_right(part, lo)
        if k >= len(part) or part[k] >= hi:
            continue
        mid = Dyadic(2 * j - 1, i + 1)
        F_lo, F_mid, F_hi = (f.integral_to(t, cum) for t in (lo, mid, hi))
        c = sqrt_pow2(i) * ((F_hi - F_mid) - (F_mid - F_lo))
        if c:
            terms[HaarIndex(i, j)] = c
        stack.append((i + 1, 2 * j))
        stack.append((i + 1, 2 * j - 1))
    return HaarCombination(terms)


def reconstruct(c: HaarCombination) -> StepFunction:
    """The step function ``sum c_h h``."""
    out = StepFunction((ZERO, ONE), (QZERO,))
    for h, coef in c.items():
        out = out + basis_step(h).scaled(coef)
    return out.simplify()


def apply_pi(g: PLHomeo, h: HaarIndex) -> HaarCombination:
    """Expansion of ``pi_g h`` in the Haar basis."""
    return expand_in_haar(pi_step(g, h))


def apply_pi_combination(g: PLHomeo, c: HaarCombination) -> HaarCombination:
    out = HaarCombination()
    for h, coef in c.items():
        out = out + apply_pi(g, h).scaled(coef)
    return out


# ---------------------------------------------------------------------------
# the branch formulas for the generators

def action_branches() -> List[Tuple[str, int, int, Callable[[int], range], Callable[[int, int], Tuple[int, int]]]]:
    """The seven generic cases as ``(name, generator, i_min, j_range(i), target(i, j))``."""
    return [
        ("x0: left half", 0, 1, lambda i: range(1, 2 ** (i - 1) + 1), lambda i, j: (i + 1, j)),
        ("x0: third quarter", 0, 2,
         lambda i: range(2 ** (i - 1) + 1, 2 ** (i - 1) + 2 ** (i - 2) + 1), lambda i, j: (i, j - 2 ** (i - 2))),
        ("x0: last quarter", 0, 2,
         lambda i: range(2 ** (i - 1) + 2 ** (i - 2) + 1, 2 ** i + 1), lambda i, j: (i - 1, j - 2 ** (i - 1))),
        ("x1: left half", 1, 1, lambda i: range(1, 2 ** (i - 1) + 1), lambda i, j: (i, j)),
        ("x1: third quarter", 1, 2,
         lambda i: range(2 ** (i - 1) + 1, 2 ** (i - 1) + 2 ** (i - 2) + 1), lambda i, j: (i + 1, j + 2 ** (i - 1))),
        ("x1: seventh eighth", 1, 3,
         lambda i: range(2 ** (i - 1) + 2 ** (i - 2) + 1, 2 ** (i - 1) + 2 ** (i - 2) + 2 ** (i - 3) + 1),
         lambda i, j: (i, j - 2 ** (i - 3))),
        ("x1: last eighth", 1, 3,
         lambda i: range(2 ** (i - 1) + 2 ** (i - 2) + 2 ** (i - 3) + 1, 2 ** i + 1),
         lambda i, j: (i - 1, j - 2 ** (i - 1))),
    ]


EXCEPTIONAL_INPUTS = {
    0: (CONSTANT, HaarIndex(0, 1), HaarIndex(1, 2)),
    1: (CONSTANT, HaarIndex(0, 1), HaarIndex(1, 2), HaarIndex(2, 4)),
}


def verify_action_equations(i_max: int = 8) -> Report:
    """Check every generic case for ``i <= i_max`` plus the jump-point shortcut.

    Also checks that the generic cases and the exceptional inputs together
    cover every index of level at most ``i_max`` exactly once per generator.
    """
    if i_max < 3:
        raise ValueError("i_max must be at least 3")
    rep = Report("verify_action_equations")
    covered: Dict[Tuple[int, HaarIndex], int] = {}
    for name, k, i_min, jr, target in action_branches():
        g = generator(k)
        for i in range(i_min, i_max + 1):
            for j in jr(i):
                h = HaarIndex(i, j)
                covered[(k, h)] = covered.get((k, h), 0) + 1
                out = HaarIndex(*target(i, j))
                got = apply_pi(g, h)
                rep.check(name, got == HaarCombination({out: 1}), k=k, i=i, j=j,
                          expected=str(out), got=got.to_text())
                rep.check("jump point commutes with the action",
                          psi_inverse(evaluate(g, haar_point(h))) == out, k=k, i=i, j=j)
    for k in (0, 1):
        for h in all_indices(i_max):
            n = covered.get((k, h), 0) + (h in EXCEPTIONAL_INPUTS[k])
            rep.check("cases partition the basis", n == 1, k=k, index=h.to_text(), times=n)
    rep.details["i_max"] = i_max
    return rep


# the printed expansions: generator, printed input label, corrected input, {output: coefficient}
PRINTED_TABLES: List[Tuple[int, HaarIndex, HaarIndex, Dict[HaarIndex, str]]] = [
    (0, CONSTANT, CONSTANT,
     {CONSTANT: "1/4+1/2*sqrt2", HaarIndex(0, 1): "-1/4", HaarIndex(1, 1): "-1/2+1/4*sqrt2"}),
    (0, HaarIndex(0, 1), HaarIndex(0, 1),
     {CONSTANT: "1/4", HaarIndex(0, 1): "-1/4+1/2*sqrt2", HaarIndex(1, 1): "1/2+1/4*sqrt2"}),
    (0, HaarIndex(1, 2), HaarIndex(1, 2),
     {CONSTANT: "1/2-1/4*sqrt2", HaarIndex(0, 1): "1/2+1/4*sqrt2", HaarIndex(1, 1): "-1/2"}),
    (1, CONSTANT, CONSTANT,
     {CONSTANT: "5/8+1/4*sqrt2", HaarIndex(0, 1): "-3/8+1/4*sqrt2", HaarIndex(1, 2): "-1/8*sqrt2",
      HaarIndex(2, 3): "1/4-1/4*sqrt2"}),
    (1, HaarIndex(0, 1), HaarIndex(0, 1),
     {CONSTANT: "-3/8+1/4*sqrt2", HaarIndex(0, 1): "5/8+1/4*sqrt2", HaarIndex(1, 2): "-1/8*sqrt2",
      HaarIndex(2, 3): "1/4-1/4*sqrt2"}),
    (1, HaarIndex(1, 1), HaarIndex(1, 2),
     {CONSTANT: "1/8*sqrt2", HaarIndex(0, 1): "1/8*sqrt2", HaarIndex(1, 2): "-1/4+1/2*sqrt2",
      HaarIndex(2, 3): "1/2+1/4*sqrt2"}),
    (1, HaarIndex(2, 4), HaarIndex(2, 4),
     {CONSTANT: "-1/4+1/4*sqrt2", HaarIndex(0, 1): "-1/4+1/4*sqrt2", HaarIndex(1, 2): "1/2+1/4*sqrt2",
      HaarIndex(2, 3): "-1/2"}),
]


def verify_exceptional_tables() -> Report:
    """Compare the exceptional images with their known closed forms, coefficient by coefficient.

    One entry of the table carries the input label ``h^(1)_1`` although
    ``x1`` is the identity on [0, 1/2] and so fixes that wavelet; the
    listed right-hand side is the image of ``h^(1)_2``. The check uses the
    corrected label and reports the discrepancy in ``details``.
    """
    rep = Report("verify_exceptional_tables")
    relabelled = []
    for k, printed, actual, table in PRINTED_TABLES:
        got = apply_pi(generator(k), actual)
        expected = HaarCombination({h: QuadDyadic.coerce(c) for h, c in table.items()})
        for h in sorted(set(got) | set(expected)):
            rep.check("coefficient matches", got.coefficient(h) == expected.coefficient(h),
                      generator=f"x{k}", input=str(actual), output=str(h),
                      got=str(got.coefficient(h)), expected=str(expected.coefficient(h)))
        rep.check("image is a unit vector", got.norm_squared() == QONE, generator=f"x{k}", input=str(actual))
        if printed != actual:
            lit = apply_pi(generator(k), printed)
            relabelled.append({
                "generator": f"x{k}",
                "printed_input": str(printed),
                "corrected_input": str(actual),
                "image_of_printed_input": lit.to_text(),
                "printed_expansion_matches_printed_input": lit == expected,
            })
            rep.check("printed label is fixed by the generic case", lit == HaarCombination({printed: 1}),
                      input=str(printed))
    rep.details["relabelled_inputs"] = relabelled
    # the literal density sqrt(g') does not reproduce the table; record one witness
    lit = expand_in_haar(pi_step(generator(0), CONSTANT, density="literal"))
    rep.details["literal_density_x0_const_coefficient_of_h^(0)_1"] = str(lit.coefficient(HaarIndex(0, 1)))
    return rep


def verify_unitarity(gs: Sequence[Tuple[str, PLHomeo]], i_max: int = 8) -> Report:
    """Images of basis vectors are unit vectors and pairwise orthogonal."""
    rep = Report("verify_unitarity")
    idx = all_indices(i_max)
    for name, g in gs:
        images = [apply_pi(g, h) for h in idx]
        for h, c in zip(idx, images):
            rep.check("unit norm", c.norm_squared() == QONE, g=name, index=h.to_text())
        # orthogonality, pairs sharing a basis vector only (others are trivially orthogonal)
        by_term: Dict[HaarIndex, List[int]] = {}
        for n, c in enumerate(images):
            for h in c:
                by_term.setdefault(h, []).append(n)
        pairs = {(a, b) for ns in by_term.values() for a in ns for b in ns if a < b}
        for a, b in sorted(pairs):
            rep.check("orthogonal", not images[a].inner(images[b]), g=name,
                      a=idx[a].to_text(), b=idx[b].to_text())
        rep.details[f"{name}_orthogonality_pairs"] = len(pairs)
    return rep


def verify_homomorphism(pairs: Sequence[Tuple[PLHomeo, PLHomeo]], i_max: int = 6) -> Report:
    """``pi`` of ``compose(f, g)`` equals ``pi_f`` followed by ``pi_g`` on each basis vector."""
    from .plhomeo import compose

    rep = Report("verify_homomorphism")
    for n, (f, g) in enumerate(pairs):
        fg = compose(f, g)
        for h in all_indices(i_max):
            lhs = apply_pi(fg, h)
            rhs = apply_pi_combination(g, apply_pi(f, h))
            rep.check("pi_(fg) = pi_g pi_f", lhs == rhs, pair=n, index=h.to_text())
    return rep


# ---------------------------------------------------------------------------
# the Schreier graph of the basis


def hilbert_schreier_graph(i_max: int) -> LabeledGraph:
    """Arrow ``h -> h'`` labelled ``x_k`` whenever ``<pi_{x_k} h, h'> != 0``.

    Every index of level at most ``i_max`` is explored; images of higher
    level are added as frontier vertices. The graph only records arrows
    out of explored vertices, so it is not inverse-closed.
    """
    if i_max < 3:
        raise ValueError("i_max must be at least 3")
    g = LabeledGraph((0, 1), inverse_closed=False, key_text=HaarIndex.to_text)
    idx = all_indices(i_max)
    for h in idx:
        g.add_vertex(h)
    for h in idx:
        for k in (0, 1):
            for out in apply_pi(generator(k), h):
                g.add_edge(h, out, k)
    g.meta.update({"kind": "haar", "i_max": i_max})
    return g


def verify_hilbert_graph(g: LabeledGraph) -> Report:
    """Per-vertex unitarity and, away from the exceptional inputs, agreement with the point action."""
    rep = Report("verify_hilbert_graph")
    for h in g.explored():
        for k in (0, 1):
            img = apply_pi(generator(k), h)
            rep.check("edges are the nonzero coefficients", set(g.successors(h, k)) == set(img),
                      index=h.to_text(), k=k)
            rep.check("squared coefficients sum to 1", img.norm_squared() == QONE, index=h.to_text(), k=k)
            if h in EXCEPTIONAL_INPUTS[k]:
                continue
            succ = g.successors(h, k)
            rep.check("single arrow outside the finite part", len(succ) == 1, index=h.to_text(), k=k)
            if len(succ) == 1:
                rep.check("arrow follows the point action on jump points",
                          haar_point(succ[0]) == evaluate(generator(k), haar_point(h)),
                          index=h.to_text(), k=k)
    return rep


def matrix_slice(k: int, i_max: int) -> dict:
    """Nonzero entries ``<pi_{x_k} h, h'>`` for inputs of level at most ``i_max``.

    Keys are ``"h -> h'"`` with indices written as ``const`` or ``(i,j)``;
    values are ``[a, b]`` meaning ``a + b sqrt2``.
    """
    entries = {}
    g = generator(k)
    for h in all_indices(i_max):
        for out, c in apply_pi(g, h).items():
            entries[f"{h.to_text()} -> {out.to_text()}"] = [str(c.a), str(c.b)]
    return {"generator": f"x{k}", "i_max": i_max, "entries": entries}
