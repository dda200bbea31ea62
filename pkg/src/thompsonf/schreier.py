"""Schreier graphs of F acting on dyadic rationals and on increasing tuples.

Includes the structural verifier for the graph on the orbit of 1/2, Folner
sets for tuple stabilisers, point transporters (in F and in the stabiliser
of 1/2), the maximality decomposition and the word-length lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .amenability import boundary, cheeger_ratio
from .exact import Dyadic
from .graph import FrontierError, LabeledGraph, build_orbit_graph, distance
from .monoid import Word, word_to_plhomeo
from .plhomeo import (
    HALF,
    IDENTITY,
    PLHomeo,
    compose,
    evaluate,
    generator,
    generator_inverse,
    invert,
    stab_join,
)
from .report import Report

__all__ = [
    "act_on_point",
    "act_on_tuple",
    "dyadic_schreier_graph",
    "tuple_orbit_graph",
    "dyadic_tuple",
    "interval_level",
    "set_A",
    "set_B",
    "set_C",
    "set_D",
    "verify_dyadic_structure",
    "folner_set",
    "folner_graph",
    "folner_ratio",
    "find_transporter",
    "schreier_distance",
    "stab_transporter",
    "Decomposition",
    "maximality_decompose",
    "word_length_lower_bound",
    "folner_boundary",
    "tuple_text",
    "verify_transitivity",
    "verify_folner",
]

ZERO, ONE = Dyadic(0), Dyadic(1)


def act_on_point(d: Dyadic, k: int, sign: int = 1) -> Dyadic:
    """Image of ``d`` under ``x_k`` (``sign = 1``) or its inverse."""
    f = generator(k) if sign == 1 else generator_inverse(k)
    return evaluate(f, d)


def dyadic_schreier_graph(
    seed=HALF,
    depth: Optional[int] = None,
    max_exp: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> LabeledGraph:
    """Truncated Schreier graph of ``<x0, x1>`` on the orbit of ``seed``.

    ``depth`` bounds the BFS radius; ``max_exp`` only expands points with
    denominator at most ``2**max_exp``.
    """
    seed = Dyadic.coerce(seed)
    keep = (lambda d: d.exp <= max_exp) if max_exp is not None else None
    g = build_orbit_graph([seed], act_on_point, depth=depth, keep=keep, max_vertices=max_vertices)
    g.meta.update({"kind": "dyadic", "seed": str(seed), "depth": depth, "max_exp": max_exp})
    return g


# ---------------------------------------------------------------------------
# tuples


def dyadic_tuple(entries: Iterable) -> Tuple[Dyadic, ...]:
    """Validate and normalise a strictly increasing tuple of dyadics in (0, 1)."""
    t = tuple(Dyadic.coerce(x) for x in entries)
    if not t:
        raise ValueError("empty tuple")
    if t[0] <= ZERO or t[-1] >= ONE:
        raise ValueError("tuple entries must lie in (0, 1)")
    if any(a >= b for a, b in zip(t, t[1:])):
        raise ValueError("tuple entries must be strictly increasing")
    return t


def act_on_tuple(t: Tuple[Dyadic, ...], k: int, sign: int = 1) -> Tuple[Dyadic, ...]:
    f = generator(k) if sign == 1 else generator_inverse(k)
    return tuple(evaluate(f, d) for d in t)


def tuple_text(t: Tuple[Dyadic, ...]) -> str:
    return "(" + ", ".join(str(d) for d in t) + ")"


def tuple_orbit_graph(
    seed: Iterable,
    depth: Optional[int] = None,
    max_exp: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> LabeledGraph:
    """Schreier graph of the componentwise action on increasing tuples."""
    seed = dyadic_tuple(seed)
    keep = (lambda t: max(d.exp for d in t) <= max_exp) if max_exp is not None else None
    g = build_orbit_graph([seed], act_on_tuple, depth=depth, keep=keep, max_vertices=max_vertices)
    g.key_text = tuple_text
    g.meta.update({"kind": "tuple", "seed": tuple_text(seed), "depth": depth, "max_exp": max_exp})
    return g


# ---------------------------------------------------------------------------
# the structure of the orbit of 1/2


def interval_level(n: int, lo, hi) -> Set[Dyadic]:
    """Points ``k / 2**n`` with ``k`` odd strictly between ``lo`` and ``hi``."""
    lo, hi = Dyadic.coerce(lo), Dyadic.coerce(hi)
    if lo.exp > n or hi.exp > n:
        raise ValueError("interval endpoints must have denominator at most 2**n")
    k_lo, k_hi = lo.scale(n).num, hi.scale(n).num
    start = k_lo + 1 if k_lo % 2 == 0 else k_lo + 2
    return {Dyadic(k, n) for k in range(start, k_hi, 2)}


def set_A(n: int) -> Set[Dyadic]:
    return interval_level(n, "1/2", "3/4")


def set_B(n: int) -> Set[Dyadic]:
    return interval_level(n, "3/4", "7/8")


def set_C(n: int) -> Set[Dyadic]:
    return interval_level(n, "1/2", "5/8")


def set_D(n: int) -> Set[Dyadic]:
    return interval_level(n, "5/8", "3/4")


def _move(g: LabeledGraph, v, k: int, sign: int):
    if not g.is_explored(v):
        raise FrontierError(f"{g.key_text(v)} is not explored")
    return g.step(v, k, sign)


def _image(g: LabeledGraph, points: Iterable, word: Sequence[Tuple[int, int]]) -> Set:
    out = set()
    for p in points:
        for k, s in word:
            p = _move(g, p, k, s)
        out.add(p)
    return out


def _fmt(points: Iterable) -> List[str]:
    return [str(p) for p in sorted(points)]


def verify_dyadic_structure(g: LabeledGraph, n_max: int) -> Report:
    """Check the set identities describing the Schreier graph on the orbit of 1/2.

    Every generator move is read off the edges of ``g``; a move out of an
    unexplored vertex is an error for the basic identities and ends the
    ray checks for that level.
    """
    rep = Report("verify_dyadic_structure")
    rep.details.update({"n_max": n_max, "vertices": len(g), "explored": len(g) - len(g.frontier)})
    X0, X1, X0i, X1i = (0, 1), (1, 1), (0, -1), (1, -1)
    if HALF not in g:
        rep.error("graph does not contain 1/2")
        return rep
    rep.check("A_3 = {5/8}", set_A(3) == {Dyadic(5, 3)})
    ray_depths: Dict[int, int] = {}
    tail_depths: Dict[int, int] = {}
    for n in range(3, n_max + 1):
        A = set_A(n)
        try:
            rep.check("x0^-1(A_n) = B_{n+1}", _image(g, A, [X0i]) == set_B(n + 1), n=n)
            rep.check("x1(A_n) = C_{n+1}", _image(g, A, [X1]) == set_C(n + 1), n=n)
            rep.check("(x0^-1 x1)(A_n) = D_{n+1}", _image(g, A, [X0i, X1]) == set_D(n + 1), n=n)
            rep.check("x1(A_n) u (x0^-1 x1)(A_n) = A_{n+1}",
                      _image(g, A, [X1]) | _image(g, A, [X0i, X1]) == set_A(n + 1), n=n)
            if n >= 4:
                rep.check("x1(B_n) = D_n", _image(g, set_B(n), [X1]) == set_D(n), n=n)
        except FrontierError as exc:
            rep.error(f"level {n}: {exc}")
            continue

        # x0^k(A_n) = x0^k x1(A_n) = 2^(1-k) (A_n - 1/4)
        k = 0
        current = set(A)
        while True:
            try:
                nxt = {_move(g, p, 0, 1) for p in current}
                via_x1 = {_move(g, p, 1, 1) for p in nxt}
            except FrontierError:
                break
            k += 1
            expected = {(a - Dyadic(1, 2)).scale(1 - k) for a in A}
            rep.check("x0^k(A_n) = 2^(1-k)(A_n - 1/4)", nxt == expected, n=n, k=k,
                      got=_fmt(nxt)[:4], expected=_fmt(expected)[:4])
            rep.check("x0^k x1(A_n) = x0^k(A_n)", via_x1 == nxt, n=n, k=k)
            current = nxt
        ray_depths[n] = k
        rep.check("ray identity reached inside truncation", k >= 1, n=n)

        # f(B_n) = 1 - 2^-k (1 - B_n) for every length-k f in <x0^-1, x1^-1>
        if n >= 4:
            B = set_B(n)
            layers = {b: {b} for b in B}
            k = 0
            while True:
                try:
                    layers_next = {
                        b: {_move(g, p, gen, -1) for p in ps for gen in (0, 1)} for b, ps in layers.items()
                    }
                except FrontierError:
                    break
                k += 1
                for b, ps in layers_next.items():
                    expected = ONE - (ONE - b).scale(-k)
                    rep.check("f(B_n) = 1 - 2^-k(1 - B_n)", ps == {expected}, n=n, k=k, b=str(b),
                              got=_fmt(ps)[:4], expected=str(expected))
                layers = layers_next
            tail_depths[n] = k
            rep.check("white-ray identity reached inside truncation", k >= 1, n=n)
    rep.details["ray_depths"] = ray_depths
    rep.details["white_ray_depths"] = tail_depths
    return rep


# ---------------------------------------------------------------------------
# Folner sets for stabilisers of tuples


def folner_set(i: int, n: int) -> Tuple[Dyadic, ...]:
    """The tuple ``(2**-(i+n), ..., 2**-(i+1))``."""
    return tuple(Dyadic(1, i + n - j) for j in range(n))


def folner_graph(m: int, n: int) -> LabeledGraph:
    """Tuple orbit graph explored exactly on ``{E_1, ..., E_m}``."""
    members = {folner_set(i, n) for i in range(1, m + 1)}
    g = build_orbit_graph([folner_set(1, n)], act_on_tuple, keep=members.__contains__)
    g.key_text = tuple_text
    g.meta.update({"kind": "folner", "m": m, "tuple_size": n})
    return g


def folner_ratio(m: int, n: int, graph: Optional[LabeledGraph] = None) -> Fraction:
    """``|dS_m| / |S_m|`` computed from the neighbours of ``S_m`` in the orbit graph.

    ``graph`` may be any tuple orbit graph in which ``E_1, ..., E_m`` are
    explored, e.g. ``folner_graph(M, n)`` for ``M >= m``.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if graph is None:
        graph = folner_graph(m, n)
    return cheeger_ratio(graph, [folner_set(i, n) for i in range(1, m + 1)])


def folner_boundary(m: int, n: int, graph: Optional[LabeledGraph] = None) -> Set[Tuple[Dyadic, ...]]:
    if graph is None:
        graph = folner_graph(m, n)
    return boundary(graph, [folner_set(i, n) for i in range(1, m + 1)])


# ---------------------------------------------------------------------------
# transporters and distances in the orbit of a point

_LETTERS = ((0, 1), (1, 1), (0, -1), (1, -1))


def _bidirectional_path(a: Dyadic, b: Dyadic, max_depth: int = 200) -> List[Tuple[int, int]]:
    """Shortest letter sequence moving ``a`` to ``b`` in the Schreier graph on D."""
    if a == b:
        return []
    par_a: Dict[Dyadic, Optional[tuple]] = {a: None}
    par_b: Dict[Dyadic, Optional[tuple]] = {b: None}
    dist_a, dist_b = {a: 0}, {b: 0}
    layer_a, layer_b = [a], [b]
    for _ in range(max_depth):
        forward = len(layer_a) <= len(layer_b)
        layer = layer_a if forward else layer_b
        par, dist, other = (par_a, dist_a, dist_b) if forward else (par_b, dist_b, dist_a)
        nxt, meets = [], []
        for v in layer:
            for k, s in _LETTERS:
                w = act_on_point(v, k, s)
                if w in dist:
                    continue
                # forward: edge v -> w read with letter (k, s); backward: w -> v uses (k, -s)
                par[w] = (v, (k, s) if forward else (k, -s))
                dist[w] = dist[v] + 1
                nxt.append(w)
                if w in other:
                    meets.append(w)
        if meets:
            mid = min(meets, key=lambda w: (dist_a[w] + dist_b[w], w))
            head, v = [], mid
            while par_a[v] is not None:
                v, letter = par_a[v]
                head.append(letter)
            tail, v = [], mid
            while par_b[v] is not None:
                v, letter = par_b[v]
                tail.append(letter)
            return list(reversed(head)) + tail
        if forward:
            layer_a = nxt
        else:
            layer_b = nxt
        if not nxt:
            break
    raise RuntimeError(f"no path from {a} to {b} within {max_depth} steps")


def find_transporter(a, b) -> Word:
    """A geodesic word ``w`` with ``w(a) = b`` (letters act left to right)."""
    a, b = Dyadic.coerce(a), Dyadic.coerce(b)
    for p in (a, b):
        if p <= ZERO or p >= ONE:
            raise ValueError(f"{p} is not in (0, 1)")
    w = Word(tuple(_bidirectional_path(a, b)))
    if evaluate(word_to_plhomeo(w), a) != b:
        raise AssertionError(f"transporter {w} does not map {a} to {b}")
    return w


def schreier_distance(a, b, graph: Optional[LabeledGraph] = None) -> int:
    """Distance between two points of D, in ``graph`` if given, else in the full graph."""
    a, b = Dyadic.coerce(a), Dyadic.coerce(b)
    if graph is not None:
        d = distance(graph, a, b)
        if d is None:
            raise FrontierError(f"{b} is not reachable from {a} inside the truncation")
        return d
    return len(_bidirectional_path(a, b))


def stab_transporter(u, v) -> PLHomeo:
    """An element fixing 1/2 and mapping ``u`` to ``v`` (same side of 1/2)."""
    u, v = Dyadic.coerce(u), Dyadic.coerce(v)
    if ZERO < u < HALF and ZERO < v < HALF:
        w = find_transporter(u.scale(1), v.scale(1))
        h = stab_join(word_to_plhomeo(w), IDENTITY)
    elif HALF < u < ONE and HALF < v < ONE:
        w = find_transporter(u.scale(1) - 1, v.scale(1) - 1)
        h = stab_join(IDENTITY, word_to_plhomeo(w))
    else:
        raise ValueError(f"{u} and {v} must lie on the same side of 1/2, inside (0, 1)")
    assert evaluate(h, HALF) == HALF and evaluate(h, u) == v
    return h


@dataclass(frozen=True)
class Decomposition:
    """``g = h_tilde * f_tilde`` with ``h_tilde`` fixing 1/2.

    ``f_tilde = base * h`` where ``base`` is ``f`` or ``f^-1`` and ``h``
    fixes 1/2; ``base_is_inverse`` records which.
    """

    h_tilde: PLHomeo
    f_tilde: PLHomeo
    h: PLHomeo
    base_is_inverse: bool


def maximality_decompose(f: PLHomeo, g: PLHomeo) -> Decomposition:
    """Write ``g`` as a product of a stabiliser element and ``f^{+-1} h``."""
    if evaluate(f, HALF) == HALF:
        raise ValueError("f must move 1/2")
    v = evaluate(g, HALF)
    if v == HALF:
        return Decomposition(g, IDENTITY, IDENTITY, False)
    u = evaluate(f, HALF)
    use_inverse = (u < HALF) != (v < HALF)
    base = invert(f) if use_inverse else f
    p = evaluate(base, HALF)
    h = stab_transporter(p, v)
    f_tilde = compose(base, h)
    h_tilde = compose(g, invert(f_tilde))
    if evaluate(f_tilde, HALF) != v or evaluate(h_tilde, HALF) != HALF or compose(h_tilde, f_tilde) != g:
        raise AssertionError("decomposition failed to verify")
    return Decomposition(h_tilde, f_tilde, h, use_inverse)


def word_length_lower_bound(f: PLHomeo, graph: Optional[LabeledGraph] = None) -> int:
    """Largest Schreier distance ``d(a, f(a))`` over breakpoints ``a`` of ``f`` and ``f^-1``.

    Any word for ``f`` in ``x0^{+-1}, x1^{+-1}`` is at least this long. With
    ``graph`` the distances are read from that truncation (an error if it
    is too small); otherwise they are computed in the full graph.
    """
    points = set(f.interior_breakpoints())
    points.update(f.values[1:-1])
    best = 0
    for a in sorted(points):
        b = evaluate(f, a)
        if a == b:
            continue
        if graph is not None and (a not in graph or b not in graph):
            raise FrontierError(f"pair ({a}, {b}) lies outside the truncation")
        best = max(best, schreier_distance(a, b, graph))
    return best


# ---------------------------------------------------------------------------
# reports


def verify_transitivity(max_exp: int = 8) -> Report:
    """The orbit of 1/2 contains every ``k / 2**e`` with ``e <= max_exp``; transporters check out."""
    rep = Report("verify_transitivity")
    g = dyadic_schreier_graph(HALF, max_exp=max_exp)
    lengths = {}
    for e in range(1, max_exp + 1):
        for k in range(1, 2 ** e, 2):
            b = Dyadic(k, e)
            rep.check("point reached by the orbit", b in g, point=str(b))
            w = find_transporter(HALF, b)
            rep.check("transporter maps 1/2 to the point", evaluate(word_to_plhomeo(w), HALF) == b, point=str(b))
            lengths[str(b)] = len(w)
    rep.check("regular: explored vertices have one in- and out-edge per generator",
              all(len(g.successors(v, k)) == 1 and len(g.predecessors(v, k)) == 1
                  for v in g.explored() for k in (0, 1)))
    rep.details.update({"max_exp": max_exp, "vertices": len(g), "max_transporter_length": max(lengths.values())})
    return rep


def verify_folner(m_max: int = 1000, sizes: Sequence[int] = (1, 2, 3), i_check: int = 20) -> Report:
    """``|dS_m| / |S_m| = 2/m`` with ``dS_m = {E_0, E_{m+1}}`` by neighbour enumeration."""
    rep = Report("verify_folner")
    for n in sizes:
        for i in range(i_check + 1):
            E = folner_set(i, n)
            rep.check("x1 fixes E_i", act_on_tuple(E, 1) == E, i=i, n=n)
            rep.check("x0 maps E_i to E_{i+1}", act_on_tuple(E, 0) == folner_set(i + 1, n), i=i, n=n)
        g = folner_graph(m_max, n)
        # reuse the graph's own key objects so set lookups hit on identity
        own = {v: v for v in g.vertices}
        sets = [own[folner_set(i, n)] for i in range(1, m_max + 1)]
        for m in range(1, m_max + 1):
            bd = boundary(g, sets[:m])
            rep.check("boundary is {E_0, E_{m+1}}", bd == {folner_set(0, n), folner_set(m + 1, n)}, m=m, n=n)
            rep.check("ratio is 2/m", Fraction(len(bd), m) == Fraction(2, m), m=m, n=n)
    rep.details.update({"m_max": m_max, "sizes": list(sizes)})
    return rep
