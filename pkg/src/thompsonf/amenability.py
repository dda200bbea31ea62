"""Vertex boundaries, Cheeger ratios and the doubling-condition witness check.

Also hosts the sampled check of the boundary inequality relating the
positive-monoid subgraph of the Cayley graph of F to the whole Cayley graph.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Set, Union

from .graph import FrontierError, LabeledGraph, ball, distance
from .monoid import TRIVIAL, BinaryForest, forest_to_word, word_to_forest, word_to_plhomeo
from .plhomeo import PLHomeo, compose, generator, generator_inverse
from .report import Report

__all__ = [
    "boundary",
    "cheeger_ratio",
    "doubling_check",
    "gamma_p_boundary_test",
    "positive_boundary",
    "cayley_boundary",
]


def _require_known(g: LabeledGraph, s: Iterable[Hashable]) -> None:
    if not g.inverse_closed:
        raise ValueError("vertex boundaries need a graph that records in-edges")
    for v in s:
        if v not in g:
            raise KeyError(f"{g.key_text(v)} is not a vertex")
        if not g.neighborhood_known(v):
            raise FrontierError(f"{g.key_text(v)} is on the frontier")


def boundary(g: LabeledGraph, s: Iterable[Hashable]) -> Set[Hashable]:
    """Vertices outside ``s`` with a neighbour in ``s`` (edges in either direction)."""
    s = set(s)
    _require_known(g, s)
    out: Set[Hashable] = set()
    for v in s:
        out.update(g.neighbors(v))
    return out - s


def cheeger_ratio(g: LabeledGraph, s: Iterable[Hashable]) -> Fraction:
    s = set(s)
    if not s:
        raise ValueError("the Cheeger ratio of the empty set is undefined")
    return Fraction(len(boundary(g, s)), len(s))


MapLike = Union[Mapping[Hashable, Hashable], Callable[[Hashable], Hashable]]


def _lookup(m: MapLike) -> Callable[[Hashable], Hashable]:
    if callable(m) and not isinstance(m, Mapping):
        return m
    return m.__getitem__


def doubling_check(
    g: LabeledGraph,
    k: int,
    f_img: MapLike,
    g_img: MapLike,
    region: Iterable[Hashable],
    samples: int = 100,
    seed: int = 0,
    max_sample_size: int = 200,
) -> Report:
    """Check two maps witness the doubling condition on ``region``.

    Verified: both maps injective, images disjoint, every vertex moved by at
    most ``k``. Then ``|N_k(S)| >= 2|S|`` is counted directly on ``samples``
    seeded random subsets of the region. The radius-``k-1`` ball of every
    region vertex must be explored.
    """
    rep = Report("doubling_check")
    region = list(region)
    fmap, gmap = _lookup(f_img), _lookup(g_img)
    f_vals: Dict[Hashable, Hashable] = {}
    g_vals: Dict[Hashable, Hashable] = {}
    for name, mp, vals in (("f", fmap, f_vals), ("g", gmap, g_vals)):
        for v in region:
            try:
                w = mp(v)
            except (KeyError, FrontierError) as exc:
                rep.check(f"{name} defined", False, vertex=g.key_text(v), reason=str(exc))
                continue
            rep.check(f"{name} defined", w in g, vertex=g.key_text(v))
            vals[v] = w
    for name, vals in (("f", f_vals), ("g", g_vals)):
        seen: Dict[Hashable, Hashable] = {}
        for v, w in vals.items():
            other = seen.get(w)
            rep.check(f"{name} injective", other is None,
                      a=g.key_text(v), b=g.key_text(other) if other is not None else None,
                      image=g.key_text(w))
            seen.setdefault(w, v)
    common = set(f_vals.values()) & set(g_vals.values())
    rep.check("images disjoint", not common, shared=[g.key_text(w) for w in list(common)[:10]])
    displacement: Counter = Counter()
    for name, vals in (("f", f_vals), ("g", g_vals)):
        for v, w in vals.items():
            try:
                d = distance(g, v, w, max_radius=k)
            except FrontierError as exc:
                rep.check(f"{name} displacement <= {k}", False, vertex=g.key_text(v), reason=str(exc))
                continue
            displacement[(name, d)] += 1
            rep.check(f"{name} displacement <= {k}", d is not None and d <= k,
                      vertex=g.key_text(v), image=g.key_text(w), distance=d)
    rep.details["displacements"] = {f"{n}:{d}": c for (n, d), c in sorted(displacement.items(), key=str)}
    rep.details["region_size"] = len(region)

    if region and samples:
        rng = random.Random(seed)
        region_set = set(region)
        ratios = []
        for i in range(samples):
            if i % 2 == 0:
                size = rng.randint(1, min(max_sample_size, len(region)))
                s = rng.sample(region, size)
            else:
                # connected-ish sets are the hard case for isoperimetry
                centre = rng.choice(region)
                radius = rng.randint(1, 3)
                try:
                    near = ball(g, [centre], radius)
                except FrontierError:
                    near = {centre: 0}
                s = [v for v in near if v in region_set] or [centre]
            try:
                nk = ball(g, s, k)
            except FrontierError as exc:
                rep.check(f"|N_{k}(S)| >= 2|S|", False, sample=i, reason=str(exc))
                continue
            ratios.append(Fraction(len(nk), len(s)))
            rep.check(f"|N_{k}(S)| >= 2|S|", len(nk) >= 2 * len(s), sample=i, size=len(s), neighbourhood=len(nk))
        if ratios:
            rep.details["min_sampled_ratio"] = str(min(ratios))
    return rep


# ---------------------------------------------------------------------------
# positive monoid inside the Cayley graph of F


def _p_neighbors(t: BinaryForest):
    """Right neighbours of ``t`` under x0^{+-1}, x1^{+-1} that stay inside P."""
    out = [t.add_caret(0), t.add_caret(1)]
    for i in (0, 1):
        d = t.remove_caret(i)
        if d is not None:
            out.append(d)
    return out


def positive_boundary(T: Iterable[BinaryForest]) -> Set[BinaryForest]:
    """Boundary of ``T`` inside the induced subgraph on P."""
    T = set(T)
    out: Set[BinaryForest] = set()
    for t in T:
        out.update(_p_neighbors(t))
    return out - T


@lru_cache(maxsize=None)
def _f_steps():
    return (generator(0), generator(1), generator_inverse(0), generator_inverse(1))


def cayley_boundary(T: Iterable[PLHomeo]) -> Set[PLHomeo]:
    """Boundary of ``T`` inside the full Cayley graph of F (right multiplication)."""
    T = set(T)
    out: Set[PLHomeo] = set()
    for t in T:
        for s in _f_steps():
            out.add(compose(t, s))
    return out - T


def _p_ball(radius: int) -> Set[BinaryForest]:
    """Ball around the identity in the positive-monoid subgraph."""
    seen = {TRIVIAL}
    layer = [TRIVIAL]
    for _ in range(radius):
        nxt = []
        for t in layer:
            for u in _p_neighbors(t):
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        layer = nxt
    return seen


def gamma_p_boundary_test(
    samples: int = 50,
    max_word_len: int = 5,
    seed: int = 0,
    max_index: int = 4,
    max_set_size: int = 12,
) -> Report:
    """Sample finite ``T`` in P and check ``|d_F T| <= 4 |d_P T|``.

    Boundaries in P are computed with forests, boundaries in F with
    canonical PL maps, and the two routes are cross-checked on the
    P-part of the boundary. The two fixed sets {identity} and the radius-2
    ball of the identity are always included before the random ones.
    """
    rep = Report("gamma_p_boundary_test")
    rng = random.Random(seed)
    sets: List[Set[BinaryForest]] = [{TRIVIAL}, _p_ball(2)]
    for _ in range(samples):
        size = rng.randint(1, max_set_size)
        T = set()
        for _ in range(size):
            length = rng.randint(0, max_word_len)
            T.add(word_to_forest([rng.randint(0, max_index) for _ in range(length)]))
        sets.append(T)
    worst = None
    for idx, T in enumerate(sets):
        pl = {t: word_to_plhomeo(forest_to_word(t)) for t in T}
        rep.check("forest and PL equality agree on T", len(set(pl.values())) == len(T), sample=idx)
        dP = positive_boundary(T)
        dF = cayley_boundary(pl.values())
        dP_pl = {word_to_plhomeo(forest_to_word(u)) for u in dP}
        rep.check("d_P T embeds in d_F T", dP_pl <= dF and len(dP_pl) == len(dP), sample=idx)
        gen_out = [len({t.add_caret(i) for t in T} - T) for i in (0, 1)]
        rep.check("|T x_i \\ T| <= |d_P T|", max(gen_out) <= len(dP), sample=idx)
        rep.check("|d_F T| <= 2(|T x0 \\ T| + |T x1 \\ T|)", len(dF) <= 2 * sum(gen_out),
                  sample=idx, dF=len(dF), out=gen_out)
        ok = len(dF) <= 4 * len(dP)
        rep.check("|d_F T| <= 4|d_P T|", ok, sample=idx, size=len(T), dF=len(dF), dP=len(dP))
        r = Fraction(len(dF), max(1, len(dP)))
        if worst is None or r > worst[0]:
            worst = (r, idx, len(T), len(dF), len(dP))
    rep.details["samples"] = len(sets)
    if worst:
        rep.details["max_ratio_dF_over_dP"] = {"ratio": str(worst[0]), "sample": worst[1],
                                               "size": worst[2], "dF": worst[3], "dP": worst[4]}
    rep.notes.append("finite sampled evidence for the boundary inequality; not a statement about the infinite graph")
    return rep
