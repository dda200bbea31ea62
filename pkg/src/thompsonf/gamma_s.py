"""The induced subgraph of the Cayley graph of F on ``S = {x_n u}``.

Here ``n >= 0`` and ``u`` is a positive word over ``x0, x1``. Vertices are
canonical forests, so two descriptors ``(n, u)`` name the same vertex
exactly when the group elements agree. Since ``S`` lies in the positive
monoid, ``a x_k^-1`` can only be in ``S`` when it is again a forest, i.e.
when tree ``k`` of ``a`` is nontrivial.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Set, Tuple

from .amenability import doubling_check
from .graph import LabeledGraph
from .monoid import BinaryForest, forest_generator, word_to_forest, word_to_plhomeo
from .report import Report

__all__ = [
    "GammaSGraph",
    "build_gamma_s",
    "in_s",
    "find_descriptor",
    "interior",
    "descriptor_text",
    "check_structure",
    "gamma_s_doubling_witness",
    "image_collisions",
    "verify_vertex_equality",
    "verify_induced_edges",
    "DEFAULT_NMAX",
    "DEFAULT_DEPTH",
]

DEFAULT_NMAX = 6
DEFAULT_DEPTH = 13

Descriptor = Tuple[int, Tuple[int, ...]]


def descriptor_text(d: Descriptor) -> str:
    n, u = d
    return " ".join([f"x{n}"] + [f"x{k}" for k in u])


@lru_cache(maxsize=None)
def in_s(f: BinaryForest) -> bool:
    """Whether the positive element ``f`` equals some ``x_n u``."""
    c = f.caret_count()
    if c == 0:
        return False
    if c == 1:
        return True
    for k in (0, 1):
        r = f.remove_caret(k)
        if r is not None and in_s(r):
            return True
    return False


def find_descriptor(f: BinaryForest) -> Optional[Descriptor]:
    """Some ``(n, u)`` with ``x_n u = f``, or ``None`` if ``f`` is not in S."""
    c = f.caret_count()
    if c == 0:
        return None
    if c == 1:
        return (len(f.trees) - 1, ())
    for k in (0, 1):
        r = f.remove_caret(k)
        if r is not None and in_s(r):
            n, u = find_descriptor(r)
            return (n, u + (k,))
    return None


class GammaSGraph(LabeledGraph):
    """Truncation of the induced subgraph on S.

    ``descriptors`` maps every truncation vertex to the first descriptor
    ``(n, u)`` found for it; ``aliases`` counts how many descriptors hit
    each vertex.
    """

    def __init__(self, n_max: int, depth: int):
        super().__init__((0, 1), inverse_closed=True, key_text=self._text)
        self.n_max = n_max
        self.depth = depth
        self.descriptors: Dict[BinaryForest, Descriptor] = {}
        self.aliases: Dict[BinaryForest, int] = {}

    def _text(self, f: BinaryForest) -> str:
        d = self.descriptors.get(f)
        return descriptor_text(d) if d is not None else f.to_text()


def build_gamma_s(n_max: int = DEFAULT_NMAX, depth: int = DEFAULT_DEPTH) -> GammaSGraph:
    """Vertices ``x_n u`` with ``n <= n_max`` and ``|u| <= depth``, with all induced edges.

    Every truncation vertex is explored: its four products with
    ``x0^{+-1}, x1^{+-1}`` are classified exactly. Products that lie in S
    but outside the truncation become frontier vertices.
    """
    if n_max < 2 or depth < 1:
        raise ValueError("need n_max >= 2 and depth >= 1")
    g = GammaSGraph(n_max, depth)
    for n in range(n_max + 1):
        layer = [((), forest_generator(n))]
        for length in range(depth + 1):
            nxt = []
            for u, f in layer:
                if f not in g.descriptors:
                    g.descriptors[f] = (n, u)
                    g.aliases[f] = 1
                else:
                    g.aliases[f] += 1
                if length < depth:
                    nxt.append((u + (0,), f.add_caret(0)))
                    nxt.append((u + (1,), f.add_caret(1)))
            layer = nxt
    for f in g.descriptors:
        g.add_vertex(f)
    for a in list(g.descriptors):
        for k in (0, 1):
            g.add_edge(a, a.add_caret(k), k)
            r = a.remove_caret(k)
            if r is not None and (r in g.descriptors or in_s(r)):
                g.add_edge(r, a, k)
    g.meta.update({"kind": "gamma_s", "n_max": n_max, "depth": depth})
    return g


# ---------------------------------------------------------------------------
# structure


def _words(max_len: int, min_len: int = 0) -> Iterable[Tuple[int, ...]]:
    for L in range(min_len, max_len + 1):
        yield from product((0, 1), repeat=L)


def _classify(n_max: int, depth: int):
    """Descriptor of every truncation vertex inside its predicted piece.

    Pieces: ``("T", 0, u)`` for nonempty words ``u``; ``("Tn", n, v)`` for
    ``x_n v`` with ``|v| <= n - 2``; ``("R", n, v, w)`` for ``x_n v x1 w``
    with ``|v| = n - 2``. Returns the map and the list of forests that
    received two labels.
    """
    labels: Dict[BinaryForest, tuple] = {}
    clashes: List[Tuple[tuple, tuple]] = []

    def put(f, lab):
        if f in labels:
            clashes.append((labels[f], lab))
        else:
            labels[f] = lab

    for u in _words(depth + 1, 1):
        put(word_to_forest(u), ("T", 0, u))
    for n in range(2, n_max + 1):
        for v in _words(min(n - 2, depth)):
            put(word_to_forest((n,) + v), ("Tn", n, v))
        if n - 2 < depth:
            for v in product((0, 1), repeat=n - 2):
                for w in _words(depth - (n - 1)):
                    put(word_to_forest((n,) + v + (1,) + w), ("R", n, v, w))
    return labels, clashes


def _piece(lab: tuple) -> tuple:
    if lab[0] == "T":
        return ("T",)
    if lab[0] == "Tn":
        return ("Tn", lab[1])
    return ("R", lab[1], lab[2])


def _word_of(lab: tuple) -> Tuple[int, ...]:
    return lab[2] if lab[0] != "R" else lab[2] + (1,) + lab[3]


def check_structure(g: GammaSGraph, n_max: Optional[int] = None, depth: Optional[int] = None) -> Report:
    """Check that the truncation splits into the tree T, the finite trees T_n and the trees above their leaves.

    Every truncation vertex gets exactly one predicted label; edges either
    stay inside one piece as parent-to-child edges, or are one of the two
    edges leaving a leaf ``x_n v`` of ``T_n``: ``x1`` into the root of its
    own tree and ``x0`` onto ``v x0 x1`` in ``T``.
    """
    n_max = g.n_max if n_max is None else n_max
    depth = g.depth if depth is None else depth
    rep = Report("check_structure")
    labels, clashes = _classify(n_max, depth)
    for a, b in clashes[:10]:
        rep.check("predicted pieces are disjoint", False, first=str(a), second=str(b))
    rep.check("predicted pieces are disjoint", not clashes, clashes=len(clashes))
    vertices = set(g.descriptors)
    rep.check("every vertex lies in a predicted piece", vertices <= set(labels),
              missing=[g.key_text(f) for f in list(vertices - set(labels))[:10]])
    rep.check("every predicted vertex is present", set(labels) <= vertices,
              missing=[str(labels[f]) for f in list(set(labels) - vertices)[:10]])

    # (a) the tree T: both x0 and x1 edges go from a word to its one-letter extension
    t_vertices = [f for f, lab in labels.items() if lab[0] == "T"]
    rep.check("(a) T has 2^(L+1) - 2 distinct vertices", len(t_vertices) == 2 ** (depth + 2) - 2)

    allowed_crossings = 0
    identifications: Dict[int, int] = {}
    for a, b, k in g.edges:
        if b not in labels:
            continue  # edge out to the frontier
        if a in labels:
            la = labels[a]
        else:
            # an edge entering from outside must come from a leaf of some T_n with n > n_max
            d = find_descriptor(a)
            if d is None or len(d[1]) != d[0] - 2:
                rep.check("edges entering the truncation leave a leaf of T_n", False,
                          edge=[g.key_text(a), g.key_text(b)], descriptor=d)
                continue
            la = ("Tn", d[0], d[1])
        lb = labels[b]
        pa, pb = _piece(la), _piece(lb)
        if pa == pb:
            ok = _word_of(lb) == _word_of(la) + (k,)
            rep.check("edges inside a piece join parent and child", ok, edge=[str(la), str(lb)], k=k)
            continue
        # crossing edges must leave a leaf of some T_n
        n = la[1]
        is_leaf = la[0] == "Tn" and len(la[2]) == n - 2
        if is_leaf and k == 1:
            ok = lb[0] == "R" and lb[1] == n and lb[2] == la[2] and lb[3] == ()
            rep.check("(c) x_n v x1 roots its own tree", ok, edge=[str(la), str(lb)])
        elif is_leaf and k == 0:
            ok = lb[0] == "T" and lb[2] == la[2] + (0, 1)
            rep.check("(c) x_n v x0 = v x0 x1", ok, edge=[str(la), str(lb)])
            if ok:
                identifications[n] = identifications.get(n, 0) + 1
        else:
            rep.check("(b)/(c) no other edges leave a piece", False, edge=[str(la), str(lb)], k=k)
        allowed_crossings += 1

    # (b) the finite trees: size, root without parents, interior degrees
    for n in range(2, n_max + 1):
        members = [f for f, lab in labels.items() if lab[0] == "Tn" and lab[1] == n]
        levels = min(n - 2, depth)
        rep.check("(b) T_n has the full number of vertices", len(members) == 2 ** (levels + 1) - 1, n=n)
        root = forest_generator(n)
        rep.check("(b) T_n grows from x_n", labels.get(root) == ("Tn", n, ()), n=n)
        rep.check("(b) the root x_n has no in-edges", not any(g.predecessors(root, k) for k in (0, 1)), n=n)
        for f in members:
            v = labels[f][2]
            expected = {f.add_caret(0), f.add_caret(1)}
            if v:
                expected.add(word_to_forest((n,) + v[:-1]))
            rep.check("(b)/(c) neighbours are parent and children", g.neighbors(f) == expected,
                      vertex=g.key_text(f))
        if n - 2 < depth:
            rep.check("(c) one identification per leaf of T_n", identifications.get(n, 0) == 2 ** (n - 2),
                      n=n, found=identifications.get(n, 0))
    rep.details.update({
        "n_max": n_max,
        "depth": depth,
        "vertices": len(vertices),
        "frontier": len(g.frontier),
        "T_vertices": len(t_vertices),
        "crossing_edges": allowed_crossings,
        "identifications_per_n": identifications,
        "descriptors_with_aliases": sum(1 for c in g.aliases.values() if c > 1),
    })
    return rep


# ---------------------------------------------------------------------------
# the doubling witness


def _f_map(a: BinaryForest) -> BinaryForest:
    return a.add_caret(1).add_caret(0)


def _g_map(a: BinaryForest) -> BinaryForest:
    return a.add_caret(1).add_caret(1)


def interior(g: GammaSGraph) -> List[BinaryForest]:
    """Vertices whose neighbours are explored and whose two images lie in the truncation."""
    out = []
    for a in g.descriptors:
        if not g.is_explored(a):
            continue
        if _f_map(a) not in g.descriptors or _g_map(a) not in g.descriptors:
            continue
        if all(g.is_explored(b) for b in g.neighbors(a)):
            out.append(a)
    return out


def image_collisions(n_max: int = 6, length: int = 6) -> List[Tuple[Descriptor, Descriptor]]:
    """All ``(x_n v, x_m w)`` with ``n, m <= n_max``, ``|v|, |w| <= length`` and ``x_n v x1 x0 = x_m w x1 x1``."""
    f_side: Dict[BinaryForest, Descriptor] = {}
    g_side: Dict[BinaryForest, List[Descriptor]] = {}
    for n in range(n_max + 1):
        for v in _words(length):
            f_side.setdefault(word_to_forest((n,) + v + (1, 0)), (n, v))
            g_side.setdefault(word_to_forest((n,) + v + (1, 1)), []).append((n, v))
    out = []
    for f, d in f_side.items():
        for d2 in g_side.get(f, ()):
            out.append((d, d2))
    return out


def gamma_s_doubling_witness(
    g: GammaSGraph,
    samples: int = 100,
    seed: int = 0,
    f_map=None,
    g_map=None,
    scan_nmax: int = 6,
    scan_length: int = 6,
) -> Report:
    """Check ``v -> v x1 x0`` and ``v -> v x1 x1`` witness ``|N_2(S)| >= 2|S|`` on the interior.

    ``f_map``/``g_map`` replace the two maps (used for negative controls).
    Also scans ``x_n v x1 x0 = x_m w x1 x1`` exhaustively for small ``n, m``.
    """
    region = interior(g)
    fm = f_map or _f_map
    gm = g_map or _g_map
    rep = doubling_check(g, 2, fm, gm, region, samples=samples, seed=seed)
    rep.name = "gamma_s_doubling_witness"
    if f_map is None and g_map is None:
        ds = rep.details.get("displacements", {})
        rep.check("displacement is exactly 2", set(ds) == {"f:2", "g:2"}, displacements=ds)
    sols = image_collisions(scan_nmax, scan_length)
    rep.check("x_n v x1 x0 = x_m w x1 x1 has no solutions", not sols,
              solutions=[[descriptor_text(a), descriptor_text(b)] for a, b in sols[:10]])
    rep.details.update({"interior": len(region), "collision_scan": {"n_max": scan_nmax, "length": scan_length}})
    return rep


# ---------------------------------------------------------------------------
# cross-checks against the PL model


def verify_vertex_equality(n_max: int = 5, length: int = 5) -> Report:
    """Forest equality and PL equality induce the same identifications of descriptors."""
    rep = Report("verify_vertex_equality")
    by_forest: Dict[BinaryForest, Set[Descriptor]] = {}
    by_pl: Dict[object, Set[Descriptor]] = {}
    for n in range(n_max + 1):
        for u in _words(length):
            d = (n, u)
            by_forest.setdefault(word_to_forest((n,) + u), set()).add(d)
            by_pl.setdefault(word_to_plhomeo((n,) + u), set()).add(d)
    pf = sorted(sorted(s) for s in by_forest.values())
    pp = sorted(sorted(s) for s in by_pl.values())
    rep.check("same partition of descriptors", pf == pp, forest_classes=len(pf), pl_classes=len(pp))
    rep.details["coincidences"] = [[descriptor_text(d) for d in sorted(s)] for s in by_forest.values() if len(s) > 1][:20]
    return rep


def verify_induced_edges(g: GammaSGraph) -> Report:
    """Recompute every edge of a (small) truncation with PL maps.

    For each truncation vertex ``a`` and each ``x_k^{+-1}``, the product is
    compared with the PL table of all vertices; an edge must be present iff
    the product is a truncation vertex.
    """
    from .plhomeo import compose, generator, generator_inverse

    rep = Report("verify_induced_edges")
    pl = {f: word_to_plhomeo((d[0],) + d[1]) for f, d in g.descriptors.items()}
    back = {p: f for f, p in pl.items()}
    rep.check("descriptor PL maps are distinct per vertex", len(back) == len(pl))
    for a, p in pl.items():
        for k in (0, 1):
            for s, step in ((1, generator(k)), (-1, generator_inverse(k))):
                target = back.get(compose(p, step))
                try:
                    got = g.step(a, k, s)
                except KeyError:
                    got = None
                if got is not None and got not in g.descriptors:
                    got = None  # frontier vertex: outside the table
                rep.check("edge present iff the product is a vertex", got == target,
                          vertex=g.key_text(a), k=k, sign=s)
    return rep
