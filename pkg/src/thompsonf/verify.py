"""Registry of every report-producing check at desk-scale parameters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from . import amenability, gamma_s, haar, monoid, schreier
from .plhomeo import X0, X1, compose, invert
from .report import Report


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int], Report]
    covers: Tuple[Callable, ...]


def _dyadic_structure(seed: int) -> Report:
    g = schreier.dyadic_schreier_graph(max_exp=14)
    return schreier.verify_dyadic_structure(g, 12)


def _unitarity(seed: int) -> Report:
    gs = [("x0", X0), ("x1", X1), ("x0 x1", compose(X0, X1)), ("x1^-1", invert(X1))]
    return haar.verify_unitarity(gs, 8)


def _homomorphism(seed: int) -> Report:
    return haar.verify_homomorphism([(X0, X1), (X1, X0), (X1, invert(X0))], 6)


def _hilbert_graph(seed: int) -> Report:
    return haar.verify_hilbert_graph(haar.hilbert_schreier_graph(8))


def _gamma_s_structure(seed: int) -> Report:
    return gamma_s.check_structure(gamma_s.build_gamma_s(6, 8))


def _gamma_s_doubling(seed: int) -> Report:
    g = gamma_s.build_gamma_s(gamma_s.DEFAULT_NMAX, gamma_s.DEFAULT_DEPTH)
    return gamma_s.gamma_s_doubling_witness(g, samples=100, seed=seed)


def _induced_edges(seed: int) -> Report:
    return gamma_s.verify_induced_edges(gamma_s.build_gamma_s(4, 6))


REGISTRY: List[Check] = [
    Check("relations", lambda s: monoid.verify_relations(10), (monoid.verify_relations,)),
    Check("free_subsemigroup", lambda s: monoid.verify_free_subsemigroup(10), (monoid.verify_free_subsemigroup,)),
    Check("lemmas", lambda s: monoid.verify_lemmas(6, 5, 3), (monoid.verify_lemmas,)),
    Check("forest_oracle", lambda s: monoid.verify_forest_oracle(5, 4), (monoid.verify_forest_oracle,)),
    Check("dyadic_structure", _dyadic_structure, (schreier.verify_dyadic_structure,)),
    Check("transitivity", lambda s: schreier.verify_transitivity(8), (schreier.verify_transitivity,)),
    Check("folner", lambda s: schreier.verify_folner(1000, (1, 2, 3)), (schreier.verify_folner,)),
    Check("haar_equations", lambda s: haar.verify_action_equations(8), (haar.verify_action_equations,)),
    Check("haar_exceptional", lambda s: haar.verify_exceptional_tables(), (haar.verify_exceptional_tables,)),
    Check("haar_unitarity", _unitarity, (haar.verify_unitarity,)),
    Check("haar_homomorphism", _homomorphism, (haar.verify_homomorphism,)),
    Check("haar_graph", _hilbert_graph, (haar.verify_hilbert_graph,)),
    Check("gamma_s_structure", _gamma_s_structure, (gamma_s.check_structure,)),
    Check("gamma_s_doubling", _gamma_s_doubling, (gamma_s.gamma_s_doubling_witness, amenability.doubling_check)),
    Check("gamma_s_vertex_equality", lambda s: gamma_s.verify_vertex_equality(5, 5), (gamma_s.verify_vertex_equality,)),
    Check("gamma_s_induced_edges", _induced_edges, (gamma_s.verify_induced_edges,)),
    Check("gamma_p_boundary", lambda s: amenability.gamma_p_boundary_test(50, 5, seed=s),
          (amenability.gamma_p_boundary_test,)),
]


def run_all(seed: int = 0, only=None, progress: Callable[[str, Report], None] = None) -> Dict[str, dict]:
    """Run the registry (or the named subset) and return ``{name: report dict}`` in registry order."""
    out: Dict[str, dict] = {}
    for check in REGISTRY:
        if only and check.name not in only:
            continue
        rep = check.run(seed)
        if progress is not None:
            progress(check.name, rep)
        out[check.name] = rep.to_dict()
    return out
