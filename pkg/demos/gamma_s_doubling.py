"""The induced subgraph on {x_n u} and its doubling witness.

Builds a truncation, checks its shape (a binary tree T, finite trees T_n
glued to T, and further infinite trees), then runs the finite content of
the non-amenability argument: the maps v -> v x1 x0 and v -> v x1 x1 are
injective with disjoint images, so every finite set has at least twice
as many vertices within distance 2.

Run with ``python demos/gamma_s_doubling.py``.
"""

from __future__ import annotations

from thompsonf import build_gamma_s, check_structure, gamma_s_doubling_witness
from thompsonf.gamma_s import descriptor_text, interior


def main() -> None:
    small = build_gamma_s(6, 8)
    rep = check_structure(small)
    print(rep.summary_line())
    print("  identifications x_n v x0 = v x0 x1 per n:", rep.details["identifications_per_n"])

    g = build_gamma_s()
    region = interior(g)
    print(f"\nTruncation n <= {g.n_max}, |u| <= {g.depth}: {len(g.descriptors)} vertices, {len(region)} interior")
    example = region[len(region) // 2]
    print("  e.g.", descriptor_text(g.descriptors[example]))

    rep = gamma_s_doubling_witness(g, samples=100, seed=0)
    print(rep.summary_line())
    print("  smallest sampled |N_2(S)| / |S|:", rep.details["min_sampled_ratio"])

    same = lambda a: a.add_caret(1).add_caret(0)
    bad = gamma_s_doubling_witness(build_gamma_s(4, 6), samples=10, f_map=same, g_map=same, scan_nmax=3, scan_length=3)
    print("\nWith both maps equal the images collide:", bad.summary_line())


if __name__ == "__main__":
    main()
