"""The Schreier graph of F acting on the dyadic rationals in (0, 1).

Walks through the orbit of 1/2, the sets A_n and B_n that organise it,
geodesic transporters, and the Folner sets that show the action on
tuples is amenable.

Run with ``python demos/dyadic_orbit.py``.
"""

from __future__ import annotations

from thompsonf import dyadic_schreier_graph, find_transporter, folner_ratio, word_length_lower_bound
from thompsonf.monoid import word_to_plhomeo
from thompsonf.schreier import set_A, set_B, verify_dyadic_structure


def show(points) -> str:
    return "{" + ", ".join(str(p) for p in sorted(points)) + "}"


def main() -> None:
    g = dyadic_schreier_graph(max_exp=10)
    print(f"Orbit of 1/2 truncated at denominator 2^10: {len(g)} points,"
          f" {sum(1 for _ in g.explored())} with all four neighbours known.")

    for n in (3, 4, 5):
        print(f"  A_{n} = {show(set_A(n))}   B_{n} = {show(set_B(n))}")

    rep = verify_dyadic_structure(dyadic_schreier_graph(max_exp=12), 10)
    print("\nStructure of the graph level by level:", rep.summary_line())

    for target in ("1/4", "3/4", "3/8", "11/32"):
        w = find_transporter("1/2", target)
        print(f"  shortest word taking 1/2 to {target}: {w if len(w) else 'e'}")

    f = word_to_plhomeo("x1 x1 x0^-1 x1")
    print("\nEvery word for x1 x1 x0^-1 x1 has length at least", word_length_lower_bound(f))

    print("\nFolner sets for the action on n-tuples: boundary / size = 2/m")
    for m in (1, 10, 100, 1000):
        print(f"  m = {m:4d}: " + ", ".join(str(folner_ratio(m, n)) for n in (1, 2, 3)))


if __name__ == "__main__":
    main()
