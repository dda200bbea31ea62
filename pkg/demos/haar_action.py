"""The unitary action of F on the Haar wavelet basis, with exact sqrt2 coefficients.

Run with ``python demos/haar_action.py``.
"""

from __future__ import annotations

from thompsonf import CONSTANT, HaarIndex, apply_pi, haar_point, hilbert_schreier_graph
from thompsonf.haar import verify_exceptional_tables, verify_hilbert_graph
from thompsonf.plhomeo import X0, X1, evaluate


def main() -> None:
    print("Generic basis vectors move to a single basis vector:")
    for gen, name in ((X0, "x0"), (X1, "x1")):
        for h in (HaarIndex(2, 1), HaarIndex(2, 3), HaarIndex(3, 7)):
            (out,) = apply_pi(gen, h)
            print(f"  pi_{name} {h} = {out};  jump point {haar_point(h)} -> {haar_point(out)}"
                  f" = {name}({haar_point(h)}) = {evaluate(gen, haar_point(h))}")

    print("\nA few inputs mix into the first levels instead:")
    for h in (CONSTANT, HaarIndex(0, 1), HaarIndex(1, 2)):
        c = apply_pi(X0, h)
        print(f"  pi_x0 {h} = {c.to_text()}")
        print(f"      squared norm {c.norm_squared()}")

    print("\n" + verify_exceptional_tables().summary_line())
    g = hilbert_schreier_graph(6)
    print(f"Hilbert-space Schreier graph up to level 6: {len(g)} vertices, {g.edge_count()} arrows")
    print(verify_hilbert_graph(g).summary_line())


if __name__ == "__main__":
    main()
