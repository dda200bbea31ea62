"""Positive words, binary forests and the piecewise-linear model side by side.

Run with ``python demos/forests_and_relations.py``.
"""

from __future__ import annotations

from thompsonf import Word, compose, evaluate, generator, word_to_forest, word_to_plhomeo
from thompsonf.monoid import verify_forest_oracle, verify_relations


def main() -> None:
    print("The generator x2 as a map of [0, 1]:")
    print("   ", generator(2).to_text())

    w = Word.parse("x0 x1 x0")
    f = word_to_plhomeo(w)
    print(f"\nThe word {w} sends 1/2 to {evaluate(f, '1/2')} and 3/4 to {evaluate(f, '3/4')}.")
    print("Its forest has", word_to_forest(w).caret_count(), "carets:", word_to_forest(w).to_text())

    print("\nThe defining relation x0 x2 = x3 x0 holds in both models:")
    lhs, rhs = Word.parse("x0 x2"), Word.parse("x3 x0")
    print("    maps equal:   ", word_to_plhomeo(lhs) == word_to_plhomeo(rhs))
    print("    forests equal:", word_to_forest(lhs) == word_to_forest(rhs))
    print("    and x0 x1 differs from x1 x0:", compose(generator(0), generator(1)) != compose(generator(1), generator(0)))

    print("\nExhaustive checks:")
    print("   ", verify_relations(10).summary_line())
    print("   ", verify_forest_oracle(4, 3).summary_line())


if __name__ == "__main__":
    main()
