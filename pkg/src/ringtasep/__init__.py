"""Exact stationary measures of the inhomogeneous TASEP on a ring.

Three independent routes to the same stationary probabilities:

* `chain` — exact linear-algebra solves of the Markov chain (rational at a
  point, polynomial via interpolation for small rings);
* `formulas` — closed product formulas in Schubert polynomials for the
  pattern-avoiding states;
* `mlq` — multiline-queue weight sums at y = 0.

Supporting machinery lives in `perms`, `poly` and `schubert`; the CLI in
`cli`.
"""

from . import chain, cli, formulas, mlq, perms, poly, schubert  # noqa: F401

__all__ = ["chain", "cli", "formulas", "mlq", "perms", "poly", "schubert"]
__version__ = "0.1.0"
