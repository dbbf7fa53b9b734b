"""A bundled corpus of small presentations used for cross-validation.

Every member is of pure height (principal prime ideals, complete
intersections, or the zero ideal), covers p in {2, 3, 5}, ramification
indices 2 and 3, and at most three variables, and includes both regular and
singular examples.  The differential tests iterate over all of them.
"""

from __future__ import annotations

from .criterion import RingPresentation
from .dvr import EisensteinDVR


def _dvr(p: int, e: int) -> EisensteinDVR:
    coeffs = [0] * e
    coeffs[0] = -p
    return EisensteinDVR(p, tuple(coeffs))


def standard_corpus() -> dict[str, RingPresentation]:
    """Name -> presentation; insertion order is the canonical iteration order."""
    members = {
        "uniformizer-graph": RingPresentation(_dvr(2, 2), ("x",), ["x - pi"]),
        "square-root-of-pi-p3": RingPresentation(_dvr(3, 2), ("x",), ["x^2 - pi"]),
        "square-root-of-pi-p5": RingPresentation(_dvr(5, 2), ("x",), ["x^2 - pi"]),
        "hyperbola-through-pi": RingPresentation(_dvr(2, 3), ("x", "y"), ["x*y - pi"]),
        "pinch-p3": RingPresentation(_dvr(3, 2), ("x", "y"), ["x^2 - pi^2*y"]),
        "cusp-like-p5": RingPresentation(_dvr(5, 2), ("x", "y"), ["x^3 - pi^2*y"]),
        "full-ring": RingPresentation(_dvr(3, 3), ("x", "y"), []),
        "two-gen-complete-intersection": RingPresentation(
            _dvr(2, 2), ("x", "y"), ["x - pi", "y - pi"]
        ),
        "pi-cubed-square": RingPresentation(_dvr(5, 2), ("x",), ["x^2 - pi^3"]),
        "square-root-e3": RingPresentation(_dvr(3, 3), ("x",), ["x^2 - pi"]),
        "line-times-fiber-p2": RingPresentation(_dvr(2, 3), ("x", "y"), ["x^2 - pi*y"]),
        "three-vars-ci": RingPresentation(
            _dvr(2, 2), ("x", "y", "z"), ["x - pi", "y*z - pi"]
        ),
    }
    return members
