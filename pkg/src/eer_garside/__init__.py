"""Garside structure for the braid groups of complex reflection type (e, e, r).

Words are tuples of generator indices in the canonical order
t0 < ... < t_{e-1} < s3 < ... < sr; signed words encode the inverse of
generator i as ``~i``.
"""

from .errors import (
    BudgetExceeded,
    GarsideError,
    NoPeriodFound,
    NotComplemented,
    NotHomogeneous,
    ParseError,
    PresentationError,
    StuckReversal,
)
from .garside import (
    Circle,
    EERGarside,
    GarsideMonoid,
    NormalForm,
    braid_circle,
    circle_make,
    lambda_word,
    psi_embed,
    simples_closed,
    simples_oracle,
)
from .presentation import (
    Generator,
    Presentation,
    Relation,
    build_classical_a,
    build_classical_b,
    build_dual_i2,
    build_eer,
    dumps,
    loads,
    reverse_presentation,
)
from .reversing import check_completeness, cube_condition, left_reverse, right_reverse

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Circle",
    "EERGarside",
    "GarsideError",
    "GarsideMonoid",
    "Generator",
    "NoPeriodFound",
    "NormalForm",
    "NotComplemented",
    "NotHomogeneous",
    "ParseError",
    "Presentation",
    "PresentationError",
    "Relation",
    "StuckReversal",
    "braid_circle",
    "build_classical_a",
    "build_classical_b",
    "build_dual_i2",
    "build_eer",
    "check_completeness",
    "circle_make",
    "cube_condition",
    "dumps",
    "lambda_word",
    "left_reverse",
    "loads",
    "psi_embed",
    "reverse_presentation",
    "right_reverse",
    "simples_closed",
    "simples_oracle",
]
