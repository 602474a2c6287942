from .circle import Circle, braid_circle, circle_make
from .eer import (
    EERGarside,
    classical_b_delta,
    classical_b_monoid,
    height,
    lambda_decompositions,
    lambda_word,
    phi,
    phi_order,
    psi_embed,
)
from .monoid import GarsideMonoid, NormalForm, sort_words
from .simples import (
    LambdaDivisor,
    Simple,
    format_simple,
    lambda_divisors,
    lattice_dot,
    simples_closed,
    simples_oracle,
)
