from .brauer import (
    identity, permutation_diagram, x_ij, cup_cap, embed, propagating_count,
    as_permutation, compose_permutations, compose, all_diagrams, random_diagram,
    parse_diagram, format_diagram
)
from .algebra import element, basis, one, add, scale, multiply, e_n, build_Tn
