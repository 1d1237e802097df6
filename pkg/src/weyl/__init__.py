from .action import (
    reflect, dot_action_shifted, apply_generator, apply_word, translation,
    generators, parse_word, format_word
)
from .orbits import (
    verify_witness, orbit_member_finite, orbit_member_affine, orbit_member,
    orbit_key, brute_force_witness, orbit_closure, word_from_witness
)
from .chains import ChainStep, linking_path, linking_chain
