from .balanced import is_balanced
from .obstructions import content_scalar, content_obstruction, pieri_two_box_additions
from .decomposition import (
    same_block_char0, block_decomposition_char0, orbit_decomposition_affine, classes_refine
)
from .certificates import orbit_labels_below, check_split_certificate, search_split_certificates
