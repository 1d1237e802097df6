from .partitions import (
    conjugate, intersection, contains, removable_boxes, addable_boxes,
    hook_length, partitions_of, label_partitions,
    enumerate_label_set, in_label_set
)
from .contents import fit_to_rank, content_sequence, box_contents, content_sum, skew_boxes, is_dominant
from .text import parse_weight, format_weight, parse_partition, format_partition
