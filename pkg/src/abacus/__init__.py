from .runners import (
    bead_positions, partition_from_positions, choose_bead_count, check_bead_count,
    encode, decode, runner_counts, black_beads_on_runner, beads_changing_runners,
    orbit_equiv_abacus
)
from .cores import (
    runner_occupancy, core_positions, core_degree, p_core, is_p_core,
    core_from_defects, defect_degree, enumerate_cores
)
from .render import render, compact, parse_compact
