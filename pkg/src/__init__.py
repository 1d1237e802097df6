"""
Brauer Blocks

Blocks of the Brauer algebra B_n(delta) through the geometry of the
type-D Weyl group: orbit membership, balanced pairs, abaci and p-cores.
"""

__version__ = "1.0.0"
