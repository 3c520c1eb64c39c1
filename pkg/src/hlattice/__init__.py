"""Prime lattices on the two-armed sequence H = 6s ± 1.

Submodules:

- :mod:`hlattice.hcore` -- members, trägers, branches, lattice points
- :mod:`hlattice.sieve` -- primality oracle and segmented classification
- :mod:`hlattice.intervals` -- counts on the intervals between prime squares
- :mod:`hlattice.goldbach2` -- rhombus sides, pair censuses, Goldbach scans
- :mod:`hlattice.twins` -- twin diagonal and overhang removal
- :mod:`hlattice.prachar` -- prime pairs on rational lattice lines
- :mod:`hlattice.goldbach3` -- three-prime sums on octahedron layers
"""

from .errors import HLatticeError, NoSolution
from .hcore import Branch, HMember, LatticePoint, MemberClass, traeger_of
from .sieve import classify_segment, is_prime

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "HLatticeError",
    "HMember",
    "LatticePoint",
    "MemberClass",
    "NoSolution",
    "classify_segment",
    "is_prime",
    "traeger_of",
]
