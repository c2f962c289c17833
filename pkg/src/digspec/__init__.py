"""Neighbourhood-intersection spectra of finite digraphs.

Core objects: permutations and permutation groups on {0..n-1} (perm),
digraphs as binary relations with bit-packed adjacency rows (reldig),
digraph automorphism groups (aut), the intersection-spectrum machinery and
the dichotomy classifier (spectrum), transformation synchronisation
(sync), and exhaustive desk-scale verification suites (oracle).
"""

from digspec import aut, cli, oracle, perm, reldig, spectrum, sync

__version__ = "0.1.0"

__all__ = ["perm", "reldig", "aut", "spectrum", "sync", "oracle", "cli", "__version__"]
