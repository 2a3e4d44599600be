"""Secant combinatorics of the regular n-gon and the cubic minors of the
cyclic Gaussian graphical model, in exact arithmetic."""

from cyclicggm.binomials import IdentityId, binom, msaft_count_closed, verify_identity
from cyclicggm.ideal import generate_st_minors, initial_components, leading_ideal, s_pair_check
from cyclicggm.lattice import build_strip_graph, count_msafts_lgv, count_paths, e_closed
from cyclicggm.msafts import (
    dihedral_classes,
    enumerate_forbidden_triples,
    enumerate_msafts_bruteforce,
    enumerate_msafts_via_walks,
    is_msaft,
    secant_walk,
)
from cyclicggm.secants import DihedralElement, NGon, Secant, SecantSet

__version__ = "0.1.0"
