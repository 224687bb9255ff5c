"""Counting connected normal surfaces uF + vG in the K13n586 exterior.

The genus census of these surfaces matches the Euler totient function;
this package builds the triangulation, the normal-coordinate surfaces,
the interval-pairing orbit machinery and the reductions that establish
the count, together with brute-force oracles for cross-checking.
"""

from .census import CensusRow, census, components, coprime_pair_count, totient
from .compiler import compile_surface, locate_carriers
from .intervals import (Pairing, PairingSystem, count_orbits, parse_system,
                        write_system)
from .normal_surface import (NormalCoordinates, SurfaceCoefficients,
                             check_matching, coordinates, edge_weights,
                             euler_characteristic, genus_census_entry,
                             glue_components)
from .reduction import (build_fgh, claim1_reduce, claim2_run,
                        components_via_reduction)
from .triangulation import Triangulation, build_paper_triangulation, validate

__all__ = [
    "CensusRow", "NormalCoordinates", "Pairing", "PairingSystem",
    "SurfaceCoefficients", "Triangulation", "build_fgh",
    "build_paper_triangulation", "census", "check_matching", "claim1_reduce",
    "claim2_run", "compile_surface", "components", "components_via_reduction",
    "coordinates", "coprime_pair_count", "count_orbits", "edge_weights",
    "euler_characteristic", "genus_census_entry", "glue_components",
    "locate_carriers", "parse_system", "totient", "validate", "write_system",
]

__version__ = "0.1.0"
