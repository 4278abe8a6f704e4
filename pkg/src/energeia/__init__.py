"""Energized simplicial complexes: connection and Green matrices over rings."""

from .complex import (ExtendedGeometry, Geometry, complement_dual, core, downward_closure,
                      f_vector, generate, omega_sign, parity_count, parse_geometry, star)
from .energy import (EnergizedComplex, chi, curvature, omega_cubic, omega_quadratic,
                     super_trace)
from .matrices import (DeterminantValue, SquareMatrix, build_g, build_L, cauchy_binet_check,
                       checkerboard, det_dieudonne, det_exact, fredholm_energy,
                       green_star_product, minor_det)
from .rings import EnergyAssignment, sample_units, symbolic_generators

__version__ = "0.1.0"
