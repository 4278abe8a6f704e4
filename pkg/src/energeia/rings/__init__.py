from .assignment import (EnergyAssignment, constant, random_assignment, random_element,
                         ring_from_header, sample_units, symbolic_generators, topological)
from .base import Ring, require
from .free import FreeElement, FreeRing
from .hypercomplex import (OCTONION, QUATERNION, QUATERNION_FLOAT, Octonion, Quaternion,
                           QuaternionRing)
from .poly import Poly, PolyRing
from .scalar import COMPLEX, GAUSSIAN, RATIONAL, GaussianRational

__all__ = [
    "COMPLEX", "GAUSSIAN", "OCTONION", "QUATERNION", "QUATERNION_FLOAT", "RATIONAL",
    "EnergyAssignment", "FreeElement", "FreeRing", "GaussianRational", "Octonion", "Poly",
    "PolyRing", "Quaternion", "QuaternionRing", "Ring", "constant", "random_assignment",
    "random_element", "require", "ring_from_header", "sample_units", "symbolic_generators",
    "topological",
]
