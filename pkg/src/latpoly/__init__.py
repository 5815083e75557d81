"""Exact lattice-polytope toolkit: widths, hollowness, canonical forms, lifts."""
from .polytope import Polytope, hull, from_columns, lattice_points, normalized_volume, size
from .width import lattice_width, width
from .canon import canonical_form, equivalent
from .hollowlab import catalog, is_hollow, is_empty, census_subpolytopes

__all__ = ["Polytope", "hull", "from_columns", "lattice_points", "normalized_volume", "size",
           "lattice_width", "width", "canonical_form", "equivalent", "catalog",
           "is_hollow", "is_empty", "census_subpolytopes"]
