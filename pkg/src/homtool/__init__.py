"""Exact graph homomorphisms, hom-complexity with certificates, and edge-covering numbers."""

from .budget import DEFAULT_BUDGET, Budget, BudgetExceeded
from .complexity import (INF, Bound, ComplexityResult, HypothesisError, Piece, QuasiHom,
                         check_quasi_hom, complexity_bounds, finiteness, hom_complexity,
                         injective_hom_complexity, strong_hom_complexity)
from .covering import (CoverCertificate, CoverResult, bipartite_dimension, cc_lower_bounds,
                       clique_cover_number, partite_dimension, particity, sigma_cover)
from .decompose import (DesignPlan, decompose_complete, design_into_target, design_quasi_hom,
                        induced_map, verify_quasi_hom)
from .generators import generate
from .graph import Graph, ModeMismatch, SubgraphRef
from .hgf import HGFError, parse_hgf, read_hgf, serialize_hgf, write_hgf
from .homs import (VertexMap, core, enumerate_homs, find_hom, find_injective_hom,
                   find_retraction, inverse_image, is_hom)
from .invariants import (chromatic_number, clique_number, is_l_partite, maximal_cliques,
                         product_coloring)

__version__ = "0.1.0"
