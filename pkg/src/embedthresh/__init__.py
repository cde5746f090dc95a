"""Random simplicial complexes and their linear embeddability in R^2d."""

from .collapse import (DFaceHypergraph, PeelResult, build_hypergraph, f_dot,
                       weakly_connected_components, two_core)
from .complex import (AlphaVector, SimplicialComplex, contains_face, dimension, f_vector,
                      pure_part, sample_complex, skeleton)
from .embedding import build_embedding, verify_embedding
from .errors import (BudgetExceededError, ComputationError, ConstructionError,
                     DegeneracyError, PreconditionError)
from .geometry import (OrderType, PointConfiguration, RadonPartition, order_type,
                       orientation, radon_partition, random_configuration, simplices_intersect)
from .radon_match import (MatchReport, balanced_split_census, count_radon_matches,
                          has_radon_match, sample_radon_matches)
from .sweep import SweepRow, SweepSpec, run_sweep
from .thresholds import (Regime, binom_vector, check_degree_claim, check_ratio_claim, classify,
                         face_exponent, g_count, gamma_bound, janson_exponent,
                         verify_fvector_lemma)

__version__ = "0.1.0"
