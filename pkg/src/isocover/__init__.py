"""Monodromy-side toolkit for isomonodromic deformations coming from orbifold covers.

Unimodular 2x2 matrices over floating or exact Gaussian-rational scalars,
representation spaces of the five-punctured sphere, the twice-punctured torus
and genus two, the maps between them induced by elliptic and bielliptic
covers, word models of the groups involved, and the enumeration of orbifold
covers that can give rise to such deformations.
"""

from .errors import (
    DegenerateError,
    InvariantViolation,
    IsocoverError,
    MalformedCandidateError,
    NoConjugatorError,
    NotUnimodularError,
    ReducibleError,
    SamplerError,
    SingularMatrixError,
)
from .maps import (
    bielliptic_involution,
    five_to_genus2,
    genus2_to_five,
    phi1_descend,
    phi1_fiber,
    phi1_pullback,
    pi_descend,
    pi_fiber,
    pi_pullback,
)
from .orbifold import (
    INF,
    CoverCandidate,
    OrbifoldSignature,
    area,
    check_candidate,
    classify,
    enumerate_candidates,
    is_hyperbolic,
    teich_dim,
)
from .hurwitz import is_realizable, sigma4_obstruction
from .reps import (
    FivePuncturedRep,
    GenusTwoRep,
    Theta,
    TorusTwoRep,
    TorusTwoRepC,
    is_conjugate,
    reparam_c_to_d,
    reparam_d_to_c,
    sample_five_rep,
    sample_torus_rep,
    validate,
)
from .scalar import GaussianRational, get_epsilon, set_epsilon, tolerance
from .sl2 import (
    Mat2,
    commutator,
    conjugator,
    fricke_trace,
    inverting_involution,
    involution_matrix_printed,
    normal_form_pair,
)
from .words import Word, eval_word, involution, lift_normal_form, lift_reduce, phi_star, reduce

__version__ = "0.1.0"
