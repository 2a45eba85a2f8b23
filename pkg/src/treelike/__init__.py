"""Tree-like tableaux, alternative tableaux and linked partitions.

Construction, exact enumeration, the five bijections between the families,
and verification of their weighted-count identities by exhaustive
aggregation.
"""

from .alternative import (
    AlternativeTableau,
    ATStats,
    TypeBAlternativeTableau,
    TypeBStats,
    enumerate_at_oracle,
    is_star,
    is_symmetric_at,
    make_at,
    make_atb,
    reflect_at,
    stats_at,
    stats_atb,
    validate_at,
    validate_atb,
)
from .bijections import (
    alpha,
    alpha_inv,
    beta,
    beta_inv,
    gamma,
    gamma_inv,
    phi,
    phi_b,
    psi,
    psi_b,
)
from .diagrams import (
    FerrersDiagram,
    ShiftedDiagram,
    corners,
    parse_border,
    shift,
    transpose,
)
from .errors import TreelikeError, ValidationReport
from .linked import (
    LinkedPartition,
    TypeBLinkedPartition,
    blocks,
    classify,
    enumerate_lp,
    enumerate_lpb,
    from_blocks,
    legal_destinations,
    make_lp,
    make_lpb,
    maximal_good_path,
    maximal_path,
    subset_member,
)
from .polynomials import (
    A,
    B,
    X,
    BivariatePolynomial,
    closed_form,
    rising_factorial,
)
from .tableaux import (
    TableauStats,
    TreeLikeTableau,
    enumerate_sym_tlt_oracle,
    enumerate_tlt_oracle,
    is_symmetric_tlt,
    make_tlt,
    reflect_tlt,
    stats_tlt,
    validate_tlt,
)
from .verify import aggregate, transport_generate, verify_all, verify_identity

__version__ = "0.1.0"
