"""kummerlat: exact lattice and torus-quotient computations.

Library layers:

* `lattice` - integer Gram lattices, Smith normal form, discriminant
  groups, root enumeration, glue vectors and overlattices;
* `ade` - ADE configurations, the orbifold deficiency m(C) and the
  exhaustive census of configurations with prescribed m and rank;
* `divisibility` - even / 3-divisible set candidates, double-cover
  transforms and the configuration nonexistence checker;
* `kummer` - the ten torus-quotient curve lattices and the two explicit
  primitive saturations with their glue data;
* `torus` - finite affine quaternion group actions on 4-tori: fixed
  points, orbits, stabilizers and quotient singularities.

Everything is exact: Python ints and `fractions.Fraction` throughout.
All public objects are immutable and the operations are pure functions,
safe for concurrent use; outputs are deterministic.
"""

from .ade import (
    ADEConfig,
    DynkinGraph,
    InvalidComponent,
    ParseError,
    closed_form_disc,
    dynkin,
    enumerate_configs,
    gram,
    m_value,
    max_disjoint_curves,
    parse_config,
    rank,
    render_config,
)
from .divisibility import (
    DivisibleCandidate,
    NonReducedIntersection,
    NotADEAfterContraction,
    ObstructionReport,
    ObstructionStep,
    check_nonexistence,
    double_cover_transform,
    enriques_census,
    even_set_candidates,
    required_even_sets,
    three_divisible_candidates,
)
from .kummer import (
    KummerLatticeSpec,
    KummerReport,
    NoIntegralOrientation,
    build_F,
    build_group_report,
    build_K_Q8hat,
    build_K_T24hat,
    verify_root_equality,
)
from .lattice import (
    DegenerateLattice,
    DiscriminantGroup,
    GlueVector,
    GramLattice,
    LengthBoundResult,
    NonIntegralGlue,
    NotASublattice,
    NotInDual,
    NotNegativeDefinite,
    OddGlue,
    OverlatticeResult,
    discriminant_group,
    length_bound_check,
    overlattice,
    q_value,
    roots,
)
from .snf import det_int, hermite_row_basis, smith_normal_form
from .torus import (
    AffineTorusMap,
    ClosureExceedsBound,
    FixedPointSet,
    NonIsolatedFixedLocus,
    QuatRational,
    SingularityReport,
    TorusGroup,
    TorusLattice,
    UnrecognizedGroup,
    abcd_shorthand,
    fixed_points,
    left_mult_matrix,
    lieberman_check,
    parse_abcd,
    singularity_configuration,
    stabilizer_ade_type,
    standard_group,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
