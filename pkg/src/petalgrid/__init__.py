"""
Petal permutations and petal grid diagrams of torus knots.

For coprime 2 <= n < s, `synthesize(n, s)` produces a strongly braided
petal permutation of the (n, s) torus knot with 2s - 2*floor(s/n) + 1
entries; `verify_torus_petal(n, s)` certifies the output through a grid
diagram, two Alexander-polynomial pipelines, and an explicit braid
conjugacy checked in Garside normal form.
"""

from .braid import (
    BraidWord,
    ConjugacyWitness,
    NormalForm,
    ascending_run,
    band_indices,
    decompose_permutation_braid,
    delta,
    delta_power_conjugacy,
    descending_run,
    format_word,
    half_twist,
    induced_permutation,
    left_normal_form,
    parse_word,
    permutation_braid,
    round_trip,
    round_trip_product,
    sigma,
    split,
    subset_braid,
    tau,
    torus_conjugacy_witness,
    words_equal,
)
from .grid import (
    Crossing,
    GridDiagram,
    PlanarDiagram,
    ValidationReport,
    build_petal_grid,
    pd_to_json,
    render_ascii,
    render_svg,
    to_planar_diagram,
    validate_petal_grid,
)
from .invariants import (
    LaurentPolynomial,
    alexander_from_closure,
    alexander_from_pd,
    bareiss_determinant,
    conjugate_band_braid,
    equal_up_to_units,
    reduced_burau,
    torus_alexander,
    verify_torus_petal,
)
from .perm import (
    IndexSubset,
    Permutation,
    compose,
    interleave,
    inverse,
    order_bijection,
    residue_perm,
)
from .petal import (
    BRAIDED,
    GENERIC,
    STRONGLY_BRAIDED,
    PetalPermutation,
    base_petal,
    classify,
    petal_to_json,
    stabilize,
    stabilize_fast,
    synthesize,
    u_indices,
)

__version__ = "0.1.0"
