"""House allocation on graphs: minimize total envy along edges.

Exact solvers, approximation algorithms with guarantee certificates,
the repunit/elegance calculus for complete binary trees, hardness-reduction
instance generators, and random-graph concentration experiments.
"""

from .approx import (
    ApproxCertificate,
    Layout,
    LayoutStrategy,
    heuristic_layout,
    inorder_allocation,
    layout_allocation,
    layout_width,
    trickle_down,
)
from .core import (
    Allocation,
    Graph,
    HouseValues,
    Instance,
    PrefixCutProfile,
    center_of_gravity,
    cut_size,
    envy,
    make_instance,
    min_cut_k_bruteforce,
    min_cuts_all_k,
    prefix_cut_profile,
    validate_instance,
)
from .exact import (
    ExactResult,
    bruteforce_min_max,
    cutwidth_exact_small,
    solve_exact_bruteforce,
    solve_exact_dp,
    tree_min_cut_all,
    tree_min_cut_k,
)
from .gadgets import (
    Flower,
    GadgetFamily,
    GadgetInstance,
    PartitionWitness,
    ThreePartitionInstance,
    build_flower,
    check_cheeger_constant,
    check_flower_even_cut,
    check_grid_cut_lemma,
    envy_yes_threshold,
    gen_bounded_tree_instance,
    gen_clique,
    gen_depth2_tree,
    gen_expander,
    gen_grid,
    yes_allocation,
)
from .kernels import IMPLEMENTATION
from .randgraph import (
    ConcentrationReport,
    approximation_envelope,
    arbitrary_allocation_ratio,
    concentration_check,
    epsilon_threshold,
    sample_gnp_half,
)
from .repunit import (
    EleganceRecord,
    RepunitRepresentation,
    delta_complete_binary,
    elegance,
    elegance_values,
    runs,
    runs_values,
    two_valued_instance,
    value_agnostic_gap_instances,
)

__version__ = "0.1.0"
