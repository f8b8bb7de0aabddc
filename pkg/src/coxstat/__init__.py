"""coxstat: exact statistics, sorting factorizations and distribution
identities on permutations and signed permutations (types A, B, D)."""

from .groups import (
    Element,
    CycleDecomposition,
    Transposition,
    compose,
    cycle_decomposition,
    element_from_cycles,
    enumerate_group,
    group_order,
    identity,
    inverse,
    parse_element,
    rank,
    right_mult_transposition,
    unrank,
)
from .stats import (
    all_stats,
    cycle_count,
    inversions,
    length,
    m_b,
    neg_count,
    reflection_length,
    rl_min_count,
    stat_function,
)
from .sorting import SortCertificate, product_of_factors, selection_sort, sorting_index
from .bijections import b_code, fundamental_bijection, fundamental_bijection_inverse
from .qpoly import (
    BivarPoly,
    closed_B,
    closed_D,
    closed_S,
    closed_W,
    coxeter_exponents,
    distribution,
    q_int,
)
from .algebra import (
    FormalSum,
    diagonal_sum,
    phi_factor,
    psi_factor,
    verify_factorization,
)
from .oracle import GeneratorSet, bfs_table, check_generating_function

__version__ = "0.1.0"

SCHEMA = "coxstat/1"
