"""Sidon and generalized Sidon sets in [n] = {1, ..., n}.

Exact 4-tuple counting, the supersaturation multigraph, container
certificates with deterministic reconstruction, exhaustive enumeration
oracles, seeded random-subset machinery, and finite-n numeric audits of
the counting bounds.  All logarithms are base 2.
"""

from sidon.params import ProblemParams, lg
from sidon.core import (
    as_intset,
    build_multigraph,
    check_supersaturation,
    count_sidon_tuples,
    essential_count,
    is_sidon,
    iter_sidon_tuples,
    s_between,
    s_restricted,
    vertex_stats,
)
from sidon.enumeration import (
    CountResult,
    ExperimentResult,
    ExtremalResult,
    GrowthRow,
    capacity_bound,
    census_sidon_sets,
    count_generalized,
    count_sidon_sets,
    erdos_turan_set,
    greedy_sidon,
    growth_table,
    max_sidon,
    random_lower_bound_experiment,
    singer_set,
)
from sidon.container import (
    Certificate,
    ConditionCheck,
    ContainerChain,
    MalformedCertificateError,
    VerifyReport,
    anchored_degrees,
    build_certificate,
    clean_heavy,
    core_algorithm,
    reconstruct_containers,
    verify_certificate,
)
from sidon.prob import (
    JansonInput,
    SamplingHypothesis,
    WSampleError,
    WSampleReport,
    check_w,
    dependency_degree,
    heavy_vertices,
    janson_bound,
    sample_w,
    sampling_hypothesis,
)
from sidon.bounds import (
    BoundReport,
    Step,
    certificate_count_check,
    containers_per_certificate_check,
    family_count_check,
    log2_add,
    log2_binomial,
    log2_binomial_sum,
    log2_int,
    u_choice_product_check,
)

__version__ = "0.1.0"
