"""Graph invariants deciding whether a binomial edge ideal is of König
type, with AT-free / weakly-closed recognition and a batch verification
harness over graph6 streams."""

from .graphs import (
    BudgetExceeded,
    Graph,
    Graph6Error,
    closed_neighborhood,
    complement,
    component_count,
    connected_components,
    delete_vertices,
    emit_graph6,
    is_connected,
    parse_graph6,
)
from .invariants import (
    CutSetFamily,
    InvariantReport,
    brute_force_linear_forest,
    compute_report,
    cut_sets,
    ideal_height,
    is_koenig_type,
    is_unmixed,
    max_linear_forest,
    path_cover_number,
    scattering_number,
    unrestricted_scattering_number,
)
from .recognition import (
    AsteroidalTriple,
    WeaklyClosedOrdering,
    find_asteroidal_triple,
    find_weakly_closed_ordering,
    is_at_free,
    is_cocomparability_oracle,
)
from .algebra import (
    BinomialGenerator,
    MinimalPrime,
    binomial_generators,
    emit_algebra_script,
    minimal_primes,
)
from .harness import (
    BatchOptions,
    VerificationSummary,
    analyze_stream,
    verify_conjecture,
)

__version__ = "0.1.0"
