"""Information-content complexity of networks and its neutral-model significance."""

from .automorphism import (
    AutResult,
    AutTracker,
    ResourceError,
    SearchBudgetExceeded,
    aut_order,
    aut_order_bruteforce,
    renumbering_count_log2,
)
from .complexity import (
    ComplexityReport,
    MAResult,
    complexity,
    labelled_complexity,
    log2_binomial,
    medium_articulation,
    prefix_bits,
    weighted_complexity,
)
from .generators import GeneratorSpec, erdos_renyi, preferential_attachment
from .io import (
    InteractionMatrix,
    LabelTable,
    ParseError,
    Report,
    matrix_to_foodweb,
    parse_edgelist,
    parse_pajek,
    read_report_tsv,
    write_edgelist,
    write_pajek,
    write_report,
)
from .network import (
    Network,
    NetworkError,
    add_link,
    complement,
    from_links,
    new_network,
    normalize_weights,
    threshold_subnetwork,
)
from .neutral import (
    EnsembleStats,
    SignificanceReport,
    ensemble_stats,
    normal_weight_null,
    shuffle_links,
    significance,
)

__version__ = "0.1.0"
