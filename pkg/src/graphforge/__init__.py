"""graphforge: synthetic graph-dataset generators, graph statistics, and a
benchmarking sweep harness."""

from .baselines import ppr_classifier, ppr_scores, roc_auc_ovr
from .cabam import generate_cabam
from .config import SweepConfig, build_generator_params, build_sweep_config, load_config
from .errors import (
    DegenerateGraph,
    DegenerateSample,
    DegenerateSequence,
    GenerationFailed,
    GraphForgeError,
    InfeasibleParams,
    InfeasibleSplit,
    InvalidParams,
    InvalidQuery,
    UndefinedAuc,
)
from .features import generate_features, make_split
from .graph import (
    CommunityAssignment,
    DataSplit,
    DatasetMeta,
    GeneratedDataset,
    Graph,
    community_sizes,
    degree_sequence,
)
from .harness import (
    KdeCurve,
    kde,
    performance_curves,
    regenerate_from_meta,
    run_sample,
    run_sweep,
    sample_params,
)
from .lfr import generate_lfr
from .matching import map_shared_to_generator, replicate_community_structure
from .metrics import (
    GraphMetrics,
    avg_clustering,
    compute_all,
    degree_gini,
    edge_homogeneity,
    power_law_mle,
    simpson_community,
    triangle_count,
)
from .params import CabamParams, FeatureParams, LfrParams, SbmParams, SharedDraw
from .rng import child_rng, stage_seed
from .sampling import sample_community_sizes, sample_degree_propensities
from .sbm import generate_sbm
from .storage import ResultRow, load_bundle, read_results, write_bundle

__version__ = "0.1.0"
