"""gnnbench: GNN node-classification bench over exported dataset bundles."""

from .auc import macro_ovr_auc
from .bench import BenchRunConfig, run_bench
from .loader import Bundle, BundleError, find_bundles, load_bundle
from .models import SUPPORTED_MODELS, build_graph_tensors, build_model
from .train import TrainConfig, train_and_score

__version__ = "0.1.0"
