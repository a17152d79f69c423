"""Rejection-sampling accelerated k-means++ seeding.

A centered dataset is preprocessed once into per-point norms and a
log-time weighted sampling tree; each subsequent center is then drawn in
time sublinear in the dataset size by rejection sampling against a fixed
norm-based proposal. Reference samplers (exact seeding, the delta-mixture
oracle, uniform) and a benchmark harness round out the package.
"""

from .errors import RskppError
from .ingest import IngestOptions, load, write_csv, write_libsvm
from .metrics import CostReport, Summary, bias_variance_check, clustering_cost, estimate_beta, summarize
from .model import (
    DEFAULT_SAFETY_CAP,
    Dataset,
    SeedingConfig,
    SeedingResult,
    SeedingTrace,
    TraceStep,
    UNBOUNDED,
    validate_config,
)
from .sampling import ProposalSampler, RejectionOutcome, acceptance_ratio, d2_sample, expected_parallel_rounds
from .seeding import (
    Preprocessed,
    Variant,
    build_trace,
    d2_probabilities,
    delta_kmeanspp,
    exact_kmeanspp,
    mixture_probabilities,
    preprocess,
    rs_kmeanspp,
    run_variant,
    trace_seeding,
    uniform_seeding,
)
from .sqtree import SampleTree
from .synth import planted_gaussians

__version__ = "0.1.0"

__all__ = [
    "CostReport",
    "DEFAULT_SAFETY_CAP",
    "Dataset",
    "IngestOptions",
    "Preprocessed",
    "ProposalSampler",
    "RejectionOutcome",
    "RskppError",
    "SampleTree",
    "SeedingConfig",
    "SeedingResult",
    "SeedingTrace",
    "Summary",
    "TraceStep",
    "UNBOUNDED",
    "Variant",
    "acceptance_ratio",
    "bias_variance_check",
    "build_trace",
    "clustering_cost",
    "d2_probabilities",
    "d2_sample",
    "delta_kmeanspp",
    "estimate_beta",
    "exact_kmeanspp",
    "expected_parallel_rounds",
    "load",
    "mixture_probabilities",
    "planted_gaussians",
    "preprocess",
    "rs_kmeanspp",
    "run_variant",
    "summarize",
    "trace_seeding",
    "uniform_seeding",
    "validate_config",
    "write_csv",
    "write_libsvm",
]
