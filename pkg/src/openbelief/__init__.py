"""Open-world belief functions: mass assignments that may charge the empty
set, belief/plausibility, combination rules, evidence distances, conflict
models, evidence documents, and reproducible sweep experiments.

The package also ships a FastAPI service (``openbelief.service``) exposing
every operation over HTTP, and a thin CLI client (``openbelief.cli``).
"""

from .combination import (
    CombinationOutcome,
    Rule,
    combine_sequence,
    conflict_coefficient,
    dempster_combine,
    gbel,
    gcr_combine,
    gpl,
)
from .conflict import (
    ConflictMeasure,
    ConflictModel,
    ConflictVerdict,
    generalized_cf,
    judge_conflict,
    liu_cf,
    modified_cf,
)
from .distances import EMPTY_EMPTY_SIMILARITY, gbpa_distance, jaccard_index
from .documents import (
    EvidenceDocument,
    emit_table,
    parse_evidence_document,
    serialize_evidence_document,
)
from .errors import DocumentError, DomainError, EvidenceError, FrameError, MassError
from .experiments import (
    run_experiment,
    run_fig1_sweep,
    run_fig2_sweep,
    run_fig4_sweep,
    run_table1,
)
from .frames import (
    Frame,
    Gbpa,
    ProbDist,
    SetAlgebra,
    Subset,
    is_classical,
    make_frame,
    make_gbpa,
    make_subset,
    set_algebra,
)
from .transforms import betp, dif_betp

__version__ = "0.1.0"

__all__ = [
    "CombinationOutcome",
    "ConflictMeasure",
    "ConflictModel",
    "ConflictVerdict",
    "DocumentError",
    "DomainError",
    "EMPTY_EMPTY_SIMILARITY",
    "EvidenceDocument",
    "EvidenceError",
    "Frame",
    "FrameError",
    "Gbpa",
    "MassError",
    "ProbDist",
    "Rule",
    "SetAlgebra",
    "Subset",
    "betp",
    "combine_sequence",
    "conflict_coefficient",
    "dempster_combine",
    "dif_betp",
    "emit_table",
    "gbel",
    "gbpa_distance",
    "gcr_combine",
    "generalized_cf",
    "gpl",
    "is_classical",
    "jaccard_index",
    "judge_conflict",
    "liu_cf",
    "make_frame",
    "make_gbpa",
    "make_subset",
    "modified_cf",
    "parse_evidence_document",
    "run_experiment",
    "run_fig1_sweep",
    "run_fig2_sweep",
    "run_fig4_sweep",
    "run_table1",
    "serialize_evidence_document",
    "set_algebra",
    "__version__",
]
