"""Deterministic one-query oracle classification on two qudits of dimension d = 2^n.

A d-level control qudit plus one auxiliary register decide whether a
Boolean table f: {0..d-1} -> {0, 1} is constant or balanced with a single
oracle query, against d/2 + 1 queries for any deterministic classical
algorithm. The same circuit recovers the hidden string of a linear
function (Bernstein-Vazirani) and classifies multivalued tables by parity.
No step of the computation entangles the two registers, which the library
certifies by Schmidt-rank analysis.

Layers:

* states    -- normalized state vectors, tensor products, Schmidt reports
* hadamard  -- the +-1/sqrt(d) transform: dense fixture matrix and the
               O(d log d) in-place butterfly
* oracles   -- oracle tables, classification, generation, JSON files
* circuits  -- oracle gates, the pipeline, the three algorithm drivers
* classical -- classical baselines and the exhaustive query lower bound
* cli       -- the `quditdeutsch` command-line front end
"""

from .states import (
    JointState,
    QuditState,
    SchmidtReport,
    basis_state,
    fidelity,
    schmidt_analyze,
    states_equal_up_to_phase,
    tensor,
)
from .hadamard import (
    apply_hadamard,
    bitwise_inner,
    fwht_inplace,
    hadamard_matrix,
    is_power_of_two,
)
from .oracles import (
    BooleanOracle,
    BVOracle,
    CountedOracle,
    MultiOracle,
    OracleClass,
    OracleDimensionError,
    OracleFormatError,
    ParityClass,
    bv_expand,
    classify_boolean,
    classify_parity,
    enumerate_balanced,
    load_oracle,
    oracle_from_dict,
    oracle_to_dict,
    random_oracle,
    random_parity_oracle,
    save_oracle,
)
from .circuits import (
    BVRecovery,
    ClassificationResult,
    MeasurementBasis,
    MeasurementDistribution,
    OracleMode,
    apply_controlled_shift,
    apply_phase_oracle,
    aux_minus_amplitudes,
    measure,
    run_bernstein_vazirani,
    run_deutsch,
    run_parity,
    sample,
)
from .classical import (
    AdversaryReport,
    BVTranscript,
    QueryTranscript,
    adversary_search,
    classical_bv,
    classical_classify,
)

__version__ = "0.1.0"

__all__ = [
    "AdversaryReport",
    "BVOracle",
    "BVRecovery",
    "BVTranscript",
    "BooleanOracle",
    "ClassificationResult",
    "CountedOracle",
    "JointState",
    "MeasurementBasis",
    "MeasurementDistribution",
    "MultiOracle",
    "OracleClass",
    "OracleDimensionError",
    "OracleFormatError",
    "OracleMode",
    "ParityClass",
    "QueryTranscript",
    "QuditState",
    "SchmidtReport",
    "adversary_search",
    "apply_controlled_shift",
    "apply_hadamard",
    "apply_phase_oracle",
    "aux_minus_amplitudes",
    "basis_state",
    "bitwise_inner",
    "bv_expand",
    "classical_bv",
    "classical_classify",
    "classify_boolean",
    "classify_parity",
    "enumerate_balanced",
    "fidelity",
    "fwht_inplace",
    "hadamard_matrix",
    "is_power_of_two",
    "load_oracle",
    "measure",
    "oracle_from_dict",
    "oracle_to_dict",
    "random_oracle",
    "random_parity_oracle",
    "run_bernstein_vazirani",
    "run_deutsch",
    "run_parity",
    "sample",
    "save_oracle",
    "schmidt_analyze",
    "states_equal_up_to_phase",
    "tensor",
]
