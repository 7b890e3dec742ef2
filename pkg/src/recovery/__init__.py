from src.recovery.ddagger import SignedSubsetMultiset, ddagger_symbolic
from src.recovery.matrix import RecoveryMatrix, recovery_matrix
from src.recovery.partition import (
    MuOracle,
    ddagger_numeric,
    ddagger_values,
    recover_partition,
)
