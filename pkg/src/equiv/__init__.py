from src.equiv.classify import EquivalenceReport, classify, population
from src.equiv.fixtures import (
    A_122,
    A_212,
    AVOIDANCE_COEFFICIENTS,
    CHART_COLUMNS,
    PUBLISHED_CHARTS,
    PRECLUSTER_COUNTS,
    RationalFixture,
    verify_rational,
)
from src.equiv.identities import (
    IdentityReport,
    axbyc_pair,
    check_axbyc,
    check_prop_we1,
    check_theorem_we3,
    a1b2c_pair,
)
from src.equiv.keys import key_hash, strong_key, wilf_key, wilf_necessary_conditions
from src.equiv.fixture_suite import CheckResult, run_fixture_suite
