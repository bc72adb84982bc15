from schublas.core.service.verification.suites import (
    SUITES,
    VerificationService,
    permutations_up_to,
    run_suite,
    snowy_box,
)

__all__ = ["SUITES", "VerificationService", "permutations_up_to", "run_suite", "snowy_box"]
