#pragma once

namespace dsiht::detail {

// Fault-injection switches for the verification demo. Production code paths
// read them once per call; both default to off. Only tests flip these.
struct FaultKnobs {
    // Analytic recurrence reads the prefix sums after absorbing the current
    // component instead of before.
    bool analytic_postupdate_correlation = false;
    // M-kind cascade accumulates -norm into the running pivot.
    bool m_pivot_sign_flip = false;
};

FaultKnobs& fault_knobs();

}  // namespace dsiht::detail
