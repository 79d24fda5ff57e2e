#include "dsiht/detail/knobs.hpp"

namespace dsiht::detail {

FaultKnobs& fault_knobs() {
    static FaultKnobs knobs;
    return knobs;
}

}  // namespace dsiht::detail
