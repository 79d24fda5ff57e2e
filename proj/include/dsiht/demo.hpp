#pragma once

#include <ostream>

// Replays the worked examples embedded with the library against their
// reference values (absolute tolerance 5e-4 per entry). Each function
// returns the number of failed examples and prints one PASS/FAIL line per
// example to `out` (pass nullptr to stay quiet).
namespace dsiht::demo {

int check_basic_kernels(std::ostream* out);       // 2-point kernels
int check_real_transform(std::ostream* out);      // real 6-point cascade
int check_complex_transforms(std::ostream* out);  // complex 4-point matrices
int check_qr_4x4(std::ostream* out);              // 4x4 QR/QL + baseline
int check_qr_6x6(std::ostream* out);              // 6x6 QR, mixed schedule

/// All of the above; returns the total failure count.
int run_all(std::ostream* out);

}  // namespace dsiht::demo
