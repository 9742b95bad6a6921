#pragma once

#include <complex>
#include <vector>

namespace cpnoise {

// In-place complex DFT, unnormalized: X_k = sum_n x_n e^{-2pi i k n / N}
// (forward) or e^{+2pi i k n / N} (inverse). Radix-2 when N is a power of
// two, direct O(N^2) evaluation otherwise.
void dft(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace cpnoise
