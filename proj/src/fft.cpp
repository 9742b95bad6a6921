#include "cpnoise/fft.hpp"

#include <cmath>
#include <numbers>

namespace cpnoise {

using cd = std::complex<double>;

static bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

static void fft_radix2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const cd wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cd u = a[i + k];
                const cd v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

static void dft_direct(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    std::vector<cd> out(n);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        cd s(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(m) / static_cast<double>(n);
            s += a[m] * cd(std::cos(ang), std::sin(ang));
        }
        out[k] = s;
    }
    a = std::move(out);
}

void dft(std::vector<cd>& a, bool inverse) {
    if (a.size() < 2) return;
    if (is_pow2(a.size()))
        fft_radix2(a, inverse);
    else
        dft_direct(a, inverse);
}

}  // namespace cpnoise
