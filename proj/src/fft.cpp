#include "jdisc/fft.hpp"

namespace jdisc {

Fft::Fft(int n) : n_(n) {
    if (!is_power_of_two(n)) throw ConfigError("fft size must be a power of two");
    bitrev_.resize(n);
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < log2n; ++b)
            if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
        bitrev_[i] = r;
    }
    twiddle_.resize(n / 2);
    for (int k = 0; k < n / 2; ++k) {
        const double a = -2.0 * kPi * k / n;
        twiddle_[k] = Complex(std::cos(a), std::sin(a));
    }
}

void Fft::transform(Complex* data, double sign) const {
    for (int i = 0; i < n_; ++i) {
        const int j = bitrev_[i];
        if (j > i) std::swap(data[i], data[j]);
    }
    for (int len = 2; len <= n_; len <<= 1) {
        const int half = len / 2;
        const int step = n_ / len;
        for (int start = 0; start < n_; start += len) {
            for (int k = 0; k < half; ++k) {
                Complex w = twiddle_[k * step];
                if (sign > 0) w = std::conj(w);
                const Complex u = data[start + k];
                const Complex v = data[start + k + half] * w;
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
}

} // namespace jdisc
