#ifndef JDISC_FFT_HPP
#define JDISC_FFT_HPP

#include <vector>

#include "jdisc/common.hpp"

namespace jdisc {

/// Radix-2 complex FFT with precomputed twiddles. Sizes are powers of two
/// (the angular grid guarantees that); plans are cheap and cached per grid.
class Fft {
public:
    explicit Fft(int n);

    int size() const { return n_; }

    /// In-place forward transform: X_k = sum_j x_j exp(-2 pi i j k / n).
    void forward(Complex* data) const { transform(data, -1.0); }

    /// In-place inverse transform including the 1/n factor.
    void inverse(Complex* data) const {
        transform(data, +1.0);
        const double s = 1.0 / n_;
        for (int i = 0; i < n_; ++i) data[i] *= s;
    }

    /// Unnormalized backward transform: x_j = sum_k X_k exp(+2 pi i j k / n).
    void backward(Complex* data) const { transform(data, +1.0); }

private:
    void transform(Complex* data, double sign) const;

    int n_;
    std::vector<int> bitrev_;
    std::vector<Complex> twiddle_; // exp(-2 pi i k / n), k < n/2
};

} // namespace jdisc

#endif
