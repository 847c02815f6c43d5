#pragma once

#include <complex>
#include <span>
#include <vector>

namespace logfcc::fft {

// Thin wrappers over FFTW. Plan creation is serialized internally, so these
// are safe to call from several threads.

/// Unnormalized DCT-I: y_k = x_0 + (-1)^k x_{n-1} + 2 sum_{j=1}^{n-2} x_j cos(pi j k / (n-1)).
std::vector<double> dct1(std::span<const double> x);

/// Smallest 2^a 3^b 5^c 7^d that is at least n.
std::size_t fast_size(std::size_t n);

/// Linear convolution, first `out_len` entries of (a * b).
std::vector<std::complex<double>> convolve(std::span<const double> a,
                                           std::span<const std::complex<double>> b,
                                           std::size_t out_len);

}  // namespace logfcc::fft
