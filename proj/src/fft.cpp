#include "logfcc/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

namespace logfcc::fft {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <class T>
struct FftwBuffer {
  explicit FftwBuffer(std::size_t n) : data(static_cast<T*>(fftw_malloc(sizeof(T) * std::max<std::size_t>(n, 1)))) {
    if (!data) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  T* data;
};

class Plan {
 public:
  template <class Make>
  explicit Plan(Make&& make) {
    std::lock_guard lock(planner_mutex());
    plan_ = make();
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

}  // namespace

std::vector<double> dct1(std::span<const double> x) {
  const auto n = x.size();
  if (n < 2) throw std::invalid_argument("dct1: need at least two samples");
  FftwBuffer<double> in(n), out(n);
  Plan plan([&] { return fftw_plan_r2r_1d(static_cast<int>(n), in.data, out.data, FFTW_REDFT00, FFTW_ESTIMATE); });
  std::copy(x.begin(), x.end(), in.data);
  plan.execute();
  return {out.data, out.data + n};
}

std::size_t fast_size(std::size_t n) {
  std::size_t best = std::bit_ceil(n);
  for (std::size_t p7 = 1; p7 < best; p7 *= 7) {
    for (std::size_t p5 = p7; p5 < best; p5 *= 5) {
      for (std::size_t p3 = p5; p3 < best; p3 *= 3) {
        std::size_t m = p3;
        while (m < n) m *= 2;
        best = std::min(best, m);
      }
    }
  }
  return best;
}

std::vector<std::complex<double>> convolve(std::span<const double> a, std::span<const std::complex<double>> b,
                                           std::size_t out_len) {
  std::vector<std::complex<double>> result(out_len);
  if (a.empty() || b.empty() || out_len == 0) return result;

  // Entries past out_len cannot reach the first out_len outputs.
  a = a.first(std::min(a.size(), out_len));
  b = b.first(std::min(b.size(), out_len));
  const std::size_t len = fast_size(a.size() + b.size() - 1);
  const std::size_t half = len / 2 + 1;
  FftwBuffer<double> ra(len);
  FftwBuffer<fftw_complex> fa(half), fb(len);
  Plan forward_a([&] { return fftw_plan_dft_r2c_1d(static_cast<int>(len), ra.data, fa.data, FFTW_ESTIMATE); });
  Plan forward_b([&] { return fftw_plan_dft_1d(static_cast<int>(len), fb.data, fb.data, FFTW_FORWARD, FFTW_ESTIMATE); });
  Plan backward([&] { return fftw_plan_dft_1d(static_cast<int>(len), fb.data, fb.data, FFTW_BACKWARD, FFTW_ESTIMATE); });

  std::fill(ra.data, ra.data + len, 0.0);
  std::copy(a.begin(), a.end(), ra.data);
  for (std::size_t i = 0; i < len; ++i) {
    fb.data[i][0] = i < b.size() ? b[i].real() : 0.0;
    fb.data[i][1] = i < b.size() ? b[i].imag() : 0.0;
  }
  forward_a.execute();
  forward_b.execute();
  for (std::size_t i = 0; i < len; ++i) {
    // The spectrum of real input is Hermitian: A[len - i] = conj(A[i]).
    const bool low = i < half;
    const double ar = low ? fa.data[i][0] : fa.data[len - i][0];
    const double ai = low ? fa.data[i][1] : -fa.data[len - i][1];
    const double br = fb.data[i][0], bi = fb.data[i][1];
    fb.data[i][0] = ar * br - ai * bi;
    fb.data[i][1] = ar * bi + ai * br;
  }
  backward.execute();

  const double scale = 1.0 / static_cast<double>(len);
  for (std::size_t i = 0; i < out_len && i < len; ++i) {
    result[i] = {fb.data[i][0] * scale, fb.data[i][1] * scale};
  }
  return result;
}

}  // namespace logfcc::fft
