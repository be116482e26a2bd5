#pragma once

// FFTW plans cached per (dim, n). Planning is serialized; execution copies
// through per-thread aligned buffers and is thread-safe.

#include <complex>
#include <cstddef>

namespace moyal::detail {

class FftPlan {
 public:
  /// The process-wide plan for an n^dim complex transform.
  static const FftPlan& get(int dim, int n);

  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  ~FftPlan();

  /// out[m] = sum_j in[j] e(-j.m/n); unnormalized, out-of-place.
  void forward(const std::complex<double>* in, std::complex<double>* out) const;
  /// out[j] = sum_m in[m] e(+j.m/n); unnormalized, out-of-place.
  void backward(const std::complex<double>* in, std::complex<double>* out) const;

 private:
  FftPlan(int dim, int n);

  void* forward_ = nullptr;
  void* backward_ = nullptr;
  std::size_t total_ = 0;
};

}  // namespace moyal::detail
