#include "moyal/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "fft_plan.hpp"
#include "moyal/errors.hpp"

namespace moyal {

namespace detail {

namespace {

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

FftPlan::FftPlan(int dim, int n) {
  std::vector<int> dims(static_cast<std::size_t>(dim), n);
  std::size_t total = 1;
  for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(n);
  auto* in = fftw_alloc_complex(total);
  auto* out = fftw_alloc_complex(total);
  total_ = total;
  // ESTIMATE keeps the algorithm choice, and so every output bit, fixed
  const unsigned flags = FFTW_ESTIMATE;
  forward_ = fftw_plan_dft(dim, dims.data(), in, out, FFTW_FORWARD, flags);
  backward_ = fftw_plan_dft(dim, dims.data(), in, out, FFTW_BACKWARD, flags);
  fftw_free(in);
  fftw_free(out);
  if (forward_ == nullptr || backward_ == nullptr) throw Error("FFTW planning failed");
}

// Plans die with the static cache at exit, when no other thread plans.
FftPlan::~FftPlan() {
  if (forward_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  if (backward_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(backward_));
}

const FftPlan& FftPlan::get(int dim, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<FftPlan>> cache;
  std::lock_guard lock(plan_mutex());
  auto& slot = cache[{dim, n}];
  if (!slot) slot.reset(new FftPlan(dim, n));
  return *slot;
}

namespace {

// Per-thread SIMD-aligned buffers; the plans were made for aligned arrays.
struct Scratch {
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  std::size_t size = 0;

  ~Scratch() {
    fftw_free(in);
    fftw_free(out);
  }
  void reserve(std::size_t n) {
    if (n <= size) return;
    fftw_free(in);
    fftw_free(out);
    in = fftw_alloc_complex(n);
    out = fftw_alloc_complex(n);
    size = n;
  }
};

void run(void* plan, std::size_t total, const std::complex<double>* in, std::complex<double>* out) {
  thread_local Scratch scratch;
  scratch.reserve(total);
  std::copy(in, in + total, reinterpret_cast<std::complex<double>*>(scratch.in));
  fftw_execute_dft(static_cast<fftw_plan>(plan), scratch.in, scratch.out);
  const auto* res = reinterpret_cast<const std::complex<double>*>(scratch.out);
  std::copy(res, res + total, out);
}

}  // namespace

void FftPlan::forward(const std::complex<double>* in, std::complex<double>* out) const {
  run(forward_, total_, in, out);
}

void FftPlan::backward(const std::complex<double>* in, std::complex<double>* out) const {
  run(backward_, total_, in, out);
}

}  // namespace detail

namespace {

// (-1)^(sum of multi-index components) for every flat index
std::vector<double> checkerboard(const GridSpec& spec) {
  std::vector<double> s(spec.size());
  const auto n = static_cast<std::size_t>(spec.n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t rest = i;
    std::size_t parity = 0;
    for (int a = 0; a < spec.dim; ++a) {
      parity += rest % n;
      rest /= n;
    }
    s[i] = (parity % 2 == 0) ? 1.0 : -1.0;
  }
  return s;
}

}  // namespace

GridFunction fft_forward(const GridFunction& g) {
  const GridSpec& spec = g.spec();
  const auto sign = checkerboard(spec);
  std::vector<Complex> in(g.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = sign[i] * g[i];
  std::vector<Complex> out(g.size());
  detail::FftPlan::get(spec.dim, spec.n).forward(in.data(), out.data());
  const double weight = std::pow(spec.spacing(), spec.dim);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= sign[i] * weight;
  return GridFunction(spec, std::move(out));
}

GridFunction fft_inverse(const GridFunction& ghat) {
  const GridSpec& spec = ghat.spec();
  const auto sign = checkerboard(spec);
  std::vector<Complex> in(ghat.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = sign[i] * ghat[i];
  std::vector<Complex> out(ghat.size());
  detail::FftPlan::get(spec.dim, spec.n).backward(in.data(), out.data());
  const double weight = std::pow(1.0 / spec.length, spec.dim);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= sign[i] * weight;
  return GridFunction(spec, std::move(out));
}

}  // namespace moyal
