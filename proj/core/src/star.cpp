#include "moyal/star.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <span>
#include <thread>

#include "fft_plan.hpp"
#include "moyal/errors.hpp"
#include "moyal/fft.hpp"
#include "moyal/spectral.hpp"
#include "moyal/weyl_algebra.hpp"

namespace moyal {

namespace {

// Fixed partition of the dual nodes; partial sums are reduced in chunk order
// so the result is bit-identical for any worker count.
constexpr std::size_t kChunks = 16;

void require_compatible(const GridFunction& f, const GridFunction& g, const SkewForm& sigma) {
  if (!(f.spec() == g.spec())) throw DimensionError("star_product: grid specs differ");
  if (sigma.dim() != f.spec().dim) throw DimensionError("star_product: form dimension differs from grid");
}

// out = scale * f_0 (x) f_1 (x) ... row-major, each factor of length n.
template <class Factors>
void tensor_product(const Factors& factors, Complex scale, std::size_t n, std::vector<Complex>& out) {
  out[0] = scale;
  std::size_t size = 1;
  for (const auto& fa : factors) {
    // descending, so every out[k] is read before its slot is overwritten
    for (std::size_t k = size; k-- > 0;) {
      const Complex v = out[k];
      for (std::size_t m = n; m-- > 0;) out[k * n + m] = v * fa[m];
    }
    size *= n;
  }
}

}  // namespace

unsigned Parallelism::resolve(std::size_t jobs) const {
  const unsigned w = workers != 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, w));
}

GridFunction star_product(const GridFunction& f, const GridFunction& g, const SkewForm& sigma,
                          Parallelism par) {
  require_compatible(f, g, sigma);
  const GridSpec& spec = f.spec();
  const std::size_t total = spec.size();
  const auto n = static_cast<std::size_t>(spec.n);
  const auto d = static_cast<std::size_t>(spec.dim);
  const auto& plan = detail::FftPlan::get(spec.dim, spec.n);

  const GridFunction ghat = fft_forward(g);
  std::vector<Complex> fcoef(total);
  plan.forward(f.values().data(), fcoef.data());

  // e(x_j p_m) per axis; x_j p_m = (j - N/2)(m - N/2)/N turns, reduced exactly
  std::vector<Complex> roots(n);
  for (std::size_t r = 0; r < n; ++r) roots[r] = unit_phase(static_cast<double>(r) / spec.n);
  std::vector<Complex> wave(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) {
      const long long prod = (static_cast<long long>(j) - spec.n / 2) * (static_cast<long long>(m) - spec.n / 2);
      const long long r = ((prod % spec.n) + spec.n) % spec.n;
      wave[m * n + j] = roots[static_cast<std::size_t>(r)];
    }
  }
  std::vector<double> freq(n);
  for (std::size_t m = 0; m < n; ++m) freq[m] = wrapped_frequency(spec, static_cast<int>(m));

  const double weight = std::pow(1.0 / spec.length, spec.dim) / static_cast<double>(total);
  const Mat shift_map = spec.theta * sigma.matrix();

  const std::size_t chunks = std::min(kChunks, total);
  std::vector<std::vector<Complex>> partial(chunks);
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    std::vector<Complex> shifted(total);
    std::vector<Complex> fshift(total);
    std::vector<std::size_t> digits(d);
    Vec p(spec.dim);
    std::vector<std::vector<Complex>> ramp(d, std::vector<Complex>(n));
    std::vector<std::span<const Complex>> rows(d);
    std::vector<Complex> phase(total);
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) break;
      auto& acc = partial[c];
      acc.assign(total, Complex{});
      const std::size_t begin = total * c / chunks;
      const std::size_t end = total * (c + 1) / chunks;
      for (std::size_t node = begin; node < end; ++node) {
        const Complex gp = ghat[node];
        if (gp == Complex{}) continue;
        std::size_t rest = node;
        for (std::size_t a = d; a-- > 0;) {
          digits[a] = rest % n;
          rest /= n;
          p(static_cast<Eigen::Index>(a)) = spec.dual_coordinate(static_cast<int>(digits[a]));
        }
        const Vec s = shift_map * p;
        for (std::size_t a = 0; a < d; ++a) {
          for (std::size_t m = 0; m < n; ++m) {
            ramp[a][m] = unit_phase(-freq[m] * s(static_cast<Eigen::Index>(a)));
          }
        }
        tensor_product(ramp, Complex{1.0, 0.0}, n, phase);
        for (std::size_t i = 0; i < total; ++i) shifted[i] = fcoef[i] * phase[i];
        plan.backward(shifted.data(), fshift.data());
        for (std::size_t a = 0; a < d; ++a) rows[a] = std::span<const Complex>(wave).subspan(digits[a] * n, n);
        tensor_product(rows, gp * weight, n, phase);
        for (std::size_t i = 0; i < total; ++i) acc[i] += phase[i] * fshift[i];
      }
    }
  };

  const unsigned workers = par.resolve(chunks);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  std::vector<Complex> out(total, Complex{});
  for (const auto& acc : partial) {
    for (std::size_t i = 0; i < total; ++i) out[i] += acc[i];
  }
  return GridFunction(spec, std::move(out));
}

GridFunction involution(const GridFunction& f) {
  GridFunction out(f.spec());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::conj(f[i]);
  return out;
}

GridFunction weyl_action(const Covector& alpha, const GridFunction& f, const SkewForm& sigma) {
  const GridSpec& spec = f.spec();
  if (alpha.dim() != spec.dim || sigma.dim() != spec.dim) {
    throw DimensionError("weyl_action: dimension mismatch");
  }
  const Vec shift = -spec.theta * (sigma.matrix() * alpha.coords);
  GridFunction out = spectral_shift(f, std::span<const double>(shift.data(), static_cast<std::size_t>(shift.size())));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto x = spec.point(i);
    double t = 0.0;
    for (int a = 0; a < spec.dim; ++a) t += x[static_cast<std::size_t>(a)] * alpha.coords(a);
    out[i] *= unit_phase(t);
  }
  return out;
}

GridFunction star_commutator(const GridFunction& f, const GridFunction& g, const SkewForm& sigma,
                             Parallelism par) {
  return star_product(f, g, sigma, par) - star_product(g, f, sigma, par);
}

Complex inner_product_B(const GridFunction& xi, const GridFunction& eta) {
  require_same_lattice(xi.spec(), eta.spec(), "inner_product_B");
  Complex s{};
  for (std::size_t i = 0; i < xi.size(); ++i) s += std::conj(xi[i]) * eta[i];
  return s * std::pow(xi.spec().spacing(), xi.spec().dim);
}

GridFunction poisson_bracket(const GridFunction& f, const GridFunction& g, const SkewForm& sigma) {
  require_same_lattice(f.spec(), g.spec(), "poisson_bracket");
  const int d = f.spec().dim;
  if (sigma.dim() != d) throw DimensionError("poisson_bracket: form dimension differs from grid");
  std::vector<GridFunction> df;
  std::vector<GridFunction> dg;
  for (int a = 0; a < d; ++a) {
    df.push_back(spectral_derivative(f, a));
    dg.push_back(spectral_derivative(g, a));
  }
  GridFunction out(f.spec());
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const double s = sigma.matrix()(j, k);
      if (s == 0.0) continue;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * df[static_cast<std::size_t>(j)][i] * dg[static_cast<std::size_t>(k)][i];
    }
  }
  return out;
}

GridFunction coordinate_function(const GridSpec& spec, const Covector& alpha) {
  if (alpha.dim() != spec.dim) throw DimensionError("coordinate_function: dimension mismatch");
  return GridFunction::sample(spec, [&](std::span<const double> x) {
    double t = 0.0;
    for (int a = 0; a < spec.dim; ++a) t += x[static_cast<std::size_t>(a)] * alpha.coords(a);
    return Complex{t, 0.0};
  });
}

}  // namespace moyal
