#include "membranekit/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "membranekit/parallel.hpp"

namespace membranekit {

namespace {

constexpr long kChunk = 4096;

// Welford accumulator; chunks are merged with Chan's update in chunk order,
// so the result is independent of how chunks were spread over threads.
struct Moments {
  long n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

// Random source for one path: single bits for interior steps, uniforms at the
// membrane. `mirror` flips both, giving the antithetic partner path.
class Stream {
 public:
  Stream(std::mt19937_64& rng, bool mirror) : rng_(rng), mirror_(mirror) {}

  bool bit() {
    if (left_ == 0) {
      word_ = rng_();
      left_ = 64;
    }
    const bool b = (word_ & 1U) != 0;
    word_ >>= 1;
    --left_;
    return b != mirror_;
  }

  double uniform() {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return mirror_ ? 1.0 - u : u;
  }

 private:
  std::mt19937_64& rng_;
  bool mirror_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

template <class Path>
McEstimate run_paths(const PathConfig& cfg, double sup_f, Path path) {
  if (cfg.n_paths < 1) throw std::invalid_argument("n_paths must be >= 1");
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  const long samples = cfg.antithetic ? (cfg.n_paths + 1) / 2 : cfg.n_paths;
  const long chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Moments> parts(static_cast<std::size_t>(chunks));
  parallel_for(parts.size(), cfg.threads, [&](std::size_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(c)};
    std::mt19937_64 rng(seq);
    const long begin = static_cast<long>(c) * kChunk;
    const long end = std::min(samples, begin + kChunk);
    for (long i = begin; i < end; ++i) {
      if (cfg.antithetic) {
        std::mt19937_64 twin = rng;
        Stream a(rng, false);
        Stream b(twin, true);
        parts[c].add(0.5 * (path(a) + path(b)));
      } else {
        Stream s(rng, false);
        parts[c].add(path(s));
      }
    }
  });
  Moments all;
  for (const auto& m : parts) all.merge(m);
  double se = 2.0 * sup_f;  // one sample says nothing about the spread
  if (all.n > 1) {
    se = std::sqrt(all.m2 / static_cast<double>(all.n - 1) / static_cast<double>(all.n));
  }
  return {all.mean, se, cfg.n_paths};
}

void require_time(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("simulation time must be > 0");
}

}  // namespace

McEstimate simulate_skew(const MembraneParams& p, const PathConfig& cfg, double t, const LineFn& f) {
  require_time(t);
  const double step = std::sqrt(2.0 * cfg.dt);
  const auto steps = static_cast<long>(std::floor(t / cfg.dt + 1e-9));
  const long k0 = std::lround(cfg.x0 / step);
  const double p_right = p.alpha() / p.sum();
  return run_paths(cfg, f.sup_norm(), [&](Stream& s) {
    long k = k0;
    for (long i = 0; i < steps; ++i) {
      if (k == 0) {
        k = s.uniform() < p_right ? 1 : -1;
      } else {
        k += s.bit() ? 1 : -1;
      }
    }
    return f(static_cast<double>(k) * step);
  });
}

McEstimate simulate_snapping(const MembraneParams& p, const PathConfig& cfg, double t,
                             const SharpFn& f) {
  require_time(t);
  const double step = std::sqrt(2.0 * cfg.dt);
  const double q_left = p.alpha() * step;   // 0- -> 0+
  const double q_right = p.beta() * step;   // 0+ -> 0-
  if (q_left > 1.0 || q_right > 1.0) {
    throw std::invalid_argument("switch probability exceeds 1; decrease dt");
  }
  const long k_signed = std::lround(cfg.x0 / step);
  Side side0;
  if (k_signed != 0) {
    side0 = k_signed < 0 ? Side::left : Side::right;
  } else if (cfg.side) {
    side0 = *cfg.side;
  } else {
    throw std::invalid_argument("start at the membrane needs an explicit side");
  }
  const long k0 = std::labs(k_signed);
  const auto steps = static_cast<long>(std::floor(t / cfg.dt + 1e-9));
  return run_paths(cfg, f.sup_norm(), [&](Stream& s) {
    long k = k0;
    bool right = side0 == Side::right;
    for (long i = 0; i < steps; ++i) {
      if (k == 0) {
        if (s.uniform() < (right ? q_right : q_left)) {
          right = !right;
        } else {
          k = 1;
        }
      } else {
        k += s.bit() ? 1 : -1;
      }
    }
    if (k == 0) return right ? f.zero_plus() : f.zero_minus();
    const double x = static_cast<double>(k) * step;
    return right ? f.evaluate(x, Side::right) : f.evaluate(-x, Side::left);
  });
}

}  // namespace membranekit
