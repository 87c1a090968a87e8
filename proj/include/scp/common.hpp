#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace scp {

// Input/schema problems (bad files, bad options, contract violations).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failures (singular matrices, rank deficiency, degenerate fits).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Network/protocol failures when talking to an LLM endpoint.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic RNG. std::mt19937_64 is bit-stable across platforms but the
// standard distributions are not, so the draw helpers are implemented here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Derives an independent stream from a root seed, for per-task seeding
  // (bootstrap resample index, Monte Carlo grid point, ...).
  static Rng derive(std::uint64_t root, std::uint64_t stream) {
    std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

  // Standard normal via Box-Muller (spare value cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * M_PI * u2);
    has_spare_ = true;
    return mag * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Labeled matrix table: first data line holds comma-separated variable names,
// then one whitespace-separated row per variable. Lines starting with '#' are
// comments. Shared by adjacency, prior-knowledge, confidence and bootstrap
// matrix files.
struct LabeledMatrix {
  std::vector<std::string> names;
  Eigen::MatrixXd values;
};

LabeledMatrix read_labeled_matrix(const std::string& path);
void write_labeled_matrix(const std::string& path,
                          const std::vector<std::string>& names,
                          const Eigen::MatrixXd& values,
                          const std::string& comment = "");

std::string format_double(double v, int decimals);

}  // namespace scp
