#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mfpt/chain.hpp"

namespace mfpt {

enum class ProblemId { Tp1, Tp2, Tp3, Tp41, Tp42, Tp43, Tp44, Generated, File };

struct ProblemSpec {
  ProblemId id = ProblemId::Tp1;
  std::size_t m = 0;              // generated only
  double zero_proportion = 0.6;   // generated only
  std::uint64_t seed = 0;         // generated only
  std::string path;               // file only

  /// "tp1", "gen-100-0.6-42", or the file path.
  std::string name() const;
};

/// Accepts tp1, tp2, tp3, tp41..tp44, gen:M[:ZP[:SEED]] and anything else
/// as a file path. `default_seed` fills in a missing SEED.
ProblemSpec parse_problem(std::string_view text, std::uint64_t default_seed = 0);

/// The seven built-in test problems; empty for Generated and File.
const std::vector<ProblemId>& builtin_ids();

/// ε of the two-block family, nullopt for other ids.
std::optional<double> tp4_epsilon(ProblemId id);

/// Built-in test matrices.
TransitionMatrix<double> builtin(ProblemId id);

/// SplitMix64. next() advances the state by the golden-gamma increment and
/// returns the mixed value; uniform() keeps the top 53 bits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform on [0, 1).
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  /// Independent stream for a child computation.
  SplitMix64 split() noexcept { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// Random sparse chain: an entry is kept with probability 1 − zero_proportion,
/// the diagonal is cleared, all-zero rows are redrawn and rows are scaled to
/// sum to one. Reducible draws are discarded and redrawn from a split stream,
/// at most `max_attempts` times.
TransitionMatrix<double> generate_sparse(std::size_t m, double zero_proportion,
                                         std::uint64_t seed,
                                         int max_attempts = 64);

/// Materializes any spec (file specs go through load_matrix).
TransitionMatrix<double> load_problem(const ProblemSpec& spec);

}  // namespace mfpt
