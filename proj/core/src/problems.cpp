#include "mfpt/problems.hpp"

#include <charconv>

#include "mfpt/matrix_io.hpp"

namespace mfpt {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ProblemSpec spec_of(ProblemId id) {
  ProblemSpec s;
  s.id = id;
  return s;
}

}  // namespace

std::string ProblemSpec::name() const {
  switch (id) {
    case ProblemId::Tp1: return "tp1";
    case ProblemId::Tp2: return "tp2";
    case ProblemId::Tp3: return "tp3";
    case ProblemId::Tp41: return "tp41";
    case ProblemId::Tp42: return "tp42";
    case ProblemId::Tp43: return "tp43";
    case ProblemId::Tp44: return "tp44";
    case ProblemId::Generated:
      return "gen-" + std::to_string(m) + "-" + format_double(zero_proportion) +
             "-" + std::to_string(seed);
    case ProblemId::File: return path;
  }
  return "unknown";
}

ProblemSpec parse_problem(std::string_view text, std::uint64_t default_seed) {
  static const std::pair<std::string_view, ProblemId> kNames[] = {
      {"tp1", ProblemId::Tp1},   {"tp2", ProblemId::Tp2},
      {"tp3", ProblemId::Tp3},   {"tp41", ProblemId::Tp41},
      {"tp42", ProblemId::Tp42}, {"tp43", ProblemId::Tp43},
      {"tp44", ProblemId::Tp44},
  };
  for (const auto& [name, id] : kNames) {
    if (text == name) return spec_of(id);
  }
  if (text.starts_with("gen:")) {
    ProblemSpec spec = spec_of(ProblemId::Generated);
    spec.seed = default_seed;
    std::string_view rest = text.substr(4);
    int field = 0;
    while (!rest.empty()) {
      const auto colon = rest.find(':');
      const std::string_view tok = rest.substr(0, colon);
      const char* b = tok.data();
      const char* e = tok.data() + tok.size();
      std::from_chars_result r{};
      if (field == 0) {
        r = std::from_chars(b, e, spec.m);
      } else if (field == 1) {
        r = std::from_chars(b, e, spec.zero_proportion);
      } else if (field == 2) {
        r = std::from_chars(b, e, spec.seed);
      } else {
        throw ContractViolation("too many fields in problem '" +
                                std::string(text) + "'");
      }
      if (r.ec != std::errc{} || r.ptr != e) {
        throw ContractViolation("malformed problem '" + std::string(text) +
                                "', expected gen:M[:ZP[:SEED]]");
      }
      ++field;
      if (colon == std::string_view::npos) break;
      rest = rest.substr(colon + 1);
    }
    if (field == 0 || spec.m < 2) {
      throw ContractViolation("generated problem needs M >= 2");
    }
    return spec;
  }
  ProblemSpec spec = spec_of(ProblemId::File);
  spec.path = std::string(text);
  return spec;
}

const std::vector<ProblemId>& builtin_ids() {
  static const std::vector<ProblemId> ids = {
      ProblemId::Tp1,  ProblemId::Tp2,  ProblemId::Tp3, ProblemId::Tp41,
      ProblemId::Tp42, ProblemId::Tp43, ProblemId::Tp44};
  return ids;
}

std::optional<double> tp4_epsilon(ProblemId id) {
  switch (id) {
    case ProblemId::Tp41: return 1.0E-01;
    case ProblemId::Tp42: return 1.0E-03;
    case ProblemId::Tp43: return 1.0E-05;
    case ProblemId::Tp44: return 1.0E-07;
    default: return std::nullopt;
  }
}

TransitionMatrix<double> builtin(ProblemId id) {
  switch (id) {
    case ProblemId::Tp1:
      // Irreducible 6-state sub chain of the original 10-state problem.
      return TransitionMatrix<double>(Mat<double>{
          {.1, .6, 0, .3, 0, 0},
          {.5, .5, 0, 0, 0, 0},
          {.5, .2, 0, 0, .3, 0},
          {0, .7, 0, .2, 0, .1},
          {.1, 0, .8, 0, 0, .1},
          {.4, 0, .4, 0, 0, .2},
      });
    case ProblemId::Tp2:
      // Courtois matrix with the corrected (1,5) entry. Entry (3,3) is .0996;
      // .09996 would leave row 3 summing to 1.00036.
      return TransitionMatrix<double>(Mat<double>{
          {.85, 0, .149, .0009, 0, .00005, 0, .00005},
          {.1, .65, .249, 0, .0009, .00005, 0, .00005},
          {.1, .8, .0996, .0003, 0, 0, .0001, 0},
          {0, .0004, 0, .7, .2995, 0, .0001, 0},
          {.0005, 0, .0004, .399, .6, .0001, 0, 0},
          {0, .00005, 0, 0, .00005, .6, .2499, .15},
          {.00003, 0, .00003, .00004, 0, .1, .8, .0999},
          {0, .00005, 0, 0, .00005, .1999, .25, .55},
      });
    case ProblemId::Tp3:
      return TransitionMatrix<double>(Mat<double>{
          {0.999999, 1.0E-07, 2.0E-07, 3.0E-07, 4.0E-07},
          {0.4, 0.3, 0, 0, 0.3},
          {5.0E-07, 0, 0.999999, 0, 5.0E-07},
          {5.0E-07, 0, 0, 0.999999, 5.0E-07},
          {2.0E-07, 3.0E-07, 1.0E-07, 4.0E-07, 0.999999},
      });
    case ProblemId::Tp41:
    case ProblemId::Tp42:
    case ProblemId::Tp43:
    case ProblemId::Tp44: {
      const double eps = *tp4_epsilon(id);
      // Two weakly coupled 5-state blocks; only the corners depend on ε.
      return TransitionMatrix<double>(Mat<double>{
          {.1 - eps, .3, .1, .2, .3, eps, 0, 0, 0, 0},
          {.2, .1, .1, .2, .4, 0, 0, 0, 0, 0},
          {.1, .2, .2, .4, .1, 0, 0, 0, 0, 0},
          {.4, .2, .1, .2, .1, 0, 0, 0, 0, 0},
          {.6, .3, 0, 0, .1, 0, 0, 0, 0, 0},
          {eps, 0, 0, 0, 0, .1 - eps, .2, .2, .4, .1},
          {0, 0, 0, 0, 0, .2, .2, .1, .3, .2},
          {0, 0, 0, 0, 0, .1, .5, 0, .2, .2},
          {0, 0, 0, 0, 0, .5, .2, .1, 0, .2},
          {0, 0, 0, 0, 0, .1, .2, .2, .3, .2},
      });
    }
    case ProblemId::Generated:
    case ProblemId::File:
      break;
  }
  throw ContractViolation("builtin: not a built-in problem");
}

TransitionMatrix<double> generate_sparse(std::size_t m, double zero_proportion,
                                         std::uint64_t seed, int max_attempts) {
  if (m < 2) throw ContractViolation("generate_sparse: need m >= 2");
  if (!(zero_proportion >= 0.0 && zero_proportion < 1.0)) {
    throw ContractViolation("generate_sparse: zero proportion must be in [0,1)");
  }
  SplitMix64 root(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SplitMix64 rng = root.split();
    Mat<double> a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t ones = 0;
      // Draw the full row (diagonal included, then cleared) so the stream
      // position does not depend on the row index.
      while (ones == 0) {
        ones = 0;
        for (std::size_t j = 0; j < m; ++j) {
          const bool keep = rng.uniform() >= zero_proportion;
          a(i, j) = (keep && j != i) ? 1.0 : 0.0;
          ones += a(i, j) != 0.0;
        }
      }
      for (std::size_t j = 0; j < m; ++j) {
        a(i, j) /= static_cast<double>(ones);
      }
    }
    TransitionMatrix<double> p(std::move(a));
    if (is_irreducible(p)) return p;
  }
  throw ContractViolation("generate_sparse: no irreducible draw after " +
                          std::to_string(max_attempts) + " attempts");
}

TransitionMatrix<double> load_problem(const ProblemSpec& spec) {
  switch (spec.id) {
    case ProblemId::Generated:
      return generate_sparse(spec.m, spec.zero_proportion, spec.seed);
    case ProblemId::File:
      return load_matrix(spec.path);
    default:
      return builtin(spec.id);
  }
}

}  // namespace mfpt
