#pragma once

#include <optional>
#include <string_view>

#include "mfpt/chain.hpp"

namespace mfpt {

/// The twelve procedures under their conventional numbering.
enum class Procedure : int {
  Fundamental = 1,
  SimpleGInverse = 2,
  GInverseUpdate = 3,
  ModifiedGroupUpdate = 4,
  GroupInverseUpdate = 5,
  UpdateGe = 6,
  UpdateGe1 = 7,
  UpdateGee = 8,
  Egth = 9,
  FundZ = 10,
  FundGroup = 11,
  FundX = 12,
};

inline constexpr int kProcedureCount = 12;

constexpr int procedure_id(Procedure p) noexcept { return static_cast<int>(p); }

/// Procedure from its 1-based id, or nullopt when out of range.
std::optional<Procedure> procedure_from_id(int id) noexcept;

/// Short label such as "fundamental" or "egth".
std::string_view procedure_label(Procedure p) noexcept;

/// Runs one procedure. Proc 2 uses b = 0; Proc 9 runs its rotations serially.
template <Real T>
MfptSolution<T> run_procedure(Procedure proc, const TransitionMatrix<T>& p);

}  // namespace mfpt
