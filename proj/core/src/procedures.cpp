#include "mfpt/procedures.hpp"

#include "mfpt/egth.hpp"
#include "mfpt/fund.hpp"
#include "mfpt/ginv_procs.hpp"
#include "mfpt/pert_procs.hpp"

namespace mfpt {

std::optional<Procedure> procedure_from_id(int id) noexcept {
  if (id < 1 || id > kProcedureCount) return std::nullopt;
  return static_cast<Procedure>(id);
}

std::string_view procedure_label(Procedure p) noexcept {
  switch (p) {
    case Procedure::Fundamental: return "fundamental";
    case Procedure::SimpleGInverse: return "simple-ginverse";
    case Procedure::GInverseUpdate: return "ginverse-update";
    case Procedure::ModifiedGroupUpdate: return "modified-group-update";
    case Procedure::GroupInverseUpdate: return "group-inverse-update";
    case Procedure::UpdateGe: return "update-ge";
    case Procedure::UpdateGe1: return "update-ge1";
    case Procedure::UpdateGee: return "update-gee";
    case Procedure::Egth: return "egth";
    case Procedure::FundZ: return "fund-z";
    case Procedure::FundGroup: return "fund-group";
    case Procedure::FundX: return "fund-x";
  }
  return "unknown";
}

template <Real T>
MfptSolution<T> run_procedure(Procedure proc, const TransitionMatrix<T>& p) {
  switch (proc) {
    case Procedure::Fundamental: return proc1(p);
    case Procedure::SimpleGInverse: return proc2(p, 0);
    case Procedure::GInverseUpdate: return proc3(p);
    case Procedure::ModifiedGroupUpdate: return proc4(p);
    case Procedure::GroupInverseUpdate: return proc5(p);
    case Procedure::UpdateGe: return proc6(p);
    case Procedure::UpdateGe1: return proc7(p);
    case Procedure::UpdateGee: return proc8(p);
    case Procedure::Egth: return proc9(p, 1);
    case Procedure::FundZ: return proc10(p);
    case Procedure::FundGroup: return proc11(p);
    case Procedure::FundX: return proc12(p);
  }
  throw ContractViolation("run_procedure: unknown procedure");
}

template MfptSolution<float> run_procedure(Procedure,
                                           const TransitionMatrix<float>&);
template MfptSolution<double> run_procedure(Procedure,
                                            const TransitionMatrix<double>&);

}  // namespace mfpt
