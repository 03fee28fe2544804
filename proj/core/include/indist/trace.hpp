#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indist/qstate.hpp"

namespace indist::trace {

// A region, optionally narrowed to one DoF (0-based index into the DofSpecs).
struct Subsystem {
    std::string region;
    std::optional<int> dof;
};

// Keep only tuples with exactly one particle in each listed region (and none
// elsewhere), then renormalize.
DensityMatrix project_one_per_region(const DensityMatrix& rho, const std::vector<std::string>& regions);
SymState project_one_per_region(const SymState& s, const std::vector<std::string>& regions);

// sum_m a_m rho a_m^dagger over every mode m living in `region`.
DensityMatrix trace_region(const DensityMatrix& rho, const std::string& region);

// sum_m <s^x m_j| rho |s^x m_j>: each Kraus branch strips DoF j from one slot
// in region x, leaving that slot in place with the DoF marked absent.
DensityMatrix trace_dof_indist(const DensityMatrix& rho, const Subsystem& sub);

// Ordinary partial trace over one DoF factor of a labeled particle.
DensityMatrix trace_dof_dist(const DensityMatrix& rho, int particle, int dof);

// Two particles with one DoF each. Without a region this is the global
// 1/2 sum_k <psi_k|Phi><Phi|psi_k>; with one it is the localized variant.
DensityMatrix particle_trace_lofranco(const SymState& s, const std::optional<std::string>& region = {});

// Coherent removal of a DoF label: K = sum_m <m_j|, a single Kraus operator.
// Not a partial trace; it keeps the coherences that trace_dof_indist drops.
DensityMatrix erase_dof_label(const DensityMatrix& rho, const Subsystem& sub);

// Remove slots whose DoFs have all been traced.
DensityMatrix drop_empty_slots(const DensityMatrix& rho);

struct QubitAxis {
    std::string region;
    int dof;
    int label0;
    int label1;
};

QubitAxis axis(const DensityMatrix& rho, std::string region, const std::string& dof_name,
               const std::string& label0, const std::string& label1);

// Re-index a density matrix as 2^k x 2^k over the given axes (axis 0 is the
// most significant bit). Every basis tuple must map to a distinct bit string.
Mat qubit_view(const DensityMatrix& rho, const std::vector<QubitAxis>& axes);

}  // namespace indist::trace
