// spinalg: newline-delimited JSON output for trajectories. A header record
// carries the run parameters; every following record is one snapshot
// {"t": ..., "R": [...], "bloch_length": ...} with two-qudit coefficient
// matrices flattened row-major.
#pragma once

#include "dynamics.hpp"
#include "spin_basis.hpp"

#include <json.hpp>

#include <map>
#include <ostream>
#include <string>

namespace spinalg {

/// Nonzero Hamiltonian coefficients keyed by label text, e.g. {"Z:1": 2.0}.
inline std::map<std::string, double> coeff_map(const Eigen::VectorXd& h, const BasisSet& basis) {
    std::map<std::string, double> out;
    for (int b = 0; b < basis.size(); ++b)
        if (h(b) != 0.0) out[basis.label(b).str()] = h(b);
    return out;
}

/// Two-qudit variant; keys are "label1,label2".
inline std::map<std::string, double> coeff_map2(const Eigen::MatrixXd& h, const BasisSet& b1,
                                                const BasisSet& b2) {
    std::map<std::string, double> out;
    for (int a = 0; a < b1.size(); ++a)
        for (int b = 0; b < b2.size(); ++b)
            if (h(a, b) != 0.0)
                out[b1.label(a).str() + "," + b2.label(b).str()] = h(a, b);
    return out;
}

inline void write_trajectory_jsonl(std::ostream& os, const Trajectory& traj,
                                   const nlohmann::json& header) {
    nlohmann::json head = header;
    head["dt"] = traj.dt;
    head["steps"] = static_cast<int>(traj.times.size()) - 1;
    os << head.dump() << '\n';
    for (size_t s = 0; s < traj.times.size(); ++s) {
        nlohmann::json rec;
        rec["t"] = traj.times[s];
        std::vector<double> flat(traj.states[s].data(),
                                 traj.states[s].data() + traj.states[s].size());
        rec["R"] = flat;
        rec["bloch_length"] = traj.bloch_lengths[s];
        os << rec.dump() << '\n';
    }
}

} // namespace spinalg
