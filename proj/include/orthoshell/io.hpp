#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "orthoshell/bvp.hpp"
#include "orthoshell/effective.hpp"
#include "orthoshell/kl.hpp"
#include "orthoshell/oracle.hpp"

namespace orthoshell {

using json = nlohmann::json;

// material <-> JSON, keys exactly E1..G / nu12..nu32
json to_json(const OrthotropicMaterial& m);
json to_json(const KLMaterial& m);
json to_json(const StiffnessComponents& c);
OrthotropicMaterial material_from_json(const json& j);
KLMaterial kl_material_from_json(const json& j);
StiffnessComponents stiffness_from_json(const json& j);
bool looks_like_stiffness(const json& j);

json to_json(const EffectiveProperties& p);
json to_json(const KLIdentifiedModuli& m);
KLExperimentRecord experiment_from_json(const json& j);

/// Solution summary: kind, gamma, w_p, roots and coefficients as [re, im]
/// pairs, plus the residual table.
json solution_summary(const AxisymSolution& sol);
json solution_summary(const TorsionSolution& sol, const ShellGeometry& g,
                      const StressLaw& law);

/// Profile CSV: header row, one station per row, columns
/// x1,a1,a2,w,gamma,F11,F22,F21,F33,M11,M21,M12,M22,F31; numbers with 17
/// significant digits, LF line endings.
void write_profile_csv(const std::string& path, const ShellGeometry& g,
                       const StressLaw& law, const AxisymmetricState& s, int stations);

std::string format_number(double v);

/// Canonical JSON dump: UTF-8, sorted keys, newline-terminated.
std::string dump_json(const json& j);

}  // namespace orthoshell
