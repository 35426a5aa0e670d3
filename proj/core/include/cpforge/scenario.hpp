#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpforge/atom.hpp"
#include "cpforge/config.hpp"
#include "cpforge/material.hpp"
#include "cpforge/quadrature.hpp"
#include "cpforge/stack.hpp"

namespace cpforge::scenario {

enum class Kind {
    Potential,
    Coeffs,
    Border,
    Wall,
    ThicknessOpt,
    Cavity,
    Dynamics,
};

enum class Format { Csv, Json };
enum class Normalization { Si, Dimensionless };

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
    bool log = true;

    std::vector<double> build() const;
};

// One entry of [scenarios.*]; parameters are stored in config units
// (frequencies in ref units, lengths in c/ref units).
struct ScenarioDef {
    std::string name;
    Kind kind;
    std::string stack;     // Potential/Cavity/Wall-adjacent kinds
    std::string material;  // Coeffs/Wall/ThicknessOpt/Dynamics
    std::string atom;
    GridSpec z;             // z grid (Potential/Cavity)
    GridSpec sweep;         // Border: eps(0); ThicknessOpt: d; Dynamics: omega10
    std::vector<double> magnetic_wp_values;  // Potential sweep columns
    double thickness = 0.0;                  // Coeffs (thin plate block)
    double z_position = 0.0;                 // Dynamics
    double t_max = 0.0;                      // Dynamics trajectory mode
    int t_points = 0;
    std::string mode;  // Dynamics: "profile" | "trajectory"
    double wall_z_lo = 0.0, wall_z_hi = 0.0;  // Wall/ThicknessOpt z window
};

struct Workspace {
    double ref_frequency = 0.0;  // rad/s
    std::map<std::string, Material> materials;
    std::map<std::string, Atom> atoms;
    std::map<std::string, LayerStack> stacks;
    std::map<std::string, ScenarioDef> scenarios;

    const Material& material(const std::string& name) const;
    const Atom& atom(const std::string& name) const;
    const LayerStack& stack(const std::string& name) const;

    double length_unit() const;  // c / ref_frequency, meters
};

Workspace load(const config::Table& root, const std::string& source_name);
Workspace load_file(const std::string& path);

std::vector<std::string> list_scenarios(const Workspace& ws);

struct Overrides {
    std::optional<double> rel_tol;
    std::optional<std::string> out;
    Format format = Format::Csv;
    Normalization normalize = Normalization::Dimensionless;
    bool allow_flags = false;
    int threads = 1;
    std::optional<double> eps_max;  // Border sweep upper bound
};

// exit codes mirrored by the CLI
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

struct RunResult {
    int exit_code = kExitOk;
    std::string artifact;  // path written
    bool flagged = false;  // any non-converged quadrature
};

RunResult run(const Workspace& ws, const std::string& scenario_name,
              const Overrides& overrides);

}  // namespace cpforge::scenario
