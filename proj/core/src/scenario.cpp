#include "cpforge/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "cpforge/asymptotics.hpp"
#include "cpforge/constants.hpp"
#include "cpforge/dynamics.hpp"
#include "cpforge/potential.hpp"

namespace cpforge::scenario {

using namespace constants;
using config::ConfigError;
using nlohmann::json;

std::vector<double> GridSpec::build() const {
    if (points < 1) throw ConfigError("grid needs at least one point");
    if (points == 1) return {lo};
    if (!(hi > lo)) throw ConfigError("grid upper bound must exceed lower bound");
    if (log && !(lo > 0.0)) throw ConfigError("log grid needs positive bounds");
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) {
        const double s = static_cast<double>(i) / (points - 1);
        grid[i] = log ? lo * std::pow(hi / lo, s) : lo + (hi - lo) * s;
    }
    return grid;
}

const Material& Workspace::material(const std::string& name) const {
    auto it = materials.find(name);
    if (it == materials.end()) throw ConfigError("unknown material '" + name + "'");
    return it->second;
}

const Atom& Workspace::atom(const std::string& name) const {
    auto it = atoms.find(name);
    if (it == atoms.end()) throw ConfigError("unknown atom '" + name + "'");
    return it->second;
}

const LayerStack& Workspace::stack(const std::string& name) const {
    auto it = stacks.find(name);
    if (it == stacks.end()) throw ConfigError("unknown stack '" + name + "'");
    return it->second;
}

double Workspace::length_unit() const { return speed_of_light / ref_frequency; }

namespace {

std::vector<Resonance> load_resonances(const config::Value& v, double ref,
                                       const std::string& where) {
    if (v.kind != config::Value::Kind::TableArray)
        throw ConfigError(where + ": expected an array of {wp, wt, gamma} tables");
    std::vector<Resonance> out;
    for (const auto& entry : v.tables) {
        auto get = [&](const char* key, double fallback, bool required) {
            auto it = entry.find(key);
            if (it == entry.end()) {
                if (required)
                    throw ConfigError(where + ": resonance needs key '" +
                                      std::string(key) + "'");
                return fallback;
            }
            if (it->second.kind != config::Value::Kind::Number)
                throw ConfigError(where + ": resonance key '" + std::string(key) +
                                  "' must be numeric");
            return it->second.number;
        };
        out.emplace_back(get("wp", 0.0, true) * ref, get("wt", 0.0, true) * ref,
                         get("gamma", 0.0, false) * ref);
    }
    return out;
}

GridSpec load_grid(const config::Table& t, const std::string& prefix,
                   const std::string& where, bool default_log) {
    GridSpec g;
    g.lo = t.number(prefix + "_min", where);
    g.hi = t.number(prefix + "_max", where);
    g.points = static_cast<int>(t.number(prefix + "_points", where));
    g.log = t.string_or("grid", default_log ? "log" : "linear") == "log";
    return g;
}

Kind parse_kind(const std::string& s, const std::string& where) {
    if (s == "potential") return Kind::Potential;
    if (s == "coeffs") return Kind::Coeffs;
    if (s == "border") return Kind::Border;
    if (s == "wall") return Kind::Wall;
    if (s == "thickness-opt") return Kind::ThicknessOpt;
    if (s == "cavity") return Kind::Cavity;
    if (s == "dynamics") return Kind::Dynamics;
    throw ConfigError(where + ": unknown scenario kind '" + s + "'");
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct TableOutput {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    json metadata = json::object();
};

void write_output(const TableOutput& table, const std::string& path,
                  Format format, const std::string& scenario_name) {
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write artifact: " + path);
    if (format == Format::Csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            file << (i ? "," : "") << table.columns[i];
        file << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                file << (i ? "," : "") << format_double(row[i]);
            file << "\n";
        }
        return;
    }
    json doc;
    doc["scenario"] = scenario_name;
    doc["columns"] = table.columns;
    doc["metadata"] = table.metadata;
    doc["rows"] = json::array();
    for (const auto& row : table.rows) doc["rows"].push_back(row);
    file << doc.dump(2) << "\n";
}

// normalization factors (divide SI values by these)
struct Units {
    double length = 1.0;
    double energy = 1.0;
    double force = 1.0;
    double frequency = 1.0;
    std::string length_name = "m";
    std::string energy_name = "J";
    std::string force_name = "N";
    std::string frequency_name = "rad/s";
};

Units make_units(const Workspace& ws, const Atom* atom, Normalization mode) {
    Units u;
    if (mode == Normalization::Si) return u;
    const double ref = ws.ref_frequency;
    double beta = 1.0;
    if (atom && atom->transitions().size() == 1) beta = atom->strength(ref);
    u.length = speed_of_light / ref;
    u.energy = hbar * ref * beta;
    u.force = hbar * ref * ref * beta / speed_of_light;
    u.frequency = ref;
    u.length_name = "c/w_ref";
    u.energy_name = "hbar*w_ref*beta";
    u.force_name = "hbar*w_ref^2*beta/c";
    u.frequency_name = "w_ref";
    return u;
}

Material sweep_magnetic_plasma(const Material& base, double wp_si) {
    if (base.magnetic().empty())
        throw ConfigError("magnetic plasma sweep needs a magnetic resonance");
    std::vector<Resonance> magnetic = base.magnetic();
    magnetic[0] = Resonance(wp_si, magnetic[0].transverse, magnetic[0].damping);
    return Material(base.electric(), magnetic);
}

}  // namespace

Workspace load(const config::Table& root, const std::string& source_name) {
    Workspace ws;
    ws.ref_frequency = root.number("ref_frequency", source_name);
    if (!(ws.ref_frequency > 0.0))
        throw ConfigError(source_name + ": ref_frequency must be > 0 (rad/s)");
    const double ref = ws.ref_frequency;
    const double lu = ws.length_unit();

    ws.materials.emplace("vacuum", Material{});
    if (const auto* mats = root.child("materials")) {
        for (const auto& [name, t] : mats->children) {
            const std::string where = "materials." + name;
            std::vector<Resonance> electric, magnetic;
            if (const auto* v = t.find("electric"))
                electric = load_resonances(*v, ref, where);
            if (const auto* v = t.find("magnetic"))
                magnetic = load_resonances(*v, ref, where);
            ws.materials.emplace(name, Material(std::move(electric), std::move(magnetic)));
        }
    }

    if (const auto* atoms = root.child("atoms")) {
        for (const auto& [name, t] : atoms->children) {
            const std::string where = "atoms." + name;
            const double omega10 = t.number("omega10", where) * ref;
            if (t.has("dipole_sq")) {
                ws.atoms.emplace(name,
                                 Atom::two_level(omega10, t.number("dipole_sq", where)));
            } else {
                const double beta = t.number("strength", where);
                const double beta_ref = t.number_or("strength_ref", omega10 / ref) * ref;
                ws.atoms.emplace(name,
                                 Atom::two_level_strength(omega10, beta, beta_ref));
            }
        }
    }

    if (const auto* stacks = root.child("stacks")) {
        for (const auto& [name, t] : stacks->children) {
            const std::string where = "stacks." + name;
            const std::string kind = t.string("kind", where);
            if (kind == "half-space") {
                ws.stacks.emplace(name, LayerStack::half_space(
                                            ws.material(t.string("material", where))));
            } else if (kind == "slab") {
                ws.stacks.emplace(
                    name, LayerStack::slab(ws.material(t.string("material", where)),
                                           t.number("thickness", where) * lu));
            } else if (kind == "cavity") {
                ws.stacks.emplace(
                    name, LayerStack::cavity(ws.material(t.string("material", where)),
                                             t.number("separation", where) * lu));
            } else if (kind == "layers") {
                const auto* v = t.find("layers");
                if (!v || v->kind != config::Value::Kind::TableArray)
                    throw ConfigError(where + ": 'layers' must be an array of tables");
                std::vector<Layer> layers;
                for (const auto& entry : v->tables) {
                    auto mi = entry.find("material");
                    if (mi == entry.end() ||
                        mi->second.kind != config::Value::Kind::String)
                        throw ConfigError(where + ": each layer needs material = \"name\"");
                    double d = std::numeric_limits<double>::infinity();
                    if (auto di = entry.find("thickness"); di != entry.end())
                        d = di->second.number * lu;
                    layers.push_back({ws.material(mi->second.string), d});
                }
                const int j = static_cast<int>(t.number("atom_layer", where));
                ws.stacks.emplace(name, LayerStack(std::move(layers), j));
            } else {
                throw ConfigError(where + ": unknown stack kind '" + kind + "'");
            }
        }
    }

    if (const auto* scenarios = root.child("scenarios")) {
        for (const auto& [name, t] : scenarios->children) {
            const std::string where = "scenarios." + name;
            ScenarioDef def;
            def.name = name;
            def.kind = parse_kind(t.string("kind", where), where);
            def.stack = t.string_or("stack", "");
            def.material = t.string_or("material", "");
            def.atom = t.string_or("atom", "");
            switch (def.kind) {
                case Kind::Potential:
                case Kind::Cavity:
                    def.z = load_grid(t, "z", where, true);
                    if (const auto* v = t.find("sweep_magnetic_wp"))
                        def.magnetic_wp_values = v->numbers;
                    break;
                case Kind::Coeffs:
                    def.thickness = t.number_or("thickness", 0.0);
                    break;
                case Kind::Border:
                    def.sweep = load_grid(t, "eps", where, true);
                    break;
                case Kind::Wall:
                    def.wall_z_lo = t.number_or("z_min", 1e-3);
                    def.wall_z_hi = t.number_or("z_max", 10.0);
                    break;
                case Kind::ThicknessOpt:
                    def.sweep = load_grid(t, "d", where, true);
                    def.wall_z_lo = t.number_or("z_min", 1e-3);
                    def.wall_z_hi = t.number_or("z_max", 10.0);
                    break;
                case Kind::Dynamics:
                    def.mode = t.string_or("mode", "profile");
                    def.z_position = t.number("z_position", where);
                    if (def.mode == "profile") {
                        def.sweep = load_grid(t, "omega10", where, false);
                    } else if (def.mode == "trajectory") {
                        def.t_max = t.number("t_max", where);
                        def.t_points = static_cast<int>(t.number("t_points", where));
                    } else {
                        throw ConfigError(where + ": dynamics mode must be profile or trajectory");
                    }
                    break;
            }
            ws.scenarios.emplace(name, std::move(def));
        }
    }
    return ws;
}

Workspace load_file(const std::string& path) {
    return load(config::parse_file(path), path);
}

std::vector<std::string> list_scenarios(const Workspace& ws) {
    std::vector<std::string> names;
    names.reserve(ws.scenarios.size());
    for (const auto& [name, def] : ws.scenarios) names.push_back(name);
    return names;
}

namespace {

struct RunContext {
    const Workspace& ws;
    const ScenarioDef& def;
    const Overrides& overrides;
    quad::Spec spec;
    bool flagged = false;
};

TableOutput run_potential(RunContext& ctx) {
    const auto& ws = ctx.ws;
    const auto& def = ctx.def;
    const Atom& atom = ws.atom(def.atom);
    const Units units = make_units(ws, &atom, ctx.overrides.normalize);
    const double lu = ws.length_unit();

    std::vector<double> z_grid = def.z.build();
    for (auto& z : z_grid) z *= lu;

    TableOutput out;
    out.columns = {"z[" + units.length_name + "]"};

    if (def.magnetic_wp_values.empty()) {
        out.columns.push_back("U[" + units.energy_name + "]");
        out.columns.push_back("F[" + units.force_name + "]");
        out.columns.push_back("U_err[" + units.energy_name + "]");
        const auto curve = sample_curve(ws.stack(def.stack), atom, z_grid,
                                        ctx.spec, ctx.overrides.threads);
        ctx.flagged = ctx.flagged || !curve.converged();
        for (const auto& s : curve.samples)
            out.rows.push_back({s.z / units.length, s.U / units.energy,
                                s.F / units.force, s.error / units.energy});
        return out;
    }

    // one U(z) column per magnetic plasma frequency
    std::vector<PotentialCurve> curves;
    const Material& base = ws.material(def.material);
    for (double wp : def.magnetic_wp_values) {
        out.columns.push_back("U@wpm=" + format_double(wp) + "[" +
                              units.energy_name + "]");
        const Material swept = sweep_magnetic_plasma(base, wp * ws.ref_frequency);
        LayerStack stack = LayerStack::half_space(swept);
        curves.push_back(
            sample_curve(stack, atom, z_grid, ctx.spec, ctx.overrides.threads));
        ctx.flagged = ctx.flagged || !curves.back().converged();
    }
    for (std::size_t i = 0; i < z_grid.size(); ++i) {
        std::vector<double> row{z_grid[i] / units.length};
        for (const auto& c : curves) row.push_back(c.samples[i].U / units.energy);
        out.rows.push_back(std::move(row));
    }
    return out;
}

TableOutput run_coeffs(RunContext& ctx) {
    const auto& ws = ctx.ws;
    const auto& def = ctx.def;
    const Material& m = ws.material(def.material);
    const Atom& atom = ws.atom(def.atom);
    const Units units = make_units(ws, &atom, ctx.overrides.normalize);
    const double lu = units.length;
    const double alpha0 = atom.static_polarizability();
    const auto statics = m.statics();

    quad::Result c4_detail;
    const double c4_exact = asymptotics::c4(1.0 + statics.chi_e, 1.0 + statics.chi_m,
                                            alpha0, ctx.spec, &c4_detail);
    ctx.flagged = ctx.flagged || !c4_detail.converged;
    const double c4w = asymptotics::c4_weak(statics.chi_e, statics.chi_m, alpha0);
    const double c4s = asymptotics::c4_strong(statics.impedance, alpha0);
    const auto nr = asymptotics::c3_c1(m, atom, ctx.spec);
    ctx.flagged = ctx.flagged || !nr.converged;
    const auto wall = asymptotics::wall_geometry(nr.c3, nr.c1);

    TableOutput out;
    const std::string e = units.energy_name, l = units.length_name;
    out.columns = {"C4[" + e + "*(" + l + ")^4]", "C4_weak[...]", "C4_strong[...]",
                   "C3[" + e + "*(" + l + ")^3]", "C1[" + e + "*" + l + "]",
                   "z_wall[" + l + "]", "U_wall[" + e + "]"};
    std::vector<double> row = {
        c4_exact / (units.energy * lu * lu * lu * lu),
        c4w / (units.energy * lu * lu * lu * lu),
        c4s / (units.energy * lu * lu * lu * lu),
        nr.c3 / (units.energy * lu * lu * lu),
        nr.c1 / (units.energy * lu),
        wall.exists ? wall.z_max / lu : 0.0,
        wall.exists ? wall.height / units.energy : 0.0};

    if (def.thickness > 0.0) {
        const double d = def.thickness * ws.length_unit();
        const auto tp = asymptotics::d5_d4_d2(m, atom, d, ctx.spec);
        ctx.flagged = ctx.flagged || !tp.converged;
        out.columns.push_back("D5[" + e + "*(" + l + ")^5]");
        out.columns.push_back("D4[" + e + "*(" + l + ")^4]");
        out.columns.push_back("D2[" + e + "*(" + l + ")^2]");
        row.push_back(tp.d5 / (units.energy * std::pow(lu, 5)));
        row.push_back(tp.d4 / (units.energy * std::pow(lu, 4)));
        row.push_back(tp.d2 / (units.energy * lu * lu));
    }
    out.rows.push_back(std::move(row));
    out.metadata["impedance"] = statics.impedance;
    out.metadata["chi_e"] = statics.chi_e;
    out.metadata["chi_m"] = statics.chi_m;
    return out;
}

TableOutput run_border(RunContext& ctx) {
    const auto& def = ctx.def;
    GridSpec sweep = def.sweep;
    if (ctx.overrides.eps_max) sweep.hi = *ctx.overrides.eps_max;

    TableOutput out;
    out.columns = {"eps0", "mu0_border", "mu0_weak_asymptote",
                   "mu0_strong_asymptote"};
    const double z_star = asymptotics::strong_border_impedance();
    out.metadata["border_impedance"] = z_star;
    out.metadata["border_impedance_sq"] = z_star * z_star;

    for (double eps0 : sweep.build()) {
        const auto point = asymptotics::border_root(eps0, 1.0, ctx.spec);
        ctx.flagged = ctx.flagged || !point.converged;
        out.rows.push_back({eps0, point.mu0, 1.0 + 23.0 / 7.0 * (eps0 - 1.0),
                            z_star * z_star * eps0});
    }
    return out;
}

TableOutput run_wall(RunContext& ctx) {
    const auto& ws = ctx.ws;
    const auto& def = ctx.def;
    const Material& m = ws.material(def.material);
    const Atom& atom = ws.atom(def.atom);
    const Units units = make_units(ws, &atom, ctx.overrides.normalize);
    const double lu = ws.length_unit();

    const auto nr = asymptotics::c3_c1(m, atom, ctx.spec);
    ctx.flagged = ctx.flagged || !nr.converged;
    const auto pred = asymptotics::wall_geometry(nr.c3, nr.c1);

    asymptotics::WallGeometry closed;
    if (m.electric().size() == 1 && m.magnetic().size() == 1)
        closed = asymptotics::wall_weak_electric(m, atom);

    const auto stack = LayerStack::half_space(m);
    const auto numeric = asymptotics::wall_maximum(
        stack, atom, def.wall_z_lo * lu, def.wall_z_hi * lu, ctx.spec);

    TableOutput out;
    out.columns = {"z_wall[" + units.length_name + "]",
                   "U_wall[" + units.energy_name + "]",
                   "z_wall_closed_form[" + units.length_name + "]",
                   "U_wall_closed_form[" + units.energy_name + "]",
                   "z_wall_numeric[" + units.length_name + "]",
                   "U_wall_numeric[" + units.energy_name + "]"};
    out.rows.push_back({pred.exists ? pred.z_max / units.length : 0.0,
                        pred.exists ? pred.height / units.energy : 0.0,
                        closed.exists ? closed.z_max / units.length : 0.0,
                        closed.exists ? closed.height / units.energy : 0.0,
                        numeric.exists ? numeric.z / units.length : 0.0,
                        numeric.exists ? numeric.U / units.energy : 0.0});
    out.metadata["wall_exists"] = numeric.exists;
    return out;
}

TableOutput run_thickness(RunContext& ctx) {
    const auto& ws = ctx.ws;
    const auto& def = ctx.def;
    const Material& m = ws.material(def.material);
    const Atom& atom = ws.atom(def.atom);
    const Units units = make_units(ws, &atom, ctx.overrides.normalize);
    const double lu = ws.length_unit();
    const double z_lo = def.wall_z_lo * lu, z_hi = def.wall_z_hi * lu;

    TableOutput out;
    out.columns = {"d[" + units.length_name + "]",
                   "wall_height[" + units.energy_name + "]"};
    for (double d : def.sweep.build()) {
        const auto stack = LayerStack::slab(m, d * lu);
        const auto peak = asymptotics::wall_maximum(stack, atom, z_lo, z_hi, ctx.spec);
        out.rows.push_back({d, peak.exists ? peak.U / units.energy : 0.0});
    }

    const auto opt = asymptotics::optimal_thickness(
        m, atom, def.sweep.lo * lu, def.sweep.hi * lu, z_lo, z_hi, ctx.spec);
    out.metadata["has_wall"] = opt.has_wall;
    if (opt.has_wall) {
        out.metadata["d_star"] = opt.d / units.length;
        out.metadata["height_star"] = opt.height / units.energy;
    }
    return out;
}

TableOutput run_dynamics(RunContext& ctx) {
    const auto& ws = ctx.ws;
    const auto& def = ctx.def;
    const Material& m = ws.material(def.material);
    const Atom& base = ws.atom(def.atom);
    const Units units = make_units(ws, &base, ctx.overrides.normalize);
    const double z = def.z_position * ws.length_unit();
    const double dipole_sq = base.transition().dipole_sq;

    TableOutput out;
    if (def.mode == "trajectory") {
        dynamics::SpectrumOptions opts;
        const auto spectrum = dynamics::self_consistent_spectrum(base, m, z, ctx.spec, opts);
        ctx.flagged = ctx.flagged || !spectrum.converged;
        const double gamma = spectrum.gamma_excited;
        std::vector<double> t_grid(def.t_points);
        for (int i = 0; i < def.t_points; ++i)
            t_grid[i] = def.t_max * i / std::max(1, def.t_points - 1) /
                        (gamma > 0.0 ? gamma : 1.0);
        const auto traj = dynamics::force_trajectory(base, m, z, t_grid, ctx.spec, opts);
        out.columns = {"t[1/Gamma_1]", "F[" + units.force_name + "]"};
        for (const auto& p : traj)
            out.rows.push_back({p.t * (gamma > 0.0 ? gamma : 1.0),
                                p.force / units.force});
        out.metadata["omega_tilde[w_ref]"] = spectrum.omega_tilde / ws.ref_frequency;
        out.metadata["gamma_1[w_ref]"] = gamma / ws.ref_frequency;
        out.metadata["iterations"] = spectrum.iterations;
        return out;
    }

    out.columns = {"omega10[" + units.frequency_name + "]",
                   "F_perturbative[" + units.force_name + "]",
                   "F_broadening_only[" + units.force_name + "]",
                   "F_shift_only[" + units.force_name + "]",
                   "F_full[" + units.force_name + "]",
                   "omega_tilde_full[" + units.frequency_name + "]",
                   "gamma_full[" + units.frequency_name + "]"};

    for (double w : def.sweep.build()) {
        const double omega10 = w * ws.ref_frequency;
        const Atom atom = Atom::two_level(omega10, dipole_sq);

        dynamics::SpectrumOptions pert{false, false, 0.5, 1e-10, 200};
        dynamics::SpectrumOptions broad{false, true, 0.5, 1e-10, 200};
        dynamics::SpectrumOptions shift{true, false, 0.5, 1e-10, 200};
        dynamics::SpectrumOptions full{true, true, 0.5, 1e-10, 200};

        const auto s_pert = dynamics::self_consistent_spectrum(atom, m, z, ctx.spec, pert);
        const auto s_broad = dynamics::self_consistent_spectrum(atom, m, z, ctx.spec, broad);
        const auto s_shift = dynamics::self_consistent_spectrum(atom, m, z, ctx.spec, shift);
        const auto s_full = dynamics::self_consistent_spectrum(atom, m, z, ctx.spec, full);
        ctx.flagged = ctx.flagged || !s_shift.converged || !s_full.converged ||
                      !s_broad.converged;

        out.rows.push_back({w,
                            dynamics::resonant_force(atom, m, s_pert, z) / units.force,
                            dynamics::resonant_force(atom, m, s_broad, z) / units.force,
                            dynamics::resonant_force(atom, m, s_shift, z) / units.force,
                            dynamics::resonant_force(atom, m, s_full, z) / units.force,
                            s_full.omega_tilde / ws.ref_frequency,
                            s_full.gamma_excited / ws.ref_frequency});
    }
    out.metadata["z_position[c/w_ref]"] = def.z_position;
    return out;
}

}  // namespace

RunResult run(const Workspace& ws, const std::string& scenario_name,
              const Overrides& overrides) {
    auto it = ws.scenarios.find(scenario_name);
    if (it == ws.scenarios.end())
        throw ConfigError("unknown scenario '" + scenario_name + "'");
    const ScenarioDef& def = it->second;

    RunContext ctx{ws, def, overrides, quad::Spec{}, false};
    if (overrides.rel_tol) ctx.spec.rel_tol = *overrides.rel_tol;

    TableOutput table;
    switch (def.kind) {
        case Kind::Potential:
        case Kind::Cavity:
            table = run_potential(ctx);
            break;
        case Kind::Coeffs:
            table = run_coeffs(ctx);
            break;
        case Kind::Border:
            table = run_border(ctx);
            break;
        case Kind::Wall:
            table = run_wall(ctx);
            break;
        case Kind::ThicknessOpt:
            table = run_thickness(ctx);
            break;
        case Kind::Dynamics:
            table = run_dynamics(ctx);
            break;
    }

    table.metadata["rel_tol"] = ctx.spec.rel_tol;
    table.metadata["flagged"] = ctx.flagged;

    RunResult result;
    result.flagged = ctx.flagged;
    result.artifact = overrides.out.value_or(
        scenario_name + (overrides.format == Format::Csv ? ".csv" : ".json"));
    write_output(table, result.artifact, overrides.format, scenario_name);
    result.exit_code =
        (ctx.flagged && !overrides.allow_flags) ? kExitNumerical : kExitOk;
    return result;
}

}  // namespace cpforge::scenario
