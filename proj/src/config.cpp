/*
* Copyright (C) 2026 The rdlab authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#include "rdlab/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace rdlab
{

namespace
{

std::string where(const YAML::Node& node)
{
    const YAML::Mark mark = node.Mark();
    if (mark.is_null()) {
        return "";
    }
    return " (line " + std::to_string(mark.line + 1) + ")";
}

class Reader
{
public:
    std::vector<std::string> errors;

    bool map(const YAML::Node& node, const std::string& path, std::initializer_list<const char*> allowed)
    {
        if (!node) {
            return false;
        }
        if (!node.IsMap()) {
            errors.push_back(path + ": expected a mapping" + where(node));
            return false;
        }
        for (const auto& kv : node) {
            const auto key = kv.first.as<std::string>();
            if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
                errors.push_back(path + "." + key + ": unknown key" + where(kv.first));
            }
        }
        return true;
    }

    template <class T>
    void get(const YAML::Node& node, const char* key, const std::string& path, T& out, const char* type)
    {
        const YAML::Node value = node[key];
        if (!value) {
            return;
        }
        try {
            out = value.as<T>();
        }
        catch (const YAML::Exception&) {
            errors.push_back(path + "." + key + ": expected " + type + where(value));
        }
    }

    void number(const YAML::Node& node, const char* key, const std::string& path, double& out)
    {
        get(node, key, path, out, "a number");
    }

    void list(const YAML::Node& node, const char* key, const std::string& path, std::vector<double>& out)
    {
        get(node, key, path, out, "a list of numbers");
    }

    void profile(const YAML::Node& node, const char* key, const std::string& path, GaussianProfile& out)
    {
        const std::string sub = path + "." + key;
        if (map(node[key], sub, {"coef", "rate"})) {
            number(node[key], "coef", sub, out.coef);
            number(node[key], "rate", sub, out.rate);
        }
    }

    void family(const YAML::Node& node, const std::string& path, TemperedFamily& out)
    {
        if (!map(node, path, {"R0", "sigma", "gamma", "anchor", "modes"})) {
            return;
        }
        number(node, "R0", path, out.R0);
        number(node, "sigma", path, out.sigma);
        number(node, "gamma", path, out.gamma);
        number(node, "anchor", path, out.anchor);
        get(node, "modes", path, out.modes, "an integer");
    }
};

bool increasing_positive(const std::vector<double>& v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0) || (i > 0 && !(v[i] > v[i - 1]))) {
            return false;
        }
    }
    return !v.empty();
}

void read_model(Reader& r, const YAML::Node& node, ExperimentConfig& cfg, bool& explicit_constants)
{
    const std::string path = "model";
    if (!r.map(node, path,
               {"lambda", "p", "beta", "kappa", "psi", "derive_constants", "constants", "phi1", "phi2", "phi3",
                "phi4"})) {
        return;
    }
    ModelSpec& m = cfg.model;
    r.number(node, "lambda", path, m.lambda);
    r.number(node, "p", path, m.p);
    r.number(node, "beta", path, m.beta);
    r.number(node, "kappa", path, m.kappa);
    r.profile(node, "psi", path, m.psi);
    r.get(node, "derive_constants", path, cfg.derive_constants, "a boolean");
    const YAML::Node c = node["constants"];
    if (r.map(c, "model.constants", {"alpha1", "alpha2", "alpha3", "alpha4", "alpha5"})) {
        explicit_constants = true;
        r.number(c, "alpha1", "model.constants", m.constants.alpha1);
        r.number(c, "alpha2", "model.constants", m.constants.alpha2);
        r.number(c, "alpha3", "model.constants", m.constants.alpha3);
        r.number(c, "alpha4", "model.constants", m.constants.alpha4);
        r.number(c, "alpha5", "model.constants", m.constants.alpha5);
    }
    for (const char* key : {"phi1", "phi2", "phi3", "phi4"}) {
        if (node[key]) {
            explicit_constants = true;
        }
    }
    r.profile(node, "phi1", path, m.phi1);
    r.profile(node, "phi2", path, m.phi2);
    r.profile(node, "phi3", path, m.phi3);
    r.profile(node, "phi4", path, m.phi4);
}

void read_forcing(Reader& r, const YAML::Node& node, ForcingSpec& g)
{
    const std::string path = "forcing";
    if (!r.map(node, path, {"temporal", "spatial", "amplitude", "rate", "degree", "bump_radius"})) {
        return;
    }
    std::string temporal = to_string(g.temporal);
    std::string spatial = to_string(g.spatial);
    r.get(node, "temporal", path, temporal, "a string");
    r.get(node, "spatial", path, spatial, "a string");
    if (temporal == "exponential") {
        g.temporal = TemporalKind::exponential;
    }
    else if (temporal == "polynomial") {
        g.temporal = TemporalKind::polynomial;
    }
    else {
        r.errors.push_back("forcing.temporal: expected exponential or polynomial, got " + temporal);
    }
    if (spatial == "gaussian") {
        g.spatial = SpatialKind::gaussian;
    }
    else if (spatial == "bump") {
        g.spatial = SpatialKind::bump;
    }
    else {
        r.errors.push_back("forcing.spatial: expected gaussian or bump, got " + spatial);
    }
    r.number(node, "amplitude", path, g.amplitude);
    r.number(node, "rate", path, g.rate);
    r.number(node, "degree", path, g.degree);
    r.number(node, "bump_radius", path, g.bump_radius);
}

void read_solver(Reader& r, const YAML::Node& node, SolverControls& s)
{
    const std::string path = "solver";
    if (!r.map(node, path,
               {"dt", "scheme", "newton_tol", "newton_max_iterations", "monitor_energy", "slack_constant"})) {
        return;
    }
    r.number(node, "dt", path, s.dt);
    std::string scheme = to_string(s.scheme);
    r.get(node, "scheme", path, scheme, "a string");
    if (scheme == "implicit") {
        s.scheme = Scheme::implicit;
    }
    else if (scheme == "imex") {
        s.scheme = Scheme::imex;
    }
    else {
        r.errors.push_back("solver.scheme: expected implicit or imex, got " + scheme);
    }
    r.number(node, "newton_tol", path, s.newton_tol);
    r.get(node, "newton_max_iterations", path, s.newton_max_iterations, "an integer");
    r.get(node, "monitor_energy", path, s.monitor_energy, "a boolean");
    r.number(node, "slack_constant", path, s.slack_constant);
}

void read_tasks(Reader& r, const YAML::Node& node, ExperimentConfig& cfg)
{
    if (!r.map(node, "tasks", {"list", "structure", "simulate", "estimates", "attractor"})) {
        return;
    }
    r.get(node, "list", "tasks", cfg.tasks, "a list of task names");

    const YAML::Node st = node["structure"];
    if (r.map(st, "tasks.structure", {"s_min", "s_max", "samples"})) {
        r.number(st, "s_min", "tasks.structure", cfg.structure.s_min);
        r.number(st, "s_max", "tasks.structure", cfg.structure.s_max);
        r.get(st, "samples", "tasks.structure", cfg.structure.samples, "a count");
    }

    const YAML::Node si = node["simulate"];
    if (r.map(si, "tasks.simulate", {"t0", "t1", "member", "snapshot_every"})) {
        r.number(si, "t0", "tasks.simulate", cfg.simulate.t0);
        r.number(si, "t1", "tasks.simulate", cfg.simulate.t1);
        r.get(si, "member", "tasks.simulate", cfg.simulate.member, "a count");
        r.get(si, "snapshot_every", "tasks.simulate", cfg.simulate.snapshot_every, "a count");
    }

    const YAML::Node es = node["estimates"];
    const std::string ep = "tasks.estimates";
    if (r.map(es, ep, {"tau", "horizons", "members", "eta", "radii", "cauchy_pairs"})) {
        r.number(es, "tau", ep, cfg.estimates.tau);
        r.list(es, "horizons", ep, cfg.estimates.horizons);
        r.get(es, "members", ep, cfg.estimates.members, "a count");
        r.number(es, "eta", ep, cfg.estimates.eta);
        r.list(es, "radii", ep, cfg.estimates.radii);
        std::vector<std::vector<double>> pairs;
        bool have_pairs = static_cast<bool>(es["cauchy_pairs"]);
        r.get(es, "cauchy_pairs", ep, pairs, "a list of [t_n, t_m] pairs");
        if (have_pairs) {
            cfg.estimates.cauchy_pairs.clear();
            for (const auto& p : pairs) {
                if (p.size() != 2) {
                    r.errors.push_back(ep + ".cauchy_pairs: every entry needs exactly two horizons");
                    continue;
                }
                cfg.estimates.cauchy_pairs.emplace_back(p[0], p[1]);
            }
        }
    }

    const YAML::Node at = node["attractor"];
    const std::string ap = "tasks.attractor";
    if (r.map(at, ap,
              {"tau", "ladder", "ensemble", "tol", "stop_early", "seed_check", "invariance_shift", "invariance_tol",
               "invariance_fraction", "attraction_horizons", "attraction_members", "attraction_tol",
               "attraction_family"})) {
        AttractorTask& a = cfg.attractor;
        r.number(at, "tau", ap, a.tau);
        r.list(at, "ladder", ap, a.ladder);
        r.get(at, "ensemble", ap, a.ensemble, "a count");
        r.number(at, "tol", ap, a.tol);
        r.get(at, "stop_early", ap, a.stop_early, "a boolean");
        r.get(at, "seed_check", ap, a.seed_check, "a boolean");
        r.number(at, "invariance_shift", ap, a.invariance_shift);
        r.number(at, "invariance_tol", ap, a.invariance_tol);
        r.number(at, "invariance_fraction", ap, a.invariance_fraction);
        r.list(at, "attraction_horizons", ap, a.attraction_horizons);
        r.get(at, "attraction_members", ap, a.attraction_members, "a count");
        r.number(at, "attraction_tol", ap, a.attraction_tol);
        r.family(at["attraction_family"], ap + ".attraction_family", a.attraction_family);
    }
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> messages)
    : std::runtime_error([&] {
        std::string s = "invalid configuration:";
        for (const auto& m : messages) {
            s += "\n  - " + m;
        }
        return s;
    }())
    , m_messages(std::move(messages))
{
}

std::vector<double> ExperimentConfig::tail_radii() const
{
    if (!estimates.radii.empty()) {
        return estimates.radii;
    }
    std::vector<double> out;
    const double k_max = radius / std::numbers::sqrt2;
    for (int i = 1; 0.5 * i <= k_max; ++i) {
        out.push_back(0.5 * i);
    }
    return out;
}

bool ExperimentConfig::has_task(const std::string& name) const
{
    return std::find(tasks.begin(), tasks.end(), name) != tasks.end();
}

std::vector<std::string> ExperimentConfig::validate() const
{
    std::vector<std::string> out;
    auto append = [&out](const std::vector<std::string>& more) { out.insert(out.end(), more.begin(), more.end()); };

    if (dimension != 1 && dimension != 2) {
        out.emplace_back("grid.dimension must be 1 or 2");
    }
    if (!(radius > 0.0)) {
        out.emplace_back("grid.radius must be positive");
    }
    if (points < 3) {
        out.emplace_back("grid.points must be at least 3");
    }
    append(model.validate());
    if (derive_constants && model.kappa != 0.0) {
        out.emplace_back("model.derive_constants requires kappa = 0");
    }
    append(forcing.validate(model.lambda));
    append(solver.validate(model));
    append(family.validate(model.lambda));

    std::set<std::string> seen;
    for (const auto& t : tasks) {
        if (std::find(task_names().begin(), task_names().end(), t) == task_names().end()) {
            out.push_back("tasks.list: unknown task " + t);
        }
        if (!seen.insert(t).second) {
            out.push_back("tasks.list: duplicate task " + t);
        }
    }

    if (structure.samples < 100) {
        out.emplace_back("tasks.structure.samples must be at least 100");
    }
    if (!(structure.s_max > structure.s_min)) {
        out.emplace_back("tasks.structure: s_max must exceed s_min");
    }
    if (!(simulate.t1 > simulate.t0)) {
        out.emplace_back("tasks.simulate: t1 must exceed t0");
    }

    const EstimatesTask& e = estimates;
    if (!increasing_positive(e.horizons)) {
        out.emplace_back("tasks.estimates.horizons must be positive and increasing");
    }
    else if (e.horizons.front() < 2.0) {
        out.emplace_back("tasks.estimates.horizons must all be at least 2 (window integrals over (tau-2, tau))");
    }
    if (e.members == 0) {
        out.emplace_back("tasks.estimates.members must be positive");
    }
    if (!(e.eta > 0.0)) {
        out.emplace_back("tasks.estimates.eta must be positive");
    }
    const double k_max = radius / std::numbers::sqrt2;
    const auto radii = tail_radii();
    if (radii.empty()) {
        out.emplace_back("tasks.estimates.radii: no admissible tail radius");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < 0.0 || radii[i] > k_max) {
            std::ostringstream msg;
            msg << "tasks.estimates.radii: k = " << radii[i] << " outside [0, L/sqrt(2)] = [0, " << k_max << "]";
            out.push_back(msg.str());
        }
        if (i > 0 && !(radii[i] > radii[i - 1])) {
            out.emplace_back("tasks.estimates.radii must be increasing");
        }
    }
    for (const auto& [a, b] : e.cauchy_pairs) {
        const bool known = std::find(e.horizons.begin(), e.horizons.end(), a) != e.horizons.end() &&
                           std::find(e.horizons.begin(), e.horizons.end(), b) != e.horizons.end();
        if (!known || !(a < b)) {
            out.emplace_back("tasks.estimates.cauchy_pairs: pairs must be increasing and drawn from horizons");
        }
    }

    const AttractorTask& a = attractor;
    if (!increasing_positive(a.ladder) || a.ladder.size() < 2) {
        out.emplace_back("tasks.attractor.ladder needs at least two positive increasing horizons");
    }
    if (a.ensemble < 2) {
        out.emplace_back("tasks.attractor.ensemble must be at least 2");
    }
    if (!(a.tol > 0.0)) {
        out.emplace_back("tasks.attractor.tol must be positive");
    }
    if (!(a.invariance_shift > 0.0)) {
        out.emplace_back("tasks.attractor.invariance_shift must be positive");
    }
    if (!(a.invariance_tol > 0.0) || !(a.invariance_fraction >= 0.0)) {
        out.emplace_back("tasks.attractor: invariance tolerances must be positive");
    }
    if (!increasing_positive(a.attraction_horizons)) {
        out.emplace_back("tasks.attractor.attraction_horizons must be positive and increasing");
    }
    if (a.attraction_members == 0) {
        out.emplace_back("tasks.attractor.attraction_members must be positive");
    }
    if (!(a.attraction_tol > 0.0)) {
        out.emplace_back("tasks.attractor.attraction_tol must be positive");
    }
    for (const auto& m : a.attraction_family.validate(model.lambda)) {
        out.push_back("tasks.attractor.attraction_" + m);
    }
    return out;
}

ExperimentConfig parse_config(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    }
    catch (const YAML::ParserException& e) {
        throw ConfigError({std::string("parse error: ") + e.what()});
    }
    ExperimentConfig cfg;
    Reader r;
    if (root.IsNull()) {
        throw ConfigError({"empty configuration"});
    }
    if (!r.map(root, "config", {"grid", "model", "forcing", "solver", "family", "run", "tasks"})) {
        throw ConfigError(r.errors);
    }
    for (const char* required : {"grid", "model", "forcing"}) {
        if (!root[required]) {
            r.errors.push_back(std::string(required) + ": required block missing");
        }
    }

    const YAML::Node grid = root["grid"];
    if (r.map(grid, "grid", {"dimension", "radius", "points"})) {
        r.get(grid, "dimension", "grid", cfg.dimension, "an integer");
        r.number(grid, "radius", "grid", cfg.radius);
        r.get(grid, "points", "grid", cfg.points, "an integer");
    }
    bool explicit_constants = false;
    read_model(r, root["model"], cfg, explicit_constants);
    read_forcing(r, root["forcing"], cfg.forcing);
    read_solver(r, root["solver"], cfg.solver);
    r.family(root["family"], "family", cfg.family);

    const YAML::Node run = root["run"];
    if (r.map(run, "run", {"seed", "jobs", "output"})) {
        r.get(run, "seed", "run", cfg.seed, "an unsigned integer");
        r.get(run, "jobs", "run", cfg.jobs, "an unsigned integer");
        r.get(run, "output", "run", cfg.output, "a path");
    }
    read_tasks(r, root["tasks"], cfg);

    if (cfg.derive_constants) {
        if (explicit_constants) {
            r.errors.emplace_back("model: constants/phi profiles cannot be given together with derive_constants");
        }
        else if (cfg.model.beta > 0.0 && cfg.model.p >= 2.0 && cfg.model.kappa == 0.0) {
            const ModelSpec& m = cfg.model;
            cfg.model = ModelSpec::with_derived_constants(m.lambda, m.p, m.beta, m.psi.coef, m.psi.rate);
        }
        else {
            r.errors.emplace_back("model.derive_constants requires beta > 0, p >= 2 and kappa = 0");
        }
    }

    if (r.errors.empty()) {
        auto more = cfg.validate();
        r.errors.insert(r.errors.end(), more.begin(), more.end());
    }
    if (!r.errors.empty()) {
        throw ConfigError(r.errors);
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError({"cannot read configuration file " + path.string()});
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

namespace
{

void emit_profile(YAML::Emitter& out, const char* key, const GaussianProfile& p)
{
    out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "coef" << YAML::Value << p.coef;
    out << YAML::Key << "rate" << YAML::Value << p.rate;
    out << YAML::EndMap;
}

void emit_family(YAML::Emitter& out, const TemperedFamily& f)
{
    out << YAML::BeginMap;
    out << YAML::Key << "R0" << YAML::Value << f.R0;
    out << YAML::Key << "sigma" << YAML::Value << f.sigma;
    out << YAML::Key << "gamma" << YAML::Value << f.gamma;
    out << YAML::Key << "anchor" << YAML::Value << f.anchor;
    out << YAML::Key << "modes" << YAML::Value << f.modes;
    out << YAML::EndMap;
}

void emit_list(YAML::Emitter& out, const char* key, const std::vector<double>& v)
{
    out << YAML::Key << key << YAML::Value << YAML::Flow << v;
}

} // namespace

std::string emit_config(const ExperimentConfig& cfg)
{
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::BeginMap;

    out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "dimension" << YAML::Value << cfg.dimension;
    out << YAML::Key << "radius" << YAML::Value << cfg.radius;
    out << YAML::Key << "points" << YAML::Value << cfg.points;
    out << YAML::EndMap;

    const ModelSpec& m = cfg.model;
    out << YAML::Key << "model" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "lambda" << YAML::Value << m.lambda;
    out << YAML::Key << "p" << YAML::Value << m.p;
    out << YAML::Key << "beta" << YAML::Value << m.beta;
    out << YAML::Key << "kappa" << YAML::Value << m.kappa;
    emit_profile(out, "psi", m.psi);
    out << YAML::Key << "constants" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "alpha1" << YAML::Value << m.constants.alpha1;
    out << YAML::Key << "alpha2" << YAML::Value << m.constants.alpha2;
    out << YAML::Key << "alpha3" << YAML::Value << m.constants.alpha3;
    out << YAML::Key << "alpha4" << YAML::Value << m.constants.alpha4;
    out << YAML::Key << "alpha5" << YAML::Value << m.constants.alpha5;
    out << YAML::EndMap;
    emit_profile(out, "phi1", m.phi1);
    emit_profile(out, "phi2", m.phi2);
    emit_profile(out, "phi3", m.phi3);
    emit_profile(out, "phi4", m.phi4);
    out << YAML::EndMap;

    const ForcingSpec& g = cfg.forcing;
    out << YAML::Key << "forcing" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "temporal" << YAML::Value << to_string(g.temporal);
    out << YAML::Key << "spatial" << YAML::Value << to_string(g.spatial);
    out << YAML::Key << "amplitude" << YAML::Value << g.amplitude;
    out << YAML::Key << "rate" << YAML::Value << g.rate;
    out << YAML::Key << "degree" << YAML::Value << g.degree;
    out << YAML::Key << "bump_radius" << YAML::Value << g.bump_radius;
    out << YAML::EndMap;

    const SolverControls& s = cfg.solver;
    out << YAML::Key << "solver" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "dt" << YAML::Value << s.dt;
    out << YAML::Key << "scheme" << YAML::Value << to_string(s.scheme);
    out << YAML::Key << "newton_tol" << YAML::Value << s.newton_tol;
    out << YAML::Key << "newton_max_iterations" << YAML::Value << s.newton_max_iterations;
    out << YAML::Key << "monitor_energy" << YAML::Value << s.monitor_energy;
    out << YAML::Key << "slack_constant" << YAML::Value << s.slack_constant;
    out << YAML::EndMap;

    out << YAML::Key << "family" << YAML::Value;
    emit_family(out, cfg.family);

    out << YAML::Key << "run" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "seed" << YAML::Value << cfg.seed;
    out << YAML::Key << "jobs" << YAML::Value << cfg.jobs;
    out << YAML::Key << "output" << YAML::Value << cfg.output;
    out << YAML::EndMap;

    out << YAML::Key << "tasks" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "list" << YAML::Value << YAML::Flow << cfg.tasks;
    out << YAML::Key << "structure" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "s_min" << YAML::Value << cfg.structure.s_min;
    out << YAML::Key << "s_max" << YAML::Value << cfg.structure.s_max;
    out << YAML::Key << "samples" << YAML::Value << cfg.structure.samples;
    out << YAML::EndMap;
    out << YAML::Key << "simulate" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "t0" << YAML::Value << cfg.simulate.t0;
    out << YAML::Key << "t1" << YAML::Value << cfg.simulate.t1;
    out << YAML::Key << "member" << YAML::Value << cfg.simulate.member;
    out << YAML::Key << "snapshot_every" << YAML::Value << cfg.simulate.snapshot_every;
    out << YAML::EndMap;
    const EstimatesTask& e = cfg.estimates;
    out << YAML::Key << "estimates" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "tau" << YAML::Value << e.tau;
    emit_list(out, "horizons", e.horizons);
    out << YAML::Key << "members" << YAML::Value << e.members;
    out << YAML::Key << "eta" << YAML::Value << e.eta;
    emit_list(out, "radii", cfg.tail_radii());
    out << YAML::Key << "cauchy_pairs" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (const auto& [a, b] : e.cauchy_pairs) {
        out << YAML::Flow << std::vector<double>{a, b};
    }
    out << YAML::EndSeq;
    out << YAML::EndMap;
    const AttractorTask& a = cfg.attractor;
    out << YAML::Key << "attractor" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "tau" << YAML::Value << a.tau;
    emit_list(out, "ladder", a.ladder);
    out << YAML::Key << "ensemble" << YAML::Value << a.ensemble;
    out << YAML::Key << "tol" << YAML::Value << a.tol;
    out << YAML::Key << "stop_early" << YAML::Value << a.stop_early;
    out << YAML::Key << "seed_check" << YAML::Value << a.seed_check;
    out << YAML::Key << "invariance_shift" << YAML::Value << a.invariance_shift;
    out << YAML::Key << "invariance_tol" << YAML::Value << a.invariance_tol;
    out << YAML::Key << "invariance_fraction" << YAML::Value << a.invariance_fraction;
    emit_list(out, "attraction_horizons", a.attraction_horizons);
    out << YAML::Key << "attraction_members" << YAML::Value << a.attraction_members;
    out << YAML::Key << "attraction_tol" << YAML::Value << a.attraction_tol;
    out << YAML::Key << "attraction_family" << YAML::Value;
    emit_family(out, a.attraction_family);
    out << YAML::EndMap;
    out << YAML::EndMap;

    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

} // namespace rdlab
