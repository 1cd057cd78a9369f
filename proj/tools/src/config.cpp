#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nippas::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// known schema; the reserved sections are manifest metadata and are ignored
// so a manifest can be replayed as a config
const std::map<std::string, std::set<std::string>> kSchema = {
    {"model",
     {"kind", "re_profile", "n_pde", "qoi", "qoi_index", "scheme", "nx", "dt", "n_cells",
      "cfl", "function"}},
    {"domain", {"kind", "lo", "hi"}},
    {"pdf", {"kind", "alpha", "beta"}},
    {"measure", {"kind"}},
    {"run", {"epsilon", "max_nodes", "seed", "dup_tol_rel"}},
    {"swarm",
     {"particles", "max_iters", "stall_iters", "inertia", "cognitive", "social", "seed"}},
    {"errors", {"track", "n_mc", "seed", "moments", "quad_nodes"}},
};
const std::set<std::string> kReservedSections = {"artifact", "outputs", "result"};

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), path);
}

Config Config::parse_text(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                         ": malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            cfg.data_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || section.empty())
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": expected 'key = value' inside a [section], got '" +
                                     line + "'");
        cfg.data_[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return cfg;
}

void Config::fail(const std::string& section, const std::string& key,
                  const std::string& reason) const {
    throw std::runtime_error("config " + origin_ + ": [" + section + "] " + key + ": " +
                             reason);
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto s = data_.find(section);
    return s != data_.end() && s->second.count(key) > 0;
}

std::string Config::get(const std::string& section, const std::string& key,
                        const std::string& fallback) const {
    auto s = data_.find(section);
    if (s == data_.end()) return fallback;
    auto k = s->second.find(key);
    return k == s->second.end() ? fallback : k->second;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    if (!has(section, key)) return fallback;
    const std::string raw = get(section, key, "");
    try {
        std::size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        fail(section, key, "expected a real number, got '" + raw + "'");
    }
}

long Config::get_long(const std::string& section, const std::string& key,
                      long fallback) const {
    if (!has(section, key)) return fallback;
    const std::string raw = get(section, key, "");
    try {
        std::size_t used = 0;
        const long v = std::stol(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        fail(section, key, "expected an integer, got '" + raw + "'");
    }
}

bool Config::get_bool(const std::string& section, const std::string& key,
                      bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string raw = get(section, key, "");
    if (raw == "true" || raw == "1" || raw == "yes") return true;
    if (raw == "false" || raw == "0" || raw == "no") return false;
    fail(section, key, "expected a boolean, got '" + raw + "'");
}

std::vector<double> Config::get_list(const std::string& section, const std::string& key) const {
    std::vector<double> values;
    std::string raw = get(section, key, "");
    std::replace(raw.begin(), raw.end(), ',', ' ');
    std::istringstream in(raw);
    double v;
    while (in >> v) values.push_back(v);
    if (!in.eof()) fail(section, key, "expected a comma-separated list of reals");
    return values;
}

void Config::set(const std::string& section, const std::string& key,
                 const std::string& value) {
    data_[section][key] = value;
}

void Config::validate_run_schema() const {
    for (const auto& [section, keys] : data_) {
        if (kReservedSections.count(section)) continue;
        auto schema = kSchema.find(section);
        if (schema == kSchema.end())
            throw std::runtime_error("config " + origin_ + ": unknown section [" + section +
                                     "]");
        for (const auto& [key, value] : keys)
            if (!schema->second.count(key)) fail(section, key, "unknown key");
    }
}

namespace {

BoundingBox box_from_lists(const std::vector<double>& lo, const std::vector<double>& hi) {
    Vector l(lo.size()), h(hi.size());
    for (std::size_t i = 0; i < lo.size(); ++i) l[i] = lo[i];
    for (std::size_t i = 0; i < hi.size(); ++i) h[i] = hi[i];
    return BoundingBox(l, h);
}

struct ToySpec {
    int dim;
    BoundingBox box;
    std::function<double(const Vector&)> fn;
};

ToySpec toy_spec(const std::string& name) {
    if (name == "const")
        return {1, BoundingBox::unit(1), [](const Vector&) { return 1.0; }};
    if (name == "linear1d")
        return {1, BoundingBox::unit(1), [](const Vector& z) { return z[0]; }};
    if (name == "runge1d")
        return {1, BoundingBox(Vector::Constant(1, -1.0), Vector::Constant(1, 1.0)),
                [](const Vector& z) { return 1.0 / (1.0 + 25.0 * z[0] * z[0]); }};
    if (name == "bilinear2d")
        return {2, BoundingBox::unit(2), [](const Vector& z) { return 3.0 + z[0] * z[1]; }};
    if (name == "runge2d")
        return {2, BoundingBox(Vector::Constant(2, -1.0), Vector::Constant(2, 1.0)),
                [](const Vector& z) {
                    return 1.0 / (1.0 + 5.0 * (z[0] * z[0] + z[1] * z[1]));
                }};
    throw std::runtime_error("config: [model] function: unknown toy function '" + name + "'");
}

QoiSpec parse_qoi(const Config& cfg, int n_pde) {
    const std::string kind = cfg.get("model", "qoi", "midgrid");
    if (kind == "identity") return QoiSpec::identity();
    if (kind == "midgrid") return QoiSpec::select(n_pde / 2);
    if (kind == "index")
        return QoiSpec::select(static_cast<int>(cfg.get_long("model", "qoi_index", 0)));
    throw std::runtime_error("config: [model] qoi: unknown QoI kind '" + kind + "'");
}

}  // namespace

RunSetup build_setup(const Config& cfg) {
    cfg.validate_run_schema();
    RunSetup setup;

    const std::string model_kind = cfg.get("model", "kind", "");
    if (model_kind.empty())
        throw std::runtime_error("config: [model] kind: required key is missing");

    BoundingBox default_box;
    int dim = 0;
    std::string default_domain = "hypercube";

    if (model_kind == "steady_ad") {
        const int n_pde = static_cast<int>(cfg.get_long("model", "n_pde", 1000));
        setup.model = std::make_unique<SteadyAdvectionDiffusion>(
            re_profile_from_string(cfg.get("model", "re_profile", "Re1")), n_pde,
            parse_qoi(cfg, n_pde));
        default_box = SteadyAdvectionDiffusion::parameter_box();
        dim = 1;
    } else if (model_kind == "unsteady_ad") {
        setup.model = std::make_unique<UnsteadyAdvectionDiffusion>(
            time_scheme_from_string(cfg.get("model", "scheme", "CN")),
            static_cast<int>(cfg.get_long("model", "nx", 256)),
            cfg.get_double("model", "dt", 1e-5));
        default_box = UnsteadyAdvectionDiffusion::parameter_box();
        dim = 2;
    } else if (model_kind == "swe_dambreak") {
        setup.model = std::make_unique<SweDambreak>(
            static_cast<int>(cfg.get_long("model", "n_cells", 2000)),
            cfg.get_double("model", "cfl", 0.45));
        default_box = SweDambreak::parameter_box();
        dim = 2;
        default_domain = "simplex2d";
    } else if (model_kind == "analytic_toy") {
        ToySpec spec = toy_spec(cfg.get("model", "function", "runge1d"));
        default_box = spec.box;
        dim = spec.dim;
        if (cfg.has("domain", "lo") || cfg.has("domain", "hi")) {
            default_box = box_from_lists(cfg.get_list("domain", "lo"),
                                         cfg.get_list("domain", "hi"));
            if (default_box.dim() != dim)
                throw std::runtime_error("config: [domain] lo/hi dimension mismatch");
        }
        setup.model = std::make_unique<AnalyticToy>(default_box, spec.fn);
    } else {
        throw std::runtime_error("config: [model] kind: unknown model '" + model_kind + "'");
    }

    const std::string domain_kind = cfg.get("domain", "kind", default_domain);
    if (domain_kind == "hypercube") {
        BoundingBox box = default_box;
        if (model_kind != "analytic_toy" && (cfg.has("domain", "lo") || cfg.has("domain", "hi")))
            box = box_from_lists(cfg.get_list("domain", "lo"), cfg.get_list("domain", "hi"));
        setup.domain = std::make_unique<Domain>(Domain::hypercube(box));
    } else if (domain_kind == "triangle") {
        setup.domain = std::make_unique<Domain>(Domain::triangle());
    } else if (domain_kind == "disc") {
        setup.domain = std::make_unique<Domain>(Domain::disc());
    } else if (domain_kind == "holes") {
        setup.domain = std::make_unique<Domain>(Domain::holes());
    } else if (domain_kind == "simplex2d") {
        setup.domain = std::make_unique<Domain>(Domain::simplex2d());
    } else {
        throw std::runtime_error("config: [domain] kind: unknown domain '" + domain_kind +
                                 "'");
    }
    if (model_kind == "swe_dambreak" && domain_kind != "simplex2d")
        throw std::runtime_error(
            "config: [domain] kind: swe_dambreak parameters live on the simplex2d chart");
    if (setup.domain->dim() != dim)
        throw std::runtime_error("config: [domain] kind: dimension does not match the model");

    const std::string pdf_kind = cfg.get("pdf", "kind", "");
    if (pdf_kind == "uniform") {
        setup.pdf = std::make_unique<Pdf>(Pdf::uniform(*setup.domain));
    } else if (pdf_kind == "beta_product") {
        setup.pdf = std::make_unique<Pdf>(Pdf::beta_product(setup.domain->box(),
                                                            cfg.get_list("pdf", "alpha"),
                                                            cfg.get_list("pdf", "beta")));
    } else if (pdf_kind == "dirichlet") {
        const auto alpha = cfg.get_list("pdf", "alpha");
        if (alpha.size() != 3)
            throw std::runtime_error("config: [pdf] alpha: dirichlet needs three parameters");
        if (setup.domain->kind() != DomainKind::simplex2d)
            throw std::runtime_error("config: [pdf] kind: dirichlet requires a simplex2d domain");
        setup.pdf = std::make_unique<Pdf>(Pdf::dirichlet({alpha[0], alpha[1], alpha[2]}));
    } else if (!pdf_kind.empty()) {
        throw std::runtime_error("config: [pdf] kind: unknown pdf '" + pdf_kind + "'");
    }

    RunConfig& run = setup.run;
    run.model = setup.model.get();
    run.domain = setup.domain.get();
    run.pdf = setup.pdf.get();
    run.measure = measure_from_string(cfg.get("measure", "kind", "R"));
    if (cfg.has("run", "epsilon")) {
        run.epsilon = cfg.get_double("run", "epsilon", 0.0);
        if (!(run.epsilon > 0.0))
            throw std::runtime_error(
                "config: [run] epsilon: the stopping threshold must be positive");
    }
    run.max_nodes = static_cast<int>(cfg.get_long("run", "max_nodes", 60));
    run.seed = static_cast<std::uint64_t>(cfg.get_long("run", "seed", 1));
    run.dup_tol_rel = cfg.get_double("run", "dup_tol_rel", 1e-8);

    run.swarm.n_particles = static_cast<int>(cfg.get_long("swarm", "particles", 0));
    run.swarm.max_iters = static_cast<int>(cfg.get_long("swarm", "max_iters", 0));
    run.swarm.stall_iters = static_cast<int>(cfg.get_long("swarm", "stall_iters", 0));
    run.swarm.inertia = cfg.get_double("swarm", "inertia", 0.729);
    run.swarm.cognitive = cfg.get_double("swarm", "cognitive", 1.49445);
    run.swarm.social = cfg.get_double("swarm", "social", 1.49445);
    run.swarm.seed = static_cast<std::uint64_t>(cfg.get_long("swarm", "seed", 7));

    run.errors.enabled = cfg.get_bool("errors", "track", false);
    run.errors.n_mc = static_cast<int>(cfg.get_long("errors", "n_mc", 2000));
    run.errors.mc_seed = static_cast<std::uint64_t>(cfg.get_long("errors", "seed", 9001));
    run.errors.moments = cfg.get_bool("errors", "moments", false);
    run.errors.quad_points_per_axis =
        static_cast<int>(cfg.get_long("errors", "quad_nodes", 100));

    if (run.measure == MeasureKind::R_rho && !setup.pdf)
        throw std::runtime_error("config: [pdf] kind: R_rho requires a pdf");
    return setup;
}

Config normalize(const Config& cfg) {
    Config out = cfg;
    RunSetup setup = build_setup(cfg);  // validates; defaults below mirror it
    auto put_default = [&out](const std::string& s, const std::string& k,
                              const std::string& v) {
        if (!out.has(s, k)) out.set(s, k, v);
    };
    put_default("measure", "kind", to_string(setup.run.measure));
    put_default("run", "max_nodes", std::to_string(setup.run.max_nodes));
    put_default("run", "seed", std::to_string(setup.run.seed));
    put_default("swarm", "seed", std::to_string(setup.run.swarm.seed));
    put_default("errors", "track", setup.run.errors.enabled ? "true" : "false");
    return out;
}

}  // namespace nippas::cli
