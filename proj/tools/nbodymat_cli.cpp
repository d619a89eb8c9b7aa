#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nbodymat/nbodymat.hpp"

namespace {

using namespace nbodymat;

enum Exit { ok = 0, negative = 1, parse_error = 2, dimension_error = 3, cap_exceeded = 4 };

struct RunConfig {
    std::string mode = "numeric";
    double tol = kDefaultPsdTol;
    std::string out;
    bool long_running = false;

    // inputs
    std::string kind;
    std::string r_list;
    std::string r2_list;
    std::string alpha_list;
    std::string in_path;
    std::string s_path;
    std::string t_path;
    int k = 0;  // 1-based base point, 0 = last

    // symbolic and sampled
    int n = 0;
    bool equal_masses = false;
    std::string factor_kind = "nbody";
    std::string quotient_out;
    std::string suite;
    std::uint64_t seed = 1;
    int samples = 100;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw ParseError("cannot write " + cfg.out);
    f << text;
}

void emit(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

template <typename T>
T parse_scalar(const std::string& s, const std::string& where) {
    Rational q;
    try {
        q = parse_rational(s);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    if constexpr (std::is_same_v<T, Rational>) return q;
    else return q.get_d();
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& flag) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    int idx = 0;
    while (std::getline(ss, item, ','))
        out.push_back(parse_scalar<T>(item, flag + " item " + std::to_string(++idx)));
    return out;
}

int n_from_pair_count(std::size_t m, const std::string& flag) {
    for (int n = 2; static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 <= m; ++n)
        if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 == m) return n;
    throw DimensionError(flag + ": " + std::to_string(m) + " values is not n(n-1)/2 for any n");
}

template <typename T>
DistanceVector<T> load_distances(const RunConfig& cfg) {
    if (!cfg.r_list.empty()) {
        auto v = parse_list<T>(cfg.r_list, "--r");
        const int n = n_from_pair_count(v.size(), "--r");
        try {
            return DistanceVector<T>::from_distances(n, v);
        } catch (const DomainError& e) {
            throw ParseError(std::string("--r: ") + e.what());
        }
    }
    if (!cfg.r2_list.empty()) {
        auto v = parse_list<T>(cfg.r2_list, "--r2");
        const int n = n_from_pair_count(v.size(), "--r2");
        try {
            return DistanceVector<T>::from_squared(n, std::move(v));
        } catch (const DomainError& e) {
            throw ParseError(std::string("--r2: ") + e.what());
        }
    }
    if (!cfg.in_path.empty()) {
        const Json j = parse_json_text(read_file(cfg.in_path), cfg.in_path);
        if (j.is_object() && j.contains("points")) return distances(config_from_json<T>(j, cfg.in_path));
        return distances_from_json<T>(j, cfg.in_path);
    }
    throw ParseError("no distances given (use --r, --r2 or --in)");
}

template <typename T>
EntryTable<T> load_table(const std::string& path, const char* flag) {
    if (path.empty()) throw ParseError(std::string("missing ") + flag);
    return table_from_json<T>(parse_json_text(read_file(path), path), path);
}

int base_index(const RunConfig& cfg, int n) {
    if (cfg.k == 0) return n - 1;
    if (cfg.k < 1 || cfg.k > n) throw DimensionError("--k must lie in 1.." + std::to_string(n));
    return cfg.k - 1;
}

template <typename T>
Matrix<T> build_matrix(const RunConfig& cfg) {
    if (cfg.kind == "w") return w_matrix(load_table<T>(cfg.s_path, "--s"), load_table<T>(cfg.t_path, "--t"));
    if (cfg.kind == "bordered") return bordered(load_table<T>(cfg.s_path, "--s"));
    const auto r = load_distances<T>(cfg);
    if (cfg.kind == "edm") return edm(r);
    if (cfg.kind == "cm") return cayley_menger(r);
    if (cfg.kind == "redm") return reduced_edm(r, base_index(cfg, r.n()));
    if (cfg.kind == "nbody") {
        if (cfg.alpha_list.empty()) throw ParseError("nbody needs --alpha");
        return nbody_matrix(MassParams<T>(parse_list<T>(cfg.alpha_list, "--alpha")), r);
    }
    throw ParseError("unknown matrix kind \"" + cfg.kind + "\"");
}

std::string scalar_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
std::string scalar_text(const Rational& q) { return q.get_str(); }

template <typename T>
int run_numeric(const RunConfig& cfg, const std::string& cmd) {
    if (cmd == "build") {
        emit(cfg, to_json(build_matrix<T>(cfg)));
        return ok;
    }
    if (cmd == "det") {
        emit(cfg, scalar_text(determinant(build_matrix<T>(cfg))) + "\n");
        return ok;
    }
    if (cmd == "check") {
        const auto r = load_distances<T>(cfg);
        const auto rep = cone_membership(r, cfg.tol, base_index(cfg, r.n()));
        emit(cfg, to_json(rep));
        return rep.region == ConeRegion::outside ? negative : ok;
    }
    if (cmd == "embed") {
        emit(cfg, to_json(embed(load_distances<T>(cfg), cfg.tol)));
        return ok;
    }
    throw ParseError("unknown command " + cmd);
}

int run_factor(const RunConfig& cfg) {
    SymbolicLimits lim = SymbolicLimits::from_env();
    lim.long_running = cfg.long_running;
    FactorizationCertificate cert;
    if (cfg.factor_kind == "nbody") cert = factor_nbody(cfg.n, lim, cfg.equal_masses);
    else if (cfg.factor_kind == "w") cert = factor_w(cfg.n, lim);
    else throw ParseError("--kind must be nbody or w");
    emit(cfg, to_json(cert));
    if (!cfg.quotient_out.empty()) {
        std::ofstream f(cfg.quotient_out);
        if (!f) throw ParseError("cannot write " + cfg.quotient_out);
        f << cert.quotient.to_string() << "\n";
    }
    return cert.verified ? ok : negative;
}

int run_verify(const RunConfig& cfg) {
    SuiteOptions opt;
    opt.n = cfg.n;
    opt.seed = cfg.seed;
    opt.samples = cfg.samples;
    opt.tol = cfg.tol;
    const auto rep = run_suite(cfg.suite, opt);
    std::ostringstream os;
    os << rep.name << ": " << (rep.passed() ? "pass" : "FAIL") << " (" << rep.samples << " samples, " << rep.failures
       << " failures)";
    if (!rep.first_failure.empty()) os << " first failure: " << rep.first_failure;
    os << "\n";
    emit(cfg, os.str());
    return rep.passed() ? ok : negative;
}

void add_input_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--r", cfg.r_list, "distances r_ij in pair order 1,2 1,3 ... (comma separated)");
    sub->add_option("--r2", cfg.r2_list, "squared distances in pair order");
    sub->add_option("--in", cfg.in_path, "JSON point configuration or distance vector");
    sub->add_option("--k", cfg.k, "base point (1-based, default n)");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Distance matrices, n-body determinants and their factorizations"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--mode", cfg.mode, "numeric or exact")->check(CLI::IsMember({"numeric", "exact"}));
    app.add_option("--tol", cfg.tol, "relative eigenvalue tolerance")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "write output here instead of stdout");
    app.add_flag("--long-running", cfg.long_running, "allow long symbolic computations");

    auto* build = app.add_subcommand("build", "build a matrix as JSON");
    build->add_option("kind", cfg.kind, "edm | cm | redm | nbody | w | bordered")->required();
    add_input_flags(build, cfg);
    build->add_option("--alpha", cfg.alpha_list, "inverse masses (comma separated)");
    build->add_option("--s", cfg.s_path, "JSON entry table S");
    build->add_option("--t", cfg.t_path, "JSON entry table T");

    auto* det = app.add_subcommand("det", "determinant of a matrix");
    det->add_option("kind", cfg.kind, "edm | cm | redm | nbody | w | bordered")->required();
    add_input_flags(det, cfg);
    det->add_option("--alpha", cfg.alpha_list, "inverse masses (comma separated)");
    det->add_option("--s", cfg.s_path, "JSON entry table S");
    det->add_option("--t", cfg.t_path, "JSON entry table T");

    auto* check = app.add_subcommand("check", "locate distances relative to the distance cone");
    add_input_flags(check, cfg);

    auto* emb = app.add_subcommand("embed", "reconstruct points from distances");
    add_input_flags(emb, cfg);

    auto* factor = app.add_subcommand("factor", "symbolic factorization certificate");
    factor->add_option("--n", cfg.n, "number of points")->required();
    factor->add_option("--kind", cfg.factor_kind, "nbody or w");
    factor->add_flag("--equal-masses", cfg.equal_masses, "single mass symbol");
    factor->add_option("--quotient-out", cfg.quotient_out, "write the quotient polynomial here");

    auto* verify = app.add_subcommand("verify", "sampled identity suite");
    verify->add_option("suite", cfg.suite, "signs | cmdk | syh | cayley | forms | menger | dictionary | kernel")
        ->required();
    verify->add_option("--n", cfg.n, "number of points (default: cycle)");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--samples", cfg.samples, "sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_error;
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "factor") return run_factor(cfg);
        if (cmd == "verify") return run_verify(cfg);
        if (cfg.mode == "exact") return run_numeric<Rational>(cfg, cmd);
        return run_numeric<double>(cfg, cmd);
    } catch (const NotEmbeddable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return negative;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return negative;
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cap_exceeded;
    } catch (const DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return dimension_error;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_error;
    }
}
