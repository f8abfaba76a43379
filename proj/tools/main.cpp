// thetamin command-line interface; uses only the C API.

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetamin/thetamin.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kComputation = 3, kClaimViolated = 4 };

constexpr double kHexagonalTol = 1e-5;
constexpr double kDivergenceTol = 1e-9;

// Carries a failing status out of a command.
struct Failure {
    thetamin_status status;
    std::string message;
};

void check(thetamin_status s) {
    if (s != THETAMIN_OK) throw Failure{s, thetamin_last_error()};
}

[[noreturn]] void invalid(const std::string& message) { throw Failure{THETAMIN_INVALID_ARGUMENT, message}; }

json take_json(char* text) {
    json j = json::parse(text);
    thetamin_string_free(text);
    return j;
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using ScanPtr = std::unique_ptr<thetamin_scan_report, Deleter<thetamin_scan_report, thetamin_scan_report_free>>;
using PhasePtr = std::unique_ptr<thetamin_phase_table, Deleter<thetamin_phase_table, thetamin_phase_table_free>>;
using BoundPtr = std::unique_ptr<thetamin_bound_report, Deleter<thetamin_bound_report, thetamin_bound_report_free>>;
using PotentialPtr = std::unique_ptr<thetamin_potential, Deleter<thetamin_potential, thetamin_potential_free>>;

std::string shortest(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

struct Common {
    std::string format = "json";
    int threads = 0;
};

struct GridFlags {
    thetamin_scan_options o{};
    GridFlags() { thetamin_scan_options_default(&o); }
    void add(CLI::App* c) {
        c->add_option("--nx", o.nx, "grid points in x")->capture_default_str();
        c->add_option("--ny", o.ny, "grid points in y")->capture_default_str();
        c->add_option("--ymax", o.y_max, "upper grid height")->capture_default_str();
        c->add_option("--scan-tol", o.tol, "relative evaluation tolerance")->capture_default_str();
    }
    json echo() const { return {{"nx", o.nx}, {"ny", o.ny}, {"ymax", o.y_max}, {"scan_tol", o.tol}}; }
};

const char* kCsvHeader = "alpha,beta,k,exists,class,best_x,best_y,best_value,gap";

std::string csv_row(const thetamin_scan_summary& s) {
    std::ostringstream out;
    out << shortest(s.alpha) << ',' << shortest(s.beta) << ',' << s.k << ',' << (s.exists ? "true" : "false") << ','
        << (s.hexagonal ? "hexagonal" : "other") << ',' << shortest(s.best_x) << ',' << shortest(s.best_y) << ','
        << shortest(s.best_value) << ',' << shortest(s.hexagonal_gap);
    return out.str();
}

json envelope(const std::string& command, json parameters, json results, json tolerances) {
    return {{"command", command},
            {"parameters", std::move(parameters)},
            {"results", std::move(results)},
            {"tolerances", std::move(tolerances)},
            {"version", thetamin_version()}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void emit_scan_csv(const std::vector<thetamin_scan_summary>& rows) {
    std::cout << kCsvHeader << '\n';
    for (const auto& r : rows) std::cout << csv_row(r) << '\n';
}

void require_json(const Common& c, const std::string& command) {
    if (c.format != "json") invalid(command + ": only --format json is available");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice theta functions, the functional θ(α) - βθ(2α) and its minimizers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(thetamin_version()));
    Common common;
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", common.threads, "worker threads (0: hardware parallelism)")->capture_default_str();
    app.fallthrough();

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate θ, W or a derivative at one point");
    std::string what = "w";
    thetamin_functional fn;
    thetamin_functional_default(&fn);
    double x = 0.0, y = 1.0, tol = 1e-13;
    eval->add_option("--what", what, "quantity")
        ->check(CLI::IsMember({"theta", "w", "dx", "dy", "radial"}))
        ->capture_default_str();
    eval->add_option("--alpha", fn.alpha, "Gaussian width α")->capture_default_str();
    eval->add_option("--beta", fn.beta, "weight β")->capture_default_str();
    eval->add_option("--ratio", fn.ratio, "width ratio of the second term")->capture_default_str();
    eval->add_option("--k", fn.k, "power of the ratio")->capture_default_str();
    eval->add_option("--x", x, "real part")->required();
    eval->add_option("--y", y, "imaginary part")->required();
    eval->add_option("--tol", tol, "absolute truncation tolerance")->capture_default_str();

    // reduce
    auto* red = app.add_subcommand("reduce", "map a point into the fundamental domain");
    double rx = 0.0, ry = 1.0;
    red->add_option("--x", rx, "real part")->required();
    red->add_option("--y", ry, "imaginary part")->required();

    // scan
    auto* scan = app.add_subcommand("scan", "grid scan and refinement over the fundamental domain");
    double s_alpha = 1.0, s_beta = 0.0;
    std::optional<int> s_k;
    GridFlags s_grid;
    scan->add_option("--alpha", s_alpha, "Gaussian width α")->required();
    scan->add_option("--beta", s_beta, "weight β")->required();
    scan->add_option("--k", s_k, "use θ(α) - βθ(2^k α) and check the telescoping identity");
    s_grid.add(scan);

    // phase
    auto* phase = app.add_subcommand("phase", "phase table over α × β");
    std::vector<double> alphas, betas;
    int p_k = 1;
    GridFlags p_grid;
    phase->add_option("--alphas", alphas, "comma-separated α values")->delimiter(',')->required();
    phase->add_option("--betas", betas, "comma-separated β values")->delimiter(',')->required();
    phase->add_option("--k", p_k, "power of 2 in the second width")->capture_default_str();
    p_grid.add(phase);

    // verify
    auto* verify = app.add_subcommand("verify", "sweep a bound claim over a grid (exit 4 if violated)");
    std::string claim;
    std::vector<double> grid_values;
    std::optional<double> v_beta;
    std::optional<int> v_nx;
    std::vector<std::string> claim_names{"all"};
    for (size_t i = 0; i < thetamin_claim_count(); ++i) claim_names.emplace_back(thetamin_claim_name(i));
    verify->add_option("--claim", claim, "claim name or 'all'")->check(CLI::IsMember(claim_names))->required();
    verify->add_option("--grid", grid_values, "alpha_min,alpha_max,second_min,second_max,n_alpha,n_second")
        ->delimiter(',')
        ->expected(6);
    verify->add_option("--beta", v_beta, "β used by the claim");
    verify->add_option("--n-x", v_nx, "x samples for interior claims");

    // energy
    auto* energy = app.add_subcommand("energy", "lattice energy of a pair potential");
    std::string spec_file;
    bool e_scan = false;
    double ex = 0.5, ey = 0.8660254037844386, etol = 1e-12;
    GridFlags e_grid;
    energy->add_option("--spec-file", spec_file, "JSON potential spec")->required()->check(CLI::ExistingFile);
    energy->add_flag("--scan", e_scan, "minimize over the fundamental domain");
    energy->add_option("--x", ex, "real part")->capture_default_str();
    energy->add_option("--y", ey, "imaginary part")->capture_default_str();
    energy->add_option("--tol", etol, "Yukawa quadrature tolerance")->capture_default_str();
    e_grid.add(energy);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*eval) {
            require_json(common, "eval");
            const thetamin_quantity q = what == "theta" ? THETAMIN_THETA
                                        : what == "w"   ? THETAMIN_W
                                        : what == "dx"  ? THETAMIN_W_DX
                                        : what == "dy"  ? THETAMIN_W_DY
                                                        : THETAMIN_RADIAL;
            thetamin_certified c;
            check(thetamin_eval(q, &fn, x, y, tol, &c));
            emit(envelope("eval",
                          {{"what", what},
                           {"alpha", fn.alpha},
                           {"beta", fn.beta},
                           {"ratio", fn.ratio},
                           {"k", fn.k},
                           {"x", x},
                           {"y", y},
                           {"tol", tol}},
                          {{"value", c.value}, {"terms", c.terms}},
                          {{"requested", tol}, {"tail_bound", c.tail_bound}}));
        } else if (*red) {
            require_json(common, "reduce");
            thetamin_reduction r;
            char* word = nullptr;
            check(thetamin_reduce(rx, ry, &r, &word));
            const std::string w = word;
            thetamin_string_free(word);
            emit(envelope("reduce", {{"x", rx}, {"y", ry}},
                          {{"x", r.x},
                           {"y", r.y},
                           {"element", {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"reflected", bool(r.reflected)}}},
                           {"word", w},
                           {"iterations", r.iterations}},
                          {{"rounding", "exact group element; point in double precision"}}));
        } else if (*scan) {
            s_grid.o.threads = common.threads;
            thetamin_scan_report* raw = nullptr;
            if (s_k) {
                check(thetamin_iterate_2k(s_alpha, s_beta, *s_k, &s_grid.o, &raw));
            } else {
                thetamin_functional f;
                thetamin_functional_default(&f);
                f.alpha = s_alpha;
                f.beta = s_beta;
                check(thetamin_scan(&f, &s_grid.o, &raw));
            }
            ScanPtr report(raw);
            thetamin_scan_summary s;
            check(thetamin_scan_report_summary(report.get(), &s));
            if (common.format == "csv") {
                emit_scan_csv({s});
            } else {
                char* text = nullptr;
                check(thetamin_scan_report_json(report.get(), &text));
                json params = {{"alpha", s_alpha}, {"beta", s_beta}};
                if (s_k) params["k"] = *s_k;
                params.update(s_grid.echo());
                json tols = {{"evaluation_rel_tol", s_grid.o.tol},
                             {"step_min", s_grid.o.step_min},
                             {"hexagonal_tol", kHexagonalTol},
                             {"divergence_tol", kDivergenceTol}};
                emit(envelope("scan", params, take_json(text), tols));
            }
        } else if (*phase) {
            p_grid.o.threads = common.threads;
            thetamin_phase_table* raw = nullptr;
            check(thetamin_phase(alphas.data(), alphas.size(), betas.data(), betas.size(), p_k, &p_grid.o, &raw));
            PhasePtr table(raw);
            if (common.format == "csv") {
                std::vector<thetamin_scan_summary> rows(thetamin_phase_table_size(table.get()));
                for (size_t i = 0; i < rows.size(); ++i) check(thetamin_phase_table_cell(table.get(), i, &rows[i]));
                emit_scan_csv(rows);
            } else {
                char* text = nullptr;
                check(thetamin_phase_table_json(table.get(), &text));
                json params = {{"alphas", alphas}, {"betas", betas}, {"k", p_k}};
                params.update(p_grid.echo());
                emit(envelope("phase", params, {{"cells", take_json(text)}},
                              {{"evaluation_rel_tol", p_grid.o.tol},
                               {"step_min", p_grid.o.step_min},
                               {"hexagonal_tol", kHexagonalTol},
                               {"divergence_tol", kDivergenceTol}}));
            }
        } else if (*verify) {
            require_json(common, "verify");
            std::vector<std::string> claims;
            if (claim == "all")
                claims.assign(claim_names.begin() + 1, claim_names.end());
            else
                claims.push_back(claim);
            json reports = json::array(), allowances = json::object();
            bool all_hold = true;
            for (const auto& c : claims) {
                thetamin_grid g;
                check(thetamin_default_grid(c.c_str(), &g));
                if (!grid_values.empty()) {
                    g.alpha_min = grid_values[0];
                    g.alpha_max = grid_values[1];
                    g.second_min = grid_values[2];
                    g.second_max = grid_values[3];
                    g.n_alpha = static_cast<int>(grid_values[4]);
                    g.n_second = static_cast<int>(grid_values[5]);
                    if (g.n_alpha != grid_values[4] || g.n_second != grid_values[5])
                        invalid("verify: grid sample counts must be integers");
                }
                if (v_beta) g.beta = *v_beta;
                if (v_nx) g.n_x = *v_nx;
                thetamin_bound_report* raw = nullptr;
                check(thetamin_verify(c.c_str(), &g, common.threads, &raw));
                BoundPtr report(raw);
                char* text = nullptr;
                check(thetamin_bound_report_json(report.get(), &text));
                json j = take_json(text);
                all_hold = all_hold && j.at("holds").get<bool>();
                if (j["details"].contains("rounding_allowance"))
                    allowances[c] = j["details"]["rounding_allowance"];
                reports.push_back(std::move(j));
            }
            json params = {{"claim", claim}};
            if (!grid_values.empty()) params["grid"] = grid_values;
            if (v_beta) params["beta"] = *v_beta;
            if (v_nx) params["n_x"] = *v_nx;
            json results = claims.size() == 1 ? reports[0] : json{{"claims", reports}, {"holds", all_hold}};
            emit(envelope("verify", params, results,
                          {{"evaluation", "series truncated at 1e-15 relative or below"},
                           {"rounding_allowance", allowances}}));
            return all_hold ? kOk : kClaimViolated;
        } else if (*energy) {
            std::ifstream in(spec_file);
            std::stringstream buf;
            buf << in.rdbuf();
            thetamin_potential* raw = nullptr;
            check(thetamin_potential_from_json(buf.str().c_str(), &raw));
            PotentialPtr pot(raw);
            char* spec_text = nullptr;
            check(thetamin_potential_json(pot.get(), &spec_text));
            const json spec = take_json(spec_text);
            if (e_scan) {
                e_grid.o.threads = common.threads;
                thetamin_scan_report* sraw = nullptr;
                check(thetamin_minimize_energy(pot.get(), &e_grid.o, &sraw));
                ScanPtr report(sraw);
                if (common.format == "csv") {
                    thetamin_scan_summary s;
                    check(thetamin_scan_report_summary(report.get(), &s));
                    emit_scan_csv({s});
                } else {
                    char* text = nullptr;
                    check(thetamin_scan_report_json(report.get(), &text));
                    json params = {{"spec_file", spec_file}, {"spec", spec}, {"scan", true}};
                    params.update(e_grid.echo());
                    emit(envelope("energy", params, take_json(text),
                                  {{"yukawa_quadrature_tol", 1e-10},
                                   {"step_min", e_grid.o.step_min},
                                   {"hexagonal_tol", kHexagonalTol},
                                   {"divergence_tol", kDivergenceTol}}));
                }
            } else {
                require_json(common, "energy");
                double value = 0.0;
                check(thetamin_energy(pot.get(), ex, ey, etol, &value));
                emit(envelope("energy",
                              {{"spec_file", spec_file}, {"spec", spec}, {"scan", false}, {"x", ex}, {"y", ey},
                               {"tol", etol}},
                              {{"value", value}}, {{"requested", etol}}));
            }
        }
    } catch (const Failure& f) {
        std::cerr << json{{"error", {{"status", thetamin_status_name(f.status)}, {"message", f.message}}}}.dump()
                  << '\n';
        const bool bad_input = f.status == THETAMIN_INVALID_ARGUMENT || f.status == THETAMIN_NOT_ON_GAMMA;
        return bad_input ? kInvalid : kComputation;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", {{"status", "Internal"}, {"message", e.what()}}}}.dump() << '\n';
        return kComputation;
    }
    return kOk;
}
