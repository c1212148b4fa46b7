// command-line surface over the shared C API: per-state certificates,
// verification suites, and the magic-family table.
// exit codes: 0 = all assertions passed, 1 = an assertion failed,
// 2 = usage, input, or I/O problem.

#include <flokit.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(flokit_status st) {
    if (st != FLOKIT_OK)
        throw usage_error(std::string(flokit_status_name(st)) + ": " + flokit_last_error());
}

using state_ptr = std::unique_ptr<flokit_state, decltype(&flokit_state_free)>;
using circuit_ptr = std::unique_ptr<flokit_circuit, decltype(&flokit_circuit_free)>;

state_ptr own(flokit_state* s) { return {s, &flokit_state_free}; }
circuit_ptr own(flokit_circuit* c) { return {c, &flokit_circuit_free}; }

const char* parity_word(int code) {
    return code == 0 ? "even" : code == 1 ? "odd" : "mixed";
}

json amplitudes_json(const flokit_state* s) {
    int n = flokit_state_qubits(s);
    std::vector<double> buf(std::size_t{2} << n);
    check(flokit_state_amplitudes(s, buf.data()));
    json rows = json::array();
    for (std::size_t b = 0; b < buf.size() / 2; ++b)
        rows.push_back({buf[2 * b], buf[2 * b + 1]});
    return rows;
}

json circuit_json(const flokit_circuit* c) {
    int n = flokit_circuit_qubits(c);
    uint64_t bits = flokit_circuit_initial(c);
    std::string initial;
    for (int q = 0; q < n; ++q) initial += (bits >> (n - 1 - q)) & 1 ? '1' : '0';
    json rot = json::array();
    for (size_t k = 0; k < flokit_circuit_size(c); ++k) {
        int i = 0, j = 0;
        double theta = 0;
        check(flokit_circuit_rotation(c, k, &i, &j, &theta));
        rot.push_back({i, j, theta});
    }
    return {{"n", n}, {"initial", initial}, {"rotations", rot}};
}

state_ptr state_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw usage_error("cannot open state file: " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw usage_error("malformed state JSON in " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("amplitudes"))
        throw usage_error("state JSON needs fields \"n\" and \"amplitudes\"");
    int n = j.at("n").get<int>();
    if (n < 0 || n > 24) throw usage_error("state JSON: n out of range");
    const json& rows = j.at("amplitudes");
    if (!rows.is_array() || rows.size() != (std::size_t{1} << n))
        throw usage_error("state JSON: amplitudes must hold exactly 2^n [re, im] pairs");
    std::vector<double> buf;
    double norm2 = 0;
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != 2)
            throw usage_error("state JSON: each amplitude must be a [re, im] pair");
        double re = row[0].get<double>(), im = row[1].get<double>();
        buf.push_back(re);
        buf.push_back(im);
        norm2 += re * re + im * im;
    }
    flokit_state* raw = nullptr;
    flokit_status st = flokit_state_from_amplitudes(n, buf.data(), &raw);
    if (st == FLOKIT_ERR_NOT_NORMALIZED)
        throw usage_error("state in " + path + " is not normalized: measured norm " +
                          std::to_string(std::sqrt(norm2)));
    check(st);
    return own(raw);
}

// ------------------------------------------------------------------ analyze

int cmd_analyze(const std::string& state_path, bool use_a8, bool use_mphi, double phi,
                int restarts, uint64_t seed, double tol, const std::string& out_path) {
    state_ptr psi{nullptr, &flokit_state_free};
    std::string state_ref;
    if (!state_path.empty()) {
        psi = state_from_file(state_path);
        state_ref = state_path;
    } else if (use_a8) {
        flokit_state* raw = nullptr;
        check(flokit_state_a8(&raw));
        psi = own(raw);
        state_ref = "a8";
    } else if (use_mphi) {
        flokit_state* raw = nullptr;
        check(flokit_state_mphi(phi, &raw));
        psi = own(raw);
        state_ref = "mphi(" + std::to_string(phi) + ")";
    } else {
        throw usage_error("analyze needs one of --state, --mphi, --a8");
    }

    int n = flokit_state_qubits(psi.get());
    int parity = flokit_state_parity(psi.get());
    bool even4 = n == 4 && parity == 0;

    json cert;
    cert["state_ref"] = state_ref;
    cert["n"] = n;
    cert["parity"] = parity_word(parity);

    if (even4) {
        flokit_magic_info info{};
        check(flokit_magic_analyze(psi.get(), &info));
        json magic;
        magic["a"] = info.a;
        magic["gauge"] = info.gauge;
        magic["r"] = std::vector<double>(info.r, info.r + 8);
        magic["s"] = std::vector<double>(info.s, info.s + 8);
        magic["orbit_invariant"] = info.orbit_invariant;
        magic["s_degenerate"] = info.s_degenerate != 0;
        magic["fidelity"] = info.fidelity;
        magic["extent"] = info.extent;
        cert["magic"] = magic;
    }

    {
        flokit_fidelity_opts opts{};
        opts.restarts = restarts;
        opts.tol = tol;
        opts.seed = seed;
        opts.sector = 2;
        flokit_fidelity_outcome fid{};
        flokit_circuit* wit_raw = nullptr;
        check(flokit_optimize_fidelity(psi.get(), &opts, &wit_raw, &fid));
        circuit_ptr wit = own(wit_raw);
        json f;
        if (even4) {
            flokit_magic_info info{};
            check(flokit_magic_analyze(psi.get(), &info));
            f["closed"] = info.fidelity;
        }
        f["optimized"] = fid.value;
        f["provenance"] = even4 ? "closed_form" : "optimizer";
        f["converged"] = fid.converged != 0;
        f["sector"] = parity_word(fid.sector);
        f["witness"] = circuit_json(wit.get());
        cert["fidelity"] = f;
    }

    if (even4) {
        double cre[2], cim[2];
        flokit_state* comps[2] = {nullptr, nullptr};
        int terms = 0;
        double l1sq = 0;
        check(flokit_decompose_even4(psi.get(), cre, cim, comps, &terms, &l1sq));
        state_ptr c0 = own(comps[0]), c1 = own(comps[1]);

        flokit_state* wraw = nullptr;
        double wf = 0, lower = 0;
        int prov = 0;
        check(flokit_witness_even4(psi.get(), &wraw, &wf, &prov, &lower));
        state_ptr wit = own(wraw);

        json dec = json::array();
        for (int k = 0; k < terms; ++k)
            dec.push_back({cre[k], cim[k], amplitudes_json(k == 0 ? c0.get() : c1.get())});
        json x;
        x["lower"] = lower;
        x["upper"] = l1sq;
        x["gap"] = l1sq - lower;
        x["witness"] = amplitudes_json(wit.get());
        x["witness_fidelity"] = wf;
        x["provenance"] = prov == 0 ? "closed_form" : prov == 1 ? "optimizer" : "product_rule";
        x["decomposition"] = dec;
        cert["extent"] = x;
    } else if (n <= 4 && parity != 2) {
        double xi = 0;
        check(flokit_small_n_extent(psi.get(), &xi));
        cert["extent"] = {{"lower", xi}, {"upper", xi}, {"gap", 0.0}, {"provenance", "closed_form"}};
    }

    std::string text = cert.dump(2);
    std::printf("%s\n", text.c_str());
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw usage_error("cannot open output file: " + out_path);
        f << text << "\n";
    }
    return exit_pass;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, int trials, uint64_t seed, int n, int factors,
               double tol, int restarts, const std::string& out_prefix) {
    flokit_suite_opts opts{};
    opts.trials = trials;
    opts.seed = seed;
    opts.n = n;
    opts.factors = factors;
    opts.tol = tol;
    opts.restarts = restarts;
    opts.out_prefix = out_prefix.empty() ? nullptr : out_prefix.c_str();
    flokit_suite_outcome out{};
    flokit_status st = flokit_run_suite(suite.c_str(), &opts, &out);
    if (st == FLOKIT_ERR_UNKNOWN_SUITE) {
        std::string names;
        for (int k = 0; k < flokit_suite_count(); ++k)
            names += std::string(k ? ", " : "") + flokit_suite_name(k);
        throw usage_error("unknown suite \"" + suite + "\" (available: " + names + ")");
    }
    check(st);

    std::printf("suite %s: trials=%d seed=%llu\n", suite.c_str(), out.trials,
                static_cast<unsigned long long>(seed));
    for (int k = 0; k < out.check_count; ++k)
        std::printf("  %-34s max_error=%.3e tolerance=%.0e failures=%d\n", out.checks[k].name,
                    out.checks[k].max_error, out.checks[k].tolerance, out.checks[k].failures);
    std::printf("%s: %s (failures=%d, max_error=%.3e)\n", suite.c_str(),
                out.passed ? "PASS" : "FAIL", out.failures, out.max_error);
    return out.passed ? exit_pass : exit_fail;
}

// -------------------------------------------------------------------- table

int cmd_table(int grid, int restarts, uint64_t seed, const std::string& out_path) {
    flokit_table_outcome out{};
    check(flokit_table_mphi(out_path.empty() ? nullptr : out_path.c_str(), grid, restarts, seed,
                            0, &out));
    std::printf("table: grid=%d formula_error=%.3e optimizer_error=%.3e %s\n", out.grid,
                out.max_formula_error, out.max_optimizer_error, out.passed ? "PASS" : "FAIL");
    return out.passed ? exit_pass : exit_fail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fermionic linear optics: fidelity, extent, and orbit certificates"};
    app.require_subcommand(1);

    std::string state_path, out_path, out_prefix, suite;
    bool use_a8 = false;
    double phi = 0;
    bool have_phi = false;
    int restarts = 0, trials = -1, n = 0, factors = 0, grid = 64;
    double tol = -1;
    uint64_t seed = 1;

    CLI::App* analyze = app.add_subcommand("analyze", "orbit certificate for one state");
    analyze->add_option("--state", state_path, "state JSON file {\"n\":..., \"amplitudes\":[[re,im],...]}");
    CLI::Option* mphi_opt = analyze->add_option("--mphi", phi, "built-in magic-family state at this angle");
    analyze->add_flag("--a8", use_a8, "built-in maximally magic state");
    analyze->add_option("--restarts", restarts, "optimizer restarts (0 = default 32)");
    analyze->add_option("--seed", seed, "optimizer seed");
    analyze->add_option("--tol", tol, "optimizer sweep tolerance (<0 = default)");
    analyze->add_option("--out", out_path, "also write the certificate JSON here");

    CLI::App* verify = app.add_subcommand("verify", "run one verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--trials", trials, "trial count (<0 = suite default)");
    verify->add_option("--seed", seed, "base random seed");
    verify->add_option("--n", n, "qubit count (lemma1: 0 = sweep 1..4)");
    verify->add_option("--factors", factors, "product factors (theorem1: 0 = both 2 and 3)");
    verify->add_option("--tol", tol, "main tolerance (<0 = suite default)");
    verify->add_option("--restarts", restarts, "optimizer restarts (0 = default)");
    verify->add_option("--out", out_prefix, "write <prefix>.csv and <prefix>.json");

    CLI::App* table = app.add_subcommand("table", "magic-family extent/fidelity table");
    table->add_option("--grid", grid, "number of phi grid points (default 64)");
    table->add_option("--restarts", restarts, "optimizer restarts (0 = default)");
    table->add_option("--seed", seed, "optimizer seed");
    table->add_option("--out", out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    have_phi = mphi_opt->count() > 0;

    try {
        if (analyze->parsed()) {
            int sources = (!state_path.empty() ? 1 : 0) + (use_a8 ? 1 : 0) + (have_phi ? 1 : 0);
            if (sources != 1) throw usage_error("analyze needs exactly one of --state, --mphi, --a8");
            return cmd_analyze(state_path, use_a8, have_phi, phi, restarts, seed, tol, out_path);
        }
        if (verify->parsed())
            return cmd_verify(suite, trials, seed, n, factors, tol, restarts, out_prefix);
        return cmd_table(grid, restarts, seed, out_path);
    } catch (const usage_error& e) {
        std::fprintf(stderr, "flokit: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "flokit: internal error: %s\n", e.what());
        return exit_usage;
    }
}
