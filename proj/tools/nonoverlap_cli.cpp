// Command-line front end for the non-overlap toolkit.
//
// Subcommands: u-set, certify, search, family, corollary.  Output formats:
// json (default for everything except u-set), text (key = value lines;
// default for u-set, which prints the word-set file format), csv (certify
// emits one row per profile index j; u-set one row per word; other
// subcommands emit key,value,approx rows).
//
// Exit codes: 0 all checks pass, 1 a verification check failed, 2 usage or
// input error, 3 hypothesis violated (e.g. alpha outside (0,1)), 4 resource
// guard tripped.  NONOVERLAP_MAX_INDEX overrides the default 2^28 capacity
// guard (unsafe: large universes exhaust memory).

#include <CLI11.hpp>
#include <json.hpp>

#include <nonoverlap/nonoverlap.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace nonoverlap;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitResource = 4;

json ratio_json(const Ratio& x) {
    return {{"num", numerator(x).str()},
            {"den", denominator(x).str()},
            {"approx", to_double(x)}};
}

bool is_ratio_json(const json& j) {
    return j.is_object() && j.size() == 3 && j.contains("num") && j.contains("den") &&
           j.contains("approx");
}

std::string ratio_inline(const json& j) {
    std::ostringstream os;
    os << j["num"].get<std::string>() << "/" << j["den"].get<std::string>() << " ("
       << j["approx"].get<double>() << ")";
    return os.str();
}

void flatten_text(const json& j, const std::string& prefix, std::ostream& out) {
    if (is_ratio_json(j)) {
        out << prefix << " = " << ratio_inline(j) << "\n";
    } else if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_text(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void flatten_csv(const json& j, const std::string& prefix, std::ostream& out) {
    if (is_ratio_json(j)) {
        out << csv_quote(prefix) << ","
            << j["num"].get<std::string>() << "/" << j["den"].get<std::string>() << ","
            << j["approx"].get<double>() << "\n";
    } else if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_csv(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten_csv(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << csv_quote(prefix) << ","
            << csv_quote(j.is_string() ? j.get<std::string>() : j.dump()) << ",\n";
    }
}

void emit_generic(const json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else if (format == "text") {
        flatten_text(report, "", std::cout);
    } else {
        std::cout << "key,value,approx\n";
        flatten_csv(report, "", std::cout);
    }
}

std::string word_at(std::uint64_t x, unsigned q, unsigned n) {
    return format_word(decode_word(x, q, n));
}

json words_json(const WordSet& s) {
    json arr = json::array();
    s.for_each_member([&](std::uint64_t x) { arr.push_back(word_at(x, s.q(), s.n())); });
    return arr;
}

WordSet load_set(const std::string& path, std::optional<unsigned> q, std::optional<unsigned> n) {
    WordSet s = read_word_set_file(path);
    if ((q && *q != s.q()) || (n && *n != s.n()))
        throw std::invalid_argument("--q/--n disagree with the set file header (file has q=" +
                                    std::to_string(s.q()) + " n=" + std::to_string(s.n()) + ")");
    return s;
}

struct GlobalOpts {
    std::string format;  // empty = per-subcommand default
    std::uint64_t seed = 0;
    unsigned workers = 0;  // 0 = auto
    double inner_tol = 1e-9;
    double rho_width = 1e-12;

    std::string format_or(const char* dflt) const { return format.empty() ? dflt : format; }
    unsigned workers_or_auto() const { return workers ? workers : default_workers(); }
};

// ---------------------------------------------------------------- u-set

int run_u_set(const GlobalOpts& g, const std::string& set_file, std::optional<unsigned> q,
              std::optional<unsigned> n, const std::string& method) {
    const WordSet a = load_set(set_file, q, n);
    std::optional<WordSet> brute, incremental;
    if (method != "incremental") brute = non_overlap_bruteforce(a);
    if (method != "brute") incremental = non_overlap_incremental(a).u;
    const bool agree = !brute || !incremental || *brute == *incremental;
    const WordSet& u = brute ? *brute : *incremental;

    const std::string format = g.format_or("text");
    if (format == "text") {
        std::ostringstream head;
        head << "# U(A): " << u.count() << " of " << u.universe_size()
             << " words, mu = " << to_string(u.measure()) << "\n";
        if (method == "both") head << "# agree = " << (agree ? "true" : "false") << "\n";
        std::cout << head.str();
        write_word_set(std::cout, u);
    } else if (format == "csv") {
        std::cout << "index,word\n";
        u.for_each_member(
            [&](std::uint64_t x) { std::cout << x << "," << word_at(x, u.q(), u.n()) << "\n"; });
    } else {
        json rep{{"subcommand", "u-set"},
                 {"q", a.q()},
                 {"n", a.n()},
                 {"method", method},
                 {"input_count", a.count()},
                 {"alpha", ratio_json(a.measure())},
                 {"count", u.count()},
                 {"mu_u", ratio_json(u.measure())},
                 {"words", words_json(u)}};
        if (method == "both") rep["agree"] = agree;
        std::cout << rep.dump(2) << "\n";
    }
    return agree ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------------------- certify

json certificate_json(const TheoremCertificate& c) {
    json profile{{"alpha", json::array()},
                 {"beta", json::array()},
                 {"gamma", json::array()},
                 {"delta", json::array()}};
    for (unsigned j = 0; j <= c.n; ++j) {
        profile["alpha"].push_back(ratio_json(c.profile.alpha[j]));
        profile["beta"].push_back(ratio_json(c.profile.beta[j]));
        profile["gamma"].push_back(ratio_json(c.profile.gamma[j]));
        profile["delta"].push_back(ratio_json(c.profile.delta[j]));
    }
    json beta_slack = json::array(), gamma_slack = json::array();
    for (unsigned j = 1; j <= c.n; ++j) {
        beta_slack.push_back(ratio_json(c.beta_report.slack[j]));
        gamma_slack.push_back(ratio_json(c.gamma_report.slack[j]));
    }
    json lambda = json::array();
    for (unsigned j = 2; j <= c.n; ++j)
        for (unsigned r = 1; r < j; ++r)
            lambda.push_back({{"j", j}, {"r", r}, {"value", ratio_json(c.lambda.at(j, r))}});

    return {{"q", c.q},
            {"n", c.n},
            {"alpha", ratio_json(c.alpha)},
            {"gamma_n", ratio_json(c.gamma_n)},
            {"lhs", ratio_json(c.lhs)},
            {"rho", json{{"lo", ratio_json(c.rho.lo)},
                         {"hi", ratio_json(c.rho.hi)},
                         {"mid", c.rho.mid()},
                         {"width", ratio_json(c.rho.hi - c.rho.lo)}}},
            {"rhs_lo", ratio_json(c.rhs_lo)},
            {"rhs_hi", ratio_json(c.rhs_hi)},
            {"bound", ratio_json(c.bound)},
            {"gamma_bound", ratio_json(c.gamma_bound)},
            {"profile", profile},
            {"beta_slack", beta_slack},
            {"gamma_slack", gamma_slack},
            {"lambda", lambda},
            {"checks", json{{"lambda", c.lambda_ok},
                            {"beta", c.beta_report.pass},
                            {"gamma", c.gamma_report.pass},
                            {"inner", c.inner_pass},
                            {"outer", c.outer_pass}}},
            {"pass", c.pass()}};
}

void certify_csv(const TheoremCertificate& c, std::ostream& out) {
    out << "j,alpha,beta,gamma,delta,beta_slack,gamma_slack,"
           "alpha_exact,beta_exact,gamma_exact,delta_exact,beta_slack_exact,gamma_slack_exact\n";
    for (unsigned j = 0; j <= c.n; ++j) {
        out << j << "," << to_double(c.profile.alpha[j]) << "," << to_double(c.profile.beta[j])
            << "," << to_double(c.profile.gamma[j]) << "," << to_double(c.profile.delta[j]) << ",";
        if (j >= 1)
            out << to_double(c.beta_report.slack[j]) << "," << to_double(c.gamma_report.slack[j]);
        else
            out << ",";
        out << "," << to_string(c.profile.alpha[j]) << "," << to_string(c.profile.beta[j]) << ","
            << to_string(c.profile.gamma[j]) << "," << to_string(c.profile.delta[j]) << ",";
        if (j >= 1)
            out << to_string(c.beta_report.slack[j]) << "," << to_string(c.gamma_report.slack[j]);
        else
            out << ",";
        out << "\n";
    }
}

int run_certify(const GlobalOpts& g, const std::string& set_file, std::optional<unsigned> q,
                std::optional<unsigned> n, unsigned random_count) {
    const Ratio tol = ratio_from_double(g.inner_tol);
    const Ratio width = ratio_from_double(g.rho_width);
    if (random_count > 0) {
        if (!q || !n) throw std::invalid_argument("--random needs --q and --n");
        std::mt19937_64 rng(g.seed);
        const std::uint64_t size = checked_universe(*q, *n);
        unsigned passes = 0;
        json instances = json::array();
        for (unsigned i = 0; i < random_count; ++i) {
            const std::uint64_t m = 1 + bounded_draw(rng, size - 1);
            const WordSet a = random_word_set(*q, *n, m, rng);
            const TheoremCertificate cert = verify_theorem_certificate(a, tol, width);
            passes += cert.pass();
            instances.push_back({{"count", a.count()},
                                 {"alpha", ratio_json(cert.alpha)},
                                 {"lhs", ratio_json(cert.lhs)},
                                 {"pass", cert.pass()}});
        }
        json rep{{"subcommand", "certify"}, {"q", *q},          {"n", *n},
                 {"batch", random_count},   {"seed", g.seed},   {"passes", passes},
                 {"failures", random_count - passes},           {"instances", instances},
                 {"tolerance", g.inner_tol}};
        const std::string format = g.format_or("json");
        if (format == "csv") {
            std::cout << "index,count,alpha,lhs,pass\n";
            for (std::size_t i = 0; i < instances.size(); ++i)
                std::cout << i << "," << instances[i]["count"].get<std::uint64_t>() << ","
                          << ratio_inline(instances[i]["alpha"]) << ","
                          << ratio_inline(instances[i]["lhs"]) << ","
                          << instances[i]["pass"].get<bool>() << "\n";
        } else {
            emit_generic(rep, format);
        }
        return passes == random_count ? kExitPass : kExitCheckFailed;
    }

    if (set_file.empty()) throw std::invalid_argument("certify needs --set-file or --random");
    const WordSet a = load_set(set_file, q, n);
    const TheoremCertificate cert = verify_theorem_certificate(a, tol, width);
    json rep = certificate_json(cert);
    rep["subcommand"] = "certify";
    rep["tolerance"] = g.inner_tol;
    const std::string format = g.format_or("json");
    if (format == "csv")
        certify_csv(cert, std::cout);
    else
        emit_generic(rep, format);
    return cert.pass() ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------------------- search

int run_search(const GlobalOpts& g, unsigned q, unsigned n, std::uint64_t m, bool greedy,
               unsigned restarts) {
    SearchResult res = greedy ? greedy_gamma(q, n, m, restarts, g.seed)
                              : exhaustive_gamma(q, n, m, g.workers_or_auto());
    json witnesses = json::array();
    for (const WordSet& w : res.witnesses) witnesses.push_back(words_json(w));
    json rep{{"subcommand", "search"},
             {"mode", greedy ? "greedy" : "exhaustive"},
             {"q", q},
             {"n", n},
             {"m", m},
             {"best_mu_u", ratio_json(res.best_mu_u)},
             {"best_count", res.best_count},
             {"explored", res.explored},
             {"witness_total", res.witness_total},
             {"witnesses", witnesses}};
    if (greedy) {
        rep["seed"] = g.seed;
        rep["restarts"] = restarts;
    }
    emit_generic(rep, g.format_or("json"));
    return kExitPass;
}

// ---------------------------------------------------------------- family

int run_family(const GlobalOpts& g, std::optional<unsigned> q, std::optional<unsigned> s,
               std::uint64_t n, std::optional<unsigned> k, std::optional<double> alpha,
               const std::string& k_round) {
    const RoundMode mode = k_round == "floor" ? RoundMode::floor : RoundMode::nearest;
    json rep{{"subcommand", "family"}};
    bool pass = true;

    if (alpha) {
        if (q || s || k)
            throw std::invalid_argument("--alpha mode excludes --q/--s/--k");
        const unsigned kk = optimal_k(n, *alpha, mode);
        const double p = std::exp(std::log(*alpha) / kk);
        const double value = asymptotic_value(n, kk, p, *alpha);
        rep["mode"] = "asymptotic";
        rep["n"] = n;
        rep["alpha"] = *alpha;
        rep["k"] = kk;
        rep["k_round"] = k_round;
        rep["p"] = p;
        rep["mu_u"] = value / (*alpha * static_cast<double>(n));
        rep["alpha_n_mu"] = value;
        if (n >= 2) {
            const PoissonEstimate pe = poisson_estimate(n, kk, p);
            rep["poisson"] = {{"lambda", pe.lambda},
                              {"approx", pe.approx},
                              {"error_bound", pe.error_bound}};
        } else {
            rep["poisson"] = nullptr;
        }
    } else {
        if (!q || !s || !k)
            throw std::invalid_argument("family needs --q --s --k (exact) or --alpha (asymptotic)");
        ProductFamilySpec spec{*q, *s, static_cast<unsigned>(n), *k};
        validate_family(spec);
        const Ratio mu = closed_form_mu_u(spec);
        const Ratio a = spec.alpha();
        rep["mode"] = "exact";
        rep["q"] = *q;
        rep["s"] = *s;
        rep["n"] = n;
        rep["k"] = *k;
        rep["p"] = ratio_json(spec.p());
        rep["alpha"] = ratio_json(a);
        rep["mu_u"] = ratio_json(mu);
        rep["alpha_n_mu"] = ratio_json(a * n * mu);
        rep["no_run_count"] = no_run_count(n - 1, *k, *q, *s).str();
        if (n >= 2) {
            const PoissonEstimate pe = poisson_estimate(n, *k, to_double(spec.p()));
            const Ratio exact = prob_no_run_exact(n - 1, *k, spec.p());
            const double abs_err = std::abs(to_double(exact) - pe.approx);
            const bool within = abs_err <= pe.error_bound;
            pass = within;
            rep["poisson"] = {{"lambda", pe.lambda},
                              {"approx", pe.approx},
                              {"error_bound", pe.error_bound},
                              {"prob_no_run", ratio_json(exact)},
                              {"abs_error", abs_err},
                              {"within_bound", within}};
        } else {
            rep["poisson"] = nullptr;
        }
    }
    rep["pass"] = pass;
    emit_generic(rep, g.format_or("json"));
    return pass ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------------------- corollary

int run_corollary(const GlobalOpts& g, const std::string& set_file, std::optional<unsigned> q,
                  std::optional<unsigned> n, unsigned t, bool blocked) {
    // t = 0 is rejected as a usage error before any data is read; t >= 1
    // failing the [1, n/4] hypothesis against the loaded set maps to exit 3.
    if (t == 0) throw std::invalid_argument("t out of hypothesis [1, n/4] (t = 0)");
    const WordSet a = load_set(set_file, q, n);
    const CorollaryReport rep = corollary_check(a, t);

    json out{{"subcommand", "corollary"},
             {"q", rep.q},
             {"n", rep.n},
             {"t", rep.t},
             {"alpha", ratio_json(rep.alpha)},
             {"level_measure", ratio_json(rep.level_measure)},
             {"bound", ratio_json(rep.bound)},
             {"slack", ratio_json(rep.slack)},
             {"vacuous", rep.vacuous},
             {"pass", rep.pass}};
    out["remark"] = rep.remark_applicable
                        ? json{{"applicable", true},
                               {"t", rep.remark_t},
                               {"measure", ratio_json(rep.remark_measure)},
                               {"pass", rep.remark_pass}}
                        : json{{"applicable", false}};

    bool all_pass = rep.pass && (!rep.remark_applicable || rep.remark_pass);
    if (blocked) {
        const BlockedCheck chk = verify_blocked_counting(a, t);
        json fam_mu = json::array(), u_mu = json::array();
        for (const Ratio& x : chk.family_mu) fam_mu.push_back(ratio_json(x));
        for (const Ratio& x : chk.u_mu) u_mu.push_back(ratio_json(x));
        out["blocked"] = {{"t", chk.t},
                          {"n_tilde", chk.n_tilde},
                          {"r", chk.r},
                          {"counting_pass", chk.counting_pass},
                          {"violations", chk.violations},
                          {"chain_lhs", ratio_json(chk.chain_lhs)},
                          {"chain_rhs", ratio_json(chk.chain_rhs)},
                          {"chain_pass", chk.chain_pass},
                          {"family_mu", fam_mu},
                          {"u_mu", u_mu}};
        all_pass = all_pass && chk.counting_pass && chk.chain_pass;
    }
    emit_generic(out, g.format_or("json"));
    return all_pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("NONOVERLAP_MAX_INDEX")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(cap, &end, 10);
        if (!end || *end != '\0' || v == 0) {
            std::cerr << "error: NONOVERLAP_MAX_INDEX must be a positive integer\n";
            return kExitUsage;
        }
        set_max_index_guard(v);
    }

    CLI::App app{"Exact toolkit for non-overlapping word sets: non-overlap sets U(A), density\n"
                 "certificates, product families, extremal search, and level-set estimates."};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", g.seed, "Seed for all randomized operations");
    app.add_option("--workers", g.workers, "Worker threads (0 = auto); results do not depend on it");
    app.add_option("--inner-tol", g.inner_tol, "Tolerance for the rho-enclosure comparison")
        ->check(CLI::PositiveNumber);
    app.add_option("--rho-width", g.rho_width, "Target width of the rho enclosure")
        ->check(CLI::PositiveNumber);

    // u-set
    auto* u_cmd = app.add_subcommand("u-set", "Compute the non-overlap set U(A) of a word set");
    u_cmd->fallthrough();
    std::string u_file, u_method = "brute";
    std::optional<unsigned> u_q, u_n;
    u_cmd->add_option("--set-file", u_file, "Word-set file (q= n= header)")->required();
    u_cmd->add_option("--q", u_q, "Expected alphabet size (cross-checked against the file)");
    u_cmd->add_option("--n", u_n, "Expected word length (cross-checked against the file)");
    u_cmd->add_option("--method", u_method, "brute, incremental, or both (cross-check)")
        ->check(CLI::IsMember({"brute", "incremental", "both"}));

    // certify
    auto* c_cmd = app.add_subcommand("certify", "Verify the density-bound certificate for a set");
    c_cmd->fallthrough();
    std::string c_file;
    std::optional<unsigned> c_q, c_n;
    unsigned c_random = 0;
    c_cmd->add_option("--set-file", c_file, "Word-set file to certify");
    c_cmd->add_option("--q", c_q, "Alphabet size (required with --random)");
    c_cmd->add_option("--n", c_n, "Word length (required with --random)");
    c_cmd->add_option("--random", c_random, "Certify this many random sets instead of a file");

    // search
    auto* s_cmd = app.add_subcommand("search", "Maximize mu(U(A)) over all size-m subsets");
    s_cmd->fallthrough();
    unsigned s_q = 0, s_n = 0, s_restarts = 100;
    std::uint64_t s_m = 0;
    bool s_exhaustive = false, s_greedy = false;
    s_cmd->add_option("--q", s_q, "Alphabet size")->required();
    s_cmd->add_option("--n", s_n, "Word length")->required();
    s_cmd->add_option("--m", s_m, "Subset size")->required();
    s_cmd->add_flag("--exhaustive", s_exhaustive, "Exact enumeration (default)");
    s_cmd->add_flag("--greedy", s_greedy, "Seeded greedy heuristic (lower bound)");
    s_cmd->add_option("--restarts", s_restarts, "Greedy restarts");

    // family
    auto* f_cmd = app.add_subcommand("family", "Evaluate a product family Omega^(n-k) x S^k");
    f_cmd->fallthrough();
    std::optional<unsigned> f_q, f_s, f_k;
    std::optional<double> f_alpha;
    std::uint64_t f_n = 0;
    std::string f_round = "nearest";
    f_cmd->add_option("--q", f_q, "Alphabet size (exact mode)");
    f_cmd->add_option("--s", f_s, "|S| (exact mode)");
    f_cmd->add_option("--n", f_n, "Word length")->required();
    f_cmd->add_option("--k", f_k, "Suffix block length (exact mode)");
    f_cmd->add_option("--alpha", f_alpha, "Target density (asymptotic mode, k chosen automatically)");
    f_cmd->add_option("--k-round", f_round, "Rounding for the automatic k: nearest or floor")
        ->check(CLI::IsMember({"nearest", "floor"}));

    // corollary
    auto* l_cmd = app.add_subcommand("corollary", "Check the level-set estimate mu({f<=t}) <= 4t/(alpha n)");
    l_cmd->fallthrough();
    std::string l_file;
    std::optional<unsigned> l_q, l_n;
    unsigned l_t = 0;
    bool l_blocked = false;
    l_cmd->add_option("--set-file", l_file, "Word-set file")->required();
    l_cmd->add_option("--q", l_q, "Expected alphabet size (cross-checked)");
    l_cmd->add_option("--n", l_n, "Expected word length (cross-checked)");
    l_cmd->add_option("--t", l_t, "Level threshold")->required();
    l_cmd->add_flag("--blocked", l_blocked, "Also verify the blocked-family counting inequality");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (u_cmd->parsed()) return run_u_set(g, u_file, u_q, u_n, u_method);
        if (c_cmd->parsed()) return run_certify(g, c_file, c_q, c_n, c_random);
        if (s_cmd->parsed()) {
            if (s_exhaustive && s_greedy)
                throw std::invalid_argument("--exhaustive and --greedy are mutually exclusive");
            return run_search(g, s_q, s_n, s_m, s_greedy, s_restarts);
        }
        if (f_cmd->parsed()) return run_family(g, f_q, f_s, f_n, f_k, f_alpha, f_round);
        if (l_cmd->parsed()) return run_corollary(g, l_file, l_q, l_n, l_t, l_blocked);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const hypothesis_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // Violated internal invariant: a verification failure, not a usage error.
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
