// p1146: exact verification of the P(1,1,4,6) / degree-72 Fano threefold identities.
//
//   p1146 verify [all|wps|scroll|system-s|system-t|theorem] [--xi C] [--json PATH] [--suite S] [--seed N]
//   p1146 hilbert --weights 1,1,4,6 --degree 12 [--list]
//   p1146 wps --weights 1,1,4,6 [--basis]
//   p1146 scroll-check
//   p1146 system-s|system-t|sprime|theorem [--xi C] [--seed N]
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 configuration error.

#include "p1146/grading.hpp"
#include "p1146/report.hpp"
#include "p1146/wps.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kConfigError = 2;

std::string monomial_text(const p1146::Monomial& m, const p1146::RingPtr& ring)
{
    return p1146::Polynomial::monomial(ring, m).to_string();
}

struct CubicOptions {
    std::string xi;
    std::uint64_t seed = 72;

    void attach(CLI::App* app)
    {
        app->add_option("--xi", xi, "pencil cubic in x1, x2 with three distinct nonzero rational roots");
        app->add_option("--seed", seed, "seed for randomized members")->capture_default_str();
    }

    p1146::VerifyConfig config() const
    {
        p1146::VerifyConfig cfg;
        if (!xi.empty()) cfg.xi = xi;
        cfg.seed = seed;
        return cfg;
    }
};

int emit_json_records(const std::vector<p1146::CheckRecord>& records)
{
    std::cout << p1146::to_json_lines(records);
    return p1146::exit_code(records);
}

std::vector<p1146::CheckRecord> only_prefix(std::vector<p1146::CheckRecord> records, std::string_view prefix)
{
    std::erase_if(records, [&](const p1146::CheckRecord& r) { return !r.check_id.starts_with(prefix); });
    return records;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification toolkit for P(1,1,4,6) and the degree-72 Fano threefold"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suites and print a report");
    std::string suite_arg = "all";
    std::string suite_flag;
    std::string json_path;
    CubicOptions verify_opts;
    verify->add_option("target", suite_arg, "all, wps, scroll, system-s, system-t or theorem");
    verify->add_option("--suite", suite_flag, "same as the positional suite");
    verify->add_option("--json", json_path, "write JSON lines (one record per line) to this path");
    verify_opts.attach(verify);

    // hilbert
    auto* hilbert = app.add_subcommand("hilbert", "count monomials of a given weighted degree");
    std::string weights_text;
    std::uint64_t degree = 0;
    bool list = false;
    hilbert->add_option("--weights", weights_text, "comma-separated weights")->required();
    hilbert->add_option("--degree", degree, "weighted degree")->required();
    hilbert->add_flag("--list", list, "print the monomials");

    // wps
    auto* wps = app.add_subcommand("wps", "anticanonical data of a weighted projective space");
    bool show_basis = false;
    wps->add_option("--weights", weights_text, "comma-separated weights")->required();
    wps->add_flag("--basis", show_basis, "print the anticanonical monomial basis");

    auto* scroll = app.add_subcommand("scroll-check", "scroll, cone and bundle dimension facts");

    CubicOptions sys_opts;
    auto* system_s = app.add_subcommand("system-s", "checks on the sextic system S (JSON lines)");
    auto* system_t = app.add_subcommand("system-t", "checks on the degree-12 system T (JSON lines)");
    auto* sprime = app.add_subcommand("sprime", "the S' constraint solve (JSON lines)");
    auto* theorem = app.add_subcommand("theorem", "span identity eta^*|-K| = T (JSON lines)");
    for (auto* sub : {system_s, system_t, sprime, theorem}) sys_opts.attach(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            auto cfg = verify_opts.config();
            std::string name = suite_flag.empty() ? suite_arg : suite_flag;
            if (name != "all") {
                auto s = p1146::parse_suite(name);
                if (!s) {
                    std::cerr << "unknown suite '" << name << "'\n";
                    return kConfigError;
                }
                cfg.suites = {*s};
            }
            auto records = p1146::run_all(cfg);
            std::cout << p1146::format_table(records);
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                if (!out) {
                    std::cerr << "cannot write " << json_path << '\n';
                    return kConfigError;
                }
                out << p1146::to_json_lines(records);
            }
            return p1146::exit_code(records);
        }
        if (hilbert->parsed()) {
            auto ws = p1146::WeightSystem::parse(weights_text);
            std::cout << p1146::hilbert_count(ws, degree) << '\n';
            if (list) {
                auto ring = p1146::rings::weighted_target(ws.size());
                for (const auto& m : p1146::enumerate_monomials(ws, degree)) std::cout << monomial_text(m, ring) << '\n';
            }
            return 0;
        }
        if (wps->parsed()) {
            p1146::WeightedProjectiveSpace P(p1146::WeightSystem::parse(weights_text));
            auto basis = p1146::anticanonical_basis(P);
            std::cout << "weights                 " << P.weights().to_string() << '\n'
                      << "anticanonical weight    " << p1146::anticanonical_weight(P) << '\n'
                      << "(-K)^" << P.dimension() << "                  "
                      << p1146::anticanonical_selfintersection(P).get_str() << '\n'
                      << "basis size              " << basis.size() << '\n'
                      << "embedding dimension     " << static_cast<long long>(basis.size()) - 1 << '\n';
            if (show_basis) {
                auto ring = p1146::rings::weighted_target(P.weights().size());
                for (const auto& m : basis) std::cout << monomial_text(m, ring) << '\n';
            }
            return 0;
        }
        if (scroll->parsed()) {
            auto records = p1146::run_suite(p1146::Suite::scroll, p1146::PencilCubic::standard(), 0);
            std::cout << p1146::format_table(records, true);
            return p1146::exit_code(records);
        }

        auto cfg = sys_opts.config();
        auto xi = p1146::resolve_cubic(cfg);
        if (system_s->parsed()) return emit_json_records(p1146::run_suite(p1146::Suite::system_s, xi, cfg.seed));
        if (system_t->parsed()) return emit_json_records(p1146::run_suite(p1146::Suite::system_t, xi, cfg.seed));
        if (sprime->parsed())
            return emit_json_records(only_prefix(p1146::run_suite(p1146::Suite::system_s, xi, cfg.seed), "sprime."));
        if (theorem->parsed()) return emit_json_records(p1146::run_suite(p1146::Suite::theorem, xi, cfg.seed));
    }
    catch (const p1146::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    }
    catch (const p1146::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    }
    catch (const p1146::DomainError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    }
    return 0;
}
