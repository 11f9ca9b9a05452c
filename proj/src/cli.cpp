#include "wreathlab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ostream>

#include "wreathlab/catalog.hpp"
#include "wreathlab/expr.hpp"
#include "wreathlab/json_io.hpp"
#include "wreathlab/verify.hpp"

namespace wreathlab {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct CliConfig {
    std::string format = "text";
    std::uint64_t element_cap = default_budget().element_cap;
    std::uint64_t tuple_budget = default_budget().tuple_budget;
    std::uint64_t brute_cap = default_budget().brute_cap;
    std::uint64_t max_order = 24;
    std::uint64_t seed = default_budget().seed;
    double timeout_secs = 0.0;

    Budget budget() const {
        Budget b;
        b.element_cap = element_cap;
        b.tuple_budget = tuple_budget;
        b.brute_cap = brute_cap;
        b.seed = seed;
        if (timeout_secs > 0.0)
            b.token = CancelToken::with_deadline(
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(timeout_secs)));
        return b;
    }
};

void add_common_flags(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    cmd->add_option("--element-cap", cfg.element_cap, "maximum enumerated group order");
    cmd->add_option("--tuple-budget", cfg.tuple_budget, "image-tuple budget per search");
    cmd->add_option("--brute-cap", cfg.brute_cap, "order cap for brute-force operations");
    cmd->add_option("--seed", cfg.seed, "seed for sampled (non-exhaustive) checks");
    cmd->add_option("--timeout-secs", cfg.timeout_secs, "cooperative cancellation deadline");
}

std::string invariants_text(const std::vector<std::uint64_t>& inv) {
    std::string s = "[";
    for (std::size_t i = 0; i < inv.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(inv[i]);
    }
    return s + "]";
}

int cmd_info(const CliConfig& cfg, const std::string& expr, std::ostream& out) {
    Budget budget = cfg.budget();
    GroupPtr G = parse_group_expression(expr, budget);
    Abelianization ab = abelianization(G);
    const bool nilp = is_nilpotent(*G);
    std::string sa = "unknown (above brute cap)";
    SemiabelianClassifier cls(budget);
    if (G->order() <= budget.brute_cap) sa = cls.verdict(G) ? "yes" : "no";

    std::optional<int> dg_value;
    try {
        dg_value = dg(G);
    } catch (const DomainError&) {
        // perfect nontrivial group: dg undefined
    }

    if (cfg.format == "json") {
        ojson j = group_summary_json(G);
        j["abelian_invariants"] = ab.invariants;
        j["dg"] = dg_value ? ojson(*dg_value) : ojson(nullptr);
        ojson dgp = ojson::object();
        for (std::uint64_t p : prime_factors(ab.quotient.quotient->order()))
            dgp[std::to_string(p)] = dg_p(G, p);
        j["dg_p"] = dgp;
        j["derived_length"] = derived_length(*G);
        j["nilpotent"] = nilp;
        j["semiabelian"] = sa;
        j["seed"] = cfg.seed;
        out << j.dump(2) << "\n";
    } else {
        out << "group: " << G->label() << "\n";
        out << "order: " << G->order() << "\n";
        out << "degree: " << G->degree() << "\n";
        out << "abelian invariants: " << invariants_text(ab.invariants) << "\n";
        out << "dg: " << (dg_value ? std::to_string(*dg_value) : std::string("undefined (perfect)"))
            << "\n";
        for (std::uint64_t p : prime_factors(ab.quotient.quotient->order()))
            out << "dg_" << p << ": " << dg_p(G, p) << "\n";
        out << "derived length: " << derived_length(*G) << "\n";
        out << "nilpotent: " << (nilp ? "yes" : "no") << "\n";
        out << "semiabelian: " << sa << "\n";
    }
    return kOk;
}

int cmd_verify(const CliConfig& cfg, const std::string& suite, std::ostream& out) {
    Budget budget = cfg.budget();
    std::vector<CheckResult> results = verify_suite(suite, budget);
    const int fails = count_failures(results);
    const int skips = count_skips(results);
    if (cfg.format == "json") {
        ojson arr = ojson::array();
        for (const CheckResult& r : results)
            arr.push_back(ojson{{"name", r.name},
                                {"status", r.status == CheckStatus::pass   ? "pass"
                                           : r.status == CheckStatus::fail ? "fail"
                                                                           : "skip"},
                                {"detail", r.detail}});
        out << ojson{{"schema", kCertSchema},
                     {"kind", "verify"},
                     {"suite", suite},
                     {"seed", cfg.seed},
                     {"checks", arr},
                     {"failures", fails},
                     {"skipped", skips}}
                   .dump(2)
            << "\n";
    } else {
        out << "suite: " << suite << " (seed " << cfg.seed << ")\n";
        for (const CheckResult& r : results) {
            const char* tag = r.status == CheckStatus::pass   ? "[pass]"
                              : r.status == CheckStatus::fail ? "[FAIL]"
                                                              : "[skip]";
            out << tag << " " << r.name << ": " << r.detail << "\n";
        }
        out << results.size() << " checks, " << fails << " failed, " << skips << " skipped\n";
    }
    return fails == 0 ? kOk : kCheckFailure;
}

int cmd_wl(const CliConfig& cfg, const std::string& expr, std::ostream& out) {
    Budget budget = cfg.budget();
    GroupPtr G = parse_group_expression(expr, budget);
    SemiabelianClassifier cls(budget);
    WlCertificate cert = wl_bounds(G, cls, budget);
    WlEqDgCheck chk = check_wl_eq_dg_characterization(G, cert, budget);
    if (cfg.format == "json") {
        ojson j = wl_certificate_json(cert);
        j["wl_eq_dg"] = wl_eq_dg_json(chk);
        j["seed"] = cfg.seed;
        out << j.dump(2) << "\n";
    } else {
        out << "group: " << cert.group_label << " (order " << cert.order << ")\n";
        out << "dg: " << cert.dg_value << ", dl: " << cert.dl_value << "\n";
        out << "wl lower bound: " << cert.lower;
        for (const std::string& r : cert.lower_reasons) out << "\n  - " << r;
        out << "\n";
        if (cert.exact)
            out << "wl: " << *cert.exact << " (exact, " << cert.method << ")\n";
        else if (cert.upper)
            out << "wl: in [" << cert.lower << ", " << *cert.upper << "] (" << cert.method << ")\n";
        else
            out << "wl: >= " << cert.lower << " (upper bound open; searched up to length "
                << cert.refuted_up_to << ")\n";
        if (cert.witness_spec)
            out << "witness tower: " << cert.witness_spec->to_string() << " of order "
                << cert.witness->domain()->order() << ", kernel " << cert.witness->kernel_order()
                << "\n";
        if (chk.decided) {
            out << "wl = dg: " << (chk.wl_equals_dg ? "yes" : "no") << "\n";
            if (chk.witness_prime)
                out << "characterization witness: p = " << *chk.witness_prime << ", tower "
                    << chk.witness_spec->to_string() << "\n";
            if (chk.refuted_at_dg)
                out << "no dg-preserving common-prime tower of length " << cert.dg_value
                    << " exists\n";
        }
    }
    return kOk;
}

int cmd_survey(const CliConfig& cfg, std::ostream& out) {
    Budget budget = cfg.budget();
    std::vector<SurveyRow> rows = survey(catalog_groups(cfg.max_order, budget), budget);
    if (cfg.format == "json") {
        out << survey_json(rows, cfg.seed).dump(2) << "\n";
    } else if (cfg.format == "tsv") {
        out << survey_tsv(rows);
    } else {
        out << "catalog survey, max order " << cfg.max_order << " (seed " << cfg.seed << ")\n";
        for (const SurveyRow& r : rows) {
            out << r.label << " (order " << r.order << "): invariants "
                << invariants_text(r.ab_invariants) << ", dg " << r.dg_value << ", dl "
                << r.dl_value << ", semiabelian " << (r.semiabelian ? "yes" : "no");
            if (r.wl_exact)
                out << ", wl " << *r.wl_exact;
            else
                out << ", wl >= " << r.wl_lower;
            if (r.wl_eq_dg_decided) out << ", wl=dg " << (r.wl_eq_dg ? "yes" : "no");
            if (!r.iso_to.empty()) out << " (isomorphic to " << r.iso_to << ")";
            if (!r.notes.empty()) out << " [" << r.notes << "]";
            out << "\n";
        }
    }
    return kOk;
}

int cmd_realize(const CliConfig& cfg, std::uint64_t n, std::ostream& out) {
    ConductorRecord rec = cyclic_conductor(n);
    if (cfg.format == "json") {
        ojson j = conductor_json(rec);
        j["seed"] = cfg.seed;
        out << j.dump(2) << "\n";
    } else {
        out << "C" << rec.n << " realized tamely with 1 ramified prime: p = " << rec.prime << " ("
            << rec.prime << " = 1 mod " << rec.n << "; " << rec.candidates_checked
            << " candidates checked; primality by trial division)\n";
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-group engine: wreath products, induced epimorphisms, and"
                 " generation/length invariants with machine-checkable certificates"};
    app.require_subcommand(1);
    CliConfig cfg;

    std::string info_expr;
    CLI::App* info = app.add_subcommand("info", "invariants of a group expression");
    info->add_option("expression", info_expr, "group expression, e.g. \"wr(C2,C2;desc)\"")
        ->required();
    add_common_flags(info, cfg);

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a structural-property suite");
    verify->add_option("suite", suite, "functorial | towers | invariants | all")->required();
    add_common_flags(verify, cfg);

    std::string wl_expr;
    CLI::App* wl = app.add_subcommand("wl", "wreath-length certificate for a group expression");
    wl->add_option("expression", wl_expr, "group expression")->required();
    add_common_flags(wl, cfg);

    CLI::App* survey_cmd = app.add_subcommand("survey", "catalog survey of all invariants");
    survey_cmd->add_option("--max-order", cfg.max_order, "largest group order to include");
    add_common_flags(survey_cmd, cfg);

    std::uint64_t realize_n = 0;
    CLI::App* realize =
        app.add_subcommand("realize", "smallest prime = 1 mod N (tame cyclic realization)");
    realize->add_option("N", realize_n, "cyclic group order, N >= 2")->required();
    add_common_flags(realize, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (info->parsed()) return cmd_info(cfg, info_expr, out);
        if (verify->parsed()) return cmd_verify(cfg, suite, out);
        if (wl->parsed()) return cmd_wl(cfg, wl_expr, out);
        if (survey_cmd->parsed()) return cmd_survey(cfg, out);
        if (realize->parsed()) return cmd_realize(cfg, realize_n, out);
        err << "no subcommand\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "expression error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const Cancelled& e) {
        err << "cancelled: " << e.what() << "\n";
        return kBudget;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kCheckFailure;
    }
}

}  // namespace wreathlab

