#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "padic/campaign.hpp"
#include "padic/errors.hpp"
#include "padic/serialization.hpp"
#include "padic/uncertainty.hpp"

namespace {

using padic::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_violation = 2;

struct CampaignFlags {
    std::string config_path;
    std::vector<std::int64_t> primes;
    std::vector<std::uint32_t> dims;
    std::int64_t trials = -1;
    std::int64_t size_bound = -1;
    std::vector<std::string> classes;
    std::int64_t witnesses = -1;
    std::optional<std::uint64_t> seed;
    bool mutate = false;
    std::string format = "json";
    std::string out_path;
};

void add_campaign_flags(CLI::App& cmd, CampaignFlags& flags) {
    cmd.add_option("--config", flags.config_path, "JSON config file; flags override its values");
    cmd.add_option("--primes", flags.primes, "comma-separated primes")->delimiter(',');
    cmd.add_option("--dims", flags.dims, "comma-separated dimensions (2..16)")->delimiter(',');
    cmd.add_option("--trials", flags.trials, "trials per (prime, dim, class) cell")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));
    cmd.add_option("--size-bound", flags.size_bound, "max numerator/denominator magnitude")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
    cmd.add_option("--classes", flags.classes,
                   "operator classes: symmetric, general, c0_diagonal")
        ->delimiter(',');
    cmd.add_option("--witnesses", flags.witnesses, "orthogonal witnesses per instance")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000}));
    cmd.add_option("--seed", flags.seed, "campaign seed");
    cmd.add_option("--format", flags.format, "report format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd.add_option("--out", flags.out_path, "output path (default: stdout)");
    cmd.add_flag("--mutate", flags.mutate)->group(""); // test-only, hidden
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        throw padic::error("cannot read '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw padic::parse_error("'" + path + "' is not valid JSON: " + std::string(e.what()));
    }
}

padic::CampaignConfig build_config(const CampaignFlags& flags) {
    padic::CampaignConfig config;
    if (!flags.config_path.empty()) {
        config = padic::config_from_json(load_json_file(flags.config_path));
    }
    if (!flags.primes.empty()) config.primes = flags.primes;
    if (!flags.dims.empty()) config.dims = flags.dims;
    if (flags.trials >= 0) config.trials_per_cell = static_cast<std::uint32_t>(flags.trials);
    if (flags.size_bound >= 0) config.size_bound = static_cast<int>(flags.size_bound);
    if (!flags.classes.empty()) {
        config.operator_classes.clear();
        for (const std::string& name : flags.classes) {
            config.operator_classes.push_back(padic::operator_class_from_string(name));
        }
    }
    if (flags.witnesses >= 0) {
        config.witnesses_per_instance = static_cast<std::uint32_t>(flags.witnesses);
    }
    if (flags.seed) config.seed = *flags.seed;
    if (flags.mutate) config.mutate = true;
    config.validate();
    return config;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out.good()) {
        throw padic::error("cannot write '" + out_path + "'");
    }
    out << payload;
    if (!out.good()) {
        throw padic::error("write to '" + out_path + "' failed");
    }
}

int run_campaign_command(const CampaignFlags& flags, padic::CampaignMode mode) {
    const padic::CampaignConfig config = build_config(flags);
    const padic::CampaignReport report = padic::run_campaign(config, mode);
    write_output(flags.out_path,
                 padic::emit_report(report, padic::report_format_from_string(flags.format)));
    return report.total_failed() == 0 ? exit_ok : exit_violation;
}

struct EvalFlags {
    std::string instance_path;
    std::vector<std::string> checks;
    std::string format = "text";
    std::string out_path;
};

std::vector<padic::Verdict> evaluate_file_instance(const padic::EvalInstance& inst,
                                                   const std::vector<std::string>& requested) {
    using padic::CheckId;
    const bool selfadjoint = inst.a.is_selfadjoint() && inst.b.is_selfadjoint();

    std::vector<CheckId> checks;
    if (requested.empty()) {
        checks = {CheckId::hrs_i, CheckId::hrs_iii, CheckId::hrs_iv,
                  CheckId::hrs_v, CheckId::hrs_vi,  CheckId::ident_ii};
        if (selfadjoint) {
            checks.insert(checks.begin() + 1, CheckId::hrs_ii);
            checks.push_back(CheckId::note_comm_zero);
            checks.push_back(CheckId::note_anticomm_double);
        }
        if (!inst.witnesses.empty()) {
            checks.push_back(CheckId::mp_plus);
            checks.push_back(CheckId::mp_minus);
        }
    } else {
        for (const std::string& name : requested) {
            checks.push_back(padic::check_id_from_string(name));
        }
    }

    std::vector<padic::Verdict> out;
    for (const CheckId id : checks) {
        switch (id) {
            case CheckId::hrs_i:
                out.push_back(check_hrs_i(inst.a, inst.b, inst.x, "eval"));
                break;
            case CheckId::hrs_ii:
                out.push_back(check_hrs_ii(inst.a, inst.b, inst.x, "eval"));
                break;
            case CheckId::hrs_iii:
                out.push_back(check_hrs_iii(inst.a, inst.b, inst.x, "eval"));
                break;
            case CheckId::hrs_iv:
                out.push_back(check_hrs_iv(inst.a, inst.b, inst.x, "eval"));
                break;
            case CheckId::hrs_v:
                out.push_back(check_hrs_v(inst.a, inst.b, inst.x, "eval"));
                break;
            case CheckId::hrs_vi:
                out.push_back(check_hrs_vi(inst.a, inst.b, inst.x, "eval"));
                break;
            case CheckId::ident_ii:
                out.push_back(check_identity_ii(inst.a, inst.b, inst.x, "eval"));
                break;
            case CheckId::note_comm_zero:
                out.push_back(check_notes(inst.a, inst.b, inst.x, "eval").first);
                break;
            case CheckId::note_anticomm_double:
                out.push_back(check_notes(inst.a, inst.b, inst.x, "eval").second);
                break;
            case CheckId::mp_plus:
            case CheckId::mp_minus: {
                if (inst.witnesses.empty()) {
                    throw padic::error("instance provides no witnesses for " +
                                       padic::to_string(id));
                }
                for (std::size_t w = 0; w < inst.witnesses.size(); ++w) {
                    out.push_back(check_mp(
                        inst.a, inst.b, inst.x, inst.witnesses[w],
                        id == CheckId::mp_plus ? padic::MpSign::plus : padic::MpSign::minus,
                        "eval;witness=" + std::to_string(w)));
                }
                break;
            }
        }
    }
    return out;
}

std::string render_eval_text(const padic::EvalInstance& inst, const padic::Exponent& delta_a,
                             const padic::Exponent& delta_b,
                             const std::vector<padic::Verdict>& verdicts) {
    std::ostringstream out;
    out << "p = " << inst.p.value() << '\n';
    out << "Delta_x(A) = " << delta_a.display(inst.p) << '\n';
    out << "Delta_x(B) = " << delta_b.display(inst.p) << '\n';
    std::size_t failed = 0;
    for (const padic::Verdict& v : verdicts) {
        const std::string name = padic::to_string(v.check);
        out << name;
        for (std::size_t n = name.size(); n < 22; ++n) {
            out << ' ';
        }
        out << (v.holds ? "holds " : "FAILS ") << "lhs=" << v.lhs.display(inst.p)
            << " rhs=" << v.rhs.display(inst.p);
        if (v.tight) out << " [tight]";
        if (v.degenerate) out << " [degenerate]";
        out << '\n';
        failed += v.holds ? 0 : 1;
    }
    out << "failed: " << failed << '\n';
    return out.str();
}

int run_eval_command(const EvalFlags& flags) {
    const padic::EvalInstance inst =
        padic::eval_instance_from_json(load_json_file(flags.instance_path));
    if (!(inner(inst.x, inst.x) == padic::Rational(1))) {
        throw padic::hypothesis_error("hypothesis violated: <x,x> != 1");
    }

    const padic::Exponent delta_a = padic::delta(inst.a, inst.x);
    const padic::Exponent delta_b = padic::delta(inst.b, inst.x);
    const std::vector<padic::Verdict> verdicts = evaluate_file_instance(inst, flags.checks);
    std::size_t failed = 0;
    for (const padic::Verdict& v : verdicts) {
        failed += v.holds ? 0 : 1;
    }

    std::string payload;
    if (flags.format == "json") {
        json doc;
        doc["p"] = inst.p.value();
        doc["delta_A"] = padic::exponent_to_json(delta_a);
        doc["delta_A_display"] = delta_a.display(inst.p);
        doc["delta_B"] = padic::exponent_to_json(delta_b);
        doc["delta_B_display"] = delta_b.display(inst.p);
        json vs = json::array();
        for (const padic::Verdict& v : verdicts) {
            vs.push_back(padic::verdict_to_json(v));
        }
        doc["verdicts"] = std::move(vs);
        doc["failed"] = failed;
        payload = doc.dump(2) + "\n";
    } else {
        payload = render_eval_text(inst, delta_a, delta_b, verdicts);
    }
    write_output(flags.out_path, payload);
    return failed == 0 ? exit_ok : exit_violation;
}

int run_selftest(std::uint64_t seed) {
    // 1. The worked micro-instance, evaluated from first principles.
    const padic::Prime p5(5);
    const padic::PVector x(p5, 2, {{0, padic::Rational(3, 5)}, {1, padic::Rational(4, 5)}});
    const padic::POperator a = padic::POperator::dense(
        p5, 2,
        {padic::Rational(1), padic::Rational(0), padic::Rational(0), padic::Rational(2)});
    if (!(padic::delta(a, x) == padic::Exponent::from_int(3))) {
        std::cerr << "selftest: micro instance uncertainty mismatch\n";
        return exit_usage;
    }
    std::cout << "[ok] micro instance: Delta_x(A) = 5^3\n";

    // 2. A small campaign over checks whose bounds are unconditional must
    //    come back clean.
    padic::CampaignConfig config;
    config.primes = {3, 5};
    config.dims = {2, 3};
    config.trials_per_cell = 25;
    config.operator_classes = {padic::OperatorClass::general};
    config.witnesses_per_instance = 2;
    config.seed = seed;
    const padic::CampaignReport clean = padic::run_campaign(config);
    if (clean.total_failed() != 0) {
        std::cerr << "selftest: unconditional bounds reported " << clean.total_failed()
                  << " violations\n";
        return exit_violation;
    }
    std::cout << "[ok] clean campaign: 0 failures across " << clean.cells.size() << " cells\n";

    // 3. The mutated comparison must be detected.
    config.mutate = true;
    const padic::CampaignReport mutated = padic::run_campaign(config);
    if (mutated.total_failed() == 0) {
        std::cerr << "selftest: mutation was not detected\n";
        return exit_usage;
    }
    std::cout << "[ok] mutation detected: " << mutated.total_failed() << " flagged verdicts\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of uncertainty inequalities on p-adic Hilbert spaces"};
    app.require_subcommand(1);

    CampaignFlags verify_flags;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the randomized inequality campaign and emit a report");
    add_campaign_flags(*verify, verify_flags);

    CampaignFlags identity_flags;
    CLI::App* identity = app.add_subcommand(
        "identity", "run only the exact identity checks (IDENT_ii and the NOTE identities)");
    add_campaign_flags(*identity, identity_flags);

    EvalFlags eval_flags;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one serialized instance file");
    eval->add_option("instance", eval_flags.instance_path, "instance JSON file")->required();
    eval->add_option("--checks", eval_flags.checks, "explicit list of checks to run")
        ->delimiter(',');
    eval->add_option("--format", eval_flags.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    eval->add_option("--out", eval_flags.out_path, "output path (default: stdout)");

    std::uint64_t selftest_seed = 2718281828ULL;
    CLI::App* selftest = app.add_subcommand("selftest", "check the harness machinery itself");
    selftest->add_option("--seed", selftest_seed, "seed for the selftest campaign");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            return run_campaign_command(verify_flags, padic::CampaignMode::verify);
        }
        if (identity->parsed()) {
            return run_campaign_command(identity_flags, padic::CampaignMode::identity);
        }
        if (eval->parsed()) {
            return run_eval_command(eval_flags);
        }
        if (selftest->parsed()) {
            return run_selftest(selftest_seed);
        }
    } catch (const padic::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
