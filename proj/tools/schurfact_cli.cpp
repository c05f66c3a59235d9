// Command-line front end: evaluate characters, verify identities, run sweeps,
// compute counts, run brute-force oracles, check the block determinant
// identities, and emit text/JSON/CSV reports.
//
// Exit codes: 0 all checks passed / value printed, 1 at least one
// verification failure (witness included in the output), 2 usage or
// parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurfact/schurfact.hpp"

using json = nlohmann::ordered_json;
using namespace schurfact;

namespace {

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw std::runtime_error("cannot open output file: " + path);
        os = file.get();
    }
    std::ostream& stream() { return *os; }
};

std::int64_t parse_doubled(const std::string& s, const char* what) {
    const Rational r = Rational::parse(s) * Rational(2);
    if (!r.is_integer() || !r.num().fits_slong_p())
        throw std::invalid_argument(std::string(what) + " must be an integer or half-integer: " + s);
    return r.num().get_si();
}

CharacterFamily parse_family(const std::string& name, bool negate) {
    if (name == "schur") return {FamilyTag::schur, negate};
    if (name == "sp" || name == "symplectic") return {FamilyTag::symplectic, negate};
    if (name == "so" || name == "so_odd") return {FamilyTag::so_odd, negate};
    if (name == "oe" || name == "o_even") return {FamilyTag::o_even, negate};
    throw std::invalid_argument("unknown character family: " + name);
}

std::vector<std::int64_t> parse_sizes(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

CountFamily parse_count_family(const std::string& name, const std::string& size) {
    const auto s = parse_sizes(size);
    auto arity = [&](std::size_t want) {
        if (s.size() != want)
            throw std::invalid_argument("family " + name + " takes " + std::to_string(want) +
                                        " size argument(s)");
    };
    if (name == "pp") { arity(3); return CountFamily::pp(s[0], s[1], s[2]); }
    if (name == "tcpp") { arity(2); return CountFamily::tcpp(s[0], s[1]); }
    if (name == "spp") { arity(2); return CountFamily::spp(s[0], s[1]); }
    if (name == "spp_star") { arity(2); return CountFamily::spp_star(s[0], s[1]); }
    if (name == "cspp") { arity(1); return CountFamily::cspp(s[0]); }
    if (name == "asm") { arity(1); return CountFamily::asm_(s[0]); }
    if (name == "dasasm") { arity(1); return CountFamily::dasasm(s[0]); }
    if (name == "tspp") { arity(1); return CountFamily::tspp(s[0]); }
    if (name == "r") { arity(1); return CountFamily::r(s[0]); }
    if (name == "cstcpp") { arity(1); return CountFamily::cstcpp(s[0]); }
    if (name == "vsasm") { arity(1); return CountFamily::vsasm(s[0]); }
    throw std::invalid_argument("unknown count family: " + name);
}

json params_json(const IdentityParams& p) {
    json j;
    j["n"] = p.n;
    if (!p.lambda.empty()) j["lambda"] = p.lambda.str();
    auto scalar = [&](const char* name, const std::optional<std::int64_t>& v) {
        if (v) j[name] = Rational(*v, 2).str();
    };
    scalar("k", p.doubled_k);
    scalar("k1", p.doubled_k1);
    scalar("k2", p.doubled_k2);
    scalar("a", p.doubled_a);
    if (p.b) j["b"] = *p.b;
    if (p.m) j["m"] = *p.m;
    return j;
}

json report_json(const VerificationReport& r) {
    json j;
    j["identity"] = to_string(r.id);
    j["params"] = params_json(r.params);
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    if (r.witness) {
        json w;
        std::vector<std::string> roots;
        for (int i = 0; i < r.witness->point.size(); ++i)
            roots.push_back(r.witness->point.root(i).str());
        w["point"] = roots;
        w["lhs"] = r.witness->lhs.str();
        w["rhs"] = r.witness->rhs.str();
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["seed"] = r.seed;
    return j;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

const char* kCsvReportHeader = "identity,params,trials,failures,seed,witness\n";

std::string report_csv_row(const VerificationReport& r) {
    std::ostringstream os;
    os << to_string(r.id) << "," << csv_quote(r.params.str()) << "," << r.trials << ","
       << r.failures << "," << r.seed << ",";
    if (r.witness)
        os << csv_quote("lhs=" + r.witness->lhs.str() + " rhs=" + r.witness->rhs.str());
    os << "\n";
    return os.str();
}

void emit_reports(Output& out, const std::string& format,
                  const std::vector<VerificationReport>& reports) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        out.stream() << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out.stream() << kCsvReportHeader;
        for (const auto& r : reports) out.stream() << report_csv_row(r);
    } else {
        for (const auto& r : reports) out.stream() << to_line(r) << "\n";
    }
}

int infer_n(IdentityId id, const IdentityParams& p, bool n_given) {
    if (n_given) return p.n;
    switch (id) {
        case IdentityId::FACT1:
        case IdentityId::FACT4:
        case IdentityId::FACT11:
        case IdentityId::FACT12:
            return p.lambda.size();
        case IdentityId::FACT2:
        case IdentityId::FACT3:
        case IdentityId::FACT3P_PLUS:
        case IdentityId::FACT3P_MINUS:
        case IdentityId::FACT21:
        case IdentityId::FACT22:
            return p.lambda.size() - 1;
        default:
            throw std::invalid_argument("--n is required for identity " + to_string(id));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classical-group characters, Schur factorization identities, and "
                 "plane-partition/ASM counting"};
    app.require_subcommand(1);

    std::uint64_t default_seed = 0;
    if (const char* env = std::getenv("SCHURFACT_SEED")) default_seed = std::strtoull(env, nullptr, 10);

    std::string format = "text", output_path;
    std::uint64_t seed = default_seed;
    int trials = 10;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", output_path, "output file (default: stdout)");
    app.add_option("--seed", seed, "random seed (default: $SCHURFACT_SEED or 0)");
    app.add_option("--trials", trials, "trials per identity instance")->check(CLI::PositiveNumber);

    // --- eval ---
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a character at an exact point");
    std::string eval_family, eval_lambda, eval_roots;
    bool eval_extra_one = false, eval_negate = false;
    eval_cmd->add_option("--family", eval_family, "schur | sp | so_odd | o_even")->required();
    eval_cmd->add_option("--lambda", eval_lambda, "partition, e.g. 2,1 or 3/2,1/2")->required();
    eval_cmd->add_option("--t", eval_roots, "roots t_i with x_i = t_i^2, e.g. 2,1/3")->required();
    eval_cmd->add_flag("--extra-one", eval_extra_one, "append the argument 1 (schur, o_even)");
    eval_cmd->add_flag("--negate", eval_negate, "evaluate so_odd at (-x_1, ..., -x_n)");

    // --- dim ---
    auto* dim_cmd = app.add_subcommand("dim", "closed-form character value at all-ones");
    std::string dim_family, dim_lambda;
    bool dim_negate = false;
    dim_cmd->add_option("--family", dim_family)->required();
    dim_cmd->add_option("--lambda", dim_lambda)->required();
    dim_cmd->add_flag("--negate", dim_negate, "so_odd at all variables -1");

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "randomized exact check of one identity instance");
    std::string v_id, v_lambda, v_k, v_k1, v_k2, v_a;
    std::int64_t v_b = 0, v_m = 0;
    int v_n = 0;
    verify_cmd->add_option("--id", v_id, "identity name, e.g. fact1")->required();
    verify_cmd->add_option("--lambda", v_lambda);
    verify_cmd->add_option("--k", v_k);
    verify_cmd->add_option("--k1", v_k1);
    verify_cmd->add_option("--k2", v_k2);
    verify_cmd->add_option("--a", v_a);
    auto* v_b_opt = verify_cmd->add_option("--b", v_b);
    auto* v_m_opt = verify_cmd->add_option("--m", v_m);
    auto* v_n_opt = verify_cmd->add_option("--n", v_n);

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "verify one identity over a parameter grid");
    std::string s_id, s_max_entry = "3", s_max_entry_half = "5/2", s_parity = "both";
    int s_n_min = 1, s_n_max = 3, s_k_count = 3;
    std::vector<std::int64_t> s_m_values = {0, 1, 2, 3};
    std::vector<int> s_stair_n = {1, 2};
    sweep_cmd->add_option("--id", s_id, "identity name")->required();
    sweep_cmd->add_option("--n-min", s_n_min);
    sweep_cmd->add_option("--n-max", s_n_max);
    sweep_cmd->add_option("--max-entry", s_max_entry, "largest lambda entry, integer branch");
    sweep_cmd->add_option("--max-entry-half", s_max_entry_half, "largest lambda entry, half branch");
    sweep_cmd->add_option("--k-count", s_k_count, "number of k offsets per case");
    sweep_cmd->add_option("--m-values", s_m_values, "m grid for the rect identities");
    sweep_cmd->add_option("--stair-n", s_stair_n, "n grid for the double-staircase identities");
    sweep_cmd->add_option("--parity", s_parity)->check(CLI::IsMember({"both", "integer", "half"}));

    // --- count ---
    auto* count_cmd = app.add_subcommand("count", "closed-form count of a family");
    std::string c_family, c_size;
    count_cmd->add_option("--family", c_family, "pp|tcpp|spp|spp_star|cspp|asm|dasasm|tspp|r|cstcpp|vsasm")
        ->required();
    count_cmd->add_option("--size", c_size, "comma-separated sizes, e.g. 2,2,2")->required();

    // --- oracle ---
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force count vs product formula");
    std::string o_family, o_size;
    oracle_cmd->add_option("--family", o_family)->required();
    oracle_cmd->add_option("--size", o_size)->required();

    // --- detcheck ---
    auto* det_cmd = app.add_subcommand("detcheck", "random-matrix block determinant identities");
    std::string d_which = "d1";
    int d_size = 3, d_seeds = 20;
    det_cmd->add_option("--which", d_which)->check(CLI::IsMember({"d1", "d2", "d3"}));
    det_cmd->add_option("--size", d_size)->check(CLI::PositiveNumber);
    det_cmd->add_option("--seeds", d_seeds)->check(CLI::PositiveNumber);

    // --- table ---
    auto* table_cmd = app.add_subcommand("table", "sweep every identity over its default grid");

    // global options may appear after the subcommand name
    for (auto* sc : {eval_cmd, dim_cmd, verify_cmd, sweep_cmd, count_cmd, oracle_cmd, det_cmd, table_cmd})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Output out;
        out.open(output_path);

        if (*eval_cmd || *dim_cmd) {
            const bool is_eval = static_cast<bool>(*eval_cmd);
            const auto family = parse_family(is_eval ? eval_family : dim_family,
                                             is_eval ? eval_negate : dim_negate);
            const auto lambda = ShiftedPartition::parse(is_eval ? eval_lambda : dim_lambda);
            Rational value;
            if (is_eval) {
                std::vector<Rational> roots;
                std::stringstream in(eval_roots);
                std::string tok;
                while (std::getline(in, tok, ',')) roots.push_back(Rational::parse(tok));
                const EvalPoint pt(std::move(roots));
                value = eval_character(family, lambda, pt, eval_extra_one);
            } else {
                value = dim_character(family, lambda);
            }
            if (format == "json") {
                json j;
                j["command"] = is_eval ? "eval" : "dim";
                j["family"] = is_eval ? eval_family : dim_family;
                j["lambda"] = lambda.str();
                j["value"] = value.str();
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << value.str() << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            const auto id = identity_from_string(v_id);
            if (!id) throw std::invalid_argument("unknown identity: " + v_id);
            IdentityParams p;
            p.lambda = ShiftedPartition::parse(v_lambda);
            if (!v_k.empty()) p.doubled_k = parse_doubled(v_k, "k");
            if (!v_k1.empty()) p.doubled_k1 = parse_doubled(v_k1, "k1");
            if (!v_k2.empty()) p.doubled_k2 = parse_doubled(v_k2, "k2");
            if (!v_a.empty()) p.doubled_a = parse_doubled(v_a, "a");
            if (v_b_opt->count()) p.b = v_b;
            if (v_m_opt->count()) p.m = v_m;
            p.n = v_n_opt->count() ? v_n : 0;
            p.n = infer_n(*id, p, v_n_opt->count() > 0);
            const auto rep = verify(*id, p, trials, seed);
            if (format == "json")
                out.stream() << report_json(rep).dump(2) << "\n";
            else
                emit_reports(out, format, {rep});
            return rep.failures == 0 ? 0 : 1;
        }

        if (*sweep_cmd) {
            const auto id = identity_from_string(s_id);
            if (!id) throw std::invalid_argument("unknown identity: " + s_id);
            SweepRanges r;
            r.n_min = s_n_min;
            r.n_max = s_n_max;
            r.max_doubled_integer = parse_doubled(s_max_entry, "max-entry");
            r.max_doubled_half = parse_doubled(s_max_entry_half, "max-entry-half");
            r.k_count = s_k_count;
            r.m_values = s_m_values;
            r.staircase_n = s_stair_n;
            r.include_integer = (s_parity != "half");
            r.include_half = (s_parity != "integer");
            const auto reports = sweep(*id, r, trials, seed);
            emit_reports(out, format, reports);
            for (const auto& rep : reports)
                if (rep.failures) return 1;
            return 0;
        }

        if (*count_cmd) {
            const auto family = parse_count_family(c_family, c_size);
            const Int value = count(family);
            if (format == "json") {
                json j;
                j["command"] = "count";
                j["family"] = family.str();
                j["value"] = value.get_str();
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << value.get_str() << "\n";
            }
            return 0;
        }

        if (*oracle_cmd) {
            const auto family = parse_count_family(o_family, o_size);
            const Int brute = brute_count(family);
            const Int product = count(family);
            const bool agree = brute == product;
            if (format == "json") {
                json j;
                j["command"] = "oracle";
                j["family"] = family.str();
                j["brute"] = brute.get_str();
                j["product"] = product.get_str();
                j["agree"] = agree;
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << family.str() << " brute=" << brute.get_str()
                             << " product=" << product.get_str() << (agree ? " agree" : " DISAGREE")
                             << "\n";
            }
            return agree ? 0 : 1;
        }

        if (*det_cmd) {
            const BlockDetId which = d_which == "d1"   ? BlockDetId::D1
                                     : d_which == "d2" ? BlockDetId::D2
                                                       : BlockDetId::D3;
            int failures = 0;
            for (int s = 0; s < d_seeds; ++s)
                if (!check_block_det(which, d_size, seed + static_cast<std::uint64_t>(s))) ++failures;
            if (format == "json") {
                json j;
                j["command"] = "detcheck";
                j["which"] = d_which;
                j["size"] = d_size;
                j["seeds"] = d_seeds;
                j["failures"] = failures;
                out.stream() << j.dump(2) << "\n";
            } else {
                out.stream() << d_which << " size=" << d_size << " seeds=" << d_seeds
                             << " failures=" << failures << "\n";
            }
            return failures == 0 ? 0 : 1;
        }

        if (*table_cmd) {
            bool any_failure = false;
            std::vector<VerificationReport> all;
            for (const auto& [id, name] : identity_names()) {
                SweepRanges r;
                for (const auto& rep : sweep(id, r, trials, seed)) {
                    any_failure = any_failure || rep.failures != 0;
                    all.push_back(rep);
                }
            }
            if (format == "json") {
                emit_reports(out, format, all);
            } else {
                // the table is the CSV sweep matrix regardless of text/csv
                out.stream() << kCsvReportHeader;
                for (const auto& rep : all) out.stream() << report_csv_row(rep);
            }
            return any_failure ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
