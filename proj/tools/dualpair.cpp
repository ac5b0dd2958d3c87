#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dualpair/dlp.hpp"
#include "dualpair/json_io.hpp"
#include "dualpair/p_pairing.hpp"
#include "dualpair/selfcheck.hpp"

using namespace dualpair;

namespace {

constexpr int kExitSearch = 2;
constexpr int kExitMath = 3;
constexpr int kExitLift = 4;
constexpr int kExitUsage = 64;
constexpr int kExitSelfcheckFailed = 1;

int exit_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::SearchExhausted: return kExitSearch;
    case ErrorCode::LiftDegenerate: return kExitLift;
    case ErrorCode::DegenerateEvaluation:
    case ErrorCode::BadTorsion:
    case ErrorCode::NotPTorsion:
    case ErrorCode::OrderAmbiguous:
    case ErrorCode::DivisionByZero:
    case ErrorCode::NonUnit:
    case ErrorCode::WitnessInconsistent: return kExitMath;
    default: break;
    }
    return kExitUsage;
}

void print_error(std::string_view code, const std::string& message) {
    json err = {{"error", {{"code", std::string(code)}, {"message", message}}}};
    std::cerr << err.dump() << '\n';
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorCode::BadInput, what + " is not valid JSON: " + e.what());
    }
}

json read_request_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorCode::BadInput, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    json j = parse_json_text(buf.str(), path);
    if (!j.is_object())
        raise(ErrorCode::BadInput, path + " must hold a JSON object");
    return j;
}

// Flag value wins over the request file; both use the same spelling.
std::optional<json> pick(const std::string& flag, const json& file, const char* key, bool flag_is_json) {
    if (!flag.empty())
        return flag_is_json ? parse_json_text(flag, std::string("--") + key) : json(flag);
    if (file.is_object() && file.contains(key))
        return file.at(key);
    return std::nullopt;
}

json require(const std::optional<json>& v, const char* name) {
    if (!v)
        raise(ErrorCode::BadInput, std::string("missing required input --") + name);
    return *v;
}

Point read_point(const Curve& C, const json& j) {
    if (j.is_string())
        return point_from_text(C, j.get<std::string>());
    return point_from_json(C, j);
}

std::string text_of(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

struct FindArgs {
    std::string min, max;
    std::size_t count = 1;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = kAnomalousTrialBudget;
};

struct PairArgs {
    std::string curve, point, k, method, file;
    std::uint64_t seed = kDefaultSeed;
};

struct DlpArgs {
    std::string curve, p_point, q_point, method, file;
    std::uint64_t seed = kDefaultSeed;
};

struct SelfcheckArgs {
    std::string p_max = "13";
    int trials = 100;
    std::uint64_t seed = kDefaultSeed;
};

json cmd_find_anomalous(const FindArgs& a) {
    mpz_class lo = integer_from_json(json(a.min));
    mpz_class hi = integer_from_json(json(a.max));
    if (lo <= 3)
        raise(ErrorCode::BadInput, "--min must exceed 3");
    json out = json::array();
    for (const Curve& C : find_anomalous(lo, hi, a.count, a.seed, a.budget))
        out.push_back(to_json(C));
    return out;
}

json cmd_pair(const PairArgs& a) {
    json file = a.file.empty() ? json::object() : read_request_file(a.file);
    Curve C = curve_from_json(require(pick(a.curve, file, "curve", true), "curve"));
    Point P = read_point(C, require(pick(a.point, file, "point", false), "point"));
    Fp k = element_from_json(C.field(), require(pick(a.k, file, "k", false), "k"));
    auto method = pick(a.method, file, "method", false);
    PairingMethod m = method ? parse_pairing_method(text_of(*method)) : PairingMethod::Rueck;
    return to_json(pairing(DualCurve(C), P, k, m, a.seed));
}

json cmd_dlp(const DlpArgs& a) {
    json file = a.file.empty() ? json::object() : read_request_file(a.file);
    Curve C = curve_from_json(require(pick(a.curve, file, "curve", true), "curve"));
    Point P = read_point(C, require(pick(a.p_point, file, "p-point", false), "p-point"));
    Point Q = read_point(C, require(pick(a.q_point, file, "q-point", false), "q-point"));
    auto method = pick(a.method, file, "method", false);
    AttackMethod m = method ? parse_attack_method(text_of(*method)) : AttackMethod::Rueck;
    return to_json(attack({C, P, Q}, m, a.seed));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairings and discrete logarithms on anomalous elliptic curves over dual numbers"};
    app.require_subcommand(1);

    FindArgs find;
    auto* find_cmd = app.add_subcommand("find-anomalous", "Search for curves with exactly p rational points");
    find_cmd->add_option("--min", find.min, "Smallest prime to consider (> 3)")->required();
    find_cmd->add_option("--max", find.max, "Largest prime to consider")->required();
    find_cmd->add_option("--count", find.count, "Number of distinct curves")->capture_default_str();
    find_cmd->add_option("--seed", find.seed, "RNG seed")->capture_default_str();
    find_cmd->add_option("--budget", find.budget, "Random curve trials before giving up")->capture_default_str();

    PairArgs pair;
    auto* pair_cmd = app.add_subcommand("pair", "Evaluate e(P, O_k) on the canonical lift");
    pair_cmd->add_option("--curve", pair.curve, R"(Curve as JSON {"p","A","B"})");
    pair_cmd->add_option("--point", pair.point, "P as x,y or inf");
    pair_cmd->add_option("--k", pair.k, "Theta coordinate k");
    pair_cmd->add_option("--method", pair.method, "direct | semaev | rueck (default rueck)");
    pair_cmd->add_option("--seed", pair.seed, "RNG seed for auxiliary points")->capture_default_str();
    pair_cmd->add_option("--file", pair.file, "JSON request with the same keys");

    DlpArgs dlp;
    auto* dlp_cmd = app.add_subcommand("dlp", "Solve Q = nP on an anomalous curve");
    dlp_cmd->add_option("--curve", dlp.curve, R"(Curve as JSON {"p","A","B"})");
    dlp_cmd->add_option("--p-point", dlp.p_point, "Base point P as x,y");
    dlp_cmd->add_option("--q-point", dlp.q_point, "Target Q as x,y or inf");
    dlp_cmd->add_option("--method", dlp.method, "semaev | rueck | pairing | lift (default rueck)");
    dlp_cmd->add_option("--seed", dlp.seed, "RNG seed")->capture_default_str();
    dlp_cmd->add_option("--file", dlp.file, "JSON request with the same keys");

    SelfcheckArgs check;
    auto* check_cmd = app.add_subcommand("selfcheck", "Run the invariant suite and print a JSON report");
    check_cmd->add_option("--p-max", check.p_max, "Largest prime in the curve sweep")->capture_default_str();
    check_cmd->add_option("--trials", check.trials, "Random instances per invariant")->capture_default_str();
    check_cmd->add_option("--seed", check.seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("Usage", e.what());
        return kExitUsage;
    }

    try {
        if (*find_cmd) {
            std::cout << cmd_find_anomalous(find).dump(2) << '\n';
        } else if (*pair_cmd) {
            std::cout << cmd_pair(pair).dump(2) << '\n';
        } else if (*dlp_cmd) {
            std::cout << cmd_dlp(dlp).dump(2) << '\n';
        } else if (*check_cmd) {
            SelfcheckOptions opts{integer_from_json(json(check.p_max)), check.trials, check.seed};
            SelfcheckReport report = run_selfcheck(opts);
            std::cout << to_json(report).dump(2) << '\n';
            return report.passed() ? 0 : kExitSelfcheckFailed;
        }
    } catch (const Error& e) {
        print_error(to_string(e.code()), e.what());
        return exit_code(e.code());
    } catch (const json::exception& e) {
        print_error("BadInput", e.what());
        return kExitUsage;
    }
    return 0;
}
