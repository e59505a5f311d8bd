// Command-line front end.  Every subcommand prints a JSON artifact on stdout
// (and optionally to a file); the orbit oracles additionally write a CSV
// census.  Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 budget refusal.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "corona/json_io.hpp"
#include "corona/matchings.hpp"
#include "corona/orbits.hpp"
#include "corona/quiver.hpp"
#include "corona/roots.hpp"
#include "corona/sequences.hpp"
#include "corona/verify.hpp"

namespace {

using corona::BigInt;
using corona::BigRat;
using nlohmann::json;
namespace fieldmat = corona::fieldmat;
namespace jio = corona::json_io;
namespace matchings = corona::matchings;
namespace orbits = corona::orbits;
namespace quiver = corona::quiver;
namespace roots = corona::roots;
namespace sequences = corona::sequences;
namespace verify = corona::verify;

matchings::Matching parse_matching(const std::string& text) {
    return jio::matching_from_json(json::parse(text));
}

void emit_text(const std::string& text, const std::string& output_path) {
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) throw std::invalid_argument("cannot open output file " + output_path);
        out << text;
    }
    std::cout << text;
}

void emit(const json& artifact, const std::string& output_path) {
    emit_text(artifact.dump(2) + "\n", output_path);
}

std::string csv_quote(const std::string& cell) {
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string output_directory(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("CORONA_OUTPUT_DIR"); env && *env) return env;
    return ".";
}

struct OracleParams {
    int m = 0, n = 0, q = 2;
    int threads = 1;
    int samples = 25;
    uint64_t seed = 2024;
    bool budget_override = false;
    long long budget = 2'000'000;
    std::string out_dir_flag;
};

int run_oracle(const std::string& mode, const OracleParams& p) {
    if (mode == "sp" && (p.m % 2 != 0 || p.n % 2 != 0))
        throw std::invalid_argument("symplectic oracle needs even dimensions (2m', 2n')");
    if (mode == "so" && (p.m % 2 != 0 || p.n % 2 == 0))
        throw std::invalid_argument("orthogonal oracle needs dimensions (2m', 2n'+1)");

    orbits::CensusOptions opt;
    opt.threads = p.threads;
    opt.samples_per_orbit = p.samples;
    opt.seed = p.seed;
    opt.budget = p.budget;
    opt.budget_override = p.budget_override;
    orbits::Partition part = orbits::borel_partition(p.m, p.n, p.q, opt);
    if (mode == "sp") orbits::mark_fixed_points(part, orbits::FormKind::Symplectic, p.threads);
    if (mode == "so") orbits::mark_fixed_points(part, orbits::FormKind::SymmetricSplit, p.threads);

    // combinatorial cross-checks for the fixed-point modes
    json mismatches = json::array();
    long long fixed_count = 0;
    for (size_t o = 0; o < part.orbits.size(); ++o) {
        const orbits::OrbitInfo& orb = part.orbits[o];
        if (mode == "gl") continue;
        matchings::Matching signed_tag = matchings::relabel_to_signed(orb.tag);
        bool invariant = matchings::minus_matching(signed_tag) == signed_tag;
        bool predicted = mode == "sp"
                             ? invariant && matchings::horizontal_edges(signed_tag).empty()
                             : invariant;
        bool found = mode == "sp" ? orb.has_sp_point : orb.has_so_point;
        if (found) ++fixed_count;
        if (found != predicted)
            mismatches.push_back({{"orbit_id", static_cast<long long>(o)},
                                  {"found", found},
                                  {"predicted", predicted}});
    }

    bool certified = part.bijection_certified();
    bool match = certified && mismatches.empty();

    std::ostringstream csv;
    csv << "orbit_id,size,matching_json,has_sp_point,has_so_point\n";
    for (size_t o = 0; o < part.orbits.size(); ++o) {
        const orbits::OrbitInfo& orb = part.orbits[o];
        csv << o << "," << orb.size << ","
            << csv_quote(jio::matching_to_json(orb.tag).dump()) << ",";
        if (mode == "sp") csv << (orb.has_sp_point ? 1 : 0);
        csv << ",";
        if (mode == "so") csv << (orb.has_so_point ? 1 : 0);
        csv << "\n";
    }

    json summary{{"m", p.m},
                 {"n", p.n},
                 {"q", p.q},
                 {"total_points", jio::big_string(BigInt(part.total_points()))},
                 {"orbit_count", jio::big_string(BigInt(part.orbits.size()))},
                 {"expected_count", jio::big_string(part.expected_orbits)},
                 {"match", match}};
    if (mode != "gl") {
        summary["fixed_orbit_count"] = jio::big_string(BigInt(fixed_count));
        summary["predicate_mismatches"] = mismatches;
    }

    std::string stem = output_directory(p.out_dir_flag) + "/oracle_" + mode + "_m" +
                       std::to_string(p.m) + "_n" + std::to_string(p.n) + "_q" +
                       std::to_string(p.q);
    {
        std::ofstream out(stem + ".csv");
        if (!out) throw std::invalid_argument("cannot write " + stem + ".csv");
        out << csv.str();
    }
    emit(summary, stem + ".json");
    return match ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"corona matchings, quiver classification, and Borel orbit censuses"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string variant = "plain", matching_text, matrix_text, output, suite = "all";
    std::string format = "json";
    int p = 0, k = 0, m = 0, n = 0, q = 2, extra = 2, threads = 1;

    auto* cmd_count = app.add_subcommand("count", "count k-matchings of a corona graph");
    cmd_count->add_option("--variant", variant, "plain|double|signed|signed0");
    cmd_count->add_option("--p", p, "number of core vertices")->required();
    cmd_count->add_option("--k", k, "matching size")->required();
    cmd_count->add_option("--format", format, "json (default) or csv value table");
    cmd_count->add_option("--output", output, "also write the artifact to this file");
    cmd_count->callback([&] {
        action = [&]() -> int {
            matchings::GraphSpec spec{matchings::variant_from_name(variant), p};
            BigInt enumerated = matchings::count_matchings(spec, k);
            if (format == "json") {
                emit(json{{"count", jio::big_string(enumerated)}}, output);
                return 0;
            }
            if (format != "csv") throw std::invalid_argument("format must be json or csv");
            // one row per independent computation path; values must agree
            std::ostringstream csv;
            csv << "family,p,k,value,provenance\n";
            std::string family = matchings::variant_name(spec.variant);
            if (spec.variant == matchings::Variant::Plain) family = "a";
            if (spec.variant == matchings::Variant::Double) family = "c";
            csv << family << "," << p << "," << k << "," << jio::big_string(enumerated)
                << ",enumerated\n";
            if (spec.variant == matchings::Variant::Plain ||
                spec.variant == matchings::Variant::Double) {
                BigInt recurred = spec.variant == matchings::Variant::Plain
                                      ? sequences::a_count(p, k)
                                      : sequences::c_count(p, k);
                csv << family << "," << p << "," << k << "," << jio::big_string(recurred)
                    << ",recurrence\n";
                if (recurred != enumerated)
                    throw std::runtime_error("recurrence disagrees with enumeration at " +
                                             family + "(" + std::to_string(p) + "," +
                                             std::to_string(k) + ")");
            }
            emit_text(csv.str(), output);
            return 0;
        };
    });

    auto* cmd_enum = app.add_subcommand("enumerate", "list k-matchings in canonical order");
    cmd_enum->add_option("--variant", variant, "plain|double|signed|signed0");
    cmd_enum->add_option("--p", p, "number of core vertices")->required();
    cmd_enum->add_option("--k", k, "matching size")->required();
    cmd_enum->add_option("--output", output, "also write the JSON to this file");
    cmd_enum->callback([&] {
        action = [&]() -> int {
            matchings::GraphSpec spec{matchings::variant_from_name(variant), p};
            json arr = json::array();
            for (const matchings::Matching& s : matchings::enumerate_matchings(spec, k))
                arr.push_back(jio::matching_to_json(s));
            emit(json{{"graph", {{"variant", matchings::variant_name(spec.variant)}, {"p", p}}},
                      {"k", k},
                      {"count", arr.size()},
                      {"matchings", arr}},
                 output);
            return 0;
        };
    });

    auto* cmd_roots = app.add_subcommand(
        "roots", "admissible roots at (m, n), or the decomposition of a matching");
    cmd_roots->add_option("--m", m, "first branch dimension")->required();
    cmd_roots->add_option("--n", n, "second branch dimension")->required();
    cmd_roots->add_option("--matching", matching_text, "matching JSON to decompose");
    cmd_roots->add_option("--output", output, "also write the JSON to this file");
    cmd_roots->callback([&] {
        action = [&]() -> int {
            if (!matching_text.empty()) {
                roots::RootSet rs =
                    roots::matching_to_rootset(parse_matching(matching_text), m, n);
                roots::ValidationResult val = roots::validate_decomposition(rs, m, n);
                if (!val.ok) throw std::runtime_error(val.reason);
                emit(jio::rootset_to_json(rs, m, n), output);
                return 0;
            }
            json arr = json::array();
            for (const roots::AdmissibleRoot& r : roots::admissible_roots(m, n)) {
                roots::DimVector dv = roots::root_dimension_vector(r, m, n);
                json entry = jio::root_to_json(r);
                entry["dim"] = {{"flag", dv.flag}, {"a", dv.branch_a}, {"b", dv.branch_b}};
                arr.push_back(entry);
            }
            emit(json{{"m", m}, {"n", n}, {"roots", arr}}, output);
            return 0;
        };
    });

    auto* cmd_rep = app.add_subcommand("rep", "orbit representative matrices");
    cmd_rep->require_subcommand(1);
    auto* rep_binary = cmd_rep->add_subcommand("binary", "binary representative for a matching");
    rep_binary->add_option("--m", m, "first branch dimension")->required();
    rep_binary->add_option("--n", n, "second branch dimension")->required();
    rep_binary->add_option("--q", q, "field size");
    rep_binary->add_option("--matching", matching_text, "plain-corona matching JSON")->required();
    rep_binary->add_option("--output", output, "also write the JSON to this file");
    rep_binary->callback([&] {
        action = [&]() -> int {
            matchings::Matching s = parse_matching(matching_text);
            fieldmat::Mat g = quiver::binary_representative(s, m, n, q);
            emit(json{{"provenance", "binary"},
                      {"m", m},
                      {"n", n},
                      {"matching", jio::matching_to_json(s)},
                      {"matrix", jio::mat_to_json(g)}},
                 output);
            return 0;
        };
    });
    auto* rep_sym = cmd_rep->add_subcommand(
        "symplectic", "fixed representative for an invariant horizontal-free signed matching");
    rep_sym->add_option("--q", q, "odd field size");
    rep_sym->add_option("--matching", matching_text, "signed-corona matching JSON")->required();
    rep_sym->add_option("--output", output, "also write the JSON to this file");
    rep_sym->callback([&] {
        action = [&]() -> int {
            matchings::Matching s = parse_matching(matching_text);
            fieldmat::Mat g = quiver::symplectic_representative(s, q);
            emit(json{{"provenance", "symplectic"},
                      {"matching", jio::matching_to_json(s)},
                      {"matrix", jio::mat_to_json(g)}},
                 output);
            return 0;
        };
    });

    auto* cmd_classify =
        app.add_subcommand("classify", "matching tag of the point g * (leading split)");
    cmd_classify->add_option("--m", m, "first branch dimension")->required();
    cmd_classify->add_option("--n", n, "second branch dimension")->required();
    cmd_classify->add_option("--matrix", matrix_text, "matrix JSON for the group element")
        ->required();
    cmd_classify->add_option("--output", output, "also write the JSON to this file");
    cmd_classify->callback([&] {
        action = [&]() -> int {
            fieldmat::Mat g = jio::mat_from_json(json::parse(matrix_text));
            quiver::VarietyPoint pt =
                quiver::point_of_matrix(g, quiver::leading_split_positions(m, n));
            emit(jio::matching_to_json(quiver::classify_point(pt)), output);
            return 0;
        };
    });

    auto* cmd_dual = app.add_subcommand("dual", "pendant-complement dual of a plain matching");
    cmd_dual->add_option("--matching", matching_text, "plain-corona matching JSON")->required();
    cmd_dual->add_option("--output", output, "also write the JSON to this file");
    cmd_dual->callback([&] {
        action = [&]() -> int {
            emit(jio::matching_to_json(matchings::dual_matching(parse_matching(matching_text))),
                 output);
            return 0;
        };
    });

    auto* cmd_minus = app.add_subcommand("minus", "label negation of a signed matching");
    cmd_minus->add_option("--matching", matching_text, "signed-corona matching JSON")->required();
    cmd_minus->add_option("--output", output, "also write the JSON to this file");
    cmd_minus->callback([&] {
        action = [&]() -> int {
            emit(jio::matching_to_json(matchings::minus_matching(parse_matching(matching_text))),
                 output);
            return 0;
        };
    });

    OracleParams op;
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force Borel orbit censuses");
    cmd_oracle->require_subcommand(1);
    std::string oracle_mode;
    for (const char* mode : {"gl", "sp", "so"}) {
        auto* sub = cmd_oracle->add_subcommand(
            mode, mode == std::string("gl") ? "orbit census against the matching count"
                                            : "census plus fixed-point scan");
        sub->add_option("--m", op.m, "first subspace dimension")->required();
        sub->add_option("--n", op.n, "second subspace dimension")->required();
        sub->add_option("--q", op.q, "field size");
        sub->add_option("--threads", op.threads, "worker threads");
        sub->add_option("--seed", op.seed, "sampling seed");
        sub->add_option("--samples", op.samples, "tag samples per orbit");
        sub->add_option("--budget", op.budget, "maximum point-set size");
        sub->add_flag("--budget-override", op.budget_override, "allow larger point sets");
        sub->add_option("--output-dir", op.out_dir_flag,
                        "census directory (default $CORONA_OUTPUT_DIR or .)");
        sub->callback([&, mode] {
            oracle_mode = mode;
            action = [&]() -> int { return run_oracle(oracle_mode, op); };
        });
    }

    auto* cmd_bpoly = app.add_subcommand("bpoly", "exact interpolation of the b sequence");
    cmd_bpoly->add_option("--n", n, "fixed second parameter")->required();
    cmd_bpoly->add_option("--extra", extra, "extra prediction points to verify");
    cmd_bpoly->add_option("--format", format, "json report (default) or csv value table");
    cmd_bpoly->add_option("--output", output, "also write the artifact to this file");
    cmd_bpoly->callback([&] {
        action = [&]() -> int {
            sequences::InterpolationReport rep = sequences::interpolate_b(n, extra);
            if (format == "csv") {
                // the b values behind the interpolation, one row per
                // computation path; interpolate_b already enforced agreement
                std::ostringstream csv;
                csv << "family,m,n,value,provenance\n";
                for (int mm = 0; mm <= 2 * n + 1 + extra; ++mm) {
                    csv << "b," << mm << "," << n << ","
                        << jio::big_string(sequences::b_enumerate(mm, n))
                        << ",enumerated\n";
                    csv << "b," << mm << "," << n << ","
                        << jio::big_string(sequences::b_identity(mm, n)) << ",identity\n";
                }
                emit_text(csv.str(), output);
                return 0;
            }
            if (format != "json") throw std::invalid_argument("format must be json or csv");
            json coeffs = json::array();
            for (const BigRat& c : rep.poly.coeff) coeffs.push_back(jio::rat_string(c));
            emit(json{{"n", rep.n},
                      {"degree", rep.poly.degree()},
                      {"coefficients", coeffs},
                      {"leading", jio::rat_string(rep.poly.leading())},
                      {"integral", rep.poly.integral()},
                      {"predictions_checked", rep.extra}},
                 output);
            return 0;
        };
    });

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", suite,
                           "all|census|roundtrip|minus|sp|so|recurrences|quotient|"
                           "inequalities|bpoly|tripwires");
    cmd_verify->add_option("--threads", threads, "worker threads");
    cmd_verify->callback([&] {
        action = [&]() -> int {
            std::vector<verify::CriterionResult> results = verify::run_suite(suite, threads);
            bool all_pass = true;
            for (const verify::CriterionResult& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name
                          << "  " << r.detail << "\n";
                all_pass = all_pass && r.pass;
            }
            std::cout << (all_pass ? "all criteria passed" : "criteria FAILED") << "\n";
            return all_pass ? 0 : 2;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return action();
    } catch (const orbits::BudgetExceeded& e) {
        std::cerr << json{{"error", "budget"}, {"message", e.what()}}.dump() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "verification"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
}
