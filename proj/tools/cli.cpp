#include "cli.hpp"

#include "alcove/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>

namespace alcove {

namespace {

template <typename F>
VerificationReport timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep = f();
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << j.dump(2) << '\n';
}

RootType classical_type(const std::string& label) {
    const RootType t = parse_root_type(label);
    if (t != RootType::A && t != RootType::B && t != RootType::C && t != RootType::D)
        throw std::invalid_argument("type must be one of A, B, C, D");
    return t;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alcove walks, supersingular data and rank-one (phi^r, Gamma)-modules"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string json_path;
    std::uint64_t seed = 1;
    bool verbose = false;
    app.add_option("--json", json_path, "write the report as JSON to this file");
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_flag("-v,--verbose", verbose, "list passing checks as well");

    std::string type = "C", family = "C", case_name = "all", module_path;
    int d = 2, p = 3, r = 2, q = 0, count = 50;
    bool count_only = false, csv = false, no_round_trip = false, odd_middle = false;

    auto* verify = app.add_subcommand("verify", "matrix-model identities, gallery properties and straightness");
    verify->add_option("--type", type, "A, B, C, D, E6, E6dual or E7")->required();
    verify->add_option("--d", d, "rank")->required();
    verify->add_option("--p", p, "prime used for the numeric specialization")->default_val(3);

    auto* appendix = app.add_subcommand("appendix", "the E6 / E7 translation words");
    appendix->add_option("--case", case_name, "e6, e6dual, e7 or all")->default_val("all");

    auto* enumerate = app.add_subcommand("enumerate", "canonical representatives of the quotient sets");
    enumerate->add_option("--family", family, "C, B, D or A")->required();
    enumerate->add_option("--r", r, "Frobenius power")->required();
    enumerate->add_option("--p", p, "prime")->required();
    enumerate->add_option("--q", q, "size of the coefficient field (must equal p)");
    enumerate->add_flag("--count-only", count_only, "print counts only");
    enumerate->add_flag("--csv", csv, "print CSV rows instead of text");
    enumerate->add_flag("--include-odd-middle", odd_middle, "family B: keep points with an odd middle digit");

    auto* bijection = app.add_subcommand("bijection", "supersingular data versus classes of triples");
    bijection->add_option("--type", type, "A, B, C or D")->required();
    bijection->add_option("--d", d, "rank")->required();
    bijection->add_option("--p", p, "prime")->required();
    bijection->add_flag("--no-round-trip", no_round_trip, "skip constructing and classifying every summand");

    auto* classify = app.add_subcommand("classify-module", "classify a module given as JSON");
    classify->add_option("file", module_path, "JSON file with fields q, r, rank, phi_matrix, gamma")->required();

    auto* induction = app.add_subcommand("induction", "induction of random rank-one modules to phi-modules");
    induction->add_option("--count", count, "modules per (p, r)")->default_val(50);

    auto* properties = app.add_subcommand("properties", "rank-one grid, congruence and involution suites");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        VerificationReport rep;
        if (*verify) {
            rep = timed([&] { return verify_case(type, d, p); });
        } else if (*appendix) {
            std::vector<AppendixCase> cases;
            if (case_name == "all")
                cases = {AppendixCase::E6, AppendixCase::E6Dual, AppendixCase::E7};
            else
                cases = {parse_appendix_case(case_name)};
            rep = timed([&] {
                VerificationReport all;
                all.suite = "appendix";
                for (AppendixCase c : cases) {
                    all.append(appendix_report(c), appendix_label(c));
                    all.append(straightness_report(c), appendix_label(c));
                }
                return all;
            });
        } else if (*enumerate) {
            const ClassEnumeration e = enumerate_classes(parse_family(family), r, p, q, !odd_middle);
            nlohmann::json j{{"family", family_label(e.family)}, {"r", e.r}, {"p", e.p}, {"unreduced", e.unreduced_count},
                             {"classes", e.reps.size()}};
            if (e.family == Family::B) j["odd_middle_excluded"] = e.odd_middle_excluded;
            if (count_only) {
                out << "family " << family_label(e.family) << " r=" << e.r << " p=" << e.p << ": " << e.unreduced_count << " points, "
                    << e.reps.size() << " classes";
                if (e.family == Family::B) out << " (" << e.odd_middle_excluded << " points with odd middle digit excluded)";
                out << '\n';
            } else if (csv) {
                out << enumeration_csv(e);
            } else {
                for (std::size_t i = 0; i < e.reps.size(); ++i) {
                    const auto& pt = e.reps[i];
                    out << "n=" << pt.n() << " digits=";
                    for (std::size_t k = 0; k < pt.digits.size(); ++k) out << (k ? "," : "") << pt.digits[k];
                    out << " s=" << pt.s;
                    if (pt.family != Family::B) out << " xi=" << pt.xi;
                    out << " orbit=" << e.orbit_sizes[i] << '\n';
                }
                out << e.reps.size() << " classes\n";
            }
            if (!json_path.empty()) {
                nlohmann::json rows = nlohmann::json::array();
                for (std::size_t i = 0; i < e.reps.size(); ++i) {
                    nlohmann::json row = to_json(e.reps[i]);
                    row["orbit_size"] = e.orbit_sizes[i];
                    rows.push_back(row);
                }
                j["representatives"] = rows;
                write_json(json_path, j);
            }
            return 0;
        } else if (*bijection) {
            const RootType t = classical_type(type);
            rep = timed([&] { return verify_bijection(t, d, p, !no_round_trip); });
        } else if (*classify) {
            std::ifstream is(module_path);
            if (!is) throw std::invalid_argument("cannot read " + module_path);
            const nlohmann::json j = nlohmann::json::parse(is);
            const nlohmann::json result = classify_module_json(j);
            out << result.dump(2) << '\n';
            write_json(json_path, result);
            return 0;
        } else if (*induction) {
            rep = timed([&] { return induction_report(seed, count, {{3, 2}, {3, 3}}); });
        } else if (*properties) {
            rep = timed([&] {
                VerificationReport all;
                all.suite = "properties";
                all.append(rank_one_grid_report({{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}}));
                all.append(congruence_report());
                all.append(involution_algebra_report(3, {4, 6, 8}));
                return all;
            });
        }
        out << render_text(rep, verbose);
        write_json(json_path, to_json(rep));
        return rep.ok() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace alcove
