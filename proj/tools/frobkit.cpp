// frobkit command line front end: exact verification of characteristic
// functions, n- and p|q-homomorphism classification, symmetric power
// correspondences and generalized symmetric powers of finite spaces.
// All I/O is JSON with rationals as strings; no floating point.

#include "frobkit/acceptance.hpp"
#include "frobkit/io.hpp"
#include "frobkit/sympower.hpp"
#include "frobkit/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace frobkit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Output {
    std::string out_file;

    int emit(Json report, int exit_code, double ms) const {
        report["timing_ms"] = ms;
        if (out_file.empty())
            std::cout << report.dump(2) << '\n';
        else
            write_json_file(out_file, report);
        return exit_code;
    }
};

Json envelope(const std::string& command, Json config) {
    Json j;
    j["artifact"] = artifact_name;
    j["version"] = artifact_version;
    j["command"] = command;
    config["budget"] = enumeration_budget();
    j["config"] = std::move(config);
    return j;
}

/// Loads an algebra and gates it through the axiom check; inputs that violate
/// the axioms are rejected as input errors.
AlgebraPtr load_checked_algebra(const std::string& path) {
    AlgebraPtr alg = load_algebra(path);
    const AxiomReport report = check_algebra_axioms(*alg);
    if (!report.empty())
        throw Error("algebra '" + path + "' violates the axioms: " + axiom_report_to_json(report).dump());
    return alg;
}

LinearMap load_checked_map(const std::string& path) {
    const LinearMap f = load_linear_map(path);
    for (const AlgebraPtr& alg : {f.domain, f.codomain}) {
        const AxiomReport report = check_algebra_axioms(*alg);
        if (!report.empty())
            throw Error("algebra referenced by '" + path +
                        "' violates the axioms: " + axiom_report_to_json(report).dump());
    }
    return f;
}

int verdict_exit(const HomTestReport& report) {
    switch (report.verdict) {
        case HomTestReport::Verdict::pass: return kExitPass;
        case HomTestReport::Verdict::fail: return kExitFail;
        case HomTestReport::Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> split_points(const std::string& csv) {
    std::vector<std::string> points;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) points.push_back(item);
    return points;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frobkit: exact-arithmetic toolkit for characteristic functions of linear maps "
                 "between finite-dimensional commutative algebras"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--out", output.out_file, "Write the JSON report to a file instead of stdout");

    // --- check-algebra -----------------------------------------------------
    auto* cmd_check = app.add_subcommand("check-algebra", "Check the algebra axioms of an input file");
    std::string check_algebra_path;
    cmd_check->add_option("--algebra", check_algebra_path, "Algebra JSON file")->required();

    // --- charfn ------------------------------------------------------------
    auto* cmd_charfn = app.add_subcommand("charfn", "Expand the characteristic function of a map at an element");
    std::string charfn_map, charfn_elem, charfn_ber_method;
    int charfn_order = 12;
    bool charfn_at_infinity = false;
    cmd_charfn->add_option("--map", charfn_map, "LinearMap JSON file")->required();
    cmd_charfn->add_option("--elem", charfn_elem, "Element JSON file (in the map's domain)")->required();
    cmd_charfn->add_option("--order", charfn_order, "Truncation order (default 12)");
    cmd_charfn->add_flag("--at-infinity", charfn_at_infinity, "Also expand at infinity");
    cmd_charfn->add_option("--berezinian", charfn_ber_method,
                           "Also compute the Berezinian (nilpotent|reconstruction|auto)");

    // --- frobenius ---------------------------------------------------------
    auto* cmd_frob = app.add_subcommand("frobenius", "Evaluate the Frobenius map on a list of elements");
    std::string frob_map;
    std::vector<std::string> frob_elems;
    bool frob_no_memo = false;
    cmd_frob->add_option("--map", frob_map, "LinearMap JSON file")->required();
    cmd_frob->add_option("--elems", frob_elems, "Element JSON files")->required()->expected(-1);
    cmd_frob->add_flag("--no-memo", frob_no_memo, "Force the raw recursion (no memoization)");

    // --- classify ----------------------------------------------------------
    auto* cmd_classify = app.add_subcommand("classify", "Test n- or p|q-homomorphism, or detect degrees");
    std::string classify_map, classify_strategy = "basis";
    int classify_n = -1, classify_bound = 12, classify_samples = 200;
    std::vector<int> classify_pq, classify_detect;
    std::uint64_t classify_seed = 1;
    bool classify_certain = false;
    cmd_classify->add_option("--map", classify_map, "LinearMap JSON file")->required();
    cmd_classify->add_option("--n", classify_n, "Test for an n-homomorphism");
    cmd_classify->add_option("--pq", classify_pq, "Test for a p|q-homomorphism")->expected(2);
    cmd_classify->add_option("--detect", classify_detect, "Detect minimal degrees up to MAXP MAXQ")->expected(2);
    cmd_classify->add_option("--bound", classify_bound, "Verification bound (default 12)");
    cmd_classify->add_option("--strategy", classify_strategy, "basis|random (default basis)");
    cmd_classify->add_option("--samples", classify_samples, "Random strategy: sample count (default 200)");
    cmd_classify->add_option("--seed", classify_seed, "Random strategy: seed (default 1)");
    cmd_classify->add_flag("--certain", classify_certain,
                           "Demand certainty: randomized passes report inconclusive");

    // --- sympower ----------------------------------------------------------
    auto* cmd_sym = app.add_subcommand("sympower", "Symmetric power of an algebra and the f <-> F correspondence");
    std::string sym_algebra, sym_map, sym_elem;
    int sym_n = 1;
    bool sym_verify_key = false, sym_roundtrip = false;
    cmd_sym->add_option("--algebra", sym_algebra, "Algebra JSON file")->required();
    cmd_sym->add_option("--n", sym_n, "Power (default 1)")->required();
    cmd_sym->add_flag("--verify-key", sym_verify_key, "Verify F(det(1+L(a)z)) = R(f,a,z); needs --map and --elem");
    cmd_sym->add_flag("--roundtrip", sym_roundtrip, "Verify f -> F -> f; needs --map");
    cmd_sym->add_option("--map", sym_map, "LinearMap JSON file (an n-homomorphism)");
    cmd_sym->add_option("--elem", sym_elem, "Element JSON file");

    // --- sympq -------------------------------------------------------------
    auto* cmd_sympq = app.add_subcommand("sympq", "Generalized symmetric powers of a finite space");
    std::string sympq_points;
    int sympq_p = 0, sympq_q = 0, sympq_bound = 12;
    bool sympq_list = false, sympq_verify = false, sympq_probe = false;
    std::uint64_t sympq_trials = 1000, sympq_seed = 1;
    cmd_sympq->add_option("--points", sympq_points, "Comma-separated point labels")->required();
    cmd_sympq->add_option("--p", sympq_p, "Positive slots")->required();
    cmd_sympq->add_option("--q", sympq_q, "Negative slots")->required();
    cmd_sympq->add_flag("--list", sympq_list, "List the equivalence classes");
    cmd_sympq->add_flag("--verify", sympq_verify, "Verify well-definedness and the variety equations");
    cmd_sympq->add_flag("--probe", sympq_probe, "Randomized probe for functionals outside the image");
    cmd_sympq->add_option("--bound", sympq_bound, "Verification bound (default 12)");
    cmd_sympq->add_option("--trials", sympq_trials, "Probe trials (default 1000)");
    cmd_sympq->add_option("--seed", sympq_seed, "Probe seed (default 1)");

    // --- verify-all ----------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify-all", "Run the full verification suite");
    std::string verify_suite = "desk";
    bool inject_psi_sign_bug = false;
    cmd_verify->add_option("--suite", verify_suite, "desk|extended (default desk)");
    cmd_verify
        ->add_flag("--inject-psi-sign-bug", inject_psi_sign_bug,
                   "Mutation fixture: inject a psi sign error (the suite must then fail)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (*cmd_check) {
            const AlgebraPtr alg = load_algebra(check_algebra_path);
            const AxiomReport report = check_algebra_axioms(*alg);
            Json j = envelope("check-algebra", Json{{"algebra", check_algebra_path}});
            j["result"] = axiom_report_to_json(report);
            return output.emit(std::move(j), report.empty() ? kExitPass : kExitFail, ms_since(start));
        }

        if (*cmd_charfn) {
            const LinearMap f = load_checked_map(charfn_map);
            const Element a = load_element(charfn_elem, f.domain);
            Json config{{"map", charfn_map},
                        {"elem", charfn_elem},
                        {"order", charfn_order},
                        {"at_infinity", charfn_at_infinity},
                        {"berezinian", charfn_ber_method.empty() ? "none" : charfn_ber_method}};
            const CharFnExpansion r = char_function(f, a, charfn_order);
            Json result;
            result["series"] = series_to_json(r.series);
            Json psis = Json::array();
            for (const Element& e : r.psis) psis.push_back(element_to_json(e));
            result["psis"] = std::move(psis);
            const CharacterInfo ch = character(f);
            result["character"] = Json{{"value", element_to_json(ch.value)},
                                       {"integral", ch.integral},
                                       {"chi", ch.integral ? ch.chi.str() : Json()}};
            if (!charfn_ber_method.empty()) {
                BerezinianMethod method = BerezinianMethod::automatic;
                if (charfn_ber_method == "nilpotent") method = BerezinianMethod::nilpotent;
                else if (charfn_ber_method == "reconstruction") method = BerezinianMethod::reconstruction;
                else if (charfn_ber_method != "auto") throw Error("unknown Berezinian method '" + charfn_ber_method + "'");
                result["berezinian"] = element_to_json(berezinian(f, a, method));
            }
            if (charfn_at_infinity) {
                const InfinityExpansion inf = infinity_expansion(f, a, charfn_order);
                result["at_infinity"] = Json{{"character", inf.character.str()},
                                             {"berezinian", element_to_json(inf.berezinian)},
                                             {"tail", series_to_json(inf.tail)}};
            }
            Json j = envelope("charfn", std::move(config));
            j["result"] = std::move(result);
            return output.emit(std::move(j), kExitPass, ms_since(start));
        }

        if (*cmd_frob) {
            const LinearMap f = load_checked_map(frob_map);
            std::vector<Element> args;
            for (const std::string& path : frob_elems) args.push_back(load_element(path, f.domain));
            const Element value =
                frobenius_map(f, args, frob_no_memo ? MemoMode::none : MemoMode::multiset);
            Json j = envelope("frobenius", Json{{"map", frob_map},
                                                {"elems", frob_elems},
                                                {"k", args.size()},
                                                {"memo", !frob_no_memo}});
            j["result"] = Json{{"value", element_to_json(value)}};
            return output.emit(std::move(j), kExitPass, ms_since(start));
        }

        if (*cmd_classify) {
            const LinearMap f = load_checked_map(classify_map);
            Strategy strategy = Strategy::basis();
            if (classify_strategy == "random")
                strategy = Strategy::randomized(classify_samples, classify_seed, classify_certain);
            else if (classify_strategy != "basis")
                throw Error("unknown strategy '" + classify_strategy + "'");
            Json config{{"map", classify_map},
                        {"bound", classify_bound},
                        {"strategy", strategy_to_json(strategy)}};
            Json result;
            int exit_code = kExitUsage;
            if (classify_n >= 0) {
                config["mode"] = Json{{"n", classify_n}};
                const HomTestReport report = is_n_hom(f, classify_n, classify_bound, strategy);
                result = hom_report_to_json(report);
                exit_code = verdict_exit(report);
            } else if (!classify_pq.empty()) {
                config["mode"] = Json{{"p", classify_pq[0]}, {"q", classify_pq[1]}};
                const HomTestReport report =
                    is_pq_hom(f, classify_pq[0], classify_pq[1], classify_bound, strategy);
                result = hom_report_to_json(report);
                exit_code = verdict_exit(report);
            } else if (!classify_detect.empty()) {
                config["mode"] = Json{{"detect_max_p", classify_detect[0]}, {"detect_max_q", classify_detect[1]}};
                if (!is_function_algebra(*f.codomain))
                    throw Error("degree detection needs a split codomain");
                // Detection is per element; probe at a = sum (i+1) e_i, whose
                // distinct coordinates avoid accidental cancellations for
                // evaluation combinations.
                const int order = std::max(12, classify_detect[0] + classify_detect[1] + 1);
                Element probe = zero_element(f.domain);
                for (int i = 0; i < f.domain->dim(); ++i) probe.coords[i] = i + 1;
                const auto deg = detect_degrees(char_function(f, probe, order).series,
                                                classify_detect[0], classify_detect[1]);
                result["probe_element"] = element_to_json(probe);
                if (deg) {
                    result["p"] = deg->first;
                    result["q"] = deg->second;
                    exit_code = kExitPass;
                } else {
                    result["p"] = Json();
                    result["q"] = Json();
                    exit_code = kExitFail;
                }
            } else {
                throw Error("classify: one of --n, --pq, --detect is required");
            }
            Json j = envelope("classify", std::move(config));
            j["result"] = std::move(result);
            return output.emit(std::move(j), exit_code, ms_since(start));
        }

        if (*cmd_sym) {
            const AlgebraPtr alg = load_checked_algebra(sym_algebra);
            const SymPowerAlgebra sp = sym_power_algebra(alg, sym_n);
            Json config{{"algebra", sym_algebra},
                        {"n", sym_n},
                        {"verify_key", sym_verify_key},
                        {"roundtrip", sym_roundtrip},
                        {"map", sym_map},
                        {"elem", sym_elem}};
            Json result;
            result["dim"] = sp.algebra->dim();
            result["basis"] = sp.algebra->basis_labels();
            int exit_code = kExitPass;
            if (sym_verify_key || sym_roundtrip) {
                if (sym_map.empty()) throw Error("sympower: --map is required for --verify-key/--roundtrip");
                const LinearMap f = load_checked_map(sym_map);
                if (sym_roundtrip) {
                    const LinearMap F = br_F_from_f(sp, f);
                    const bool multiplicative = is_algebra_hom_on_sym(sp, F);
                    const bool back = same_map(br_f_from_F(sp, F), f);
                    result["roundtrip"] = Json{{"F_multiplicative", multiplicative}, {"f_recovered", back}};
                    if (!multiplicative || !back) exit_code = kExitFail;
                }
                if (sym_verify_key) {
                    if (sym_elem.empty()) throw Error("sympower: --elem is required for --verify-key");
                    const Element a = load_element(sym_elem, alg);
                    const bool ok = verify_key_formula(sp, f, a);
                    result["key_formula"] = ok;
                    if (!ok) exit_code = kExitFail;
                }
            }
            Json j = envelope("sympower", std::move(config));
            j["result"] = std::move(result);
            return output.emit(std::move(j), exit_code, ms_since(start));
        }

        if (*cmd_sympq) {
            const FiniteSpace space = make_finite_space(split_points(sympq_points));
            Json config{{"points", space.points}, {"p", sympq_p},       {"q", sympq_q},
                        {"bound", sympq_bound},   {"trials", sympq_trials}, {"seed", sympq_seed},
                        {"list", sympq_list},     {"verify", sympq_verify}, {"probe", sympq_probe}};
            Json result;
            int exit_code = kExitPass;
            if (sympq_probe) {
                const ProbeReport report =
                    open_question_probe(space, sympq_p, sympq_q, sympq_trials, sympq_seed, sympq_bound);
                result = probe_report_to_json(report);
                // Reporting only: candidates are findings, not a fail verdict.
                exit_code = kExitPass;
            } else {
                const SymPQSpace s = enumerate_sym_pq(space, sympq_p, sympq_q);
                result = sym_pq_space_to_json(s);
                if (sympq_verify) {
                    const bool well_defined = verify_ev_well_defined(s);
                    bool all_pass = true;
                    Json reports = Json::array();
                    for (const SymPQClass& cls : s.classes) {
                        const HomTestReport report =
                            verify_variety_equations(cls, space, sympq_p, sympq_q, sympq_bound);
                        if (!report.passed()) all_pass = false;
                        Json rj;
                        rj["canonical"] = signed_configuration_to_json(cls.canonical, space);
                        rj["report"] = hom_report_to_json(report);
                        reports.push_back(std::move(rj));
                    }
                    result["ev_well_defined"] = well_defined;
                    result["variety_reports"] = std::move(reports);
                    if (!well_defined || !all_pass) exit_code = kExitFail;
                }
            }
            Json j = envelope("sympq", std::move(config));
            j["result"] = std::move(result);
            return output.emit(std::move(j), exit_code, ms_since(start));
        }

        if (*cmd_verify) {
            acceptance::SuiteParams params;
            if (verify_suite == "desk") params = acceptance::desk_params();
            else if (verify_suite == "extended") params = acceptance::extended_params();
            else throw Error("unknown suite '" + verify_suite + "'");
            Json config{{"suite", params.name}, {"inject_psi_sign_bug", inject_psi_sign_bug}};
            Json criteria = Json::array();
            bool all_pass = true;
            int first_failure = 0;
            std::string first_failure_name;
            for (int id = 1; id <= 11; ++id) {
                const acceptance::CriterionResult r = acceptance::run_criterion(id, params, inject_psi_sign_bug);
                std::fprintf(stderr, "[%2d/11] %s %s (%.0f ms) %s\n", r.id, r.pass ? "PASS" : "FAIL",
                             r.name.c_str(), r.ms, r.detail.c_str());
                if (!r.pass && !first_failure) {
                    first_failure = r.id;
                    first_failure_name = r.name;
                }
                all_pass = all_pass && r.pass;
                criteria.push_back(Json{{"id", r.id},
                                        {"name", r.name},
                                        {"pass", r.pass},
                                        {"detail", r.detail},
                                        {"ms", r.ms}});
            }
            Json j = envelope("verify-all", std::move(config));
            j["result"] = Json{{"criteria", std::move(criteria)},
                               {"all_pass", all_pass},
                               {"first_failure", all_pass ? Json() : Json(first_failure)},
                               {"first_failure_name", all_pass ? Json() : Json(first_failure_name)}};
            if (!all_pass)
                std::fprintf(stderr, "FAILED at criterion %d (%s)\n", first_failure,
                             first_failure_name.c_str());
            return output.emit(std::move(j), all_pass ? kExitPass : kExitFail, ms_since(start));
        }
    } catch (const Error& e) {
        Json j;
        j["artifact"] = artifact_name;
        j["version"] = artifact_version;
        j["error"] = e.what();
        std::cout << j.dump(2) << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        Json j;
        j["artifact"] = artifact_name;
        j["version"] = artifact_version;
        j["error"] = std::string("internal error: ") + e.what();
        std::cout << j.dump(2) << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
