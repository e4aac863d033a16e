#pragma once

#include "frobkit/charfn.hpp"
#include "frobkit/finitespace.hpp"
#include "frobkit/homclass.hpp"
#include "frobkit/ratrecon.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace frobkit {

using Json = nlohmann::ordered_json;

// All rationals travel as strings "p" or "p/q"; no floating point anywhere.

inline Json scalar_vector_to_json(const std::vector<Scalar>& v) {
    Json arr = Json::array();
    for (const Scalar& x : v) arr.push_back(scalar_to_string(x));
    return arr;
}

inline std::vector<Scalar> scalar_vector_from_json(const Json& arr) {
    std::vector<Scalar> v;
    for (const auto& x : arr) v.push_back(parse_scalar(x.get<std::string>()));
    return v;
}

inline Json element_to_json(const Element& e) { return scalar_vector_to_json(e.coords); }

// ---------------------------------------------------------------------------
// Algebra / LinearMap / Element files
// ---------------------------------------------------------------------------

inline Json algebra_to_json(const Algebra& alg) {
    Json j;
    j["dim"] = alg.dim();
    j["basis"] = alg.basis_labels();
    j["unit"] = scalar_vector_to_json(alg.unit_coords());
    Json mul = Json::array();
    for (int i = 0; i < alg.dim(); ++i) {
        Json row = Json::array();
        for (int jx = 0; jx < alg.dim(); ++jx) {
            Json cell = Json::array();
            for (int k = 0; k < alg.dim(); ++k) cell.push_back(scalar_to_string(alg.c(i, jx, k)));
            row.push_back(std::move(cell));
        }
        mul.push_back(std::move(row));
    }
    j["mul"] = std::move(mul);
    return j;
}

inline AlgebraPtr algebra_from_json(const Json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
    std::vector<Scalar> unit = scalar_vector_from_json(j.at("unit"));
    const Json& mul = j.at("mul");
    if (static_cast<int>(mul.size()) != dim) throw Error("algebra JSON: mul must have dim rows");
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(dim) * dim * dim);
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != dim) throw Error("algebra JSON: mul rows must have dim cells");
        for (const auto& cell : row) {
            if (static_cast<int>(cell.size()) != dim)
                throw Error("algebra JSON: mul cells must have dim entries");
            for (const auto& x : cell) c.push_back(parse_scalar(x.get<std::string>()));
        }
    }
    return make_algebra(dim, std::move(labels), std::move(unit), std::move(c));
}

inline Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("parse error in '" + path.string() + "': " + e.what());
    }
}

inline void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

inline AlgebraPtr load_algebra(const std::filesystem::path& path) {
    return algebra_from_json(read_json_file(path));
}

/// LinearMap files carry the matrix plus file references for the domain and
/// codomain algebras, resolved relative to the map file's directory.
inline LinearMap load_linear_map(const std::filesystem::path& path) {
    const Json j = read_json_file(path);
    const auto resolve = [&](const std::string& ref) {
        std::filesystem::path p(ref);
        return p.is_absolute() ? p : path.parent_path() / p;
    };
    const AlgebraPtr domain = load_algebra(resolve(j.at("domain").get<std::string>()));
    const AlgebraPtr codomain = load_algebra(resolve(j.at("codomain").get<std::string>()));
    const Json& rows = j.at("matrix");
    Mat m(codomain->dim(), domain->dim());
    if (static_cast<int>(rows.size()) != codomain->dim())
        throw Error("linear map JSON: matrix row count must match codomain dim");
    for (int r = 0; r < codomain->dim(); ++r) {
        const Json& row = rows[r];
        if (static_cast<int>(row.size()) != domain->dim())
            throw Error("linear map JSON: matrix column count must match domain dim");
        for (int cidx = 0; cidx < domain->dim(); ++cidx)
            m(r, cidx) = parse_scalar(row[cidx].get<std::string>());
    }
    return LinearMap{domain, codomain, std::move(m)};
}

inline Json linear_map_to_json(const LinearMap& f, const std::string& domain_ref,
                               const std::string& codomain_ref) {
    Json j;
    j["matrix"] = Json::array();
    for (int r = 0; r < f.matrix.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < f.matrix.cols(); ++c) row.push_back(scalar_to_string(f.matrix(r, c)));
        j["matrix"].push_back(std::move(row));
    }
    j["domain"] = domain_ref;
    j["codomain"] = codomain_ref;
    return j;
}

inline Element load_element(const std::filesystem::path& path, const AlgebraPtr& alg) {
    const Json j = read_json_file(path);
    return make_element(alg, scalar_vector_from_json(j.at("coords")));
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json axiom_report_to_json(const AxiomReport& r) {
    Json j;
    j["valid"] = r.empty();
    Json comm = Json::array();
    for (const auto& v : r.commutativity) comm.push_back({v[0], v[1], v[2]});
    Json assoc = Json::array();
    for (const auto& v : r.associativity) assoc.push_back({v[0], v[1], v[2], v[3]});
    j["commutativity_violations"] = std::move(comm);
    j["associativity_violations"] = std::move(assoc);
    j["unit_law_violations"] = r.unit_law;
    return j;
}

inline Json series_to_json(const TruncatedSeries& s) {
    Json j;
    j["order"] = s.order;
    Json coeffs = Json::array();
    for (const Element& e : s.coeffs) coeffs.push_back(element_to_json(e));
    j["coeffs"] = std::move(coeffs);
    j["text"] = series_to_string(s);
    return j;
}

inline Json strategy_to_json(const Strategy& s) {
    Json j;
    if (s.kind == Strategy::Kind::basis) {
        j["kind"] = "basis";
    } else {
        j["kind"] = "randomized";
        j["samples"] = s.samples;
        j["seed"] = s.seed;
        j["require_certainty"] = s.require_certainty;
    }
    return j;
}

inline Json hom_report_to_json(const HomTestReport& r) {
    Json j;
    switch (r.verdict) {
        case HomTestReport::Verdict::pass: j["verdict"] = "pass"; break;
        case HomTestReport::Verdict::fail: j["verdict"] = "fail"; break;
        case HomTestReport::Verdict::inconclusive: j["verdict"] = "inconclusive"; break;
    }
    j["checked_bound"] = r.checked_bound;
    j["strategy"] = strategy_to_json(r.strategy);
    if (!r.note.empty()) j["note"] = r.note;
    j["failure_count"] = r.failure_count;
    Json witnesses = Json::array();
    for (const Witness& w : r.witnesses) {
        Json wj;
        wj["a"] = element_to_json(w.a);
        wj["k"] = w.k;
        wj["value"] = element_to_json(w.value);
        witnesses.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

inline Json rational_form_to_json(const RationalForm& f) {
    Json j;
    j["p"] = f.p;
    j["q"] = f.q;
    Json num = Json::array(), den = Json::array();
    for (const Element& e : f.numerator) num.push_back(element_to_json(e));
    for (const Element& e : f.denominator) den.push_back(element_to_json(e));
    j["numerator"] = std::move(num);
    j["denominator"] = std::move(den);
    j["certified_through"] = f.certified_through;
    return j;
}

inline Json signed_configuration_to_json(const SignedConfiguration& c, const FiniteSpace& space) {
    Json j;
    Json pos = Json::array(), neg = Json::array();
    for (int i : c.positive) pos.push_back(space.points[i]);
    for (int i : c.negative) neg.push_back(space.points[i]);
    j["positive"] = std::move(pos);
    j["negative"] = std::move(neg);
    return j;
}

inline Json sym_pq_space_to_json(const SymPQSpace& s) {
    Json j;
    j["points"] = s.space.points;
    j["p"] = s.p;
    j["q"] = s.q;
    j["class_count"] = s.classes.size();
    Json classes = Json::array();
    for (const SymPQClass& cls : s.classes) {
        Json cj;
        cj["canonical"] = signed_configuration_to_json(cls.canonical, s.space);
        cj["members"] = cls.class_members();
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    return j;
}

inline Json probe_report_to_json(const ProbeReport& r) {
    Json j;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["bound"] = r.bound;
    j["samples_per_test"] = r.samples_per_test;
    j["filtered_non_integral"] = r.filtered_non_integral;
    j["failed_test"] = r.failed_test;
    j["inside_image"] = r.inside_image;
    j["ev_image_all_pass"] = r.ev_image_all_pass;
    Json cands = Json::array();
    for (const ProbeCandidate& c : r.candidates_outside_image) {
        Json cj;
        cj["values"] = scalar_vector_to_json(c.values);
        cj["trial"] = c.trial;
        cj["trial_seed"] = c.trial_seed;
        cands.push_back(std::move(cj));
    }
    j["candidates_outside_image"] = std::move(cands);
    j["note"] = "experimental probe; no claim is made in either direction";
    return j;
}

} // namespace frobkit
