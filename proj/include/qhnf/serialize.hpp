#pragma once

#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"
#include "qhnf/blowup.hpp"
#include "qhnf/normalizer.hpp"
#include "qhnf/parse.hpp"

namespace qhnf {

using json = nlohmann::ordered_json;

/// A form as read from an input document. Without "Dmax" the polynomials are exact.
template <ExactField F>
struct FormInput {
    Weights w;
    int eps0 = 1;
    int eps_inf = 1;
    OneForm<F> form;
    std::optional<long> dmax;

    /// Precision of the jet: the declared Dmax, or the highest degree present.
    long precision() const {
        if (dmax) return *dmax;
        long hi = 0;
        for (const auto& [m, c] : form.a.terms()) hi = std::max(hi, qdeg(m, w.k, w.l) + w.k);
        for (const auto& [m, c] : form.b.terms()) hi = std::max(hi, qdeg(m, w.k, w.l) + w.l);
        return hi;
    }
    Jet<F> jet(long at_least = 0) const {
        return Jet<F>(form, w.k, w.l, dmax ? *dmax : std::max(precision(), at_least));
    }
};

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path.empty() ? "$" : path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path.empty() ? key : path + "." + key, "missing required field");
    return *it;
}

inline long int_field(const json& j, const std::string& key, const std::string& path) {
    const json& v = field(j, key, path);
    if (!v.is_number_integer()) throw SchemaError(path.empty() ? key : path + "." + key, "expected an integer");
    return v.get<long>();
}

inline std::string text_field(const json& j, const std::string& key, const std::string& path) {
    const json& v = field(j, key, path);
    if (!v.is_string()) throw SchemaError(path.empty() ? key : path + "." + key, "expected a string");
    return v.get<std::string>();
}

inline int flag_field(const json& j, const std::string& key, int fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer() || (v.get<long>() != 0 && v.get<long>() != 1)) throw SchemaError(key, "expected 0 or 1");
    return static_cast<int>(v.get<long>());
}

template <ExactField F>
BivPoly<F> poly_field(const json& j, const std::string& key, const std::string& path) {
    const std::string where = path.empty() ? key : path + "." + key;
    try {
        return parse_poly<F>(text_field(j, key, path));
    } catch (const ParseError& e) {
        throw SchemaError(where, e.what());
    }
}

template <ExactField F>
F scalar_text(const json& v, const std::string& where) {
    if (!v.is_string() && !v.is_number_integer()) throw SchemaError(where, "expected a scalar");
    try {
        return v.is_string() ? parse_scalar<F>(v.get<std::string>()) : F(v.get<long>());
    } catch (const ParseError& e) {
        throw SchemaError(where, e.what());
    }
}

}  // namespace detail

/// Reads {"k","l","epsilon0","epsilonInf","a","b"[,"Dmax"]}; absent axis flags are detected from q.
template <ExactField F>
FormInput<F> form_from_json(const json& j) {
    FormInput<F> in;
    const long k = detail::int_field(j, "k", ""), l = detail::int_field(j, "l", "");
    try {
        in.w = Weights::make(static_cast<int>(k), static_cast<int>(l));
    } catch (const NotCoprime& e) {
        throw SchemaError("k", e.what());
    }
    in.form = OneForm<F>{detail::poly_field<F>(j, "a", ""), detail::poly_field<F>(j, "b", "")};
    if (j.contains("Dmax")) {
        const long dm = detail::int_field(j, "Dmax", "");
        if (dm < 0) throw SchemaError("Dmax", "must be nonnegative");
        in.dmax = dm;
    }
    if (!j.contains("epsilon0") || !j.contains("epsilonInf")) {
        const auto [e0, ei] = detect_axes(in.jet());
        in.eps0 = e0;
        in.eps_inf = ei;
    }
    in.eps0 = detail::flag_field(j, "epsilon0", in.eps0);
    in.eps_inf = detail::flag_field(j, "epsilonInf", in.eps_inf);
    return in;
}

template <ExactField F>
json form_to_json(const FormInput<F>& in) {
    json j;
    j["k"] = in.w.k;
    j["l"] = in.w.l;
    j["epsilon0"] = in.eps0;
    j["epsilonInf"] = in.eps_inf;
    j["a"] = in.form.a.to_string(in.w.k, in.w.l);
    j["b"] = in.form.b.to_string(in.w.k, in.w.l);
    if (in.dmax) j["Dmax"] = *in.dmax;
    return j;
}

/// parse_form_file: the document at `path`, JSON syntax errors reported as SchemaError.
template <ExactField F>
FormInput<F> read_form_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SchemaError("$", "cannot open " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    return form_from_json<F>(j);
}

inline json type_to_json(const FoliationType& t) {
    return json{{"k", t.w.k}, {"l", t.w.l}, {"n", t.n}, {"epsilon0", t.eps0}, {"epsilonInf", t.eps_inf}, {"d", t.d()}};
}

inline FoliationType type_from_json(const json& j, const std::string& path) {
    try {
        return FoliationType::make(static_cast<int>(detail::int_field(j, "k", path)), static_cast<int>(detail::int_field(j, "l", path)),
                                   static_cast<int>(detail::int_field(j, "n", path)), detail::flag_field(j, "epsilon0", 1),
                                   detail::flag_field(j, "epsilonInf", 1));
    } catch (const NotCoprime& e) {
        throw SchemaError(path + ".k", e.what());
    }
}

template <ExactField F>
json spectral_to_json(const SpectralData<F>& s) {
    json j;
    j["c0"] = s.c0.to_string();
    j["c"] = json::array();
    for (const auto& c : s.c) j["c"].push_back(c.to_string());
    j["lambda"] = json::array();
    for (const auto& x : s.lambda) j["lambda"].push_back(x.to_string());
    j["lambda0"] = s.lambda0.to_string();
    j["lambdaInf"] = s.lambda_inf.to_string();
    return j;
}

template <ExactField F>
SpectralData<F> spectral_from_json(const json& j, const std::string& path) {
    SpectralData<F> s;
    s.c0 = detail::scalar_text<F>(detail::field(j, "c0", path), path + ".c0");
    for (const char* key : {"c", "lambda"}) {
        const json& arr = detail::field(j, key, path);
        if (!arr.is_array()) throw SchemaError(path + "." + key, "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            F v = detail::scalar_text<F>(arr[i], path + "." + key + "[" + std::to_string(i) + "]");
            (std::string(key) == "c" ? s.c : s.lambda).push_back(std::move(v));
        }
    }
    s.lambda0 = detail::scalar_text<F>(detail::field(j, "lambda0", path), path + ".lambda0");
    s.lambda_inf = detail::scalar_text<F>(detail::field(j, "lambdaInf", path), path + ".lambdaInf");
    return s;
}

/// {type, spec, h, s: [{j, valuation, coefficients[]}], Dmax}. Series entry i of row j is the
/// coefficient of x^{valuation + i} y^j, listed up to the precision of the form.
template <ExactField F>
json normal_form_to_json(const NormalForm<F>& nf) {
    const FoliationType& t = nf.type;
    const int k = t.w.k, l = t.w.l;
    json j;
    j["type"] = type_to_json(t);
    j["spec"] = spectral_to_json(nf.spec);
    j["h"] = nf.h.to_string(k, l);
    j["s"] = json::array();
    const long smax = nf.dmax - k - l;
    for (int row = 0; row <= k * t.n - 1; ++row) {
        const long val = radial_valuation(k, l, t.n, row);
        json coeffs = json::array();
        for (long i = val; static_cast<long>(k) * i + static_cast<long>(l) * row <= smax; ++i) {
            coeffs.push_back(nf.s.coeff(static_cast<int>(i), row).to_string());
        }
        j["s"].push_back(json{{"j", row}, {"valuation", val}, {"coefficients", coeffs}});
    }
    j["Dmax"] = nf.dmax;
    return j;
}

template <ExactField F>
NormalForm<F> normal_form_from_json(const json& j) {
    NormalForm<F> nf;
    nf.type = type_from_json(detail::field(j, "type", ""), "type");
    nf.spec = spectral_from_json<F>(detail::field(j, "spec", ""), "spec");
    nf.h = detail::poly_field<F>(j, "h", "");
    nf.dmax = detail::int_field(j, "Dmax", "");
    const json& rows = detail::field(j, "s", "");
    if (!rows.is_array()) throw SchemaError("s", "expected an array");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string where = "s[" + std::to_string(r) + "]";
        const long row = detail::int_field(rows[r], "j", where);
        const long val = detail::int_field(rows[r], "valuation", where);
        const json& coeffs = detail::field(rows[r], "coefficients", where);
        if (!coeffs.is_array()) throw SchemaError(where + ".coefficients", "expected an array");
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            nf.s.add_term(Mono{static_cast<int>(val + static_cast<long>(i)), static_cast<int>(row)},
                          detail::scalar_text<F>(coeffs[i], where + ".coefficients[" + std::to_string(i) + "]"));
        }
    }
    return nf;
}

template <ExactField F>
json gauge_to_json(const Gauge<F>& g, int k, int l) {
    return json{{"phiX", g.phi_x.to_string(k, l)}, {"phiY", g.phi_y.to_string(k, l)}, {"unit", g.unit.to_string(k, l)}};
}

template <ExactField F>
json pullback_to_json(const FactoredPullback<F>& p) {
    return json{{"divisorExpX", p.exp_x}, {"divisorExpY", p.exp_y}, {"strictA", p.strict.a.to_string()}, {"strictB", p.strict.b.to_string()}};
}

}  // namespace qhnf
