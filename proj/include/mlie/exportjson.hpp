#pragma once

// Structure-constants export: a canonical JSON document with sorted keys,
// stable basis order and nonzero coefficients only, so that
// export -> import -> export is byte-identical.

#include <json.hpp>

#include "structure.hpp"

namespace mlie {

inline std::string tool_version() { return "liek 1.0"; }

template <class F>
std::string coeff_to_string(const F& c) {
    return c.str();
}

template <class F>
F coeff_from_json(const nlohmann::json& j) {
    if constexpr (F::characteristic == 0) {
        return F(mpq_class(j.get<std::string>()));
    } else {
        return F(static_cast<long>(j.get<long>()));
    }
}

template <class F>
nlohmann::json coeff_to_json(const F& c) {
    if constexpr (F::characteristic == 0) return c.str();
    else return static_cast<long>(c.v);
}

template <class F>
nlohmann::json export_constants(const StructConsts<F>& sc, const std::string& algebra,
                                const std::string& parameters) {
    nlohmann::json j;
    j["field"]["p"] = F::characteristic;
    j["dimension"] = sc.dim();
    auto& basis = j["basis"] = nlohmann::json::array();
    for (auto& b : sc.basis) {
        nlohmann::json e;
        e["label"] = b.label;
        e["parity"] = b.parity;
        e["degree"] = b.degree;
        e["weight"] = b.weight;
        basis.push_back(std::move(e));
    }
    auto& br = j["brackets"] = nlohmann::json::array();
    for (auto& [key, val] : sc.brackets) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(key.first);
        row.push_back(key.second);
        nlohmann::json coeffs = nlohmann::json::array();
        for (auto& [k, c] : val) coeffs.push_back(nlohmann::json::array({k, coeff_to_json(c)}));
        row.push_back(std::move(coeffs));
        br.push_back(std::move(row));
    }
    auto& sq = j["squares"] = nlohmann::json::array();
    for (auto& [i, val] : sc.squares) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(i);
        nlohmann::json coeffs = nlohmann::json::array();
        for (auto& [k, c] : val) coeffs.push_back(nlohmann::json::array({k, coeff_to_json(c)}));
        row.push_back(std::move(coeffs));
        sq.push_back(std::move(row));
    }
    j["provenance"]["algebra"] = algebra;
    j["provenance"]["parameters"] = parameters;
    j["provenance"]["tool"] = tool_version();
    return j;
}

template <class F>
StructConsts<F> import_constants(const nlohmann::json& j, std::string* algebra = nullptr,
                                 std::string* parameters = nullptr) {
    if (j.at("field").at("p").get<unsigned>() != F::characteristic)
        throw std::invalid_argument("import: field mismatch");
    StructConsts<F> sc;
    sc.p = F::characteristic;
    size_t n = j.at("dimension").get<size_t>();
    for (auto& e : j.at("basis")) {
        typename StructConsts<F>::BasisInfo b;
        b.label = e.at("label").get<std::string>();
        b.parity = e.at("parity").get<int>();
        b.degree = e.at("degree").get<int>();
        b.weight = e.at("weight").get<std::vector<int>>();
        sc.basis.push_back(std::move(b));
    }
    if (sc.basis.size() != n) throw std::invalid_argument("import: dimension mismatch");
    for (auto& row : j.at("brackets")) {
        size_t a = row.at(0).get<size_t>(), b = row.at(1).get<size_t>();
        if (a >= n || b >= n || a >= b) throw std::invalid_argument("import: bad bracket key");
        std::vector<std::pair<size_t, F>> v;
        for (auto& kc : row.at(2)) {
            F c = coeff_from_json<F>(kc.at(1));
            if (c.is_zero()) throw std::invalid_argument("import: zero coefficient stored");
            v.emplace_back(kc.at(0).get<size_t>(), c);
        }
        sc.brackets.emplace(std::make_pair(a, b), std::move(v));
    }
    for (auto& row : j.at("squares")) {
        size_t a = row.at(0).get<size_t>();
        std::vector<std::pair<size_t, F>> v;
        for (auto& kc : row.at(1)) v.emplace_back(kc.at(0).get<size_t>(), coeff_from_json<F>(kc.at(1)));
        sc.squares.emplace(a, std::move(v));
    }
    if (algebra) *algebra = j.at("provenance").at("algebra").get<std::string>();
    if (parameters) *parameters = j.at("provenance").at("parameters").get<std::string>();
    return sc;
}

inline std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace mlie
