#include "qqs/jsonio.hpp"

namespace qqs {

using nlohmann::json;

namespace {

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json rows(const std::vector<int>& flat, int n) {
    json out = json::array();
    for (int i = 0; i < n; ++i) out.push_back(std::vector<int>(flat.begin() + i * n, flat.begin() + (i + 1) * n));
    return out;
}

std::vector<int> flatten(const json& j, int& n, const char* what) {
    if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + " must be a nonempty square array");
    int size = static_cast<int>(j.size());
    if (n != 0 && size != n) throw ParseError("even and odd parts differ in size");
    n = size;
    std::vector<int> out;
    for (const auto& row : j) {
        auto r = int_list(row, what);
        if (static_cast<int>(r.size()) != n) throw ParseError(std::string(what) + " is not square");
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

json term_list() { return json::array(); }

void require_list(const json& j) {
    if (!j.is_array()) throw ParseError("element must be a list of terms");
}

}  // namespace

json to_json(const RatScalar& c) { return to_string(c); }

RatScalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return RatScalar(j.get<long>());
    if (!j.is_string()) throw ParseError("coefficient must be a string");
    return parse_scalar(j.get<std::string>());
}

json to_json(const SuperMatrix& a) { return {{"even", rows(a.a0, a.n)}, {"odd", rows(a.a1, a.n)}}; }

SuperMatrix matrix_from_json(const json& j) {
    int n = 0;
    auto e = flatten(field(j, "even"), n, "even");
    auto o = flatten(field(j, "odd"), n, "odd");
    SuperMatrix a(n);
    a.a0 = std::move(e);
    a.a1 = std::move(o);
    return a;
}

json to_json(const QPolyElement& x) {
    json out = term_list();
    for (const auto& [a, c] : x) out.push_back({{"even", a.even}, {"odd", a.odd}, {"coeff", to_json(c)}});
    return out;
}

QPolyElement qpoly_from_json(const json& j) {
    require_list(j);
    QPolyElement out;
    for (const auto& t : j) {
        SuperIndex a(int_list(field(t, "even"), "even"), int_list(field(t, "odd"), "odd"));
        if (a.even.size() != a.odd.size()) throw ParseError("even and odd exponents differ in length");
        out.add(a, scalar_from_json(field(t, "coeff")));
    }
    return out;
}

json to_json(const TensorElement& x) {
    json out = term_list();
    for (const auto& [a, c] : x) out.push_back({{"matrix", to_json(a)}, {"coeff", to_json(c)}});
    return out;
}

TensorElement tensor_from_json(const json& j) {
    require_list(j);
    TensorElement out;
    for (const auto& t : j) out.add(matrix_from_json(field(t, "matrix")), scalar_from_json(field(t, "coeff")));
    return out;
}

json to_json(const VElement& x) {
    json out = term_list();
    for (const auto& [k, c] : x) out.push_back({{"matrix", to_json(k.a)}, {"j", k.j}, {"coeff", to_json(c)}});
    return out;
}

VElement velement_from_json(const json& j) {
    require_list(j);
    VElement out;
    for (const auto& t : j) {
        SuperMatrix a = matrix_from_json(field(t, "matrix"));
        auto jv = int_list(field(t, "j"), "j");
        if (static_cast<int>(jv.size()) != a.n) throw ParseError("j has wrong length");
        try {
            out += symbol(a, jv, scalar_from_json(field(t, "coeff")));
        } catch (const ContractError& e) {
            throw ParseError(e.what());
        }
    }
    return out;
}

}  // namespace qqs
