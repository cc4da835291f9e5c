#include "todarep/json_io.hpp"

#include <nlohmann/json.hpp>

namespace todarep {

using nlohmann::json;

namespace {

json complex_to_json(const std::complex<double>& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

std::complex<double> complex_from_json(const json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

std::vector<Rational> rationals_from_json(const json& arr) {
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& e : arr) out.push_back(rational_from_string(e.get<std::string>()));
    return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(rational_to_string(r));
    return arr;
}

}  // namespace

json to_json(const KParams& kp) { return json{{"n", kp.n}, {"k", rationals_to_json(kp.k)}}; }

KParams kparams_from_json(const json& j) {
    return make_kparams(j.at("n").get<int>(), rationals_from_json(j.at("k")));
}

json to_json(const MParams& mp) { return json{{"m", rationals_to_json(mp.m.h)}}; }

MParams mparams_from_json(const json& j) {
    return make_mparams(rationals_from_json(j.at("m")));
}

json to_json(const StokesParams& sp) {
    json arr = json::array();
    for (const auto& si : sp.s) arr.push_back(complex_to_json(si));
    return json{{"s", arr}};
}

StokesParams stokes_from_json(const json& j) {
    StokesParams sp;
    for (const auto& e : j.at("s")) sp.s.push_back(complex_from_json(e));
    sp.n = static_cast<int>(sp.s.size());
    if (sp.n < 1) throw std::invalid_argument("StokesParams: need at least one parameter");
    return sp;
}

json to_json(const AffineDominantWeight& w) {
    return json{{"n", w.n}, {"v", w.v}, {"level", w.level}};
}

AffineDominantWeight weight_from_json(const json& j) {
    return make_weight(j.at("n").get<int>(), j.at("v").get<DominantWeight>(),
                       j.at("level").get<long long>());
}

json to_json(const SpecialElement& t) {
    json arr = json::array();
    for (const auto& xi : t.x) arr.push_back(complex_to_json(xi));
    return json{{"x", arr}};
}

json cartan_to_json(const CartanVector& x) { return rationals_to_json(x.h); }

}  // namespace todarep
