#pragma once

// JSON form of a series:
//   {"q_bound":N, "d_bound":K|null, "terms":[{"q":n,"a":i,"b":j,"d":k,"z":m,"c":"<decimal>"}...]}
// Terms are emitted in the canonical monomial order; coefficients are decimal
// strings (arbitrary precision).  A "z_window" field is added in Laurent mode.

#include <json.hpp>

#include "cappa/series.hpp"

namespace cappa {

inline nlohmann::json to_json(const TruncatedSeries& s) {
    nlohmann::json j;
    j["q_bound"] = s.bounds().q_bound;
    if (s.bounds().d_bound)
        j["d_bound"] = *s.bounds().d_bound;
    else
        j["d_bound"] = nullptr;
    if (s.bounds().z_window) {
        const ZWindow& w = *s.bounds().z_window;
        j["z_window"] = {{"lo", w.lo}, {"hi", w.hi}, {"z0_prune", w.z0_prune}};
    }
    auto arr = nlohmann::json::array();
    for (const auto& [m, c] : s.terms()) {
        arr.push_back({{"q", m.q}, {"a", m.a}, {"b", m.b}, {"d", m.d}, {"z", m.z},
                       {"c", c.str()}});
    }
    j["terms"] = std::move(arr);
    return j;
}

inline TruncatedSeries series_from_json(const nlohmann::json& j) {
    Bounds b;
    b.q_bound = j.at("q_bound").get<int>();
    if (!j.at("d_bound").is_null()) b.d_bound = j.at("d_bound").get<int>();
    if (j.contains("z_window")) {
        const auto& w = j.at("z_window");
        b.z_window = ZWindow{w.at("lo").get<int>(), w.at("hi").get<int>(),
                             w.at("z0_prune").get<bool>()};
    }
    TruncatedSeries s(b);
    for (const auto& t : j.at("terms")) {
        Monomial m{t.at("q").get<int>(), t.at("a").get<int>(), t.at("b").get<int>(),
                   t.at("d").get<int>(), t.at("z").get<int>()};
        s.add_term(m, Int(t.at("c").get<std::string>()));
    }
    return s;
}

}  // namespace cappa
