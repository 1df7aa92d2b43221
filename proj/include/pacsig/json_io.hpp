#pragma once

#include <json.hpp>

#include "pacsig/mcval.hpp"
#include "pacsig/nullmodel.hpp"

namespace pacsig {

inline nlohmann::json to_json(const BetaDist& d) {
    return {{"a", d.a}, {"b", d.b}};
}

inline nlohmann::json to_json(const NullModelParams& p) {
    return {
        {"n", p.n},           {"bins", p.bins},         {"mu_p", p.mu_p},
        {"sigma2_p", p.sigma2_p}, {"a_p", p.a_p},       {"b_p", p.b_p},
        {"m1", p.m1},         {"m2", p.m2},             {"c", p.c},
        {"mu_h", p.mu_h},     {"sigma2_h", p.sigma2_h}, {"d_h", p.d_h},
        {"dist", to_json(p.dist)},
    };
}

inline NullModelParams null_params_from_json(const nlohmann::json& j) {
    NullModelParams p;
    p.n = j.at("n").get<std::size_t>();
    p.bins = j.at("bins").get<std::size_t>();
    p.mu_p = j.at("mu_p").get<double>();
    p.sigma2_p = j.at("sigma2_p").get<double>();
    p.a_p = j.at("a_p").get<double>();
    p.b_p = j.at("b_p").get<double>();
    p.m1 = j.at("m1").get<double>();
    p.m2 = j.at("m2").get<double>();
    p.c = j.at("c").get<double>();
    p.mu_h = j.at("mu_h").get<double>();
    p.sigma2_h = j.at("sigma2_h").get<double>();
    p.d_h = j.at("d_h").get<double>();
    p.dist = BetaDist(j.at("dist").at("a").get<double>(), j.at("dist").at("b").get<double>());
    return p;
}

inline nlohmann::json to_json(const MiAssessment& a) {
    return {
        {"mi", a.mi},
        {"p_value", a.p_value},
        {"alpha", a.alpha},
        {"critical_value", a.critical_value},
        {"significant", a.significant},
    };
}

inline MiAssessment assessment_from_json(const nlohmann::json& j) {
    MiAssessment a;
    a.mi = j.at("mi").get<double>();
    a.p_value = j.at("p_value").get<double>();
    a.alpha = j.at("alpha").get<double>();
    a.critical_value = j.at("critical_value").get<double>();
    a.significant = j.at("significant").get<bool>();
    return a;
}

inline nlohmann::json to_json(const MomentOracle& m) {
    const auto est = [](const MomentEstimate& e) {
        return nlohmann::json{{"value", e.value}, {"se", e.se}};
    };
    return {
        {"n", m.n},           {"bins", m.bins},      {"reps", m.reps},
        {"seed", m.seed},     {"m1", est(m.m1)},     {"m2", est(m.m2)},
        {"c", est(m.c)},      {"mu_h", est(m.mu_h)}, {"sigma2_h", est(m.sigma2_h)},
    };
}

} // namespace pacsig
