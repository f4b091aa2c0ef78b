#include "rocbounds/json_io.hpp"

namespace rocbounds {

void to_json(nlohmann::json& j, const BoxcarComponent& c) {
  j = nlohmann::json{{"lo", c.lo}, {"hi", c.hi}, {"weight", c.weight}};
}

void from_json(const nlohmann::json& j, BoxcarComponent& c) {
  j.at("lo").get_to(c.lo);
  j.at("hi").get_to(c.hi);
  j.at("weight").get_to(c.weight);
}

void to_json(nlohmann::json& j, const ExtremalDistribution& d) {
  j = nlohmann::json{{"atom_weight", d.atom_weight()},
                     {"components", d.components()}};
}

void from_json(const nlohmann::json& j, ExtremalDistribution& d) {
  const double atom = j.at("atom_weight").get<double>();
  auto comps = j.at("components").get<std::vector<BoxcarComponent>>();
  d = ExtremalDistribution(atom, std::move(comps));
}

void to_json(nlohmann::json& j, const BoundResult& r) {
  j = nlohmann::json{{"value", r.value},
                     {"branch", to_string(r.branch)},
                     {"direction", to_string(r.direction)},
                     {"params", r.params}};
}

void from_json(const nlohmann::json& j, BoundResult& r) {
  j.at("value").get_to(r.value);
  r.branch = branch_from_string(j.at("branch").get<std::string>());
  r.direction = direction_from_string(j.at("direction").get<std::string>());
  j.at("params").get_to(r.params);
}

void to_json(nlohmann::json& j, const RootSolve& r) {
  j = nlohmann::json{{"t", r.t},
                     {"u", r.u},
                     {"residual", r.residual},
                     {"iterations", r.iterations},
                     {"bracket", {r.bracket.first, r.bracket.second}}};
}

void from_json(const nlohmann::json& j, RootSolve& r) {
  j.at("t").get_to(r.t);
  j.at("u").get_to(r.u);
  j.at("residual").get_to(r.residual);
  j.at("iterations").get_to(r.iterations);
  r.bracket = {j.at("bracket").at(0).get<double>(),
               j.at("bracket").at(1).get<double>()};
}

void to_json(nlohmann::json& j, const RocPoint& p) {
  j = nlohmann::json::array({p.alpha, p.power});
}

void from_json(const nlohmann::json& j, RocPoint& p) {
  p.alpha = j.at(0).get<double>();
  p.power = j.at(1).get<double>();
}

void to_json(nlohmann::json& j, const RocCurve& c) {
  j = nlohmann::json{{"points", c.points}, {"auc_trapezoid", c.auc_trapezoid}};
}

void from_json(const nlohmann::json& j, RocCurve& c) {
  j.at("points").get_to(c.points);
  j.at("auc_trapezoid").get_to(c.auc_trapezoid);
}

void to_json(nlohmann::json& j, const IntervalSet& s) {
  auto arr = nlohmann::json::array();
  for (const auto& [lo, hi] : s.intervals) arr.push_back({lo, hi});
  j = nlohmann::json{{"intervals", arr}};
}

void from_json(const nlohmann::json& j, IntervalSet& s) {
  std::vector<std::pair<double, double>> ivals;
  for (const auto& e : j.at("intervals"))
    ivals.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  s = IntervalSet::from(std::move(ivals));
}

void to_json(nlohmann::json& j, const SweepReport& r) {
  j = nlohmann::json{{"target", r.target},
                     {"best_value", r.best_value},
                     {"bound_value", r.bound_value},
                     {"gap", r.gap},
                     {"best_params", r.best_params},
                     {"configs", r.configs}};
}

void from_json(const nlohmann::json& j, SweepReport& r) {
  j.at("target").get_to(r.target);
  j.at("best_value").get_to(r.best_value);
  j.at("bound_value").get_to(r.bound_value);
  j.at("gap").get_to(r.gap);
  j.at("best_params").get_to(r.best_params);
  j.at("configs").get_to(r.configs);
}

void to_json(nlohmann::json& j, const MonteCarloEstimate& e) {
  j = nlohmann::json{{"estimate", e.estimate},
                     {"std_error", e.std_error},
                     {"n", e.n},
                     {"seed", e.seed}};
}

void from_json(const nlohmann::json& j, MonteCarloEstimate& e) {
  j.at("estimate").get_to(e.estimate);
  j.at("std_error").get_to(e.std_error);
  j.at("n").get_to(e.n);
  j.at("seed").get_to(e.seed);
}

}  // namespace rocbounds
