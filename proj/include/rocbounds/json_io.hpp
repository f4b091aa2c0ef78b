#pragma once

#include <json.hpp>

#include "rocbounds/bounds.hpp"
#include "rocbounds/extremal.hpp"
#include "rocbounds/roc.hpp"
#include "rocbounds/verify.hpp"

namespace rocbounds {

// nlohmann ADL hooks; every result type round-trips through its JSON form.

void to_json(nlohmann::json& j, const BoxcarComponent& c);
void from_json(const nlohmann::json& j, BoxcarComponent& c);

void to_json(nlohmann::json& j, const ExtremalDistribution& d);
void from_json(const nlohmann::json& j, ExtremalDistribution& d);

void to_json(nlohmann::json& j, const BoundResult& r);
void from_json(const nlohmann::json& j, BoundResult& r);

void to_json(nlohmann::json& j, const RootSolve& r);
void from_json(const nlohmann::json& j, RootSolve& r);

void to_json(nlohmann::json& j, const RocPoint& p);
void from_json(const nlohmann::json& j, RocPoint& p);

void to_json(nlohmann::json& j, const RocCurve& c);
void from_json(const nlohmann::json& j, RocCurve& c);

void to_json(nlohmann::json& j, const IntervalSet& s);
void from_json(const nlohmann::json& j, IntervalSet& s);

void to_json(nlohmann::json& j, const SweepReport& r);
void from_json(const nlohmann::json& j, SweepReport& r);

void to_json(nlohmann::json& j, const MonteCarloEstimate& e);
void from_json(const nlohmann::json& j, MonteCarloEstimate& e);

}  // namespace rocbounds
