#pragma once

#include <nlohmann/json_fwd.hpp>

#include "todarep/fusion.hpp"
#include "todarep/minimal_models.hpp"
#include "todarep/rep_map.hpp"

// JSON wire formats:
//   KParams            {"n": int, "k": ["p/q", ...]}
//   MParams            {"m": ["p/q", ...]}
//   StokesParams       {"s": [{"re": float, "im": float}, ...]}
//   AffineDominantWeight {"n": int, "v": [int, ...], "level": int}
//   SpecialElement     {"x": [{"re": float, "im": float}, ...]}
// Rationals cross the boundary as canonical "p/q" strings, never floats.

namespace todarep {

nlohmann::json to_json(const KParams& kp);
KParams kparams_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MParams& mp);
MParams mparams_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StokesParams& sp);
StokesParams stokes_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AffineDominantWeight& w);
AffineDominantWeight weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpecialElement& t);

nlohmann::json cartan_to_json(const CartanVector& x);

}  // namespace todarep
