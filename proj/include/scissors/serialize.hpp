#pragma once

#include <json.hpp>

#include "scissors/characters.hpp"
#include "scissors/quad_ring.hpp"
#include "scissors/rewrite.hpp"
#include "scissors/zmodkit.hpp"

namespace scissors {

using Json = nlohmann::json;

/// Big integers travel as decimal strings.
Json int_to_json(const Int& n);
Int int_from_json(const Json& j);

/// {"re": "...", "im": "...", "m": m}
Json to_json(const QuadInt& x);
QuadInt quadint_from_json(const Json& j);

/// Rows of decimal strings.
Json to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const Json& j);

/// {"rank": r, "torsion": ["3", ...]}
Json to_json(const Structure& s);
Structure structure_from_json(const Json& j);

/// {"m": m, "support": ["3+0*w", ...], "unit_sign": 1}
Json to_json(const Character& chi);
Character character_from_json(const Json& j);

Json to_json(const Move& mv);
Move move_from_json(const Json& j, RingDesc ring);

/// {"m", "chi", "start", "moves", "claim"}; claim is "zero" or
/// {"end": "...", "sign": s}.
Json to_json(const Certificate& c);
/// Throws std::invalid_argument (or a json exception) on malformed input.
Certificate certificate_from_json(const Json& j);

}  // namespace scissors
