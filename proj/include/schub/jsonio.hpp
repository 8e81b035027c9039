#pragma once

#include "json.hpp"
#include "schub/schubert.hpp"

namespace schub {

// Term lists [{"exponents": [..], "coeff": "k"}]. Coefficients travel as
// decimal strings so arbitrary-precision values round-trip losslessly.
nlohmann::json to_json(const HPoly& p);
nlohmann::json to_json(const KElem& f);
nlohmann::json to_json(const RingValue& v);

HPoly hpoly_from_json(const nlohmann::json& j, int nvars);
KElem kelem_from_json(const nlohmann::json& j, int nvars);

nlohmann::json word_to_json(const Word& w);  // 1-based letters
Word word_from_json(const nlohmann::json& j);

}  // namespace schub
