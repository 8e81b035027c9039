#include "schub/jsonio.hpp"

namespace schub {

namespace {

template <class Poly>
nlohmann::json terms_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["exponents"] = e;
    t["coeff"] = c.str();
    arr.push_back(std::move(t));
  }
  return arr;
}

template <class Poly>
Poly terms_from_json(const nlohmann::json& j, int nvars) {
  SCHUB_REQUIRE(j.is_array(), "term list must be a JSON array");
  Poly p(nvars);
  for (const auto& t : j) {
    SCHUB_REQUIRE(t.contains("exponents") && t.contains("coeff"),
                  "term needs exponents and coeff");
    std::vector<int32_t> e = t["exponents"].get<std::vector<int32_t>>();
    SCHUB_REQUIRE(static_cast<int>(e.size()) == nvars,
                  "exponent vector length mismatch");
    Int c(t["coeff"].get<std::string>());
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

nlohmann::json to_json(const HPoly& p) { return terms_to_json(p); }
nlohmann::json to_json(const KElem& f) { return terms_to_json(f); }

nlohmann::json to_json(const RingValue& v) {
  nlohmann::json j;
  j["theory"] = theory_name(v.theory);
  j["value"] = v.theory == Theory::H ? to_json(v.h) : to_json(v.k);
  return j;
}

HPoly hpoly_from_json(const nlohmann::json& j, int nvars) {
  return terms_from_json<HPoly>(j, nvars);
}

KElem kelem_from_json(const nlohmann::json& j, int nvars) {
  return terms_from_json<KElem>(j, nvars);
}

nlohmann::json word_to_json(const Word& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (int l : w.letters) arr.push_back(l + 1);
  return arr;
}

Word word_from_json(const nlohmann::json& j) {
  SCHUB_REQUIRE(j.is_array(), "word must be a JSON array");
  Word w;
  for (const auto& x : j) {
    int l = x.get<int>();
    SCHUB_REQUIRE(l >= 1, "word letters are 1-based");
    w.letters.push_back(l - 1);
  }
  return w;
}

}  // namespace schub
