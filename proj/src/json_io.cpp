#include "nonarch/json_io.hpp"

#include "nonarch/errors.hpp"

namespace nonarch {

Json quadext_to_json(const QuadExt& x) {
  return Json::array({rational_to_string(x.a), rational_to_string(x.b)});
}

QuadExt quadext_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("expected a two-element value pair", 0);
  return QuadExt(rational_from_string(j[0].get<std::string>()),
                 rational_from_string(j[1].get<std::string>()));
}

Json level_to_json(const Level& l) {
  if (l.is_infinite()) return Json("inf");
  return quadext_to_json(l.value());
}

Json coeff_to_json(const Coeff& c) {
  switch (c.tag()) {
    case FieldTag::F2:
    case FieldTag::F3:
      return Json(std::to_string(c.residue()));
    case FieldTag::Q:
      return Json(rational_to_string(c.re()));
    case FieldTag::Qi:
      return Json::array({rational_to_string(c.re()), rational_to_string(c.im())});
  }
  return Json();
}

Coeff coeff_from_json(FieldTag tag, const Json& j) {
  switch (tag) {
    case FieldTag::F2:
    case FieldTag::F3: {
      if (!j.is_string()) throw ParseError("finite-field coefficient must be a string", 0);
      Rational r = rational_from_string(j.get<std::string>());
      if (r.get_den() != 1) throw ParseError("finite-field coefficient must be an integer", 0);
      return Coeff::gf(tag, static_cast<long>(r.get_num().get_si()));
    }
    case FieldTag::Q:
      if (!j.is_string()) throw ParseError("rational coefficient must be a string", 0);
      return Coeff::rational(rational_from_string(j.get<std::string>()));
    case FieldTag::Qi: {
      if (!j.is_array() || j.size() != 2)
        throw ParseError("Q(i) coefficient must be a pair", 0);
      return Coeff::complex(rational_from_string(j[0].get<std::string>()),
                            rational_from_string(j[1].get<std::string>()));
    }
  }
  throw ParseError("bad coefficient", 0);
}

Json series_to_json(const Series& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    terms.push_back(Json{{"e", quadext_to_json(t.exp)}, {"c", coeff_to_json(t.coeff)}});
  }
  return Json{{"field", field_tag_name(s.field())}, {"terms", terms}};
}

Series series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("terms"))
    throw ParseError("series object needs 'field' and 'terms'", 0);
  FieldTag tag = field_tag_from_name(j["field"].get<std::string>());
  std::vector<Series::Term> terms;
  for (const auto& tj : j["terms"]) {
    terms.push_back({quadext_from_json(tj.at("e")), coeff_from_json(tag, tj.at("c"))});
  }
  return Series::from_terms(tag, std::move(terms));
}

Json element_to_json(const std::string& family, const Element& e) {
  Json data = Json::array();
  for (const auto& p : e.parts) data.push_back(series_to_json(p));
  return Json{{"family", family}, {"data", data}};
}

Element element_from_json(const Json& j, std::string* family_out) {
  if (!j.is_object() || !j.contains("data"))
    throw ParseError("element object needs 'data'", 0);
  if (family_out && j.contains("family")) *family_out = j["family"].get<std::string>();
  Element e;
  for (const auto& pj : j["data"]) e.parts.push_back(series_from_json(pj));
  return e;
}

Json ball_to_json(const std::string& family, const Ball& b) {
  return Json{{"center", element_to_json(family, b.center)},
              {"level", quadext_to_json(b.level)},
              {"kind", b.kind == BallKind::Open ? "open" : "closed"}};
}

Ball ball_from_json(const OmegaGroup& g, const Json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("level"))
    throw ParseError("ball object needs 'center' and 'level'", 0);
  Ball b;
  b.center = element_from_json(j["center"]);
  g.check_element(b.center);
  b.level = quadext_from_json(j["level"]);
  std::string kind = j.value("kind", "closed");
  if (kind == "open") {
    b.kind = BallKind::Open;
  } else if (kind == "closed") {
    b.kind = BallKind::Closed;
  } else {
    throw ParseError("ball kind must be 'open' or 'closed'", 0);
  }
  return b;
}

}  // namespace nonarch
