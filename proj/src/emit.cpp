#include "tight/emit.hpp"

#include <sstream>

namespace tight {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(static_cast<int64_t>(x.get_si()));
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(std::to_string(j.get<int64_t>()));
  throw ParseError("expected an integer, got " + j.dump());
}

json rational_to_json(const Rational& r) {
  return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("expected {\"num\", \"den\"}, got " + j.dump());
  return Rational(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
}

json diagram_to_json(const SurgeryDiagram& d) {
  json components = json::array();
  for (size_t i = 0; i < d.size(); ++i)
    components.push_back(
        json{{"id", static_cast<int64_t>(i)}, {"framing", rational_to_json(d.framing(i))}});
  json linking = json::array();
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j)
      if (d.linking(i, j) != 0)
        linking.push_back(json::array(
            {static_cast<int64_t>(i), static_cast<int64_t>(j), int_to_json(d.linking(i, j))}));
  return json{{"stage", d.stage()}, {"components", components}, {"linking", linking}};
}

SurgeryDiagram diagram_from_json(const json& j) {
  const json& comps = j.at("components");
  std::vector<Rational> framings(comps.size());
  for (const json& c : comps) {
    size_t id = c.at("id").get<size_t>();
    if (id >= framings.size()) throw ParseError("component id out of range in diagram JSON");
    framings[id] = rational_from_json(c.at("framing"));
  }
  IntMatrix lk(framings.size(), std::vector<Int>(framings.size(), Int(0)));
  for (const json& e : j.at("linking")) {
    size_t a = e.at(0).get<size_t>(), b = e.at(1).get<size_t>();
    Int v = int_from_json(e.at(2));
    lk.at(a).at(b) = v;
    lk.at(b).at(a) = std::move(v);
  }
  return SurgeryDiagram(std::move(framings), std::move(lk), j.at("stage").get<std::string>());
}

json convergents_to_json(const NegContFrac& cf, const ConvergentTable& t) {
  json coeffs = json::array(), p = json::array(), q = json::array();
  for (const Int& a : cf.coeffs()) coeffs.push_back(int_to_json(a));
  for (long j = 0; j <= t.order(); ++j) {
    p.push_back(int_to_json(t.p_at(j)));
    q.push_back(int_to_json(t.q_at(j)));
  }
  return json{{"coeffs", coeffs}, {"p", p}, {"q", q}};
}

std::string variant_name(Variant v) {
  return v == Variant::ClassNeg ? "negative" : "positive";
}

json form_to_json(const TheoremForm& form) {
  json fibers = json::array();
  for (const auto& [p, q] : form.pq)
    fibers.push_back(json{{"p", int_to_json(p)}, {"q", int_to_json(q)}});
  return json{{"variant", variant_name(form.variant)},
              {"e0", int_to_json(form.e0)},
              {"fibers", fibers}};
}

json count_to_json(const TheoremForm& form, const TightCount& count) {
  json factors = json::array();
  for (const auto& [label, factor] : count.factors)
    factors.push_back(json{{"label", label}, {"factor", int_to_json(factor)}});
  return json{{"e0", int_to_json(form.e0)},
              {"variant", variant_name(form.variant)},
              {"factors", factors},
              {"total", count.total.get_str()}};
}

std::string emit_dot(const SurgeryDiagram& d) {
  std::ostringstream os;
  os << "graph \"" << d.stage() << "\" {\n";
  for (size_t i = 0; i < d.size(); ++i)
    os << "  c" << i << " [label=\"" << i << ":" << d.framing(i).str() << "\"];\n";
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j)
      if (d.linking(i, j) != 0)
        os << "  c" << i << " -- c" << j << " [label=\"" << d.linking(i, j).get_str()
           << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tight
