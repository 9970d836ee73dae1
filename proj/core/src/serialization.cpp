#include <sstream>

#include "ditkin/errors.hpp"
#include "ditkin/json.hpp"

namespace ditkin::json {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::kParseError, path + ": " + message);
}

const Json& field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(path, std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Index index_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<Index>() == 0) fail(path, "expected a positive integer");
  return j.get<Index>();
}

// Construction errors (e.g. a non-positive weight) are reported as parse errors at path.
template <class F>
auto at_path(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    fail(path, e.what());
  }
}

}  // namespace

Json to_json(const Rational& value) { return value.str(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json to_json(const WeightFamily& w) {
  return std::visit(Overloaded{
                        [](const ConstantWeights& c) -> Json {
                          return {{"family", "constant"}, {"value", to_json(c.value)}};
                        },
                        [](const LinearWeights& l) -> Json {
                          return {{"family", "linear"}, {"a", to_json(l.offset)}, {"b", to_json(l.slope)}};
                        },
                        [](const InterleavedWeights& il) -> Json {
                          Json parts = Json::array();
                          for (const auto& p : il.parts) parts.push_back(to_json(p));
                          return {{"family", "interleave"}, {"modulus", il.parts.size()}, {"parts", parts}};
                        },
                        [](const PrefixedWeights& p) -> Json {
                          return {{"family", "prefix"},
                                  {"prefix", rationals_to_json(p.prefix)},
                                  {"tail", to_json(p.tail)}};
                        },
                    },
                    w.node().rule);
}

WeightFamily weights_from_json(const Json& j, const std::string& path) {
  const Json& tag = field(j, "family", path);
  if (!tag.is_string()) fail(path + ".family", "expected a string");
  const std::string family = tag.get<std::string>();

  if (family == "constant") {
    Rational value = rational_from_json(field(j, "value", path), path + ".value");
    return at_path(path, [&] { return WeightFamily::constant(value); });
  }
  if (family == "linear") {
    Rational a = rational_from_json(field(j, "a", path), path + ".a");
    Rational b = rational_from_json(field(j, "b", path), path + ".b");
    return at_path(path, [&] { return WeightFamily::linear(a, b); });
  }
  if (family == "interleave") {
    const Json& parts_json = field(j, "parts", path);
    if (!parts_json.is_array()) fail(path + ".parts", "expected an array");
    std::vector<WeightFamily> parts;
    for (std::size_t i = 0; i < parts_json.size(); ++i) {
      parts.push_back(weights_from_json(parts_json[i], path + ".parts[" + std::to_string(i) + "]"));
    }
    if (auto it = j.find("modulus"); it != j.end()) {
      if (!it->is_number_unsigned() || it->get<std::size_t>() != parts.size()) {
        fail(path + ".modulus", "must equal the number of parts");
      }
    }
    return at_path(path, [&] { return WeightFamily::interleave(std::move(parts)); });
  }
  if (family == "prefix") {
    auto prefix = rationals_from_json(field(j, "prefix", path), path + ".prefix");
    WeightFamily tail = weights_from_json(field(j, "tail", path), path + ".tail");
    return at_path(path, [&] { return WeightFamily::prefixed(std::move(prefix), tail); });
  }
  fail(path + ".family", "unknown family \"" + family + "\"");
}

Json to_json(const Element& f) {
  if (f.is_exact()) {
    return {{"kind", "eventually_constant"},
            {"prefix", rationals_to_json(f.exact().prefix)},
            {"tail", to_json(f.exact().tail)}};
  }
  if (std::holds_alternative<DyadicDecay>(f.variant())) return {{"kind", "dyadic_decay"}};
  throw Error(ErrorCode::kUnsupportedOperandKind, "rule-based elements have no JSON form");
}

Element element_from_json(const Json& j, const std::string& path) {
  const Json& tag = field(j, "kind", path);
  if (!tag.is_string()) fail(path + ".kind", "expected a string");
  const std::string kind = tag.get<std::string>();
  if (kind == "dyadic_decay") return Element::dyadic_decay();
  if (kind == "eventually_constant") {
    auto prefix = rationals_from_json(field(j, "prefix", path), path + ".prefix");
    Rational tail = rational_from_json(field(j, "tail", path), path + ".tail");
    return Element::eventually_constant(std::move(prefix), std::move(tail));
  }
  fail(path + ".kind", "unknown element kind \"" + kind + "\"");
}

Json to_json(const NormResult& r) {
  if (r.is_exact()) return {{"exact", to_json(r.lo())}};
  return {{"lo", to_json(r.lo())}, {"hi", to_json(r.hi())}, {"horizon", *r.horizon()}};
}

Json to_json(const Point& p) {
  if (p.is_infinity()) return "inf";
  return p.index();
}

Point point_from_json(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return Point::infinity();
  return Point::at(index_from_json(j, path));
}

Json to_json(const ClosedSet& set) {
  return {{"points", set.finite_points()}, {"infinity", set.contains_infinity()}};
}

ClosedSet closed_set_from_json(const Json& j, const std::string& path) {
  const Json& points_json = field(j, "points", path);
  if (!points_json.is_array()) fail(path + ".points", "expected an array");
  std::vector<Index> points;
  for (std::size_t i = 0; i < points_json.size(); ++i) {
    points.push_back(index_from_json(points_json[i], path + ".points[" + std::to_string(i) + "]"));
  }
  bool infinity = false;
  if (auto it = j.find("infinity"); it != j.end()) {
    if (!it->is_boolean()) fail(path + ".infinity", "expected a boolean");
    infinity = it->get<bool>();
  }
  return at_path(path, [&] {
    return infinity ? ClosedSet::with_infinity(std::move(points)) : ClosedSet::finite(std::move(points));
  });
}

Json to_json(const TailInf& t) {
  Json out = {{"at_index", t.at_index}, {"value", to_json(t.value)}};
  if (t.attained_at) {
    out["status"] = {{"attained_at", *t.attained_at}};
  } else {
    out["status"] = "approached";
  }
  out["certified_horizon"] = t.certified_horizon;
  return out;
}

Json to_json(const WeightClassification& c) {
  Json out;
  out["bounded"] = c.sup ? Json{{"sup", to_json(*c.sup)}} : Json(false);
  out["liminf"] = c.liminf ? to_json(*c.liminf) : Json("infinite");
  out["nondecreasing"] = c.nondecreasing;
  out["diverges_to_infinity"] = c.diverges_to_infinity;
  return out;
}

Json to_json(const AiSelection& s) {
  Json out = {{"kind", std::string(to_string(s.kind))}, {"indices", s.indices},
              {"norms", rationals_to_json(s.norms)}};
  if (s.liminf) out["liminf"] = to_json(*s.liminf);
  if (s.slack) out["slack"] = to_json(*s.slack);
  return out;
}

Json to_json(const DiagnosticRow& row) {
  return {{"n_k", row.n_k},
          {"residual", to_json(row.residual)},
          {"alpha_next", to_json(row.alpha_next)},
          {"alpha_self", to_json(row.alpha_self)}};
}

Json to_json(const RelativeUnitWitness& w) {
  Json out = {{"point", to_json(w.point)},
              {"excluded_set_max", w.excluded_set_max},
              {"element", to_json(w.element)},
              {"norm", to_json(w.norm)}};
  return out;
}

Json to_json(const PropertyReport& report) {
  Json out;
  out["ditkin"] = report.ditkin;
  out["strongly_regular"] = report.strongly_regular;
  out["spectral_synthesis"] = report.spectral_synthesis;
  out["separable"] = report.separable;
  out["strong_ditkin"] = report.strong_ditkin;
  out["m_infinity_has_bai"] = report.m_infinity_has_bai;
  out["bru_bade"] = report.bru_bade;
  out["bru_dales"] = report.bru_dales;
  out["dales_bound"] = report.dales_bound ? to_json(*report.dales_bound) : Json(nullptr);
  out["bade_witness"] = report.bade_witness ? to_json(*report.bade_witness) : Json(nullptr);
  if (report.unboundedness_witness) {
    Json points = Json::array();
    for (const auto& p : *report.unboundedness_witness) {
      points.push_back({{"point", p.point}, {"identity_norm_lower_bound", to_json(p.alpha)}});
    }
    out["unboundedness_witness"] = points;
  } else {
    out["unboundedness_witness"] = nullptr;
  }
  out["classification"] = to_json(report.classification);
  out["citations"] = {
      {"ditkin", "proved for every alpha: a subsequence of (e_k) is an approximate identity for M_inf"},
      {"strongly_regular", "proved for every alpha: every Ditkin algebra is strongly regular"},
      {"spectral_synthesis", "proved for every alpha: Ditkin algebras on N_inf have spectral synthesis"},
      {"separable", "proved for every alpha"},
      {"strong_ditkin", "computed: equivalent to liminf alpha_n < inf"},
      {"m_infinity_has_bai", "computed: equivalent to liminf alpha_n < inf"},
      {"bru_bade", "computed: equivalent to liminf alpha_n < inf"},
      {"bru_dales",
       "computed: equivalent to alpha bounded; witnesses realise the bound 2M+1, no exhaustive search"},
      {"dales_bound", "computed: 2 sup alpha + 1"},
  };
  return out;
}

std::string diagnostics_csv(std::span<const DiagnosticRow> rows) {
  std::ostringstream os;
  os << "n_k,residual_lo,residual_hi,alpha_next,alpha_self\n";
  for (const auto& row : rows) {
    os << row.n_k << ',' << row.residual.lo() << ',' << row.residual.hi() << ',' << row.alpha_next << ','
       << row.alpha_self << '\n';
  }
  return os.str();
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace ditkin::json
