#include "tilekit/json_io.hpp"

#include <cstdint>

namespace tilekit {

std::string int_str(Int v) { return std::to_string(v); }

Int parse_int(const Json& j) {
  if (j.is_string()) return std::stoll(j.get<std::string>());
  if (j.is_number_integer()) return j.get<Int>();
  throw std::invalid_argument("expected integer or decimal string");
}

Json set_to_json(const GroupSubset& s) {
  Json arr = Json::array();
  for (const auto& e : s.elements()) {
    if (s.dim() == 1) {
      arr.push_back(int_str(e[0]));
    } else {
      Json v = Json::array();
      for (Int c : e) v.push_back(int_str(c));
      arr.push_back(std::move(v));
    }
  }
  return arr;
}

GroupSubset set_from_json(const Json& j, Int n, int d) {
  std::vector<std::vector<Int>> elems;
  for (const auto& e : j) {
    if (d == 1 && !e.is_array()) {
      elems.push_back({parse_int(e)});
    } else {
      std::vector<Int> v;
      for (const auto& c : e) v.push_back(parse_int(c));
      elems.push_back(std::move(v));
    }
  }
  return GroupSubset(n, d, std::move(elems));
}

Json finite_set_to_json(const FiniteSetZ& s) {
  Json arr = Json::array();
  for (const auto& e : s.elements()) arr.push_back(e.get_str());
  return arr;
}

FiniteSetZ finite_set_from_json(const Json& j) {
  std::vector<mpz_class> v;
  for (const auto& e : j)
    v.emplace_back(e.is_string() ? mpz_class(e.get<std::string>())
                                 : mpz_class(static_cast<long>(e.get<long long>())));
  return FiniteSetZ(std::move(v));
}

Json poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPoly poly_from_json(const Json& j) {
  std::vector<mpz_class> v;
  for (const auto& c : j)
    v.emplace_back(c.is_string() ? mpz_class(c.get<std::string>())
                                 : mpz_class(static_cast<long>(c.get<long long>())));
  return IntPoly(std::move(v));
}

Json points_to_json(const std::vector<Point2>& pts) {
  Json arr = Json::array();
  for (const auto& [x, y] : pts) arr.push_back(Json::array({int_str(x), int_str(y)}));
  return arr;
}

std::vector<Point2> points_from_json(const Json& j) {
  std::vector<Point2> pts;
  for (const auto& e : j) pts.emplace_back(parse_int(e.at(0)), parse_int(e.at(1)));
  return pts;
}

Json rational_to_json(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_json(const Json& j) {
  Rational r(j.get<std::string>());
  r.canonicalize();
  return r;
}

Json certificate_to_json(const TilingCertificate1D& c) {
  return Json{{"set", finite_set_to_json(c.tile)},
              {"period", int_str(c.period)},
              {"complement", set_to_json(c.residues)}};
}

TilingCertificate1D certificate_from_json(const Json& j) {
  const Int m = parse_int(j.at("period"));
  return {finite_set_from_json(j.at("set")), m, set_from_json(j.at("complement"), m, 1)};
}

Json planar_certificate_to_json(const PeriodicComplement2D& c) {
  return Json{{"a", int_str(c.a)}, {"b", int_str(c.b)}, {"reps", points_to_json(c.reps)}};
}

PeriodicComplement2D planar_certificate_from_json(const Json& j) {
  return {parse_int(j.at("a")), parse_int(j.at("b")), points_from_json(j.at("reps"))};
}

Json placements_to_json(const std::vector<RectPlacement>& p) {
  Json arr = Json::array();
  for (const auto& pl : p)
    arr.push_back(Json{{"type", std::string(1, pl.type)},
                       {"x", rational_to_json(pl.x)},
                       {"y", rational_to_json(pl.y)}});
  return arr;
}

std::vector<RectPlacement> placements_from_json(const Json& j) {
  std::vector<RectPlacement> out;
  for (const auto& e : j)
    out.push_back({e.at("type").get<std::string>().at(0), rational_from_json(e.at("x")),
                   rational_from_json(e.at("y"))});
  return out;
}

Json butson_to_json(const ButsonMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.exponents) {
    Json row = Json::array();
    for (Int v : r) row.push_back(int_str(v));
    rows.push_back(std::move(row));
  }
  return Json{{"k", int_str(static_cast<Int>(m.size))},
              {"root_order", int_str(m.root_order)},
              {"exponents", std::move(rows)}};
}

ButsonMatrix butson_from_json(const Json& j) {
  ButsonMatrix m;
  m.size = static_cast<std::size_t>(parse_int(j.at("k")));
  m.root_order = parse_int(j.at("root_order"));
  for (const auto& r : j.at("exponents")) {
    std::vector<Int> row;
    for (const auto& v : r) row.push_back(parse_int(v));
    m.exponents.push_back(std::move(row));
  }
  return m;
}

Json tiling_to_json(const CyclicTiling& t) {
  auto divisor_list = [](const GroupSubset& s) {
    Json arr = Json::array();
    std::vector<mpz_class> elems;
    for (Int r : s.residues()) elems.emplace_back(static_cast<long>(r));
    for (Int d : cyclotomic_divisors(FiniteSetZ(std::move(elems)).normalized()))
      arr.push_back(int_str(d));
    return arr;
  };
  auto periodic_flag = [&t](const GroupSubset& s) {
    auto p = is_periodic_subset(s, t.n);
    return p ? Json(int_str(*p)) : Json(nullptr);
  };
  return Json{{"n", int_str(t.n)},
              {"A", set_to_json(t.a)},
              {"B", set_to_json(t.b)},
              {"A_period", periodic_flag(t.a)},
              {"B_period", periodic_flag(t.b)},
              {"A_cyclotomic_divisors", divisor_list(t.a)},
              {"B_cyclotomic_divisors", divisor_list(t.b)}};
}

std::string json_digest(const Json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace tilekit
