#include "fubinilab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace fubinilab {

std::string to_string(Axioms axioms) { return axioms == Axioms::limit ? "limit" : "down-only"; }

Axioms parse_axioms(const std::string& name) {
  if (name == "limit") return Axioms::limit;
  if (name == "down-only") return Axioms::down_only;
  fail(ErrorKind::InvalidConfig, "unknown axioms '" + name + "' (expected limit or down-only)");
}

Json to_json(const ConvSpace& x) {
  Json conv = Json::array();
  for (PointId p = 0; p < x.size(); ++p) conv.push_back(x.generators(p));
  return Json{{"points", x.size()}, {"conv", conv}};
}

ConvSpace space_from_json(const Json& j, Axioms axioms) {
  try {
    const auto n = j.at("points").get<std::size_t>();
    const auto& conv = j.at("conv");
    if (!conv.is_array() || conv.size() != n) fail(ErrorKind::Parse, "space: 'conv' needs one entry per point");
    std::vector<std::vector<Subset>> gens(n);
    for (std::size_t p = 0; p < n; ++p)
      for (const auto& g : conv[p]) {
        Subset s = normalized(g.get<Subset>());
        if (!s.empty() && s.back() >= n) fail(ErrorKind::Parse, "space: generator point out of range");
        gens[p].push_back(std::move(s));
      }
    auto x = ConvSpace::from_generators(std::move(gens));
    if (!x.satisfies(axioms)) fail(ErrorKind::Parse, "space: structure violates the " + to_string(axioms) + " axioms");
    return x;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("space: ") + e.what());
  }
}

Json to_json(const ConvVect& e, std::size_t table_limit) {
  Json j{{"field", e.field().characteristic()},
         {"dim", e.dim()},
         {"axioms", to_string(e.axioms())},
         {"zero", e.zero_generators()}};
  auto n = point_count(e.dim(), e.field(), table_limit);
  if (n) {
    Json add = Json::array(), smul = Json::array();
    for (PointId u = 0; u < *n; ++u) {
      Json row = Json::array();
      for (PointId v = 0; v < *n; ++v) row.push_back(e.add(u, v));
      add.push_back(row);
    }
    for (int c = 0; c < e.field().characteristic(); ++c) {
      Json row = Json::array();
      for (PointId u = 0; u < *n; ++u) row.push_back(e.smul(c, u));
      smul.push_back(row);
    }
    j["add"] = add;
    j["smul"] = smul;
  }
  return j;
}

ConvVect vect_from_json(const Json& j) {
  try {
    auto field = Field::make(j.at("field").get<int>());
    const auto dim = j.at("dim").get<std::size_t>();
    const auto axioms = parse_axioms(j.value("axioms", std::string("limit")));
    ConvVect e(field, dim, j.at("zero").get<std::vector<Subset>>(), axioms);
    if (j.contains("add")) {
      const auto& add = j["add"];
      if (add.size() != e.size()) fail(ErrorKind::Parse, "vector space: 'add' table has the wrong size");
      for (PointId u = 0; u < e.size(); ++u)
        for (PointId v = 0; v < e.size(); ++v)
          if (add[u].at(v).get<PointId>() != e.add(u, v)) fail(ErrorKind::Parse, "vector space: 'add' disagrees with coordinates");
    }
    if (j.contains("smul")) {
      const auto& smul = j["smul"];
      if (smul.size() != static_cast<std::size_t>(field.characteristic()))
        fail(ErrorKind::Parse, "vector space: 'smul' table has the wrong size");
      for (int c = 0; c < field.characteristic(); ++c)
        for (PointId u = 0; u < e.size(); ++u)
          if (smul[c].at(u).get<PointId>() != e.smul(c, u)) fail(ErrorKind::Parse, "vector space: 'smul' disagrees with coordinates");
    }
    return e;
  } catch (const Json::exception& ex) {
    fail(ErrorKind::Parse, std::string("vector space: ") + ex.what());
  } catch (const LabError& ex) {
    if (ex.kind() == ErrorKind::Parse) throw;
    fail(ErrorKind::Parse, std::string("vector space: ") + ex.what());
  }
}

namespace {

Json coords(const Vector& v) { return std::vector<int>(v.data(), v.data() + v.size()); }

}  // namespace

Json to_json(const FubiniVerdict& v, const ConvSpace& x, const ConvSpace& y) {
  Json witness = nullptr;
  if (v.witness) {
    witness = Json{{"mu", coords(v.witness->mu)},
                   {"nu", coords(v.witness->nu)},
                   {"f", v.witness->f},
                   {"otimes", v.witness->otimes_value},
                   {"otimes_tilde", v.witness->otimes_tilde_value}};
  }
  return Json{{"X", to_json(x)},
              {"Y", to_json(y)},
              {"reflexive", {{"X", v.reflexive_x}, {"Y", v.reflexive_y}, {"XY", v.reflexive_xy}}},
              {"equal", v.equal},
              {"witness", witness}};
}

Json to_json(const OrthogonalityCertificate& c) {
  return Json{{"homs", {{"BC", to_json(c.bc.space)}, {"AC", to_json(c.ac.space)}, {"BD", to_json(c.bd.space)}, {"AD", to_json(c.ad.space)}}},
              {"left", c.left.table()},
              {"top", c.top.table()},
              {"right", c.right.table()},
              {"bottom", c.bottom.table()},
              {"corner", to_json(c.corner.space)},
              {"comparison", c.comparison},
              {"pullback", c.pullback},
              {"failure", c.failure},
              {"witness", c.witness}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

}  // namespace fubinilab
