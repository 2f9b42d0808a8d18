#include "hpa/io.hpp"

#include <filesystem>
#include <fstream>

namespace hpa {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("expected an integer, got " + j.dump());
}

std::vector<Rational> rational_vector(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw InputError(what + ": expected an array of length " + std::to_string(n));
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json rational_to_json(const Rational& r) {
  return json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())});
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (j.is_array() && j.size() == 2) {
    const mpz_class num = integer_from_json(j[0]);
    const mpz_class den = integer_from_json(j[1]);
    if (den == 0) throw InputError("zero denominator in " + j.dump());
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  throw InputError("expected a rational, got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
  return json{{"rat", rational_to_json(s.rat())}, {"delta", rational_to_json(s.coef_delta())}};
}

Scalar scalar_from_json(const json& j, long n) {
  if (j.is_object()) return Scalar(rational_from_json(field(j, "rat")), rational_from_json(field(j, "delta")), n);
  return Scalar(rational_from_json(j));
}

StructureConstants constants_from_json(const json& j) {
  StructureConstants sc;
  const json& basis = field(j, "basis");
  if (!basis.is_array() || basis.empty()) throw InputError("basis: expected a non-empty array of names");
  for (const auto& b : basis) {
    if (!b.is_string()) throw InputError("basis: names must be strings");
    sc.basis.push_back(b.get<std::string>());
  }
  const std::size_t n = sc.basis.size();
  auto cube = [&](const char* key) {
    const json& c = field(j, key);
    if (!c.is_array() || c.size() != n) throw InputError(std::string(key) + ": expected " + std::to_string(n) + " planes");
    std::vector<std::vector<std::vector<Rational>>> out;
    for (const auto& plane : c) {
      if (!plane.is_array() || plane.size() != n) throw InputError(std::string(key) + ": wrong plane size");
      std::vector<std::vector<Rational>> p;
      for (const auto& row : plane) p.push_back(rational_vector(row, n, key));
      out.push_back(std::move(p));
    }
    return out;
  };
  sc.mult = cube("mult");
  sc.comult = cube("comult");
  sc.unit = rational_vector(field(j, "unit"), n, "unit");
  sc.counit = rational_vector(field(j, "counit"), n, "counit");
  const json& s = field(j, "antipode");
  if (!s.is_array() || s.size() != n) throw InputError("antipode: expected " + std::to_string(n) + " rows");
  for (const auto& row : s) sc.antipode.push_back(rational_vector(row, n, "antipode"));
  return sc;
}

json constants_to_json(const StructureConstants& sc) {
  auto vec = [](const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_den() == 1 ? integer_to_json(x.get_num()) : json(x.get_str()));
    return a;
  };
  auto cube = [&](const auto& c) {
    json a = json::array();
    for (const auto& plane : c) {
      json p = json::array();
      for (const auto& row : plane) p.push_back(vec(row));
      a.push_back(p);
    }
    return a;
  };
  json s = json::array();
  for (const auto& row : sc.antipode) s.push_back(vec(row));
  return json{{"type", "constants"}, {"basis", sc.basis}, {"mult", cube(sc.mult)}, {"unit", vec(sc.unit)},
              {"comult", cube(sc.comult)}, {"counit", vec(sc.counit)}, {"antipode", s}};
}

HopfAlgebra hopf_from_json(const json& j, const std::string& base_dir, int delta_sign) {
  const json& type = field(j, "type");
  if (!type.is_string()) throw InputError("type: expected a string");
  const std::string t = type.get<std::string>();
  try {
    if (t == "constants") return HopfAlgebra::from_constants(constants_from_json(j), delta_sign);
    if (t == "group") {
      const json& table = field(j, "table");
      if (!table.is_array()) throw InputError("table: expected an array of rows");
      GroupTable g;
      for (const auto& row : table) {
        if (!row.is_array()) throw InputError("table: expected an array of rows");
        std::vector<int> r;
        for (const auto& x : row) {
          if (!x.is_number_integer()) throw InputError("table: entries must be integers");
          r.push_back(x.get<int>());
        }
        g.push_back(std::move(r));
      }
      std::vector<std::string> names;
      if (j.contains("names"))
        for (const auto& x : j.at("names")) names.push_back(x.get<std::string>());
      return HopfAlgebra::group_algebra(g, delta_sign, names);
    }
    if (t == "dual") {
      const json& of = field(j, "of");
      if (of.is_string()) {
        const std::filesystem::path p = std::filesystem::path(base_dir) / of.get<std::string>();
        return build_dual(load_hopf(p.string(), delta_sign), delta_sign);
      }
      return build_dual(hopf_from_json(of, base_dir, delta_sign), delta_sign);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
  throw InputError("unknown Hopf spec type \"" + t + "\"");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

HopfAlgebra load_hopf(const std::string& path, int delta_sign) {
  const json j = read_json_file(path);
  return hopf_from_json(j, std::filesystem::path(path).parent_path().string(), delta_sign);
}

LabeledNetwork network_from_json(const json& j, const HopfAlgebra& h) {
  LabeledNetwork n;
  const long dim = static_cast<long>(h.dim());
  try {
    if (j.contains("shading")) {
      const std::string s = j.at("shading").get<std::string>();
      if (s == "plus") n.shading = Shading::plus;
      else if (s == "minus") n.shading = Shading::minus;
      else throw InputError("shading must be \"plus\" or \"minus\"");
    }
    if (j.contains("boxes")) {
      const json& boxes = j.at("boxes");
      if (!boxes.is_object()) throw InputError("boxes: expected an object");
      for (const auto& [name, label] : boxes.items()) {
        Element e(h.dim());
        if (label.is_string()) {
          const auto& names = h.basis_names();
          const auto it = std::find(names.begin(), names.end(), label.get<std::string>());
          if (it == names.end()) throw InputError("box " + name + ": unknown basis element " + label.dump());
          e = h.basis(static_cast<std::size_t>(it - names.begin()));
        } else {
          if (!label.is_array() || label.size() != h.dim())
            throw InputError("box " + name + ": expected " + std::to_string(h.dim()) + " coefficients");
          for (std::size_t i = 0; i < h.dim(); ++i) e[i] = scalar_from_json(label[i], dim);
        }
        n.boxes.emplace(name, std::move(e));
      }
    }
    const json& loops = field(j, "loops");
    if (!loops.is_array()) throw InputError("loops: expected an array");
    for (const auto& loop : loops) {
      if (!loop.is_array()) throw InputError("loops: each loop is an array of passes");
      Loop l;
      for (const auto& p : loop) {
        const std::string side = field(p, "side").get<std::string>();
        if (side != "star" && side != "other") throw InputError("side must be \"star\" or \"other\"");
        l.push_back({field(p, "box").get<std::string>(), side == "star" ? Side::star : Side::other});
      }
      n.loops.push_back(std::move(l));
    }
    validate(n, h.dim());
  } catch (const json::exception& e) {
    throw InputError(e.what());
  } catch (const InvalidNetwork& e) {
    throw InputError(e.what());
  }
  return n;
}

LabeledNetwork load_network(const std::string& path, const HopfAlgebra& h) {
  return network_from_json(read_json_file(path), h);
}

json network_to_json(const LabeledNetwork& n) {
  json boxes = json::object();
  for (const auto& [name, label] : n.boxes) {
    json coeffs = json::array();
    for (const auto& c : label.coeffs) coeffs.push_back(scalar_to_json(c));
    boxes[name] = coeffs;
  }
  json loops = json::array();
  for (const auto& loop : n.loops) {
    json l = json::array();
    for (const auto& p : loop) l.push_back({{"box", p.box}, {"side", to_string(p.side)}});
    loops.push_back(l);
  }
  return json{{"shading", to_string(n.shading)}, {"boxes", boxes}, {"loops", loops}};
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return json{{"passed", r.passed()}, {"checks", checks}};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hpa
