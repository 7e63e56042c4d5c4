#include "quot/json_io.hpp"

#include "quot/errors.hpp"

namespace quot {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad integer \"" + j.get<std::string>() + "\"");
    return z;
  }
  throw InputError("expected an integer, got " + j.dump());
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InputError("bad rational \"" + s + "\"");
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

// An integer, a "p/q" string, or an array of [num, den, exp] terms.
bool is_entry(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return true;
  if (!j.is_array()) return false;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || t[0].is_array()) return false;
  }
  return true;
}

bool is_row(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) return false;
  for (const auto& e : j) {
    if (!is_entry(e)) return false;
  }
  return true;
}

}  // namespace

Json to_json(const Cyclotomic& a) {
  Json out = Json::array();
  for (const auto& t : a.to_terms()) out.push_back(Json::array({integer_json(t.num), integer_json(t.den), t.exponent}));
  return out;
}

Cyclotomic cyclotomic_from_json(const Json& j, const CyclotomicField& field) {
  if (j.is_number_integer()) return Cyclotomic(Rational(j.get<long>())).bound_to(field);
  if (j.is_string()) return Cyclotomic(rational_from_string(j.get<std::string>())).bound_to(field);
  if (!j.is_array()) throw InputError("expected a cyclotomic term array, got " + j.dump());
  std::vector<Cyclotomic::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[2].is_number_integer()) {
      throw InputError("cyclotomic term must be [num, den, exp], got " + t.dump());
    }
    terms.push_back({integer_from_json(t[0]), integer_from_json(t[1]), t[2].get<int>()});
  }
  return Cyclotomic::from_terms(field, terms);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, int n, const CyclotomicField& field) {
  if (!j.is_array()) throw InputError("matrix must be an array");
  const std::size_t un = static_cast<std::size_t>(n);
  Matrix m(n, n);
  bool nested = j.size() == un;
  for (std::size_t r = 0; nested && r < un; ++r) nested = is_row(j[r], un);
  if (nested) {
    for (int r = 0; r < n; ++r) {
      const Json& row = j[static_cast<std::size_t>(r)];
      if (!row.is_array() || row.size() != un) throw InputError("matrix row " + std::to_string(r) + " has wrong length");
      for (int c = 0; c < n; ++c) m(r, c) = cyclotomic_from_json(row[static_cast<std::size_t>(c)], field);
    }
  } else {
    if (j.size() != un * un) {
      throw InputError("matrix must have " + std::to_string(n) + " rows or " + std::to_string(n * n) + " entries");
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = cyclotomic_from_json(j[static_cast<std::size_t>(r * n + c)], field);
  }
  return m;
}

Json to_json(const GroupDescription& d) {
  Json gens = Json::array();
  for (const auto& g : d.generators) gens.push_back(to_json(g));
  Json out = {{"conductor", d.conductor}, {"dimension", d.dimension}, {"generators", std::move(gens)}};
  if (!d.faithful) out["faithful"] = false;
  return out;
}

GroupDescription group_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("group description must be a JSON object");
  for (const char* key : {"conductor", "dimension", "generators"}) {
    if (!j.contains(key)) throw InputError(std::string("group description lacks \"") + key + "\"");
  }
  if (!j["conductor"].is_number_integer() || j["conductor"].get<long>() < 1) {
    throw InputError("\"conductor\" must be a positive integer");
  }
  if (!j["dimension"].is_number_integer() || j["dimension"].get<long>() < 1) {
    throw InputError("\"dimension\" must be a positive integer");
  }
  if (!j["generators"].is_array()) throw InputError("\"generators\" must be an array");
  GroupDescription d;
  d.conductor = j["conductor"].get<int>();
  d.dimension = j["dimension"].get<int>();
  if (j.contains("faithful")) {
    if (!j["faithful"].is_boolean()) throw InputError("\"faithful\" must be a boolean");
    d.faithful = j["faithful"].get<bool>();
  }
  if (!d.faithful) {
    throw InputError("non-faithful actions are not supported: the group must be given by its matrices");
  }
  const auto& field = CyclotomicField::get(d.conductor);
  for (const auto& g : j["generators"]) d.generators.push_back(matrix_from_json(g, d.dimension, field));
  if (d.generators.empty()) d.generators.push_back(identity_matrix(d.dimension, field));
  return d;
}

GroupDescription parse_group(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return group_from_json(j);
}

}  // namespace quot
