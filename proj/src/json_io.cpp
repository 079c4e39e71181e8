#include "tricanon/json_io.hpp"

#include "tricanon/error.hpp"

namespace tricanon {

namespace {

std::size_t parse_count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

mpz_class parse_integer(const std::string& s) {
  mpz_class v;
  const std::string body = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  if (body.empty() || v.set_str(body, 10) != 0) throw ParseError("malformed integer \"" + s + "\"");
  return v;
}

}  // namespace

json field_to_json(const Field& field) {
  if (field.is_rational()) return {{"type", "Q"}};
  return {{"type", "GF"}, {"p", field.characteristic()}};
}

Field field_from_json(const json& j) {
  const json& type = member(j, "type");
  if (!type.is_string()) throw ParseError("field type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "Q") return Field::rationals();
  if (t == "GF") {
    const json& p = member(j, "p");
    if (!p.is_number_integer()) throw ParseError("field modulus must be an integer");
    return Field::prime(p.get<std::int64_t>());
  }
  throw ParseError("unknown field type \"" + t + "\"");
}

json element_to_json(const FieldElement& x) {
  if (x.field().is_prime_field()) return x.residue();
  const mpq_class& q = x.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

FieldElement element_from_json(const json& j, const Field& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return field.from_mpz(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return field.from_int(j.get<long long>());
  }
  if (!j.is_string()) throw ParseError("field element must be an integer or a \"num/den\" string");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return field.from_mpz(parse_integer(s));
  if (!field.is_rational()) throw ParseError("fraction \"" + s + "\" is only accepted over Q");
  const mpz_class num = parse_integer(s.substr(0, slash));
  const mpz_class den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  return field.from_fraction(num, den);
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j, const Field& field, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  ExactMatrix out(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) +
                       " entries");
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = element_from_json(j[i][c], field);
  }
  return out;
}

json tensor_to_json(const SpatialMatrix& a) {
  json entries = json::array();
  for (std::size_t i = 0; i < a.m(); ++i) {
    json plane = json::array();
    for (std::size_t j = 0; j < a.n(); ++j) {
      json fibre = json::array();
      for (std::size_t k = 0; k < a.q(); ++k) fibre.push_back(element_to_json(a(i, j, k)));
      plane.push_back(std::move(fibre));
    }
    entries.push_back(std::move(plane));
  }
  return {{"field", field_to_json(a.field())},
          {"dims", {a.m(), a.n(), a.q()}},
          {"entries", std::move(entries)}};
}

SpatialMatrix tensor_from_json(const json& j) {
  const Field field = field_from_json(member(j, "field"));
  const json& dims = member(j, "dims");
  if (!dims.is_array() || dims.size() != 3) throw ParseError("dims must be [m, n, q]");
  const Dims d{parse_count(dims[0], "m"), parse_count(dims[1], "n"), parse_count(dims[2], "q")};
  const json& entries = member(j, "entries");
  SpatialMatrix out(field, d);
  const std::string shape = "entries must be nested as [" + d.to_string() + "]";
  if (!entries.is_array() || entries.size() != d.m) throw ParseError(shape);
  for (std::size_t i = 0; i < d.m; ++i) {
    if (!entries[i].is_array() || entries[i].size() != d.n) throw ParseError(shape);
    for (std::size_t jj = 0; jj < d.n; ++jj) {
      const json& fibre = entries[i][jj];
      if (!fibre.is_array() || fibre.size() != d.q) throw ParseError(shape);
      for (std::size_t k = 0; k < d.q; ++k) out(i, jj, k) = element_from_json(fibre[k], field);
    }
  }
  return out;
}

json certificate_to_json(const EquivCertificate& c) {
  return {{"R", matrix_to_json(c.R)}, {"S", matrix_to_json(c.S)}, {"T", matrix_to_json(c.T)}};
}

EquivCertificate certificate_from_json(const json& j, const Field& field, Dims dims) {
  return {matrix_from_json(member(j, "R"), field, dims.m, dims.m),
          matrix_from_json(member(j, "S"), field, dims.n, dims.n),
          matrix_from_json(member(j, "T"), field, dims.q, dims.q)};
}

json mode_ranks_to_json(const ModeRanks& r) { return {r.m, r.n, r.q}; }

json log_to_json(const ReductionLog& log) {
  json out = json::array();
  for (const auto& s : log)
    out.push_back({{"step", s.name}, {"mode", s.mode}, {"matrix", matrix_to_json(s.matrix)}});
  return out;
}

}  // namespace tricanon
