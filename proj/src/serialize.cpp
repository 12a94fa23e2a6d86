#include "fuscat/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "fuscat/error.hpp"

namespace fuscat {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::Schema, what); }

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) schema(where + ": not a decimal integer");
    return z;
  }
  schema(where + ": expected an integer");
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) schema(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t index_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<CycNum> vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array");
  std::vector<CycNum> out;
  for (const auto& x : j) out.push_back(cycnum_from_json(x));
  return out;
}

}  // namespace

json cycnum_to_json(const CycNum& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back({integer_to_json(c.get_num()), integer_to_json(c.get_den())});
  return {{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

CycNum cycnum_from_json(const json& j) {
  if (j.is_number_integer()) return CycNum(j.get<long>());
  if (!j.is_object()) schema("CycNum must be an object or an integer");
  const json& n = field(j, "conductor");
  if (!n.is_number_integer() || n.get<long long>() <= 0 || n.get<long long>() > 1000000) {
    schema("CycNum conductor must be a positive integer");
  }
  const auto conductor = n.get<unsigned>();
  const json& cs = field(j, "coeffs");
  if (!cs.is_array() || cs.size() != euler_phi(conductor)) {
    schema("CycNum over conductor " + std::to_string(conductor) + " needs " + std::to_string(euler_phi(conductor)) +
           " coefficients");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 2) schema("rational coefficient must be [num, den]");
    const Integer num = integer_from_json(c[0], "numerator");
    const Integer den = integer_from_json(c[1], "denominator");
    if (den <= 0) schema("denominator must be positive");
    Rational q(num, den);
    q.canonicalize();
    if (q.get_den() != den) schema("rational coefficient is not in lowest terms");
    coeffs.push_back(q);
  }
  return CycNum(conductor, std::move(coeffs));
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(cycnum_to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) schema("matrix must be an array of rows");
  Matrix m;
  for (const auto& row : j) m.push_back(vector_from_json(row, "matrix row"));
  return m;
}

std::string approx_string(const CycNum& x) {
  const std::complex<double> z = embed_complex(x);
  const double scale = std::max(1.0, std::abs(z));
  auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return std::string(buf);
  };
  const double re = std::abs(z.real()) < 1e-13 * scale ? 0.0 : z.real();
  if (x.is_rational() || std::abs(z.imag()) < 1e-13 * scale) return fmt(re);
  const double im = z.imag();
  return fmt(re) + (im < 0 ? " - " : " + ") + fmt(std::abs(im)) + "i";
}

json exact_value(const CycNum& x) { return {{"exact", cycnum_to_json(x)}, {"approx", approx_string(x)}}; }

json entry_to_json(const CatalogEntry& entry) {
  const FusionRing& ring = entry.ring;
  const std::size_t r = ring.rank();
  unsigned conductor = 1;
  auto track = [&](const CycNum& x) { conductor = std::lcm(conductor, x.conductor()); };
  json out;
  out["rank"] = r;
  out["names"] = ring.names();
  json tensor = json::array();
  for (std::size_t i = 0; i < r; ++i) {
    json a = json::array();
    for (std::size_t j = 0; j < r; ++j) {
      json b = json::array();
      for (std::size_t k = 0; k < r; ++k) b.push_back(ring.N(i, j, k));
      a.push_back(std::move(b));
    }
    tensor.push_back(std::move(a));
  }
  out["tensor"] = std::move(tensor);
  json dual = json::array();
  for (std::size_t i = 0; i < r; ++i) dual.push_back(ring.dual(i));
  out["dual"] = std::move(dual);
  if (ring.has_exact_dims()) {
    json dims = json::array();
    for (const auto& d : *ring.fpdims()) {
      track(d);
      dims.push_back(cycnum_to_json(d));
    }
    out["fpdims"] = std::move(dims);
  }
  if (entry.smatrix) {
    for (const auto& row : entry.smatrix->matrix())
      for (const auto& x : row) track(x);
    out["smatrix"] = matrix_to_json(entry.smatrix->matrix());
  }
  if (entry.table) {
    for (const auto& row : entry.table->matrix())
      for (const auto& x : row) track(x);
    out["char_table"] = matrix_to_json(entry.table->matrix());
  }
  if (entry.twists) {
    json tw = json::array();
    for (const auto& t : *entry.twists) {
      track(t);
      tw.push_back(cycnum_to_json(t));
    }
    out["twists"] = std::move(tw);
  }
  out["conductor"] = conductor;
  return out;
}

CatalogEntry entry_from_json(const json& j, std::string key) {
  if (!j.is_object()) schema("top level must be an object");
  const json& rank_j = field(j, "rank");
  if (!rank_j.is_number_integer() || rank_j.get<long long>() < 1) schema("rank must be a positive integer");
  const auto r = rank_j.get<std::size_t>();

  FusionData d;
  const json& names = field(j, "names");
  if (!names.is_array()) schema("names must be an array of strings");
  for (const auto& n : names) {
    if (!n.is_string()) schema("names must be an array of strings");
    d.names.push_back(n.get<std::string>());
  }
  if (d.names.size() != r) schema("names has " + std::to_string(d.names.size()) + " entries, rank is " + std::to_string(r));

  const json& tensor = field(j, "tensor");
  if (!tensor.is_array() || tensor.size() != r) schema("tensor must be rank x rank x rank");
  for (const auto& a : tensor) {
    if (!a.is_array() || a.size() != r) schema("tensor must be rank x rank x rank");
    std::vector<std::vector<int>> slab;
    for (const auto& b : a) {
      if (!b.is_array() || b.size() != r) schema("tensor must be rank x rank x rank");
      std::vector<int> row;
      for (const auto& n : b) {
        if (!n.is_number_integer()) schema("tensor entries must be integers");
        row.push_back(n.get<int>());
      }
      slab.push_back(std::move(row));
    }
    d.tensor.push_back(std::move(slab));
  }

  const json& dual = field(j, "dual");
  if (!dual.is_array() || dual.size() != r) schema("dual must have rank entries");
  for (const auto& x : dual) d.dual.push_back(index_from_json(x, "dual"));

  if (j.contains("fpdims")) d.fpdims = vector_from_json(j.at("fpdims"), "fpdims");
  std::optional<Matrix> table, s;
  std::optional<std::vector<CycNum>> twists;
  if (j.contains("char_table")) table = matrix_from_json(j.at("char_table"));
  if (j.contains("smatrix")) s = matrix_from_json(j.at("smatrix"));
  if (j.contains("twists")) twists = vector_from_json(j.at("twists"), "twists");

  if (j.contains("conductor")) {
    const json& c = j.at("conductor");
    if (!c.is_number_integer() || c.get<long long>() <= 0) schema("conductor must be a positive integer");
    const auto n = c.get<unsigned>();
    auto check = [&](const CycNum& x) {
      if (n % x.conductor() != 0) {
        schema("value over conductor " + std::to_string(x.conductor()) + " does not fit declared conductor " +
               std::to_string(n));
      }
    };
    if (d.fpdims)
      for (const auto& x : *d.fpdims) check(x);
    for (const auto* m : {&table, &s})
      if (*m)
        for (const auto& row : **m)
          for (const auto& x : row) check(x);
    if (twists)
      for (const auto& x : *twists) check(x);
  }
  return make_entry(std::move(key), std::move(d), std::move(table), std::move(s), std::move(twists), "input file");
}

CatalogEntry load_entry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    schema(std::string("malformed JSON: ") + e.what());
  }
  return entry_from_json(j, path);
}

}  // namespace fuscat
