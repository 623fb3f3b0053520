#include "mumbound/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "mumbound/error.hpp"

namespace mumbound {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_field(const json& j, const char* key) {
  try {
    return require_field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("JSON: field '") + key + "': " + e.what());
  }
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    json c = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      r.push_back(m(i, k).real());
      c.push_back(m(i, k).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const json& j) {
  const auto dim = get_field<long>(j, "dim");
  if (dim < 1) throw ValidationError("JSON: matrix dim must be positive");
  const auto re = get_field<std::vector<std::vector<double>>>(j, "re");
  const auto im = get_field<std::vector<std::vector<double>>>(j, "im");
  if (re.size() != static_cast<std::size_t>(dim) || im.size() != static_cast<std::size_t>(dim)) {
    throw ValidationError("JSON: matrix has wrong number of rows for dim " + std::to_string(dim));
  }
  Matrix m(dim, dim);
  for (long i = 0; i < dim; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (re[ui].size() != static_cast<std::size_t>(dim) || im[ui].size() != static_cast<std::size_t>(dim)) {
      throw ValidationError("JSON: matrix row " + std::to_string(i) + " has wrong length");
    }
    for (long k = 0; k < dim; ++k) m(i, k) = Complex(re[ui][static_cast<std::size_t>(k)], im[ui][static_cast<std::size_t>(k)]);
  }
  return m;
}

json to_json(const HermitianOperator& op) { return matrix_to_json(op.matrix()); }
json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

json to_json(const MumSet& set) {
  json groups = json::array();
  for (const auto& group : set.elements()) {
    json g = json::array();
    for (const auto& p : group) g.push_back(to_json(p));
    groups.push_back(std::move(g));
  }
  return {{"d", set.d()},
          {"t", set.t()},
          {"kappa", set.kappa()},
          {"basis", set.basis_label()},
          {"elements", std::move(groups)}};
}

json to_json(const SicSet& set) {
  json elements = json::array();
  for (const auto& p : set.elements()) elements.push_back(to_json(p));
  return {{"d", set.d()}, {"a", set.a()}, {"elements", std::move(elements)}};
}

DensityMatrix density_matrix_from_json(const json& j) {
  return DensityMatrix(HermitianOperator(matrix_from_json(j)));
}

MumSet mum_set_from_json(const json& j, bool validate) {
  const int d = get_field<int>(j, "d");
  const double t = get_field<double>(j, "t");
  const double kappa = get_field<double>(j, "kappa");
  const std::string basis = j.contains("basis") ? get_field<std::string>(j, "basis") : std::string("imported");
  const json& el = require_field(j, "elements");
  if (!el.is_array()) throw ValidationError("JSON: 'elements' must be an array of groups");
  OperatorGroups groups;
  for (const auto& g : el) {
    if (!g.is_array()) throw ValidationError("JSON: each MUM group must be an array");
    std::vector<HermitianOperator> ops;
    for (const auto& m : g) ops.emplace_back(matrix_from_json(m));
    groups.push_back(std::move(ops));
  }
  MumSet set = MumSet::from_elements(d, t, kappa, std::move(groups), basis);
  if (validate) {
    const ValidationReport report = validate_mums(set, kImportTolerance);
    if (!report.passed()) throw ValidationError("imported MUM set failed validation\n" + report.summary());
  }
  return set;
}

SicSet sic_set_from_json(const json& j, bool validate) {
  const int d = get_field<int>(j, "d");
  const double a = get_field<double>(j, "a");
  const json& el = require_field(j, "elements");
  if (!el.is_array()) throw ValidationError("JSON: 'elements' must be an array");
  std::vector<HermitianOperator> ops;
  for (const auto& m : el) ops.emplace_back(matrix_from_json(m));
  SicSet set(d, a, std::move(ops));
  if (validate) {
    const ValidationReport report = validate_sic(set, kImportTolerance);
    if (!report.passed()) throw ValidationError("imported SIC set failed validation\n" + report.summary());
  }
  return set;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace mumbound
