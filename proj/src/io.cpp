#include "repgerm/io.hpp"
#include "repgerm/mhs.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace repgerm {

using nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
}

namespace {

Mat<Rational> matrix_from_json(const ordered_json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& entry : row) r.push_back(Rational::parse(entry.get<std::string>()));
    rows.push_back(std::move(r));
  }
  return Mat<Rational>::from_rows(rows);
}

ordered_json matrix_to_json(const Mat<Rational>& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

WDGLA wdgla_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("WDGLA file: ") + e.what());
  }
  try {
    std::vector<WBasisElement> basis;
    for (const auto& b : j.at("basis"))
      basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>(),
                       b.at("weight").get<int>()});
    auto index_of = [&](const std::string& name) {
      for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == name) return static_cast<int>(i);
      throw ParseError("WDGLA file: unknown basis name '" + name + "'");
    };
    const int n = static_cast<int>(basis.size());
    Mat<Rational> d(n, n);
    if (j.contains("differential"))
      for (const auto& e : j.at("differential")) {
        int from = index_of(e.at("from").get<std::string>());
        int to = index_of(e.at("to").get<std::string>());
        d.at(to, from) += Rational::parse(e.at("coeff").get<std::string>());
      }
    std::map<std::pair<int, int>, SparseVec> bracket;
    if (j.contains("bracket"))
      for (const auto& e : j.at("bracket")) {
        int left = index_of(e.at("left").get<std::string>());
        int right = index_of(e.at("right").get<std::string>());
        SparseVec targets;
        for (const auto& t : e.at("targets"))
          targets.emplace_back(index_of(t.at("to").get<std::string>()),
                               Rational::parse(t.at("coeff").get<std::string>()));
        bracket[{left, right}] = std::move(targets);
      }
    WDGLA L(std::move(basis), std::move(d), std::move(bracket));
    if (j.contains("action"))
      for (const auto& [name, mat] : j.at("action").items())
        L.action[name] = matrix_from_json(mat);
    if (j.contains("augmentation")) {
      const auto& a = j.at("augmentation");
      WDGLA::Augmentation aug;
      aug.target.dim = a.at("target").at("dim").get<int>();
      if (a.at("target").contains("name")) aug.target.name = a.at("target").at("name").get<std::string>();
      if (a.at("target").contains("bracket"))
        for (const auto& e : a.at("target").at("bracket")) {
          SparseVec targets;
          for (const auto& t : e.at("targets"))
            targets.emplace_back(t.at("to").get<int>(),
                                 Rational::parse(t.at("coeff").get<std::string>()));
          aug.target.bracket[{e.at("left").get<int>(), e.at("right").get<int>()}] =
              std::move(targets);
        }
      aug.matrix = matrix_from_json(a.at("matrix"));
      if (a.contains("surjective")) aug.declared_surjective = a.at("surjective").get<bool>();
      L.augmentation = std::move(aug);
    }
    return L;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("WDGLA file: ") + e.what());
  }
}

std::string wdgla_to_json(const WDGLA& L) {
  ordered_json j;
  j["schema"] = 1;
  j["basis"] = ordered_json::array();
  for (const auto& b : L.basis())
    j["basis"].push_back({{"name", b.name}, {"degree", b.degree}, {"weight", b.weight}});
  j["differential"] = ordered_json::array();
  for (int col = 0; col < L.dim(); ++col)
    for (int row = 0; row < L.dim(); ++row)
      if (!L.d().at(row, col).is_zero())
        j["differential"].push_back({{"from", L.elem(col).name},
                                     {"to", L.elem(row).name},
                                     {"coeff", L.d().at(row, col).str()}});
  j["bracket"] = ordered_json::array();
  for (const auto& [ij, targets] : L.bracket()) {
    if (ij.first > ij.second) continue;  // one order per pair; the loader refills
    ordered_json e;
    e["left"] = L.elem(ij.first).name;
    e["right"] = L.elem(ij.second).name;
    e["targets"] = ordered_json::array();
    for (const auto& [k, c] : targets)
      e["targets"].push_back({{"to", L.elem(k).name}, {"coeff", c.str()}});
    j["bracket"].push_back(std::move(e));
  }
  if (!L.action.empty()) {
    ordered_json act;
    for (const auto& [name, m] : L.action) act[name] = matrix_to_json(m);
    j["action"] = std::move(act);
  }
  if (L.augmentation) {
    const auto& aug = *L.augmentation;
    ordered_json a;
    a["target"]["dim"] = aug.target.dim;
    if (!aug.target.name.empty()) a["target"]["name"] = aug.target.name;
    a["target"]["bracket"] = ordered_json::array();
    for (const auto& [ij, targets] : aug.target.bracket) {
      if (ij.first > ij.second) continue;
      ordered_json e;
      e["left"] = ij.first;
      e["right"] = ij.second;
      e["targets"] = ordered_json::array();
      for (const auto& [k, c] : targets)
        e["targets"].push_back({{"to", k}, {"coeff", c.str()}});
      a["target"]["bracket"].push_back(std::move(e));
    }
    a["matrix"] = matrix_to_json(aug.matrix);
    a["surjective"] = aug.declared_surjective;
    j["augmentation"] = std::move(a);
  }
  return j.dump(2) + "\n";
}

WeightedCone cone_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("cone file: ") + e.what());
  }
  try {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (const auto& v : j.at("variables")) {
      names.push_back(v.at("name").get<std::string>());
      weights.push_back(v.at("weight").get<int>());
    }
    std::vector<GPoly> relations;
    for (const auto& r : j.at("relations"))
      relations.push_back(GPoly::parse(r.get<std::string>(), names));
    return make_cone(std::move(names), std::move(weights), std::move(relations));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cone file: ") + e.what());
  }
}

std::string cone_to_json(const WeightedCone& c) {
  ordered_json j;
  j["schema"] = 1;
  j["field"] = c.is_real() ? "Q" : "Q(i)";
  j["variables"] = ordered_json::array();
  for (size_t i = 0; i < c.variables.size(); ++i)
    j["variables"].push_back({{"name", c.variables[i]}, {"weight", c.weights[i]}});
  j["relations"] = ordered_json::array();
  for (const auto& r : c.relations) j["relations"].push_back(r.str(c.variables));
  j["degrees"] = c.declared_degrees;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

namespace {

template <class K>
std::vector<std::vector<K>> basis_rows_from_json(const ordered_json& j,
                                                 K (*parse)(std::string_view)) {
  std::vector<std::vector<K>> rows;
  for (const auto& row : j) {
    std::vector<K> r;
    for (const auto& e : row) r.push_back(parse(e.template get<std::string>()));
    rows.push_back(std::move(r));
  }
  return rows;
}

Rational parse_rat(std::string_view s) { return Rational::parse(s); }
GaussianRational parse_gauss(std::string_view s) { return GaussianRational::parse(s); }

template <class K>
ordered_json subspace_to_json(const Subspace<K>& s) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < s.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (const auto& x : s.basis_vector(i)) row.push_back(scalar_str(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

FilteredVectorSpace filtered_space_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("filtered space file: ") + e.what());
  }
  try {
    FilteredVectorSpace v;
    v.dim = j.at("dimension").get<int>();
    for (const auto& step : j.at("W"))
      v.W.emplace_back(step.at("level").get<int>(),
                       Subspace<Rational>::span(
                           v.dim, basis_rows_from_json<Rational>(step.at("basis"), parse_rat)));
    if (j.contains("F"))
      for (const auto& step : j.at("F"))
        v.F.emplace_back(step.at("level").get<int>(),
                         Subspace<GaussianRational>::span(
                             v.dim, basis_rows_from_json<GaussianRational>(step.at("basis"),
                                                                           parse_gauss)));
    v.validate();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("filtered space file: ") + e.what());
  }
}

std::string filtered_space_to_json(const FilteredVectorSpace& v) {
  ordered_json j;
  j["schema"] = 1;
  j["dimension"] = v.dim;
  j["W"] = ordered_json::array();
  for (const auto& [lvl, sub] : v.W)
    j["W"].push_back({{"level", lvl}, {"basis", subspace_to_json(sub)}});
  j["F"] = ordered_json::array();
  for (const auto& [lvl, sub] : v.F)
    j["F"].push_back({{"level", lvl}, {"basis", subspace_to_json(sub)}});
  return j.dump(2) + "\n";
}

FilteredComplex filtered_complex_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("filtered complex file: ") + e.what());
  }
  try {
    FilteredComplex c;
    bool first = true;
    for (const auto& comp : j.at("components")) {
      int degree = comp.at("degree").get<int>();
      if (first) {
        c.first_degree = degree;
        first = false;
      } else if (degree != c.first_degree + c.degrees()) {
        throw ParseError("filtered complex file: degrees must be consecutive");
      }
      int dim = comp.at("dimension").get<int>();
      c.dims.push_back(dim);
      std::vector<std::pair<int, Subspace<Rational>>> chain;
      for (const auto& step : comp.at("W"))
        chain.emplace_back(step.at("level").get<int>(),
                           Subspace<Rational>::span(
                               dim, basis_rows_from_json<Rational>(step.at("basis"), parse_rat)));
      c.W.push_back(std::move(chain));
    }
    c.d.resize(c.dims.size() > 1 ? c.dims.size() - 1 : 0);
    for (size_t k = 0; k < c.d.size(); ++k)
      c.d[k] = Mat<Rational>(c.dims[k + 1], c.dims[k]);
    if (j.contains("differentials"))
      for (const auto& e : j.at("differentials")) {
        int from = e.at("from_degree").get<int>() - c.first_degree;
        if (from < 0 || from + 1 >= c.degrees())
          throw ParseError("filtered complex file: differential degree out of range");
        c.d[static_cast<size_t>(from)] = matrix_from_json(e.at("matrix"));
      }
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("filtered complex file: ") + e.what());
  }
}

std::string filtered_complex_to_json(const FilteredComplex& c) {
  ordered_json j;
  j["schema"] = 1;
  j["components"] = ordered_json::array();
  for (int k = 0; k < c.degrees(); ++k) {
    ordered_json comp;
    comp["degree"] = c.first_degree + k;
    comp["dimension"] = c.dims[static_cast<size_t>(k)];
    comp["W"] = ordered_json::array();
    for (const auto& [lvl, sub] : c.W[static_cast<size_t>(k)])
      comp["W"].push_back({{"level", lvl}, {"basis", subspace_to_json(sub)}});
    j["components"].push_back(std::move(comp));
  }
  j["differentials"] = ordered_json::array();
  for (size_t k = 0; k < c.d.size(); ++k)
    j["differentials"].push_back({{"from_degree", c.first_degree + static_cast<int>(k)},
                                  {"matrix", matrix_to_json(c.d[k])}});
  return j.dump(2) + "\n";
}

}  // namespace repgerm
