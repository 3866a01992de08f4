#include "jetinv/document.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "jetinv/errors.hpp"
#include "jetinv/velocity_ops.hpp"

namespace jetinv {

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::velocity: return "velocity";
    case DocumentKind::group: return "group";
    case DocumentKind::grassmann: return "grassmann";
    case DocumentKind::chart: return "chart";
    case DocumentKind::polynomial_map: return "polynomial-map";
  }
  return "unknown";
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const Json& doc, const char* name, int min_value) {
  const Json& value = field(doc, name);
  if (!value.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  const auto x = value.get<long long>();
  if (x < min_value || x > 64) throw ParseError(std::string("field '") + name + "' out of range");
  return static_cast<int>(x);
}

std::vector<int> int_list(const Json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be a list of integers");
  std::vector<int> out;
  for (const Json& e : value) {
    if (!e.is_number_integer()) throw ParseError(std::string(what) + " must be a list of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

template <class T>
T parse_value(const Json& value) {
  if (value.is_string()) return ScalarTraits<T>::parse(value.get<std::string>());
  if (value.is_number_integer()) return ScalarTraits<T>::from_int(value.get<long>());
  if constexpr (!ScalarTraits<T>::exact) {
    if (value.is_number_float()) return value.get<double>();
  }
  throw ParseError("value must be a string" + std::string(ScalarTraits<T>::exact ? " \"p/q\"" : " decimal"));
}

template <class T>
Json header(DocumentKind kind) {
  Json doc = Json::object();
  doc["kind"] = std::string(to_string(kind));
  doc["scalar_mode"] = std::string(to_string(ScalarTraits<T>::mode));
  return doc;
}

template <class T>
void check_header(const Json& doc, DocumentKind expected) {
  if (document_kind(doc) != expected) {
    throw ParseError("expected a " + std::string(to_string(expected)) + " document, got " +
                     std::string(to_string(document_kind(doc))));
  }
  if (doc.contains("scalar_mode") && document_mode(doc) != ScalarTraits<T>::mode) {
    throw ParseError("document scalar_mode is " + std::string(to_string(document_mode(doc))) + ", expected " +
                     std::string(to_string(ScalarTraits<T>::mode)));
  }
}

Json coordinate(int component, const MultiIndex& index, std::string value) {
  return Json{{"component", component + 1}, {"index", index.to_one_based()}, {"value", std::move(value)}};
}

template <class T>
Json table_coords(const JetTable<T>& table, const std::function<bool(int, const MultiIndex&)>& keep,
                  const std::function<int(int)>& component_label) {
  Json coords = Json::array();
  for (int c = 0; c < table.components(); ++c) {
    for (std::size_t k = 0; k < table.space().size(); ++k) {
      const MultiIndex& index = table.space().at(k);
      if (!keep(c, index)) continue;
      coords.push_back(coordinate(component_label(c), index, ScalarTraits<T>::format(table(c, k))));
    }
  }
  return coords;
}

// Fills `table` from doc["coords"]. `slot` maps a wire component (0-based)
// and index to the table row, or -1 when the pair is not a coordinate.
template <class T>
void read_coords(const Json& doc, JetTable<T>& table, int wire_components,
                 const std::function<int(int, const MultiIndex&)>& slot, std::size_t expected) {
  const Json& coords = field(doc, "coords");
  if (!coords.is_array()) throw ParseError("'coords' must be a list");
  std::vector<bool> seen(static_cast<std::size_t>(table.components()) * table.space().size(), false);
  std::size_t count = 0;
  for (const Json& record : coords) {
    const Json& comp = field(record, "component");
    if (!comp.is_number_integer()) throw ParseError("'component' must be an integer");
    const int component = comp.get<int>();
    if (component < 1 || component > wire_components) {
      throw ParseError("component " + std::to_string(component) + " outside [1, " + std::to_string(wire_components) + "]");
    }
    const std::vector<int> raw = int_list(field(record, "index"), "'index'");
    if (!std::is_sorted(raw.begin(), raw.end())) throw ParseError("index entries must be sorted");
    if (static_cast<int>(raw.size()) > table.order()) throw ParseError("index longer than the declared order");
    MultiIndex index;
    try {
      index = MultiIndex::from_one_based(raw, table.dim());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    const int row = slot(component - 1, index);
    if (row < 0) throw ParseError("component " + std::to_string(component) + " carries no coordinate at this index");
    const std::size_t rank = table.space().rank(index);
    const std::size_t flat = static_cast<std::size_t>(row) * table.space().size() + rank;
    if (seen[flat]) throw ParseError("duplicate coordinate for component " + std::to_string(component));
    seen[flat] = true;
    ++count;
    table(row, rank) = parse_value<T>(field(record, "value"));
  }
  if (count != expected) {
    throw ParseError("expected " + std::to_string(expected) + " coordinates, got " + std::to_string(count));
  }
}

int chart_dim(const Json& doc) {
  if (doc.contains("dim")) return int_field(doc, "dim", 1);
  return int_field(doc, "n", 1) + int_field(doc, "m", 0);
}

}  // namespace

DocumentKind document_kind(const Json& doc) {
  const Json& kind = field(doc, "kind");
  if (!kind.is_string()) throw ParseError("'kind' must be a string");
  const auto text = kind.get<std::string>();
  for (auto k : {DocumentKind::velocity, DocumentKind::group, DocumentKind::grassmann, DocumentKind::chart,
                 DocumentKind::polynomial_map}) {
    if (text == to_string(k)) return k;
  }
  throw ParseError("unknown document kind '" + text + "'");
}

ScalarMode document_mode(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  const auto it = doc.find("scalar_mode");
  if (it == doc.end()) return ScalarMode::rational;
  if (!it->is_string()) throw ParseError("'scalar_mode' must be a string");
  return parse_scalar_mode(it->get<std::string>());
}

template <class T>
Json to_json(const Velocity<T>& v) {
  Json doc = header<T>(DocumentKind::velocity);
  doc["n"] = v.n();
  doc["m"] = v.m();
  doc["r"] = v.r();
  doc["coords"] = table_coords<T>(
      v.table(), [](int, const MultiIndex&) { return true; }, [](int c) { return c; });
  return doc;
}

template <class T>
Json to_json(const GroupJet<T>& a) {
  Json doc = header<T>(DocumentKind::group);
  doc["n"] = a.n();
  doc["r"] = a.r();
  doc["coords"] = table_coords<T>(
      a.table(), [](int, const MultiIndex& index) { return !index.empty(); }, [](int c) { return c; });
  return doc;
}

template <class T>
Json to_json(const GrassmannPoint<T>& p) {
  Json doc = header<T>(DocumentKind::grassmann);
  doc["n"] = p.n();
  doc["m"] = p.m();
  doc["r"] = p.r();
  std::vector<int> chart;
  for (int c : p.nu) chart.push_back(c + 1);
  doc["chart"] = chart;
  Json coords = Json::array();
  for (int k = 0; k < p.n(); ++k) {
    coords.push_back(coordinate(p.nu[static_cast<std::size_t>(k)], MultiIndex{},
                                ScalarTraits<T>::format(p.base[static_cast<std::size_t>(k)])));
  }
  const auto free = p.free_components();
  const Json w = table_coords<T>(
      p.w, [](int, const MultiIndex&) { return true; }, [&](int c) { return free[static_cast<std::size_t>(c)]; });
  coords.insert(coords.end(), w.begin(), w.end());
  doc["coords"] = std::move(coords);
  return doc;
}

template <class T>
Json to_json(const ChartJet<T>& f) {
  Json doc = header<T>(DocumentKind::chart);
  doc["dim"] = f.dim();
  doc["r"] = f.r();
  Json base = Json::array();
  for (const T& x : f.base) base.push_back(ScalarTraits<T>::format(x));
  doc["base"] = std::move(base);
  doc["coords"] = table_coords<T>(
      f.derivs, [](int, const MultiIndex&) { return true; }, [](int c) { return c; });
  return doc;
}

template <class T>
Json to_json(const PolynomialMap<T>& f) {
  Json doc = header<T>(DocumentKind::polynomial_map);
  doc["n"] = f.source_dim;
  doc["components"] = f.target_dim();
  Json monomials = Json::array();
  for (int a = 0; a < f.target_dim(); ++a) {
    for (const auto& [exponents, coeff] : f.components[static_cast<std::size_t>(a)].terms()) {
      monomials.push_back(Json{{"component", a + 1}, {"exponents", exponents}, {"coeff", ScalarTraits<T>::format(coeff)}});
    }
  }
  doc["monomials"] = std::move(monomials);
  return doc;
}

template <class T>
Velocity<T> velocity_from_json(const Json& doc) {
  check_header<T>(doc, DocumentKind::velocity);
  const int n = int_field(doc, "n", 1);
  const int m = int_field(doc, "m", 0);
  const int r = int_field(doc, "r", 0);
  Velocity<T> v(n, m, r);
  read_coords<T>(doc, v.table(), n + m, [](int c, const MultiIndex&) { return c; },
                 static_cast<std::size_t>(n + m) * v.space().size());
  return v;
}

template <class T>
GroupJet<T> group_from_json(const Json& doc) {
  check_header<T>(doc, DocumentKind::group);
  const int n = int_field(doc, "n", 1);
  const int r = int_field(doc, "r", 0);
  GroupJet<T> a(n, r);
  read_coords<T>(doc, a.table(), n, [](int c, const MultiIndex& index) { return index.empty() ? -1 : c; },
                 static_cast<std::size_t>(n) * (a.table().space().size() - 1));
  return a;
}

template <class T>
GrassmannPoint<T> grassmann_from_json(const Json& doc) {
  check_header<T>(doc, DocumentKind::grassmann);
  const int n = int_field(doc, "n", 1);
  const int m = int_field(doc, "m", 1);
  const int r = int_field(doc, "r", 0);
  GrassmannPoint<T> p;
  if (doc.contains("chart")) {
    for (int c : int_list(doc["chart"], "'chart'")) p.nu.push_back(c - 1);
  } else {
    for (int k = 0; k < n; ++k) p.nu.push_back(k);
  }
  if (static_cast<int>(p.nu.size()) != n) throw ParseError("'chart' must list n components");
  std::vector<int> order;
  try {
    order = chart_permutation(p.nu, n + m);
  } catch (const DomainError& e) {
    throw ParseError(std::string("'chart': ") + e.what());
  }
  // rows 0..n-1 hold the base values in their order-0 slot, rows n.. the w's
  JetTable<T> scratch(n + m, IndexSpace(n, r));
  std::vector<int> row_of(static_cast<std::size_t>(n + m));
  for (int k = 0; k < n + m; ++k) row_of[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  read_coords<T>(
      doc, scratch, n + m,
      [&](int c, const MultiIndex& index) {
        const int row = row_of[static_cast<std::size_t>(c)];
        return row < n && !index.empty() ? -1 : row;
      },
      static_cast<std::size_t>(n) + static_cast<std::size_t>(m) * scratch.space().size());
  for (int k = 0; k < n; ++k) p.base.push_back(scratch(k, 0));
  p.w = JetTable<T>(m, scratch.space());
  for (int sigma = 0; sigma < m; ++sigma) {
    const auto src = scratch.row(n + sigma);
    std::copy(src.begin(), src.end(), p.w.row(sigma).begin());
  }
  return p;
}

template <class T>
ChartJet<T> chart_from_json(const Json& doc) {
  check_header<T>(doc, DocumentKind::chart);
  const int dim = chart_dim(doc);
  const int r = int_field(doc, "r", 0);
  const Json& base_json = field(doc, "base");
  if (!base_json.is_array() || static_cast<int>(base_json.size()) != dim) {
    throw ParseError("'base' must list " + std::to_string(dim) + " values");
  }
  std::vector<T> base;
  for (const Json& x : base_json) base.push_back(parse_value<T>(x));
  JetTable<T> table(dim, IndexSpace(dim, r));
  read_coords<T>(doc, table, dim, [](int c, const MultiIndex&) { return c; },
                 static_cast<std::size_t>(dim) * table.space().size());
  return ChartJet<T>(std::move(base), std::move(table));
}

template <class T>
PolynomialMap<T> polynomial_map_from_json(const Json& doc) {
  check_header<T>(doc, DocumentKind::polynomial_map);
  const int n = int_field(doc, "n", 1);
  const int components = int_field(doc, "components", 1);
  PolynomialMap<T> f{n, std::vector<Polynomial<T>>(static_cast<std::size_t>(components), Polynomial<T>(n))};
  const Json& monomials = field(doc, "monomials");
  if (!monomials.is_array()) throw ParseError("'monomials' must be a list");
  for (const Json& record : monomials) {
    const Json& comp = field(record, "component");
    if (!comp.is_number_integer() || comp.get<int>() < 1 || comp.get<int>() > components) {
      throw ParseError("monomial component out of range");
    }
    const std::vector<int> exponents = int_list(field(record, "exponents"), "'exponents'");
    if (static_cast<int>(exponents.size()) != n ||
        std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
      throw ParseError("'exponents' must list n nonnegative integers");
    }
    f.components[static_cast<std::size_t>(comp.get<int>() - 1)].add_term(exponents, parse_value<T>(field(record, "coeff")));
  }
  return f;
}

#define JETINV_INSTANTIATE(T)                                                \
  template Json to_json(const Velocity<T>&);                                 \
  template Json to_json(const GroupJet<T>&);                                 \
  template Json to_json(const GrassmannPoint<T>&);                           \
  template Json to_json(const ChartJet<T>&);                                 \
  template Json to_json(const PolynomialMap<T>&);                            \
  template Velocity<T> velocity_from_json(const Json&);                      \
  template GroupJet<T> group_from_json(const Json&);                         \
  template GrassmannPoint<T> grassmann_from_json(const Json&);               \
  template ChartJet<T> chart_from_json(const Json&);                         \
  template PolynomialMap<T> polynomial_map_from_json(const Json&);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv
