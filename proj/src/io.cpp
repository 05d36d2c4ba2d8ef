#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "gpi/constructions.hpp"
#include "gpi/io.hpp"
#include "json.hpp"

namespace gpi {

namespace {

using json = nlohmann::json;

// A value together with its JSON pointer, for error positions.
struct Node {
  const json &v;
  std::string path;

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what + " at " + (path.empty() ? std::string("/") : path));
  }
  Node operator[](const char *key) const {
    if (!v.is_object()) fail("expected an object");
    auto it = v.find(key);
    if (it == v.end()) fail(std::string("missing key \"") + key + "\"");
    return {*it, path + "/" + key};
  }
  std::optional<Node> opt(const char *key) const {
    if (!v.is_object()) fail("expected an object");
    auto it = v.find(key);
    if (it == v.end()) return std::nullopt;
    return Node{*it, path + "/" + key};
  }
  Node at(std::size_t i) const { return {v.at(i), path + "/" + std::to_string(i)}; }
  std::size_t size() const {
    if (!v.is_array()) fail("expected an array");
    return v.size();
  }
  std::size_t count() const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      fail("expected a non-negative integer");
    return v.get<std::size_t>();
  }
  std::string str() const {
    if (!v.is_string()) fail("expected a string");
    return v.get<std::string>();
  }
  Scalar scalar(Field f) const {
    std::string s;
    if (v.is_string()) s = v.get<std::string>();
    else if (v.is_number_integer()) s = std::to_string(v.get<long long>());
    else fail("expected a \"num/den\" string");
    try {
      return Scalar::parse(s, f);
    } catch (const Error &e) {
      fail(e.what());
    }
  }
  std::vector<Node> items() const {
    std::vector<Node> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
    return out;
  }
};

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    // the library message already carries "line L, column C"
    std::string msg = e.what();
    auto p = msg.find("parse error");
    throw ParseError("JSON " + (p == std::string::npos ? msg : msg.substr(p)));
  }
}

Field field_of(const Node &n) {
  if (n.v.is_string()) {
    if (n.v.get<std::string>() != "Q") n.fail("field must be \"Q\" or {\"prime\": p}");
    return Field::rationals();
  }
  std::size_t p = n["prime"].count();
  try {
    return Field::prime(p);
  } catch (const Error &e) {
    n.fail(e.what());
  }
}

json field_json(Field f) { return f.is_rational() ? json("Q") : json{{"prime", f.p}}; }

std::vector<std::string> labels_of(const Node &n, std::size_t size) {
  auto l = n.opt("labels");
  if (!l) return {};
  if (l->size() != size) l->fail("one label per element required");
  std::vector<std::string> out;
  for (const auto &x : l->items()) out.push_back(x.str());
  return out;
}

FiniteSemigroup semigroup_of(const Node &n) {
  if (auto r = n.opt("ref")) {
    std::string name = r->str();
    try {
      return fixture(name).semigroup();
    } catch (const Error &e) {
      r->fail(e.what());
    }
  }
  std::string type = n["type"].str();
  if (type == "right_zero_band") {
    std::size_t k = n["size"].count();
    if (k == 0) n["size"].fail("size must be positive");
    auto labels = labels_of(n, k);
    auto s = right_zero_band(k);
    return labels.empty() ? s : FiniteSemigroup(s.table(), s.zero(), labels);
  }
  if (type == "rees") {
    ReesPresentation p;
    p.n = n["n"].count();
    p.m = n["m"].count();
    Node sw = n["sandwich"];
    if (sw.size() != p.m) sw.fail("sandwich must have m rows");
    for (const auto &row : sw.items()) {
      if (row.size() != p.n) row.fail("sandwich rows must have n entries");
      auto &out = p.sandwich.emplace_back();
      for (const auto &x : row.items()) {
        std::size_t b = x.count();
        if (b > 1) x.fail("sandwich entries are 0 or 1");
        out.push_back(b == 1);
      }
    }
    auto s = rees_semigroup(p);
    auto labels = labels_of(n, s.size());
    return labels.empty() ? s : FiniteSemigroup(s.table(), s.zero(), labels);
  }
  if (type == "table") {
    std::size_t k = n["size"].count();
    Node t = n["table"];
    if (t.size() != k) t.fail("table must have size rows");
    std::vector<std::vector<std::size_t>> table;
    for (const auto &row : t.items()) {
      if (row.size() != k) row.fail("table rows must have size entries");
      auto &out = table.emplace_back();
      for (const auto &x : row.items()) {
        std::size_t e = x.count();
        if (e >= k) x.fail("table entry out of range");
        out.push_back(e);
      }
    }
    std::optional<std::size_t> zero;
    if (auto z = n.opt("zero"); z && !z->v.is_null()) {
      zero = z->count();
      if (*zero >= k) z->fail("zero out of range");
    }
    return FiniteSemigroup(std::move(table), zero, labels_of(n, k));
  }
  n["type"].fail("unknown semigroup type \"" + type + "\"");
}

json semigroup_json(const FiniteSemigroup &s) {
  json labels = json::array();
  for (std::size_t a = 0; a < s.size(); ++a) labels.push_back(s.label(a));
  json out = {{"type", "table"}, {"size", s.size()}, {"table", s.table()}, {"labels", labels}};
  if (s.zero()) out["zero"] = *s.zero();
  return out;
}

GradedAlgebra algebra_of(const Node &doc) {
  Field f = field_of(doc["field"]);
  FiniteSemigroup sg = semigroup_of(doc["semigroup"]);
  Node basis = doc["basis"];
  std::size_t d = basis.size();
  std::vector<std::string> names;
  std::vector<std::size_t> degree;
  for (const auto &b : basis.items()) {
    names.push_back(b["name"].str());
    std::size_t t = b["degree"].count();
    if (t >= sg.size()) b["degree"].fail("degree out of range");
    degree.push_back(t);
  }
  Algebra alg(f, d);
  std::vector<bool> seen(d * d, false);
  for (const auto &p : doc["products"].items()) {
    if (p.size() != 3) p.fail("product entries are [i, j, [[k, \"num/den\"], ...]]");
    std::size_t i = p.at(0).count(), j = p.at(1).count();
    if (i >= d || j >= d) p.fail("basis index out of range");
    if (seen[i * d + j]) p.fail("duplicate product entry");
    seen[i * d + j] = true;
    Vec v = zero_vec(d, f);
    for (const auto &term : p.at(2).items()) {
      if (term.size() != 2) term.fail("terms are [k, \"num/den\"]");
      std::size_t k = term.at(0).count();
      if (k >= d) term.at(0).fail("basis index out of range");
      v[k] += term.at(1).scalar(f);
    }
    alg.set_product(i, j, v);
  }
  return GradedAlgebra(std::move(alg), std::move(sg), std::move(degree), std::move(names));
}

json algebra_json(const GradedAlgebra &a) {
  json basis = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back({{"name", a.names()[i]}, {"degree", a.degree(i)}});
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto &sp = a.algebra().sparse(i, j);
      if (sp.empty()) continue;
      json terms = json::array();
      for (const auto &[k, c] : sp)
        if (!c.is_zero()) terms.push_back({k, c.str()});
      if (!terms.empty()) products.push_back({i, j, terms});
    }
  return {{"field", field_json(a.field())},
          {"semigroup", semigroup_json(a.semigroup())},
          {"basis", basis},
          {"products", products}};
}

Mat matrix_of(const Node &n, Field f) {
  std::size_t r = n.size();
  std::size_t c = r ? n.at(0).size() : 0;
  Mat m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    Node row = n.at(i);
    if (row.size() != c) row.fail("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = row.at(j).scalar(f);
  }
  return m;
}

Vec vector_of(const Node &n, Field f, std::size_t len) {
  if (n.size() != len) n.fail("expected " + std::to_string(len) + " entries");
  Vec v;
  for (const auto &x : n.items()) v.push_back(x.scalar(f));
  return v;
}

// A list of flattened k x k matrices, as the columns of a k^2 x dim matrix.
Mat module_of(const Node &n, Field f, std::size_t kk) {
  std::vector<Vec> cols;
  for (const auto &c : n.items()) cols.push_back(vector_of(c, f, kk));
  return Mat::from_columns(cols, kk, f);
}

Field field_or_q(const Node &n) {
  auto f = n.opt("field");
  return f ? field_of(*f) : Field::rationals();
}

std::vector<Mat> matrices_of(const Node &n, Field f, std::size_t k) {
  std::vector<Mat> out;
  for (const auto &m : n.items()) {
    Mat x = matrix_of(m, f);
    if (x.rows() != k || x.cols() != k) m.fail("expected a k x k matrix");
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace

GradedAlgebra parse_algebra_document(std::string_view text) {
  json j = parse_json(text);
  return algebra_of(Node{j, ""});
}

FiniteSemigroup parse_semigroup_document(std::string_view text) {
  json j = parse_json(text);
  return semigroup_of(Node{j, ""});
}

std::string algebra_document(const GradedAlgebra &a, int indent) {
  std::string s = algebra_json(a).dump(indent);
  if (indent >= 0) s += "\n";
  return s;
}

std::string canonical_document(std::string_view text) { return algebra_document(parse_algebra_document(text), -1); }

GradedAlgebra construct_from_params(const std::string &kind, std::string_view params) {
  json j = parse_json(params);
  Node p{j, ""};
  if (kind == "fixture") return fixture(p["name"].str());
  if (kind == "m2-family") {
    std::vector<std::size_t> classes;
    if (auto c = p.opt("classes"))
      for (const auto &x : c->items()) classes.push_back(x.count());
    return m2_family(p["t0"].count(), classes, p["t1"].count());
  }
  if (kind == "munn") {
    Field f = field_or_q(p);
    Mat s = matrix_of(p["sandwich"], f);
    return munn_algebra(p["n"].count(), p["m"].count(), s);
  }
  if (kind == "existence") {
    ExistenceInput e;
    e.field = field_or_q(p);
    e.k = p["k"].count();
    e.n = p["n"].count();
    e.m = p["m"].count();
    e.row_idempotents = matrices_of(p["row_idempotents"], e.field, e.k);
    e.column_idempotents = matrices_of(p["column_idempotents"], e.field, e.k);
    for (const auto &m : p["left_modules"].items()) e.left_modules.push_back(module_of(m, e.field, e.k * e.k));
    for (const auto &m : p["right_modules"].items()) e.right_modules.push_back(module_of(m, e.field, e.k * e.k));
    return existence_construct(e);
  }
  if (kind == "decomposition") {
    DecompositionInput d;
    d.field = field_or_q(p);
    d.k = p["k"].count();
    std::size_t kk = d.k * d.k;
    Node r = p["rees"];
    d.pres.n = r["n"].count();
    d.pres.m = r["m"].count();
    if (auto sw = r.opt("sandwich")) {
      for (const auto &row : sw->items()) {
        auto &out = d.pres.sandwich.emplace_back();
        for (const auto &x : row.items()) out.push_back(x.count() != 0);
      }
    } else {
      d.pres = ReesPresentation::all_e(d.pres.n, d.pres.m);
    }
    for (const auto &row : p["blocks"].items()) {
      auto &out = d.blocks.emplace_back();
      for (const auto &b : row.items()) {
        std::vector<Vec> vs;
        for (const auto &v : b.items()) vs.push_back(vector_of(v, d.field, kk));
        out.push_back(Subspace::span(kk, d.field, vs));
      }
    }
    return grading_from_decomposition(d).algebra;
  }
  throw ParseError("unknown construction kind \"" + kind + "\"; expected munn, existence, decomposition, m2-family or fixture");
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw Error("SHA-256 failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

ReportStore::ReportStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<ReportStore> ReportStore::from_env() {
  const char *d = std::getenv("GPI_CACHE_DIR");
  if (!d || !*d) return std::nullopt;
  return ReportStore(d);
}

std::string ReportStore::key(std::string_view canonical, std::string_view params) {
  std::string s(canonical);
  s += '\n';
  s += params;
  return sha256_hex(s);
}

std::optional<std::string> ReportStore::get(const std::string &key) const {
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void ReportStore::put(const std::string &key, const std::string &report) const {
  std::random_device rd;
  auto tmp = dir_ / ("." + key + "." + std::to_string(rd()) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary);
    out << report;
    if (!out) throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, dir_ / (key + ".json"));
}

} // namespace gpi
