#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpi/algebra.hpp"
#include "gpi/constructions.hpp"
#include "gpi/exponent.hpp"
#include "gpi/io.hpp"
#include "gpi/pi.hpp"

using json = nlohmann::json;

namespace {

// What a command produces; cached as a whole.
struct Outcome {
  std::string out;  // stdout or --out
  std::string side; // exponent growth CSV
  std::string err;
  int code = 0;
};

struct Args {
  std::string path, kind, out;
  std::vector<std::string> params;
  std::size_t n = 0;
  bool graded = false;
  double budget = 1e8;
  unsigned threads = 0;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gpi::ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const char *verdict_name(gpi::GradedSimplicity::Verdict v) {
  switch (v) {
  case gpi::GradedSimplicity::yes: return "yes";
  case gpi::GradedSimplicity::no: return "no";
  case gpi::GradedSimplicity::unsupported: return "unsupported";
  default: return "indeterminate";
  }
}

json verdict_json(const gpi::GradedSimplicity &g) {
  return {{"verdict", verdict_name(g.verdict)}, {"certificate", g.certificate}};
}

const char *violation_name(gpi::Violation::Kind k) {
  switch (k) {
  case gpi::Violation::associativity: return "associativity";
  case gpi::Violation::grading: return "grading";
  default: return "theta_degree";
  }
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

Outcome cmd_check(const gpi::GradedAlgebra &a, const std::string &canonical) {
  auto vs = gpi::validate(a);
  json r;
  r["document_sha256"] = gpi::sha256_hex(canonical);
  r["dim"] = a.dim();
  r["field"] = a.field().str();
  r["semigroup_size"] = a.semigroup().size();
  json supp = json::array();
  for (auto t : a.support()) supp.push_back(a.semigroup().label(t));
  r["support"] = supp;
  json viol = json::array();
  for (const auto &v : vs)
    viol.push_back({{"kind", violation_name(v.kind)}, {"i", v.i}, {"j", v.j}, {"k", v.k}, {"detail", v.detail}});
  r["violations"] = viol;
  r["valid"] = vs.empty();
  if (vs.empty()) {
    r["radical_dim"] = gpi::jacobson_radical(a).dim();
    r["graded_simple"] = verdict_name(gpi::is_graded_simple(a).verdict);
  }
  return {dump(r), "", "", vs.empty() ? 0 : 1};
}

Outcome cmd_analyze(const gpi::GradedAlgebra &a) {
  auto vs = gpi::validate(a);
  if (!vs.empty()) return {"", "", "invalid algebra: " + vs.front().detail + " (run check for the full list)\n", 1};
  json r;
  auto guarded = [](auto &&f) -> json {
    try {
      return f();
    } catch (const gpi::Error &e) {
      return {{"error", e.what()}};
    }
  };
  r["dim"] = a.dim();
  r["radical_dim"] = gpi::jacobson_radical(a).dim();
  r["simple"] = guarded([&] { return verdict_json(gpi::is_simple(a.algebra())); });
  r["graded_simple"] = guarded([&] { return verdict_json(gpi::is_graded_simple(a)); });
  r["faithful"] = guarded([&] { return json(gpi::is_faithful(a)); });
  r["wm"] = guarded([&] {
    auto wm = gpi::wm_graded_decomposition(a);
    if (!wm.decomposition) return json{{"exists", false}, {"failure", wm.failure}};
    const auto &d = *wm.decomposition;
    json w{{"exists", true},
           {"b_dim", d.B.dim()},
           {"radical_dim", d.radical.dim()},
           {"n", d.grading.pres.n},
           {"m", d.grading.pres.m}};
    auto l = gpi::radical_square_layers(a, d);
    w["layers"] = {{"ok", l.ok},         {"failure", l.failure}, {"j10_dims", l.j10_dims}, {"j01_dims", l.j01_dims},
                   {"j2_dim", l.j2_dim}, {"b_dim", l.b_dim},     {"radical_dim", l.radical_dim}};
    return w;
  });
  return {dump(r), "", "", 0};
}

std::string figure(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0f", x);
  return buf;
}

Outcome cmd_codim(const gpi::GradedAlgebra &a, const Args &args) {
  if (args.n == 0) return {"", "", "codim needs --n >= 1\n", 2};
  gpi::CodimOptions opt;
  opt.budget = args.budget;
  opt.threads = args.threads;
  std::string csv = "n,c_n,c_n_graded,budget_used\n";
  for (std::size_t n = 1; n <= args.n; ++n) {
    try {
      auto g = gpi::graded_codimension_report(a, n, opt);
      std::string c = args.graded ? "" : std::to_string(gpi::ordinary_codimension(a, n, opt));
      csv += std::to_string(n) + "," + c + "," + std::to_string(g.value) + "," + figure(g.budget_used) + "\n";
    } catch (const gpi::Error &e) {
      return {csv, "", std::string(e.what()) + "\n", 1};
    }
  }
  return {csv, "", "", 0};
}

std::string q(const gpi::Rational &x) { return x.get_str(); }

json m2_json(const gpi::M2Summary &m) {
  return {{"t0_size", m.t0_size}, {"t1_size", m.t1_size},   {"bar_t0_size", m.bar_t0_size},
          {"class_sizes", m.class_sizes}, {"triangle", m.triangle}, {"a", m.a},
          {"c", m.c},             {"exact", m.exact},       {"value", m.value}};
}

Outcome cmd_exponent(const gpi::GradedAlgebra &a, const Args &args) {
  gpi::ExponentReport rep;
  std::vector<std::string> extra;
  try {
    try {
      rep = gpi::m2_exponent(a);
    } catch (const gpi::Error &e) {
      rep = gpi::upper_bound_report(a);
      extra.push_back(std::string("no M_2 closed form: ") + e.what());
    }
  } catch (const gpi::Error &e) {
    return {"", "", std::string(e.what()) + "\n", 1};
  }
  json r;
  r["k"] = rep.k;
  r["r"] = rep.r;
  r["gamma"] = rep.gamma;
  r["psi_choice"] = rep.psi_choice;
  if (rep.zeta)
    r["zeta"] = {{"found", rep.zeta->found}, {"exact", rep.zeta->exact}, {"lo", q(rep.zeta->lo)},
                 {"hi", q(rep.zeta->hi)},    {"value", rep.zeta->value()}, {"note", rep.zeta->note}};
  else
    r["zeta"] = nullptr;
  r["d_lo"] = q(rep.d_lo);
  r["d_hi"] = q(rep.d_hi);
  r["d"] = rep.d;
  auto notes = rep.notes;
  notes.insert(notes.end(), extra.begin(), extra.end());
  r["notes"] = notes;
  r["m2"] = rep.m2 ? m2_json(*rep.m2) : json(nullptr);
  std::string csv;
  if (args.n) {
    gpi::CodimOptions opt;
    opt.budget = args.budget;
    opt.threads = args.threads;
    auto t = gpi::growth_table(a, args.n, opt);
    csv = "n,c_n_graded,root,d,cap_ok,witness_dim,witness_ok\n";
    json rows = json::array();
    for (const auto &g : t.rows) {
      char root[32], d[32];
      std::snprintf(root, sizeof root, "%.10f", g.root);
      std::snprintf(d, sizeof d, "%.10f", g.d);
      std::string wd = g.witness_dim ? g.witness_dim->get_str() : "";
      csv += std::to_string(g.n) + "," + std::to_string(g.c) + "," + root + "," + d + "," + (g.cap_ok ? "1" : "0") +
             "," + wd + "," + (g.witness_ok ? "1" : "0") + "\n";
      rows.push_back({{"n", g.n}, {"c", g.c}, {"cap_ok", g.cap_ok}, {"witness_ok", g.witness_ok}});
    }
    r["growth"] = rows;
    r["growth_notice"] = t.notice;
  }
  return {dump(r), csv, "", 0};
}

// key=value pairs: digits become integers, comma lists become integer arrays.
std::string params_json(const std::vector<std::string> &kv) {
  json p = json::object();
  auto as_value = [](const std::string &s) -> json {
    bool digits = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) return std::stoull(s);
    if (s.find(',') != std::string::npos || s.empty()) {
      json arr = json::array();
      std::stringstream ss(s);
      for (std::string x; std::getline(ss, x, ',');)
        if (!x.empty()) arr.push_back(std::stoull(x));
      return arr;
    }
    return s;
  };
  for (const auto &x : kv) {
    auto eq = x.find('=');
    if (eq == std::string::npos) throw gpi::ParseError("expected key=value, got \"" + x + "\"");
    p[x.substr(0, eq)] = as_value(x.substr(eq + 1));
  }
  return p.dump();
}

Outcome cmd_construct(const Args &args) {
  std::string params;
  if (args.params.size() == 1 && args.params[0].find('=') == std::string::npos)
    params = read_file(args.params[0]);
  else
    params = params_json(args.params);
  auto a = gpi::construct_from_params(args.kind, params);
  return {gpi::algebra_document(a), "", "", 0};
}

void write_to(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw gpi::Error("cannot write " + path);
}

void emit(const Outcome &o, const std::string &out_path, bool side_to_out) {
  const std::string &main = side_to_out ? o.out : o.out;
  if (side_to_out) {
    std::cout << main;
    if (!out_path.empty() && !o.side.empty()) write_to(out_path, o.side);
    else std::cout << o.side;
  } else if (!out_path.empty()) {
    write_to(out_path, main);
  } else {
    std::cout << main;
  }
  std::cerr << o.err;
}

json outcome_json(const Outcome &o) { return {{"out", o.out}, {"side", o.side}, {"err", o.err}, {"code", o.code}}; }

Outcome outcome_of(const json &j) {
  return {j.at("out").get<std::string>(), j.at("side").get<std::string>(), j.at("err").get<std::string>(),
          j.at("code").get<int>()};
}

int run(const std::string &cmd, const Args &args) {
  if (cmd == "construct") {
    Outcome o = cmd_construct(args);
    emit(o, args.out, false);
    return o.code;
  }
  std::string text = read_file(args.path);
  gpi::GradedAlgebra a = gpi::parse_algebra_document(text);
  std::string canonical = gpi::algebra_document(a, -1);
  std::ostringstream params;
  params << cmd;
  if (cmd == "codim" || cmd == "exponent") params << " n=" << args.n << " graded=" << args.graded << " budget=" << figure(args.budget);
  auto store = gpi::ReportStore::from_env();
  std::string key = gpi::ReportStore::key(canonical, params.str());
  Outcome o;
  bool hit = false;
  if (store)
    if (auto cached = store->get(key)) {
      o = outcome_of(json::parse(*cached));
      hit = true;
    }
  if (!hit) {
    if (cmd == "check") o = cmd_check(a, canonical);
    else if (cmd == "analyze") o = cmd_analyze(a);
    else if (cmd == "codim") o = cmd_codim(a, args);
    else o = cmd_exponent(a, args);
    if (store && o.code != 2) store->put(key, outcome_json(o).dump());
  }
  emit(o, args.out, cmd == "exponent");
  return o.code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"gpi: semigroup-graded algebras, graded codimensions and PI-exponent bounds"};
  app.require_subcommand(1);
  Args args;
  auto add_doc = [&](CLI::App *c) { c->add_option("file", args.path, "AlgebraDocument (JSON)")->required(); };
  auto add_compute = [&](CLI::App *c) {
    c->add_option("--budget", args.budget, "max |supp|^n * n! * dim per degree");
    c->add_option("--threads", args.threads, "worker threads (0 = hardware)");
  };
  auto *check = app.add_subcommand("check", "validate a document; exit 0 iff valid");
  add_doc(check);
  auto *analyze = app.add_subcommand("analyze", "radical, graded simplicity, faithfulness, WM decomposition");
  add_doc(analyze);
  auto *codim = app.add_subcommand("codim", "codimension CSV: n,c_n,c_n_graded,budget_used");
  add_doc(codim);
  codim->add_option("--n", args.n, "largest degree")->required();
  codim->add_flag("--graded", args.graded, "graded sequence only (c_n column left empty)");
  codim->add_option("--out", args.out, "write the CSV here");
  add_compute(codim);
  auto *exponent = app.add_subcommand("exponent", "exponent report (JSON); --n adds a growth table");
  add_doc(exponent);
  exponent->add_option("--n", args.n, "growth table up to this degree");
  exponent->add_option("--out", args.out, "write the growth CSV here");
  add_compute(exponent);
  auto *construct = app.add_subcommand("construct", "emit an AlgebraDocument");
  construct->add_option("kind", args.kind, "munn | existence | decomposition | m2-family | fixture")->required();
  construct->add_option("params", args.params, "parameter file (JSON) or key=value pairs");
  construct->add_option("--out", args.out, "write the document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, args);
  } catch (const gpi::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
