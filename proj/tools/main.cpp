#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "affscat/almost_positive.hpp"
#include "affscat/error.hpp"
#include "affscat/instance.hpp"
#include "affscat/mutation.hpp"
#include "affscat/scattering.hpp"
#include "json.hpp"
#include "render.hpp"

using json = nlohmann::json;
using namespace affscat;

namespace {

// Exit statuses.
const int kOk = 0;
const int kFailed = 1;
const int kInvalid = 2;

struct Config {
  std::string input;
  std::string out;
  int H = 4;
  int k = -1;  // defaults to H
  int L = 6;
  int samples = 200;
  std::uint64_t seed = 1;
  std::size_t element_cap = 200000;
};

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json number(const Rational& r) {
  if (is_integer(r)) return to_int(r);
  return to_string(r);
}

json vector_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

json vectors_json(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const Vec& v : vs) out.push_back(vector_json(v));
  return out;
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("matrix entries must be integers or rational strings");
}

Vec vec_from(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw InvalidInput("vector of the wrong length");
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = rational_from(j[i]);
  return v;
}

Mat matrix_from(const json& doc) {
  if (!doc.is_object() || !doc.contains("b")) throw InvalidInput("input must be an object with a \"b\" matrix");
  const json& b = doc["b"];
  if (!b.is_array() || b.empty()) throw InvalidInput("\"b\" must be a nonempty array of rows");
  const int n = static_cast<int>(b.size());
  if (doc.contains("n") && doc["n"] != n) throw InvalidInput("\"n\" does not match the number of rows");
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.row(i) = vec_from(b[i], n).transpose();
  return m;
}

json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw InvalidInput("cannot write " + cfg.out);
  out << text;
}

void emit(const Config& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

json wall_json(const Wall& w) {
  json series = json::array();
  for (const Rational& c : w.f.coeffs()) series.push_back(number(c));
  return {{"normal", vector_json(w.normal())},
          {"ineqs", vectors_json(w.shape.le)},
          {"series", series},
          {"origin", wall_origin_name(w.origin)},
          {"rays", vectors_json(w.cone.rays())},
          {"lineality", vectors_json(w.cone.lineality())}};
}

json diagram_json(const ScatDiagram& d) {
  std::vector<const Wall*> walls;
  for (const Wall& w : d.walls) walls.push_back(&w);
  std::stable_sort(walls.begin(), walls.end(), [](const Wall* a, const Wall* b) {
    if (height(a->normal()) != height(b->normal())) return height(a->normal()) < height(b->normal());
    return VecLess{}(a->normal(), b->normal());
  });
  json out = json::array();
  for (const Wall* w : walls) out.push_back(wall_json(*w));
  json b = json::array();
  for (Eigen::Index i = 0; i < d.b.rows(); ++i) b.push_back(vector_json(d.b.row(i).transpose()));
  return {{"n", d.n}, {"b", b}, {"max_height", d.max_height}, {"k", d.k}, {"walls", out}};
}

// Rebuilds a diagram from a wall dump; cones come back from normal and ineqs.
ScatDiagram diagram_from(const json& doc) {
  const Mat b = matrix_from(doc);
  const CartanMatrix cm = exchange_to_cartan(b);
  ScatDiagram d;
  d.n = static_cast<int>(b.rows());
  d.b = b;
  d.max_height = doc.value("max_height", 0);
  d.k = doc.value("k", 0);
  for (const json& w : doc["walls"]) {
    RootCone shape{vec_from(w.at("normal"), d.n), {}};
    for (const json& phi : w.at("ineqs")) shape.le.push_back(vec_from(phi, d.n));
    std::vector<Rational> coeffs;
    for (const json& c : w.at("series")) coeffs.push_back(rational_from(c));
    const std::string origin = w.value("origin", "Initial");
    WallOrigin o = WallOrigin::Initial;
    for (const WallOrigin cand : {WallOrigin::Initial, WallOrigin::SortableJI, WallOrigin::InverseSortableJI,
                                  WallOrigin::FromRoot, WallOrigin::Imaginary, WallOrigin::Rank2Completed})
      if (origin == wall_origin_name(cand)) o = cand;
    const Vec normal = shape.normal;
    d.walls.push_back(make_wall(cm, std::move(shape), TruncatedSeries(normal, coeffs), o));
  }
  return d;
}

const char* finiteness_name(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return "finite";
    case Finiteness::Affine: return "affine";
    case Finiteness::Indefinite: return "indefinite";
  }
  return "?";
}

int run_classify(const Config& cfg) {
  const Mat b = matrix_from(read_input(cfg.input));
  validate_exchange(b);
  const CartanMatrix cm = exchange_to_cartan(b);
  const Classification cls = classify(cm);
  json out{{"type", finiteness_name(cls.kind)}, {"n", cm.rank()}};
  if (cls.kind == Finiteness::Affine) {
    out["label"] = cls.label;
    out["is_A2k2"] = cls.is_A2k2;
    out["delta"] = vector_json(cls.delta);
  }
  try {
    const Coxeter c = coxeter_from_exchange(b);
    out["acyclic"] = true;
    json order = json::array();
    for (int s : c.order) order.push_back(s + 1);
    out["coxeter"] = order;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAcyclic) throw;
    out["acyclic"] = false;
  }
  emit(cfg, out);
  return kOk;
}

int run_walls(const Config& cfg) {
  const Instance inst = Instance::from_exchange(matrix_from(read_input(cfg.input)));
  const ScatDiagram d = build_dcscat(inst, cfg.H, cfg.k, 64, cfg.element_cap);
  const ScatDiagram e = build_easy_scat(inst, cfg.H, cfg.k);
  const bool same = same_walls(d, e);
  emit(cfg, json{{"dcscat", diagram_json(d)},
                 {"easy_scat", diagram_json(e)},
                 {"equal", same},
                 {"merged", d.merged},
                 {"search_length", d.search_length}});
  return same ? kOk : kFailed;
}

int run_consistency(const Config& cfg) {
  const json doc = read_input(cfg.input);
  ScatDiagram d;
  CartanMatrix cm;
  if (doc.contains("walls")) {
    d = diagram_from(doc);
    cm = exchange_to_cartan(d.b);
  } else {
    const Instance inst = Instance::from_exchange(matrix_from(doc));
    d = build_dcscat(inst, cfg.H, cfg.k, 64, cfg.element_cap);
    cm = inst.cm;
  }
  const ConsistencyReport r = check_consistency(d, cm, cfg.k);
  json faces = json::array();
  for (const FaceReport& f : r.faces) {
    json walls = json::array();
    for (int w : f.walls) walls.push_back(vector_json(d.walls[w].normal()));
    faces.push_back({{"point", vector_json(f.point)}, {"walls", walls}, {"identity", f.identity}});
  }
  emit(cfg, json{{"k", r.k}, {"faces", faces}, {"failures", r.failures()}, {"ok", r.ok()}});
  return r.ok() ? kOk : kFailed;
}

int run_rank2(const Config& cfg) {
  const Mat b = matrix_from(read_input(cfg.input));
  validate_exchange(b);
  if (b.rows() != 2) throw InvalidInput("rank2 needs a 2x2 exchange matrix");
  const CartanMatrix cm = exchange_to_cartan(b);
  const Classification cls = classify(cm);
  // In affine type k counts powers of the limiting monomial.
  const bool affine = cls.kind == Finiteness::Affine;
  const int degree = affine ? cfg.k * to_int(height(cls.delta)) : cfg.k;
  const ScatDiagram d = rank2_complete(b, degree);
  json out = diagram_json(d);
  out["degree"] = degree;
  if (affine) {
    const int w = d.find(cls.delta);
    json series = json::array();
    if (w >= 0)
      for (const Rational& c : d.walls[w].f.coeffs()) series.push_back(number(c));
    out["limiting"] = {{"normal", vector_json(cls.delta)}, {"series", series}};
  }
  emit(cfg, out);
  return kOk;
}

int run_clusters(const Config& cfg) {
  const Instance inst = Instance::from_exchange(matrix_from(read_input(cfg.input)));
  const Compatibility comp(inst, cfg.H);
  const std::vector<Vec> roots = ap_c(inst, comp.tubes(), cfg.H);
  json table = json::array();
  for (const Vec& a : roots) {
    json row = json::array();
    for (const Vec& b : roots) row.push_back(comp.degree(a, b));
    table.push_back(row);
  }
  const Clusters cl = clusters(comp, cfg.H);
  auto sets = [](const std::vector<std::vector<Vec>>& family) {
    json out = json::array();
    for (const auto& s : family) out.push_back(vectors_json(s));
    return out;
  };
  emit(cfg, json{{"roots", vectors_json(roots)},
                 {"compatibility_degree", table},
                 {"real", sets(cl.real)},
                 {"imaginary", sets(cl.imaginary)},
                 {"truncated", sets(cl.truncated)},
                 {"height_relative", true}});
  return kOk;
}

int run_compare(const Config& cfg) {
  const Instance inst = Instance::from_exchange(matrix_from(read_input(cfg.input)));
  const FanComparison r = fans_compare(inst, cfg.H, cfg.k, cfg.L, cfg.samples, cfg.seed, cfg.element_cap);
  json list = json::array();
  for (const Discrepancy& dsc : r.discrepancies)
    list.push_back({{"kind", dsc.kind}, {"p", vector_json(dsc.p)}, {"q", vector_json(dsc.q)}});
  emit(cfg, json{{"faces", r.faces},
                 {"faces_outside_walls", r.faces_outside_walls},
                 {"walls_without_faces", r.walls_without_faces},
                 {"pairs", r.pairs},
                 {"unresolved", r.unresolved},
                 {"same_cone", r.same_cone},
                 {"exact_discrepancies", r.exact_discrepancies},
                 {"probe_contradictions", r.probe_contradictions},
                 {"probe_separated", r.probe_separated},
                 {"probe_inconclusive", r.probe_inconclusive},
                 {"discrepancies", list},
                 {"ok", r.ok()}});
  return r.ok() ? kOk : kFailed;
}

int run_svg(const Config& cfg) {
  const json doc = read_input(cfg.input);
  if (doc.contains("walls")) {
    const ScatDiagram d = diagram_from(doc);
    std::optional<Instance> inst;
    if (d.n == 3) inst = Instance::from_exchange(d.b);
    emit(cfg, render_slice(d, inst ? &*inst : nullptr));
    return kOk;
  }
  const Mat b = matrix_from(doc);
  validate_exchange(b);
  const CartanMatrix cm = exchange_to_cartan(b);
  if (classify(cm).kind == Finiteness::Affine) {
    const Instance inst = Instance::from_exchange(b);
    emit(cfg, render_slice(build_dcscat(inst, cfg.H, cfg.k, 64, cfg.element_cap), &inst));
  } else {
    if (b.rows() != 2) throw Error(ErrorCode::Unsupported, "rendering supports rank 2 and affine rank 3 only");
    emit(cfg, render_rank2(rank2_complete(b, cfg.k)));
  }
  return kOk;
}

void report_error(const std::string& code, const std::string& message) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster scattering diagrams of acyclic affine type, in exact arithmetic"};
  app.require_subcommand(1);
  Config cfg;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"classify", "finite, affine or indefinite type of the Cartan companion"},
      {"walls", "doubled Cambrian diagram and the root-by-root construction, compared"},
      {"consistency", "small-loop check of a built or dumped diagram"},
      {"rank2", "consistent completion of a rank-2 diagram"},
      {"clusters", "compatibility degrees and clusters of almost positive roots"},
      {"compare", "scattering fan against the cluster fan and mutation classes"},
      {"svg", "picture of a rank-2 diagram or of an affine rank-3 slice"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", cfg.input, "JSON file {\"n\": n, \"b\": [[...]]} or a wall dump")->required();
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--H", cfg.H, "height bound for roots")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--k", cfg.k, "truncation degree (default H)")->check(CLI::PositiveNumber);
    sub->add_option("--L", cfg.L, "longest mutation word probed")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--samples", cfg.samples, "sampled point pairs")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("InvalidInput", e.what());
    return kInvalid;
  }
  if (cfg.k < 0) cfg.k = cfg.H;
  if (const char* cap = std::getenv("AFFSCAT_CAP")) {
    try {
      cfg.element_cap = std::stoull(cap);
    } catch (const std::exception&) {
      report_error("InvalidInput", "AFFSCAT_CAP must be a positive integer");
      return kInvalid;
    }
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "classify") return run_classify(cfg);
    if (command == "walls") return run_walls(cfg);
    if (command == "consistency") return run_consistency(cfg);
    if (command == "rank2") return run_rank2(cfg);
    if (command == "clusters") return run_clusters(cfg);
    if (command == "compare") return run_compare(cfg);
    return run_svg(cfg);
  } catch (const InvalidInput& e) {
    report_error("InvalidInput", e.what());
    return kInvalid;
  } catch (const Error& e) {
    report_error(error_code_name(e.code()), e.what());
    switch (e.code()) {
      case ErrorCode::CapExceeded:
      case ErrorCode::DegenerateFace:
      case ErrorCode::HeightInsufficient:
        return kFailed;
      default:
        return kInvalid;
    }
  } catch (const std::exception& e) {
    report_error("Internal", e.what());
    return kFailed;
  }
}
