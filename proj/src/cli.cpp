#include "artin/cli.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "artin/cover.hpp"
#include "artin/coxeter.hpp"
#include "artin/engine.hpp"
#include "artin/generate.hpp"
#include "artin/structure.hpp"

namespace artin::cli {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

constexpr int kProven = 0;
constexpr int kRefuted = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 64;
constexpr int kInput = 65;

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Proven: return kProven;
    case Verdict::Refuted: return kRefuted;
    case Verdict::Unknown: return kUnknown;
  }
  return kUnknown;
}

bool has_ext(const std::string& path, const char* ext) {
  auto e = fs::path(path).extension().string();
  std::transform(e.begin(), e.end(), e.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return e == ext;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PresentationGraph load_graph(const std::string& path) {
  std::string text = slurp(path);
  if (has_ext(path, ".json")) return PresentationGraph::from_json_text(text);
  return PresentationGraph::parse(text);
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += " ";
    out += names[i];
  }
  return out + "}";
}

std::string set_str(const PresentationGraph& g, const VertexSet& s) {
  return join_names(s.names(g));
}

SplitMode parse_mode(const std::string& mode) {
  if (mode == "pairs") return SplitMode::NonadjacentPairs;
  if (mode == "min-sep") return SplitMode::MinimalSeparators;
  return SplitMode::All;
}

const char* signature_str(CosineSignature s) {
  switch (s) {
    case CosineSignature::PositiveDefinite: return "positive-definite";
    case CosineSignature::PositiveSemidefinite: return "positive-semidefinite";
    case CosineSignature::Indefinite: return "indefinite";
  }
  return "indefinite";
}

std::vector<std::pair<std::string, bool>> profile_flags(const ClassProfile& p) {
  return {{"spherical", p.spherical},
          {"affine", p.affine},
          {"fc", p.fc},
          {"even", p.even},
          {"two-dimensional", p.two_dimensional},
          {"large", p.large},
          {"xl", p.xl},
          {"xxl", p.xxl},
          {"raag", p.raag},
          {"free", p.free_graph},
          {"(2,2)-free-two-dimensional", p.two_two_free_two_dim}};
}

std::string short_classes(const ClassProfile& p) {
  std::vector<std::string> tags;
  if (p.spherical) tags.push_back("sph");
  if (p.affine) tags.push_back("aff");
  if (p.fc) tags.push_back("fc");
  if (p.even) tags.push_back("even");
  if (p.two_dimensional) tags.push_back("2dim");
  if (p.large) tags.push_back("large");
  if (p.raag) tags.push_back("raag");
  if (p.free_graph) tags.push_back("free");
  if (tags.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < tags.size(); ++i) {
    if (i) out += ",";
    out += tags[i];
  }
  return out;
}

// rule names the --disable-rule flag accepts
bool known_rule(const std::string& r) {
  static const std::set<std::string> names = {
      "P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8",
      "W1", "W2", "W3", "W4", "W5",
      "IC1", "IC2", "IC3", "IC4", "IC5", "IC6", "IC7", "IC8"};
  return names.count(r) != 0;
}

struct CertifyFlags {
  std::string format = "text";
  std::vector<std::string> disabled;
  int budget = 10000;
  std::vector<std::string> subset;  // wm only
};

EngineOptions engine_options(const CertifyFlags& f) {
  EngineOptions opt;
  opt.disabled.insert(f.disabled.begin(), f.disabled.end());
  opt.splitting_budget = f.budget;
  return opt;
}

Certificate run_claim(const std::string& claim, const PresentationGraph& g,
                      const std::vector<std::string>& subset,
                      const EngineOptions& opt) {
  if (claim == "ah") return certify_ah(g, opt);
  if (claim == "wm") {
    if (subset.empty()) return certify_wm_conjecture(g, opt);
    return certify_wm_subgroup(g, VertexSet::from_names(g, subset), opt);
  }
  // ic
  if (auto c = knows_ic(g, opt)) return *c;
  Certificate c;
  c.claim = ojson{{"kind", "intersection-conjecture"}, {"graph", g.to_json()}};
  c.verdict = Verdict::Unknown;
  c.rule = "ic.unknown";
  return c;
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int do_classify(const std::string& file, const std::string& format,
                std::ostream& out) {
  auto g = load_graph(file);
  auto prof = class_profile(g);
  auto comps = spherical_decomposition(g);
  auto cos = cosine_signature(g);
  if (format == "json") {
    ojson j;
    j["vertices"] = g.names();
    j["edge_count"] = g.edge_count();
    ojson pj;
    for (const auto& [name, val] : profile_flags(prof)) pj[name] = val;
    pj["dimension"] = prof.dimension;
    j["profile"] = pj;
    auto cj = ojson::array();
    for (const auto& c : comps)
      cj.push_back(ojson{{"type", c.type.name()},
                         {"vertices", c.component.names(g)}});
    j["components"] = cj;
    j["cosine"] = ojson{{"signature", signature_str(cos.signature)},
                        {"kernel_dim", cos.kernel_dim}};
    out << j.dump(2) << "\n";
    return kProven;
  }
  out << "vertices: " << g.size() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  for (const auto& [name, val] : profile_flags(prof))
    out << name << ": " << (val ? "yes" : "no") << "\n";
  out << "dimension: " << prof.dimension << "\n";
  out << "components:\n";
  for (const auto& c : comps)
    out << "  " << c.type.name() << " " << set_str(g, c.component) << "\n";
  out << "cosine: " << signature_str(cos.signature) << " (kernel "
      << cos.kernel_dim << ")\n";
  return kProven;
}

int do_splittings(const std::string& file, const std::string& mode,
                  const std::string& format, std::ostream& out) {
  auto g = load_graph(file);
  auto list = enumerate_visual_splittings(g, parse_mode(mode));
  if (format == "json") {
    ojson j;
    j["mode"] = mode;
    j["count"] = static_cast<int>(list.items.size());
    j["truncated"] = list.truncated;
    auto arr = ojson::array();
    for (const auto& s : list.items)
      arr.push_back(ojson{{"omega", s.omega.names(g)},
                          {"gamma1", s.gamma1.names(g)},
                          {"gamma2", s.gamma2.names(g)}});
    j["splittings"] = arr;
    out << j.dump(2) << "\n";
    return kProven;
  }
  out << "splittings: " << list.items.size() << " (mode " << mode << ")"
      << (list.truncated ? " [truncated]" : "") << "\n";
  for (const auto& s : list.items)
    out << "omega=" << set_str(g, s.omega) << " gamma1=" << set_str(g, s.gamma1)
        << " gamma2=" << set_str(g, s.gamma2) << "\n";
  return kProven;
}

int do_convex(const std::string& file, const std::vector<std::string>& omega,
              const std::string& format, std::ostream& out) {
  auto g = load_graph(file);
  auto s = VertexSet::from_names(g, omega);
  bool ok = is_2convex(g, s);
  if (format == "json") {
    out << ojson{{"omega", s.names(g)}, {"two_convex", ok}}.dump(2) << "\n";
  } else {
    out << "2-convex " << set_str(g, s) << ": " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kProven : kRefuted;
}

std::vector<VertexSet> hollow_members(const PresentationGraph& g) {
  std::vector<VertexSet> members;
  members.push_back(VertexSet());  // the empty set
  for (int i = 0; i < g.size(); ++i) members.push_back(VertexSet(g, {i}));
  for (const auto& e : g.edges()) members.push_back(VertexSet(g, {e.u, e.v}));
  return members;
}

std::vector<VertexSet> cover_members_from_json(const PresentationGraph& g,
                                               const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad cover JSON: ") + e.what(), 0);
  }
  const nlohmann::json* arr = nullptr;
  if (j.is_array()) arr = &j;
  else if (j.is_object() && j.contains("cover")) arr = &j["cover"];
  else throw Error("cover file must be an array or carry a \"cover\" key");
  if (!arr->is_array()) throw Error("\"cover\" must be an array of name lists");
  std::vector<VertexSet> members;
  for (const auto& m : *arr) {
    if (!m.is_array()) throw Error("cover member must be a list of names");
    std::vector<std::string> names;
    for (const auto& x : m) {
      if (!x.is_string()) throw Error("cover member entries must be names");
      names.push_back(x.get<std::string>());
    }
    members.push_back(VertexSet::from_names(g, names));
  }
  return members;
}

int do_cover_check(const std::string& file, const std::string& explicit_spec,
                   const std::vector<std::string>& omega,
                   const std::string& format, std::ostream& out) {
  auto g = load_graph(file);
  CompleteCover cover = CompleteCover::cliques(g);
  if (!explicit_spec.empty()) {
    auto members = explicit_spec == "hollow"
                       ? hollow_members(g)
                       : cover_members_from_json(g, explicit_spec);
    cover = CompleteCover::explicit_cover(g, members);
  } else if (!omega.empty()) {
    cover = CompleteCover::cliques_plus(g, VertexSet::from_names(g, omega));
  }
  if (auto bad = check_cover(cover)) {
    std::string what = bad->what == CoverViolation::What::MissingEdge
                           ? "missing edge"
                           : "not closed under subsets at";
    if (format == "json") {
      out << ojson{{"valid", false},
                   {"violation", what},
                   {"witness", bad->witness.names(g)}}
                 .dump(2)
          << "\n";
    } else {
      out << "invalid cover: " << what << " " << set_str(g, bad->witness)
          << "\n";
    }
    return kInput;
  }
  auto flag = is_flag(link_complex(cover));
  if (format == "json") {
    ojson j{{"valid", true}, {"flag", flag.flag}};
    if (flag.witness) j["witness"] = flag.witness->names(g);
    out << j.dump(2) << "\n";
  } else {
    out << "flag: " << (flag.flag ? "yes" : "no") << "\n";
    if (flag.witness)
      out << "witness: " << set_str(g, *flag.witness) << "\n";
  }
  return flag.flag ? kProven : kRefuted;
}

int emit_certificate(const Certificate& cert, const std::string& format,
                     std::ostream& out) {
  if (format == "json") {
    out << cert.to_json_text();
  } else {
    out << "verdict: " << to_string(cert.verdict) << "\n";
    out << "rule: " << cert.rule << "\n\n";
    out << cert.to_text();
  }
  return verdict_exit(cert.verdict);
}

int do_certify(const std::string& claim, const std::string& file,
               const CertifyFlags& flags, std::ostream& out) {
  auto g = load_graph(file);
  auto cert = run_claim(claim, g, flags.subset, engine_options(flags));
  return emit_certificate(cert, flags.format, out);
}

struct GenFlags {
  std::string family;
  int n = 0;
  bool n_given = false;
  std::string label = "3";
  std::string rim_label, spoke_label;
  std::vector<std::string> choices;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string output;
  std::string format = "text";
};

int parse_label(const std::string& s) {
  if (s == "inf") return 0;
  try {
    size_t pos = 0;
    int m = std::stoi(s, &pos);
    if (pos != s.size() || (m != 0 && m < 2)) throw Error("");
    return m;
  } catch (...) {
    throw CLI::ValidationError("--label", "'" + s + "' is not a label (need an integer >= 2 or 'inf')");
  }
}

int do_gen(const GenFlags& f, std::ostream& out) {
  LabelSpec spec;
  spec.uniform = parse_label(f.label);
  spec.seed = f.seed;
  for (const auto& c : f.choices) spec.choices.push_back(parse_label(c));

  PresentationGraph g;
  if (f.family.rfind("catalog:", 0) == 0) {
    if (f.n_given)
      throw CLI::ValidationError("gen", "catalog families take no vertex count");
    g = gen_catalog(f.family.substr(8));
  } else {
    if (!f.n_given)
      throw CLI::ValidationError("gen", "family '" + f.family + "' needs a vertex count");
    if (f.family == "path") g = gen_path(f.n, spec);
    else if (f.family == "cycle") g = gen_cycle(f.n, spec);
    else if (f.family == "complete") g = gen_complete(f.n, spec);
    else if (f.family == "wheel") {
      LabelSpec rim = spec, spokes = spec;
      if (!f.rim_label.empty()) {
        rim.uniform = parse_label(f.rim_label);
        rim.choices.clear();
      }
      if (!f.spoke_label.empty()) {
        spokes.uniform = parse_label(f.spoke_label);
        spokes.choices.clear();
      }
      spokes.seed = spec.seed + 1;  // separate label stream for the spokes
      g = gen_wheel(f.n, rim, spokes);
    } else if (f.family == "random") {
      if (spec.choices.empty())
        throw CLI::ValidationError("gen", "random needs --labels");
      if (!f.seed_given)
        throw CLI::ValidationError("gen", "random needs an explicit --seed");
      g = gen_random(f.n, spec);
    } else {
      throw CLI::ValidationError("gen", "unknown family '" + f.family + "'");
    }
  }

  bool json = f.output.empty() ? f.format == "json" : has_ext(f.output, ".json");
  std::string text = json ? g.to_json_text() : g.to_text();
  if (f.output.empty()) {
    out << text;
  } else {
    std::ofstream os(f.output, std::ios::binary);
    if (!os) throw Error("cannot write '" + f.output + "'");
    os << text;
  }
  return kProven;
}

int do_batch(const std::string& claim, const std::string& dir,
             const std::string& cert_dir, const CertifyFlags& flags,
             std::ostream& out) {
  if (!fs::is_directory(dir)) throw Error("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto p = entry.path();
    if (has_ext(p.string(), ".artin") || has_ext(p.string(), ".json"))
      files.push_back(p);
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  if (!cert_dir.empty()) fs::create_directories(cert_dir);

  struct Row {
    std::string name, classes, verdict, rule, error;
    int vertices = 0;
  };
  std::vector<Row> rows;
  auto opt = engine_options(flags);
  for (const auto& p : files) {
    Row row;
    row.name = p.filename().string();
    try {
      auto g = load_graph(p.string());
      row.vertices = g.size();
      row.classes = short_classes(class_profile(g));
      auto cert = run_claim(claim, g, {}, opt);
      row.verdict = to_string(cert.verdict);
      row.rule = cert.rule;
      fs::path target = cert_dir.empty() ? p.parent_path() : fs::path(cert_dir);
      target /= p.stem().string() + "." + claim + ".cert.json";
      std::ofstream os(target, std::ios::binary);
      if (!os) throw Error("cannot write '" + target.string() + "'");
      os << cert.to_json_text();
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }

  if (flags.format == "json") {
    auto arr = ojson::array();
    for (const auto& r : rows) {
      ojson j{{"file", r.name}};
      if (!r.error.empty()) {
        j["error"] = r.error;
      } else {
        j["vertices"] = r.vertices;
        j["classes"] = r.classes;
        j["verdict"] = r.verdict;
        j["rule"] = r.rule;
      }
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
    return kProven;
  }
  size_t wname = 4, wclass = 7, wverdict = 7, wrule = 4;
  for (const auto& r : rows) {
    wname = std::max(wname, r.name.size());
    wclass = std::max(wclass, r.classes.size());
    wverdict = std::max(wverdict, std::max(r.verdict.size(), r.error.empty() ? size_t{0} : 5 + r.error.size()));
    wrule = std::max(wrule, r.rule.size());
  }
  out << std::left << std::setw(static_cast<int>(wname)) << "file" << "  "
      << std::setw(2) << "|V|" << "  "
      << std::setw(static_cast<int>(wclass)) << "classes" << "  "
      << std::setw(static_cast<int>(wverdict)) << "verdict" << "  "
      << "rule\n";
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      out << std::left << std::setw(static_cast<int>(wname)) << r.name << "  "
          << "error: " << r.error << "\n";
      continue;
    }
    out << std::left << std::setw(static_cast<int>(wname)) << r.name << "  "
        << std::right << std::setw(3) << r.vertices << "  " << std::left
        << std::setw(static_cast<int>(wclass)) << r.classes << "  "
        << std::setw(static_cast<int>(wverdict)) << r.verdict << "  "
        << r.rule << "\n";
  }
  return kProven;
}

}  // namespace

// ---------------------------------------------------------------------------
// argument wiring
// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"auditable certificates for Artin groups given as labeled presentation graphs", "artin"};
  app.require_subcommand(1);
  auto format_check = CLI::IsMember({"text", "json"});

  // classify
  std::string cl_file, cl_format = "text";
  auto* classify = app.add_subcommand("classify", "class profile, Coxeter decomposition, cosine signature");
  classify->add_option("file", cl_file, "graph file (.artin or .json)")->required();
  classify->add_option("--format", cl_format)->check(format_check);

  // splittings
  std::string sp_file, sp_mode = "min-sep", sp_format = "text";
  auto* splittings = app.add_subcommand("splittings", "enumerate visual splittings");
  splittings->add_option("file", sp_file)->required();
  splittings->add_option("--mode", sp_mode, "separator search strategy")
      ->check(CLI::IsMember({"pairs", "min-sep", "all"}));
  splittings->add_option("--format", sp_format)->check(format_check);

  // convex
  std::string cv_file, cv_format = "text";
  std::vector<std::string> cv_omega;
  auto* convex = app.add_subcommand("convex", "test 2-convexity of a vertex subset");
  convex->add_option("file", cv_file)->required();
  convex->add_option("--omega", cv_omega, "comma-separated vertex names")
      ->required()->delimiter(',');
  convex->add_option("--format", cv_format)->check(format_check);

  // cover check
  std::string co_file, co_explicit, co_format = "text";
  std::vector<std::string> co_omega;
  auto* cover = app.add_subcommand("cover", "complete-cover utilities");
  cover->require_subcommand(1);
  auto* cover_check = cover->add_subcommand("check", "validate a cover and test flagness of its link complex");
  cover_check->add_option("file", co_file)->required();
  cover_check->add_option("--explicit", co_explicit,
                          "'hollow' or a JSON file with a cover array");
  cover_check->add_option("--omega", co_omega, "use the cliques-plus-subsets-of-omega cover")
      ->delimiter(',');
  cover_check->add_option("--format", co_format)->check(format_check);

  // certify ah|wm|ic
  auto* certify = app.add_subcommand("certify", "produce a verdict with a certificate");
  certify->require_subcommand(1);
  struct CertifyCmd {
    std::string name, what;
    CLI::App* cmd = nullptr;
    std::string file;
    CertifyFlags flags;
  };
  // bound option targets need stable addresses: fixed-size storage, no moves
  std::array<CertifyCmd, 3> claims{
      {{"ah", "acylindrical hyperbolicity", nullptr, {}, {}},
       {"wm", "weak malnormality", nullptr, {}, {}},
       {"ic", "parabolic intersections are parabolic", nullptr, {}, {}}}};
  for (auto& c : claims) {
    c.cmd = certify->add_subcommand(c.name, c.what);
    c.cmd->add_option("file", c.file)->required();
    c.cmd->add_option("--format", c.flags.format)->check(format_check);
    c.cmd->add_option("--disable-rule", c.flags.disabled,
                      "skip a proof rule (P1..P8, W1..W5, IC1..IC8)")
        ->delimiter(',');
    c.cmd->add_option("--budget", c.flags.budget, "max candidate splittings")
        ->check(CLI::PositiveNumber);
    if (c.name == "wm")
      c.cmd->add_option("--subset", c.flags.subset,
                        "certify one standard parabolic instead of the conjecture")
          ->delimiter(',');
  }

  // gen
  GenFlags gf;
  auto* gen = app.add_subcommand("gen", "emit a graph family");
  gen->add_option("family", gf.family,
                  "path|cycle|complete|wheel|random|catalog:<type>")->required();
  auto* gen_n = gen->add_option("n", gf.n, "vertex count (rim count for wheel)");
  gen->add_option("--label", gf.label, "uniform edge label (integer >= 2 or 'inf')");
  gen->add_option("--rim-label", gf.rim_label, "wheel rim label override");
  gen->add_option("--spoke-label", gf.spoke_label, "wheel spoke label override");
  gen->add_option("--labels", gf.choices, "random label choices, e.g. 2,3,inf")
      ->delimiter(',');
  auto* gen_seed = gen->add_option("--seed", gf.seed, "RNG seed for --labels");
  gen->add_option("-o,--output", gf.output, "write to file (.json for JSON)");
  gen->add_option("--format", gf.format, "stdout format")->check(format_check);

  // batch
  std::string ba_claim, ba_dir, ba_cert_dir;
  CertifyFlags ba_flags;
  auto* batch = app.add_subcommand("batch", "certify every graph file in a directory");
  batch->add_option("claim", ba_claim)->required()
      ->check(CLI::IsMember({"ah", "wm", "ic"}));
  batch->add_option("dir", ba_dir)->required();
  batch->add_option("--cert-dir", ba_cert_dir, "where certificates go (default: next to each file)");
  batch->add_option("--format", ba_flags.format)->check(format_check);
  batch->add_option("--disable-rule", ba_flags.disabled)->delimiter(',');
  batch->add_option("--budget", ba_flags.budget)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("artin");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    gf.n_given = gen_n->count() > 0;
    gf.seed_given = gen_seed->count() > 0;

    for (const auto& c : claims)
      for (const auto& r : c.flags.disabled)
        if (!known_rule(r))
          throw CLI::ValidationError("--disable-rule", "unknown rule '" + r + "'");
    for (const auto& r : ba_flags.disabled)
      if (!known_rule(r))
        throw CLI::ValidationError("--disable-rule", "unknown rule '" + r + "'");

    if (classify->parsed()) return do_classify(cl_file, cl_format, out);
    if (splittings->parsed()) return do_splittings(sp_file, sp_mode, sp_format, out);
    if (convex->parsed()) return do_convex(cv_file, cv_omega, cv_format, out);
    if (cover->parsed() && cover_check->parsed())
      return do_cover_check(co_file, co_explicit, co_omega, co_format, out);
    for (const auto& c : claims)
      if (c.cmd->parsed()) return do_certify(c.name, c.file, c.flags, out);
    if (gen->parsed()) return do_gen(gf, out);
    if (batch->parsed())
      return do_batch(ba_claim, ba_dir, ba_cert_dir, ba_flags, out);
    err << "usage error: no subcommand\n";
    return kUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace artin::cli
