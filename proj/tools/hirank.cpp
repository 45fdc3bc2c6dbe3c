// Copyright 2026 The hirank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand prints one JSON document on
// stdout. Exit codes: 0 ok, 1 mathematical property failure, 2 usage or
// input error, 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hirank/extend.hpp"
#include "hirank/fibers.hpp"
#include "hirank/flats.hpp"
#include "hirank/io.hpp"
#include "hirank/rank.hpp"
#include "hirank/session.hpp"
#include "hirank/suite.hpp"
#include "hirank/variety.hpp"
#include "hirank/weakpoly.hpp"
#include "hirank/xn.hpp"

#ifndef HIRANK_GOLDEN_DIR
#define HIRANK_GOLDEN_DIR "tests/golden"
#endif

namespace {

using namespace hirank;

constexpr const char* kVersion = "0.1.0";

// Config flags; a flag given on the command line overrides the config file.
struct Flags {
  std::string config;
  std::string field;
  int d = 0, a = 0;
  std::uint32_t m = 0;
  std::uint64_t seed = 0, samples = 0, max_enumeration = 0;
  int workers = 0;
  std::string cache_dir;
  std::string out, log;
  bool no_cache = false;
};

// Which point set a function or measurement lives on.
struct HostFlags {
  std::string eq;
  std::size_t nvars = 0;
  std::size_t xn = 0;
};

struct Host {
  VarietyPtr table;
  std::optional<XnModel> model;
};

struct Context {
  SessionConfig cfg;
  FieldPtr field;
  bool use_cache = true;
};

// "# key=value" comment lines at the top of a function file.
std::map<std::string, std::string> ReadFnMeta(const std::string& path) {
  std::map<std::string, std::string> meta;
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorCode::kIoError, "cannot read " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) != 0) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto key = line.substr(1, eq - 1);
    key.erase(0, key.find_first_not_of(' '));
    key.erase(key.find_last_not_of(' ') + 1);
    auto value = line.substr(eq + 1);
    value.erase(0, value.find_first_not_of(' '));
    while (!value.empty() && (value.back() == ' ' || value.back() == '\r')) value.pop_back();
    meta[key] = value;
  }
  return meta;
}

Host MakeHost(const Context& ctx, HostFlags hf) {
  Host h;
  if (hf.xn > 0) {
    ctx.cfg.CheckAdmissible();
    h.model.emplace(ctx.field, XnSpec{hf.xn, static_cast<std::size_t>(ctx.cfg.d)}, ctx.cfg.m,
                    ctx.cfg.budget);
    h.table = h.model->table();
    return h;
  }
  Require(!hf.eq.empty(), ErrorCode::kInvalidArgument, "give the variety with --eq or --xn");
  auto spec = ParseCollection(hf.eq, ctx.field, hf.nvars);
  h.table = ctx.use_cache ? CachedVariety(ctx.cfg.cache_dir, spec, ctx.cfg.budget)
                          : std::make_shared<const VarietyTable>(
                                VarietyTable::Enumerate(spec, ctx.cfg.budget));
  return h;
}

// Fills host flags and the field from a function file's header when the
// command line leaves them open.
void ApplyFnMeta(const std::string& path, HostFlags& hf, Flags& flags) {
  auto meta = ReadFnMeta(path);
  if (hf.eq.empty() && hf.xn == 0) {
    if (meta.count("eq")) hf.eq = meta["eq"];
    if (meta.count("xn")) hf.xn = std::stoul(meta["xn"]);
    if (meta.count("nvars") && hf.nvars == 0) hf.nvars = std::stoul(meta["nvars"]);
  }
  if (flags.field.empty() && meta.count("field")) flags.field = meta["field"];
}

Context MakeContext(const Flags& f, const CLI::App& app) {
  Context ctx;
  if (!f.config.empty()) ctx.cfg = SessionConfig::Load(f.config);
  ctx.cfg.ApplyEnvironment();
  auto given = [&](const char* name) { return app.get_option(name)->count() > 0; };
  if (!f.field.empty()) ctx.cfg.field = f.field;
  if (given("--d")) ctx.cfg.d = f.d;
  if (given("--a")) ctx.cfg.a = f.a;
  if (given("--m")) ctx.cfg.m = f.m;  // the subgroup order, not a fiber source dimension
  if (given("--seed")) ctx.cfg.seed = f.seed;
  if (given("--samples")) ctx.cfg.samples = f.samples;
  if (given("--workers")) ctx.cfg.workers = f.workers;
  if (given("--max-enumeration")) ctx.cfg.budget.max_enumeration = f.max_enumeration;
  if (given("--cache-dir")) ctx.cfg.cache_dir = f.cache_dir;
  ctx.use_cache = !f.no_cache;
  ctx.cfg.ApplyWorkers();
  ctx.field = Field::Make(ctx.cfg.field_spec());
  return ctx;
}

Json RankReport(const Context& ctx, const std::string& text, int gowers_d, bool sampled,
                int cutoff) {
  Poly p = ParsePoly(text, ctx.field);
  const int d = gowers_d > 0 ? gowers_d : std::max(1, p.degree());
  Json j{{"poly", RenderPoly(p)}, {"field", ctx.cfg.field_spec().ToString()}};
  j["bias"] = ToJson(Bias(p, ctx.cfg.budget));
  GowersOptions go;
  if (sampled) go = GowersOptions{GowersMode::kSampled, ctx.cfg.samples, ctx.cfg.seed};
  auto g = GowersNorm(p, d, go, ctx.cfg.budget);
  j["gowers"] = ToJson(g, ctx.field->q());
  j["arank"] = AnalyticRank(g, ctx.field->q());
  SchmidtOptions so;
  so.cutoff = cutoff;
  so.budget = ctx.cfg.budget;
  j["schmidt"] = ToJson(SchmidtRankExact(p, so));
  if (p.IsHomogeneous() && p.degree() >= 2) {
    auto sb = SingularRankBound(p, ctx.cfg.budget);
    j["singular_bound"] = RationalToDouble(sb.bound);
    j["singular"] = ToJson(sb);
  } else {
    j["singular_bound"] = nullptr;
  }
  j["mode"] = sampled ? "sampled" : "exact";
  j["seed"] = ctx.cfg.seed;
  return j;
}

Json XnSummary(const Context& ctx, std::size_t n) {
  ctx.cfg.CheckAdmissible();
  XnSpec spec{n, static_cast<std::size_t>(ctx.cfg.d)};
  Poly pn = MakePn(ctx.field, spec);
  VarietyPtr table;
  if (ctx.use_cache) table = CachedVariety(ctx.cfg.cache_dir, PolyCollection{{pn}}, ctx.cfg.budget);
  XnModel model(ctx.field, spec, ctx.cfg.m, ctx.cfg.budget);
  Require(!table || table->indices() == model.table()->indices(), ErrorCode::kIoError,
          "cached X_n disagrees with a fresh enumeration");
  std::size_t admissible = 0, plus = 0;
  const auto chars = model.Characters();
  for (const auto& c : chars) {
    admissible += c.Admissible(ctx.cfg.a);
    plus += c.Plus(ctx.cfg.a);
  }
  return Json{{"n", n},
              {"d", spec.d},
              {"field", ctx.cfg.field_spec().ToString()},
              {"m", ctx.cfg.m},
              {"a", ctx.cfg.a},
              {"poly", RenderPoly(pn)},
              {"points", model.table()->size()},
              {"torus_size", model.TorusSize()},
              {"gamma_size", model.GammaElements().size()},
              {"characters", chars.size()},
              {"admissible_characters", admissible},
              {"plus_characters", plus}};
}

Json ExtendCommand(const Context& ctx, const Host& host, const std::string& fn_path,
                   const std::string& engine, int w0_dim) {
  FnOnX f = ReadFnCsv(fn_path, host.table);
  const int a = ctx.cfg.a;
  ExtensionResult r;
  if (engine == "solver") {
    r = ExtendBySolver(f, a, ctx.cfg.budget);
  } else if (engine == "constructive") {
    Require(host.model.has_value(), ErrorCode::kInvalidArgument,
            "the constructive engine needs an X_n host (--xn)");
    ConstructiveOptions co;
    co.budget = ctx.cfg.budget;
    r = ExtendOnXn(*host.model, f, a, co);
  } else if (engine == "inductive") {
    const std::size_t n = host.table->nvars();
    std::size_t k = w0_dim >= 0 ? static_cast<std::size_t>(w0_dim)
                    : host.model  ? n - host.model->spec().d
                                  : n - 1;
    Require(k <= n, ErrorCode::kInvalidArgument, "--w0-dim exceeds the ambient dimension");
    std::vector<Vec> dirs;
    for (std::size_t i = 0; i < k; ++i) {
      Vec e(n);
      e[i] = Elem(1);
      dirs.push_back(e);
    }
    InductiveOptions io;
    io.budget = ctx.cfg.budget;
    try {
      r = ExtendInductive(f, a, AffineFlat(*ctx.field, Vec(n), dirs), io);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooManySlices) throw;
      r.status = ExtensionStatus::kInconclusive;
      r.engine = "inductive";
      r.reason = e.what();
    }
  } else {
    Fail(ErrorCode::kInvalidArgument, "unknown engine " + engine);
  }
  Json j = ToJson(r);
  if (r.status == ExtensionStatus::kNoExtension) {
    j["certificate_verified"] = VerifyCertificate(f, a, r.certificate);
  }
  return j;
}

Json SuiteCommand(const Context& ctx, const std::vector<int>& only, const std::string& golden,
                  bool table) {
  SuiteOptions so;
  so.golden_dir = golden;
  so.only = only;
  so.seed = ctx.cfg.seed;
  so.budget = ctx.cfg.budget;
  auto results = RunSuite(so);
  if (table) std::cerr << FormatTable(results);
  Json list = Json::array();
  bool pass = true;
  for (const auto& r : results) {
    list.push_back(ToJson(r));
    pass = pass && r.pass;
  }
  return Json{{"pass", pass}, {"criteria", list}};
}

int ExitCodeFor(const Error& e) {
  if (e.code() == ErrorCode::kBudgetExceeded || e.code() == ErrorCode::kSliceBudgetExceeded) {
    return 3;
  }
  return IsPropertyFailure(e.code()) ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with high-rank polynomials over finite fields"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--config", flags.config, "key=value config file");
  app.add_option("--field", flags.field, "field spec, p or p^l");
  app.add_option("--d", flags.d, "degree d");
  app.add_option("--a", flags.a, "degree bound a");
  app.add_option("--m", flags.m, "order of the root-of-unity subgroup");
  app.add_option("--seed", flags.seed, "sampling seed");
  app.add_option("--samples", flags.samples, "Monte Carlo sample count");
  app.add_option("--workers", flags.workers, "OpenMP worker count");
  app.add_option("--max-enumeration", flags.max_enumeration, "enumeration budget");
  app.add_option("--cache-dir", flags.cache_dir, "point-table cache directory");
  app.add_flag("--no-cache", flags.no_cache, "do not read or write the cache");
  app.add_option("--out", flags.out, "write the JSON result to this file");
  app.add_option("--log", flags.log, "append an experiment record to this jsonl file");

  auto host_opts = [](CLI::App* sub, HostFlags& hf) {
    sub->add_option("--eq", hf.eq, "equations of the variety, separated by ';'");
    sub->add_option("--nvars", hf.nvars, "ambient dimension (default: highest variable)");
    sub->add_option("--xn", hf.xn, "use the model variety X_n with this n");
  };

  std::string poly_text, q_text, fn_path, engine = "solver", strategy = "exhaustive";
  std::string route = "auto", mode = "lines", ell = "x1", golden = HIRANK_GOLDEN_DIR;
  int gowers_d = 0, cutoff = 4, w0_dim = -1, levels = 1;
  bool sampled = false, table = false;
  std::size_t n = 2, m_fiber = 1, dim = 1, max_witnesses = 8;
  long long bucket = 1;
  std::vector<int> only;
  HostFlags hf;

  auto* rank = app.add_subcommand("rank", "bias, Gowers norm, Schmidt rank, singular bound");
  rank->add_option("poly", poly_text)->required();
  rank->add_option("--gowers-d", gowers_d, "norm order (default: degree)");
  rank->add_flag("--sampled", sampled, "Monte Carlo Gowers norm");
  rank->add_option("--cutoff", cutoff, "largest Schmidt rank searched");

  auto* xn = app.add_subcommand("xn", "build, cache and summarize X_n");
  xn->add_option("--n", n, "number of blocks");

  auto* weak = app.add_subcommand("weaktest", "test a function for weak polynomiality");
  weak->add_option("fn", fn_path)->required();
  weak->add_option("--mode", mode, "lines|planes|kr");
  host_opts(weak, hf);

  auto* ext = app.add_subcommand("extend", "extend a function on X to a polynomial");
  ext->add_option("fn", fn_path)->required();
  ext->add_option("--engine", engine, "solver|constructive|inductive");
  ext->add_option("--w0-dim", w0_dim, "inductive base: span of the first k coordinates");
  host_opts(ext, hf);

  auto* spaces = app.add_subcommand("spaces", "dimensions of weak and polynomial spaces");
  host_opts(spaces, hf);

  auto* fiber = app.add_subcommand("fiber", "solve P(w(x)) = Q over affine maps w");
  fiber->add_option("P", poly_text)->required();
  fiber->add_option("Q", q_text)->required();
  fiber->add_option("--m", m_fiber, "source dimension m");
  fiber->add_option("--strategy", strategy, "exhaustive|random");
  fiber->add_option("--levels", levels, "also count over extensions up to this degree");
  fiber->add_option("--max-witnesses", max_witnesses, "witness cap");

  auto* scan = app.add_subcommand("fiber-scan", "list targets with empty fiber");
  scan->add_option("P", poly_text)->required();
  scan->add_option("--m", m_fiber, "source dimension m");
  scan->add_option("--route", route, "auto|direct|separable");

  auto* def = app.add_subcommand("deficiency", "flats in a slice that extend to no larger flat");
  def->add_option("--ell", ell, "affine slice function");
  def->add_option("--b", bucket, "slice value");
  def->add_option("--dim", dim, "flat dimension");
  host_opts(def, hf);

  auto* suite = app.add_subcommand("suite", "run the acceptance battery");
  suite->add_option("--only", only, "criterion ids")->delimiter(',');
  suite->add_option("--golden", golden, "golden directory");
  suite->add_flag("--table", table, "print a pass/fail table on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  Json result;
  int code = 0;
  std::string command = app.get_subcommands().front()->get_name();
  SessionConfig used;
  try {
    if (!fn_path.empty()) ApplyFnMeta(fn_path, hf, flags);
    Context ctx = MakeContext(flags, app);
    used = ctx.cfg;
    if (rank->parsed()) {
      result = RankReport(ctx, poly_text, gowers_d, sampled, cutoff);
    } else if (xn->parsed()) {
      result = XnSummary(ctx, n);
    } else if (weak->parsed()) {
      Host host = MakeHost(ctx, hf);
      FnOnX f = ReadFnCsv(fn_path, host.table);
      WeakMode wm = mode == "lines"    ? WeakMode::kLines
                    : mode == "planes" ? WeakMode::kPlanes
                    : mode == "kr"     ? WeakMode::kKrSubspaces
                                       : (Fail(ErrorCode::kInvalidArgument, "unknown mode " + mode),
                                          WeakMode::kLines);
      result = ToJson(IsWeaklyPolynomial(f, ctx.cfg.a, wm, ctx.cfg.budget));
      result["a"] = ctx.cfg.a;
      result["mode"] = mode;
    } else if (ext->parsed()) {
      result = ExtendCommand(ctx, MakeHost(ctx, hf), fn_path, engine, w0_dim);
    } else if (spaces->parsed()) {
      Host host = MakeHost(ctx, hf);
      result = ToJson(QuotientDim(*host.table, ctx.cfg.a, ctx.cfg.budget));
      result["a"] = ctx.cfg.a;
      result["points"] = host.table->size();
    } else if (fiber->parsed()) {
      auto p = ParseCollection(poly_text, ctx.field);
      auto q = ParseCollection(q_text, ctx.field, m_fiber);
      FiberOptions fo;
      fo.strategy = strategy == "random" ? FiberStrategy::kRandom : FiberStrategy::kExhaustive;
      Require(strategy == "random" || strategy == "exhaustive", ErrorCode::kInvalidArgument,
              "unknown strategy " + strategy);
      fo.samples = ctx.cfg.samples;
      fo.seed = ctx.cfg.seed;
      fo.max_witnesses = max_witnesses;
      fo.budget = ctx.cfg.budget;
      result = ToJson(SolveFiber(p, q, m_fiber, fo));
      if (levels >= 2 && fo.strategy == FiberStrategy::kExhaustive) {
        auto dimr = FiberDimension(p, q, m_fiber, levels, ctx.cfg.budget);
        result["count_k2"] = dimr.counts[1];
        result["slope"] = dimr.slope;
        result["slope_flag"] = dimr.flag;
      }
    } else if (scan->parsed()) {
      auto p = ParseCollection(poly_text, ctx.field);
      CountRoute cr = route == "direct"      ? CountRoute::kDirect
                      : route == "separable" ? CountRoute::kSeparable
                                             : CountRoute::kAuto;
      auto cm = MakeCoefficientMap(p, m_fiber, ctx.cfg.budget);
      result = ToJson(SurjectivityScan(p, m_fiber, cr, ctx.cfg.budget), cm);
    } else if (def->parsed()) {
      Host host = MakeHost(ctx, hf);
      VarietyTable x = *host.table;
      x.AttachSlice(ParsePoly(ell, ctx.field, x.nvars()));
      auto cat = FlatsInBucket(x, ctx.field->FromInt(bucket), dim, ctx.cfg.budget);
      result = ToJson(FlatExtensionDeficiency(x, cat, ctx.cfg.budget));
      result["flat_dim"] = dim;
      result["bucket"] = ctx.field->FromInt(bucket).v;
    } else if (suite->parsed()) {
      result = SuiteCommand(ctx, only, golden, table);
      if (!result["pass"].get<bool>()) code = 1;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "hirank: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "hirank: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "hirank: " << e.what() << "\n";
    return 2;
  }

  const std::string text = Dump(result);
  if (flags.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(flags.out);
    out << text;
    if (!out) {
      std::cerr << "hirank: cannot write " << flags.out << "\n";
      return 2;
    }
  }
  if (!flags.log.empty()) {
    Json rec{{"command", command},
             {"config_hash", used.Hash()},
             {"inputs", std::vector<std::string>(argv + 1, argv + argc)},
             {"outputs", result},
             {"wall_seconds",
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()},
             {"versions", {{"hirank", kVersion}, {"cli11", CLI11_VERSION}}}};
    AppendRecord(flags.log, rec);
  }
  return code;
}
