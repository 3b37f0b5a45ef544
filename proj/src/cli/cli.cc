//
// Copyright 2026 The statleak Authors
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
//


#include "statleak/cli/cli.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "statleak/cli/config.h"
#include "statleak/flow/sml_network.h"
#include "statleak/leakage/measures.h"
#include "statleak/leakage/sml.h"
#include "statleak/tabular/dataset.h"
#include "statleak/tabular/release.h"
#include "statleak/tabular/secret_spec.h"
#include "statleak/tabular/support_sets.h"
#include "statleak/tradeoff/closed_form.h"
#include "statleak/tradeoff/mismatch.h"
#include "statleak/tradeoff/sweep.h"

namespace statleak {

namespace {

using json = nlohmann::json;

struct Globals {
  uint64_t seed = 0;
  std::string log_base = "2";
  uint64_t enum_cap = kDefaultEnumCap;
  std::string format;  // Empty: the command's default.
  int jobs = 1;
};

// Everything that determines a run's output feeds the config hash.
class Context {
 public:
  Context(const Globals& g, LogBase base, std::ostream& out)
      : g_(g), base_(base), out_(out) {}

  const Globals& globals() const { return g_; }
  LogBase base() const { return base_; }
  void Hash(absl::string_view s) {
    hash_ = Fnv1a(s, hash_);
    hash_ = Fnv1a(absl::string_view("\x1f", 1), hash_);
  }
  std::string hash_hex() const { return absl::StrFormat("%016x", hash_); }

  absl::StatusOr<std::string> ReadFile(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return absl::NotFoundError(absl::StrCat("cannot open ", path));
    std::ostringstream buf;
    buf << f.rdbuf();
    Hash(buf.str());
    return buf.str();
  }

  absl::StatusOr<json> LoadJson(const std::string& path) {
    absl::StatusOr<std::string> text = ReadFile(path);
    if (!text.ok()) return text.status();
    json j = json::parse(*text, nullptr, false);
    if (j.is_discarded()) {
      return absl::InvalidArgumentError(absl::StrCat("bad JSON in ", path));
    }
    return j;
  }

  json Envelope(json j) const {
    j["version"] = kVersion;
    j["config_hash"] = hash_hex();
    j["seed"] = g_.seed;
    return j;
  }

  absl::Status Emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
      out_ << text;
      return absl::OkStatus();
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
    f << text;
    if (!f) return absl::DataLossError(absl::StrCat("write failed: ", path));
    return absl::OkStatus();
  }

  absl::Status EmitJson(const json& j, const std::string& path) {
    return Emit(Envelope(j).dump(2) + "\n", path);
  }

  std::ostream& out() { return out_; }

 private:
  Globals g_;
  LogBase base_;
  std::ostream& out_;
  uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string CodeName(absl::StatusCode code) {
  std::string s = absl::StatusCodeToString(code);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return c == ' ' ? '_' : std::toupper(c);
  });
  return s;
}

void PrintError(std::ostream& err, const std::string& code,
                const std::string& message) {
  err << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
}

std::vector<std::string> SplitList(const std::string& s) {
  if (s.empty()) return {};
  return absl::StrSplit(s, ',');
}

// ---- policy + partition loading shared by sml and flow-debug ----

struct SmlArgs {
  std::string policy, space, mechanism, secret;
  std::string method = "auto";
  bool measures = false;
  bool no_witness = false;
  std::string out;
};

struct Loaded {
  PolicyMatrix policy;
  SecretPartition partition;
};

absl::StatusOr<SecretPartition> PartitionFromClasses(const json& classes,
                                                     size_t n) {
  if (!classes.is_array() || classes.size() != n) {
    return absl::InvalidArgumentError(
        "policy 'classes' must list one secret per input row");
  }
  bool all_int = std::all_of(classes.begin(), classes.end(),
                             [](const json& c) { return c.is_number_integer(); });
  std::vector<std::string> ids;
  for (const auto& c : classes) {
    ids.push_back(c.is_string() ? c.get<std::string>() : c.dump());
  }
  std::vector<SecretValue> secrets;
  std::map<std::string, int> index;
  if (all_int) {
    std::set<int64_t> vals;
    for (const auto& c : classes) vals.insert(c.get<int64_t>());
    for (int64_t v : vals) {
      index[absl::StrCat(v)] = static_cast<int>(secrets.size());
      secrets.push_back({absl::StrCat(v), MakeRational(v)});
    }
  } else {
    for (const auto& id : ids) {
      if (index.emplace(id, static_cast<int>(secrets.size())).second) {
        secrets.push_back({id, std::nullopt});
      }
    }
  }
  std::vector<int> class_of;
  for (const auto& id : ids) class_of.push_back(index.at(id));
  return SecretPartition::FromClassIds(std::move(class_of), std::move(secrets));
}

absl::StatusOr<Loaded> LoadPolicy(Context& ctx, const SmlArgs& a) {
  if (!a.policy.empty()) {
    absl::StatusOr<json> j = ctx.LoadJson(a.policy);
    if (!j.ok()) return j.status();
    absl::StatusOr<PolicyMatrix> p = PolicyMatrix::FromJson(*j);
    if (!p.ok()) return p.status();
    if (!j->contains("classes")) {
      return absl::InvalidArgumentError(
          "policy file needs a 'classes' list (secret of each input row)");
    }
    absl::StatusOr<SecretPartition> part =
        PartitionFromClasses(j->at("classes"), p->num_inputs());
    if (!part.ok()) return part.status();
    return Loaded{*std::move(p), *std::move(part)};
  }
  if (a.space.empty() || a.mechanism.empty() || a.secret.empty()) {
    return absl::InvalidArgumentError(
        "give --policy, or all of --space, --mechanism and --secret");
  }
  absl::StatusOr<json> sj = ctx.LoadJson(a.space);
  if (!sj.ok()) return sj.status();
  absl::StatusOr<SpaceSpec> space = SpaceFromJson(*sj);
  if (!space.ok()) return space.status();
  absl::StatusOr<json> secj = ctx.LoadJson(a.secret);
  if (!secj.ok()) return secj.status();
  absl::StatusOr<BoundSecret> secret = SecretFromJson(*secj, *space);
  if (!secret.ok()) return secret.status();
  absl::StatusOr<json> mj = ctx.LoadJson(a.mechanism);
  if (!mj.ok()) return mj.status();
  absl::StatusOr<std::vector<CategoricalParam>> inputs =
      space->space.Members(ctx.globals().enum_cap);
  if (!inputs.ok()) return inputs.status();
  BuildContext bc{&*space, &*secret, {}, ctx.globals().seed,
                  ctx.globals().enum_cap};
  absl::StatusOr<PolicyMatrix> policy = PolicyFromConfig(*mj, bc, *inputs);
  if (!policy.ok()) return policy.status();
  absl::StatusOr<SecretPartition> part = BuildPartition(*inputs, secret->fn);
  if (!part.ok()) return part.status();
  return Loaded{*std::move(policy), *std::move(part)};
}

absl::StatusOr<LeakageReport> ComputeSml(const Loaded& l,
                                         const std::string& method,
                                         const Globals& g, LogBase base) {
  if (method == "flow" || (method == "auto" && l.policy.deterministic())) {
    return SmlDeterministic(l.policy, l.partition, base);
  }
  if (method != "brute" && method != "auto") {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown method '", method, "'"));
  }
  BruteForceOptions o;
  o.cap = g.enum_cap;
  o.jobs = g.jobs;
  o.base = base;
  return SmlBruteForce(l.policy, l.partition, o);
}

absl::Status CmdSml(Context& ctx, const SmlArgs& a) {
  absl::StatusOr<Loaded> l = LoadPolicy(ctx, a);
  if (!l.ok()) return l.status();
  absl::StatusOr<LeakageReport> rep =
      ComputeSml(*l, a.method, ctx.globals(), ctx.base());
  if (!rep.ok()) return rep.status();
  json j = ReportToJson(*rep, l->policy, l->partition, !a.no_witness);
  if (a.measures) {
    j["min_entropy_leakage"] = MinEntropyLeakage(l->policy, ctx.base());
    Sandwich sw = SandwichBounds(l->policy, l->partition, ctx.base());
    j["sandwich"] = {{"lower", sw.lower}, {"upper", sw.upper}};
    j["ldp"] = LdpToJson(LdpParameter(l->policy, l->partition), ctx.base());
  }
  if (ctx.globals().format == "csv") {
    return ctx.Emit(absl::StrFormat("method,raw_sum,sml,log_base\n%s,%s,%.17g,%s\n",
                                    rep->method, FormatRational(rep->raw_sum),
                                    rep->sml, LogBaseName(ctx.base())),
                    a.out);
  }
  return ctx.EmitJson(j, a.out);
}

absl::Status CmdFlowDebug(Context& ctx, const SmlArgs& a) {
  absl::StatusOr<Loaded> l = LoadPolicy(ctx, a);
  if (!l.ok()) return l.status();
  absl::StatusOr<SmlNetwork> net = BuildSmlNetwork(l->policy, l->partition);
  if (!net.ok()) return net.status();
  return ctx.Emit(net->net.ToDot(), a.out);
}

// ---- tabular commands ----

struct TabularArgs {
  std::string input, columns, gamma_star, gamma_hat, secret, mechanism;
  std::optional<int64_t> tau;
  std::string out_dir, out, manifest;
};

struct TabularState {
  IngestResult ingest;
  SupportSets sets;
};

absl::StatusOr<std::optional<std::vector<Combo>>> LoadCombos(
    Context& ctx, const std::string& path, size_t arity) {
  if (path.empty()) return std::optional<std::vector<Combo>>();
  absl::StatusOr<json> j = ctx.LoadJson(path);
  if (!j.ok()) return j.status();
  absl::StatusOr<std::vector<Combo>> c = CombosFromJson(*j, arity);
  if (!c.ok()) return c.status();
  return std::optional<std::vector<Combo>>(*std::move(c));
}

absl::StatusOr<TabularState> LoadTabular(Context& ctx, const TabularArgs& a) {
  if (a.input.empty()) return absl::InvalidArgumentError("--input is required");
  absl::StatusOr<std::string> text = ctx.ReadFile(a.input);
  if (!text.ok()) return text.status();
  absl::StatusOr<IngestResult> ing = IngestCsvString(*text, SplitList(a.columns));
  if (!ing.ok()) return ing.status();
  TabularState st{*std::move(ing), {}};
  st.sets = ExtractSupport(st.ingest.dataset);
  const size_t arity = st.sets.columns.size();
  auto gs = LoadCombos(ctx, a.gamma_star, arity);
  if (!gs.ok()) return gs.status();
  auto gh = LoadCombos(ctx, a.gamma_hat, arity);
  if (!gh.ok()) return gh.status();
  if (absl::Status s = AttachSupports(st.sets, *std::move(gs), *std::move(gh));
      !s.ok()) {
    return s;
  }
  return st;
}

SpaceSpec TabularSpace(const SupportSets& sets, int64_t tau) {
  SpaceSpec sp;
  sp.space = ParameterSpace::Full(sets.CategoryLabels(), tau);
  sp.columns = sets.columns;
  sp.combos = sets.Categories();
  return sp;
}

absl::StatusOr<int64_t> SecretCount(const BoundSecret& b,
                                    const SecretSpec* spec) {
  if (!b.values.empty()) return static_cast<int64_t>(b.values.size());
  if (spec != nullptr && spec->kind == SecretSpec::Kind::kCustom) {
    std::set<std::string> ids;
    for (const auto& [k, v] : spec->custom) ids.insert(v);
    return static_cast<int64_t>(ids.size());
  }
  return absl::FailedPreconditionError(
      "the secret has no finite value list; add buckets");
}

absl::Status CmdIngest(Context& ctx, const TabularArgs& a) {
  absl::StatusOr<TabularState> st = LoadTabular(ctx, a);
  if (!st.ok()) return st.status();
  const Dataset& ds = st->ingest.dataset;
  absl::StatusOr<CategoricalParam> theta = ToParam(ds, st->sets, a.tau);
  if (!theta.ok()) return theta.status();
  const int64_t tau = theta->tau();
  int64_t s = tau + 1;
  if (!a.secret.empty()) {
    absl::StatusOr<json> j = ctx.LoadJson(a.secret);
    if (!j.ok()) return j.status();
    SpaceSpec sp = TabularSpace(st->sets, tau);
    absl::StatusOr<BoundSecret> b = SecretFromJson(*j, sp);
    if (!b.ok()) return b.status();
    absl::StatusOr<SecretSpec> spec = SecretSpec::FromJson(*j);
    absl::StatusOr<int64_t> n =
        SecretCount(*b, spec.ok() ? &*spec : nullptr);
    if (!n.ok()) return n.status();
    s = *n;
  }
  json space = {{"columns", st->sets.columns},
                {"categories", st->sets.CategoryLabels()},
                {"combos", st->sets.Categories()},
                {"tau", tau},
                {"theta", theta->ToJson()}};
  TabularScale scale = st->sets.Scale(tau, s);
  json scale_j = scale.ToJson();
  scale_j["d"] = st->sets.d();
  json summary = {{"n", ds.n()},
                  {"rows_read", st->ingest.rows_read},
                  {"rows_dropped", st->ingest.rows_dropped},
                  {"d", st->sets.d()},
                  {"d_star", st->sets.d_star()},
                  {"d_hat0", st->sets.d_hat0()},
                  {"d_hat1", st->sets.d_hat1()}};
  if (a.out_dir.empty()) {
    summary["space"] = space;
    summary["scale"] = scale_j;
    return ctx.EmitJson(summary, "");
  }
  std::error_code ec;
  std::filesystem::create_directories(a.out_dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", a.out_dir, ": ", ec.message()));
  }
  namespace fs = std::filesystem;
  std::string sp_path = (fs::path(a.out_dir) / "space.json").string();
  std::string sc_path = (fs::path(a.out_dir) / "scale.json").string();
  if (absl::Status s1 = ctx.EmitJson(space, sp_path); !s1.ok()) return s1;
  if (absl::Status s2 = ctx.EmitJson(scale_j, sc_path); !s2.ok()) return s2;
  summary["space_path"] = sp_path;
  summary["scale_path"] = sc_path;
  return ctx.EmitJson(summary, "");
}

absl::Status CmdRelease(Context& ctx, const TabularArgs& a) {
  if (a.out.empty()) return absl::InvalidArgumentError("--out is required");
  if (a.mechanism.empty()) {
    return absl::InvalidArgumentError("--mechanism is required");
  }
  absl::StatusOr<TabularState> st = LoadTabular(ctx, a);
  if (!st.ok()) return st.status();
  const Dataset& ds = st->ingest.dataset;
  const int64_t n = static_cast<int64_t>(ds.n());
  SpaceSpec sp = TabularSpace(st->sets, n);
  std::optional<BoundSecret> secret;
  if (!a.secret.empty()) {
    absl::StatusOr<json> j = ctx.LoadJson(a.secret);
    if (!j.ok()) return j.status();
    absl::StatusOr<BoundSecret> b = SecretFromJson(*j, sp);
    if (!b.ok()) return b.status();
    secret = *std::move(b);
  }
  absl::StatusOr<json> mj = ctx.LoadJson(a.mechanism);
  if (!mj.ok()) return mj.status();
  BuildContext bc{&sp, secret ? &*secret : nullptr, {}, ctx.globals().seed,
                  ctx.globals().enum_cap};
  if (st->sets.gamma_hat_star) {
    std::vector<bool> est;
    for (const auto& c : sp.combos) {
      est.push_back(std::binary_search(st->sets.gamma_hat_star->begin(),
                                       st->sets.gamma_hat_star->end(), c));
    }
    bc.support = EstimatedSupport(std::move(est));
  }
  absl::StatusOr<std::unique_ptr<Mechanism>> mech = MechanismFromJson(*mj, bc);
  if (!mech.ok()) return mech.status();
  absl::StatusOr<ReleaseResult> rel =
      ReleaseDataset(ds, st->sets, **mech, ctx.globals().seed);
  if (!rel.ok()) return rel.status();
  if (absl::Status s = ctx.Emit(DatasetToCsv(rel->released), a.out); !s.ok()) {
    return s;
  }

  json manifest = {{"mechanism", *mj},
                   {"categories", st->sets.CategoryLabels()},
                   {"n", n},
                   {"rows_dropped", st->ingest.rows_dropped},
                   {"theta", rel->theta.ToJson()},
                   {"theta_prime", rel->theta_prime.ToJson()},
                   {"released_csv", a.out}};
  // SML of the configured mechanism, when the space is small enough.
  std::string why;
  if (!secret) {
    why = "no secret configured";
  } else {
    absl::StatusOr<std::vector<CategoricalParam>> inputs =
        sp.space.Members(ctx.globals().enum_cap);
    absl::StatusOr<PolicyMatrix> pol =
        inputs.ok() ? Materialize(**mech, *inputs, ctx.globals().enum_cap)
                    : absl::StatusOr<PolicyMatrix>(inputs.status());
    absl::StatusOr<SecretPartition> part =
        inputs.ok() ? BuildPartition(*inputs, secret->fn)
                    : absl::StatusOr<SecretPartition>(inputs.status());
    if (pol.ok() && part.ok()) {
      absl::StatusOr<LeakageReport> rep = ComputeSml(
          Loaded{*pol, *part}, "auto", ctx.globals(), ctx.base());
      if (rep.ok()) {
        manifest["sml"] = rep->sml;
        manifest["sml_raw_sum"] = FormatRational(rep->raw_sum);
        manifest["sml_method"] = rep->method;
        manifest["log_base"] = LogBaseName(ctx.base());
      } else {
        why = std::string(rep.status().message());
      }
    } else {
      why = std::string(pol.ok() ? part.status().message()
                                 : pol.status().message());
    }
  }
  if (!why.empty()) {
    manifest["sml"] = nullptr;
    manifest["sml_note"] = why;
  }
  std::string mpath = a.manifest.empty() ? a.out + ".manifest.json" : a.manifest;
  if (absl::Status s = ctx.EmitJson(manifest, mpath); !s.ok()) return s;
  return absl::OkStatus();
}

// ---- tradeoff and bounds ----

struct ScaleArgs {
  std::string scale_file;
  std::optional<int64_t> tau, d_hat0, d_hat1, d_star, s;
};

absl::StatusOr<TabularScale> LoadScale(Context& ctx, const ScaleArgs& a,
                                       const json* inline_scale) {
  json j = json::object();
  if (inline_scale != nullptr) j = *inline_scale;
  if (!a.scale_file.empty()) {
    absl::StatusOr<json> f = ctx.LoadJson(a.scale_file);
    if (!f.ok()) return f.status();
    j = *f;
  }
  if (a.tau) j["tau"] = *a.tau;
  if (a.d_hat0) j["d_hat0"] = *a.d_hat0;
  if (a.d_hat1) j["d_hat1"] = *a.d_hat1;
  if (a.d_star) j["d_star"] = *a.d_star;
  if (a.s) j["s"] = *a.s;
  return TabularScale::FromJson(j);
}

struct TradeoffArgs {
  std::string config, mechanism, grid, out;
  int mc_samples = 2000;
  ScaleArgs scale;
};

json PointJson(const TradeoffPoint& p) {
  auto opt = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  json j = {{"mechanism", p.mechanism},  {"hyperparam", p.hyperparam},
            {"privacy", opt(p.privacy)}, {"privacy_lo", opt(p.privacy_lo)},
            {"privacy_hi", opt(p.privacy_hi)},
            {"distortion", opt(p.distortion)},
            {"distortion_lo", opt(p.distortion_lo)},
            {"distortion_hi", opt(p.distortion_hi)},
            {"method", p.method}};
  if (p.bound_branch) j["lo_branch"] = p.bound_branch;
  if (!p.ok()) j["error"] = p.error;
  return j;
}

absl::StatusOr<int> CmdTradeoff(Context& ctx, const TradeoffArgs& a) {
  json cfg = json::object();
  if (!a.config.empty()) {
    absl::StatusOr<json> c = ctx.LoadJson(a.config);
    if (!c.ok()) return c.status();
    cfg = *c;
  }
  std::string family = a.mechanism.empty()
                           ? cfg.value("mechanism", std::string())
                           : a.mechanism;
  if (family.empty()) return absl::InvalidArgumentError("--mechanism is required");
  std::vector<double> grid;
  if (!a.grid.empty()) {
    for (const auto& g : SplitList(a.grid)) {
      double v;
      if (!absl::SimpleAtod(g, &v)) {
        return absl::InvalidArgumentError(absl::StrCat("bad grid value '", g, "'"));
      }
      grid.push_back(v);
    }
  } else if (cfg.contains("grid")) {
    grid = cfg.at("grid").get<std::vector<double>>();
  }
  if (grid.empty()) return absl::InvalidArgumentError("empty grid");
  absl::StatusOr<TabularScale> scale = LoadScale(
      ctx, a.scale, cfg.contains("scale") ? &cfg.at("scale") : nullptr);
  if (!scale.ok()) return scale.status();
  SweepOptions o;
  o.cap = ctx.globals().enum_cap;
  o.seed = ctx.globals().seed;
  o.jobs = ctx.globals().jobs;
  o.base = ctx.base();
  o.mc_samples = cfg.value("mc_samples", a.mc_samples);
  absl::StatusOr<std::vector<TradeoffPoint>> pts =
      TradeoffSweep(family, *scale, grid, o);
  if (!pts.ok()) return pts.status();
  size_t good = std::count_if(pts->begin(), pts->end(),
                              [](const TradeoffPoint& p) { return p.ok(); });
  absl::Status st;
  if (ctx.globals().format == "json") {
    json arr = json::array();
    for (const auto& p : *pts) arr.push_back(PointJson(p));
    st = ctx.EmitJson({{"scale", scale->ToJson()},
                       {"log_base", LogBaseName(ctx.base())},
                       {"points", arr}},
                      a.out);
  } else {
    st = ctx.Emit(SweepToCsv(*pts), a.out);
  }
  if (!st.ok()) return st;
  if (good == 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("every grid point failed; first error: ", pts->front().error));
  }
  return 0;
}

struct BoundsArgs {
  std::string mechanism, exp_epsilon, out;
  std::optional<double> epsilon;
  std::optional<int64_t> interval;
  ScaleArgs scale;
};

absl::Status CmdBounds(Context& ctx, const BoundsArgs& a) {
  absl::StatusOr<TabularScale> scale = LoadScale(ctx, a.scale, nullptr);
  if (!scale.ok()) return scale.status();
  json j = {{"scale", scale->ToJson()}, {"mechanism", a.mechanism}};
  if (a.mechanism == "rr") {
    Rational e;
    if (!a.exp_epsilon.empty()) {
      absl::StatusOr<Rational> p = ParseRational(a.exp_epsilon);
      if (!p.ok()) return p.status();
      e = *p;
    } else if (a.epsilon) {
      if (!(*a.epsilon >= 0) || std::isinf(*a.epsilon)) {
        return absl::InvalidArgumentError("epsilon must be finite and >= 0");
      }
      e = ExactFromDouble(std::exp(*a.epsilon));
    } else {
      return absl::InvalidArgumentError("rr needs --epsilon or --exp-epsilon");
    }
    absl::StatusOr<MismatchBounds> b = RrMismatchBounds(*scale, e);
    if (!b.ok()) return b.status();
    j["exp_epsilon"] = FormatRational(e);
    j["bounds"] = b->ToJson(ctx.base());
    j["robust_epsilon_cap"] =
        RrRobustEpsilonCap(scale->tau, scale->d_hat(), scale->s);
    j["robust_exp_epsilon_cap"] =
        FormatRational(RrRobustExpEpsilonCap(scale->tau, scale->d_hat(), scale->s));
    j["robust"] = e <= RrRobustExpEpsilonCap(scale->tau, scale->d_hat(), scale->s);
  } else if (a.mechanism == "qm") {
    if (!a.interval) return absl::InvalidArgumentError("qm needs --interval");
    absl::StatusOr<MismatchBounds> b = QmMismatchBounds(*scale, *a.interval);
    if (!b.ok()) return b.status();
    j["interval"] = *a.interval;
    j["bounds"] = b->ToJson(ctx.base());
    j["decay_threshold"] =
        QmDecayThreshold(scale->s, *a.interval, scale->tau, scale->d_hat0);
  } else {
    return absl::InvalidArgumentError("--mechanism must be rr or qm");
  }
  return ctx.EmitJson(j, a.out);
}

// Hash input: argv minus the worker count, which must not change outputs.
std::string HashableArgs(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    absl::string_view t = argv[i];
    if (t == "--jobs") {
      ++i;
      continue;
    }
    if (absl::StartsWith(t, "--jobs=")) continue;
    absl::StrAppend(&s, t, "\x1f");
  }
  return s;
}

void AddScaleFlags(CLI::App* c, ScaleArgs& s) {
  c->add_option("--scale", s.scale_file, "scale JSON file");
  c->add_option("--tau", s.tau, "precision level");
  c->add_option("--d-hat0", s.d_hat0, "estimated categories that are feasible");
  c->add_option("--d-hat1", s.d_hat1, "estimated categories that are not");
  c->add_option("--d-star", s.d_star, "truly feasible categories");
  c->add_option("--s", s.s, "number of secret values");
}

void AddTabularFlags(CLI::App* c, TabularArgs& t) {
  c->add_option("--input", t.input, "dataset CSV with a header row");
  c->add_option("--columns", t.columns, "comma-separated columns (default all)");
  c->add_option("--gamma-star", t.gamma_star, "JSON list of true combos");
  c->add_option("--gamma-hat", t.gamma_hat, "JSON list of estimated combos");
  c->add_option("--secret", t.secret, "secret spec JSON");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"statleak: statistic maximal leakage toolkit"};
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  Globals g;
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--log-base", g.log_base, "log base: 2 or e")
      ->check(CLI::IsMember({"2", "e"}));
  app.add_option("--enum-cap", g.enum_cap, "enumeration cap");
  app.add_option("--format", g.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  SmlArgs sml;
  CLI::App* c_sml = app.add_subcommand("sml", "statistic maximal leakage");
  c_sml->add_option("--policy", sml.policy, "policy JSON with classes");
  c_sml->add_option("--space", sml.space, "space JSON");
  c_sml->add_option("--mechanism", sml.mechanism, "mechanism config JSON");
  c_sml->add_option("--secret", sml.secret, "secret spec JSON");
  c_sml->add_option("--method", sml.method, "auto, brute or flow")
      ->check(CLI::IsMember({"auto", "brute", "flow"}));
  c_sml->add_flag("--measures", sml.measures,
                  "add min-entropy leakage, sandwich bounds and L_DP");
  c_sml->add_flag("--no-witness", sml.no_witness, "omit the maximizing prior");
  c_sml->add_option("--out", sml.out, "output file (default stdout)");

  SmlArgs fd;
  CLI::App* c_fd = app.add_subcommand("flow-debug", "DOT dump of the network");
  c_fd->add_option("--policy", fd.policy, "policy JSON with classes");
  c_fd->add_option("--space", fd.space, "space JSON");
  c_fd->add_option("--mechanism", fd.mechanism, "mechanism config JSON");
  c_fd->add_option("--secret", fd.secret, "secret spec JSON");
  c_fd->add_option("--out", fd.out, "output file (default stdout)");

  TabularArgs ing;
  CLI::App* c_ing = app.add_subcommand("ingest", "dataset to space and scale");
  AddTabularFlags(c_ing, ing);
  c_ing->add_option("--tau", ing.tau, "precision level (default n)");
  c_ing->add_option("--out-dir", ing.out_dir, "write space.json, scale.json");

  TabularArgs rel;
  CLI::App* c_rel = app.add_subcommand("release", "release a dataset");
  AddTabularFlags(c_rel, rel);
  c_rel->add_option("--mechanism", rel.mechanism, "mechanism config JSON");
  c_rel->add_option("--out", rel.out, "released CSV");
  c_rel->add_option("--manifest", rel.manifest,
                    "manifest JSON (default <out>.manifest.json)");

  TradeoffArgs tr;
  CLI::App* c_tr = app.add_subcommand("tradeoff", "privacy-distortion sweep");
  c_tr->add_option("--config", tr.config, "sweep config JSON");
  c_tr->add_option("--mechanism", tr.mechanism, "rr, qm or maxl");
  c_tr->add_option("--grid", tr.grid, "comma-separated epsilons or intervals");
  c_tr->add_option("--mc-samples", tr.mc_samples, "samples per candidate");
  c_tr->add_option("--out", tr.out, "output file (default stdout)");
  AddScaleFlags(c_tr, tr.scale);

  BoundsArgs bd;
  CLI::App* c_bd = app.add_subcommand("bounds", "support-mismatch bounds");
  c_bd->add_option("--mechanism", bd.mechanism, "rr or qm")->required();
  c_bd->add_option("--epsilon", bd.epsilon, "RR epsilon");
  c_bd->add_option("--exp-epsilon", bd.exp_epsilon, "RR e^epsilon, exact p/q");
  c_bd->add_option("--interval", bd.interval, "QM interval");
  c_bd->add_option("--out", bd.out, "output file (default stdout)");
  AddScaleFlags(c_bd, bd.scale);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    PrintError(err, "INVALID_ARGUMENT", e.what());
    return 2;
  }

  absl::StatusOr<LogBase> base = ParseLogBase(g.log_base);
  if (!base.ok()) {
    PrintError(err, CodeName(base.status().code()),
               std::string(base.status().message()));
    return 2;
  }
  if (g.format.empty() && *c_tr) g.format = "csv";
  Context ctx(g, *base, out);
  ctx.Hash(HashableArgs(argc, argv));
  auto done = [](absl::Status s) -> absl::StatusOr<int> {
    if (!s.ok()) return s;
    return 0;
  };

  absl::StatusOr<int> rc = 0;
  try {
    if (*c_sml) {
      rc = done(CmdSml(ctx, sml));
    } else if (*c_fd) {
      rc = done(CmdFlowDebug(ctx, fd));
    } else if (*c_ing) {
      rc = done(CmdIngest(ctx, ing));
    } else if (*c_rel) {
      rc = done(CmdRelease(ctx, rel));
    } else if (*c_tr) {
      rc = CmdTradeoff(ctx, tr);
    } else if (*c_bd) {
      rc = done(CmdBounds(ctx, bd));
    }
  } catch (const std::exception& e) {
    rc = absl::InternalError(e.what());
  }
  if (!rc.ok()) {
    PrintError(err, CodeName(rc.status().code()),
               std::string(rc.status().message()));
    return 1;
  }
  return *rc;
}

}  // namespace statleak
