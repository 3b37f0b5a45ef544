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


#include "statleak/cli/config.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "statleak/core/rng.h"
#include "statleak/mechanisms/combinators.h"
#include "statleak/mechanisms/maxl.h"
#include "statleak/mechanisms/qm.h"
#include "statleak/mechanisms/rr.h"

namespace statleak {

namespace {

absl::Status Bad(absl::string_view what) {
  return absl::InvalidArgumentError(what);
}

absl::StatusOr<CategoricalParam> ParamFromJson(const nlohmann::json& j,
                                               int64_t tau) {
  if (j.is_array()) return CategoricalParam::FromJson({{"counts", j}, {"tau", tau}});
  return CategoricalParam::FromJson(j);
}

absl::StatusOr<Rational> ExpEpsilon(const nlohmann::json& j, bool* infinite) {
  *infinite = false;
  if (j.contains("exp_epsilon")) {
    const auto& e = j.at("exp_epsilon");
    if (e.is_string()) return ParseRational(e.get<std::string>());
    if (e.is_number()) return ExactFromDouble(e.get<double>());
    return Bad("exp_epsilon must be a number or a \"p/q\" string");
  }
  if (!j.contains("epsilon")) return Bad("rr needs epsilon or exp_epsilon");
  const auto& e = j.at("epsilon");
  if (e.is_string() && (e == "inf" || e == "infinity")) {
    *infinite = true;
    return Rational(1);
  }
  if (!e.is_number()) return Bad("epsilon must be a number or \"inf\"");
  double eps = e.get<double>();
  if (!(eps >= 0) || std::isinf(eps)) return Bad("epsilon must be >= 0");
  return ExactFromDouble(std::exp(eps));
}

absl::StatusOr<int64_t> Interval(const nlohmann::json& j) {
  if (!j.contains("interval") || !j.at("interval").is_number_integer() ||
      j.at("interval").get<int64_t>() < 1) {
    return Bad("interval must be a positive integer");
  }
  return j.at("interval").get<int64_t>();
}

}  // namespace

uint64_t Fnv1a(absl::string_view data, uint64_t h) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

absl::StatusOr<SpaceSpec> SpaceFromJson(const nlohmann::json& j) {
  if (!j.is_object()) return Bad("space must be a JSON object");
  if (!j.contains("tau") || !j.at("tau").is_number_integer()) {
    return Bad("space needs an integer tau");
  }
  int64_t tau = j.at("tau").get<int64_t>();
  if (tau < 0) return Bad("tau must be >= 0");
  std::vector<std::string> cats;
  if (j.contains("categories")) {
    for (const auto& c : j.at("categories")) {
      cats.push_back(c.is_string() ? c.get<std::string>() : c.dump());
    }
  } else if (j.contains("d") && j.at("d").is_number_integer()) {
    int64_t d = j.at("d").get<int64_t>();
    if (d < 1) return Bad("d must be >= 1");
    for (int64_t i = 0; i < d; ++i) cats.push_back(absl::StrCat("c", i));
  } else {
    return Bad("space needs categories or d");
  }
  if (cats.empty()) return Bad("space has no categories");
  SpaceSpec out;
  if (j.contains("members")) {
    std::vector<CategoricalParam> members;
    for (const auto& m : j.at("members")) {
      absl::StatusOr<CategoricalParam> p = ParamFromJson(m, tau);
      if (!p.ok()) return p.status();
      members.push_back(*std::move(p));
    }
    absl::StatusOr<ParameterSpace> sp =
        ParameterSpace::Explicit(cats, tau, std::move(members));
    if (!sp.ok()) return sp.status();
    out.space = *std::move(sp);
  } else {
    out.space = ParameterSpace::Full(cats, tau);
  }
  if (j.contains("combos")) {
    if (!j.contains("columns")) return Bad("combos need columns");
    out.columns = j.at("columns").get<std::vector<std::string>>();
    absl::StatusOr<std::vector<Combo>> combos =
        CombosFromJson(j.at("combos"), out.columns.size());
    if (!combos.ok()) return combos.status();
    if (combos->size() != cats.size()) {
      return Bad("combos and categories differ in length");
    }
    // CombosFromJson sorts; keep the file's order, which is the category
    // order.
    out.combos.clear();
    for (const auto& c : j.at("combos")) {
      Combo k;
      for (const auto& x : c) {
        k.push_back(x.is_string() ? x.get<std::string>() : x.dump());
      }
      out.combos.push_back(std::move(k));
    }
  } else {
    out.columns = {"category"};
    for (const auto& c : cats) out.combos.push_back({c});
  }
  return out;
}

absl::StatusOr<BoundSecret> SecretFromJson(const nlohmann::json& j,
                                           const SpaceSpec& sp) {
  if (!j.is_object()) return Bad("secret must be a JSON object");
  std::string kind = j.value("kind", std::string("fraction"));
  const int64_t tau = sp.space.tau();
  if (kind == "identity") return BoundSecret{IdentitySecret(), {}, {}};
  if (kind == "constant") {
    return BoundSecret{ConstantSecret(), {SecretValue{"*", Rational(0)}}, {}};
  }
  if (kind == "fraction" && j.contains("category")) {
    const auto& c = j.at("category");
    const auto& cats = sp.space.categories();
    int idx = -1;
    if (c.is_number_integer()) {
      idx = c.get<int>();
    } else if (c.is_string()) {
      auto it = std::find(cats.begin(), cats.end(), c.get<std::string>());
      if (it != cats.end()) idx = static_cast<int>(it - cats.begin());
    }
    if (idx < 0 || idx >= static_cast<int>(cats.size())) {
      return absl::NotFoundError(
          absl::StrCat("secret category ", c.dump(), " not in the space"));
    }
    if (j.contains("buckets") || j.contains("bucket_width")) {
      return Bad("use a target predicate to quantize a fraction secret");
    }
    return BoundSecret{FractionSecret(idx), FractionSecretValues(tau), idx};
  }
  absl::StatusOr<SecretSpec> spec = SecretSpec::FromJson(j);
  if (!spec.ok()) return spec.status();
  return BindSecret(*spec, sp.columns, sp.combos, tau);
}

absl::StatusOr<std::unique_ptr<Mechanism>> MechanismFromJson(
    const nlohmann::json& j, const BuildContext& ctx) {
  if (!j.is_object() || !j.contains("type")) {
    return Bad("mechanism config needs a type");
  }
  const std::string type = j.at("type").get<std::string>();
  const ParameterSpace& space = ctx.space->space;
  if (type == "rr") {
    bool inf = false;
    absl::StatusOr<Rational> e = ExpEpsilon(j, &inf);
    if (!e.ok()) return e.status();
    if (inf) {
      return std::make_unique<RRMechanism>(
          RRMechanism::Infinite(space, ctx.support));
    }
    absl::StatusOr<RRMechanism> rr = RRMechanism::Create(space, *e, ctx.support);
    if (!rr.ok()) return rr.status();
    return std::make_unique<RRMechanism>(*std::move(rr));
  }
  if (type == "qm") {
    absl::StatusOr<int64_t> I = Interval(j);
    if (!I.ok()) return I.status();
    if (ctx.secret == nullptr || ctx.secret->values.empty()) {
      return absl::FailedPreconditionError(
          "qm needs an ordered secret with a finite value list");
    }
    absl::StatusOr<QMMechanism> qm =
        QMMechanism::Create(space, ctx.secret->fn, ctx.secret->values, *I,
                            ctx.secret->single_category, ctx.support);
    if (!qm.ok()) return qm.status();
    return std::make_unique<QMMechanism>(*std::move(qm));
  }
  if (type == "maxl") {
    absl::StatusOr<std::vector<CategoricalParam>> inputs =
        space.Members(ctx.cap);
    if (!inputs.ok()) return inputs.status();
    std::vector<CategoricalParam> cands;
    if (j.contains("candidates")) {
      const auto& c = j.at("candidates");
      if (c == "all") {
        cands = *inputs;
      } else if (c.is_array()) {
        for (const auto& x : c) {
          absl::StatusOr<CategoricalParam> p = ParamFromJson(x, space.tau());
          if (!p.ok()) return p.status();
          cands.push_back(*std::move(p));
        }
      } else {
        return Bad("maxl candidates must be \"all\" or a list");
      }
    } else {
      absl::StatusOr<int64_t> I = Interval(j);
      if (!I.ok()) return I.status();
      if (ctx.secret == nullptr || !ctx.secret->single_category) {
        return absl::FailedPreconditionError(
            "maxl with an interval needs the fraction-of-one-category secret");
      }
      Rng rng = Rng(ctx.seed).Split(static_cast<uint64_t>(*I));
      cands = BinCandidates(space.d(), space.tau(),
                            *ctx.secret->single_category, *I, rng);
    }
    absl::StatusOr<MappedMechanism> m =
        BuildMaxL(space.categories(), *inputs, cands);
    if (!m.ok()) return m.status();
    return std::make_unique<MappedMechanism>(*std::move(m));
  }
  if (type == "identity") return std::make_unique<IdentityMechanism>(space);
  if (type == "constant") {
    if (!j.contains("point")) return Bad("constant needs a point");
    absl::StatusOr<CategoricalParam> p = ParamFromJson(j.at("point"), space.tau());
    if (!p.ok()) return p.status();
    if (!space.Contains(*p)) return Bad("constant point is outside the space");
    return std::make_unique<ConstantMechanism>(space, *std::move(p));
  }
  return Bad(absl::StrCat("mechanism type '", type,
                          "' is not a sampler (or is unknown)"));
}

absl::StatusOr<PolicyMatrix> PolicyFromConfig(
    const nlohmann::json& j, const BuildContext& ctx,
    const std::vector<CategoricalParam>& inputs) {
  if (!j.is_object() || !j.contains("type")) {
    return Bad("mechanism config needs a type");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "policy") {
    absl::StatusOr<PolicyMatrix> p = PolicyMatrix::FromJson(j.at("policy"));
    if (!p.ok()) return p.status();
    if (p->inputs() != Labels(inputs)) {
      return Bad("inline policy inputs differ from the space");
    }
    return p;
  }
  if (type == "compose") {
    if (j.contains("adaptive")) {
      const auto& a = j.at("adaptive");
      absl::StatusOr<PolicyMatrix> first =
          PolicyFromConfig(a.at("first"), ctx, inputs);
      if (!first.ok()) return first.status();
      std::vector<PolicyMatrix> stages;
      for (const auto& s : a.at("stages")) {
        absl::StatusOr<PolicyMatrix> p = PolicyFromConfig(s, ctx, inputs);
        if (!p.ok()) return p.status();
        stages.push_back(*std::move(p));
      }
      return ComposeAdaptive(*first, stages);
    }
    if (!j.contains("stages") || !j.at("stages").is_array()) {
      return Bad("compose needs a stages list");
    }
    std::vector<PolicyMatrix> parts;
    for (const auto& s : j.at("stages")) {
      absl::StatusOr<PolicyMatrix> p = PolicyFromConfig(s, ctx, inputs);
      if (!p.ok()) return p.status();
      parts.push_back(*std::move(p));
    }
    return ComposeAll(parts);
  }
  if (type == "postprocess") {
    if (!j.contains("mechanism") || !j.contains("kernel")) {
      return Bad("postprocess needs mechanism and kernel");
    }
    absl::StatusOr<PolicyMatrix> m =
        PolicyFromConfig(j.at("mechanism"), ctx, inputs);
    if (!m.ok()) return m.status();
    absl::StatusOr<PolicyMatrix> k = PolicyMatrix::FromJson(j.at("kernel"));
    if (!k.ok()) return k.status();
    return Postprocess(*m, *k);
  }
  absl::StatusOr<std::unique_ptr<Mechanism>> mech = MechanismFromJson(j, ctx);
  if (!mech.ok()) return mech.status();
  return Materialize(**mech, inputs, ctx.cap);
}

}  // namespace statleak
