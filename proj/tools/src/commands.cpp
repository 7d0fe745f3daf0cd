// Copyright 2026 The toruslab Authors
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

#include "toruslab/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "toruslab/errors.hpp"
#include "toruslab/parallel.hpp"

namespace toruslab::cli {

namespace {

bool is_assoc_kind(InstanceKind k) {
  return k == InstanceKind::assoc_only || k == InstanceKind::quantum_plus || k == InstanceKind::involution ||
         k == InstanceKind::extension;
}

CheckReport error_report(const std::string& name, const std::string& what) {
  CheckReport r;
  r.name = name;
  r.fail(Witness{what, {}, {}});
  return r;
}

CheckReport centrality(const Instance& inst, std::int64_t b) {
  if (inst.clifford) {
    const Subgroup expected = clifford_central_grading_group(*inst.clifford);
    CheckReport r = center_check(*inst.view, expected, b);
    r.detail = "center grading group " + expected.to_string() + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
  }
  const Cocycle& c = *inst.cocycle;
  const Subgroup gamma = central_grading_group(c);
  if (inst.albert_triple && !(gamma == inst.albert_triple->gamma())) {
    CheckReport r;
    r.fail(Witness{"central grading group " + gamma.to_string() + " differs from Gamma " +
                       inst.albert_triple->gamma().to_string(),
                   {}, {}});
    return r;
  }
  CheckReport r = centrality_cross_check(c, gamma, b);
  r.detail = "Gamma = " + gamma.to_string() + (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

// Strong type is only asserted for Albert tori; elsewhere zero products are findings.
CheckReport strong_type(const Instance& inst, std::int64_t b) {
  CheckReport r = strong_type_check(*inst.view, b);
  if (r.verdict == Verdict::fail && inst.spec.kind != InstanceKind::albert) {
    r.verdict = Verdict::informative;
    r.witness.reset();
  }
  return r;
}

std::vector<GroupElement> domain_window(const Cocycle& c, std::int64_t b) {
  std::vector<GroupElement> out;
  for (auto& p : window_points(c.rank(), b))
    if (c.domain().contains(p)) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

struct Row {
  GroupElement sigma;
  GroupElement tau;
  Scalar coeff;
};

std::vector<Row> table_rows(const Instance& inst, std::int64_t b) {
  std::vector<Row> rows;
  if (inst.view && !is_assoc_kind(inst.spec.kind)) {
    for (auto& s : structure_constants(*inst.view, b)) rows.push_back({s.sigma, s.tau, s.coeff});
  } else {
    const Cocycle& c = *inst.cocycle;
    const auto pts = domain_window(c, b);
    for (const auto& s : pts)
      for (const auto& t : pts)
        if (c.defined(s, t)) rows.push_back({s, t, c(s, t)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(x.sigma, x.tau) < std::tie(y.sigma, y.tau);
  });
  return rows;
}

json witness_json(const Witness& w) {
  json els = json::array();
  for (const auto& g : w.elements) els.push_back(to_json(g));
  return {{"description", w.description}, {"elements", els}, {"values", w.values}};
}

json header(const InstanceSpec& spec, std::int64_t window) {
  return {{"name", spec.name},
          {"kind", std::string(to_string(spec.kind))},
          {"n", spec.rank},
          {"field", field_text(spec.field)},
          {"window", window}};
}

std::string product_name(const Instance& inst) {
  return inst.view && !is_assoc_kind(inst.spec.kind) ? "jordan" : "assoc";
}

}  // namespace

void apply(const Overrides& o, InstanceSpec& spec) {
  if (o.window) spec.plan.window = *o.window;
  if (o.seed) spec.plan.seed = *o.seed;
  if (o.checks) spec.plan.checks = *o.checks;
}

std::vector<std::string> applicable_checks(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::assoc_only:
      return {"cocycle", "centrality"};
    case InstanceKind::quantum_plus:
      return {"cocycle", "centrality", "jordan", "axioms", "strong-type"};
    case InstanceKind::involution:
    case InstanceKind::extension:
      return {"cocycle", "centrality", "involution", "jordan", "axioms", "strong-type"};
    case InstanceKind::clifford:
      return {"triple", "centrality", "jordan", "axioms", "strong-type"};
    case InstanceKind::albert:
      return {"triple", "cocycle", "centrality", "jordan", "axioms", "strong-type", "grading", "cubic"};
  }
  return {};
}

json report_json(const CheckReport& r) {
  json j{{"verdict", std::string(to_string(r.verdict))},
         {"checked", r.checked},
         {"sampled", r.sampled},
         {"detail", r.detail}};
  if (r.witness) j["witness"] = witness_json(*r.witness);
  if (!r.observations.empty()) {
    json obs = json::array();
    for (const auto& w : r.observations) obs.push_back(witness_json(w));
    j["observations"] = obs;
  }
  return j;
}

std::vector<CheckReport> run_checks(const Instance& inst, const VerifyPlan& plan) {
  const std::int64_t b = plan.window;
  std::vector<std::pair<std::string, std::function<std::vector<CheckReport>()>>> jobs;
  auto one = [](CheckReport r) { return std::vector<CheckReport>{std::move(r)}; };
  for (const auto& name : applicable_checks(inst.spec.kind)) {
    if (!plan.checks.empty() && !plan.checks.contains(name)) continue;
    std::function<std::vector<CheckReport>()> fn;
    if (name == "triple") {
      fn = [&, one] {
        return one(inst.clifford ? validate_triple(*inst.clifford) : validate_albert_triple(*inst.albert_triple));
      };
    } else if (name == "cocycle") {
      fn = [&, one] { return one(cocycle_identity_check(*inst.cocycle, b, plan.cocycle_samples, plan.seed)); };
    } else if (name == "centrality") {
      fn = [&, one] { return one(centrality(inst, b)); };
    } else if (name == "involution") {
      fn = [&, one] { return one(involution_check(*inst.theta, b)); };
    } else if (name == "jordan") {
      fn = [&, one] { return one(jordan_identity_check(*inst.view, b, plan.jordan_samples, plan.seed)); };
    } else if (name == "axioms") {
      fn = [&] {
        TorusAxiomsReport a = torus_axioms_check(*inst.view, b);
        a.t1.name = "axioms.t1";
        a.t2.name = "axioms.t2";
        a.t3.name = "axioms.t3";
        return std::vector<CheckReport>{a.t1, a.t2, a.t3};
      };
    } else if (name == "strong-type") {
      fn = [&, one] { return one(strong_type(inst, b)); };
    } else if (name == "grading") {
      fn = [&, one] { return one(albert_grading_check(*inst.albert, b)); };
    } else if (name == "cubic") {
      fn = [&, one] { return one(cubic_norm_check(*inst.albert, plan.cubic_samples, plan.seed)); };
    }
    jobs.emplace_back(name, std::move(fn));
  }
  std::vector<std::vector<CheckReport>> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    try {
      results[i] = jobs[i].second();
    } catch (const std::exception& e) {
      results[i] = {error_report(jobs[i].first, std::string("error: ") + e.what())};
    }
    if (jobs[i].first != "axioms")
      for (auto& r : results[i]) r.name = jobs[i].first;
  });
  std::vector<CheckReport> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), [](const CheckReport& x, const CheckReport& y) { return x.name < y.name; });
  return out;
}

VerifyOutcome verify(const InstanceSpec& spec) {
  VerifyOutcome out;
  std::optional<Instance> inst;
  try {
    inst = build_instance(spec);
    out.constructed = true;
  } catch (const std::exception& e) {
    out.checks.push_back(error_report("construction", e.what()));
  }
  if (inst) out.checks = run_checks(*inst, spec.plan);
  out.passed = std::all_of(out.checks.begin(), out.checks.end(), [](const CheckReport& r) { return r.passed(); });

  json rep = header(spec, spec.plan.window);
  rep["seed"] = spec.plan.seed;
  rep["passed"] = out.passed;
  json checks = json::object();
  for (const auto& r : out.checks) checks[r.name] = report_json(r);
  rep["checks"] = checks;
  json props = json::object();
  for (const auto& r : out.checks)
    if (r.name == "strong-type") props["strong_type"] = r.observations.empty();
  if (!props.empty()) rep["properties"] = props;
  rep["echo"] = spec.echo;
  out.report = std::move(rep);

  std::ostringstream s;
  s << (spec.name.empty() ? std::string("instance") : spec.name) << " (" << to_string(spec.kind)
    << ", n=" << spec.rank << ", " << field_text(spec.field) << ", window " << spec.plan.window << ")\n";
  for (const auto& r : out.checks) {
    s << "  " << r.name << ": " << to_string(r.verdict) << " (checked " << r.checked << (r.sampled ? ", sampled" : "")
      << ")";
    if (r.witness) {
      s << " witness: " << r.witness->description;
      for (const auto& g : r.witness->elements) s << ' ' << g;
    } else if (!r.observations.empty()) {
      s << ' ' << r.observations.size() << " observations";
    }
    s << '\n';
  }
  s << "result: " << (out.passed ? "PASS" : "FAIL") << '\n';
  out.summary = s.str();
  return out;
}

json build_descriptor(const Instance& inst) {
  const std::int64_t b = inst.spec.plan.window;
  json d = header(inst.spec, b);
  d["type_tag"] = inst.view ? inst.view->type_tag() : std::string("assoc");
  std::vector<GroupElement> support;
  if (inst.view)
    support = inst.view->support_window(b);
  else
    support = domain_window(*inst.cocycle, b);
  json sup = json::array();
  for (const auto& g : support) sup.push_back(to_json(g));
  d["support"] = sup;
  if (inst.clifford) {
    d["central_grading_group"] = to_json(clifford_central_grading_group(*inst.clifford));
    json reps = json::array();
    for (const auto& r : inst.clifford->reps()) reps.push_back(to_json(r));
    d["coset_reps"] = reps;
  } else {
    d["central_grading_group"] = to_json(central_grading_group(*inst.cocycle));
  }
  if (inst.albert_triple) {
    std::set<GroupElement> cosets;
    for (const auto& g : support) cosets.insert(inst.albert_triple->gamma().reduce(g));
    d["gamma_cosets"] = cosets.size();
  }
  const json t = table_json(inst);
  d["product"] = t["product"];
  d["structure_constants"] = t["rows"];
  d["echo"] = inst.spec.echo;
  return d;
}

json table_json(const Instance& inst) {
  const std::int64_t b = inst.spec.plan.window;
  json t = header(inst.spec, b);
  t["product"] = product_name(inst);
  json rows = json::array();
  for (const auto& r : table_rows(inst, b))
    rows.push_back({{"sigma", to_json(r.sigma)},
                    {"tau", to_json(r.tau)},
                    {"sum", to_json(r.sigma + r.tau)},
                    {"coeff", scalar_text(r.coeff)}});
  t["rows"] = rows;
  return t;
}

std::string table(const Instance& inst, TableFormat format) {
  if (format == TableFormat::json) return table_json(inst).dump(2) + "\n";
  const std::size_t n = inst.spec.rank;
  std::ostringstream s;
  for (const char* part : {"sigma", "tau"})
    for (std::size_t i = 1; i <= n; ++i) s << part << '_' << i << ',';
  s << "coeff\n";
  for (const auto& r : table_rows(inst, inst.spec.plan.window)) {
    for (const GroupElement* g : {&r.sigma, &r.tau})
      for (std::size_t i = 0; i < n; ++i) s << (*g)[i] << ',';
    s << scalar_text(r.coeff) << '\n';
  }
  return s.str();
}

}  // namespace toruslab::cli
