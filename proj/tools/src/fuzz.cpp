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

#include "toruslab/cli/fuzz.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <stdexcept>

#include "toruslab/cli/commands.hpp"
#include "toruslab/errors.hpp"

namespace toruslab::cli {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(xs.size()) - 1))];
}

json row(const GroupElement& g) { return to_json(g); }

json rows(const std::vector<GroupElement>& gs) {
  json out = json::array();
  for (const auto& g : gs) out.push_back(row(g));
  return out;
}

// Drops group elements and subgroups from a message, keeping its shape.
std::string normalize(const std::string& msg) {
  static const std::regex element(R"(\(-?\d+(,-?\d+)*\))"), subgroup("<[^>]*>");
  return std::regex_replace(std::regex_replace(msg, element, "()"), subgroup, "<>");
}

std::string clause_set(const CheckReport& r) {
  std::set<std::string> clauses;
  if (r.witness) clauses.insert(r.witness->description);
  for (const auto& w : r.observations) clauses.insert(w.description);
  std::string out;
  for (const auto& c : clauses) out += (out.empty() ? "" : "|") + c;
  return out;
}

// ------------------------------------------------------------------- cocycle

json quantum_matrix_json(Rng& rng, std::size_t n) {
  static const std::vector<std::string> entries = {"1", "-1", "w", "w^2", "2", "1/3"};
  const auto f = FieldDescriptor::cyclotomic3();
  std::vector<std::vector<std::string>> m(n, std::vector<std::string>(n, "1"));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar s = parse_scalar(pick(rng, entries), f);
      m[i][j] = s.to_string();
      m[j][i] = s.inverse().to_string();
    }
  return m;
}

json cocycle_valid(Rng& rng) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
  return {{"kind", "assoc-only"},
          {"n", n},
          {"field", "Q(w)"},
          {"cocycle", {{"type", "quantum"}, {"q", quantum_matrix_json(rng, n)}}},
          {"verify", {{"window", 1}, {"checks", {"cocycle", "centrality"}}}}};
}

GroupElement nonzero_point(Rng& rng, std::size_t n) {
  GroupElement g(n);
  while (g.is_zero())
    for (std::size_t i = 0; i < n; ++i) g[i] = uniform(rng, -1, 1);
  return g;
}

json cocycle_mutant(Rng& rng, std::size_t, std::string& mutation) {
  json c = cocycle_valid(rng);
  const std::size_t n = c["n"];
  static const std::vector<std::string> factors = {"2", "-1", "w", "1/3"};
  const GroupElement s = nonzero_point(rng, n), t = nonzero_point(rng, n);
  const std::string f = pick(rng, factors);
  c["cocycle"]["perturb"] = {{"sigma", row(s)}, {"tau", row(t)}, {"factor", f}};
  mutation = "lambda" + s.to_string() + t.to_string() + " *= " + f;
  return c;
}

// ------------------------------------------------------------------ clifford

struct CliffordDraw {
  std::size_t n = 0;
  std::vector<GroupElement> gamma;
  std::vector<GroupElement> reps;  // reps[0] = 0
  std::vector<std::string> a;
};

CliffordDraw clifford_draw(Rng& rng) {
  CliffordDraw d;
  d.n = static_cast<std::size_t>(uniform(rng, 2, 3));
  const std::size_t n = d.n;
  for (std::size_t i = 0; i < n; ++i) d.gamma.push_back(2 * GroupElement::unit(n, i));
  const auto extra = uniform(rng, 0, static_cast<std::int64_t>(n) - 1);
  for (std::int64_t k = 0; k < extra; ++k) {
    GroupElement v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = uniform(rng, 0, 1);
    d.gamma.push_back(v);
  }
  const Subgroup gamma(n, d.gamma);
  std::vector<GroupElement> classes;
  for (std::uint64_t mask = 1; mask < (1u << n); ++mask) {
    GroupElement v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    if (gamma.contains(v)) continue;
    bool fresh = true;
    for (const auto& c : classes) fresh = fresh && !gamma.congruent(c, v);
    if (fresh) classes.push_back(v);
  }
  std::shuffle(classes.begin(), classes.end(), rng);
  std::vector<GroupElement> chosen;
  auto index_with = [&](const std::vector<GroupElement>& more) {
    std::vector<GroupElement> g = d.gamma;
    g.insert(g.end(), more.begin(), more.end());
    return Subgroup(n, g).index().value_or(0);
  };
  for (const auto& c : classes) {
    auto trial = chosen;
    trial.push_back(c);
    // Take every class that enlarges the span, then extra classes at random.
    if (index_with(chosen) > 1 ? index_with(trial) < index_with(chosen) : uniform(rng, 0, 1) == 1)
      chosen = std::move(trial);
  }
  static const std::vector<std::string> avals = {"1", "-1", "2", "-1/2", "1/3", "3"};
  d.reps.push_back(GroupElement::zero(n));
  for (const auto& c : chosen) {
    GroupElement shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = 2 * uniform(rng, -1, 1);
    d.reps.push_back(c + shift);
    d.a.push_back(pick(rng, avals));
  }
  return d;
}

json clifford_json(const CliffordDraw& d) {
  return {{"kind", "clifford"},
          {"n", d.n},
          {"gamma", rows(d.gamma)},
          {"reps", rows(d.reps)},
          {"a", d.a},
          {"verify",
           {{"window", 1},
            {"checks", {"triple", "centrality", "jordan", "axioms", "strong-type"}},
            {"jordan_samples", 150}}}};
}

json clifford_valid(Rng& rng) { return clifford_json(clifford_draw(rng)); }

json clifford_mutant(Rng& rng, std::size_t k, std::string& mutation) {
  CliffordDraw d = clifford_draw(rng);
  switch (k % 3) {
    case 0: {
      d.gamma.clear();
      d.gamma.push_back(4 * GroupElement::unit(d.n, 0));
      for (std::size_t i = 1; i < d.n; ++i) d.gamma.push_back(2 * GroupElement::unit(d.n, i));
      mutation = "2G not inside Gamma";
      break;
    }
    case 1:
      d.reps.resize(2);
      d.a.resize(1);
      if (Subgroup(d.n, [&] {
            auto g = d.gamma;
            g.push_back(d.reps[1]);
            return g;
          }())
              .index() == std::optional<std::uint64_t>(1)) {
        d.reps.resize(1);
        d.a.clear();
      }
      mutation = "S does not generate G";
      break;
    default:
      d.a[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(d.a.size()) - 1))] = "0";
      mutation = "a_eps = 0";
      break;
  }
  return clifford_json(d);
}

// -------------------------------------------------------------------- albert

struct AlbertDraw {
  std::vector<GroupElement> delta, gamma;
  std::array<GroupElement, 3> sigma;
  std::optional<GroupElement> u3_degree;
  std::string u3_coeff = "1";
};

std::vector<std::vector<std::int64_t>> unimodular(Rng& rng, std::size_t n) {
  std::vector<std::vector<std::int64_t>> u(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    const std::int64_t c = uniform(rng, 0, 1) == 1 ? 1 : -1;
    for (std::size_t col = 0; col < n; ++col) u[i][col] += c * u[j][col];
  }
  return u;
}

GroupElement mul(const std::vector<std::vector<std::int64_t>>& u, const GroupElement& v) {
  GroupElement out(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (std::size_t j = 0; j < v.rank(); ++j) out[i] += u[i][j] * v[j];
  return out;
}

AlbertDraw albert_draw(Rng& rng) {
  const std::size_t n = 4;
  const auto u = unimodular(rng, n);
  const std::array<std::int64_t, 4> dd{1, 1, 3, 1}, gd{3, 3, 3, 1};
  AlbertDraw d;
  for (std::size_t i = 0; i < n; ++i) {
    d.delta.push_back(mul(u, dd[i] * GroupElement::unit(n, i)));
    d.gamma.push_back(mul(u, gd[i] * GroupElement::unit(n, i)));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    GroupElement g(n);
    for (std::size_t k = 0; k < n; ++k) g += uniform(rng, -1, 1) * d.gamma[k];
    d.sigma[i] = mul(u, GroupElement::unit(n, i)) + g;
  }
  static const std::vector<std::string> coeffs = {"1", "-1", "2", "w", "1/2"};
  d.u3_coeff = pick(rng, coeffs);
  return d;
}

json albert_json(const AlbertDraw& d) {
  json j{{"kind", "albert"},
         {"n", 4},
         {"delta", rows(d.delta)},
         {"gamma", rows(d.gamma)},
         {"sigma", rows({d.sigma[0], d.sigma[1], d.sigma[2]})},
         {"verify",
          {{"window", 1},
           {"checks", {"triple", "cocycle", "centrality", "jordan", "cubic"}},
           {"cocycle_samples", 3000},
           {"jordan_samples", 40},
           {"cubic_samples", 2}}}};
  json u3{{"coeff", d.u3_coeff}};
  if (d.u3_degree) u3["degree"] = row(*d.u3_degree);
  j["u3"] = u3;
  return j;
}

json albert_valid(Rng& rng) { return albert_json(albert_draw(rng)); }

json albert_mutant(Rng& rng, std::size_t k, std::string& mutation) {
  AlbertDraw d = albert_draw(rng);
  switch (k % 4) {
    case 0: {
      // Gamma' = Gamma with its third generator tripled; 3 sigma_3 drops out.
      d.gamma[2] = 3 * d.gamma[2];
      mutation = "3G not inside Gamma";
      break;
    }
    case 1:
      d.sigma[2] = d.sigma[0] + d.sigma[1];
      mutation = "sigma_3 dependent on sigma_1, sigma_2";
      break;
    case 2:
      d.u3_degree = 3 * d.sigma[2] + d.sigma[0];
      mutation = "u3 not central";
      break;
    default:
      d.delta = d.gamma;
      mutation = "Delta = Gamma";
      break;
  }
  return albert_json(d);
}

// ---------------------------------------------------------------- involution

struct InvolutionDraw {
  std::size_t n = 0;
  std::vector<std::vector<int>> q;  // q_ij in {1, -1}
  std::vector<int> basis;
  std::vector<std::vector<int>> pairs;
};

// (-1)^{beta_q(e_i, e_j)} = q_ij with beta_q(e_i, e_j) = q(e_i) + q(e_j) + q(e_i + e_j) mod 2.
bool compatible(const InvolutionDraw& d, std::size_t i, std::size_t j) {
  const int beta = (d.basis[i] + d.basis[j] + d.pairs[i][j]) % 2;
  return (beta == 1) == (d.q[i][j] == -1);
}

std::optional<std::pair<std::size_t, std::size_t>> first_incompatible(const InvolutionDraw& d) {
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = i + 1; j < d.n; ++j)
      if (!compatible(d, i, j)) return std::pair{i, j};
  return std::nullopt;
}

InvolutionDraw involution_draw(Rng& rng, bool force_compatible) {
  InvolutionDraw d;
  d.n = static_cast<std::size_t>(uniform(rng, 2, 3));
  const std::size_t n = d.n;
  d.q.assign(n, std::vector<int>(n, 1));
  d.pairs.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) d.basis.push_back(static_cast<int>(uniform(rng, 0, 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      d.q[i][j] = d.q[j][i] = uniform(rng, 0, 1) == 1 ? -1 : 1;
      int p = static_cast<int>(uniform(rng, 0, 1));
      if (force_compatible) p = (d.basis[i] + d.basis[j] + (d.q[i][j] == -1 ? 1 : 0)) % 2;
      d.pairs[i][j] = d.pairs[j][i] = p;
    }
  for (std::size_t i = 0; i < n; ++i) d.pairs[i][i] = 0;
  return d;
}

json involution_json(const InvolutionDraw& d) {
  json q = json::array();
  for (const auto& r : d.q) {
    json jr = json::array();
    for (int v : r) jr.push_back(std::to_string(v));
    q.push_back(jr);
  }
  return {{"kind", "involution"},
          {"n", d.n},
          {"cocycle", {{"type", "quantum"}, {"q", q}}},
          {"quadratic", {{"basis", d.basis}, {"pairs", d.pairs}}},
          {"verify",
           {{"window", 1}, {"checks", {"cocycle", "involution", "jordan"}}, {"jordan_samples", 150}}}};
}

// ---------------------------------------------------------------- shrinking

void collect_leaves(const json& j, const json::json_pointer& at, std::vector<json::json_pointer>& out) {
  static const std::set<std::string> skip = {"name", "kind", "n", "field", "verify", "type", "from"};
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (!skip.contains(k)) collect_leaves(v, at / k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) collect_leaves(j[i], at / i, out);
  } else if (j.is_number_integer() || j.is_string()) {
    out.push_back(at);
  }
}

std::vector<json> candidates(const json& c) {
  std::vector<json> out;
  if (c.contains("verify") && c["verify"].contains("window") && c["verify"]["window"].get<std::int64_t>() > 1) {
    json d = c;
    d["verify"]["window"] = c["verify"]["window"].get<std::int64_t>() - 1;
    out.push_back(std::move(d));
  }
  std::vector<json::json_pointer> leaves;
  collect_leaves(c, json::json_pointer(), leaves);
  for (const auto& p : leaves) {
    const json& v = c.at(p);
    if (v.is_number_integer()) {
      const auto x = v.get<std::int64_t>();
      if (x == 0) continue;
      std::vector<std::int64_t> ys;
      for (std::int64_t y : {std::int64_t{0}, x / 2, x - (x > 0 ? 1 : -1)})
        if (y != x && std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
      for (std::int64_t y : ys) {
        json d = c;
        d[p] = y;
        out.push_back(std::move(d));
      }
    } else if (v.get<std::string>() != "1") {
      json d = c;
      d[p] = "1";
      out.push_back(std::move(d));
    }
  }
  return out;
}

FuzzCase run_case(std::string label, json config, bool expected_valid, std::string mutation) {
  FuzzCase fc;
  fc.label = std::move(label);
  fc.mutation = std::move(mutation);
  fc.expected_valid = expected_valid;
  fc.config = std::move(config);
  fc.signature = failure_signature(fc.config);
  fc.ok = expected_valid ? fc.signature.empty() : !fc.signature.empty();
  return fc;
}

}  // namespace

const std::vector<std::string>& fuzz_families() {
  static const std::vector<std::string> f = {"cocycle", "clifford", "albert", "involution"};
  return f;
}

std::string failure_signature(const json& config) {
  InstanceSpec spec;
  try {
    spec = parse_config(config);
  } catch (const ConfigError& e) {
    return "config:" + normalize(e.what());
  }
  // Triple defects are compared clause by clause so shrinking cannot trade
  // one defect for several.
  try {
    const std::size_t n = spec.rank;
    if (spec.clifford) {
      const CliffordTriple t(Subgroup(n, spec.clifford->gamma), spec.clifford->reps, spec.clifford->a);
      const CheckReport r = validate_triple(t);
      if (!r.passed()) return "triple:" + clause_set(r);
    } else if (spec.albert) {
      const AlbertTriple t(Subgroup(n, spec.albert->delta), Subgroup(n, spec.albert->gamma), spec.albert->sigma);
      const CheckReport r = validate_albert_triple(t);
      if (!r.passed()) return "triple:" + clause_set(r);
    }
  } catch (const std::exception& e) {
    return "construction:" + normalize(e.what());
  }
  const VerifyOutcome v = verify(spec);
  if (v.passed) return "";
  std::string sig;
  for (const auto& r : v.checks) {
    if (r.passed()) continue;
    if (!sig.empty()) sig += ",";
    sig += r.name;
    if (r.witness) sig += ":" + normalize(r.witness->description);
  }
  return sig;
}

std::pair<json, std::size_t> shrink(const json& config, const std::string& signature, std::size_t budget) {
  json cur = config;
  std::size_t steps = 0, evals = 0;
  bool progress = true;
  while (progress && evals < budget) {
    progress = false;
    for (auto& cand : candidates(cur)) {
      if (evals++ >= budget) break;
      if (failure_signature(cand) == signature) {
        cur = std::move(cand);
        ++steps;
        progress = true;
        break;
      }
    }
  }
  return {cur, steps};
}

bool FuzzResult::passed() const {
  auto ok = [](const FuzzCase& c) { return c.ok; };
  return std::all_of(valid.begin(), valid.end(), ok) && std::all_of(adversarial.begin(), adversarial.end(), ok);
}

json FuzzResult::report() const {
  json failures = json::array();
  std::size_t clean = 0, caught = 0;
  for (const auto& c : valid) {
    if (c.ok) {
      ++clean;
      continue;
    }
    failures.push_back({{"label", c.label}, {"signature", c.signature}, {"detail", c.detail}, {"shrunk", c.shrunk}});
  }
  json adv = json::array();
  for (const auto& c : adversarial) {
    caught += c.ok ? 1 : 0;
    adv.push_back({{"label", c.label},
                   {"mutation", c.mutation},
                   {"caught", c.ok},
                   {"signature", c.signature},
                   {"detail", c.detail},
                   {"shrink_steps", c.shrink_steps},
                   {"shrunk", c.shrunk}});
  }
  return {{"family", family},
          {"passed", passed()},
          {"valid", {{"run", valid.size()}, {"clean", clean}, {"failures", failures}}},
          {"adversarial", {{"run", adversarial.size()}, {"caught", caught}, {"cases", adv}}}};
}

FuzzResult run_fuzz(const FuzzOptions& o) {
  const auto& fams = fuzz_families();
  const auto it = std::find(fams.begin(), fams.end(), o.family);
  if (it == fams.end()) throw std::invalid_argument("unknown fuzz family \"" + o.family + "\"");
  const auto family_id = static_cast<std::uint64_t>(it - fams.begin());
  FuzzResult res;
  res.family = o.family;

  for (std::size_t k = 0; k < o.trials; ++k) {
    Rng rng(o.seed * 1'000'003 + family_id * 7919 + k);
    const std::string label = o.family + "-valid-" + std::to_string(k);
    FuzzCase fc;
    if (o.family == "involution") {
      // Half the draws are compatible by construction; the oracle decides the rest.
      const InvolutionDraw d = involution_draw(rng, uniform(rng, 0, 1) == 1);
      const auto bad = first_incompatible(d);
      fc = run_case(label, involution_json(d), !bad.has_value(), "");
      if (bad) {
        fc.ok = false;
        try {
          build_instance(parse_config(fc.config));
          fc.detail = "oracle rejects the pair but construction succeeded";
        } catch (const CompatibilityError&) {
          fc.ok = true;
          fc.detail = "rejected as the oracle predicts";
        }
      } else if (!fc.ok) {
        fc.detail = "oracle accepts the pair but it failed: " + fc.signature;
      }
    } else {
      json cfg = o.family == "cocycle" ? cocycle_valid(rng) : o.family == "clifford" ? clifford_valid(rng) : albert_valid(rng);
      fc = run_case(label, std::move(cfg), true, "");
    }
    if (!fc.ok && !fc.signature.empty()) std::tie(fc.shrunk, fc.shrink_steps) = shrink(fc.config, fc.signature);
    res.valid.push_back(std::move(fc));
  }

  for (std::size_t k = 0; k < o.adversarial; ++k) {
    Rng rng(o.seed * 1'000'003 + family_id * 7919 + 500'000 + k);
    const std::string label = o.family + "-adversarial-" + std::to_string(k);
    std::string mutation;
    json cfg;
    std::optional<std::pair<std::size_t, std::size_t>> flipped;
    if (o.family == "involution") {
      InvolutionDraw d = involution_draw(rng, true);
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(d.n) - 2));
      const auto j = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(i) + 1, static_cast<std::int64_t>(d.n) - 1));
      d.pairs[i][j] ^= 1;
      d.pairs[j][i] = d.pairs[i][j];
      flipped = std::pair{i, j};
      mutation = "flip q(e_" + std::to_string(i + 1) + " + e_" + std::to_string(j + 1) + ")";
      cfg = involution_json(d);
    } else if (o.family == "cocycle") {
      cfg = cocycle_mutant(rng, k, mutation);
    } else if (o.family == "clifford") {
      cfg = clifford_mutant(rng, k, mutation);
    } else {
      cfg = albert_mutant(rng, k, mutation);
    }
    FuzzCase fc = run_case(label, std::move(cfg), false, mutation);
    if (flipped && fc.ok) {
      const std::size_t n = fc.config["n"];
      const GroupElement ei = GroupElement::unit(n, flipped->first), ej = GroupElement::unit(n, flipped->second);
      try {
        build_instance(parse_config(fc.config));
        fc.ok = false;
        fc.detail = "construction succeeded";
      } catch (const CompatibilityError& e) {
        const bool match = (e.first == ei && e.second == ej) || (e.first == ej && e.second == ei);
        fc.ok = match;
        fc.detail = "witness " + e.first.to_string() + ", " + e.second.to_string() + (match ? "" : " (expected " + ei.to_string() + ", " + ej.to_string() + ")");
      }
    }
    if (!fc.signature.empty()) std::tie(fc.shrunk, fc.shrink_steps) = shrink(fc.config, fc.signature);
    res.adversarial.push_back(std::move(fc));
  }

  if (o.out) {
    std::filesystem::create_directories(*o.out);
    auto write = [&](const FuzzCase& c) {
      std::ofstream(*o.out / (c.label + ".json")) << c.shrunk.dump(2) << "\n";
    };
    for (const auto& c : res.valid)
      if (!c.ok && !c.shrunk.is_null()) write(c);
    for (const auto& c : res.adversarial)
      if (!c.shrunk.is_null()) write(c);
  }
  return res;
}

}  // namespace toruslab::cli
