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

#include "toruslab/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "toruslab/errors.hpp"

namespace toruslab::cli {

namespace {

std::string ptr(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& require(const json& obj, const std::string& key, const std::string& at) {
  if (!obj.contains(key)) throw ConfigError(ptr(at, key), "missing required field");
  return obj.at(key);
}

void require_object(const json& j, const std::string& at) {
  if (!j.is_object()) throw ConfigError(at, "expected an object");
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& at) {
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == k;
    if (!ok) throw ConfigError(ptr(at, k), "unknown field");
  }
}

std::int64_t parse_int(const json& j, const std::string& at) {
  if (!j.is_number_integer()) throw ConfigError(at, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t parse_count(const json& j, const std::string& at) {
  const auto v = parse_int(j, at);
  if (v < 0) throw ConfigError(at, "expected a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

GroupElement parse_element(const json& j, std::size_t n, const std::string& at) {
  if (!j.is_array()) throw ConfigError(at, "expected an integer vector of length " + std::to_string(n));
  if (j.size() != n)
    throw ConfigError(at, "expected length " + std::to_string(n) + ", got " + std::to_string(j.size()));
  GroupElement g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = parse_int(j[i], ptr(at, i));
  return g;
}

std::vector<GroupElement> parse_rows(const json& j, std::size_t n, const std::string& at) {
  if (!j.is_array()) throw ConfigError(at, "expected an array of integer rows");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_element(j[i], n, ptr(at, i)));
  return out;
}

std::vector<std::vector<Scalar>> parse_scalar_matrix(const json& j, std::size_t n, const FieldDescriptor& f,
                                                     const std::string& at) {
  if (!j.is_array() || j.size() != n) throw ConfigError(at, "expected a " + std::to_string(n) + "x" +
                                                                std::to_string(n) + " matrix of scalars");
  std::vector<std::vector<Scalar>> m;
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    const std::string rp = ptr(at, i);
    if (!row.is_array() || row.size() != n)
      throw ConfigError(rp, "expected a row of " + std::to_string(n) + " scalars");
    std::vector<Scalar> r;
    for (std::size_t k = 0; k < n; ++k) r.push_back(parse_scalar_json(row[k], f, ptr(rp, k)));
    m.push_back(std::move(r));
  }
  return m;
}

FieldDescriptor parse_field_value(const json& j, const std::string& at) {
  if (j.is_object()) {
    reject_unknown(j, {"d"}, at);
    const json& d = require(j, "d", at);
    try {
      return FieldDescriptor::quadratic(parse_rational(d.is_string() ? d.get<std::string>() : d.dump()));
    } catch (const Error& e) {
      throw ConfigError(ptr(at, "d"), e.what());
    }
  }
  if (!j.is_string()) throw ConfigError(at, "expected \"Q\", \"Q(w)\", \"Q(sqrt(d))\" or {\"d\": ...}");
  const auto s = j.get<std::string>();
  if (s == "Q") return FieldDescriptor::rational();
  if (s == "Q(w)") return FieldDescriptor::cyclotomic3();
  const std::string pre = "Q(sqrt(", post = "))";
  if (s.size() > pre.size() + post.size() && s.starts_with(pre) && s.ends_with(post)) {
    try {
      return FieldDescriptor::quadratic(parse_rational(s.substr(pre.size(), s.size() - pre.size() - post.size())));
    } catch (const Error& e) {
      throw ConfigError(at, e.what());
    }
  }
  throw ConfigError(at, "unknown field \"" + s + "\"");
}

// Scans scalar-bearing strings for the generator symbols.
void scan_symbols(const json& j, const std::string& at, bool& saw_w, std::optional<std::string>& saw_s) {
  static const std::set<std::string> skip = {"name", "kind", "field", "verify", "type", "from"};
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (!skip.contains(k)) scan_symbols(v, ptr(at, k), saw_w, saw_s);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) scan_symbols(j[i], ptr(at, i), saw_w, saw_s);
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find('w') != std::string::npos) saw_w = true;
    if (s.find('s') != std::string::npos && !saw_s) saw_s = at;
  }
}

InstanceKind parse_kind(const json& j, const std::string& at) {
  if (!j.is_string()) throw ConfigError(at, "expected a string");
  const auto s = j.get<std::string>();
  for (auto k : {InstanceKind::assoc_only, InstanceKind::quantum_plus, InstanceKind::involution,
                 InstanceKind::extension, InstanceKind::clifford, InstanceKind::albert})
    if (to_string(k) == s) return k;
  throw ConfigError(at, "unknown kind \"" + s +
                            "\" (expected assoc-only, quantum-plus, involution, extension, clifford or albert)");
}

std::map<PairKey, Scalar> parse_table_rows(const json& rows, std::size_t n, const FieldDescriptor& f,
                                           const std::string& at) {
  if (!rows.is_array()) throw ConfigError(at, "expected an array of {sigma, tau, coeff} rows");
  std::map<PairKey, Scalar> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rp = ptr(at, i);
    const json& r = rows[i];
    require_object(r, rp);
    reject_unknown(r, {"sigma", "tau", "sum", "coeff"}, rp);
    GroupElement s = parse_element(require(r, "sigma", rp), n, ptr(rp, "sigma"));
    GroupElement t = parse_element(require(r, "tau", rp), n, ptr(rp, "tau"));
    if (r.contains("sum") && parse_element(r["sum"], n, ptr(rp, "sum")) != s + t)
      throw ConfigError(ptr(rp, "sum"), "sum is not sigma + tau");
    Scalar c = parse_scalar_json(require(r, "coeff", rp), f, ptr(rp, "coeff"));
    if (!out.emplace(PairKey{s, t}, c).second) throw ConfigError(rp, "duplicate (sigma, tau) row");
  }
  return out;
}

CocycleSpec parse_cocycle(const json& j, std::size_t n, const FieldDescriptor& f, const std::filesystem::path& base,
                          const std::string& at) {
  require_object(j, at);
  reject_unknown(j, {"type", "q", "b", "rows", "from", "perturb"}, at);
  CocycleSpec c;
  const json& type = require(j, "type", at);
  const std::string tp = ptr(at, "type");
  if (!type.is_string()) throw ConfigError(tp, "expected a string");
  const auto t = type.get<std::string>();
  if (t == "quantum") {
    c.type = CocycleSpec::Type::quantum;
    c.matrix = parse_scalar_matrix(require(j, "q", at), n, f, ptr(at, "q"));
  } else if (t == "bicharacter") {
    c.type = CocycleSpec::Type::bicharacter;
    c.matrix = parse_scalar_matrix(require(j, "b", at), n, f, ptr(at, "b"));
  } else if (t == "trivial") {
    c.type = CocycleSpec::Type::trivial;
  } else if (t == "table") {
    c.type = CocycleSpec::Type::table;
    if (j.contains("rows") == j.contains("from"))
      throw ConfigError(at, "table cocycle needs exactly one of \"rows\" or \"from\"");
    if (j.contains("rows")) {
      c.table = parse_table_rows(j["rows"], n, f, ptr(at, "rows"));
    } else {
      const json& from = j["from"];
      if (!from.is_string()) throw ConfigError(ptr(at, "from"), "expected a path");
      std::filesystem::path p = from.get<std::string>();
      if (p.is_relative()) p = base / p;
      std::ifstream in(p);
      if (!in) throw ConfigError(ptr(at, "from"), "cannot open " + p.string());
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ConfigError(ptr(at, "from"), std::string("invalid JSON in table file: ") + e.what());
      }
      if (!doc.is_object() || !doc.contains("rows"))
        throw ConfigError(ptr(at, "from"), "table file has no \"rows\" array");
      if (doc.contains("product") && doc["product"] != "assoc")
        throw ConfigError(ptr(at, "from"), "only associative (lambda) tables can be re-ingested");
      if (doc.contains("n") && doc["n"] != n)
        throw ConfigError(ptr(at, "from"), "table file rank differs from n");
      try {
        c.table = parse_table_rows(doc["rows"], n, f, "/rows");
      } catch (const ConfigError& e) {
        throw ConfigError(ptr(at, "from"), std::string("in table file: ") + e.what());
      }
    }
  } else {
    throw ConfigError(tp, "unknown cocycle type \"" + t + "\" (expected quantum, bicharacter, trivial or table)");
  }
  if (j.contains("perturb")) {
    const std::string pp = ptr(at, "perturb");
    const json& p = j["perturb"];
    require_object(p, pp);
    reject_unknown(p, {"sigma", "tau", "factor"}, pp);
    c.perturb = CocycleSpec::Perturbation{parse_element(require(p, "sigma", pp), n, ptr(pp, "sigma")),
                                          parse_element(require(p, "tau", pp), n, ptr(pp, "tau")),
                                          parse_scalar_json(require(p, "factor", pp), f, ptr(pp, "factor"))};
    if (c.perturb->factor.is_zero()) throw ConfigError(ptr(pp, "factor"), "factor must be nonzero");
  }
  return c;
}

QuadraticSpec parse_quadratic(const json& j, std::size_t n, const std::string& at) {
  require_object(j, at);
  reject_unknown(j, {"basis", "pairs"}, at);
  QuadraticSpec q;
  auto bit = [](const json& v, const std::string& p) {
    const auto x = parse_int(v, p);
    if (x != 0 && x != 1) throw ConfigError(p, "expected 0 or 1");
    return static_cast<int>(x);
  };
  const std::string bp = ptr(at, "basis");
  const json& b = require(j, "basis", at);
  if (!b.is_array() || b.size() != n) throw ConfigError(bp, "expected " + std::to_string(n) + " bits q(e_i)");
  for (std::size_t i = 0; i < n; ++i) q.basis.push_back(bit(b[i], ptr(bp, i)));
  q.pairs.assign(n, std::vector<int>(n, 0));
  if (j.contains("pairs")) {
    const std::string pp = ptr(at, "pairs");
    const json& m = j["pairs"];
    if (!m.is_array() || m.size() != n) throw ConfigError(pp, "expected an n x n bit matrix of q(e_i + e_j)");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string rp = ptr(pp, i);
      if (!m[i].is_array() || m[i].size() != n) throw ConfigError(rp, "expected a row of " + std::to_string(n) + " bits");
      for (std::size_t k = 0; k < n; ++k) q.pairs[i][k] = bit(m[i][k], ptr(rp, k));
    }
  } else {
    // beta_q vanishes on basis pairs: q(e_i + e_j) = q(e_i) + q(e_j).
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) q.pairs[i][k] = (q.basis[i] + q.basis[k]) % 2;
  }
  return q;
}

CliffordSpec parse_clifford(const json& j, std::size_t n, const FieldDescriptor& f) {
  CliffordSpec c;
  c.gamma = parse_rows(require(j, "gamma", ""), n, "/gamma");
  c.reps = parse_rows(require(j, "reps", ""), n, "/reps");
  if (c.reps.empty() || !c.reps.front().is_zero()) throw ConfigError("/reps/0", "the first rep must be 0");
  const json& a = require(j, "a", "");
  const std::size_t need = c.reps.size() - 1;
  if (a.is_array()) {
    if (a.size() != need) throw ConfigError("/a", "expected one a_eps per nonzero rep (" + std::to_string(need) + ")");
    for (std::size_t k = 0; k < need; ++k) c.a.push_back(parse_scalar_json(a[k], f, ptr("/a", k)));
  } else if (a.is_object()) {
    for (const auto& [key, v] : a.items()) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(key);
      } catch (const std::exception&) {
        throw ConfigError(ptr("/a", key), "keys are rep indices 1.." + std::to_string(need));
      }
      if (idx == 0 || idx > need || std::to_string(idx) != key)
        throw ConfigError(ptr("/a", key), "keys are rep indices 1.." + std::to_string(need));
    }
    for (std::size_t k = 1; k <= need; ++k) {
      const std::string key = std::to_string(k);
      if (!a.contains(key)) throw ConfigError(ptr("/a", key), "missing a_eps for rep " + c.reps[k].to_string());
      c.a.push_back(parse_scalar_json(a[key], f, ptr("/a", key)));
    }
  } else {
    throw ConfigError("/a", "expected an array or an object keyed by rep index");
  }
  return c;
}

AlbertSpec parse_albert(const json& j, std::size_t n, const FieldDescriptor& f) {
  AlbertSpec a;
  a.gamma = parse_rows(require(j, "gamma", ""), n, "/gamma");
  a.delta = parse_rows(require(j, "delta", ""), n, "/delta");
  const json& s = require(j, "sigma", "");
  if (!s.is_array() || s.size() != 3) throw ConfigError("/sigma", "expected three rows sigma_1, sigma_2, sigma_3");
  for (std::size_t i = 0; i < 3; ++i) a.sigma[i] = parse_element(s[i], n, ptr("/sigma", i));
  if (j.contains("u3")) {
    const json& u = j["u3"];
    require_object(u, "/u3");
    reject_unknown(u, {"degree", "coeff"}, "/u3");
    if (u.contains("degree")) a.u3_degree = parse_element(u["degree"], n, "/u3/degree");
    if (u.contains("coeff")) a.u3_coeff = parse_scalar_json(u["coeff"], f, "/u3/coeff");
  }
  return a;
}

VerifyPlan parse_plan(const json& j, InstanceKind kind) {
  VerifyPlan p;
  p.window = kind == InstanceKind::albert ? 1 : 2;
  if (kind == InstanceKind::albert) p.jordan_samples = 600;
  if (!j.contains("verify")) return p;
  const json& v = j["verify"];
  require_object(v, "/verify");
  reject_unknown(v, {"window", "checks", "jordan_samples", "cubic_samples", "cocycle_samples", "seed"}, "/verify");
  if (v.contains("window")) {
    p.window = parse_int(v["window"], "/verify/window");
    if (p.window < 1) throw ConfigError("/verify/window", "window must be at least 1");
  }
  if (v.contains("checks")) {
    const json& c = v["checks"];
    if (!c.is_array()) throw ConfigError("/verify/checks", "expected an array of check names");
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::string cp = ptr("/verify/checks", i);
      if (!c[i].is_string()) throw ConfigError(cp, "expected a check name");
      const auto name = c[i].get<std::string>();
      const auto& known = known_checks();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw ConfigError(cp, "unknown check \"" + name + "\"");
      p.checks.insert(name);
    }
  }
  if (v.contains("jordan_samples")) p.jordan_samples = parse_count(v["jordan_samples"], "/verify/jordan_samples");
  if (v.contains("cubic_samples")) p.cubic_samples = parse_count(v["cubic_samples"], "/verify/cubic_samples");
  if (v.contains("cocycle_samples")) p.cocycle_samples = parse_count(v["cocycle_samples"], "/verify/cocycle_samples");
  if (v.contains("seed")) p.seed = parse_count(v["seed"], "/verify/seed");
  return p;
}

}  // namespace

std::string_view to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::assoc_only:
      return "assoc-only";
    case InstanceKind::quantum_plus:
      return "quantum-plus";
    case InstanceKind::involution:
      return "involution";
    case InstanceKind::extension:
      return "extension";
    case InstanceKind::clifford:
      return "clifford";
    case InstanceKind::albert:
      return "albert";
  }
  return "?";
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"triple",  "cocycle", "centrality",  "involution", "jordan",
                                                 "axioms",  "strong-type", "grading", "cubic"};
  return names;
}

Scalar parse_scalar_json(const json& j, const FieldDescriptor& f, const std::string& pointer) {
  try {
    if (j.is_number_integer()) return Scalar(f, Rational(j.get<long>()));
    if (j.is_string()) return parse_scalar(j.get<std::string>(), f);
    if (j.is_object()) {
      reject_unknown(j, {"a", "b"}, pointer);
      auto part = [&](const char* key) {
        if (!j.contains(key)) return Rational(0);
        const json& v = j[key];
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_string()) return parse_rational(v.get<std::string>());
        throw ConfigError(ptr(pointer, key), "expected a rational");
      };
      const Rational b = part("b");
      if (sgn(b) != 0 && !f.is_extension())
        throw ConfigError(ptr(pointer, "b"), "generator part needs an extension field");
      return Scalar(f, part("a"), b);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(pointer, e.what());
  }
  throw ConfigError(pointer, "expected a scalar (string, integer or {\"a\", \"b\"})");
}

InstanceSpec parse_config(const json& j, const std::filesystem::path& base_dir) {
  require_object(j, "");
  reject_unknown(j,
                 {"name", "kind", "n", "field", "cocycle", "quadratic", "gamma", "reps", "a", "delta", "sigma", "u3",
                  "verify"},
                 "");
  InstanceSpec s;
  s.echo = j;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ConfigError("/name", "expected a string");
    s.name = j["name"].get<std::string>();
  }
  s.kind = parse_kind(require(j, "kind", ""), "/kind");
  const auto n = parse_int(require(j, "n", ""), "/n");
  if (n < 1 || n > 8) throw ConfigError("/n", "rank must lie in 1..8");
  s.rank = static_cast<std::size_t>(n);

  if (j.contains("field")) {
    s.field = parse_field_value(j["field"], "/field");
    if (s.kind == InstanceKind::albert && !(s.field == FieldDescriptor::cyclotomic3()))
      throw ConfigError("/field", "albert instances live over Q(w)");
  } else if (s.kind == InstanceKind::albert) {
    s.field = FieldDescriptor::cyclotomic3();
  } else {
    bool saw_w = false;
    std::optional<std::string> saw_s;
    scan_symbols(j, "", saw_w, saw_s);
    if (saw_s) throw ConfigError(*saw_s, "scalar uses s; declare \"field\": \"Q(sqrt(d))\"");
    s.field = saw_w ? FieldDescriptor::cyclotomic3() : FieldDescriptor::rational();
  }

  const bool assoc_kind = s.kind == InstanceKind::assoc_only || s.kind == InstanceKind::quantum_plus ||
                          s.kind == InstanceKind::involution || s.kind == InstanceKind::extension;
  auto forbid = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (j.contains(k)) throw ConfigError(ptr("", k), "not used by kind " + std::string(to_string(s.kind)));
  };
  if (assoc_kind) {
    forbid({"gamma", "reps", "a", "delta", "sigma", "u3"});
    s.cocycle = parse_cocycle(require(j, "cocycle", ""), s.rank, s.field, base_dir, "/cocycle");
    if (s.kind == InstanceKind::involution) {
      s.quadratic = parse_quadratic(require(j, "quadratic", ""), s.rank, "/quadratic");
    } else {
      forbid({"quadratic"});
    }
    if (s.kind == InstanceKind::extension && !s.field.is_extension())
      throw ConfigError("/field", "extension instances need a quadratic extension field");
  } else if (s.kind == InstanceKind::clifford) {
    forbid({"cocycle", "quadratic", "delta", "sigma", "u3"});
    s.clifford = parse_clifford(j, s.rank, s.field);
  } else {
    forbid({"cocycle", "quadratic", "reps", "a"});
    s.albert = parse_albert(j, s.rank, s.field);
  }
  s.plan = parse_plan(j, s.kind);
  return s;
}

InstanceSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j, path.parent_path());
}

Instance build_instance(const InstanceSpec& spec) {
  Instance inst;
  inst.spec = spec;
  const std::size_t n = spec.rank;
  if (spec.cocycle) {
    const CocycleSpec& c = *spec.cocycle;
    switch (c.type) {
      case CocycleSpec::Type::quantum:
        inst.cocycle = Cocycle::quantum(QuantumMatrix(c.matrix));
        break;
      case CocycleSpec::Type::bicharacter:
        inst.cocycle = Cocycle::bicharacter(c.matrix);
        break;
      case CocycleSpec::Type::trivial:
        inst.cocycle = Cocycle::trivial(n, spec.field);
        break;
      case CocycleSpec::Type::table:
        inst.cocycle = Cocycle::table(n, spec.field, c.table);
        break;
    }
    if (c.perturb) inst.cocycle = Cocycle::perturbed(inst.cocycle, c.perturb->sigma, c.perturb->tau, c.perturb->factor);
    switch (spec.kind) {
      case InstanceKind::assoc_only:
        break;
      case InstanceKind::quantum_plus:
        inst.view = build_hermitian_type(PlusTypeSpec{inst.cocycle});
        break;
      case InstanceKind::involution: {
        const QuadraticSpec& q = *spec.quadratic;
        std::vector<std::vector<int>> upper(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = i + 1; k < n; ++k) upper[i][k] = q.pairs[i][k];
        inst.view = build_hermitian_type(
            InvolutionTypeSpec{inst.cocycle, QuadraticMapF2::canonical(q.basis, std::move(upper))});
        inst.theta = inst.view->involution();
        break;
      }
      case InstanceKind::extension:
        inst.view = build_hermitian_type(ExtensionTypeSpec{inst.cocycle});
        inst.theta = inst.view->involution();
        break;
      default:
        break;
    }
  } else if (spec.clifford) {
    const CliffordSpec& c = *spec.clifford;
    auto t = std::make_shared<const CliffordTriple>(Subgroup(n, c.gamma), c.reps, c.a);
    const CheckReport r = validate_triple(*t);
    if (!r.passed()) {
      std::string msg = "invalid clifford triple: " + r.witness->description;
      for (const auto& g : r.witness->elements) msg += " " + g.to_string();
      throw ConstructionError(msg);
    }
    inst.clifford = t;
    inst.view = JordanView::clifford(t);
  } else if (spec.albert) {
    const AlbertSpec& a = *spec.albert;
    inst.albert_triple = std::make_shared<const AlbertTriple>(Subgroup(n, a.delta), Subgroup(n, a.gamma), a.sigma);
    inst.deg3 = Deg3Torus::build(inst.albert_triple);
    inst.cocycle = inst.deg3->handle();
    AssocElement u3 = a.u3_degree ? inst.deg3->x(*a.u3_degree) : inst.deg3->u3();
    if (a.u3_coeff) u3 = u3.scaled(*a.u3_coeff);
    inst.albert = AlbertTorus::first_tits(inst.deg3, u3);
    inst.view = JordanView::albert(inst.albert);
  }
  return inst;
}

json to_json(const GroupElement& g) { return json(g.coords()); }

json to_json(const Subgroup& h) {
  json basis = json::array();
  for (const auto& b : h.basis()) basis.push_back(to_json(b));
  json out{{"basis", basis}};
  const QuotientDescription q = h.quotient();
  out["quotient"] = {{"free_rank", q.free_rank}, {"torsion", q.torsion}};
  return out;
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

std::string field_text(const FieldDescriptor& f) { return f.name(); }

}  // namespace toruslab::cli
