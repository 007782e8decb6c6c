// Copyright 2026 The ftk Authors
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

// ftk: validate, convert and compare finite fibrous-preorder instances.
//
// Exit codes: 0 success or true, 1 a checked property is false, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ftk/demos.hpp"
#include "ftk/ftk.hpp"

namespace {

using ftk::io::json;
using ftk::io::Instance;
namespace io = ftk::io;

Instance load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ftk::Error(ftk::ErrorCode::Usage, "cannot open '" + path + "'", {{"file", path}});
  std::ostringstream buf;
  buf << in.rdbuf();
  return io::parse_instance(buf.str());
}

json with_kind(const Instance& inst, json body) {
  body["kind"] = io::kind_name(inst);
  return body;
}

// ------------------------------------------------------------------ validate

struct Outcome {
  json body;
  bool ok;
};

Outcome report_outcome(const ftk::Report& r) { return {io::to_json(r), r.passed()}; }

/// Turns a thrown property failure into a report entry.
template <class F>
void catch_into(ftk::Report& r, const std::string& condition, F&& f) {
  try {
    f();
  } catch (const ftk::Error& e) {
    if (ftk::is_input_error(e.code())) throw;
    ftk::Witness w = e.witness();
    w.insert(w.begin(), {"code", std::string(ftk::to_string(e.code()))});
    r.add(condition, std::move(w));
  }
}

Outcome validate_module(const ftk::ModuleData& md) {
  ftk::Report r = ftk::validate_action(md);
  for (auto& v : r.violations) v.condition = "action:" + v.condition;
  const auto a = ftk::check_module_condition(md, ftk::ModuleKind::A);
  const auto b = ftk::check_module_condition(md, ftk::ModuleKind::B);
  r.append(a.report);
  r.append(b.report);
  json extra = json::object();
  if (b.passed()) {
    catch_into(r, "topology", [&] {
      const ftk::FiniteTopology t = ftk::module_topology(md);
      r.append(ftk::check_module_condition(md, ftk::ModuleKind::C, &t).report);
      extra["opens"] = io::opens_json(t);
    });
  }
  if (a.passed()) {
    const auto m = ftk::check_moreover_clause(md);
    extra["moreover"] = {{"closure", m.closure}, {"cartesian", m.cartesian}, {"agree", m.agree()}};
  }
  json body = io::to_json(r);
  for (auto& [k, v] : extra.items()) body[k] = v;
  return {body, r.passed()};
}

Outcome validate(const Instance& inst) {
  return std::visit(
      [](const auto& v) -> Outcome {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ftk::FibrousPreorder>) {
          return report_outcome(ftk::to_report(v, ftk::check_axioms(v)));
        } else if constexpr (std::is_same_v<T, ftk::Preorder>) {
          return report_outcome(ftk::check_preorder(v));
        } else if constexpr (std::is_same_v<T, ftk::FiniteTopology>) {
          return report_outcome(ftk::validate_topology(v));
        } else if constexpr (std::is_same_v<T, ftk::NeighborhoodMap> || std::is_same_v<T, ftk::TernaryRep> ||
                             std::is_same_v<T, ftk::EtaGammaRep>) {
          return report_outcome(ftk::validate_rep(v));
        } else if constexpr (std::is_same_v<T, io::PseudometricInstance>) {
          ftk::Report r = ftk::check_pseudometric(v.metric);
          if (r.passed()) catch_into(r, "cap", [&] { ftk::from_pseudometric(v.metric, v.cap); });
          return report_outcome(r);
        } else if constexpr (std::is_same_v<T, io::GroupSubsetInstance>) {
          ftk::Report r = ftk::check_group_subset(v.group, v.b, v.alpha, v.magma);
          if (r.passed()) catch_into(r, "axioms", [&] { ftk::from_group_subset(v.group, v.b, v.alpha, v.magma); });
          return report_outcome(r);
        } else if constexpr (std::is_same_v<T, io::LaxMaltsevInstance>) {
          ftk::Report r = ftk::check_lax_axioms(v.data.op);
          r.append(ftk::check_linking(v.data, v.form));
          return report_outcome(r);
        } else if constexpr (std::is_same_v<T, ftk::FiniteMonoid>) {
          json body = io::to_json(ftk::Report{});
          body["commutative"] = v.is_commutative();
          return {body, true};
        } else if constexpr (std::is_same_v<T, ftk::SnFamily>) {
          return report_outcome(ftk::check_sn_family(v));
        } else if constexpr (std::is_same_v<T, ftk::ModuleData>) {
          return validate_module(v);
        } else if constexpr (std::is_same_v<T, ftk::IntervalSet>) {
          const auto s = ftk::sorgenfrey_is_open(v);
          ftk::Report r;
          if (!s.open) r.add("sorgenfrey-open", {{"x", ftk::format_rational(*s.witness)}});
          json body = io::to_json(r);
          body["normalized"] = io::to_json(v)["intervals"];
          return {body, r.passed()};
        } else {
          ftk::Report r = ftk::to_report(v.src, ftk::check_axioms(v.src));
          for (auto& x : r.violations) x.condition = "src:" + x.condition;
          ftk::Report d = ftk::to_report(v.dst, ftk::check_axioms(v.dst));
          for (auto& x : d.violations) x.condition = "dst:" + x.condition;
          r.append(d);
          return report_outcome(r);
        }
      },
      inst);
}

// ------------------------------------------------------------------ topology

ftk::FibrousPreorder to_fp(const Instance& inst);

ftk::FiniteTopology topology_of(const Instance& inst) {
  if (auto* t = std::get_if<ftk::FiniteTopology>(&inst)) {
    const ftk::Report r = ftk::validate_topology(*t);
    if (!r.passed())
      throw ftk::Error(ftk::ErrorCode::InvalidTopology, "family is not a topology (" + r.violations.front().condition + ")",
                       r.violations.front().witness);
    return *t;
  }
  if (auto* p = std::get_if<ftk::Preorder>(&inst)) {
    ftk::require_preorder(*p);
    return ftk::alexandrov_topology(*p);
  }
  if (auto* md = std::get_if<ftk::ModuleData>(&inst)) return ftk::module_topology(*md);
  return ftk::induced_topology(to_fp(inst));
}

// ------------------------------------------------------------------- convert

ftk::FibrousPreorder to_fp(const Instance& inst) {
  return std::visit(
      [&](const auto& v) -> ftk::FibrousPreorder {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ftk::FibrousPreorder>) {
          ftk::require_axioms(v);
          return v;
        } else if constexpr (std::is_same_v<T, ftk::Preorder>) {
          return ftk::from_preorder(v);
        } else if constexpr (std::is_same_v<T, ftk::NeighborhoodMap>) {
          ftk::require_valid(v);
          return ftk::etagamma_to_fp(ftk::ternary_to_etagamma(ftk::nmap_to_ternary(v)));
        } else if constexpr (std::is_same_v<T, ftk::TernaryRep>) {
          ftk::require_valid(v);
          return ftk::etagamma_to_fp(ftk::ternary_to_etagamma(v));
        } else if constexpr (std::is_same_v<T, ftk::EtaGammaRep>) {
          ftk::require_valid(v);
          return ftk::etagamma_to_fp(v);
        } else if constexpr (std::is_same_v<T, io::PseudometricInstance>) {
          return ftk::from_pseudometric(v.metric, v.cap);
        } else if constexpr (std::is_same_v<T, io::GroupSubsetInstance>) {
          return ftk::from_group_subset(v.group, v.b, v.alpha, v.magma);
        } else if constexpr (std::is_same_v<T, io::LaxMaltsevInstance>) {
          return ftk::from_lax_maltsev(v.data);
        } else if constexpr (std::is_same_v<T, ftk::SnFamily>) {
          return ftk::fp_from_sn_family(v);
        } else if constexpr (std::is_same_v<T, ftk::ModuleData>) {
          const auto a = ftk::check_module_condition(v, ftk::ModuleKind::A);
          if (!a.passed())
            throw ftk::Error(ftk::ErrorCode::ConditionFailed, "condition " + a.report.violations.front().condition + " fails",
                             a.report.violations.front().witness);
          ftk::FibrousPreorder fp = ftk::module_fibrous_preorder(v, *a.alpha);
          ftk::require_axioms(fp);
          return fp;
        } else {
          throw ftk::Error(ftk::ErrorCode::Usage,
                           std::string("kind '") + io::kind_name(inst) + "' does not determine a fibrous preorder",
                           {{"kind", io::kind_name(inst)}});
        }
      },
      inst);
}

json convert(const Instance& inst, const std::string& target) {
  // Step forward along fp → nmap → ternary → etagamma → fp until the target
  // kind is reached.
  if (auto* nm = std::get_if<ftk::NeighborhoodMap>(&inst); nm && target == "nmap") {
    ftk::require_valid(*nm);
    return io::to_json(*nm);
  }
  if (auto* tr = std::get_if<ftk::TernaryRep>(&inst); tr && target == "ternary") {
    ftk::require_valid(*tr);
    return io::to_json(*tr);
  }
  if (auto* eg = std::get_if<ftk::EtaGammaRep>(&inst); eg && target == "etagamma") {
    ftk::require_valid(*eg);
    return io::to_json(*eg);
  }
  std::optional<ftk::NeighborhoodMap> nm;
  std::optional<ftk::TernaryRep> tr;
  if (auto* p = std::get_if<ftk::NeighborhoodMap>(&inst)) {
    ftk::require_valid(*p);
    nm = *p;
  } else if (auto* q = std::get_if<ftk::TernaryRep>(&inst)) {
    ftk::require_valid(*q);
    tr = *q;
  } else if (auto* e = std::get_if<ftk::EtaGammaRep>(&inst)) {
    ftk::require_valid(*e);
    const ftk::FibrousPreorder fp = ftk::etagamma_to_fp(*e);
    if (target == "fp") return io::to_json(fp);
    nm = ftk::fp_to_nmap(fp);
  } else {
    const ftk::FibrousPreorder fp = to_fp(inst);
    if (target == "fp") return io::to_json(fp);
    nm = ftk::fp_to_nmap(fp);
  }
  if (!tr) {
    if (target == "nmap") return io::to_json(*nm);
    tr = ftk::nmap_to_ternary(*nm);
  }
  if (target == "ternary") return io::to_json(*tr);
  const ftk::EtaGammaRep eg = ftk::ternary_to_etagamma(*tr);
  if (target == "etagamma") return io::to_json(eg);
  return io::to_json(ftk::etagamma_to_fp(eg));
}

// -------------------------------------------------------------------- output

int emit(const json& body, int code) {
  std::cout << io::dump(body);
  return code;
}

int emit_error(const ftk::Error& e) {
  std::cout << io::dump(io::to_json(e));
  return ftk::is_input_error(e.code()) ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite fibrous preorders, their representations and induced topologies"};
  app.require_subcommand(1);

  std::string file, other, target;
  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms or conditions of an instance");
  validate_cmd->add_option("file", file, "Instance file")->required();

  auto* topology_cmd = app.add_subcommand("topology", "Print the topology an instance induces");
  topology_cmd->add_option("file", file, "Instance file")->required();

  auto* convert_cmd = app.add_subcommand("convert", "Convert to another representation");
  convert_cmd->add_option("--to", target, "Target kind")
      ->required()
      ->check(CLI::IsMember({"nmap", "ternary", "etagamma", "fp"}));
  convert_cmd->add_option("file", file, "Instance file")->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Compare the topologies of two instances");
  equiv_cmd->add_option("left", file, "First instance")->required();
  equiv_cmd->add_option("right", other, "Second instance")->required();

  auto* morphism_cmd = app.add_subcommand("morphism", "Check a morphism bundle");
  morphism_cmd->add_option("file", file, "Bundle file")->required();

  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "Run a worked example");
  demo_cmd->add_option("name", demo_name, "Example name")->required()->check(CLI::IsMember(ftk::demo::names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(ftk::Error(ftk::ErrorCode::Usage, e.what()));
  }

  try {
    if (*validate_cmd) {
      const Instance inst = load(file);
      const Outcome o = validate(inst);
      return emit(with_kind(inst, o.body), o.ok ? 0 : 1);
    }
    if (*topology_cmd) return emit(io::to_json(topology_of(load(file))), 0);
    if (*convert_cmd) return emit(convert(load(file), target), 0);
    if (*equiv_cmd) {
      const ftk::FiniteTopology a = topology_of(load(file));
      const ftk::FiniteTopology b = topology_of(load(other));
      json body = {{"equal", a == b}};
      if (!(a.carrier() == b.carrier())) {
        body["witness"] = {{"carrier", "differs"}};
      } else if (!(a == b)) {
        for (ftk::Subset u : a.opens())
          if (!b.contains(u) && !body.contains("witness"))
            body["witness"] = {{"only_in", "left"}, {"set", io::subset_json(a.carrier(), u)}};
        for (ftk::Subset u : b.opens())
          if (!a.contains(u) && !body.contains("witness"))
            body["witness"] = {{"only_in", "right"}, {"set", io::subset_json(b.carrier(), u)}};
      }
      return emit(body, a == b ? 0 : 1);
    }
    if (*morphism_cmd) {
      const Instance inst = load(file);
      const auto* b = std::get_if<io::MorphismBundle>(&inst);
      if (b == nullptr)
        throw ftk::Error(ftk::ErrorCode::Usage, "morphism expects a bundle of kind 'morphism'",
                         {{"kind", io::kind_name(inst)}});
      const auto r = ftk::check_morphism(b->src, b->dst, b->f, b->g);
      json body = {{"holds", r.holds}};
      if (r.witness) {
        const auto [x, y, j] = *r.witness;
        body["witness"] = {{"x", b->src.carrier().label(x)},
                           {"y", b->src.carrier().label(y)},
                           {"j", b->src.magma().label(j)}};
      }
      return emit(body, r.holds ? 0 : 1);
    }
    if (*demo_cmd) {
      const json out = ftk::demo::run(demo_name);
      return emit(out, out["passed"].get<bool>() ? 0 : 1);
    }
  } catch (const ftk::Error& e) {
    return emit_error(e);
  }
  return 2;
}
