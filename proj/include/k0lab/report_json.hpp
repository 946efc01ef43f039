// Copyright 2026 The k0lab Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"  // vendored nlohmann/json

#include "k0lab/classify.hpp"
#include "k0lab/k0.hpp"

namespace k0lab {

using Json = nlohmann::ordered_json;

/// Flat, serialization-ready view of a K0Report plus its classification.
/// Big integers are carried as decimal strings.
struct ReportRecord {
  std::uint64_t n = 0;
  std::vector<std::string> generators;
  std::vector<std::uint64_t> weights;
  std::string group;  // "cyclic" | "dihedral" | "table" | "graph"
  std::optional<std::uint64_t> total_weight;
  bool pis = false;
  std::string det;
  int det_sign = 0;
  std::vector<std::string> snf_diag;
  std::optional<FinAbGroup> k0;
  std::optional<std::string> identity_order;
  std::string method;
  std::string classification;  // "L(1,m)" | "M_d(L(1,m))" | "M_n(K[x,x^-1])" | "L(K_n^(2))" | "unclassified"
  std::string classification_display;
  std::optional<std::string> class_d, class_m, class_n;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

inline const char* classification_tag(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::leavitt: return "L(1,m)";
    case AlgebraKind::mat_leavitt: return "M_d(L(1,m))";
    case AlgebraKind::mat_laurent: return "M_n(K[x,x^-1])";
    case AlgebraKind::complete_two_loops: return "L(K_n^(2))";
    case AlgebraKind::unclassified: return "unclassified";
  }
  return "unclassified";
}

inline ReportRecord make_record(const K0Report& r, const AlgebraClass& cls) {
  ReportRecord rec;
  if (r.spec) {
    rec.n = r.spec->parameter;
    rec.generators = r.spec->gen_names;
    rec.weights = r.spec->weights;
    rec.group = to_string(r.spec->kind);
  } else {
    rec.n = r.vertex_count;
    rec.group = "graph";
  }
  rec.total_weight = r.total_weight;
  rec.pis = r.pis;
  rec.det = r.det_value.str();
  rec.det_sign = r.det_sign;
  for (const auto& s : r.snf_diag) rec.snf_diag.push_back(s.str());
  rec.k0 = r.k0;
  if (r.identity_order) rec.identity_order = r.identity_order->to_string();
  rec.method = to_string(r.method);
  rec.classification = classification_tag(cls.kind);
  rec.classification_display = cls.display();
  switch (cls.kind) {
    case AlgebraKind::leavitt: rec.class_m = cls.m.str(); break;
    case AlgebraKind::mat_leavitt:
      rec.class_d = cls.d.str();
      rec.class_m = cls.m.str();
      break;
    case AlgebraKind::mat_laurent:
    case AlgebraKind::complete_two_loops: rec.class_n = cls.n.str(); break;
    case AlgebraKind::unclassified: break;
  }
  return rec;
}

inline Json to_json(const ReportRecord& rec) {
  Json j;
  j["n"] = rec.n;
  j["generators"] = rec.generators;
  j["weights"] = rec.weights;
  j["group"] = rec.group;
  j["W"] = rec.total_weight ? Json(*rec.total_weight) : Json(nullptr);
  j["pis"] = rec.pis;
  j["det"] = rec.det;
  j["det_sign"] = rec.det_sign;
  j["snf_diag"] = rec.snf_diag;
  if (rec.k0) {
    Json k;
    std::vector<std::string> torsion;
    for (const auto& t : rec.k0->torsion()) torsion.push_back(t.str());
    k["torsion"] = torsion;
    k["free_rank"] = rec.k0->free_rank();
    k["display"] = rec.k0->display();
    j["k0"] = k;
  } else {
    j["k0"] = nullptr;
  }
  j["identity_order"] = rec.identity_order ? Json(*rec.identity_order) : Json(nullptr);
  j["method"] = rec.method;
  Json c;
  c["name"] = rec.classification;
  c["display"] = rec.classification_display;
  if (rec.class_d) c["d"] = *rec.class_d;
  if (rec.class_m) c["m"] = *rec.class_m;
  if (rec.class_n) c["n"] = *rec.class_n;
  j["classification"] = c;
  return j;
}

inline Json to_json(const K0Report& r, const AlgebraClass& cls) { return to_json(make_record(r, cls)); }

/// Inverse of to_json(ReportRecord); throws nlohmann::json exceptions or
/// DomainError on malformed input.
inline ReportRecord record_from_json(const Json& j) {
  ReportRecord rec;
  rec.n = j.at("n").get<std::uint64_t>();
  rec.generators = j.at("generators").get<std::vector<std::string>>();
  rec.weights = j.at("weights").get<std::vector<std::uint64_t>>();
  rec.group = j.at("group").get<std::string>();
  if (!j.at("W").is_null()) rec.total_weight = j.at("W").get<std::uint64_t>();
  rec.pis = j.at("pis").get<bool>();
  rec.det = j.at("det").get<std::string>();
  rec.det_sign = j.at("det_sign").get<int>();
  rec.snf_diag = j.at("snf_diag").get<std::vector<std::string>>();
  if (!j.at("k0").is_null()) {
    const Json& k = j.at("k0");
    std::vector<Integer> torsion;
    for (const auto& t : k.at("torsion")) torsion.push_back(parse_integer(t.get<std::string>()));
    rec.k0 = FinAbGroup(std::move(torsion), k.at("free_rank").get<std::size_t>());
    if (rec.k0->display() != k.at("display").get<std::string>()) throw DomainError("k0.display does not match k0 data");
  }
  if (!j.at("identity_order").is_null()) rec.identity_order = j.at("identity_order").get<std::string>();
  rec.method = j.at("method").get<std::string>();
  const Json& c = j.at("classification");
  rec.classification = c.at("name").get<std::string>();
  rec.classification_display = c.at("display").get<std::string>();
  if (c.contains("d")) rec.class_d = c.at("d").get<std::string>();
  if (c.contains("m")) rec.class_m = c.at("m").get<std::string>();
  if (c.contains("n")) rec.class_n = c.at("n").get<std::string>();
  return rec;
}

}  // namespace k0lab
