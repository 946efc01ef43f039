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

// Command-line front end, kept in a header so the test suite can drive it
// in-process: run(argv, out, err) returns the process exit code.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "k0lab/k0lab.hpp"
#include "k0lab/report_json.hpp"

namespace k0lab::cli {

enum ExitCode : int {
  ok = 0,
  not_generating = 2,
  invalid_spec = 3,
  usage = 64,
  bad_file = 65,
  no_input = 66,
};

/// Usage problem detected after CLI11 parsing (bad list syntax, ranges...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<long long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    try {
      const Integer v = parse_integer(item);
      if (abs(v) > Integer(1) << 62) throw UsageError(what + ": value out of range: " + item);
      out.push_back(v.convert_to<long long>());
    } catch (const ParseError&) {
      throw UsageError(what + ": expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

inline std::vector<std::uint64_t> parse_weights(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (long long w : parse_list(text, "--weights")) {
    if (w < 0) throw InvalidSpecError("weights must be positive");
    out.push_back(static_cast<std::uint64_t>(w));
  }
  return out;
}

inline Method parse_method(const std::string& m) {
  if (m == "auto") return Method::automatic;
  if (m == "full") return Method::full_snf;
  if (m == "companion") return Method::companion_reduction;
  if (m == "both") return Method::both;
  throw UsageError("--method must be one of auto, full, companion, both");
}

inline FiniteGroupTable load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_group_table(in);
}

inline std::string render_text(const K0Report& r, const AlgebraClass& cls) {
  std::ostringstream os;
  os << "graph: " << r.summary << '\n';
  os << "vertices: " << r.vertex_count << '\n';
  if (r.total_weight) os << "W: " << *r.total_weight << '\n';
  os << "pis: " << (r.pis ? "true" : "false") << '\n';
  os << "det = " << r.det_value.str() << '\n';
  os << "det sign: " << r.det_sign << '\n';
  if (r.k0) {
    os << "snf diag:";
    for (const auto& s : r.snf_diag) os << ' ' << s.str();
    os << '\n';
    os << "K0 = " << r.k0->display() << '\n';
    if (r.identity_order) os << "identity order: " << r.identity_order->to_string() << '\n';
    os << "method: " << to_string(r.method) << '\n';
  } else {
    os << "K0: not computed (L(E) is not purely infinite simple)\n";
  }
  os << "classification: " << cls.display() << '\n';
  return os.str();
}

inline std::string render_json(const K0Report& r, const AlgebraClass& cls) { return to_json(r, cls).dump(2) + "\n"; }

inline void write_dot(const DirectedMultigraph& g, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << g.to_dot();
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::ios_base::failure("cannot write " + path);
  f << g.to_dot();
}

// ---------------------------------------------------------------------------
// Spec descriptors for `compare`: kind:key=value:key=value

struct Subject {
  std::optional<CayleySpec> spec;
  std::optional<DirectedMultigraph> graph;
  std::string label;
};

inline Subject parse_descriptor(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ':')) parts.push_back(part);
  if (parts.empty()) throw UsageError("empty descriptor");
  std::map<std::string, std::string> kv;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw UsageError("descriptor field '" + parts[i] + "' is not key=value");
    kv[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
  }
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto number = [&](const std::string& key) -> std::uint64_t {
    auto v = take(key);
    if (!v) throw UsageError("descriptor '" + text + "' needs " + key + "=");
    const auto list = parse_list(*v, key);
    if (list.size() != 1 || list[0] < 0) throw UsageError(key + " must be a non-negative integer");
    return static_cast<std::uint64_t>(list[0]);
  };

  Subject s;
  const std::string& kind = parts[0];
  if (kind == "cyclic") {
    const auto n = number("n");
    const auto gens = take("gens");
    if (!gens) throw UsageError("cyclic descriptor needs gens=");
    const auto weights = take("weights");
    s.spec = make_cyclic_spec(n, parse_list(*gens, "gens"), weights ? parse_weights(*weights) : std::vector<std::uint64_t>{});
  } else if (kind == "dihedral") {
    s.spec = make_dihedral_spec(number("n"));
  } else if (kind == "complete") {
    const auto n = number("n");
    const auto loops = kv.count("loops") ? number("loops") : 1;
    s.graph = build_complete_graph(n, loops);
    s.label = "K_" + std::to_string(n) + "^(" + std::to_string(loops) + ")";
  } else if (kind == "table") {
    const auto file = take("file");
    const auto gens = take("gens");
    if (!file || !gens) throw UsageError("table descriptor needs file= and gens=");
    const auto weights = take("weights");
    std::vector<std::size_t> g;
    for (long long x : parse_list(*gens, "gens")) {
      if (x < 0) throw InvalidSpecError("table generators are element indices >= 0");
      g.push_back(static_cast<std::size_t>(x));
    }
    s.spec = make_table_spec(load_group_table(*file), g, weights ? parse_weights(*weights) : std::vector<std::uint64_t>{});
  } else {
    throw UsageError("unknown descriptor kind '" + kind + "' (cyclic, dihedral, complete, table)");
  }
  if (!kv.empty()) throw UsageError("unknown descriptor field '" + kv.begin()->first + "'");
  if (s.spec) s.label = describe(*s.spec);
  return s;
}

inline K0Report analyze_subject(const Subject& s, const AnalyzeOptions& opts) {
  K0Report r = s.spec ? analyze(*s.spec, opts) : analyze(*s.graph, opts);
  r.summary = s.label;
  return r;
}

// ---------------------------------------------------------------------------
// scan

struct ScanInstance {
  Subject subject;
  std::string params;  // "S={2,3} w={1,1}" etc.
  std::uint64_t n = 0;
};

struct ScanOptions {
  std::string family;
  std::uint64_t n_min = 1, n_max = 10;
  std::uint64_t max_gens = 2, max_weight = 1;
  std::uint64_t a_max = 3, b_max = 3;
  std::uint64_t loops = 1;
  std::uint64_t w_min = 2, w_max = 3;
  std::uint64_t cap = 100000;
};

inline std::string brace_list(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s + "}";
}

template <class T>
std::vector<std::string> to_strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(std::to_string(x));
  return out;
}

/// Enumerates instances in lexicographic parameter order, counting first so
/// an over-cap request fails before any work.
inline std::vector<ScanInstance> enumerate_scan(const ScanOptions& o) {
  if (o.n_min < 1 || o.n_min > o.n_max) throw UsageError("scan: need 1 <= n-min <= n-max");
  std::vector<ScanInstance> out;
  auto push = [&](ScanInstance inst) {
    if (out.size() >= o.cap) throw UsageError("scan: instance count exceeds cap " + std::to_string(o.cap));
    out.push_back(std::move(inst));
  };
  auto cyclic = [&](std::uint64_t n, const std::vector<long long>& gens, const std::vector<std::uint64_t>& w) {
    ScanInstance inst;
    inst.n = n;
    inst.subject.spec = make_cyclic_spec(n, gens, w);
    inst.subject.label = describe(*inst.subject.spec);
    inst.params = "S=" + brace_list(to_strings(gens)) + " w=" + brace_list(to_strings(w));
    push(std::move(inst));
  };

  // Rough size estimate first so absurd requests fail fast.
  {
    long double est = 0;
    for (std::uint64_t n = o.n_min; n <= o.n_max; ++n) {
      if (o.family == "cyclic_S") {
        long double subsets = 0, choose = 1;
        for (std::uint64_t k = 1; k <= std::min(o.max_gens, n); ++k) {
          choose = choose * static_cast<long double>(n - k + 1) / static_cast<long double>(k);
          subsets += choose * std::pow(static_cast<long double>(o.max_weight), static_cast<long double>(k));
        }
        est += subsets;
      } else if (o.family == "S01") {
        est += static_cast<long double>(o.a_max) * static_cast<long double>(o.b_max);
      } else if (o.family == "k_cycle") {
        est += static_cast<long double>(o.w_max >= o.w_min ? o.w_max - o.w_min + 1 : 0);
      } else {
        est += 1;
      }
    }
    if (est > static_cast<long double>(o.cap) * 4) throw UsageError("scan: instance count exceeds cap " + std::to_string(o.cap));
  }

  for (std::uint64_t n = o.n_min; n <= o.n_max; ++n) {
    if (o.family == "dihedral") {
      ScanInstance inst;
      inst.n = n;
      inst.subject.spec = make_dihedral_spec(n);
      inst.subject.label = describe(*inst.subject.spec);
      inst.params = "S={r,s} w={1,1}";
      push(std::move(inst));
    } else if (o.family == "complete") {
      ScanInstance inst;
      inst.n = n;
      inst.subject.graph = build_complete_graph(n, o.loops);
      inst.subject.label = "K_" + std::to_string(n) + "^(" + std::to_string(o.loops) + ")";
      inst.params = "loops=" + std::to_string(o.loops);
      push(std::move(inst));
    } else if (o.family == "k_cycle") {
      for (std::uint64_t w = o.w_min; w <= o.w_max; ++w) cyclic(n, {1}, {w});
    } else if (o.family == "S01") {
      if (n < 2) continue;
      for (std::uint64_t a = 1; a <= o.a_max; ++a)
        for (std::uint64_t b = 1; b <= o.b_max; ++b)
          if (a + b >= 2) cyclic(n, {0, 1}, {a, b});
    } else if (o.family == "cyclic_S") {
      // subsets of {0..n-1} in lexicographic order, then weight vectors
      for (std::uint64_t k = 1; k <= std::min<std::uint64_t>(o.max_gens, n); ++k) {
        std::vector<long long> s(k);
        for (std::uint64_t i = 0; i < k; ++i) s[i] = static_cast<long long>(i);
        for (;;) {
          std::uint64_t g = n;
          for (auto x : s) g = std::gcd(g, static_cast<std::uint64_t>(x));
          if (g == 1) {
            std::vector<std::uint64_t> w(k, 1);
            for (;;) {
              cyclic(n, s, w);
              std::size_t i = k;
              while (i > 0 && w[i - 1] == o.max_weight) w[--i] = 1;
              if (i == 0) break;
              ++w[i - 1];
            }
          }
          std::size_t i = k;
          while (i > 0 && s[i - 1] == static_cast<long long>(n - k + i - 1)) --i;
          if (i == 0) break;
          ++s[i - 1];
          for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
        }
      }
    } else {
      throw UsageError("unknown family '" + o.family + "' (cyclic_S, dihedral, complete, k_cycle, S01)");
    }
  }
  return out;
}

struct ScanRow {
  K0Report report;
  AlgebraClass cls;
};

inline std::vector<ScanRow> evaluate_scan(const std::vector<ScanInstance>& instances, bool parallel,
                                          const AnalyzeOptions& opts) {
  std::vector<std::optional<ScanRow>> rows(instances.size());
  auto work = [&](std::size_t i) {
    K0Report r = analyze_subject(instances[i].subject, opts);
    AlgebraClass c = classify(r);
    rows[i] = ScanRow{std::move(r), std::move(c)};
  };
  if (!parallel || instances.size() < 2) {
    for (std::size_t i = 0; i < instances.size(); ++i) work(i);
  } else {
    const std::size_t threads = std::max<std::size_t>(2, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<ScanRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

inline void render_scan(const std::vector<ScanInstance>& inst, const std::vector<ScanRow>& rows,
                        const std::string& format, std::ostream& out) {
  auto k0_text = [](const K0Report& r) { return r.k0 ? r.k0->display() : std::string("-"); };
  auto order_text = [](const K0Report& r) { return r.identity_order ? r.identity_order->to_string() : std::string("-"); };
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(to_json(row.report, row.cls));
    out << arr.dump(2) << '\n';
  } else if (format == "csv") {
    out << "n,params,det,k0,identity_order,classification\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << inst[i].n << ",\"" << inst[i].params << "\"," << rows[i].report.det_value.str() << ",\""
          << k0_text(rows[i].report) << "\"," << order_text(rows[i].report) << ",\"" << rows[i].cls.display()
          << "\"\n";
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << "n=" << inst[i].n << "  " << inst[i].params << "  det=" << rows[i].report.det_value.str()
          << "  K0=" << k0_text(rows[i].report) << "  order=" << order_text(rows[i].report)
          << "  class=" << rows[i].cls.display() << '\n';
  }
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k0lab: K0 of Leavitt path algebras of weighted Cayley graphs", "k0lab"};
  app.set_version_flag("--version", "k0lab 1.0.0");
  app.require_subcommand(1);

  std::string method_name = "auto";
  bool json = false;

  auto* cayley = app.add_subcommand("cayley", "analyze a weighted Cayley graph of Z_n or of a tabled group");
  std::uint64_t cay_n = 0;
  std::string cay_gens, cay_weights, cay_table, cay_dot;
  cayley->add_option("--n", cay_n, "order of the cyclic group Z_n");
  cayley->add_option("--gens", cay_gens, "generators, comma separated (residues mod n or table indices)")->required();
  cayley->add_option("--weights", cay_weights, "weights, comma separated (default all 1)");
  cayley->add_option("--table", cay_table, "group table file instead of Z_n");
  cayley->add_option("--dot", cay_dot, "write the graph in Graphviz format ('-' for stdout)");
  cayley->add_option("--method", method_name, "auto, full, companion or both");
  cayley->add_flag("--json", json, "JSON output");

  auto* dihedral = app.add_subcommand("dihedral", "analyze Cay(D_n, {r, s})");
  std::uint64_t dih_n = 0;
  std::string dih_dot;
  dihedral->add_option("--n", dih_n, "dihedral parameter (group order 2n)")->required();
  dihedral->add_option("--dot", dih_dot, "write the graph in Graphviz format ('-' for stdout)");
  dihedral->add_option("--method", method_name, "auto, full, companion or both");
  dihedral->add_flag("--json", json, "JSON output");

  auto* scan = app.add_subcommand("scan", "analyze a family of graphs");
  ScanOptions so;
  std::string scan_format = "text";
  bool scan_parallel = false;
  scan->add_option("--family", so.family, "cyclic_S, dihedral, complete, k_cycle or S01")->required();
  scan->add_option("--n-min", so.n_min, "smallest n");
  scan->add_option("--n-max", so.n_max, "largest n");
  scan->add_option("--max-gens", so.max_gens, "cyclic_S: largest |S|");
  scan->add_option("--max-weight", so.max_weight, "cyclic_S: largest weight");
  scan->add_option("--a-max", so.a_max, "S01: largest weight of 0");
  scan->add_option("--b-max", so.b_max, "S01: largest weight of 1");
  scan->add_option("--loops", so.loops, "complete: loops per vertex");
  scan->add_option("--w-min", so.w_min, "k_cycle: smallest W");
  scan->add_option("--w-max", so.w_max, "k_cycle: largest W");
  scan->add_option("--cap", so.cap, "maximum number of instances");
  scan->add_option("--format", scan_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  scan->add_option("--method", method_name, "auto, full, companion or both");
  scan->add_flag("--parallel", scan_parallel, "evaluate instances concurrently");

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix file");
  std::string snf_in;
  snf_cmd->add_option("--in", snf_in, "matrix file ('rows cols' then the rows)")->required();
  snf_cmd->add_flag("--json", json, "JSON output");

  auto* compare = app.add_subcommand("compare", "restricted KP comparison of two graphs");
  std::string cmp_a, cmp_b;
  compare->add_option("first", cmp_a, "descriptor, e.g. cyclic:n=6:gens=2,3:weights=1,1")->required();
  compare->add_option("second", cmp_b, "descriptor, e.g. dihedral:n=5 or complete:n=3:loops=1")->required();
  compare->add_option("--method", method_name, "auto, full, companion or both");
  compare->add_flag("--json", json, "JSON output");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    AnalyzeOptions opts = AnalyzeOptions::from_environment();
    opts.method = parse_method(method_name);

    if (*cayley) {
      CayleySpec spec;
      const auto gens = parse_list(cay_gens, "--gens");
      std::vector<std::uint64_t> weights;
      if (!cay_weights.empty()) weights = parse_weights(cay_weights);
      if (!weights.empty() && weights.size() != gens.size())
        throw UsageError("--gens and --weights must have the same length");
      if (!cay_table.empty()) {
        std::vector<std::size_t> idx;
        for (long long g : gens) {
          if (g < 0) throw InvalidSpecError("table generators are element indices >= 0");
          idx.push_back(static_cast<std::size_t>(g));
        }
        spec = make_table_spec(load_group_table(cay_table), idx, weights);
      } else {
        if (cay_n == 0) throw UsageError("cayley needs --n N (N >= 1) or --table FILE");
        spec = make_cyclic_spec(cay_n, gens, weights);
      }
      if (!spec.generates()) {
        err << "error: S does not generate "
            << (spec.kind == GroupKind::cyclic ? "Z_" + std::to_string(spec.parameter) : std::string("the group")) << '\n';
        return not_generating;
      }
      const K0Report r = analyze(spec, opts);
      const AlgebraClass cls = classify(r);
      if (!cay_dot.empty()) write_dot(build_cayley(spec), cay_dot, out);
      out << (json ? render_json(r, cls) : render_text(r, cls));
      return ok;
    }

    if (*dihedral) {
      const CayleySpec spec = make_dihedral_spec(dih_n);
      const K0Report r = analyze(spec, opts);
      const AlgebraClass cls = classify(r);
      const DihedralRow row = dihedral_theorem_row(dih_n);
      const bool matches = r.k0 && *r.k0 == row.k0 && r.det_sign <= 0 &&
                           (!row.algebra || *row.algebra == cls);
      if (!dih_dot.empty()) write_dot(build_cayley(spec), dih_dot, out);
      if (json) {
        Json j = to_json(r, cls);
        j["theorem_row"] = {{"k0", row.k0.display()},
                            {"algebra", row.algebra ? row.algebra->display() : std::string("-")},
                            {"matches", matches}};
        out << j.dump(2) << '\n';
      } else {
        out << render_text(r, cls);
        out << "theorem row: K0 = " << row.k0.display() << ", algebra "
            << (row.algebra ? row.algebra->display() : std::string("(group only)")) << '\n';
        out << "matches theorem row: " << (matches ? "yes" : "no") << '\n';
      }
      return ok;
    }

    if (*scan) {
      const auto instances = enumerate_scan(so);
      const auto rows = evaluate_scan(instances, scan_parallel, opts);
      render_scan(instances, rows, scan_format, out);
      return ok;
    }

    if (*snf_cmd) {
      std::ifstream in(snf_in);
      if (!in) {
        err << "error: cannot open " << snf_in << '\n';
        return no_input;
      }
      const IntMatrix m = read_matrix(in);
      const SnfResult s = snf(m);
      const FinAbGroup g = cokernel_from_diagonal(s.diag, m.rows());
      const std::string coker = g.is_trivial() ? std::string("trivial") : g.display();
      if (json) {
        Json j;
        std::vector<std::string> diag;
        for (const auto& x : s.diag) diag.push_back(x.str());
        j["rows"] = m.rows();
        j["cols"] = m.cols();
        j["diag"] = diag;
        j["coker"] = g.display();
        j["det"] = m.is_square() ? Json(det(m).str()) : Json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        out << "diag:";
        for (const auto& x : s.diag) out << ' ' << x.str();
        out << '\n' << "coker: " << coker << '\n';
        if (m.is_square()) out << "det = " << det(m).str() << '\n';
      }
      return ok;
    }

    if (*compare) {
      const Subject a = parse_descriptor(cmp_a), b = parse_descriptor(cmp_b);
      const K0Report ra = analyze_subject(a, opts), rb = analyze_subject(b, opts);
      for (const auto* r : {&ra, &rb})
        if (!r->pis) {
          err << "error: " << r->summary << " is not purely infinite simple\n";
          return invalid_spec;
        }
      const AlgebraClass ca = classify(ra), cb = classify(rb);
      const KpComparison c = kp_compare(ra, rb);
      if (json) {
        Json j;
        j["first"] = to_json(ra, ca);
        j["second"] = to_json(rb, cb);
        j["verdict"] = to_string(c.verdict);
        j["reason"] = c.reason;
        out << j.dump(2) << '\n';
        return ok;
      }
      for (const auto& [label, r, cls] : {std::tuple{"A", &ra, &ca}, std::tuple{"B", &rb, &cb}})
        out << label << ": " << r->summary << "  K0 = " << r->k0->display() << "  det sign " << r->det_sign
            << "  [L(E)] order " << r->identity_order->to_string() << "  class " << cls->display() << '\n';
      if (c.verdict == KpVerdict::isomorphic) {
        if (ca == cb && ca.kind != AlgebraKind::unclassified)
          out << "isomorphic: both " << ca.display() << " (" << c.reason << ")\n";
        else
          out << "isomorphic (" << c.reason << ")\n";
      } else {
        out << "not_by_this_criterion: " << c.reason << '\n';
      }
      return ok;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return bad_file;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return no_input;
  } catch (const NotStronglyConnectedError& e) {
    err << "error: " << e.what() << '\n';
    return not_generating;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return invalid_spec;
  }
  return usage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace k0lab::cli
