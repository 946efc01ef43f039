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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "k0lab_cli.hpp"

namespace k0lab::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

const std::string samples = K0LAB_SAMPLES_DIR;

TEST(Cli, CayleyText) {
  const auto r = invoke({"cayley", "--n", "6", "--gens", "2,3"});
  ASSERT_EQ(r.code, ok) << r.err;
  EXPECT_TRUE(contains(r.out, "Z_7")) << r.out;
  EXPECT_TRUE(contains(r.out, "-7")) << r.out;
}

TEST(Cli, CayleyWeighted) {
  const auto r = invoke({"cayley", "--n", "4", "--gens", "1", "--weights", "3"});
  ASSERT_EQ(r.code, ok) << r.err;
  EXPECT_TRUE(contains(r.out, "Z_80")) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"cayley", "--n", "6", "--gens", "2,4"}).code, not_generating);
  EXPECT_EQ(invoke({"cayley", "--n", "6", "--gens", "1,7"}).code, invalid_spec);
  EXPECT_EQ(invoke({"cayley", "--n", "6", "--gens", "1,2", "--weights", "1"}).code, usage);
  EXPECT_EQ(invoke({"cayley", "--n", "6"}).code, usage);
  EXPECT_EQ(invoke({"frobnicate"}).code, usage);
  EXPECT_EQ(invoke({}).code, usage);
  EXPECT_EQ(invoke({"cayley", "--n", "6", "--gens", "1", "--method", "magic"}).code, usage);
  EXPECT_EQ(invoke({"snf", "--in", samples + "/does_not_exist.txt"}).code, no_input);
  EXPECT_EQ(invoke({"--version"}).code, ok);
}

TEST(Cli, CompareNonPisIsInvalid) {
  EXPECT_EQ(invoke({"compare", "cyclic:n=5:gens=1", "cyclic:n=1:gens=0:weights=2"}).code, invalid_spec);
}

TEST(Cli, MalformedInputsNeverCrash) {
  const std::vector<std::vector<std::string>> corpus = {
      {"cayley", "--n", "0", "--gens", "0"},
      {"cayley", "--n", "-3", "--gens", "1"},
      {"cayley", "--n", "5", "--gens", ""},
      {"cayley", "--n", "5", "--gens", "1,,2"},
      {"cayley", "--n", "5", "--gens", "a"},
      {"cayley", "--n", "5", "--gens", "1", "--weights", "0"},
      {"cayley", "--n", "5", "--gens", "1", "--weights", "-2"},
      {"cayley", "--n", "99999999999999999999", "--gens", "1"},
      {"cayley", "--table", samples + "/s3_table.txt", "--gens", "9"},
      {"cayley", "--table", samples + "/zero_2x2.txt", "--gens", "1"},
      {"dihedral", "--n", "0"},
      {"scan", "--family", "nope"},
      {"scan", "--family", "cyclic_S", "--n-min", "5", "--n-max", "2"},
      {"compare", "cyclic:n=6", "dihedral:n=5"},
      {"compare", "cyclic:n=6:gens=1:bogus=2", "dihedral:n=5"},
      {"compare", "complete:n=0", "dihedral:n=5"},
      {"compare", "table:file=/nonexistent:gens=1", "dihedral:n=5"},
      {"snf", "--in", samples + "/s3_table.txt"},
  };
  for (const auto& args : corpus) {
    const auto r = invoke(args);
    EXPECT_NE(r.code, ok) << args[0] << " " << (args.size() > 1 ? args[1] : "");
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, SnfSamples) {
  auto r = invoke({"snf", "--in", samples + "/example_t6_minus_i.txt"});
  ASSERT_EQ(r.code, ok) << r.err;
  EXPECT_TRUE(contains(r.out, "diag: 1 1 7")) << r.out;
  r = invoke({"snf", "--in", samples + "/zero_2x2.txt"});
  ASSERT_EQ(r.code, ok) << r.err;
  EXPECT_TRUE(contains(r.out, "diag: 0 0")) << r.out;
  EXPECT_TRUE(contains(r.out, "coker: Z^2")) << r.out;
}

TEST(Cli, SnfMalformedFileGivesLineNumber) {
  const std::string path = ::testing::TempDir() + "k0lab_bad_matrix.txt";
  {
    std::ofstream f(path);
    f << "2 2\n1 2\n3 oops\n";
  }
  const auto r = invoke({"snf", "--in", path});
  EXPECT_EQ(r.code, bad_file);
  EXPECT_TRUE(contains(r.err, "line 3")) << r.err;
}

TEST(Cli, Dihedral) {
  for (const char* n : {"5", "6", "8", "9"}) {
    const auto r = invoke({"dihedral", "--n", n});
    ASSERT_EQ(r.code, ok) << r.err;
    EXPECT_TRUE(contains(r.out, "matches theorem row: yes")) << r.out;
  }
}

TEST(Cli, TableGroup) {
  const auto r = invoke({"cayley", "--table", samples + "/s3_table.txt", "--gens", "1,2"});
  ASSERT_EQ(r.code, ok) << r.err;
  EXPECT_TRUE(contains(r.out, "Z^2")) << r.out;
}

TEST(Cli, Compare) {
  auto r = invoke({"compare", "dihedral:n=5", "cyclic:n=3:gens=0,1"});
  ASSERT_EQ(r.code, ok) << r.err;
  EXPECT_TRUE(contains(r.out, "isomorphic: both L(1,2)")) << r.out;

  r = invoke({"compare", "complete:n=3:loops=1", "complete:n=4:loops=1"});
  ASSERT_EQ(r.code, ok) << r.err;
  EXPECT_TRUE(contains(r.out, "not_by_this_criterion")) << r.out;

  r = invoke({"compare", "cyclic:n=6:gens=2,3", "cyclic:n=1:gens=0:weights=8"});
  ASSERT_EQ(r.code, ok) << r.err;
  EXPECT_TRUE(contains(r.out, "not_by_this_criterion")) << r.out;
}

TEST(Cli, JsonRoundTrip) {
  const auto r = invoke({"cayley", "--n", "6", "--gens", "2,3", "--json"});
  ASSERT_EQ(r.code, ok) << r.err;
  const auto rec = record_from_json(Json::parse(r.out));
  EXPECT_EQ(to_json(rec).dump(2) + "\n", r.out);
}

TEST(Cli, ScanParallelMatchesSequential) {
  for (const char* fmt : {"text", "json", "csv"}) {
    const std::vector<std::string> base = {"scan", "--family", "cyclic_S", "--n-min", "2", "--n-max", "9",
                                           "--max-gens", "2", "--max-weight", "2", "--format", fmt};
    auto par = base;
    par.push_back("--parallel");
    const auto a = invoke(base), b = invoke(par);
    ASSERT_EQ(a.code, ok) << a.err;
    ASSERT_EQ(b.code, ok) << b.err;
    EXPECT_EQ(a.out, b.out) << fmt;
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, ScanFamilies) {
  for (const auto& fam : {std::vector<std::string>{"scan", "--family", "dihedral", "--n-min", "2", "--n-max", "7"},
                          std::vector<std::string>{"scan", "--family", "complete", "--n-min", "2", "--n-max", "5"},
                          std::vector<std::string>{"scan", "--family", "k_cycle", "--n-min", "2", "--n-max", "4"},
                          std::vector<std::string>{"scan", "--family", "S01", "--n-min", "2", "--n-max", "4"}}) {
    const auto r = invoke(fam);
    EXPECT_EQ(r.code, ok) << fam[2] << ": " << r.err;
  }
}

TEST(Cli, ScanCap) {
  const auto r = invoke({"scan", "--family", "cyclic_S", "--n-min", "2", "--n-max", "40", "--max-gens", "4",
                         "--max-weight", "3", "--cap", "100"});
  EXPECT_EQ(r.code, usage);
}

TEST(Cli, DotOutput) {
  const auto r = invoke({"cayley", "--n", "3", "--gens", "1", "--weights", "2", "--dot", "-"});
  ASSERT_EQ(r.code, ok) << r.err;
  EXPECT_TRUE(contains(r.out, "digraph")) << r.out;
}

}  // namespace
}  // namespace k0lab::cli
