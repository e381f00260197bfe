// Copyright 2026 The distortion Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace distortion::cli {
namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
  bool has(const std::string& line) const { return ("\n" + out).find("\n" + line + "\n") != std::string::npos; }
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "distortion");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& stem) {
  return (::testing::TempDir().empty() ? std::string("/tmp/") : ::testing::TempDir()) + stem;
}

TEST(Cli, CurveInfo) {
  const Result r = invoke({"curve-info", "--name", "ex2-f701"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.has("t=2")) << r.out;
  EXPECT_TRUE(r.has("d_K=-7"));
  EXPECT_TRUE(r.has("f_pi=20"));
  EXPECT_TRUE(r.has("order=700"));
}

TEST(Cli, CurveInfoInputPathsAgree) {
  const Result named = invoke({"curve-info", "--name", "ex2-f701"});
  const Result raw = invoke({"curve-info", "--p", "701", "--a4", "-35", "--b", "98"});
  EXPECT_EQ(raw.code, kExitOk);
  auto tail = [](const std::string& s) { return s.substr(s.find("\np=")); };
  const std::string a = tail(named.out), b = tail(raw.out);
  // The custom curve has no conductor line; compare the shared prefix.
  EXPECT_EQ(a.substr(0, b.find("\nf_pi=")), b.substr(0, b.find("\nf_pi=")));
  EXPECT_TRUE(raw.has("f_pi=20"));
}

TEST(Cli, BadReductionIsInvalidInput) {
  const Result r = invoke({"curve-info", "--p", "11", "--name", "ex4-rational"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("error=BadReduction"), std::string::npos) << r.err;
}

TEST(Cli, Pairing) {
  const Result r = invoke({"pairing", "--name", "ex2-f701", "--ell", "5", "--A", "224,31", "--B", "173,194"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.has("e=464")) << r.out;
}

TEST(Cli, Ddh) {
  Result r = invoke({"ddh", "--name", "ex2-f701", "--ell", "5", "--phi", "alpha_701", "--triple", "2,3,6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.has("ddh=true")) << r.out;
  r = invoke({"ddh", "--name", "ex2-f701", "--ell", "5", "--phi", "alpha_701", "--triple", "2,3,2"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_TRUE(r.has("ddh=false"));
  r = invoke({"ddh", "--name", "ex2-f701", "--ell", "5", "--phi", "alpha_701", "--triple", "-3,3,-9"});
  EXPECT_EQ(r.code, kExitOk);
  r = invoke({"ddh", "--name", "ex2-f701", "--ell", "5", "--phi", "scalar(2)", "--triple", "2,3,6"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("error=NotADistortionMap"), std::string::npos);
  r = invoke({"ddh", "--name", "ex2-f701", "--ell", "5", "--phi", "alpha_701", "--sample", "dishonest", "--seed", "3"});
  EXPECT_EQ(r.code, kExitNegative);
}

TEST(Cli, Classify) {
  Result r = invoke({"classify", "--name", "ex4-13", "--ell", "2", "--conductor", "2"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_TRUE(r.has("case=NoDistortion")) << r.out;
  r = invoke({"classify", "--name", "ex2-f701", "--ell", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.has("case=Inert"));
}

TEST(Cli, EndoApplyAndMatrix) {
  Result r = invoke({"endo-apply", "--name", "ex2-f701", "--phi", "alpha_701", "--A", "224,31"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.has("image=173,194")) << r.out;
  r = invoke({"endo-apply", "--name", "ex2-f701", "--phi", "alpha_701", "--A", "319,0"});
  EXPECT_TRUE(r.has("image=O"));
  r = invoke({"endo-matrix", "--name", "ex2-f701", "--ell", "5", "--phi", "alpha_701"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.has("m11=0")) << r.out;
  EXPECT_TRUE(r.has("m12=4"));
  EXPECT_TRUE(r.has("m21=2"));
  EXPECT_TRUE(r.has("m22=1"));
}

TEST(Cli, Census) {
  Result r = invoke({"census", "--name", "ex2-f701", "--ell", "5", "--phi", "alpha_701"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.has("census_distorted=6")) << r.out;
  EXPECT_TRUE(r.has("theorem1=holds"));
  r = invoke({"census", "--name", "ex2-f701", "--ell", "5", "--phi", "scalar(3)"});
  EXPECT_EQ(r.code, kExitNegative);
}

TEST(Cli, InvalidInputs) {
  EXPECT_EQ(invoke({}).code, kExitInvalid);
  EXPECT_EQ(invoke({"pairing", "--name", "ex2-f701", "--ell", "5", "--A", "1,1", "--B", "173,194"}).code,
            kExitInvalid);
  EXPECT_EQ(invoke({"curve-info", "--name", "nope"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"curve-info", "--p", "7", "--a4", "1", "--a6", "0"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"ddh", "--name", "ex2-f701", "--ell", "5", "--phi", "alpha_701", "--triple", "1,2"}).code,
            kExitInvalid);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInvalid);
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"paper-examples"},
        {"ddh", "--name", "ex2-f701", "--ell", "5", "--phi", "alpha_701", "--sample", "honest", "--seed", "9"},
        {"catalog", "export"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

TEST(Cli, ReferenceChecksAllPass) {
  const Result r = invoke({"paper-examples"});
  EXPECT_TRUE(r.has("failed=0")) << r.out;
  EXPECT_EQ(r.code, kExitOk);
}

TEST(Cli, TamperedCatalogFails) {
  const std::string path = temp_path("tampered_catalog.txt");
  {
    std::ofstream f(path);
    f << "[ex2-f701]\np=701\na4=-35\na6=99\nendos=alpha_701\nconductor=1\n";
  }
  const Result r = invoke({"paper-examples", "--catalog", path});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.out.find("C1."), std::string::npos);
  EXPECT_EQ(r.out.find("C1.ex2.alpha_image_P=PASS"), std::string::npos) << r.out;
  std::remove(path.c_str());
}

TEST(Cli, CatalogExportToFile) {
  const std::string path = temp_path("exported_catalog.txt");
  const Result r = invoke({"catalog", "export", "--out", path});
  EXPECT_EQ(r.code, kExitOk);
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  EXPECT_EQ(text.str(), invoke({"catalog", "export"}).out);
  EXPECT_EQ(invoke({"curve-info", "--catalog", path, "--name", "ex2-f701"}).out,
            invoke({"curve-info", "--name", "ex2-f701"}).out);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace distortion::cli
