// Copyright 2026 The latticeft Authors
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


#include "latticeft/config.h"

#include <map>

#include "gtest/gtest.h"

using namespace latticeft;

TEST(config, defaults) {
    RunConfig c = parse_run_config("");
    EXPECT_EQ(c.mode, Mode::LOCAL);
    EXPECT_EQ(c.memory_rule, MemoryRule::TENTH);
    EXPECT_TRUE(c.include_triple);
    EXPECT_EQ(c.matrices, MatrixSource::SELF);
    EXPECT_EQ(c.badloc, BadlocSource::SELF);
    EXPECT_FALSE(c.serial);
}

TEST(config, parses_values) {
    RunConfig c = parse_run_config(
        "# comment\n"
        "mode = nonlocal\n"
        "memory_rule=equal  # trailing comment\n"
        "include_triple=false\n"
        "workers=3\n"
        "serial=true\n"
        "grid_lo=1e-7\n"
        "out_dir=/tmp/x\n");
    EXPECT_EQ(c.mode, Mode::NONLOCAL);
    EXPECT_EQ(c.memory_rule, MemoryRule::EQUAL);
    EXPECT_FALSE(c.include_triple);
    EXPECT_EQ(c.workers, 3);
    EXPECT_TRUE(c.serial);
    EXPECT_EQ(c.grid_lo, 1e-7);
    EXPECT_EQ(c.out_dir, "/tmp/x");
}

TEST(config, rejects_bad_input) {
    EXPECT_THROW(parse_run_config("colour=blue\n"), ConfigError);
    EXPECT_THROW(parse_run_config("mode=local\nmode=local\n"), ConfigError);
    EXPECT_THROW(parse_run_config("mode\n"), ConfigError);
    EXPECT_THROW(parse_run_config("mode=sideways\n"), ConfigError);
    EXPECT_THROW(parse_run_config("workers=0\n"), ConfigError);
    EXPECT_THROW(parse_run_config("workers=2x\n"), ConfigError);
    EXPECT_THROW(parse_run_config("include_triple=maybe\n"), ConfigError);
    EXPECT_THROW(parse_run_config("grid_lo=1e-3\ngrid_hi=1e-4\n"), ConfigError);
}

TEST(config, str_round_trip) {
    RunConfig c = parse_run_config("mode=nonlocal\nmemory_rule=zero-swap\nlevels=6\nmatrices=reference\n");
    RunConfig back = parse_run_config(c.str());
    EXPECT_EQ(back.str(), c.str());
    EXPECT_EQ(back.levels, 6);
    EXPECT_EQ(back.matrices, MatrixSource::REFERENCE);
}

TEST(config, every_key_is_accepted) {
    const std::map<std::string, std::string> sample = {
        {"mode", "local"},        {"memory_rule", "tenth"}, {"include_triple", "true"}, {"matrices", "self"},
        {"badloc", "self"},       {"fixtures_dir", "f"},    {"out_dir", "o"},           {"matrix_dir", "m"},
        {"expectations", "e"},    {"workers", "2"},         {"serial", "false"},        {"levels", "2"},
        {"grid_points", "2"},     {"grid_lo", "1e-6"},      {"grid_hi", "1e-3"},
    };
    EXPECT_EQ(sample.size(), config_keys().size());
    for (const auto &k : config_keys()) {
        RunConfig c;
        ASSERT_TRUE(sample.count(k)) << k;
        EXPECT_NO_THROW(set_config_value(c, k, sample.at(k))) << k;
    }
}

TEST(config, expectations) {
    Expectations e = parse_expectations("# header\na.b 27 0\nc 1.94e-5 0.03\n");
    ASSERT_EQ(e.size(), 2u);
    EXPECT_TRUE(e["a.b"].holds(27));
    EXPECT_FALSE(e["a.b"].holds(26));
    EXPECT_TRUE(e["c"].holds(1.99e-5));
    EXPECT_FALSE(e["c"].holds(2.01e-5));
    EXPECT_THROW(parse_expectations("x 1\n"), ConfigError);
    EXPECT_THROW(parse_expectations("x 1 0\nx 2 0\n"), ConfigError);
    EXPECT_THROW(parse_expectations("x 1 -1\n"), ConfigError);
}

TEST(config, shipped_expectations_parse) {
    Expectations e = read_expectations(RunConfig{}.expectations_path());
    EXPECT_EQ(e.at("local.ec_duration").value, 27);
    EXPECT_EQ(e.at("nonlocal.ec_duration").value, 21);
    EXPECT_EQ(e.at("map2d.2b").value, 55997);
}

TEST(config, check_rows) {
    Expectations e = parse_expectations("local.ec_duration 27 0\n");
    EXPECT_EQ(check_value(e, "local.ec_duration", "local 1-EC", "timesteps", 27).str(),
              "local 1-EC: 27 timesteps PASS");
    EXPECT_EQ(check_value(e, "local.ec_duration", "local 1-EC", "timesteps", 26).str(),
              "local 1-EC: 26 timesteps (expected 27) FAIL");
    EXPECT_EQ(check_value(e, "missing", "x", "", 1).str(), "x: 1 INFO");
}
