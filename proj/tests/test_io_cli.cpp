#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rtcover/cli.hpp"
#include "rtcover/core.hpp"
#include "rtcover/generators.hpp"
#include "rtcover/instance_io.hpp"

using namespace rtcover;
using nlohmann::json;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const char* name) {
  return std::string("/tmp/rtcover_test_") + name + ".json";
}

}  // namespace

TEST_CASE("serialization round-trips byte-identically") {
  for (auto make : {+[] { return h_r_ell(6, 2).graph; },
                    +[] { return truncated_projective_plane(3).graph; },
                    +[] { return affine_lines_dual(2, 3).graph; },
                    +[] { return complete_partite({1, 2, 2}); },
                    +[] { return random_rt_graph(6, 2, 10, 5, 3).graph; }}) {
    PartitionedHypergraph h = make();
    std::string text = serialize_instance(h);
    InstanceFile parsed = parse_instance(text);
    CHECK(parsed.graph.r() == h.r());
    CHECK(parsed.graph.part_sizes() == h.part_sizes());
    CHECK(parsed.graph.edge_count() == h.edge_count());
    CHECK(validate(parsed.graph).empty());
    CHECK(serialize_instance(parsed.graph) == text);
  }
}

TEST_CASE("metadata survives the round trip") {
  auto [h, meta] = h_r_ell(5, 1);
  std::string text = serialize_instance(h, metadata_to_json(meta));
  InstanceFile parsed = parse_instance(text);
  REQUIRE(parsed.metadata.has_value());
  CHECK((*parsed.metadata)["family"] == "hrl");
  CHECK(serialize_instance(parsed.graph, parsed.metadata) == text);
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS_AS(parse_instance("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("{\"format\":\"other\"}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("{\"format\":\"rtgraph-v1\",\"r\":2}"),
                  std::invalid_argument);
}

TEST_CASE("gen writes canonical instances") {
  std::string path = temp_path("gen_hrl");
  CliRun run = cli({"gen", "--family", "hrl", "--r", "6", "--ell", "2",
                    "--out", path});
  REQUIRE(run.exit_code == 0);
  InstanceFile file = load_instance(path);
  CHECK(file.graph.r() == 6);
  CHECK(file.graph.edge_count() == 15);  // C(6,4)
  REQUIRE(file.metadata.has_value());
  CHECK((*file.metadata)["claimed_tau"] == 3);

  // canonical: sorted edges, byte-stable rewrite
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(serialize_instance(file.graph, file.metadata) == buf.str());
  std::remove(path.c_str());
}

TEST_CASE("gen tpp and blowup pipeline") {
  std::string tpp = temp_path("tpp2");
  CHECK(cli({"gen", "--family", "tpp", "--q", "2", "--out", tpp}).exit_code ==
        0);
  InstanceFile file = load_instance(tpp);
  CHECK(file.graph.edge_count() == 4);

  std::string blown = temp_path("blowup");
  CHECK(cli({"gen", "--family", "blowup", "--input", tpp, "--t", "2", "--out",
             blown})
            .exit_code == 0);
  InstanceFile bf = load_instance(blown);
  CHECK(bf.graph.r() == 6);
  CHECK(bf.graph.edge_count() == 4);
  REQUIRE(bf.metadata.has_value());
  CHECK((*bf.metadata)["guaranteed_t"] == 2);

  std::remove(tpp.c_str());
  std::remove(blown.c_str());
}

TEST_CASE("gen covers the remaining families") {
  std::string ad = temp_path("gen_ad");
  CHECK(cli({"gen", "--family", "affine-dual", "--q", "2", "--n", "3",
             "--out", ad})
            .exit_code == 0);
  CHECK(load_instance(ad).graph.r() == 7);

  std::string cp = temp_path("gen_cp");
  CHECK(cli({"gen", "--family", "complete", "--parts", "1,2,2", "--out", cp})
            .exit_code == 0);
  CHECK(load_instance(cp).graph.edge_count() == 4);

  std::string ext = temp_path("gen_ext");
  CHECK(cli({"gen", "--family", "extend", "--input", cp, "--a", "2", "--out",
             ext})
            .exit_code == 0);
  CHECK(load_instance(ext).graph.r() == 5);

  std::string rnd = temp_path("gen_rnd");
  CHECK(cli({"gen", "--family", "random", "--r", "6", "--t", "2", "--edges",
             "9", "--seed", "4", "--part-size", "3", "--out", rnd})
            .exit_code == 0);
  InstanceFile rf = load_instance(rnd);
  REQUIRE(rf.metadata.has_value());
  CHECK((*rf.metadata)["params"]["achieved_edges"] == rf.graph.edge_count());

  for (const auto& p : {ad, cp, ext, rnd}) std::remove(p.c_str());
}

TEST_CASE("gen rejects bad parameters") {
  CHECK(cli({"gen", "--family", "nosuch"}).exit_code == 64);
  CHECK(cli({"gen", "--family", "tpp", "--q", "6"}).exit_code == 64);
  CHECK(cli({"gen"}).exit_code == 64);
}

TEST_CASE("verify reports intersection levels") {
  std::string path = temp_path("verify");
  REQUIRE(cli({"gen", "--family", "hrl", "--r", "6", "--ell", "2", "--out",
               path})
              .exit_code == 0);
  CHECK(cli({"verify", "--input", path, "--t", "2"}).exit_code == 0);
  CHECK(cli({"verify", "--input", path, "--t", "3"}).exit_code == 1);

  std::string tpp = temp_path("verify_tpp");
  REQUIRE(cli({"gen", "--family", "tpp", "--q", "2", "--out", tpp})
              .exit_code == 0);
  CliRun strict = cli({"verify", "--input", tpp, "--strict"});
  CHECK(strict.exit_code == 0);
  CHECK(json::parse(strict.out)["checks"][1]["t"] == 1);

  std::remove(path.c_str());
  std::remove(tpp.c_str());
}

TEST_CASE("verify kwise flag") {
  std::string path = temp_path("verify_kwise");
  REQUIRE(cli({"gen", "--family", "hrl", "--r", "7", "--ell", "2", "--out",
               path})
              .exit_code == 0);
  CHECK(cli({"verify", "--input", path, "--t", "1", "--k", "3"}).exit_code ==
        0);
  CHECK(cli({"verify", "--input", path, "--t", "2", "--k", "3"}).exit_code ==
        1);
  std::remove(path.c_str());
}

TEST_CASE("solve emits the exact value and exits 2 on budget exhaustion") {
  std::string path = temp_path("solve");
  REQUIRE(cli({"gen", "--family", "hrl", "--r", "6", "--ell", "2", "--out",
               path})
              .exit_code == 0);
  CliRun run = cli({"solve", "--input", path});
  CHECK(run.exit_code == 0);
  json doc = json::parse(run.out);
  CHECK(doc["tau_s"] == 3);
  CHECK(doc["status"] == "exact");

  CliRun starved = cli({"solve", "--input", path, "--budget", "2"});
  CHECK(starved.exit_code == 2);
  CHECK(json::parse(starved.out)["status"] == "unknown");

  CliRun s2 = cli({"solve", "--input", path, "--s", "2", "--parallel", "2"});
  CHECK(s2.exit_code == 0);
  std::remove(path.c_str());
}

TEST_CASE("cover methods and re-validation") {
  std::string path = temp_path("cover");
  REQUIRE(cli({"gen", "--family", "hrl", "--r", "6", "--ell", "2", "--out",
               path})
              .exit_code == 0);

  CliRun auto_run = cli({"cover", "--input", path, "--t", "2"});
  CHECK(auto_run.exit_code == 0);
  json doc = json::parse(auto_run.out);
  CHECK(doc["validated"] == true);
  CHECK(doc["size"] <= 4);

  CliRun kwise = cli({"cover", "--input", temp_path("cover_h72"), "--t", "1",
                      "--k", "3", "--method", "kwise"});
  // file missing: usage error
  CHECK(kwise.exit_code == 64);
  REQUIRE(cli({"gen", "--family", "hrl", "--r", "7", "--ell", "2", "--out",
               temp_path("cover_h72")})
              .exit_code == 0);
  kwise = cli({"cover", "--input", temp_path("cover_h72"), "--t", "1", "--k",
               "3", "--method", "kwise"});
  CHECK(kwise.exit_code == 0);
  CHECK(json::parse(kwise.out)["size"] == 3);

  CliRun explicit_pair = cli({"cover", "--input", path, "--t", "2",
                              "--method", "two-edge", "--edges", "0,3"});
  CHECK(explicit_pair.exit_code == 0);
  CHECK(json::parse(explicit_pair.out)["validated"] == true);

  CHECK(cli({"cover", "--input", path, "--t", "2", "--method", "nosuch"})
            .exit_code == 64);
  // explicit method with violated preconditions errors out
  CHECK(cli({"cover", "--input", path, "--t", "2", "--method", "kwise"})
            .exit_code == 64);
  CHECK(cli({"cover", "--input", path, "--t", "4", "--method", "two-edge"})
            .exit_code == 64);

  std::remove(path.c_str());
  std::remove(temp_path("cover_h72").c_str());
}

TEST_CASE("bounds command surfaces the conjecture status") {
  CliRun run = cli({"bounds", "--r", "5", "--t", "2"});
  CHECK(run.exit_code == 0);
  json doc = json::parse(run.out);
  CHECK(doc["lower"]["value"] == 2);
  CHECK(doc["upper"]["value"] == 2);
  CHECK(doc["status"] == "proved");

  json exceptional =
      json::parse(cli({"bounds", "--r", "12", "--t", "3"}).out);
  CHECK(exceptional["status"] == "open_exceptional");

  json regular =
      json::parse(cli({"bounds", "--r", "7", "--t", "1", "--d", "2"}).out);
  CHECK(regular["regular"]["value"] == 4);

  json degree = json::parse(
      cli({"bounds", "--r", "7", "--t", "1", "--delta", "2", "--Delta", "2"})
          .out);
  CHECK(degree["degree"]["value"] == 4);

  json scover =
      json::parse(cli({"bounds", "--r", "6", "--t", "2", "--s", "2"}).out);
  bool found_39 = false;
  for (const auto& b : scover["scover"]) {
    if (b["source"] == "prop-3.9") {
      found_39 = true;
      CHECK(b["value"] == 4);
    }
  }
  CHECK(found_39);

  json strict_in =
      json::parse(cli({"bounds", "--r", "9", "--t", "2", "--strict"}).out);
  CHECK(strict_in["strict"]["value"] == 7);
  json strict_out =
      json::parse(cli({"bounds", "--r", "10", "--t", "2", "--strict"}).out);
  CHECK(strict_out["strict"].is_null());

  // the degree options only make sense together
  CHECK(cli({"bounds", "--r", "7", "--t", "1", "--delta", "2"}).exit_code ==
        64);
}

TEST_CASE("report command emits the csv grid") {
  CliRun run = cli({"report", "--steps", "12"});
  CHECK(run.exit_code == 0);
  std::istringstream lines(run.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "alpha,lower,upper");
  std::string row;
  int count = 0;
  bool exact_third = false;
  while (std::getline(lines, row)) {
    ++count;
    if (row == "0.333333,0.333333,0.333333") exact_third = true;
  }
  CHECK(count == 12);
  CHECK(exact_third);

  std::string path = "/tmp/rtcover_test_report.csv";
  CHECK(cli({"report", "--steps", "4", "--out", path}).exit_code == 0);
  std::ifstream file(path);
  std::string first;
  std::getline(file, first);
  CHECK(first == "alpha,lower,upper");
  std::remove(path.c_str());
}

TEST_CASE("the environment variable overrides the default budget") {
  std::string path = temp_path("env_budget");
  REQUIRE(cli({"gen", "--family", "hrl", "--r", "6", "--ell", "2", "--out",
               path})
              .exit_code == 0);
  setenv("RYSER_STEP_BUDGET", "2", 1);
  CliRun starved = cli({"solve", "--input", path});
  unsetenv("RYSER_STEP_BUDGET");
  CHECK(starved.exit_code == 2);
  CHECK(json::parse(starved.out)["status"] == "unknown");
  // explicit flag still wins
  CHECK(cli({"solve", "--input", path, "--budget", "100000"}).exit_code == 0);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 64") {
  CHECK(cli({}).exit_code == 64);
  CHECK(cli({"frobnicate"}).exit_code == 64);
  CHECK(cli({"bounds", "--r", "5"}).exit_code == 64);
  CHECK(cli({"solve"}).exit_code == 64);
}
