#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "scenery/io.hpp"

using namespace scenery;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("scenery_test_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("envelope and exit codes") {
  const Run r = run({"condition", "--group", "Z2", "--gamma", "[0.25,0.75]", "--n", "2"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = r.json();
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["command"] == "condition");
  CHECK(j["result"]["verdict"] == "condition_holds");
  CHECK(j["result"]["rank"] == 4);
  CHECK(run({"condition", "--group", "Z2", "--gamma", "uniform"}).json()["result"]["verdict"] ==
        "condition_fails");
  CHECK(run({"nonsense"}).code == cli::kExitUsage);
  CHECK(run({"condition"}).code == cli::kExitUsage);
  CHECK(run({"condition", "--group", "Z2", "--gamma", "[0.5,0.6]"}).code == cli::kExitValidation);
  CHECK(run({"condition", "--group", "A7"}).code == cli::kExitValidation);
  CHECK(run({"multispectrum", "--group", "Z12", "--scenery", "110000000000", "--n", "9"}).code ==
        cli::kExitCap);
  CHECK(run({"multispectrum", "--group", "Z4", "--scenery", "1100", "--n", "4", "--max-entries",
             "100"})
            .code == cli::kExitCap);
}

TEST_CASE("csv output") {
  const Run r = run({"condition", "--group", "D3", "--gamma", "random:3", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("group,n,lag_bound", 0) == 0);
  CHECK(r.out.find("condition_fails") != std::string::npos);
  const Run t = run({"theorem2", "--group", "Q8", "--trials", "3", "--format", "csv"});
  CHECK(t.code == 0);
  CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 1 + 3 + 1 + 8);
  CHECK(run({"ft", "--group", "Z2", "--function", "[1,2]", "--format", "csv"}).code ==
        cli::kExitUsage);
}

TEST_CASE("theorem2 on an abelian group is rejected") {
  CHECK(run({"theorem2", "--group", "Z4"}).code == cli::kExitValidation);
}

TEST_CASE("group listing and verification") {
  const Json list = run({"group", "list"}).json()["result"];
  CHECK(list.size() == builtin_names().size());
  const fs::path bad = temp_file("bad_group.json",
                                 R"({"name":"loop","table":[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],)"
                                 R"([3,2,4,0,1],[4,3,1,2,0]]})");
  const Run r = run({"group", "verify", "--group", bad.string()});
  CHECK(r.code == cli::kExitValidation);
  CHECK_FALSE(r.json()["result"]["ok"].get<bool>());
  const fs::path good = temp_file("good_group.json", group_to_json(build_builtin("Z3")).dump());
  CHECK(run({"group", "verify", "--group", good.string()}).code == 0);
}

TEST_CASE("custom group with irreps file") {
  const FiniteGroup d3 = build_builtin("D3");
  Json gj = group_to_json(d3);
  gj["name"] = "my_s3";
  const fs::path gp = temp_file("my_s3.json", gj.dump());
  CHECK(run({"condition", "--group", gp.string()}).code == cli::kExitValidation);
  const fs::path ip =
      temp_file("my_s3_irreps.json", irreps_to_json(irreducible_representations(d3)).dump());
  const Run r = run({"condition", "--group", gp.string(), "--irreps", ip.string()});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"]["verdict"] == "condition_fails");
  CHECK(r.json()["result"]["theoretical_rank_bound"] == 5);
}

TEST_CASE("multispectrum and reconstruction through files") {
  const Run ms = run({"multispectrum", "--group", "D3", "--scenery", "110100", "--n", "6"});
  REQUIRE(ms.code == 0);
  const fs::path tp = temp_file("d3_tensor.json", ms.json()["result"].dump());
  const Run rec = run({"reconstruct", "--group", "D3", "--tensor", tp.string()});
  REQUIRE(rec.code == 0);
  const Scenery got = Scenery::parse(rec.json()["result"]["scenery"].get<std::string>());
  CHECK(shift_equivalent(build_builtin("D3"), got, Scenery::parse("110100")).has_value());
  const Run direct = run({"reconstruct", "--group", "D3", "--from-scenery", "110100"});
  CHECK(direct.json()["result"]["shift_equivalent_to_input"] == true);
}

TEST_CASE("statistics commands") {
  const Run b = run({"bstats", "--group", "Q8", "--scenery", "11001010", "--gamma", "random:2",
                     "--lags", "1,2"});
  REQUIRE(b.code == 0);
  CHECK(b.json()["result"]["abs_difference"].get<double>() < 1e-12);
  const Run a = run({"autocorr", "--group", "Z4", "--scenery", "1100"});
  CHECK(a.json()["result"]["values"] == Json::array({2, 1, 0, 1}));
  const Run f = run({"ft", "--group", "Z2", "--function", "[1,2]"});
  REQUIRE(f.code == 0);
  CHECK(f.json()["result"].size() == 2);
  const Run i = run({"irreps", "--group", "D4"});
  CHECK(i.json()["result"]["sum_degree_squares"] == 8);
  const Run d = run({"distinguish", "--group", "Z4", "--f1", "1100", "--f2", "1010", "--gamma",
                     "[0,0.5,0,0.5]"});
  CHECK(d.json()["result"]["verdict"] == "distinguished");
  const Run w = run({"witness", "--group", "Z2", "--gamma", "uniform"});
  CHECK(w.json()["result"]["residual"].get<double>() < 1e-8);
  const Run s = run({"sample", "--group", "Z3", "--scenery", "110", "--horizon", "7", "--seed", "3"});
  CHECK(s.json()["result"]["observations"].get<std::string>().size() == 7);
}

TEST_CASE("explore output is reproducible") {
  const std::vector<std::string> args{"explore", "--group", "D3", "--gamma", "random:11",
                                      "--order-bound", "2", "--horizon", "4"};
  const Run a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["result"]["all_consistent"] == true);
  const Run csv = run({"explore", "--group", "Z4", "--gamma", "uniform", "--format", "csv"});
  CHECK(csv.out.find("0011,0101,false,indistinguishable_up_to") != std::string::npos);
}

TEST_CASE("--out writes a file") {
  const fs::path p = fs::temp_directory_path() / "scenery_test_out.json";
  fs::remove(p);
  const Run r = run({"irreps", "--group", "Z3", "--out", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_json_file(p)["command"] == "irreps");
}
