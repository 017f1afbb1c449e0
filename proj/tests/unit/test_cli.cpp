#include "doctest.h"

#include "polyred/cli/jobs.hpp"
#include "polyred/error.hpp"
#include "polyred/rings/legendre.hpp"

#include <random>

using namespace polyred;

namespace {

JobResult run(std::vector<std::string> args) { return run_job(parse_job(args)); }

}  // namespace

TEST_CASE("reduce rows") {
  auto r = run({"reduce", "--group", "[3,5,3]", "--mod", "2"});
  REQUIRE(r.rows.size() == 1);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.rows[0]["order"] == 8160);
  CHECK(r.rows[0]["group_label"]["label"] == "O(4,4,-1)");
  CHECK(r.rows[0]["is_cgroup"] == true);
  CHECK(r.rows[0]["self_dual"] == true);

  auto bad = run({"reduce", "--group", "[6,3,6]", "--mod", "5"});
  CHECK(bad.rows[0]["is_cgroup"] == false);
  CHECK(bad.exit_code == kExitOk);
  CHECK(run({"verify", "--group", "[6,3,6]", "--mod", "5"}).exit_code == kExitVerify);

  auto klein = run({"reduce", "--group", "[3,oo]", "--mod", "7", "--mod", "5"});
  REQUIRE(klein.rows.size() == 2);
  CHECK(klein.rows[0]["order"] == 336);
  CHECK(klein.rows[0]["schlafli"] == nlohmann::json::array({3, 7}));
  CHECK(klein.rows[1]["f_vector"] == nlohmann::json::array({12, 30, 20}));
}

TEST_CASE("exit codes") {
  CHECK(run({"reduce", "--group", "[3,5", "--mod", "2"}).exit_code == kExitParse);
  CHECK(run({"reduce", "--group", "[3,5,3]", "--mod", "5"}).exit_code == kExitParse);
  auto budget = run({"reduce", "--group", "[3,5,3]", "--mod", "3", "--budget", "100"});
  CHECK(budget.exit_code == kExitBudget);
  CHECK(budget.rows[0]["budget_status"] == "BudgetExceeded");
  CHECK(run({"hemi", "--group", "[3,5,3]", "--mod", "2"}).exit_code == kExitVerify);
  CHECK(run({"mobius", "--ideal", "principal:2,4"}).exit_code == kExitParse);
  bool threw = false;
  try {
    parse_job({"reduce", "--group", "[3,3]"});
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::Parse;
  }
  CHECK(threw);
}

TEST_CASE("hemi and mobius rows") {
  auto h = run({"hemi", "--group", "[5,3,5]", "--mod", "-(3+7*t)", "--budget", "20000"});
  REQUIRE(h.rows.size() == 1);
  CHECK(h.rows[0]["image_order"] == 3420);
  CHECK(h.rows[0]["notes"]["full_group"]["budget_status"] == "BudgetExceeded");
  auto m = run({"mobius", "--ideal", "full:3", "--ideal", "principal:1,8"});
  CHECK(m.rows[0]["projective_order"] == 360);
  CHECK(m.rows[0]["kind"] == "directly_regular");
  CHECK(m.rows[1]["facet"] == "(1,8)");
}

TEST_CASE("atlas") {
  auto empty = run({"atlas", "--group", "[3,5,3]", "--primes", "10..9"});
  CHECK(empty.rows.empty());
  CHECK(empty.exit_code == kExitOk);

  auto a = run({"atlas", "--group", "[3,5,3]", "--primes", "2..55", "--budget", "50"});
  int inert = 0, products = 0;
  for (const auto& row : a.rows) {
    CHECK_FALSE(row.contains("error"));
    std::uint64_t q = row["q"];
    if (row["prime_kind"] == "Inert" && q % 2 == 1) {
      std::uint64_t p = 2;
      while (p * p != q) ++p;
      CHECK(row["epsilon_formula"] == legendre(Integer(p), 11));
      CHECK(row["epsilon_form"] == row["epsilon_formula"]);
      ++inert;
    }
    if (row.contains("conjugate_epsilon_product")) {
      CHECK(row["conjugate_epsilon_product"] == legendre(Integer(q), 11));
      ++products;
    }
  }
  CHECK(inert == 9);
  CHECK(products == 4);  // 19, 29, 31, 41
  auto split = run({"atlas", "--group", "[3,5,3]", "--primes", "29..29", "--kind", "split", "--budget", "10"});
  REQUIRE(split.rows.size() == 2);
  CHECK(split.rows[1]["conjugate_epsilon_product"] == legendre(Integer(29), 11));
}

TEST_CASE("property: job specs round-trip and output is deterministic") {
  std::mt19937 rng(55);
  const std::vector<std::string> groups{"[3,5,3]", "[3,oo]", "[3,3,oo]", "[4,4]"};
  const std::vector<std::string> mods{"2", "3", "5", "7", "sqrt5", "-(2+5*t)"};
  for (int trial = 0; trial < 30; ++trial) {
    JobSpec s;
    s.command = std::vector<std::string>{"reduce", "verify", "hemi", "atlas"}[rng() % 4];
    s.group = groups[rng() % groups.size()];
    for (unsigned k = 0, n = 1 + rng() % 3; k < n; ++k) s.moduli.push_back(mods[rng() % mods.size()]);
    s.budget = 1000 + rng() % 5000;
    s.format = rng() % 2 ? "jsonl" : "table";
    if (s.command == "atlas" && rng() % 2) s.primes = "2..13";
    if (s.command == "atlas" && rng() % 2) s.kind = "inert";
    if ((s.command == "reduce" || s.command == "verify") && rng() % 2) s.search_duality = true;
    if (rng() % 3 == 0) s.out = "out.jsonl";
    CHECK(parse_job(s.to_args()) == s);
  }
  JobSpec j = parse_job({"reduce", "--group", "[3,3,oo]", "--mod", "3", "--mod", "5"});
  CHECK(render(run_job(j), "jsonl") == render(run_job(j), "jsonl"));
  CHECK(render(run_job(j), "table") == render(run_job(j), "table"));
}
