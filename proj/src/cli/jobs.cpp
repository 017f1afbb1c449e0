#include "polyred/cli/jobs.hpp"

#include "polyred/cgroup/cgroup.hpp"
#include "polyred/error.hpp"
#include "polyred/mobius/mobius.hpp"
#include "polyred/ortho/form.hpp"
#include "polyred/ortho/groups.hpp"
#include "polyred/rings/legendre.hpp"
#include "polyred/rings/parse.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <future>
#include <sstream>

namespace polyred {

namespace {

bool names_tau_element(std::string_view text) {
  return text.find('t') != std::string_view::npos || text.find('(') != std::string_view::npos;
}

std::optional<std::uint64_t> as_unsigned(std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

bool is_353(const Diagram& d) { return d.symbol() == "[3,5,3]"; }

nlohmann::json error_row(const std::exception& e) {
  nlohmann::json j;
  j["error"] = e.what();
  if (auto* err = dynamic_cast<const Error*>(&e)) j["error_kind"] = to_string(err->kind());
  return j;
}

std::vector<int> all_indices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

std::vector<Matrix> duality_candidates(const Diagram& d, const Ring& ring) {
  if (auto g = explicit_duality_map(d)) return {reduce_matrix(*g, ring)};
  return {};
}

struct AtlasTarget {
  std::string modulus;
  std::uint64_t q = 0;
  bool second_conjugate = false;
};

std::vector<AtlasTarget> atlas_targets(const Diagram& d, const JobSpec& job) {
  std::vector<AtlasTarget> out;
  for (const auto& m : job.moduli) out.push_back({m, 0, false});
  if (job.primes.empty()) return out;
  auto dots = job.primes.find("..");
  auto lo = as_unsigned(job.primes.substr(0, dots));
  auto hi = dots == std::string::npos ? lo : as_unsigned(job.primes.substr(dots + 2));
  if (!lo || !hi) throw Error(ErrorKind::Parse, "prime range must look like lo..hi");
  for (std::uint64_t p = std::max<std::uint64_t>(*lo, 2); p <= *hi; ++p) {
    if (!is_prime(Integer(p))) continue;
    if (!d.over_tau()) {
      if (job.kind == "all" || job.kind == "rational") out.push_back({std::to_string(p), p, false});
      continue;
    }
    std::uint64_t r = p % 5;
    std::string kind = p == 5 ? "ramified" : (r == 2 || r == 3) ? "inert" : "split";
    if (job.kind != "all" && job.kind != kind) continue;
    if (kind == "ramified") {
      out.push_back({"sqrt5", 5, false});
    } else if (kind == "inert") {
      out.push_back({std::to_string(p), p * p, false});
    } else {
      QuadInt pi = tau_split_prime_over(p);
      out.push_back({pi.to_string(), p, false});
      out.push_back({tau_conj(pi).to_string(), p, true});
    }
  }
  return out;
}

nlohmann::json atlas_row(const Diagram& d, const AtlasTarget& t, std::uint64_t budget) {
  nlohmann::json row;
  row["modulus"] = t.modulus;
  row["budget"] = budget;
  try {
    Ring ring = ring_for_modulus(d, t.modulus);
    row["ring"] = ring.description();
    row["q"] = ring.order();
    if (d.over_tau()) {
      QuadInt pi = names_tau_element(t.modulus) || t.modulus == "sqrt5" ? parse_quadint(t.modulus)
                                                                         : QuadInt(std::stoll(t.modulus));
      row["prime_kind"] = to_string(tau_classify_prime(pi).kind);
      if (is_353(d)) {
        try {
          row["epsilon_formula"] = epsilon_353(pi);
        } catch (const Error& e) {
          row["epsilon_formula"] = to_string(e.kind());
        }
        if (t.second_conjugate && t.q != 11) {
          row["conjugate_epsilon_product"] = epsilon_353(tau_conj(pi)) * epsilon_353(pi);
          row["legendre_q_11"] = legendre(Integer(t.q), 11);
        }
      }
    }
    Matrix b2 = reduce_matrix(cartan_data(d).B2, ring);
    std::optional<FormAnalysis> fa;
    if (ring.is_field() && ring.characteristic() != 2) {
      fa = analyze_form(b2, ring);
      row["epsilon_form"] = fa->epsilon ? nlohmann::json(*fa->epsilon) : nlohmann::json("undefined");
      if (fa->epsilon && !fa->singular()) {
        try {
          row["formula_order"] = to_string(order_formula(LabelKind::O1, d.rank(), ring.order(), *fa->epsilon));
        } catch (const Error&) {
        }
      }
    }
    RingPtr shared = share(ring);
    auto red = reduce_generators(reflection_generators(d), ring);
    try {
      MatrixGroup G = MatrixGroup::closure(shared, red.mats, budget);
      row["budget_status"] = "ok";
      row["order"] = G.order();
      GeneratorSystem sys(shared, red.mats, {}, budget);
      sys.seed(all_indices(d.rank()), std::move(G));
      row["is_cgroup"] = verify_string_cgroup(sys).is_cgroup;
    } catch (const BudgetExceeded& e) {
      row["budget_status"] = "BudgetExceeded";
      row["partial_count"] = e.partial_count();
    }
  } catch (const std::exception& e) {
    row["error"] = e.what();
  }
  return row;
}

std::string cell(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace

std::vector<std::string> JobSpec::to_args() const {
  std::vector<std::string> a{command};
  if (!group.empty()) a.insert(a.end(), {"--group", group});
  for (const auto& m : moduli) a.insert(a.end(), {"--mod", m});
  for (const auto& i : ideals) a.insert(a.end(), {"--ideal", i});
  if (!primes.empty()) a.insert(a.end(), {"--primes", primes});
  if (kind != "all") a.insert(a.end(), {"--kind", kind});
  a.insert(a.end(), {"--budget", std::to_string(budget)});
  if (search_duality) a.push_back("--search-duality");
  if (!out.empty()) a.insert(a.end(), {"--out", out});
  a.insert(a.end(), {"--format", format});
  return a;
}

JobSpec parse_job(const std::vector<std::string>& args) {
  JobSpec job;
  CLI::App app{"Modular reductions of hyperbolic reflection groups and the polytopes they give", "polyred"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", job.budget, "element budget for each closure");
    sub->add_option("--out", job.out, "write output to this file");
    sub->add_option("--format", job.format, "jsonl or table")->check(CLI::IsMember({"jsonl", "table"}));
  };
  const std::pair<const char*, const char*> subs[] = {
      {"reduce", "closure, label, C-group verdict and f-vector per modulus"},
      {"verify", "as reduce, failing with exit code 4 on a non C-group"},
      {"hemi", "quotient by the radical of a corank-1 form"}};
  for (auto [name, about] : subs) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("--group", job.group, "diagram symbol, e.g. \"[3,5,3]\"")->required();
    sub->add_option("--mod", job.moduli, "modulus (repeatable)")->required();
    if (std::string(name) != "hemi") sub->add_flag("--search-duality", job.search_duality);
    add_common(sub);
  }
  auto* mob = app.add_subcommand("mobius", "[4,4,3] rotation groups over Z[i]/J");
  mob->add_option("--ideal", job.ideals, "full:m or principal:b,c (repeatable)")->required();
  add_common(mob);
  auto* atlas = app.add_subcommand("atlas", "sweep a diagram over many primes");
  atlas->add_option("--group", job.group)->required();
  atlas->add_option("--mod", job.moduli, "explicit moduli");
  atlas->add_option("--primes", job.primes, "rational primes lo..hi");
  atlas->add_option("--kind", job.kind)->check(CLI::IsMember({"all", "inert", "split", "ramified", "rational"}));
  add_common(atlas);
  job.budget = kDefaultBudget;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    throw HelpRequested(sub->help());
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  job.command = app.get_subcommands().front()->get_name();
  if (job.command == "atlas" && job.budget == kDefaultBudget && !atlas->count("--budget")) job.budget = 200'000;
  return job;
}

Ring ring_for_modulus(const Diagram& d, std::string_view modulus) {
  if (names_tau_element(modulus) || modulus == "sqrt5") return Ring::tau_residue(parse_quadint(modulus));
  auto n = as_unsigned(modulus);
  if (!n || *n < 2) throw Error(ErrorKind::Parse, "modulus must be an integer >= 2 or an element of Z[tau]");
  if (d.over_tau()) return Ring::tau_residue(QuadInt(static_cast<long long>(*n)));
  if (*n > 0xffff) throw Error(ErrorKind::Unsupported, "modulus too large");
  return is_prime(Integer(*n)) ? Ring::prime_field(static_cast<std::uint32_t>(*n))
                               : Ring::integers_mod(static_cast<std::uint32_t>(*n));
}

int exit_code_for(const std::exception& e) {
  auto* err = dynamic_cast<const Error*>(&e);
  if (!err) return kExitOther;
  switch (err->kind()) {
    case ErrorKind::Parse:
    case ErrorKind::BadSymbol:
    case ErrorKind::LabelViolation:
    case ErrorKind::BadIdeal:
    case ErrorKind::NotPrime:
      return kExitParse;
    case ErrorKind::BudgetExceeded:
      return kExitBudget;
    case ErrorKind::NotCGroup:
    case ErrorKind::RelationFailure:
    case ErrorKind::NotCorankOne:
      return kExitVerify;
    default:
      return kExitOther;
  }
}

nlohmann::json reduce_row(const Diagram& d, const std::string& modulus, std::uint64_t budget,
                          bool search_duality) {
  Ring ring = ring_for_modulus(d, modulus);
  RingPtr shared = share(ring);
  auto red = reduce_generators(reflection_generators(d), ring);
  nlohmann::json row;
  row["group_symbol"] = d.symbol();
  row["labels"] = d.to_json()["labels"];
  row["modulus"] = modulus;
  row["ring"] = ring.description();
  row["budget"] = budget;
  if (red.any_collapsed()) row["collapsed_generators"] = red.collapsed;

  if (ring.is_field() && ring.characteristic() != 2) {
    Matrix b2 = reduce_matrix(cartan_data(d).B2, ring);
    row["form"] = analyze_form(b2, ring).to_json(ring);
  }
  if (is_353(d) && (names_tau_element(modulus) || modulus == "sqrt5")) {
    try {
      row["epsilon_formula"] = epsilon_353(parse_quadint(modulus));
    } catch (const Error&) {
    }
  }

  MatrixGroup G = [&] {
    try {
      return MatrixGroup::closure(shared, red.mats, budget);
    } catch (const BudgetExceeded& e) {
      row["budget_status"] = "BudgetExceeded";
      row["partial_count"] = e.partial_count();
      throw;
    }
  }();
  row["budget_status"] = "ok";
  row["order"] = G.order();
  GroupLabel label = identify_group(G, d);
  GeneratorSystem sys(shared, red.mats, {}, budget);
  sys.seed(all_indices(d.rank()), std::move(G));
  PolytopeReport report = polytope_report(sys, d.symbol(), modulus, label, true);
  if (report.is_cgroup)
    report.self_dual = self_dual_check(sys, duality_candidates(d, ring), search_duality);
  row.update(report.to_json());
  return row;
}

JobResult run_job(const JobSpec& job) {
  JobResult result;
  auto fail = [&](const std::exception& e, nlohmann::json row) {
    row.update(error_row(e));
    result.rows.push_back(std::move(row));
    result.exit_code = std::max(result.exit_code, exit_code_for(e));
  };
  std::optional<Diagram> d;
  if (!job.group.empty()) {
    try {
      d = parse_symbol(job.group);
    } catch (const std::exception& e) {
      fail(e, {{"command", job.command}, {"group_symbol", job.group}});
      return result;
    }
  }

  if (job.command == "reduce" || job.command == "verify" || job.command == "hemi") {
    for (const auto& m : job.moduli) {
      nlohmann::json base{{"command", job.command}, {"group_symbol", d->symbol()}, {"modulus", m},
                          {"budget", job.budget}};
      try {
        nlohmann::json row;
        if (job.command == "hemi") {
          row = hemi_quotient_pipeline(*d, ring_for_modulus(*d, m), m, job.budget).to_json();
          row["budget"] = job.budget;
          if (!row["is_cgroup"].get<bool>()) result.exit_code = std::max<int>(result.exit_code, kExitVerify);
        } else {
          row = reduce_row(*d, m, job.budget, job.search_duality);
          if (job.command == "verify" && !row["is_cgroup"].get<bool>())
            result.exit_code = std::max<int>(result.exit_code, kExitVerify);
        }
        row["command"] = job.command;
        result.rows.push_back(std::move(row));
      } catch (const BudgetExceeded& e) {
        base["budget_status"] = "BudgetExceeded";
        base["partial_count"] = e.partial_count();
        fail(e, base);
      } catch (const std::exception& e) {
        fail(e, base);
      }
    }
  } else if (job.command == "mobius") {
    for (const auto& text : job.ideals) {
      nlohmann::json base{{"command", job.command}, {"ideal", text}, {"budget", job.budget}};
      try {
        nlohmann::json row = build_mobius_polytope(parse_ideal(text), job.budget).to_json();
        row["command"] = job.command;
        row["budget"] = job.budget;
        if (!row["rotation"]["intersection_ok"].get<bool>())
          result.exit_code = std::max<int>(result.exit_code, kExitVerify);
        result.rows.push_back(std::move(row));
      } catch (const std::exception& e) {
        fail(e, base);
      }
    }
  } else if (job.command == "atlas") {
    std::vector<AtlasTarget> targets;
    try {
      targets = atlas_targets(*d, job);
    } catch (const std::exception& e) {
      fail(e, {{"command", job.command}});
      return result;
    }
    std::vector<std::future<nlohmann::json>> rows;
    for (const auto& t : targets)
      rows.push_back(std::async(std::launch::async, [&, t] { return atlas_row(*d, t, job.budget); }));
    for (auto& f : rows) {
      nlohmann::json row = f.get();
      row["command"] = job.command;
      row["group_symbol"] = d->symbol();
      result.rows.push_back(std::move(row));
    }
  } else {
    throw Error(ErrorKind::Parse, "unknown command " + job.command);
  }
  return result;
}

std::string render(const JobResult& result, const std::string& format) {
  std::ostringstream out;
  if (format == "jsonl") {
    for (const auto& row : result.rows) out << row.dump() << '\n';
    return out.str();
  }
  std::vector<std::string> cols;
  for (const auto& row : result.rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& row : result.rows)
      if (row.contains(cols[c])) width[c] = std::max(width[c], cell(row[cols[c]]).size());
  }
  auto line = [&](auto get) {
    std::string s;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string v = get(c);
      s += v + std::string(width[c] - v.size() + (c + 1 < cols.size() ? 2 : 0), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  if (!cols.empty()) line([&](std::size_t c) { return cols[c]; });
  for (const auto& row : result.rows)
    line([&](std::size_t c) { return row.contains(cols[c]) ? cell(row[cols[c]]) : std::string("-"); });
  return out.str();
}

}  // namespace polyred
