#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cactus/bijection.hpp"
#include "cactus/formula.hpp"
#include "cactus/io.hpp"
#include "cactus/jackson.hpp"
#include "cactus/verify.hpp"

namespace {

using namespace cactus;

void write_out(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << data;
}

std::string read_in(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open input file: " + path);
    buf << is.rdbuf();
  }
  return buf.str();
}

std::string render(const CountTable& t, const std::string& format, const std::string& key) {
  if (format == "json") return count_table_to_json(t, key).dump(2) + "\n";
  return count_table_to_csv(t, key);
}

struct Options {
  int n = 1;
  int r = 2;
  std::string by = "p";
  std::string form = "product";
  std::string format = "csv";
  std::string output;
  std::string input;
  std::string suite = "all";
  std::string mode;
  long long budget = 100000000;
  int n_max = -1;
  int r_max = -1;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts, formulas and bijections for long-cycle factorizations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget", o.budget, "elementary-step guard for enumerations")
      ->envname("BUDGET");

  auto add_table_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", o.output, "output file (default stdout)");
  };

  CLI::App* count = app.add_subcommand("count", "brute-force factorization tables");
  count->add_option("--n", o.n, "size of the long cycle")->required();
  count->add_option("--r", o.r, "number of factors")->required();
  count->add_option("--by", o.by, "p (cycle counts) or type (cycle types)")
      ->check(CLI::IsMember({"p", "type"}));
  add_table_flags(count);

  CLI::App* formula = app.add_subcommand("formula", "determinant-series tables");
  formula->add_option("--n", o.n, "size of the long cycle")->required();
  formula->add_option("--r", o.r, "number of factors")->required();
  add_table_flags(formula);

  CLI::App* jackson = app.add_subcommand("jackson", "genus-zero series coefficient tables");
  jackson->add_option("--n", o.n, "size of the long cycle")->required();
  jackson->add_option("--r", o.r, "number of factors")->required();
  jackson->add_option("--form", o.form, "product or multinomial")
      ->check(CLI::IsMember({"product", "multinomial"}));
  add_table_flags(jackson);

  CLI::App* bij = app.add_subcommand("bijection", "partitioned cactus <-> cactus tree");
  bij->require_subcommand(1);
  CLI::App* bmap = bij->add_subcommand("map", "partitioned cactus JSON -> tree JSON");
  bmap->add_option("--input", o.input, "partitioned cactus JSON file ('-' = stdin)")->required();
  bmap->add_option("--output", o.output, "output file (default stdout)");
  bmap->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  CLI::App* binv = bij->add_subcommand("invert", "tree JSON -> partitioned cactus JSON");
  binv->add_option("--input", o.input, "tree JSON file ('-' = stdin)")->required();
  binv->add_option("--output", o.output, "output file (default stdout)");
  binv->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  CLI::App* brt = bij->add_subcommand("roundtrip", "exhaustive roundtrip report for (n, r)");
  brt->add_option("--n", o.n, "size of the long cycle")->required();
  brt->add_option("--r", o.r, "number of factors")->required();

  CLI::App* verify = app.add_subcommand("verify", "internal consistency suites");
  verify->add_option("--suite", o.suite, "delta|formula|jackson|bijection|theorem2|all")
      ->check(CLI::IsMember({"delta", "formula", "jackson", "bijection", "theorem2", "all"}));
  verify->add_option("--n-max", o.n_max, "override the default n ceiling");
  verify->add_option("--r-max", o.r_max, "drop grid entries with larger r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems -> 2
  }

  Budget budget;
  budget.limit = o.budget;

  try {
    if (*count) {
      if (o.by == "type") {
        const TypeTable t = count_by_cycle_types(o.n, o.r, budget);
        write_out(o.output, o.format == "json" ? type_table_to_json(t).dump(2) + "\n"
                                               : type_table_to_csv(t));
      } else {
        write_out(o.output, render(count_by_cycle_counts(o.n, o.r, budget), o.format, "p"));
      }
    } else if (*formula) {
      write_out(o.output, render(k_by_cycle_counts(o.n, o.r), o.format, "p"));
    } else if (*jackson) {
      const JacksonForm form =
          o.form == "multinomial" ? JacksonForm::multinomial : JacksonForm::product;
      write_out(o.output, render(jackson_table(o.n, o.r, form, budget), o.format, "p"));
    } else if (*bmap) {
      const PartitionedCactus pc = pc_from_json(Json::parse(read_in(o.input)));
      const CactusTree t = forward(pc);
      write_out(o.output, o.format == "dot" ? tree_to_dot(t) : tree_to_json(t).dump(2) + "\n");
    } else if (*binv) {
      const CactusTree t = tree_from_json(Json::parse(read_in(o.input)));
      const PartitionedCactus pc = inverse(t);
      write_out(o.output,
                o.format == "dot" ? cactus_to_dot(pc.cactus) : pc_to_json(pc).dump(2) + "\n");
    } else if (*brt) {
      long long checked = 0, failures = 0;
      for_each_partitioned_cactus(o.n, o.r, budget, [&](const PartitionedCactus& pc) {
        ++checked;
        try {
          if (inverse(forward(pc)) != pc) ++failures;
        } catch (const std::exception&) {
          ++failures;
        }
      });
      Json rep;
      rep["checked"] = checked;
      rep["failures"] = failures;
      std::cout << rep.dump(2) << "\n";
      return failures == 0 ? 0 : 1;
    } else if (*verify) {
      std::optional<int> nm, rm;
      if (o.n_max >= 0) nm = o.n_max;
      if (o.r_max >= 0) rm = o.r_max;
      bool all_pass = true;
      for (const CheckResult& res : run_suite(*suite_from_name(o.suite), nm, rm, budget)) {
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name << ": " << res.detail << " ["
                  << res.ms << " ms]\n";
        all_pass = all_pass && res.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const BudgetError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const TreeError& e) {
    std::cerr << "malformed tree: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
