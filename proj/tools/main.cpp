// quivmod: exact Poincare polynomials and Euler characteristics of moduli of
// stable representations for Kronecker and weighted bipartite quivers, with
// cross-checked MPS / Reineke / closed-form routes.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "quivmod/cache.hpp"
#include "quivmod/closed_forms.hpp"
#include "quivmod/mps.hpp"
#include "quivmod/verify.hpp"

namespace {

using nlohmann::json;
using namespace quivmod;

struct CommonOpts {
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--cache-dir", opts.cache_dir,
                  "Result cache directory (default: $QUIVER_CACHE_DIR if set, else no cache)");
  cmd->add_flag("--no-cache", opts.no_cache, "Disable the result cache");
  cmd->add_option("--jobs", opts.jobs, "Worker threads for the enumeration core")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::unique_ptr<ResultCache> open_cache(const CommonOpts& opts) {
  if (opts.no_cache) return nullptr;
  std::string dir = opts.cache_dir;
  if (dir.empty()) {
    const char* env = std::getenv("QUIVER_CACHE_DIR");
    if (env && *env) dir = env;
  }
  if (dir.empty()) return nullptr;
  return std::make_unique<ResultCache>(dir);
}

void require_not_csv(const CommonOpts& opts) {
  if (opts.format == "csv")
    throw UsageError("csv format is only available for the 'table' subcommand");
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

json record_json(const InvariantRecord& rec) {
  json j;
  j["descriptor"] = rec.descriptor;
  j["dim"] = rec.dim.entries();
  j["poincare"] = rec.poincare.to_string("q");
  j["euler"] = rec.euler.get_str();
  j["schema_version"] = ResultCache::schema_version;
  return j;
}

InvariantRecord compute_record(const std::string& descriptor, const std::string& dim_text,
                               ReinekeEngine& engine) {
  Quiver q = Quiver::from_descriptor(descriptor);
  DimensionVector d;
  if (dim_text.empty()) {
    d = DimensionVector::ones(q.vertex_count());
  } else {
    try {
      d = DimensionVector::parse(dim_text);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (d.size() != q.vertex_count())
      throw UsageError("--dim has " + std::to_string(d.size()) + " entries but " + descriptor +
                       " has " + std::to_string(q.vertex_count()) + " vertices");
  }
  return engine.invariant(q, d);
}

int cmd_poincare(const std::string& descriptor, const std::string& dim_text,
                 const CommonOpts& opts, ReinekeEngine& engine) {
  require_not_csv(opts);
  InvariantRecord rec = compute_record(descriptor, dim_text, engine);
  if (opts.format == "json") {
    std::cout << record_json(rec).dump(2) << "\n";
  } else {
    std::cout << "poincare: " << rec.poincare.to_string("q") << "\n"
              << "euler: " << rec.euler.get_str() << "\n";
  }
  return 0;
}

int cmd_euler(const std::string& descriptor, const std::string& dim_text, const CommonOpts& opts,
              ReinekeEngine& engine) {
  require_not_csv(opts);
  InvariantRecord rec = compute_record(descriptor, dim_text, engine);
  if (opts.format == "json")
    std::cout << record_json(rec).dump(2) << "\n";
  else
    std::cout << rec.euler.get_str() << "\n";
  return 0;
}

int cmd_mps(int a, int b, std::int64_t m, const std::string& level, const CommonOpts& opts,
            ReinekeEngine& engine) {
  require_not_csv(opts);
  std::string mps_text, reineke_text;
  bool agree = false;
  std::int64_t shift = 0;
  if (level == "euler") {
    Int mps = mps_euler(a, b, m, engine);
    Int reineke = engine.euler_characteristic(Quiver::kronecker(m), DimensionVector{a, b});
    agree = (mps == reineke);
    mps_text = mps.get_str();
    reineke_text = reineke.get_str();
  } else {
    MpsComparison cmp = compare_mps_reineke(a, b, m, engine);
    agree = cmp.agree;
    shift = cmp.shift;
    mps_text = cmp.mps.to_string("y");
    reineke_text = cmp.reineke.to_string("y");
  }
  if (opts.format == "json") {
    json j;
    j["a"] = a;
    j["b"] = b;
    j["m"] = m;
    j["level"] = level;
    j["mps"] = mps_text;
    j["reineke"] = reineke_text;
    j["agree"] = agree;
    j["shift"] = shift;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mps: " << mps_text << "\n"
              << "reineke: " << reineke_text << "\n"
              << "agree: " << (agree ? "true" : "false") << "\n"
              << "shift: " << shift << "\n";
  }
  return 0;
}

int cmd_poly_in_m(int a, int b, const CommonOpts& opts, ReinekeEngine& engine) {
  require_not_csv(opts);
  LaurentPolynomial poly = euler_polynomial_in_m(a, b, engine);
  Quiver q1 = Quiver::bipartite(Partition::trivial(a), Partition::trivial(b), 1);
  Int chi1 = engine.euler_characteristic(q1, DimensionVector::ones(q1.vertex_count()));
  Rat expected_leading = make_rat(chi1, factorial(static_cast<unsigned long>(a)) *
                                            factorial(static_cast<unsigned long>(b)));
  std::int64_t degree = poly.is_zero() ? 0 : poly.max_exponent();
  Rat leading = poly.coefficient(degree);
  bool matches = (degree == a + b - 1) && leading == expected_leading;
  if (opts.format == "json") {
    json coeffs = json::array();
    for (const auto& [e, c] : poly.terms()) coeffs.push_back({e, c.get_str()});
    json j;
    j["a"] = a;
    j["b"] = b;
    j["poly"] = poly.to_string("m");
    j["coefficients"] = coeffs;
    j["degree"] = degree;
    j["leading"] = leading.get_str();
    j["chi_q1"] = chi1.get_str();
    j["expected_leading"] = expected_leading.get_str();
    j["leading_matches"] = matches;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "poly: " << poly.to_string("m") << "\n"
              << "degree: " << degree << "\n"
              << "leading: " << leading.get_str() << "\n"
              << "expected_leading: " << expected_leading.get_str() << " (chi(Q^1) = "
              << chi1.get_str() << ")\n"
              << "leading_matches: " << (matches ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const CommonOpts& opts, ReinekeEngine& engine) {
  require_not_csv(opts);
  std::vector<SuiteReport> reports = run_verify({suite}, engine);
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.all_pass();

  if (opts.format == "json") {
    json suites = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      suites.push_back({{"suite", r.suite}, {"pass", r.all_pass()}, {"checks", checks}});
    }
    json j;
    j["pass"] = all_pass;
    j["suites"] = suites;
    std::cout << j.dump(2) << "\n";
  } else {
    int total = 0, passed = 0;
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        ++total;
        if (c.pass) ++passed;
        std::cout << (c.pass ? "PASS " : "FAIL ") << r.suite << "/" << c.name << " (" << c.detail
                  << ")\n";
      }
    }
    std::cout << (all_pass ? "ok: " : "FAILED: ") << passed << "/" << total << " checks passed\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_table(const std::string& quantity, int a, int b, const std::vector<std::int64_t>& m_list,
              const CommonOpts& opts, ReinekeEngine& engine) {
  if (quantity != "douglas" && m_list.empty())
    throw UsageError("--m-list is required for quantity '" + quantity + "'");

  struct Row {
    std::optional<std::int64_t> m;
    std::string value;
  };
  std::vector<Row> rows;
  if (quantity == "ratio") {
    for (std::int64_t m : m_list)
      rows.push_back({m, asymptotic_ratio(a, b, Int(static_cast<long>(m)), engine).get_str()});
  } else if (quantity == "log-ratio") {
    for (std::int64_t m : m_list)
      rows.push_back({m, fmt_double(log_ratio(a, b, Int(static_cast<long>(m)), engine))});
  } else {
    rows.push_back({std::nullopt, fmt_double(douglas_estimate(a, b, engine))});
  }

  std::string column = quantity == "log-ratio" ? "log_ratio" : quantity;
  if (opts.format == "json") {
    json out = json::array();
    for (const auto& row : rows) {
      json j;
      j["a"] = a;
      j["b"] = b;
      if (row.m) j["m"] = *row.m;
      j[column] = row.value;
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << (quantity == "douglas" ? "a,b," : "a,b,m,") << column << "\n";
    for (const auto& row : rows) {
      std::cout << a << "," << b << ",";
      if (row.m) std::cout << *row.m << ",";
      std::cout << row.value << "\n";
    }
  } else {
    for (const auto& row : rows) {
      std::cout << "a=" << a << " b=" << b;
      if (row.m) std::cout << " m=" << *row.m;
      std::cout << " " << column << "=" << row.value << "\n";
    }
  }
  return 0;
}

constexpr const char* kDescriptorHelp =
    "Quiver descriptors:\n"
    "  K[m=N]                      Kronecker quiver with N arrows\n"
    "  BIP[m=N;src=P;snk=P]        weighted bipartite quiver; P is a partition\n"
    "                              written as weight^count blocks, descending\n"
    "                              weight, comma-separated (e.g. 2^1,1^3);\n"
    "                              arrows per source/sink pair: N*w(v)*w(v')\n"
    "Dimension vectors are comma-separated nonnegative integers in vertex\n"
    "order (--dim 1,2); the default is all ones.";

int run(int argc, char** argv) {
  CLI::App app{std::string("quivmod - exact invariants of Kronecker and weighted bipartite "
                           "quiver moduli\n\n") +
               kDescriptorHelp};
  app.require_subcommand(1);

  CommonOpts opts;

  std::string descriptor, dim_text;
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial and Euler characteristic");
  poincare->add_option("--quiver", descriptor, "Quiver descriptor")->required();
  poincare->add_option("--dim", dim_text, "Dimension vector (default: all ones)");
  add_common(poincare, opts);

  auto* euler = app.add_subcommand("euler", "Euler characteristic");
  euler->add_option("--quiver", descriptor, "Quiver descriptor")->required();
  euler->add_option("--dim", dim_text, "Dimension vector (default: all ones)");
  add_common(euler, opts);

  int a = 1, b = 1;
  std::int64_t m = 1;
  std::string level = "euler";
  auto* mps = app.add_subcommand("mps", "MPS partition sum vs the Reineke engine");
  mps->add_option("--a", a, "Source dimension")->required();
  mps->add_option("--b", b, "Sink dimension")->required();
  mps->add_option("--m", m, "Arrow multiplicity")->required();
  mps->add_option("--level", level, "Comparison level")
      ->check(CLI::IsMember({"poincare", "euler"}))
      ->capture_default_str();
  add_common(mps, opts);

  auto* poly = app.add_subcommand("poly-in-m", "chi(K^m(a,b)) as an exact polynomial in m");
  poly->add_option("--a", a, "Source dimension")->required();
  poly->add_option("--b", b, "Sink dimension")->required();
  add_common(poly, opts);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"reineke", "mps", "scaling", "closed-forms", "asymptotics", "all"}))
      ->capture_default_str();
  add_common(verify, opts);

  std::string quantity;
  std::vector<std::int64_t> m_list;
  auto* table = app.add_subcommand("table", "Tabulate asymptotic quantities");
  table->add_option("--quantity", quantity, "ratio | log-ratio | douglas")
      ->check(CLI::IsMember({"ratio", "log-ratio", "douglas"}))
      ->required();
  table->add_option("--a", a, "Source dimension")->required();
  table->add_option("--b", b, "Sink dimension")->required();
  table->add_option("--m-list", m_list, "Comma-separated list of m values")->delimiter(',');
  add_common(table, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::unique_ptr<ResultCache> cache = open_cache(opts);
  ReinekeEngine engine(cache.get(), opts.jobs);

  if (poincare->parsed()) return cmd_poincare(descriptor, dim_text, opts, engine);
  if (euler->parsed()) return cmd_euler(descriptor, dim_text, opts, engine);
  if (mps->parsed()) return cmd_mps(a, b, m, level, opts, engine);
  if (poly->parsed()) return cmd_poly_in_m(a, b, opts, engine);
  if (verify->parsed()) return cmd_verify(suite, opts, engine);
  if (table->parsed()) return cmd_table(quantity, a, b, m_list, opts, engine);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
