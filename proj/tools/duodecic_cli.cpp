// duodecic: integral bases and discriminants of Q(theta), theta^12 = m.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input or usage error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <duodecic/duodecic.hpp>

namespace {

using duodecic::Int;
using nlohmann::json;
namespace dd = duodecic;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInvalid = 2;

struct Options {
  std::string m;
  std::string p;
  bool global = false;
  std::string format = "text";
  int which = 0;
  std::string input;
  std::string output;
};

struct PrimeIndex {
  Int p;
  int value;
  bool oracle;
};

PrimeIndex index_at(const Int& m, const Int& p) {
  try {
    return {p, dd::pure12::vp_index(m, p), false};
  } catch (const dd::NotCovered&) {
    return {p, dd::verify::round2_vp_index(m, p), true};
  }
}

dd::PIntegralBasis basis_at(const Int& m, const Int& p, bool& oracle) {
  oracle = false;
  try {
    return dd::pure12::p_integral_basis(m, p);
  } catch (const dd::NotCovered&) {
    oracle = true;
    return dd::verify::round2_p_integral_basis(m, p);
  }
}

void warn_oracle(const Int& p) {
  std::cerr << "warning: p = " << p << " is not covered by a closed form; oracle-only value\n";
}

Int parse_prime(const std::string& text) {
  Int p = dd::arith::parse_int(text);
  if (p < 2 || !dd::arith::is_probable_prime(p)) throw dd::InvalidInput(text + " is not a prime");
  return p;
}

Int parse_m(const std::string& text) {
  Int m = dd::arith::parse_int(text);
  dd::pure12::check_m(m);
  return m;
}

int cmd_index(const Options& o) {
  const Int m = parse_m(o.m);
  std::vector<PrimeIndex> rows;
  if (!o.p.empty()) rows.push_back(index_at(m, parse_prime(o.p)));
  else
    for (const auto& p : dd::pure12::index_primes(m)) rows.push_back(index_at(m, p));

  if (o.format == "json") {
    json idx = json::object(), oracle = json::array();
    for (const auto& r : rows) {
      idx[r.p.get_str()] = r.value;
      if (r.oracle) oracle.push_back(r.p.get_str());
    }
    std::cout << json{{"m", m.get_str()}, {"vp_index", idx}, {"oracle", oracle}}.dump(2) << "\n";
  } else if (!o.p.empty()) {
    std::cout << rows[0].value << (rows[0].oracle ? " (oracle)" : "") << "\n";
  } else {
    for (const auto& r : rows) std::cout << r.p << ": " << r.value << (r.oracle ? " (oracle)" : "") << "\n";
  }
  for (const auto& r : rows)
    if (r.oracle) warn_oracle(r.p);
  return kOk;
}

int cmd_basis(const Options& o) {
  const Int m = parse_m(o.m);
  if (!o.p.empty() && o.global) throw dd::InvalidInput("basis: give either --p or --global, not both");
  std::vector<dd::ThetaElement> elems;
  if (!o.p.empty()) {
    const Int p = parse_prime(o.p);
    bool oracle = false;
    elems = basis_at(m, p, oracle).elements;
    if (oracle) warn_oracle(p);
  } else {
    std::map<Int, dd::PIntegralBasis> local;
    for (const auto& p : dd::pure12::index_primes(m)) {
      bool oracle = false;
      auto b = basis_at(m, p, oracle);
      if (oracle) warn_oracle(p);
      if (b.exponent_sum() > 0) local.emplace(p, std::move(b));
    }
    elems = dd::combine::global_basis(m, local, dd::pure12::degree).elements;
  }
  if (o.format == "json") std::cout << dd::json_io::to_json(elems).dump(2) << "\n";
  else if (o.format == "latex") std::cout << dd::render::basis_latex(elems);
  else std::cout << dd::render::basis_text(elems);
  return kOk;
}

int cmd_disc(const Options& o) {
  const Int m = parse_m(o.m);
  dd::arith::FactoredInt idx;
  bool any_oracle = false;
  for (const auto& p : dd::pure12::index_primes(m)) {
    auto r = index_at(m, p);
    if (r.oracle) {
      warn_oracle(p);
      any_oracle = true;
    }
    if (r.value > 0) idx *= dd::arith::FactoredInt(1, {{p, r.value}});
  }
  const auto df = dd::pure12::disc_f(m);
  const auto dk = df / idx.pow(2);
  if (o.format == "json") {
    std::cout << json{{"m", m.get_str()},
                      {"Df", dd::json_io::to_json(df)},
                      {"index", dd::json_io::to_json(idx)},
                      {"dK", dd::json_io::to_json(dk)},
                      {"oracle", any_oracle}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "D_f = " << df.to_string() << "\nind theta = " << idx.to_string() << "\nd_K = " << dk.to_string()
              << "\n";
  }
  return kOk;
}

std::vector<std::string> failing_components(const dd::FieldReport& r) {
  std::vector<std::string> out;
  for (const auto& [p, pr] : r.per_prime) {
    const std::string at = " at p = " + p.get_str();
    if (pr.montes_index && *pr.montes_index != pr.vp_index) out.push_back("Newton-polygon engine" + at);
    if (pr.oracle_index != pr.vp_index) out.push_back("round-2 oracle" + at);
    if (!pr.verified && pr.oracle_index == pr.vp_index && (!pr.montes_index || *pr.montes_index == pr.vp_index))
      out.push_back("basis checks" + at);
  }
  if (!r.disc_identity) out.push_back("discriminant identity");
  return out;
}

int cmd_verify(const Options& o) {
  const auto report = dd::analyze(parse_m(o.m));
  const auto failing = failing_components(report);
  if (o.format == "json") {
    std::cout << dd::json_io::to_json(report).dump(2) << "\n";
  } else {
    std::cout << "m = " << report.m << "\n";
    for (const auto& [p, pr] : report.per_prime) {
      std::cout << "p = " << p << "  case " << pr.tag << "  closed form "
                << (pr.tag == "oracle" ? std::string("-") : std::to_string(pr.vp_index)) << "  newton "
                << (pr.montes_index ? std::to_string(*pr.montes_index) : std::string("-")) << "  round-2 "
                << pr.oracle_index << "  basis " << (pr.verified ? "pass" : "FAIL") << "\n";
    }
    std::cout << "discriminant identity: " << (report.disc_identity ? "pass" : "FAIL") << "\n";
    for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    if (failing.empty()) std::cout << "result: pass\n";
    for (const auto& f : failing) std::cout << "result: FAIL in " << f << "\n";
  }
  return failing.empty() ? kOk : kVerifyFailed;
}

int cmd_table(const Options& o) {
  std::cout << (o.format == "latex" ? dd::render::table_latex(o.which) : dd::render::table_markdown(o.which));
  return kOk;
}

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DUODECIC_WORKERS")) {
    try {
      n = static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring DUODECIC_WORKERS=" << env << "\n";
    }
  }
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, jobs)));
}

int cmd_batch(const Options& o) {
  std::ifstream in(o.input);
  if (!in) throw dd::InvalidInput("cannot read " + o.input);

  struct Job {
    int line;
    std::string text;
    std::optional<dd::FieldReport> report;
    std::string error;
    bool internal = false;
  };
  std::vector<Job> jobs;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto text = dd::table::detail::trim(line);
    if (!text.empty()) jobs.push_back({n, text, std::nullopt, {}});
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        jobs[i].report = dd::analyze(dd::arith::parse_int(jobs[i].text));
      } catch (const dd::InvalidInput& e) {
        jobs[i].error = e.what();
      } catch (const std::exception& e) {
        jobs[i].error = e.what();
        jobs[i].internal = true;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = worker_count(jobs.size()); w > 0; --w) pool.emplace_back(work);
  pool.clear();

  json out = json::array();
  int rejected = 0;
  bool all_verified = true;
  for (const auto& j : jobs) {
    if (!j.report) {
      ++rejected;
      all_verified = all_verified && !j.internal;
      std::cerr << "line " << j.line << (j.internal ? ": failed: " : ": rejected: ") << j.error << "\n";
      continue;
    }
    all_verified = all_verified && j.report->all_verified();
    out.push_back(dd::json_io::to_json(*j.report));
  }
  std::ofstream os(o.output);
  if (!os) throw dd::InvalidInput("cannot write " + o.output);
  os << out.dump(2) << "\n";
  std::cout << out.size() << " processed, " << rejected << " rejected\n";
  return all_verified ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral bases, indices and discriminants of Q(theta), theta^12 = m"};
  app.require_subcommand(1);
  Options o;

  auto add_m = [&](CLI::App* sub) { sub->add_option("--m", o.m, "the integer m")->required(); };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* index = app.add_subcommand("index", "v_p(ind theta) per prime");
  add_m(index);
  index->add_option("--p", o.p, "a single prime");
  add_format(index, {"text", "json"});

  auto* basis = app.add_subcommand("basis", "p-integral or global integral basis");
  add_m(basis);
  basis->add_option("--p", o.p, "p-integral basis at this prime");
  basis->add_flag("--global", o.global, "global integral basis (default)");
  add_format(basis, {"text", "json", "latex"});

  auto* disc = app.add_subcommand("disc", "D_f, the index and d_K");
  add_m(disc);
  add_format(disc, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "cross-check all engines; exit 1 on any disagreement");
  add_m(verify);
  add_format(verify, {"text", "json"});

  auto* table = app.add_subcommand("table", "regenerate the p = 2 (1) or p = 3 (2) case table");
  table->add_option("--which", o.which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  o.format = "text";
  table->add_option("--format", o.format, "markdown (default) or latex")->check(CLI::IsMember({"text", "markdown", "latex"}));

  auto* batch = app.add_subcommand("batch", "full reports for every m in a file, as a JSON array");
  batch->add_option("--input", o.input, "one integer per line, # comments allowed")->required();
  batch->add_option("--output", o.output, "JSON output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (*index) return cmd_index(o);
    if (*basis) return cmd_basis(o);
    if (*disc) return cmd_disc(o);
    if (*verify) return cmd_verify(o);
    if (*table) return cmd_table(o);
    if (*batch) return cmd_batch(o);
  } catch (const dd::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kInvalid;
}
