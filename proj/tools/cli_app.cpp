#include "cli_app.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "lsl/instances.hpp"
#include "lsl/io.hpp"
#include "lsl/parallel.hpp"

namespace lsl::cli {

namespace {

struct Output {
  std::string body;
  int code = kExitOk;
};

struct Options {
  std::string format = "json";
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 1;
  std::string spec;

  std::optional<std::int64_t> order, big_n, q_max, n_max;
  std::optional<std::uint64_t> sup_upto;
  std::optional<std::string> n, c1, c2, c3, m, h, q, p, big_m;
};

const std::string& need(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required option ") + flag);
  return *v;
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required option ") + flag);
  return *v;
}

BigInt big_flag(const std::optional<std::string>& v, const char* flag) {
  try {
    return parse_bigint(need(v, flag));
  } catch (const DomainError& e) {
    throw DomainError(std::string("option ") + flag + ": " + e.what());
  }
}

Rational rational_flag(const std::optional<std::string>& v, const char* flag) {
  try {
    return Rational::parse(need(v, flag));
  } catch (const DomainError& e) {
    throw DomainError(std::string("option ") + flag + ": " + e.what());
  }
}

Json read_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("--spec: cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("--spec: invalid JSON in '" + path + "': " + e.what());
  }
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& c : cells) {
    if (!line.empty()) line += ',';
    line += c;
  }
  return line + '\n';
}

std::string text(const Json& j) { return dump(j) + '\n'; }

Output cmd_farey(const Options& o) {
  const auto seq = farey(need(o.order, "--order"));
  if (o.format == "csv") {
    std::string body = csv_row({"num", "den"});
    for (const auto& f : seq.fractions()) body += csv_row({std::to_string(f.num), std::to_string(f.den)});
    return {body};
  }
  return {text(to_json(seq))};
}

Output cmd_rsum(const Options& o) {
  if (!o.n && !o.sup_upto) throw DomainError("rsum needs --n or --sup-upto");
  Json j = Json::object();
  if (o.n) {
    const BigInt n = big_flag(o.n, "--n");
    if (n < 0 || !mpz_fits_ulong_p(n.get_mpz_t())) throw DomainError("option --n: out of range");
    j["n"] = n.get_ui();
    j["r"] = r(n.get_ui());
  }
  if (o.sup_upto) {
    const auto s = sup_r(*o.sup_upto);
    j["sup_r"] = s.value;
    j["argmax"] = s.argmax;
  }
  if (o.format == "csv") {
    std::string body = csv_row({"key", "value"});
    for (const auto& [k, v] : j.items()) body += csv_row({k, v.dump()});
    return {body};
  }
  return {text(j)};
}

Output cmd_circle(const Options& o) {
  const CirclePointProblem prob{big_flag(o.c1, "--c1"), big_flag(o.c2, "--c2"), big_flag(o.c3, "--c3"),
                                rational_flag(o.m, "--m"), rational_flag(o.h, "--H")};
  const auto pts = circle_points(prob);
  if (o.format == "csv") {
    std::string body = csv_row({"x", "y"});
    for (const auto& [x, y] : pts) body += csv_row({x.get_str(), y.get_str()});
    return {body};
  }
  if (pts.size() < 3) {
    Json list = Json::array();
    for (const auto& [x, y] : pts) list.push_back(Json::array({bigint_to_json(x), bigint_to_json(y)}));
    return {text(Json{{"points", list}, {"count", pts.size()}, {"applicable", false}})};
  }
  const auto rep = check_prop1_bounds(prob);
  Json j = to_json(rep);
  j["count"] = pts.size();
  return {text(j), rep.pass() ? kExitOk : kExitFail};
}

Output cmd_ay(const Options& o) {
  const BigInt q = big_flag(o.q, "--q");
  const BigInt p = big_flag(o.p, "--p");
  const BigInt m = big_flag(o.big_m, "--M");
  const std::int64_t n = need(o.big_n, "--N");
  const auto prof = additive_profile(q, p, m, n);
  if (o.format == "csv") {
    std::string body = csv_row({"k", "A"});
    for (const auto& [k, c] : prof.counts) body += csv_row({k.get_str(), std::to_string(c)});
    return {body};
  }
  Json j = to_json(prof);
  const BigInt envelope = diameter_envelope(q, p, m, n);
  j["diameter_bound"] = diameter_bound(q, p, m, n).to_string();
  j["diameter_envelope"] = bigint_to_json(envelope);
  int code = kExitOk;
  const auto bound = corollary_scan_bound(Rational(n));
  if (bound <= kSupRScanLimit) {
    const auto cap = sup_r(bound).value;
    const bool ok = prof.sup_a <= cap && prof.diameter <= envelope;
    j["sup_r_bound"] = cap;
    j["pass"] = ok;
    if (!ok) code = kExitFail;
  } else {
    j["sup_r_bound"] = nullptr;
  }
  return {text(j), code};
}

// Either one report from --spec or a seeded batch of --count random ones.
Output report_batch(const Options& o, const std::function<BoundReport(const Json&)>& from_spec,
                    const std::function<BoundReport(std::uint64_t)>& from_seed) {
  std::vector<BoundReport> reps;
  if (!o.spec.empty()) {
    if (o.seed) throw DomainError("give either --spec or --seed, not both");
    reps.push_back(from_spec(read_spec(o.spec)));
  } else {
    const std::uint64_t seed = need(o.seed, "--spec or --seed");
    if (o.count < 1) throw DomainError("option --count must be >= 1");
    reps = parallel_map(
        o.count, [&](std::size_t i) { return from_seed(mix_seed(seed, i)); }, thread_count());
  }
  std::size_t passed = 0;
  for (const auto& r : reps) passed += r.passed();
  const int code = passed == reps.size() ? kExitOk : kExitFail;

  if (o.format == "csv") {
    std::string body = csv_row({"index", "name", "lhs", "rhs", "error_budget", "pass"});
    for (std::size_t i = 0; i < reps.size(); ++i)
      body += csv_row({std::to_string(i), reps[i].name, format_double(reps[i].lhs), format_double(reps[i].rhs),
                       format_double(reps[i].error_budget), reps[i].passed() ? "true" : "false"});
    return {body, code};
  }
  if (!o.spec.empty()) return {text(to_json(reps.front())), code};
  Json list = Json::array();
  for (const auto& r : reps) list.push_back(to_json(r));
  return {text(Json{{"seed", *o.seed}, {"count", reps.size()}, {"passed", passed}, {"reports", list}}), code};
}

Output cmd_verify_lemma(const Options& o) {
  return report_batch(
      o,
      [](const Json& j) {
        const auto in = spaced_input_from_json(j);
        return verify_lemma(in.x, in.a, in.y);
      },
      [](std::uint64_t s) {
        const auto in = random_spaced_instance(s);
        return verify_lemma(in.x, in.a, in.y);
      });
}

Output cmd_verify_theorem(const Options& o) {
  return report_batch(
      o,
      [](const Json& j) {
        const auto in = spaced_input_from_json(j);
        return verify_theorem1(in.x, in.a, in.y);
      },
      [](std::uint64_t s) {
        const auto in = random_spaced_instance(s);
        return verify_theorem1(in.x, in.a, in.y);
      });
}

Output cmd_verify_corollary(const Options& o) {
  return report_batch(
      o, [](const Json& j) { return verify_corollary(sieve_instance_from_json(j)); },
      [](std::uint64_t s) { return verify_corollary(random_sieve_instance(s)); });
}

Output cmd_sharpness(const Options& o) {
  const auto cells = sharpness_probe(need(o.q_max, "--Qmax"), need(o.n_max, "--Nmax"), thread_count());
  bool ok = true;
  for (const auto& c : cells) ok = ok && c.lhs > c.error_budget && c.ratio <= c.envelope;
  const int code = ok ? kExitOk : kExitFail;
  if (o.format == "csv") {
    std::string body = csv_row({"Q", "N", "lhs", "ratio", "envelope"});
    for (const auto& c : cells)
      body += csv_row({std::to_string(c.order), std::to_string(c.n), format_double(c.lhs),
                       format_double(c.ratio), format_double(c.envelope)});
    return {body, code};
  }
  Json list = Json::array();
  for (const auto& c : cells)
    list.push_back(Json{{"Q", c.order}, {"N", c.n}, {"lhs", c.lhs}, {"ratio", c.ratio}, {"envelope", c.envelope}});
  return {text(Json{{"cells", list}, {"pass", ok}}), code};
}

Output cmd_selftest(const Options&) {
  std::ostringstream s;
  const auto results = acceptance::run_all(s, thread_count());
  const bool ok = acceptance::all_passed(results);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass;
  s << (ok ? "PASS" : "FAIL") << ": " << passed << "/" << results.size() << " criteria\n";
  return {s.str(), ok ? kExitOk : kExitFail};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Large sieve inequalities: Farey points, lattice counts, exact verification", "lsl_cli"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    return sub;
  };
  auto seeded = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "JSON instance file");
    sub->add_option("--seed", o.seed, "Base seed for random instances");
    sub->add_option("--count", o.count, "Number of random instances");
    return sub;
  };

  std::vector<std::pair<CLI::App*, Output (*)(const Options&)>> commands;

  auto* farey_cmd = common(app.add_subcommand("farey", "Farey sequence F(Q)"));
  farey_cmd->add_option("--order", o.order, "Q");
  commands.emplace_back(farey_cmd, cmd_farey);

  auto* rsum_cmd = common(app.add_subcommand("rsum", "r(n) and its running maximum"));
  rsum_cmd->add_option("--n", o.n, "Evaluate r(n)");
  rsum_cmd->add_option("--sup-upto", o.sup_upto, "max r(n) over 1 <= n <= bound");
  commands.emplace_back(rsum_cmd, cmd_rsum);

  auto* circle_cmd = common(app.add_subcommand("circle", "Lattice points of c1(x^2+y^2)+c2(x+y)=c3 in a box"));
  circle_cmd->add_option("--c1", o.c1);
  circle_cmd->add_option("--c2", o.c2);
  circle_cmd->add_option("--c3", o.c3);
  circle_cmd->add_option("--m", o.m, "Box corner, num/den");
  circle_cmd->add_option("--H", o.h, "Box side, num/den");
  commands.emplace_back(circle_cmd, cmd_circle);

  auto* ay_cmd = common(app.add_subcommand("ay", "Additive profile of y_i = q i^2 + p i, M < i <= M+N"));
  ay_cmd->add_option("--q", o.q);
  ay_cmd->add_option("--p", o.p);
  ay_cmd->add_option("--M", o.big_m);
  ay_cmd->add_option("--N", o.big_n);
  commands.emplace_back(ay_cmd, cmd_ay);

  commands.emplace_back(seeded(common(app.add_subcommand("verify-lemma", "Check the spaced-set lemma"))),
                        cmd_verify_lemma);
  commands.emplace_back(seeded(common(app.add_subcommand("verify-theorem", "Check the diameter form"))),
                        cmd_verify_theorem);
  commands.emplace_back(seeded(common(app.add_subcommand("verify-corollary", "Check the Farey bound"))),
                        cmd_verify_corollary);

  auto* sharp_cmd = common(app.add_subcommand("sharpness", "Tabulate lhs / ((NQ + Q^2) ||a||^2)"));
  sharp_cmd->add_option("--Qmax", o.q_max);
  sharp_cmd->add_option("--Nmax", o.n_max);
  commands.emplace_back(sharp_cmd, cmd_sharpness);

  commands.emplace_back(common(app.add_subcommand("selftest", "Run the acceptance criteria")), cmd_selftest);

  std::vector<std::string> argv_store{"lsl_cli"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Output result;
  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) result = fn(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << result.body;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!(file << result.body)) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitUsage;
    }
  }
  return result.code;
}

}  // namespace lsl::cli
