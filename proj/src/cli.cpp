#include "minmat/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minmat/errors.hpp"
#include "minmat/exact_det.hpp"
#include "minmat/matrix_core.hpp"
#include "minmat/stochastic_sim.hpp"
#include "minmat/symfun.hpp"
#include "minmat/verify.hpp"

namespace minmat::cli {
namespace {

using nlohmann::json;

enum class Format { json, csv, plain };

const std::map<std::string, Format> kFormats{{"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};

json envelope(const std::string& command, json payload) {
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["payload"] = std::move(payload);
  return doc;
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) parts.push_back(item);
  return parts;
}

Increments parse_increments(const std::string& text) {
  if (text.empty()) throw UsageError("--inc is required");
  std::vector<BigInt> values;
  for (const auto& part : split(text, ',')) values.push_back(parse_bigint(part));
  return Increments(values);
}

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_decimal(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_header(Index cols) {
  std::string line;
  for (Index c = 1; c <= cols; ++c) line += (c > 1 ? ",c" : "c") + std::to_string(c);
  return line;
}

// ----- matrix / det -----

struct MatrixArgs {
  std::string kind;
  Index n = 0;
  Index k = 0;
  std::string inc;
};

void add_matrix_args(CLI::App* sub, MatrixArgs& a) {
  sub->add_option("kind", a.kind, "min | c | delta | theta")
      ->required()
      ->check(CLI::IsMember({"min", "c", "delta", "theta"}));
  sub->add_option("--n", a.n, "dimension (min) or outer size (c)");
  sub->add_option("--k", a.k, "shift for the c matrix, 1 < k < n");
  sub->add_option("--inc", a.inc, "comma-separated increments for delta/theta");
}

json matrix_params(const MatrixArgs& a) {
  json params;
  if (a.kind == "min" || a.kind == "c") params["n"] = a.n;
  if (a.kind == "c") params["k"] = a.k;
  if (a.kind == "delta" || a.kind == "theta") params["inc"] = a.inc;
  return params;
}

ExactMatrix build_matrix(const MatrixArgs& a) {
  if (a.kind == "min") return min_matrix(a.n);
  if (a.kind == "c") return c_matrix(a.n, a.k);
  if (a.kind == "delta") return delta_matrix(parse_increments(a.inc));
  return theta_matrix(parse_increments(a.inc));
}

int cmd_matrix(const MatrixArgs& a, Format fmt, std::ostream& out) {
  const ExactMatrix m = build_matrix(a);
  switch (fmt) {
    case Format::json: {
      json payload;
      payload["kind"] = a.kind;
      payload["params"] = matrix_params(a);
      payload["dim"] = m.rows();
      payload["matrix"] = matrix_json(m);
      emit_json(out, envelope("matrix", payload));
      break;
    }
    case Format::csv:
      out << csv_header(m.cols()) << '\n';
      for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) out << (c ? "," : "") << to_decimal(m(r, c));
        out << '\n';
      }
      break;
    case Format::plain:
      for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_decimal(m(r, c));
        out << '\n';
      }
      break;
  }
  return kOk;
}

BigInt det_closed(const MatrixArgs& a) {
  if (a.kind == "min") return det_min_matrix(a.n);
  if (a.kind == "c") return det_c_matrix(a.n, a.k);
  if (a.kind == "delta") return delta_det_closed(parse_increments(a.inc));
  return theta_det_closed(parse_increments(a.inc));
}

int cmd_det(const MatrixArgs& a, const std::string& method, Format fmt, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, BigInt>> values;
  if (method == "closed" || method == "both") values.emplace_back("closed", det_closed(a));
  if (method == "bareiss" || method == "both") values.emplace_back("bareiss", det_bareiss(build_matrix(a)));
  const bool agree = std::all_of(values.begin(), values.end(), [&](const auto& v) { return v.second == values.front().second; });

  switch (fmt) {
    case Format::json: {
      json payload;
      payload["kind"] = a.kind;
      payload["params"] = matrix_params(a);
      for (const auto& [name, v] : values) payload["values"][name] = to_decimal(v);
      payload["agree"] = agree;
      emit_json(out, envelope("det", payload));
      break;
    }
    case Format::csv:
      out << "method,value\n";
      for (const auto& [name, v] : values) out << name << ',' << to_decimal(v) << '\n';
      break;
    case Format::plain:
      for (const auto& [name, v] : values) out << name << ": " << to_decimal(v) << '\n';
      break;
  }
  if (!agree) {
    err << "determinant methods disagree\n";
    return kVerificationFailed;
  }
  return kOk;
}

// ----- symfun -----

struct SymArgs {
  Index n = 0;
  std::string method = "closed";
  std::string k = "all";
  Index cap = kDefaultMinorCap;
};

int cmd_symfun(const SymArgs& a, Format fmt, std::ostream& out, std::ostream& err) {
  if (a.n < 1) throw UsageError("symfun needs --n >= 1");
  std::vector<SymMethod> methods;
  std::vector<std::string> skipped;
  if (a.method == "all") {
    for (SymMethod m : kAllSymMethods) {
      if (m == SymMethod::minors && a.n > a.cap) {
        skipped.emplace_back(to_string(m));
        continue;
      }
      methods.push_back(m);
    }
  } else {
    const auto m = parse_sym_method(a.method);
    if (!m) throw UsageError("unknown method '" + a.method + "'");
    methods.push_back(*m);
  }
  std::vector<Index> ks;
  if (a.k == "all") {
    for (Index k = 1; k <= a.n; ++k) ks.push_back(k);
  } else {
    ks.push_back(static_cast<Index>(std::stoll(a.k)));
  }

  struct Row {
    Index k;
    std::vector<BigInt> values;
    bool agree;
  };
  std::vector<Row> rows;
  bool all_agree = true;
  for (Index k : ks) {
    Row row{k, {}, true};
    for (SymMethod m : methods) row.values.push_back(symfun(m, a.n, k, a.cap));
    row.agree = std::all_of(row.values.begin(), row.values.end(), [&](const BigInt& v) { return v == row.values.front(); });
    all_agree = all_agree && row.agree;
    rows.push_back(std::move(row));
  }

  switch (fmt) {
    case Format::json: {
      json payload;
      payload["n"] = a.n;
      payload["methods"] = json::array();
      for (SymMethod m : methods) payload["methods"].push_back(std::string(to_string(m)));
      payload["skipped"] = skipped;
      payload["rows"] = json::array();
      for (const Row& row : rows) {
        json r;
        r["k"] = row.k;
        for (std::size_t i = 0; i < methods.size(); ++i) r["values"][std::string(to_string(methods[i]))] = to_decimal(row.values[i]);
        r["agree"] = row.agree;
        payload["rows"].push_back(std::move(r));
      }
      payload["agree"] = all_agree;
      emit_json(out, envelope("symfun", payload));
      break;
    }
    case Format::csv:
    case Format::plain: {
      const char sep = fmt == Format::csv ? ',' : '\t';
      out << "k";
      for (SymMethod m : methods) out << sep << to_string(m);
      if (methods.size() > 1) out << sep << "agree";
      out << '\n';
      for (const Row& row : rows) {
        out << row.k;
        for (const BigInt& v : row.values) out << sep << to_decimal(v);
        if (methods.size() > 1) out << sep << (row.agree ? "true" : "false");
        out << '\n';
      }
      break;
    }
  }
  for (const auto& s : skipped) err << "note: method " << s << " skipped (n above cap " << a.cap << ")\n";
  if (!all_agree) {
    err << "symmetric-function methods disagree\n";
    return kVerificationFailed;
  }
  return kOk;
}

// ----- verify -----

int cmd_verify(const std::string& suite_name, const VerifyOptions& opt, Format fmt, std::ostream& out) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
  const VerifyReport report = run_verify(*suite, opt);

  switch (fmt) {
    case Format::json: {
      json payload;
      payload["suite"] = suite_name;
      payload["n_max"] = opt.n_max;
      payload["passed"] = report.passed();
      payload["checks"] = json::array();
      for (const auto& c : report.checks) {
        payload["checks"].push_back({{"identity", c.identity},
                                     {"passed", c.passed},
                                     {"cases", c.cases},
                                     {"counterexample", c.counterexample},
                                     {"note", c.note}});
      }
      json doc = envelope("verify", payload);
      doc["seed"] = opt.seed;
      emit_json(out, doc);
      break;
    }
    case Format::csv:
      out << "identity,passed,cases,counterexample,note\n";
      for (const auto& c : report.checks) {
        out << '"' << c.identity << "\"," << (c.passed ? "true" : "false") << ',' << c.cases << ",\""
            << c.counterexample << "\",\"" << c.note << "\"\n";
      }
      break;
    case Format::plain:
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << c.identity << "  (" << c.cases << " cases)";
        if (!c.passed) out << "  counterexample: " << c.counterexample;
        if (!c.note.empty()) out << "  [" << c.note << "]";
        out << '\n';
      }
      out << (report.passed() ? "all checks passed" : "some checks FAILED") << '\n';
      break;
  }
  return report.passed() ? kOk : kVerificationFailed;
}

// ----- simulate -----

int cmd_simulate(const SimConfig& cfg, std::optional<double> tolerance, Format fmt, std::ostream& out,
                 std::ostream& err) {
  const CovEstimate est = simulate_covariance(cfg);
  const double deviation = covariance_deviation(est);
  const Index n = est.matrix.rows();

  switch (fmt) {
    case Format::json: {
      json payload;
      payload["config"] = {{"n", cfg.n},         {"m", cfg.m},
                           {"sigma", cfg.sigma}, {"dist", std::string(to_string(cfg.dist))},
                           {"chunks", cfg.chunks}};
      json rows = json::array();
      for (Index r = 0; r < n; ++r) {
        json row = json::array();
        for (Index c = 0; c < n; ++c) row.push_back(est.matrix(r, c));
        rows.push_back(std::move(row));
      }
      payload["matrix"] = std::move(rows);
      payload["deviation"] = deviation;
      json doc = envelope("simulate", payload);
      doc["seed"] = cfg.seed;
      emit_json(out, doc);
      break;
    }
    case Format::csv:
      out << "i,j,estimate,expected\n" << std::setprecision(17);
      for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) {
          out << r + 1 << ',' << c + 1 << ',' << est.matrix(r, c) << ','
              << cfg.sigma * cfg.sigma * static_cast<double>(std::min(r, c) + 1) << '\n';
        }
      }
      err << "deviation " << deviation << '\n';
      break;
    case Format::plain:
      out << std::fixed << std::setprecision(4);
      for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) out << (c ? " " : "") << std::setw(9) << est.matrix(r, c);
        out << '\n';
      }
      out << "deviation " << std::setprecision(6) << deviation << " (m=" << cfg.m << ", seed=" << cfg.seed << ")\n";
      break;
  }
  if (tolerance && deviation > *tolerance) {
    err << "deviation " << deviation << " exceeds tolerance " << *tolerance << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

// ----- bench -----

struct BenchArgs {
  std::vector<Index> n_list{8, 10, 12};
  std::vector<Index> k_list;
  std::vector<std::string> methods{"closed", "nested", "rec6", "rec7", "ratio", "minors", "bareiss"};
  Index cap = kDefaultMinorCap;
  Index repeat = 1;
};

int cmd_bench(const BenchArgs& a, Format fmt, std::ostream& out) {
  for (const auto& m : a.methods) {
    if (m != "bareiss" && !parse_sym_method(m)) throw UsageError("unknown method '" + m + "'");
  }
  if (a.repeat < 1) throw UsageError("--repeat must be >= 1");
  for (Index n : a.n_list) {
    if (n < 1) throw UsageError("--n-list entries must be >= 1");
  }

  struct Row {
    std::string method;
    Index n, k;
    double seconds;
    std::string value;
    std::string status;
  };
  std::vector<Row> rows;
  using Clock = std::chrono::steady_clock;

  for (Index n : a.n_list) {
    std::vector<Index> ks = a.k_list;
    if (ks.empty()) ks.push_back(std::max<Index>(1, n / 2));
    for (const auto& name : a.methods) {
      if (name == "bareiss") {
        // Elimination gives S_n^n = |A_n| directly; k is fixed to n.
        BigInt v;
        const auto start = Clock::now();
        for (Index r = 0; r < a.repeat; ++r) v = det_bareiss(min_matrix(n));
        const double secs = std::chrono::duration<double>(Clock::now() - start).count() / static_cast<double>(a.repeat);
        rows.push_back({name, n, n, secs, to_decimal(v), "ok"});
        continue;
      }
      const SymMethod method = *parse_sym_method(name);
      for (Index k : ks) {
        if (k < 0 || k > n) {
          rows.push_back({name, n, k, 0.0, "", "skipped: k out of range"});
          continue;
        }
        if (method == SymMethod::minors && n > a.cap) {
          rows.push_back({name, n, k, 0.0, "", "skipped: n above cap"});
          continue;
        }
        BigInt v;
        const auto start = Clock::now();
        for (Index r = 0; r < a.repeat; ++r) v = symfun(method, n, k, a.cap);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count() / static_cast<double>(a.repeat);
        rows.push_back({name, n, k, secs, to_decimal(v), "ok"});
      }
    }
  }

  switch (fmt) {
    case Format::json: {
      json payload = json::array();
      for (const Row& r : rows) {
        payload.push_back({{"method", r.method}, {"n", r.n}, {"k", r.k}, {"seconds", r.seconds},
                           {"value", r.value}, {"status", r.status}});
      }
      emit_json(out, envelope("bench", {{"repeat", a.repeat}, {"rows", payload}}));
      break;
    }
    case Format::csv:
      out << "method,n,k,seconds,value,status\n";
      for (const Row& r : rows) {
        out << r.method << ',' << r.n << ',' << r.k << ',' << std::scientific << std::setprecision(6) << r.seconds
            << ',' << r.value << ',' << r.status << '\n';
      }
      break;
    case Format::plain:
      out << std::left << std::setw(8) << "method" << std::setw(6) << "n" << std::setw(6) << "k" << std::setw(14)
          << "seconds" << "value\n";
      for (const Row& r : rows) {
        out << std::left << std::setw(8) << r.method << std::setw(6) << r.n << std::setw(6) << r.k << std::setw(14)
            << std::scientific << std::setprecision(3) << r.seconds << (r.status == "ok" ? r.value : r.status) << '\n';
      }
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the min(i,j) matrix and its relatives", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Format fmt = Format::json;
  auto add_format = [&fmt](CLI::App* sub) {
    sub->add_option("--format", fmt, "json | csv | plain")->transform(CLI::CheckedTransformer(kFormats));
  };

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "print A_n, C_{n,k}, or a Delta/Theta matrix");
  add_matrix_args(matrix, matrix_args);
  add_format(matrix);

  MatrixArgs det_args;
  std::string det_method = "closed";
  auto* det = app.add_subcommand("det", "determinant by closed form and/or exact elimination");
  add_matrix_args(det, det_args);
  det->add_option("--method", det_method, "closed | bareiss | both")
      ->check(CLI::IsMember({"closed", "bareiss", "both"}));
  add_format(det);

  SymArgs sym_args;
  auto* sym = app.add_subcommand("symfun", "symmetric functions S_k^n of the eigenvalues of A_n");
  sym->add_option("--n", sym_args.n, "matrix size")->required();
  sym->add_option("--method", sym_args.method, "closed | minors | nested | rec6 | rec7 | ratio | all");
  sym->add_option("--k", sym_args.k, "k or 'all'");
  sym->add_option("--cap", sym_args.cap, "largest n for the principal-minor enumeration");
  add_format(sym);

  std::string suite = "all";
  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "sweep the identities up to --n-max");
  verify->add_option("--suite", suite, "dets | symfun | binomial | fibonacci | all");
  verify->add_option("--n-max", verify_opt.n_max, "largest n to check")->required();
  verify->add_option("--cap", verify_opt.minor_cap, "largest n for the principal-minor enumeration");
  verify->add_option("--seed", verify_opt.seed, "seed for random increment lists");
  add_format(verify);

  SimConfig sim_cfg;
  std::string dist = "gaussian";
  std::optional<double> tolerance;
  auto* simulate = app.add_subcommand("simulate", "empirical covariance of a random walk vs. sigma^2 A_n");
  simulate->add_option("--n", sim_cfg.n, "process length");
  simulate->add_option("--m", sim_cfg.m, "number of sample paths");
  simulate->add_option("--sigma", sim_cfg.sigma, "step standard deviation");
  simulate->add_option("--seed", sim_cfg.seed, "generator seed");
  simulate->add_option("--dist", dist, "rademacher | uniform | gaussian");
  simulate->add_option("--chunks", sim_cfg.chunks, "independent generator substreams");
  simulate->add_option("--tolerance", tolerance, "exit 1 when the deviation exceeds this");
  add_format(simulate);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time the symmetric-function methods");
  bench->add_option("--n-list", bench_args.n_list, "comma-separated sizes")->delimiter(',');
  bench->add_option("--k-list", bench_args.k_list, "comma-separated k values (default n/2)")->delimiter(',');
  bench->add_option("--methods", bench_args.methods, "closed,minors,nested,rec6,rec7,ratio,bareiss")->delimiter(',');
  bench->add_option("--cap", bench_args.cap, "largest n for the principal-minor enumeration");
  bench->add_option("--repeat", bench_args.repeat, "repetitions per timing");
  add_format(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*matrix) return cmd_matrix(matrix_args, fmt, out);
    if (*det) return cmd_det(det_args, det_method, fmt, out, err);
    if (*sym) return cmd_symfun(sym_args, fmt, out, err);
    if (*verify) return cmd_verify(suite, verify_opt, fmt, out);
    if (*simulate) {
      const auto d = parse_increment_dist(dist);
      if (!d) throw UsageError("unknown distribution '" + dist + "'");
      sim_cfg.dist = *d;
      return cmd_simulate(sim_cfg, tolerance, fmt, out, err);
    }
    if (*bench) return cmd_bench(bench_args, fmt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace minmat::cli
