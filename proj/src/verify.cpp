#include "minmat/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "minmat/errors.hpp"
#include "minmat/exact_det.hpp"
#include "minmat/fibonacci.hpp"
#include "minmat/matrix_core.hpp"

namespace minmat {
namespace {

std::string join(const Increments& inc) {
  std::ostringstream os;
  for (Index j = 1; j <= inc.size(); ++j) os << (j > 1 ? "," : "") << inc[j];
  return os.str();
}

// Records a case; keeps only the first counterexample.
class Check {
 public:
  explicit Check(std::string identity) { result_.identity = std::move(identity); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  void note(std::string text) { result_.note = std::move(text); }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

Increments random_increments(std::mt19937_64& rng, Index length, int lo, int hi) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::vector<BigInt> values(static_cast<std::size_t>(length));
  for (auto& v : values) v = value(rng);
  return Increments(values);
}

void dets_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Check min_det("det(A_n) = 1 by elimination");
  for (Index n = 1; n <= opt.n_max; ++n) {
    min_det.expect(det_bareiss(min_matrix(n)) == 1, [n] { return "n=" + std::to_string(n); });
  }
  out.push_back(min_det.done());

  Check c_det("det(C_{n,k}) = k by elimination");
  for (Index n = 3; n <= opt.n_max; ++n) {
    for (Index k = 2; k < n; ++k) {
      c_det.expect(det_bareiss(c_matrix(n, k)) == k,
                   [n, k] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  }
  if (opt.n_max < 3) c_det.note("no C_{n,k} with 1<k<n<=" + std::to_string(opt.n_max) + "; skipped");
  out.push_back(c_det.done());

  const Index max_len = std::min<Index>(opt.n_max, 12);
  std::mt19937_64 rng(opt.seed);
  const std::pair<int, int> ranges[] = {{1, 9}, {-4, 4}};

  Check delta("Delta closed form = elimination (random increments)");
  Check leading("leading minors of Delta = partial products (positive increments)");
  if (max_len >= 1) {
    std::uniform_int_distribution<Index> length(1, max_len);
    for (Index t = 0; t < opt.random_lists; ++t) {
      const auto [lo, hi] = ranges[t % 2];
      const Increments inc = random_increments(rng, length(rng), lo, hi);
      delta.expect(delta_det_closed(inc) == det_bareiss(delta_matrix(inc)), [&] { return "inc=" + join(inc); });
      if (inc.positive()) {
        const ExactMatrix d = delta_matrix(inc);
        BigInt partial = 1;
        for (Index m = 1; m <= inc.size(); ++m) {
          partial *= inc[m];
          leading.expect(det_bareiss(d.topLeftCorner(m, m)) == partial,
                         [&] { return "inc=" + join(inc) + " m=" + std::to_string(m); });
        }
      }
    }
  } else {
    delta.note("n-max < 1; skipped");
  }
  out.push_back(delta.done());
  out.push_back(leading.done());

  Check theta("Theta closed form = elimination (random increments)");
  if (max_len >= 2) {
    std::uniform_int_distribution<Index> dim(2, max_len);
    for (Index t = 0; t < opt.random_lists; ++t) {
      const auto [lo, hi] = ranges[t % 2];
      const Increments inc = random_increments(rng, dim(rng) + 1, lo, hi);
      theta.expect(theta_det_closed(inc) == det_bareiss(theta_matrix(inc)), [&] { return "inc=" + join(inc); });
    }
  } else {
    theta.note("Theta needs dimension >= 2; vacuous for n-max " + std::to_string(opt.n_max));
  }
  out.push_back(theta.done());
}

void symfun_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  auto at = [](Index n, Index k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };

  Check agree("all methods agree with C(n+k, n-k)");
  for (Index n = 1; n <= opt.n_max; ++n) {
    for (Index k = 1; k <= n; ++k) {
      const BigInt expected = binomial(n + k, n - k);
      for (SymMethod method : kAllSymMethods) {
        if (method == SymMethod::minors && n > opt.minor_cap) continue;
        bool ok = false;
        try {
          ok = symfun(method, n, k, opt.minor_cap) == expected;
        } catch (const InvariantViolation&) {
        }
        agree.expect(ok, [&] { return at(n, k) + " method=" + std::string(to_string(method)); });
      }
    }
  }
  if (opt.n_max > opt.minor_cap) agree.note("minors skipped above n=" + std::to_string(opt.minor_cap));
  out.push_back(agree.done());

  Check trace("S_1^n = n(n+1)/2 and S_n^n = 1");
  for (Index n = 1; n <= opt.n_max; ++n) {
    trace.expect(symfun_rec6(n, 1) == BigInt(n * (n + 1) / 2) && symfun_rec6(n, n) == 1,
                 [n] { return "n=" + std::to_string(n); });
  }
  out.push_back(trace.done());

  Check ratio("ratio recurrence divides exactly");
  for (Index n = 2; n <= opt.n_max; ++n) {
    for (Index k = 1; k < n; ++k) {
      bool ok = true;
      try {
        symfun_ratio(n, k);
      } catch (const InvariantViolation&) {
        ok = false;
      }
      ratio.expect(ok, [&] { return at(n, k); });
    }
  }
  out.push_back(ratio.done());

  Check mono("S_k^n < S_k^{n+1}");
  for (Index n = 1; n <= opt.n_max; ++n) {
    for (Index k = 1; k <= n; ++k) mono.expect(symfun_closed(n, k) < symfun_closed(n + 1, k), [&] { return at(n, k); });
  }
  out.push_back(mono.done());

  Check vieta("charpoly(x) = det(x I - A_n), x in -2..2");
  for (Index n = 1; n <= std::min<Index>(opt.n_max, 12); ++n) {
    const CharPoly p = charpoly(n);
    const ExactMatrix a = min_matrix(n);
    for (int x = -2; x <= 2; ++x) {
      const ExactMatrix shifted = ExactMatrix::Identity(n, n) * BigInt(x) - a;
      vieta.expect(p(BigInt(x)) == det_bareiss(shifted),
                   [&] { return "n=" + std::to_string(n) + " x=" + std::to_string(x); });
    }
  }
  out.push_back(vieta.done());
}

void binomial_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Check identity("C(n+k,n-k) = C(n+k-1,n-k-1) + sum_i C(n+k-1-i,n-k+1-i)");
  Check reflect("C(n+k, n-k) = C(n+k, 2k)");
  for (Index n = 0; n <= opt.n_max; ++n) {
    for (Index k = 0; k <= n; ++k) {
      auto at = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };
      identity.expect(binomial_identity_check(n, k), at);
      reflect.expect(binomial(n + k, n - k) == binomial(n + k, 2 * k), at);
    }
  }
  out.push_back(identity.done());
  out.push_back(reflect.done());
}

void fibonacci_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  Check identity("sum_k C(n+k, 2k) = F_{2n+1}");
  for (Index n = 0; n <= opt.n_max; ++n) {
    identity.expect(fibonacci_identity(n), [n] { return "n=" + std::to_string(n); });
  }
  out.push_back(identity.done());

  Check cassini("F_{i-1} F_{i+1} - F_i^2 = (-1)^i");
  const auto seq = fib_sequence(2 * std::max<Index>(opt.n_max, 1) + 2);
  for (std::size_t i = 2; i + 1 <= seq.size(); ++i) {
    // seq[i-1] is F_i.
    const BigInt lhs = seq[i - 2] * seq[i] - seq[i - 1] * seq[i - 1];
    cassini.expect(lhs == (i % 2 == 0 ? 1 : -1), [i] { return "i=" + std::to_string(i); });
  }
  out.push_back(cassini.done());
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::dets: return "dets";
    case Suite::symfun: return "symfun";
    case Suite::binomial: return "binomial";
    case Suite::fibonacci: return "fibonacci";
    case Suite::all: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (auto s : {Suite::dets, Suite::symfun, Suite::binomial, Suite::fibonacci, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(Suite suite, const VerifyOptions& options) {
  if (options.n_max < 0) throw UsageError("n-max must be nonnegative");
  VerifyReport report;
  report.suite = suite;
  report.options = options;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::dets) dets_suite(options, report.checks);
  if (all || suite == Suite::symfun) symfun_suite(options, report.checks);
  if (all || suite == Suite::binomial) binomial_suite(options, report.checks);
  if (all || suite == Suite::fibonacci) fibonacci_suite(options, report.checks);
  return report;
}

}  // namespace minmat
