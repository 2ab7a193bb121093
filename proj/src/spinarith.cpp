#include "cotor/spinarith.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cotor {

namespace {

constexpr std::int64_t pow2(int e) { return std::int64_t{1} << e; }

void require_n(int n) {
  if (n < 9) throw std::invalid_argument("n must be at least 9, got " + std::to_string(n));
}

// Candidates t in [1, s] with 2^s - 2^t - 1 <= n < 2^s - 2^{t-1} - 1.
std::vector<int> t_candidates(int n, int s) {
  std::vector<int> out;
  for (int t = 1; t <= s; ++t) {
    if (pow2(s) - pow2(t) - 1 <= n && n < pow2(s) - pow2(t - 1) - 1) out.push_back(t);
  }
  return out;
}

}  // namespace

int alpha(std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("alpha is defined for positive integers only");
  return std::popcount(static_cast<std::uint64_t>(k));
}

int hurwitz_radon(int n) {
  require_n(n);
  const int ell = (n - 1) / 8;
  const int r = n - 8 * ell;
  switch (r) {
    case 1: return 4 * ell;
    case 2: return 4 * ell + 1;
    case 3:
    case 4: return 4 * ell + 2;
    default: return 4 * ell + 3;
  }
}

bool SpinParams::in_E(int k) const { return std::binary_search(E.begin(), E.end(), k); }

SpinParams spin_params(int n) {
  require_n(n);
  SpinParams p;
  p.n = n;
  p.s = 0;
  while (pow2(p.s) < n) ++p.s;

  if (n >= pow2(p.s) - 2) {
    p.t = 1;
  } else {
    const auto ts = t_candidates(n, p.s);
    if (ts.size() != 1) {
      throw std::logic_error("t is not uniquely determined for n=" + std::to_string(n));
    }
    p.t = ts.front();
  }

  for (int k = 2; k <= n; ++k) {
    if (alpha(k - 1) >= 2) p.E.push_back(k);
  }
  const std::int64_t top = pow2(p.s);
  for (int k = 2; k <= n; ++k) {
    if (top - k + 1 > n || top - k < 1) continue;
    if (alpha(k - 1) >= 2 && alpha(top - k) >= 2) p.D.push_back(k);
  }

  if (p.D.empty()) {
    p.h_prime = p.s;
  } else {
    p.m = p.D.back();
    p.m_prime = pow2(p.s - p.t) * (top - *p.m) + 1;
    p.epsilon = *p.m_prime <= n ? 1 : 0;
    p.h_prime = 2 * p.s - p.t + *p.epsilon;
  }
  p.ell = (n - 1) / 8;
  p.h = hurwitz_radon(n);

  const int eps = p.eps_or_zero();
  for (int k = 0; k <= p.s - p.t - 1; ++k) {
    const int value = static_cast<int>(top - pow2(p.s - 1 - k) - 1);
    p.sigma.push_back(value);
    p.C0.insert(value);
    const int tk = static_cast<int>(pow2(p.s - 1) + pow2(k) + 1);
    p.tau.push_back(tk);
    p.C1.insert(tk);
  }
  if (eps == 1) p.sigma.push_back(*p.m);
  for (int k : p.E) {
    if (p.C0.count(k) > 0) continue;
    if (eps == 1 && k == *p.m) continue;
    p.sigma.push_back(k);
  }
  return p;
}

// ----------------------------------------------------------------- checks

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "n/a";
  }
  return "?";
}

bool CheckReport::ok() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [](const NamedCheck& c) { return c.status == CheckStatus::fail; }));
}

CheckReport verify_parameter_identities(int n) {
  CheckReport report;
  report.n = n;
  const SpinParams p = spin_params(n);
  const std::int64_t top = pow2(p.s);
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                             std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    report.checks.push_back({std::move(name), CheckStatus::not_applicable, std::move(why)});
  };

  add("s range", pow2(p.s - 1) < n && n <= top);
  if (n < top - 2) {
    const auto ts = t_candidates(n, p.s);
    add("t unique", ts.size() == 1 && ts.front() == p.t,
        std::to_string(ts.size()) + " candidate(s)");
  } else {
    add("t unique", p.t == 1, "n in {2^s, 2^s-1, 2^s-2}");
  }
  add("|E| = n-s-1", static_cast<int>(p.E.size()) == n - p.s - 1,
      "|E|=" + std::to_string(p.E.size()));

  add("D empty iff n = 2^{s-1}+1", p.D.empty() == (n == pow2(p.s - 1) + 1));

  if (p.D.empty()) {
    add("h' = s when D empty", p.h_prime == p.s && !p.m && !p.m_prime && !p.epsilon);
  } else {
    const bool defs = *p.m == p.D.back() && *p.m_prime == pow2(p.s - p.t) * (top - *p.m) + 1 &&
                      (*p.epsilon == 1) == (*p.m_prime <= n) &&
                      p.h_prime == 2 * p.s - p.t + *p.epsilon;
    add("m, m', epsilon, h' definitions", defs);
  }

  // sigma: formula on C0, m at position s-t when epsilon = 1, ascending rest,
  // bijective onto E.
  {
    bool ok = static_cast<int>(p.sigma.size()) == n - p.s - 1;
    for (int k = 0; ok && k <= p.s - p.t - 1; ++k) {
      ok = p.sigma[k] == top - pow2(p.s - 1 - k) - 1;
    }
    const int rest = p.s - p.t + p.eps_or_zero();
    if (ok && p.eps_or_zero() == 1) ok = p.sigma[p.s - p.t] == *p.m;
    for (std::size_t k = rest + 1; ok && k < p.sigma.size(); ++k) {
      ok = p.sigma[k - 1] < p.sigma[k];
    }
    std::vector<int> sorted = p.sigma;
    std::sort(sorted.begin(), sorted.end());
    ok = ok && sorted == p.E;
    add("sigma enumerates E", ok);
  }
  add("C0 subset of E", std::all_of(p.C0.begin(), p.C0.end(), [&](int k) { return p.in_E(k); }));
  {
    bool ok = true;
    for (int k = 0; k < static_cast<int>(p.tau.size()); ++k) {
      ok = ok && p.tau[k] == pow2(p.s - 1) + pow2(k) + 1;
    }
    add("tau formula", ok);
  }

  // k -> 2^s + 1 - k maps D to itself
  if (p.D.empty()) {
    skip("D symmetric", "D empty");
  } else {
    bool ok = true;
    for (int k : p.D) {
      const auto mirror = top - k + 1;
      ok = ok && std::binary_search(p.D.begin(), p.D.end(), static_cast<int>(mirror));
    }
    add("D symmetric", ok);
  }

  if (p.D.empty()) {
    skip("2^{s-t+1}(k-1)+1 > n on D", "D empty");
    skip("2^{s-t}(k-1)+1 > n on D", "D empty");
  } else {
    bool ok1 = true;
    bool ok2 = true;
    for (int k : p.D) {
      ok1 = ok1 && pow2(p.s - p.t + 1) * (k - 1) + 1 > n;
      ok2 = ok2 && pow2(p.s - p.t) * (k - 1) + 1 > n;
    }
    add("2^{s-t+1}(k-1)+1 > n on D", ok1);
    if (*p.epsilon == 0) {
      add("2^{s-t}(k-1)+1 > n on D", ok2);
    } else {
      skip("2^{s-t}(k-1)+1 > n on D", "epsilon = 1");
    }
  }

  const bool large = n >= 18 && n != pow2(p.s - 1) + 1;
  if (!large) {
    skip("sigma/tau distinct", "needs n >= 18 and n != 2^{s-1}+1");
    skip("C1 subset of E", "needs n >= 18 and n != 2^{s-1}+1");
  } else {
    std::set<int> all(p.sigma.begin(), p.sigma.begin() + (p.s - p.t));
    all.insert(p.tau.begin(), p.tau.end());
    add("sigma/tau distinct", static_cast<int>(all.size()) == 2 * (p.s - p.t));
    add("C1 subset of E",
        std::all_of(p.C1.begin(), p.C1.end(), [&](int k) { return p.in_E(k); }));
  }

  if (!large || p.eps_or_zero() != 1) {
    skip("m, m' not in C", "needs n >= 18, n != 2^{s-1}+1, epsilon = 1");
    skip("m = n and bounds", "needs n >= 18, n != 2^{s-1}+1, epsilon = 1");
  } else {
    auto in_c = [&](std::int64_t v) {
      return p.C0.count(static_cast<int>(v)) > 0 || p.C1.count(static_cast<int>(v)) > 0;
    };
    add("m, m' not in C", !in_c(*p.m) && !in_c(*p.m_prime));
    const std::int64_t gap = top - n;
    add("m = n and bounds",
        *p.m == n && pow2(p.t - 1) + 1 < gap && gap <= pow2(p.t) + 1);
  }

  if (n <= 16) {
    add("h' = h", p.h_prime == p.h);
  } else {
    add("h' < h", p.h_prime < p.h,
        "h'=" + std::to_string(p.h_prime) + " h=" + std::to_string(p.h));
  }
  return report;
}

}  // namespace cotor
