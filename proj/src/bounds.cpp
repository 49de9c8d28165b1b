#include "rtcover/bounds.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "rtcover/arith.hpp"
#include "rtcover/generators.hpp"

namespace rtcover {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

BoundResult lower_bound(int r, int t) {
  require(1 <= t && t <= r, "lower_bound: need 1 <= t <= r");
  return {(r - t) / 2 + 1, BoundResult::Kind::Lower, "thm-1.2",
          "1 <= t <= r"};
}

std::vector<BoundResult> upper_bound_cases(int r, int t) {
  require(1 <= t && t <= r, "upper_bound: need 1 <= t <= r");
  std::vector<BoundResult> cases;
  if (t <= r && r <= 3 * t - 1) {
    cases.push_back({(r - t) / 2 + 1, BoundResult::Kind::Upper,
                     "thm-1.4/case-1", "t <= r <= 3t-1"});
  }
  if (3 * t <= r && 7 * r <= 26 * t) {
    cases.push_back({2LL * r - 5LL * t + 2, BoundResult::Kind::Upper,
                     "thm-1.4/case-2", "3t <= r <= 26t/7"});
  }
  if (26 * t <= 7 * r && r <= 5 * t - 2) {
    cases.push_back({floor_div(9LL * r - 14LL * t, 8) + 2,
                     BoundResult::Kind::Upper, "thm-1.4/case-3",
                     "26t/7 <= r <= 5t-2"});
  }
  if (5 * t - 1 <= r && 9 * r <= 52 * t - 13) {
    cases.push_back({floor_div(15LL * r - 44LL * t, 8) + 3,
                     BoundResult::Kind::Upper, "thm-1.4/case-4",
                     "5t-1 <= r <= (52t-13)/9"});
  }
  cases.push_back({r - t + 1LL, BoundResult::Kind::Upper, "trivial",
                   "1 <= t <= r"});
  return cases;
}

BoundResult upper_bound(int r, int t) {
  std::vector<BoundResult> cases = upper_bound_cases(r, t);
  std::size_t best = 0;
  for (std::size_t i = 1; i < cases.size(); ++i) {
    if (cases[i].value < cases[best].value) best = i;
  }
  return cases[best];
}

BoundResult kwise_bound(int r, int t, int k) {
  require(1 <= t && t <= r, "kwise_bound: need 1 <= t <= r");
  require((k >= 3 && t >= 1) || (k == 2 && 3 * t > r),
          "kwise_bound: need k >= 3, or k = 2 with t > r/3");
  return {(r - t) / k + 1, BoundResult::Kind::Exact, "thm-1.7",
          k >= 3 ? "k >= 3, t >= 1" : "k = 2, t > r/3"};
}

BoundResult degree_bound(int r, int t, int min_degree, int max_degree) {
  require(min_degree >= 1, "degree_bound: need delta >= 1");
  require(max_degree >= min_degree, "degree_bound: need Delta >= delta");
  require(t >= 1 && t <= r, "degree_bound: need 1 <= t <= r");
  long long num = static_cast<long long>(max_degree - 1) * r -
                  static_cast<long long>(t) * (max_degree - min_degree - 1);
  long long den = static_cast<long long>(min_degree) * t;
  return {floor_div(num, den), BoundResult::Kind::Upper, "lemma-3.2",
          "delta >= 1"};
}

BoundResult regular_bound(int r, int t, int d) {
  require(d >= 1, "regular_bound: need d >= 1");
  require(t >= 1 && t <= r, "regular_bound: need 1 <= t <= r");
  long long num = static_cast<long long>(r) * d - r + t;
  long long den = static_cast<long long>(d) * t;
  return {floor_div(num, den), BoundResult::Kind::Upper, "cor-3.4",
          "equality iff dual of a resolvable 2-(v,d,t) design"};
}

std::optional<BoundResult> strict_bound(int r, int t) {
  require(t >= 1, "strict_bound: need t >= 1");
  long long limit = static_cast<long long>(t) * t + 3LL * t - 1;
  if (t < r && r <= limit) {
    return BoundResult{r - t, BoundResult::Kind::Upper, "thm-3.5",
                       "t < r <= t^2+3t-1"};
  }
  return std::nullopt;
}

std::vector<BoundResult> scover_bounds(int r, int t, int s) {
  require(1 <= s && s <= t && t <= r, "scover_bounds: need 1 <= s <= t <= r");
  std::vector<BoundResult> out;
  if (r <= 3 * t - 2 * s) {
    out.push_back({(r - t) / 2 + static_cast<long long>(s),
                   BoundResult::Kind::Exact, "prop-3.8", "r <= 3t-2s"});
  }
  if (r % t == 0 && is_prime_power(r / t - 1)) {
    long long q = r / t - 1;
    out.push_back({s * q, BoundResult::Kind::Lower, "prop-3.9",
                   "r = t(q+1), q prime power"});
  }
  out.push_back({(r - t) / 2 + static_cast<long long>(s),
                 BoundResult::Kind::Lower, "lemma-3.7+thm-1.2",
                 "chained to the s = 1 lower bound"});
  out.push_back({static_cast<long long>(r), BoundResult::Kind::Upper,
                 "trivial", "any edge is an s-cover when s <= t"});
  return out;
}

const char* to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::ProvedTight:
      return "proved_tight";
    case ConjectureStatus::Proved:
      return "proved";
    case ConjectureStatus::OpenExceptional:
      return "open_exceptional";
    case ConjectureStatus::Open:
      return "open";
  }
  return "open";
}

ConjectureReport conjecture_status(int r, int t) {
  require(1 <= t && t <= r - 1, "conjecture_status: need 1 <= t <= r-1");
  static const std::pair<int, int> exceptional[] = {
      {12, 3}, {13, 3}, {16, 4}, {17, 4},
      {18, 4}, {22, 5}, {23, 5}, {28, 6}};

  ConjectureReport report;
  report.not_tight = upper_bound(r, t).value <= r - t - 1;

  if (t == r - 1 || t == r - 2) {
    report.status = ConjectureStatus::ProvedTight;
    report.source = t == r - 1 ? "trivial" : "prior-work";
    return report;
  }
  for (auto [er, et] : exceptional) {
    if (r == er && t == et) {
      report.status = ConjectureStatus::OpenExceptional;
      report.source = "cor-1.6-footnote";
      return report;
    }
  }
  if (r <= 4 * t - 1) {
    report.status = ConjectureStatus::Proved;
    report.source = "prior-work";
    return report;
  }
  if (7 * r <= 36 * t - 17 && upper_bound(r, t).value <= r - t) {
    report.status = ConjectureStatus::Proved;
    report.source = "cor-1.6";
    return report;
  }
  report.status = ConjectureStatus::Open;
  report.source = "";
  return report;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}
bool Rational::operator<(const Rational& o) const {
  return num * o.den < o.num * den;
}
bool Rational::operator<=(const Rational& o) const {
  return num * o.den <= o.num * den;
}
bool Rational::operator==(const Rational& o) const {
  return num == o.num && den == o.den;
}

std::vector<AsymptoticsRow> asymptotics_report(
    const std::vector<Rational>& alpha_grid) {
  const Rational zero(0, 1), one(1, 1);
  std::vector<AsymptoticsRow> rows;
  rows.reserve(alpha_grid.size());
  for (const Rational& a : alpha_grid) {
    if (!(zero < a) || !(a <= one)) {
      throw std::invalid_argument("asymptotics grid values must be in (0,1]");
    }
    AsymptoticsRow row;
    row.alpha = a;
    row.lower = (one - a) * Rational(1, 2);
    Rational upper = one - a;  // trivial piece, always applicable
    auto consider = [&](const Rational& lo, const Rational& hi,
                        const Rational& value) {
      if (lo <= a && a <= hi && value < upper) upper = value;
    };
    consider(Rational(1, 3), one, (one - a) * Rational(1, 2));
    consider(Rational(7, 26), Rational(1, 3),
             Rational(2, 1) - Rational(5, 1) * a);
    consider(Rational(1, 5), Rational(7, 26),
             (Rational(9, 1) - Rational(14, 1) * a) * Rational(1, 8));
    consider(Rational(9, 52), Rational(1, 5),
             (Rational(15, 1) - Rational(44, 1) * a) * Rational(1, 8));
    row.upper = upper;
    rows.push_back(row);
  }
  return rows;
}

std::string asymptotics_csv(const std::vector<AsymptoticsRow>& rows) {
  std::string out = "alpha,lower,upper\n";
  char buf[96];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f\n",
                  row.alpha.to_double(), row.lower.to_double(),
                  row.upper.to_double());
    out += buf;
  }
  return out;
}

}  // namespace rtcover
