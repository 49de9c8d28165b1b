#ifndef RTCOVER_BOUNDS_HPP
#define RTCOVER_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

namespace rtcover {

struct BoundResult {
  long long value = 0;
  enum class Kind { Lower, Upper, Exact } kind = Kind::Upper;
  std::string source;      // e.g. "thm-1.2", "thm-1.4/case-3"
  std::string applicable;  // the range condition that fired
};

// floor((r-t)/2) + 1, from the one-level construction.
BoundResult lower_bound(int r, int t);

// Minimum of the applicable piecewise upper bounds and the trivial r-t+1.
// Range tests are exact integer comparisons.
BoundResult upper_bound(int r, int t);

// Every case whose range contains (r,t), before taking the minimum.
std::vector<BoundResult> upper_bound_cases(int r, int t);

// floor((r-t)/k) + 1; exact (tight) for k >= 3, t >= 1 and for k = 2 with
// 3t > r.
BoundResult kwise_bound(int r, int t, int k);

// floor of ((Delta-1)/delta)·(r/t) - (Delta-delta-1)/delta.
BoundResult degree_bound(int r, int t, int min_degree, int max_degree);

// floor of r/t - r/(dt) + 1/d for d-regular instances; equality exactly for
// duals of resolvable 2-(v,d,t) designs.
BoundResult regular_bound(int r, int t, int d);

// r - t when t < r <= t^2 + 3t - 1, for strictly t-intersecting instances.
std::optional<BoundResult> strict_bound(int r, int t);

// Bounds on the s-cover extremal value, 1 <= s <= t <= r.
std::vector<BoundResult> scover_bounds(int r, int t, int s);

enum class ConjectureStatus { ProvedTight, Proved, OpenExceptional, Open };

struct ConjectureReport {
  ConjectureStatus status = ConjectureStatus::Open;
  std::string source;
  bool not_tight = false;  // upper bound already below r-t-1
};

const char* to_string(ConjectureStatus s);

// Status of the r-t conjecture at (r,t), 1 <= t <= r-1.
ConjectureReport conjecture_status(int r, int t);

// Exact rational, only as large as the asymptotics grid needs.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);
  static Rational of(long long n) { return Rational(n, 1); }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
  bool operator==(const Rational& o) const;
  double to_double() const { return static_cast<double>(num) / den; }
};

struct AsymptoticsRow {
  Rational alpha;
  Rational lower;
  Rational upper;
};

// Normalized limits of the piecewise bounds at t = alpha·r; floor/ceiling
// constants are dropped, as a limit report.
std::vector<AsymptoticsRow> asymptotics_report(
    const std::vector<Rational>& alpha_grid);

// CSV with header alpha,lower,upper and fixed 6-decimal fields.
std::string asymptotics_csv(const std::vector<AsymptoticsRow>& rows);

}  // namespace rtcover

#endif  // RTCOVER_BOUNDS_HPP
