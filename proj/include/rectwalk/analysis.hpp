#ifndef RECTWALK_ANALYSIS_HPP
#define RECTWALK_ANALYSIS_HPP

#include "rectwalk/factor.hpp"
#include "rectwalk/geometry.hpp"
#include "rectwalk/numeric.hpp"
#include "rectwalk/walk.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rectwalk {

/// Growth constant of strong rectangulations, kept exact.
inline const Rational kLambda{27, 2};

/// 1 + pi / arccos(7/8); reported, never computed with.
double alpha_exponent();

enum class Provenance { enumeration, dp };

struct CountEntry {
    BigInt value;
    std::vector<Provenance> sources;
};

/// Class sizes (or pattern-avoiding class sizes) indexed by n.
class CountTable {
public:
    CountTable(WalkClass cls, std::optional<FactorPattern> pattern) : cls_(cls), pattern_(std::move(pattern)) {}

    WalkClass walk_class() const noexcept { return cls_; }
    const std::optional<FactorPattern>& pattern() const noexcept { return pattern_; }
    const std::map<int, CountEntry>& entries() const noexcept { return entries_; }

    /// Records a value. Throws InvariantError when it disagrees with a value
    /// already recorded for n from another source.
    void record(int n, const BigInt& value, Provenance source);
    const BigInt& at(int n) const;
    bool contains(int n) const { return entries_.count(n) != 0; }
    int max_n() const;

private:
    WalkClass cls_;
    std::optional<FactorPattern> pattern_;
    std::map<int, CountEntry> entries_;
};

/// Counts for 0 <= n <= n_max from the counting DP; a_0 = 1 by convention.
/// When enumerate_up_to >= 0, entries with n <= enumerate_up_to are also
/// enumerated and cross-checked.
CountTable count_table(WalkClass cls, int n_max, const std::optional<FactorPattern>& pattern = std::nullopt,
                       int enumerate_up_to = -1, int threads = 1);

struct BoundReport {
    int L = 0;
    int L0 = 0;
    Rational main_bound;
    Rational refined_bound;
    Rational radius;
};

BoundReport bounds(int L, int L0);

struct InequalityRow {
    int n = 0;
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
};

struct InequalityReport {
    std::vector<InequalityRow> rows;
    bool all_hold() const;
};

/// sum_q binom(n - q L0 + q, q) b_{n - q L0} with b from `avoiding`.
BigInt insertion_sum(int n, int L0, const std::vector<BigInt>& avoiding);

/// a_n >= insertion_sum(n) for 0 <= n <= n_max over admissible walks.
/// P must be admissible and overlap-free.
InequalityReport verify_insertion_inequality(int n_max, const FactorPattern& pattern);

struct GrowthRow {
    int n = 0;
    std::optional<Rational> ratio;  // a_n / a_{n-1}; empty when a_{n-1} = 0
    double root = 0.0;              // a_n^(1/n)
};

std::vector<GrowthRow> growth_report(const CountTable& table);

struct ProportionRow {
    int n = 0;
    BigInt avoiders;
    BigInt total;
    Rational ratio;
};

std::vector<ProportionRow> proportion_report(int n_max, const GeomPattern& pattern,
                                             const AvoidCountOptions& options = {});

/// Exact log-convexity test a_n^2 < a_{n+1} a_{n-1}, i.e. strictly
/// increasing successive ratios.
bool ratios_strictly_increasing(const std::vector<BigInt>& values, int first, int last);
/// a_n < (27/2) a_{n-1} for first <= n <= last.
bool ratios_below_lambda(const std::vector<BigInt>& values, int first, int last);

}  // namespace rectwalk

#endif
