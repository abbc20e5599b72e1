#include "rectwalk/analysis.hpp"

#include "rectwalk/error.hpp"

#include <cmath>
#include <numbers>

namespace rectwalk {

double alpha_exponent() { return 1.0 + std::numbers::pi / std::acos(7.0 / 8.0); }

void CountTable::record(int n, const BigInt& value, Provenance source) {
    auto [it, fresh] = entries_.try_emplace(n, CountEntry{value, {source}});
    if (fresh) return;
    if (it->second.value != value) {
        throw InvariantError("count table: n = " + std::to_string(n) + " has conflicting values " +
                             it->second.value.str() + " and " + value.str());
    }
    it->second.sources.push_back(source);
}

const BigInt& CountTable::at(int n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) throw DomainError("count table has no entry for n = " + std::to_string(n));
    return it->second.value;
}

int CountTable::max_n() const { return entries_.empty() ? -1 : entries_.rbegin()->first; }

CountTable count_table(WalkClass cls, int n_max, const std::optional<FactorPattern>& pattern, int enumerate_up_to,
                       int threads) {
    if (n_max < 0) throw DomainError("count_table: n_max must be nonnegative");
    CountTable table(cls, pattern);
    const auto values = count_sequence(n_max, cls, pattern ? &*pattern : nullptr);
    for (int n = 0; n <= n_max; ++n) table.record(n, values[static_cast<std::size_t>(n)], Provenance::dp);
    for (int n = 0; n <= std::min(enumerate_up_to, n_max); ++n) {
        if (!pattern) {
            table.record(n, BigInt(count_walks(n, cls, threads)), Provenance::enumeration);
            continue;
        }
        std::uint64_t count = 0;
        for_each_walk(n, cls, [&](const Walk& w) { count += avoids(w, *pattern) ? 1 : 0; });
        table.record(n, BigInt(count), Provenance::enumeration);
    }
    return table;
}

BoundReport bounds(int L, int L0) {
    if (L < 1 || L0 < 1) throw DomainError("bounds: L and L0 must be positive");
    const Rational base = 1 / kLambda;
    auto power = [&](int e) {
        Rational p = 1;
        for (int i = 0; i < e; ++i) p *= base;
        return p;
    };
    BoundReport report;
    report.L = L;
    report.L0 = L0;
    report.main_bound = kLambda - power(3 * L - 1);
    report.refined_bound = kLambda - power(L0 - 1);
    report.radius = base / (1 - power(L0));
    return report;
}

bool InequalityReport::all_hold() const {
    for (const auto& row : rows) {
        if (!row.holds) return false;
    }
    return true;
}

BigInt insertion_sum(int n, int L0, const std::vector<BigInt>& avoiding) {
    BigInt sum = 0;
    for (int q = 0; n - q * L0 >= 0; ++q) {
        const int rest = n - q * L0;
        sum += binomial(rest + q, q) * avoiding[static_cast<std::size_t>(rest)];
    }
    return sum;
}

InequalityReport verify_insertion_inequality(int n_max, const FactorPattern& pattern) {
    if (!is_admissible(pattern.walk()) || !is_overlap_free(pattern)) {
        throw DomainError("verify_insertion_inequality: pattern must be admissible and overlap-free");
    }
    const auto a = count_sequence(n_max, WalkClass::lhqwadm);
    const auto b = count_sequence(n_max, WalkClass::lhqwadm, &pattern);
    InequalityReport report;
    const int L0 = static_cast<int>(pattern.length());
    for (int n = 0; n <= n_max; ++n) {
        InequalityRow row{n, a[static_cast<std::size_t>(n)], insertion_sum(n, L0, b), false};
        row.holds = row.lhs >= row.rhs;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<GrowthRow> growth_report(const CountTable& table) {
    std::vector<GrowthRow> rows;
    for (const auto& [n, entry] : table.entries()) {
        if (n < 1 || !table.contains(n - 1)) continue;
        GrowthRow row;
        row.n = n;
        const BigInt& prev = table.at(n - 1);
        if (prev != 0) row.ratio = Rational(entry.value, prev);
        row.root = std::pow(entry.value.convert_to<double>(), 1.0 / n);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ProportionRow> proportion_report(int n_max, const GeomPattern& pattern, const AvoidCountOptions& options) {
    if (n_max > options.cap) {
        throw CapExceeded("proportion_report: n_max = " + std::to_string(n_max) + " exceeds the enumeration cap " +
                          std::to_string(options.cap));
    }
    std::vector<ProportionRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        ProportionRow row;
        row.n = n;
        row.avoiders = count_avoiding_rect(n, pattern, options);
        row.total = count_walks(n, WalkClass::lhqe, options.threads);
        row.ratio = Rational(row.avoiders, row.total);
        rows.push_back(std::move(row));
    }
    return rows;
}

bool ratios_strictly_increasing(const std::vector<BigInt>& values, int first, int last) {
    for (int n = first; n < last; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (!(values[i] * values[i] < values[i + 1] * values[i - 1])) return false;
    }
    return true;
}

bool ratios_below_lambda(const std::vector<BigInt>& values, int first, int last) {
    for (int n = first; n <= last; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (!(2 * values[i] < 27 * values[i - 1])) return false;
    }
    return true;
}

}  // namespace rectwalk
