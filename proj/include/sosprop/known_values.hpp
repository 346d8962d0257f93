#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace sosprop {

struct KnownValue {
    int n = 0;
    bool exact = true;  // false: n is only an upper bound
};

/// Published values of r*s over the integers: the smallest n admitting an
/// integer sums-of-squares formula of type [r,s,n].
class KnownValuesTable {
public:
    enum class Expectation { Exists, Nonexistent, Unknown };

    /// Rows "r s n exact"; '#' starts a comment. Entries are closed under r <-> s.
    /// Throws std::invalid_argument on malformed rows, conflicting duplicates, or
    /// values outside max(r,s) <= n <= r*s.
    static KnownValuesTable parse(std::string_view text);
    static KnownValuesTable load(const std::filesystem::path& path);

    std::optional<KnownValue> lookup(int r, int s) const;

    /// Exists when n reaches the entry (exact or bound); Nonexistent only below an
    /// exact entry; Unknown otherwise.
    Expectation expectation(int r, int s, int n) const;

    /// Distinct unordered pairs as stored in the source rows.
    std::size_t source_rows() const { return source_rows_; }
    std::size_t upper_bound_rows() const { return upper_bound_rows_; }

private:
    std::map<std::pair<int, int>, KnownValue> entries_;
    std::size_t source_rows_ = 0;
    std::size_t upper_bound_rows_ = 0;
};

std::string_view to_string(KnownValuesTable::Expectation e);

/// Where the bundled table lives in the source tree.
std::filesystem::path default_known_values_path();

}  // namespace sosprop
