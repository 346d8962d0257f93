#include "sosprop/known_values.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef SOSPROP_DATA_DIR
#define SOSPROP_DATA_DIR "data"
#endif

namespace sosprop {

KnownValuesTable KnownValuesTable::parse(std::string_view text)
{
    KnownValuesTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        int r = 0, s = 0, n = 0, exact = 0;
        if (!(fields >> r)) continue;
        if (!(fields >> s >> n >> exact) || (exact != 0 && exact != 1))
            throw std::invalid_argument("known values line " + std::to_string(line_no) + ": expected 'r s n exact'");
        std::string extra;
        if (fields >> extra) throw std::invalid_argument("known values line " + std::to_string(line_no) + ": trailing fields");
        if (r < 1 || s < 1 || n < std::max(r, s) || n > r * s)
            throw std::invalid_argument("known values line " + std::to_string(line_no) + ": need max(r,s) <= n <= r*s");

        const KnownValue value{n, exact == 1};
        for (auto key : {std::pair{r, s}, std::pair{s, r}}) {
            auto [it, inserted] = table.entries_.try_emplace(key, value);
            if (!inserted && (it->second.n != value.n || it->second.exact != value.exact))
                throw std::invalid_argument("known values line " + std::to_string(line_no) + ": conflicting entry");
        }
        ++table.source_rows_;
        if (!value.exact) ++table.upper_bound_rows_;
    }
    return table;
}

KnownValuesTable KnownValuesTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open known values table " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::optional<KnownValue> KnownValuesTable::lookup(int r, int s) const
{
    auto it = entries_.find({r, s});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

KnownValuesTable::Expectation KnownValuesTable::expectation(int r, int s, int n) const
{
    // Rows and columns need distinct colors whatever the table says.
    if (n < std::max(r, s)) return Expectation::Nonexistent;
    const auto entry = lookup(r, s);
    if (!entry) return Expectation::Unknown;
    if (n >= entry->n) return Expectation::Exists;
    return entry->exact ? Expectation::Nonexistent : Expectation::Unknown;
}

std::string_view to_string(KnownValuesTable::Expectation e)
{
    switch (e) {
    case KnownValuesTable::Expectation::Exists: return "exists";
    case KnownValuesTable::Expectation::Nonexistent: return "nonexistent";
    case KnownValuesTable::Expectation::Unknown: return "unknown";
    }
    return "?";
}

std::filesystem::path default_known_values_path()
{
    return std::filesystem::path(SOSPROP_DATA_DIR) / "known_values.txt";
}

}  // namespace sosprop
