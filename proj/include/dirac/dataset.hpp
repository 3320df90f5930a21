#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dirac/screener.hpp"

namespace dirac {

struct TableEntry {
    int table = 0;  // 1-based, appendix order
    std::int64_t kgb_x = 0;
    IntVec7 inf_char{};
    IntVec7 lambda{};
    InfChar nu;
    std::vector<Labels> spin_lkts;
    std::vector<std::int64_t> lkt_multiplicities;  // parallel to spin_lkts, default 1
    bool star = false;
    bool club = false;
    bool multiplicity_two = false;
    std::optional<std::int64_t> dual_of;
    std::optional<int> lkt_marked;
};

struct NuException {
    std::int64_t kgb_x = 0;
    InfChar nu;
    Rational nu_norm_sq;
};

struct SummaryStats {
    std::vector<std::pair<Rational, std::int64_t>> nu_norm_multiset;
    std::vector<std::int64_t> string_counts;  // N_0..N_6
    std::vector<std::pair<std::vector<int>, std::int64_t>> n6_by_support;
    std::int64_t fs_scattered = 0;
    std::int64_t strings = 0;
    std::int64_t starred = 0;
    std::vector<std::int64_t> phi_counts;
    std::int64_t phi_total = 0;
    std::vector<NuException> exceptions;
};

struct Dataset {
    std::string version;
    std::vector<TableEntry> entries;  // dual rows expanded
    SummaryStats stats;
};

struct DatasetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Dataset load_dataset(const std::string& path);
Dataset parse_dataset(const std::string& text);
std::string default_dataset_path();

// Fills a dual row from its partner (same inf_char): reversed spin LKTs,
// shared lambda, nu and multiplicities.
TableEntry dual_entry(const TableEntry& source, const TableEntry& row);
Labels reversed(const Labels& l);

struct Report {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
    void merge(const Report& o);
};

std::string entry_name(const TableEntry& e);

bool is_trivial_entry(const TableEntry& e);
const NuException* nu_exception(const TableEntry& e, const SummaryStats& stats);

// Per spin LKT: spin norm equality, a Huang-Pandzic witness, u-smallness;
// then the nu bound unless the entry is exempt.
Report verify_entry(const TableEntry& e, const SummaryStats& stats);
Report verify_entries(const std::vector<TableEntry>& entries, const SummaryStats& stats, unsigned threads = 0);
Report verify_statistics(const std::vector<TableEntry>& entries, const SummaryStats& stats);

// Signed count per gamma over the spin LKTs, parity of the achieving chamber.
std::map<Labels, std::int64_t> dirac_index(const TableEntry& e);
Report verify_cancellations(const std::vector<TableEntry>& entries, const SummaryStats& stats);

}  // namespace dirac
