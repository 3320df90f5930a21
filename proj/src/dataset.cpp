#include "dirac/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <cstdlib>
#include <tuple>

#include <json.hpp>

#include "dirac/parallel.hpp"
#include "dirac/reptheory.hpp"

namespace dirac {

using nlohmann::json;

namespace {

std::string vec_str(const std::array<std::int64_t, 7>& v) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < 7; ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

std::string where(const json& row, std::size_t index) {
    std::ostringstream os;
    os << "entry " << index;
    if (row.is_object() && row.contains("kgb_x")) os << " (kgb_x " << row["kgb_x"].dump();
    if (row.is_object() && row.contains("inf_char")) os << ", inf_char " << row["inf_char"].dump();
    if (row.is_object() && row.contains("kgb_x")) os << ")";
    return os.str();
}

Rational rational_of(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw DatasetError("expected an integer or a \"p/q\" string, got " + j.dump());
}

IntVec7 ints7(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 7) throw DatasetError(std::string(field) + " must be an array of 7 integers");
    IntVec7 v{};
    for (int i = 0; i < 7; ++i) {
        if (!j[i].is_number_integer()) throw DatasetError(std::string(field) + " must hold integers");
        v[i] = j[i].get<std::int64_t>();
    }
    return v;
}

template <class T>
T required(const json& row, const char* field) {
    if (!row.contains(field)) throw DatasetError(std::string("missing field '") + field + "'");
    try {
        return row[field].get<T>();
    } catch (const json::exception&) {
        throw DatasetError(std::string("field '") + field + "' has the wrong type");
    }
}

TableEntry parse_row(const json& row) {
    if (!row.is_object()) throw DatasetError("entry is not an object");
    static const std::set<std::string> known = {"table", "inf_char", "kgb_x", "lambda", "nu", "spin_lkts", "star",
                                                "club", "dual_of", "multiplicity_two", "lkt_multiplicities",
                                                "lkt_marked"};
    for (const auto& [k, v] : row.items())
        if (!known.count(k)) throw DatasetError("unknown field '" + k + "'");
    TableEntry e;
    e.table = required<int>(row, "table");
    e.kgb_x = required<std::int64_t>(row, "kgb_x");
    if (!row.contains("inf_char")) throw DatasetError("missing field 'inf_char'");
    e.inf_char = ints7(row["inf_char"], "inf_char");
    e.star = row.value("star", false);
    e.club = row.value("club", false);
    e.multiplicity_two = row.value("multiplicity_two", false);
    if (row.contains("lkt_marked")) e.lkt_marked = row["lkt_marked"].get<int>();
    if (row.contains("dual_of")) {
        e.dual_of = row["dual_of"].get<std::int64_t>();
        for (const char* f : {"lambda", "nu", "spin_lkts", "lkt_multiplicities"})
            if (row.contains(f)) throw DatasetError(std::string("dual row must not carry '") + f + "'");
        return e;
    }
    if (!row.contains("lambda") || !row.contains("nu") || !row.contains("spin_lkts"))
        throw DatasetError("entry needs lambda, nu and spin_lkts");
    e.lambda = ints7(row["lambda"], "lambda");
    const json& nu = row["nu"];
    if (!nu.is_array() || nu.size() != 7) throw DatasetError("nu must be an array of 7 rationals");
    for (const auto& c : nu) e.nu.push_back(rational_of(c));
    const json& lkts = row["spin_lkts"];
    if (!lkts.is_array() || lkts.empty()) throw DatasetError("spin_lkts must be a non-empty array");
    for (const auto& l : lkts) e.spin_lkts.push_back(ints7(l, "spin_lkts"));
    if (row.contains("lkt_multiplicities")) {
        e.lkt_multiplicities = row["lkt_multiplicities"].get<std::vector<std::int64_t>>();
        if (e.lkt_multiplicities.size() != e.spin_lkts.size())
            throw DatasetError("lkt_multiplicities and spin_lkts differ in length");
    } else {
        e.lkt_multiplicities.assign(e.spin_lkts.size(), 1);
    }
    if (e.lkt_marked && (*e.lkt_marked < 0 || *e.lkt_marked >= static_cast<int>(e.spin_lkts.size())))
        throw DatasetError("lkt_marked is out of range");
    return e;
}

void check_entry_invariants(const TableEntry& e) {
    for (auto c : e.inf_char)
        if (c != 0 && c != 1) throw DatasetError("inf_char coordinates must be 0 or 1");
    for (const auto& mu : e.spin_lkts) {
        if (!is_dominant(mu)) throw DatasetError("spin LKT " + vec_str(mu) + " is not dominant");
        if (!is_K_type(mu)) throw DatasetError("spin LKT " + vec_str(mu) + " violates the K-type parity rule");
    }
    const bool mult_two = e.kgb_x == 9650 || e.kgb_x == 9648;
    if (e.multiplicity_two != mult_two) throw DatasetError("multiplicity_two must be set exactly on kgb_x 9650 and 9648");
}

SummaryStats parse_stats(const json& s) {
    SummaryStats st;
    if (!s.is_object()) throw DatasetError("stats must be an object");
    try {
        for (const auto& m : s.at("nu_norm_multiset"))
            st.nu_norm_multiset.emplace_back(rational_of(m.at("value")), m.at("count").get<std::int64_t>());
        const json& sc = s.at("string_counts");
        st.string_counts = sc.at("N").get<std::vector<std::int64_t>>();
        for (const auto& m : sc.at("N6_by_support"))
            st.n6_by_support.emplace_back(m.at("support").get<std::vector<int>>(), m.at("count").get<std::int64_t>());
        const json& t = s.at("totals");
        st.fs_scattered = t.at("fs_scattered").get<std::int64_t>();
        st.strings = t.at("strings").get<std::int64_t>();
        st.starred = t.at("starred").get<std::int64_t>();
        st.phi_counts = t.at("phi_counts").get<std::vector<std::int64_t>>();
        st.phi_total = t.at("phi_total").get<std::int64_t>();
        for (const auto& x : s.at("exceptions")) {
            NuException ex;
            ex.kgb_x = x.at("kgb_x").get<std::int64_t>();
            for (const auto& c : x.at("nu")) ex.nu.push_back(rational_of(c));
            ex.nu_norm_sq = rational_of(x.at("nu_norm_sq"));
            st.exceptions.push_back(std::move(ex));
        }
    } catch (const json::exception& err) {
        throw DatasetError(std::string("stats: ") + err.what());
    }
    return st;
}

}  // namespace

Labels reversed(const Labels& l) {
    Labels r;
    std::reverse_copy(l.begin(), l.end(), r.begin());
    return r;
}

TableEntry dual_entry(const TableEntry& source, const TableEntry& row) {
    TableEntry e = row;
    e.lambda = source.lambda;
    e.nu = source.nu;
    e.lkt_multiplicities = source.lkt_multiplicities;
    e.spin_lkts.clear();
    for (const auto& mu : source.spin_lkts) e.spin_lkts.push_back(reversed(mu));
    return e;
}

Dataset parse_dataset(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw DatasetError(std::string("dataset is not valid JSON: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc.contains("stats") || !doc.contains("paper_version"))
        throw DatasetError("dataset needs top-level entries, stats and paper_version");
    if (!doc["entries"].is_array()) throw DatasetError("entries must be an array");

    Dataset d;
    d.version = doc["paper_version"].get<std::string>();
    d.stats = parse_stats(doc["stats"]);

    const json& rows = doc["entries"];
    std::vector<TableEntry> raw;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
            raw.push_back(parse_row(rows[i]));
        } catch (const std::exception& err) {
            throw DatasetError(where(rows[i], i) + ": " + err.what());
        }
    }
    std::map<std::pair<std::int64_t, IntVec7>, std::size_t> primary;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].dual_of) continue;
        if (!primary.emplace(std::make_pair(raw[i].kgb_x, raw[i].inf_char), i).second)
            throw DatasetError(where(rows[i], i) + ": duplicate (kgb_x, inf_char)");
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        TableEntry e = raw[i];
        if (e.dual_of) {
            auto it = primary.find({*e.dual_of, e.inf_char});
            if (it == primary.end())
                throw DatasetError(where(rows[i], i) + ": dual_of " + std::to_string(*e.dual_of) +
                                   " has no partner with the same inf_char");
            e = dual_entry(raw[it->second], e);
        }
        try {
            check_entry_invariants(e);
        } catch (const std::exception& err) {
            throw DatasetError(where(rows[i], i) + ": " + err.what());
        }
        d.entries.push_back(std::move(e));
    }
    if (static_cast<std::int64_t>(d.entries.size()) != d.stats.fs_scattered)
        throw DatasetError("expanded entry count " + std::to_string(d.entries.size()) + " differs from totals.fs_scattered " +
                           std::to_string(d.stats.fs_scattered));
    return d;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_dataset(ss.str());
}

std::string default_dataset_path() {
    if (const char* p = std::getenv("DIRAC_DATASET")) return p;
    return DIRAC_DEFAULT_DATASET;
}

void Report::merge(const Report& o) {
    checked += o.checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

std::string entry_name(const TableEntry& e) {
    return "kgb_x " + std::to_string(e.kgb_x) + " at " + vec_str(e.inf_char);
}

bool is_trivial_entry(const TableEntry& e) {
    const IntVec7 ones = {1, 1, 1, 1, 1, 1, 1};
    return e.inf_char == ones && e.spin_lkts.size() == 1 && e.spin_lkts[0] == Labels{};
}

const NuException* nu_exception(const TableEntry& e, const SummaryStats& stats) {
    for (const auto& ex : stats.exceptions)
        if (ex.kgb_x == e.kgb_x && ex.nu == e.nu) return &ex;
    return nullptr;
}

Report verify_entry(const TableEntry& e, const SummaryStats& stats) {
    Report r;
    r.checked = 1;
    const InfChar lam = inf_char(e.inf_char);
    const Rational target = nu_norm_sq(lam);
    const std::string name = entry_name(e);
    for (const auto& mu : e.spin_lkts) {
        const std::string m = " spin LKT " + vec_str(mu);
        const Rational s = spin_norm_sq(mu).value;
        if (s != target) {
            r.failures.push_back(name + m + ": spin_norm_sq " + s.str() + " != |Lambda|^2 " + target.str());
            continue;
        }
        auto contrib = spin_contribution(mu, lam);
        if (contrib.empty()) r.failures.push_back(name + m + ": no spin contribution");
        for (const auto& c : contrib)
            if (c.hp_chambers.empty())
                r.failures.push_back(name + m + ": gamma " + vec_str(c.gamma) + " + rho_c is not W(g)-conjugate to Lambda");
        if (!is_usmall(mu)) r.failures.push_back(name + m + ": not u-small");
    }
    const Rational nu2 = nu_norm_sq(e.nu);
    if (const NuException* ex = nu_exception(e, stats)) {
        if (nu2 != ex->nu_norm_sq)
            r.failures.push_back(name + ": exception nu_norm_sq " + nu2.str() + " != " + ex->nu_norm_sq.str());
        else
            r.notes.push_back(name + ": nu_norm_sq " + nu2.str() + " passes as a named exception");
    } else if (is_trivial_entry(e)) {
        r.notes.push_back(name + ": trivial representation, nu_norm_sq " + nu2.str());
    } else if (!(nu2 < kNuBound)) {
        r.failures.push_back(name + ": nu_norm_sq " + nu2.str() + " is not below " + kNuBound.str());
    }
    return r;
}

Report verify_entries(const std::vector<TableEntry>& entries, const SummaryStats& stats, unsigned threads) {
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(entries[a].kgb_x, entries[a].inf_char) < std::tie(entries[b].kgb_x, entries[b].inf_char);
    });
    std::vector<Report> parts(entries.size());
    parallel_for(order.size(), threads, [&](std::size_t i) { parts[i] = verify_entry(entries[order[i]], stats); });
    Report r;
    for (const auto& p : parts) r.merge(p);
    return r;
}

Report verify_statistics(const std::vector<TableEntry>& entries, const SummaryStats& stats) {
    Report r;
    std::map<Rational, std::int64_t> got, want;
    for (const auto& e : entries) ++got[nu_norm_sq(e.nu)];
    for (const auto& [v, c] : stats.nu_norm_multiset) want[v] += c;
    std::set<Rational> keys;
    for (const auto& [v, c] : got) keys.insert(v);
    for (const auto& [v, c] : want) keys.insert(v);
    for (const auto& v : keys) {
        ++r.checked;
        std::int64_t g = got.count(v) ? got[v] : 0, w = want.count(v) ? want[v] : 0;
        if (g != w)
            r.failures.push_back("nu_norm_sq " + v.str() + ": " + std::to_string(g) + " entries, expected " +
                                 std::to_string(w));
    }
    std::int64_t total = 0;
    for (auto n : stats.string_counts) total += n;
    ++r.checked;
    if (total != stats.strings)
        r.failures.push_back("sum of N_i is " + std::to_string(total) + ", expected " + std::to_string(stats.strings));
    std::int64_t n6 = 0;
    for (const auto& [sup, c] : stats.n6_by_support) n6 += c;
    ++r.checked;
    if (!stats.n6_by_support.empty() && (stats.string_counts.size() != 7 || n6 != stats.string_counts[6]))
        r.failures.push_back("per-support counts sum to " + std::to_string(n6) + ", not N_6");
    std::int64_t phi = 0;
    for (auto c : stats.phi_counts) phi += c;
    ++r.checked;
    if (phi != stats.phi_total)
        r.failures.push_back("phi counts sum to " + std::to_string(phi) + ", expected " + std::to_string(stats.phi_total));
    ++r.checked;
    if (static_cast<std::int64_t>(entries.size()) != stats.fs_scattered)
        r.failures.push_back(std::to_string(entries.size()) + " entries, expected " + std::to_string(stats.fs_scattered));
    return r;
}

std::map<Labels, std::int64_t> dirac_index(const TableEntry& e) {
    std::map<Labels, std::int64_t> sum;
    const InfChar lam = inf_char(e.inf_char);
    for (std::size_t k = 0; k < e.spin_lkts.size(); ++k)
        for (const auto& c : spin_contribution(e.spin_lkts[k], lam)) sum[c.gamma] += c.parity * e.lkt_multiplicities[k];
    return sum;
}

Report verify_cancellations(const std::vector<TableEntry>& entries, const SummaryStats& stats) {
    Report r;
    std::int64_t starred = 0;
    for (const auto& e : entries) {
        ++r.checked;
        auto idx = dirac_index(e);
        const bool cancels = std::all_of(idx.begin(), idx.end(), [](const auto& kv) { return kv.second == 0; });
        std::ostringstream detail;
        for (const auto& [g, c] : idx) detail << ' ' << vec_str(g) << ':' << (c > 0 ? "+" : "") << c;
        if (e.star) {
            ++starred;
            if (!cancels) r.failures.push_back(entry_name(e) + ": starred but the index is" + detail.str());
        } else if (cancels && !idx.empty()) {
            r.failures.push_back(entry_name(e) + ": unstarred but the index vanishes");
        }
    }
    ++r.checked;
    if (starred != stats.starred)
        r.failures.push_back(std::to_string(starred) + " starred entries, expected " + std::to_string(stats.starred));
    return r;
}

}  // namespace dirac
