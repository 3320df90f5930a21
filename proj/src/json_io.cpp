#include "dirac/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dirac {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json to_json(const Vec8& v) { return to_json(std::vector<Rational>(v.begin(), v.end())); }

Json to_json(const Labels& l) { return Json(std::vector<std::int64_t>(l.begin(), l.end())); }

// Big integers go out as strings so no reader truncates them.
Json to_json(const BigInt& n) { return n.str(); }

Json chamber_json(const Chamber& c) {
    return {{"index", c.index},
            {"length", c.length},
            {"parity", c.length % 2 ? -1 : 1},
            {"word", c.w.word},
            {"rho_n", to_json(c.rho_n_varpi)},
            {"rho_j", to_json(c.rho_j)}};
}

Json norm_report_json(const NormReport& r) {
    return {{"ktype", to_json(r.mu)},
            {"k_type_parity", is_K_type(r.mu)},
            {"spin_norm_sq", to_json(r.spin.value)},
            {"spin_chambers", r.spin.chambers},
            {"lambda_a", to_json(r.lambda.value)},
            {"lambda_norm_sq", to_json(r.lambda.norm_sq)},
            {"lambda_chamber", r.lambda.chamber},
            {"usmall", r.usmall}};
}

Json verdict_json(const ScreenVerdict& v) {
    Json j = {{"status", status_name(v.status)}};
    if (v.witness)
        j["witness"] = {{"ktype", to_json(v.witness->ktype)},
                        {"pencil_n", v.witness->pencil_n},
                        {"spin_norm_sq", to_json(v.witness->spin_norm_sq)}};
    return j;
}

Json pencil_json(const PencilResult& p) {
    return {{"conclusive", p.conclusive},
            {"n_star", p.n_star},
            {"min_spin_norm_sq", to_json(p.min_spin)},
            {"profile", to_json(p.profile)}};
}

Json report_json(const Report& r) {
    return {{"checked", r.checked}, {"ok", r.ok()}, {"failures", r.failures}, {"notes", r.notes}};
}

Json involutions_json(const std::vector<InvolutionMatrix>& list) {
    Json a = Json::array();
    for (const auto& inv : list) {
        Json m = Json::array();
        for (const auto& row : inv.matrix) m.push_back(to_json(row));
        a.push_back({{"matrix", m}, {"tag", inv.tag}});
    }
    return a;
}

std::vector<InvolutionMatrix> parse_involutions(const Json& doc) {
    if (!doc.is_array()) throw std::invalid_argument("involution file must be a JSON array");
    std::vector<InvolutionMatrix> out;
    for (std::size_t k = 0; k < doc.size(); ++k) {
        const Json& o = doc[k];
        if (!o.is_object() || !o.contains("matrix")) throw InvalidInvolution(k, "expected an object with a matrix");
        const Json& m = o["matrix"];
        if (!m.is_array() || m.size() != 8) throw InvalidInvolution(k, "matrix must have 8 rows");
        InvolutionMatrix inv;
        for (int r = 0; r < 8; ++r) {
            if (!m[r].is_array() || m[r].size() != 8) throw InvalidInvolution(k, "matrix rows must have 8 entries");
            for (int c = 0; c < 8; ++c) {
                const Json& x = m[r][c];
                try {
                    inv.matrix[r][c] = x.is_number_integer() ? Rational(x.get<std::int64_t>())
                                                             : Rational::parse(x.get<std::string>());
                } catch (const std::exception&) {
                    throw InvalidInvolution(k, "matrix entry " + x.dump() + " is not a rational");
                }
            }
        }
        if (o.contains("tag")) inv.tag = o["tag"].get<std::string>();
        out.push_back(std::move(inv));
    }
    validate_involutions(out);
    return out;
}

std::vector<InvolutionMatrix> load_involutions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open involution file " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("involution file is not valid JSON: ") + e.what());
    }
    return parse_involutions(doc);
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "plain") return Format::Plain;
    throw std::invalid_argument("unknown format '" + s + "'");
}

namespace {

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_cell(const Json& v) {
    std::string s = cell(v);
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

std::string render(const Json& doc, Format f) {
    if (f == Format::Json) return doc.dump(2) + "\n";
    std::ostringstream os;
    if (doc.is_array() && !doc.empty() && doc[0].is_object()) {
        std::set<std::string> keys;
        for (const auto& row : doc)
            for (const auto& [k, v] : row.items()) keys.insert(k);
        if (f == Format::Csv) {
            bool first = true;
            for (const auto& k : keys) os << (first ? "" : ",") << k, first = false;
            os << '\n';
        }
        for (const auto& row : doc) {
            bool first = true;
            for (const auto& k : keys) {
                Json v = row.contains(k) ? row[k] : Json();
                if (f == Format::Csv)
                    os << (first ? "" : ",") << csv_cell(v);
                else
                    os << (first ? "" : " ") << k << '=' << cell(v);
                first = false;
            }
            os << '\n';
        }
        return os.str();
    }
    if (doc.is_object()) {
        if (f == Format::Csv) os << "key,value\n";
        for (const auto& [k, v] : doc.items()) {
            if (f == Format::Csv)
                os << k << ',' << csv_cell(v) << '\n';
            else
                os << k << ": " << cell(v) << '\n';
        }
        return os.str();
    }
    if (doc.is_array()) {
        for (const auto& v : doc) os << (f == Format::Csv ? csv_cell(v) : cell(v)) << '\n';
        return os.str();
    }
    return cell(doc) + "\n";
}

}  // namespace dirac
