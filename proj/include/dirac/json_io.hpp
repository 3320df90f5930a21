#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dirac/dataset.hpp"
#include "dirac/reptheory.hpp"

namespace dirac {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json to_json(const Vec8& v);
Json to_json(const Labels& l);
Json to_json(const BigInt& n);

Json chamber_json(const Chamber& c);
Json norm_report_json(const NormReport& r);
Json verdict_json(const ScreenVerdict& v);
Json pencil_json(const PencilResult& p);
Json report_json(const Report& r);

Json involutions_json(const std::vector<InvolutionMatrix>& list);
// Parses and validates an involution file; InvalidInvolution names the index.
std::vector<InvolutionMatrix> parse_involutions(const Json& doc);
std::vector<InvolutionMatrix> load_involutions(const std::string& path);

enum class Format { Json, Csv, Plain };
Format parse_format(const std::string& s);
// Arrays of flat objects render as tables; objects as key/value lines.
std::string render(const Json& doc, Format f);

}  // namespace dirac
