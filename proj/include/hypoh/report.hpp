#pragma once

// Versioned output documents ("schema": "hypoh-ff/1") and their JSON, CSV
// and plain-text renderings.

#include <json.hpp>
#include <string>
#include <vector>

#include "hypoh/bivar.hpp"
#include "hypoh/census.hpp"
#include "hypoh/disc_class.hpp"
#include "hypoh/wreath.hpp"

namespace hypoh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hypoh-ff/1";

enum class Format { json, csv, text };

struct Document {
  Json body;                               // always starts with "schema"
  std::vector<std::vector<std::string>> table;  // CSV rows, header first; may be empty
  std::vector<std::string> summary;        // text lines
};

Document make_document(const std::string& command);

Json field_json(const FieldCtx& F);
std::string rational_str(const Rational& r);
std::string type_tuple_str(const TypeTuple& t);

void add_census(Document& doc, const CensusSpec& spec, const CensusReport& rep);
void add_wreath(Document& doc, const OrbitSetup& setup, std::uint64_t count, std::uint64_t formula,
                std::uint64_t conj_orbits);
void add_swan(Document& doc, const SwanReport& rep);
void add_correlation(Document& doc, const FieldCtx& F, const CorrelationReport& rep);

/// Renders the document. The timestamp is added unless deterministic.
std::string render(const Document& doc, Format format, bool deterministic);

}  // namespace hypoh
