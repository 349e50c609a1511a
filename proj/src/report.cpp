#include "hypoh/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "hypoh/format.hpp"

namespace hypoh {

Document make_document(const std::string& command) {
  Document doc;
  doc.body["schema"] = kSchema;
  doc.body["command"] = command;
  return doc;
}

Json field_json(const FieldCtx& F) {
  Json j;
  j["p"] = std::to_string(F.p());
  j["k"] = F.k();
  j["q"] = std::to_string(F.q());
  j["modulus"] = format_poly(*make_field(F.p(), 1), F.modulus(), "x");
  return j;
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string type_tuple_str(const TypeTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += " ";
    s += t[i].str();
  }
  return s;
}

void add_census(Document& doc, const CensusSpec& spec, const CensusReport& rep) {
  const FieldCtx& F = *spec.ctx;
  Json& b = doc.body;
  b["field"] = field_json(F);
  b["n"] = spec.n;
  Json fs = Json::array();
  for (const auto& f : spec.fs) fs.push_back(format_poly(f));
  b["f"] = fs;
  b["mode"] = rep.sampled ? "sample" : "exhaustive";
  if (rep.sampled) {
    b["prng"] = rep.prng;
    b["seed"] = std::to_string(rep.seed);
  }
  Json targets = Json::array();
  for (const auto& t : rep.targets) targets.push_back(t.str());
  b["targets"] = targets;
  b["total"] = rep.total;
  b["separable_total"] = rep.separable_total;
  b["inseparable"] = rep.inseparable;
  b["hits"] = rep.hits;
  if (rep.predicted_density) {
    b["predicted_density"] = rational_str(*rep.predicted_density);
    b["expected_hits"] = rep.expected_hits;
    b["deviation"] = rep.deviation;
    b["normalized_deviation"] = rep.normalized_deviation;
    b["normalization"] = rep.normalization;
  } else {
    b["predicted_density"] = nullptr;
  }
  Json hist = Json::array();
  doc.table.push_back({"types", "count", "frequency"});
  for (const auto& [tuple, count] : rep.histogram) {
    Json row;
    Json types = Json::array();
    for (const auto& t : tuple) types.push_back(t.str());
    row["types"] = types;
    row["count"] = count;
    hist.push_back(row);
    std::ostringstream freq;
    freq << std::setprecision(10) << static_cast<double>(count) / static_cast<double>(rep.total);
    doc.table.push_back({type_tuple_str(tuple), std::to_string(count), freq.str()});
  }
  b["histogram"] = hist;

  std::ostringstream s;
  s << "field F_" << F.q() << ", n = " << spec.n << ", " << spec.fs.size() << " polynomial(s)";
  doc.summary.push_back(s.str());
  doc.summary.push_back("total " + std::to_string(rep.total) + ", separable " +
                        std::to_string(rep.separable_total) + ", inseparable " +
                        std::to_string(rep.inseparable));
  doc.summary.push_back("hits " + std::to_string(rep.hits) + " for targets " + type_tuple_str(rep.targets));
  if (rep.predicted_density) {
    std::ostringstream d;
    d << "predicted density " << rational_str(*rep.predicted_density) << ", expected "
      << rep.expected_hits << ", normalized deviation " << rep.normalized_deviation << " ("
      << rep.normalization << ")";
    doc.summary.push_back(d.str());
  }
}

void add_wreath(Document& doc, const OrbitSetup& setup, std::uint64_t count, std::uint64_t formula,
                std::uint64_t conj_orbits) {
  Json j;
  j["n"] = setup.n;
  j["nu"] = setup.nu();
  j["r"] = setup.r();
  Json sizes = Json::array();
  std::string size_str;
  for (const auto& o : setup.orbits) {
    sizes.push_back(o.size());
    size_str += (size_str.empty() ? "" : ",") + std::to_string(o.size());
  }
  j["orbits"] = sizes;
  j["T"] = count;
  j["formula"] = formula;
  j["equal"] = count == formula;
  j["conjugation_orbits"] = conj_orbits;
  if (doc.table.empty()) doc.table.push_back({"n", "orbits", "T", "formula", "equal", "conjugation_orbits"});
  doc.table.push_back({std::to_string(setup.n), size_str, std::to_string(count), std::to_string(formula),
                       count == formula ? "true" : "false", std::to_string(conj_orbits)});
  doc.summary.push_back("n=" + std::to_string(setup.n) + " orbits {" + size_str + "}: |T| = " +
                        std::to_string(count) + ", formula " + std::to_string(formula) +
                        (count == formula ? " (equal)" : " (MISMATCH)") + ", conjugation orbits " +
                        std::to_string(conj_orbits));
  if (doc.body.contains("setups")) {
    doc.body["setups"].push_back(j);
  } else {
    for (auto& [k, v] : j.items()) doc.body[k] = v;
  }
}

void add_swan(Document& doc, const SwanReport& rep) {
  doc.body["deg_bound"] = rep.max_degree;
  doc.body["candidates"] = rep.candidates;
  doc.body["counterexamples"] = rep.counterexamples;
  Json w = Json::array();
  doc.table.push_back({"g"});
  for (const auto& g : rep.witnesses) {
    w.push_back(format_poly(g, "t"));
    doc.table.push_back({format_poly(g, "t")});
  }
  doc.body["witnesses"] = w;
  doc.summary.push_back(std::to_string(rep.candidates) + " candidates g with 1 <= deg g <= " +
                        std::to_string(rep.max_degree));
  doc.summary.push_back(std::to_string(rep.counterexamples) + " counterexamples");
}

void add_correlation(Document& doc, const FieldCtx& F, const CorrelationReport& rep) {
  Json& b = doc.body;
  b["field"] = field_json(F);
  Json om = Json::array();
  for (Elem w : rep.omega) om.push_back(format_elem(F, w));
  b["omega"] = om;
  b["even_sum_criterion"] = rep.even_sum;
  b["total"] = rep.total;
  b["all_irreducible"] = rep.all_irreducible;
  b["independence_prediction"] = rep.independence_prediction;
  b["relative_deviation"] = rep.relative_deviation;
  Json joint = Json::array();
  doc.table.push_back({"pattern", "count"});
  for (const auto& [mask, count] : rep.joint) {
    std::string pattern;
    for (std::size_t i = 0; i < rep.omega.size(); ++i) pattern += ((mask >> i) & 1U) ? '1' : '0';
    joint.push_back({{"pattern", pattern}, {"count", count}});
    doc.table.push_back({pattern, std::to_string(count)});
  }
  b["joint"] = joint;
  std::ostringstream s;
  s << "all-irreducible " << rep.all_irreducible << " of " << rep.total << ", independence predicts "
    << rep.independence_prediction << ", relative deviation " << rep.relative_deviation;
  doc.summary.push_back(s.str());
  doc.summary.push_back(std::string("even-sum criterion: ") + (rep.even_sum ? "true" : "false"));
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

}  // namespace

std::string render(const Document& doc, Format format, bool deterministic) {
  Json body = doc.body;
  if (!deterministic) body["timestamp"] = utc_timestamp();
  std::ostringstream out;
  switch (format) {
    case Format::json:
      out << body.dump(2) << "\n";
      break;
    case Format::csv: {
      std::vector<std::vector<std::string>> rows = doc.table;
      if (rows.empty()) {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(body, "", kv);
        rows.push_back({"key", "value"});
        for (auto& [k, v] : kv) rows.push_back({k, v});
      }
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << "\n";
      }
      break;
    }
    case Format::text:
      if (doc.summary.empty()) {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(body, "", kv);
        for (auto& [k, v] : kv) out << k << ": " << v << "\n";
      } else {
        for (const auto& line : doc.summary) out << line << "\n";
      }
      break;
  }
  return out.str();
}

}  // namespace hypoh
