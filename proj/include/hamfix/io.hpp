#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hamfix/classifier.hpp"

namespace hamfix {

using Json = nlohmann::ordered_json;

// Malformed document text. line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct InputDocument {
  std::string version = "1";
  FixedPointData data;
  std::optional<LabeledMultigraph> graph;
  OmegaMap omega;
};

// Syntax errors throw ParseError; semantic errors throw DataError (naming the
// component when there is one). Strict mode rejects unknown fields.
InputDocument parse_input(std::string_view text, bool strict = false);
Json to_json(const InputDocument& doc);
std::string serialize_input(const InputDocument& doc);
InputDocument document_for(const FixedPointData& data);

// Report shared by the text and JSON renderers.
struct Report {
  Json body = Json::object();
  std::string json() const;
  std::string text() const;
};

Json verdict_json(const Verdict& v);
// Verdict plus the invariants computed from data: Betti numbers, ring, Chern
// class, generator tables, chi_y and top-degree integrals.
Report classification_report(const FixedPointData& data, const Verdict& v);
Report enumeration_report(const EnumerationResult& r);
Report lemma_report(const LemmaRun& run);

}  // namespace hamfix
