#pragma once

#include <memory>
#include <string>
#include <vector>

#include "picard/report.hpp"
#include "picard/rmodule.hpp"
#include "picard/tworing.hpp"
#include "picard/twogroup.hpp"

namespace picard {

/// Line-oriented canonical document: header "picard <version> <kind>"
/// followed by one directive per line. Canonical form sorts the directive
/// rows; serialize(parse(t)) is byte-identical for canonical t. Duplicate
/// rows and unknown directives are rejected at the parse/convert boundary.
struct Document {
  int version = 1;
  std::string kind;
  std::vector<std::vector<std::string>> rows;
};

Document parse(const std::string& text);
std::string serialize(const Document& doc);

Document to_document(const SymTwoGroup& a);
Document to_document(const TwoRing& r);
Document to_document(const RModule& m);
Document to_document(const RModHom& f);
Document to_document(const RModMor& t);
Document report_document(const CheckReport& report);

SymTwoGroup twogroup_from_document(const Document& doc);
TwoRing tworing_from_document(const Document& doc);
std::shared_ptr<const RModule> module_from_document(const Document& doc);
RModHom hom_from_document(const Document& doc);
RModMor twomorphism_from_document(const Document& doc);
CheckReport report_from_document(const Document& doc);

std::string report_json_lines(const CheckReport& report);

}  // namespace picard
