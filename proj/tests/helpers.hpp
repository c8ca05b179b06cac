#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "picard/catalog.hpp"
#include "picard/groupoid.hpp"
#include "picard/report.hpp"

namespace picard::testhelpers {

inline FinGroupoid deloop_base(int n) { return build_deloop(cyclic_group(n)).base; }
inline FinGroupoid discrete_base(int n) { return build_discrete(cyclic_group(n)).base; }

inline void require_all_pass(const CheckReport& report) {
  if (!report.all_pass()) {
    for (const auto& axiom : report.failing_axioms()) MESSAGE("failing axiom: " << axiom);
  }
  REQUIRE(report.all_pass());
}

inline void require_fails(const CheckReport& report, const std::string& axiom) {
  const CheckEntry* e = report.entry(axiom);
  REQUIRE(e != nullptr);
  CHECK_FALSE(e->pass);
  CHECK_FALSE(e->witness.empty());
}

}  // namespace picard::testhelpers
