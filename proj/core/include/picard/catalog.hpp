#pragma once

#include <memory>
#include <string>
#include <vector>

#include "picard/rmodule.hpp"
#include "picard/tworing.hpp"
#include "picard/twogroup.hpp"

namespace picard {

/// Standard small instances used throughout the test surface: discrete
/// 2-groups d<n> = D(Z/n), one-object deloopings b<m> = B(Z/m), discrete
/// rings z<n>, modules "<carrier>@z<n>" (requires carrier order | n), and
/// a fixed family of homs between them.
GroupTable cyclic_group(int n);
RingTable cyclic_ring(int n);

SymTwoGroup catalog_twogroup(const std::string& name);
std::shared_ptr<const TwoRing> catalog_ring(const std::string& name);
std::shared_ptr<const RModule> catalog_module(const std::string& name);
RModHom catalog_hom(const std::string& name);

std::vector<std::string> catalog_twogroup_names();
std::vector<std::string> catalog_ring_names();
std::vector<std::string> catalog_module_names();
std::vector<std::string> catalog_hom_names();

}  // namespace picard
