#pragma once

#include <cstdint>
#include <map>

#include "dhall/complex.hpp"

namespace dhall {

/// Middle terms of all cocycles of Ext^1(M, N), tallied by key.
struct ExtensionTally {
  std::map<ComplexKey, std::uint64_t> middles;
  int cocycle_dim = 0;
  int degreewise_hom_dim = 0;
  bool operator==(const ExtensionTally&) const = default;
};

ExtensionTally extension_sweep_serial(const Session& s, const Complex& m, const Complex& n);
ExtensionTally extension_sweep_parallel(const Session& s, const Complex& m, const Complex& n);
/// Parallel when the cocycle space is large, serial otherwise.
ExtensionTally extension_sweep(const Session& s, const Complex& m, const Complex& n);

struct SubobjectCounts {
  std::uint64_t all = 0;  // subcomplexes N' with N' ~ N, L/N' ~ M
  std::uint64_t e0 = 0;   // those whose conflation lies in E_0
  bool operator==(const SubobjectCounts&) const = default;
};
/// Keyed by (M, N) = (quotient, sub); only quotients in C(P) are kept.
using SubobjectTally = std::map<std::pair<ComplexKey, ComplexKey>, SubobjectCounts>;

SubobjectTally subobject_sweep_serial(const Session& s, const Complex& l);
SubobjectTally subobject_sweep_parallel(const Session& s, const Complex& l);
SubobjectTally subobject_sweep(const Session& s, const Complex& l);

/// Subrepresentations of L tallied by (L/U, U) keys.
std::map<std::pair<RepKey, RepKey>, std::uint64_t> subrep_sweep_serial(const Session& s, const Rep& l);
std::map<std::pair<RepKey, RepKey>, std::uint64_t> subrep_sweep_parallel(const Session& s, const Rep& l);

int max_threads();

}  // namespace dhall
