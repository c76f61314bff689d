#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace dtc {

struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
};

// Outcome of one verified identity. On failure `mismatch` holds the first
// differing entry when the identity compares matrices.
struct AxiomReport {
  std::string axiom;
  std::string objects;
  bool passed = false;
  std::optional<Mismatch> mismatch;
  std::string detail;
};

}  // namespace dtc
