#pragma once

#include <optional>
#include <string>

#include "dtc/diffmod/diff_module.hpp"
#include "dtc/report.hpp"

namespace dtc {

// Constant matrices of the structural maps on standard bases. Kronecker
// index of v_i (x) w_j is i * dim(W) + j; in V^(1) the 1-slot copy of v_i has
// index i and the d-slot copy has index n + i; dual bases share indices.
namespace structure {

RFMatrix braiding(std::size_t n, std::size_t m);                   // V(n) (x) W(m) -> W (x) V
RFMatrix evaluation(std::size_t n);                                 // V (x) V* -> 1
RFMatrix delta(std::size_t n);                                      // V (x) V* -> (V (x) V*)^(x)2
RFMatrix leibniz(std::size_t n, std::size_t m);                     // (V (x) W)^(1) -> V^(1) (x) W^(1)
RFMatrix dual_swap(std::size_t n, ProlongMode mode);                // (V^(1))* -> (V*)^(1)
RFMatrix dual_swap_inverse(std::size_t n, ProlongMode mode);        // (V*)^(1) -> (V^(1))*
RFMatrix coefficient_lift(std::size_t n, ProlongMode mode);         // (V (x) V*)^(1) -> V^(1) (x) (V^(1))*
RFMatrix unit_left_inverse();                                       // 1^(1) -> 1, left inverse of i_1

// coefficient_lift(n, mode) * x without forming the matrix.
std::vector<RationalFunction> apply_coefficient_lift(std::size_t n, ProlongMode mode,
                                                     const std::vector<RationalFunction>& x);

}  // namespace structure

ModuleMorphism braiding(const DiffModule& m, const DiffModule& n);
ModuleMorphism evaluation(const DiffModule& m);
ModuleMorphism delta_map(const DiffModule& m);
ModuleMorphism map_T(const DiffModule& m, const DiffModule& n, ProlongMode mode = ProlongMode::differential);
ModuleMorphism map_D(const DiffModule& m, ProlongMode mode = ProlongMode::differential);
ModuleMorphism map_S(const DiffModule& m, ProlongMode mode = ProlongMode::differential);

struct VerifyOptions {
  ProlongMode mode = ProlongMode::differential;
  // Largest dim(M) * dim(N) (or dim(M) for one-object diagrams) accepted.
  std::size_t cap = 6;
};

inline constexpr const char* kAxiomNames[] = {"morphismS",   "leibniz",   "comult",        "tensor-compat",
                                              "dual-compat", "exactness", "unit-splitting"};

// Throws Error for an unknown name or missing N, DimensionCapExceeded above
// the cap.
AxiomReport verify_axiom(const std::string& name, const DiffModule& m, const std::optional<DiffModule>& n,
                         const VerifyOptions& options = {});

// Values on d(x)(v_i (x) v^i) of ev o S and of ev o (id (x) D^-1) o T.
struct WitnessValues {
  RationalFunction via_s;
  RationalFunction via_t;
};
WitnessValues witness(std::size_t n, std::size_t i);
// The two 1 x 2n^2 composites ev o S and ev o (id (x) D^-1) o T.
std::pair<RFMatrix, RFMatrix> witness_composites(std::size_t n);

}  // namespace dtc
