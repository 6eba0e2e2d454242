#pragma once

// Characters of tensor, symmetric, exterior, adjoint and Asai powers,
// computed from class data and power maps only.

#include <vector>

#include "twistlab/groups.hpp"

namespace twistlab {

struct PowerOptions {
  long max_k = 8;  // larger k throws std::invalid_argument
};

ClassFunction tensor_power_char(const ClassFunction& chi, const ClassStructure& s, long k,
                                const PowerOptions& opt = {});

/// S^k(g) = (1/k) sum_{i=1..k} chi(g^i) S^(k-i)(g).
ClassFunction sym_power_char(const ClassFunction& chi, const ClassStructure& s, long k,
                             const PowerOptions& opt = {});

/// L^k(g) = (1/k) sum_{i=1..k} (-1)^(i-1) chi(g^i) L^(k-i)(g).
ClassFunction ext_power_char(const ClassFunction& chi, const ClassStructure& s, long k,
                             const PowerOptions& opt = {});

/// chi(c) chi(c^-1), the character of End(V).
ClassFunction adjoint_char(const ClassFunction& chi, const ClassStructure& s);

/// chi(c^-1).
ClassFunction dual_char(const ClassFunction& chi, const ClassStructure& s);

/// A class map induced by an automorphism: autos[a][c] is the image of c.
using ClassMap = std::vector<std::size_t>;

/// prod_a chi(theta_a(c)). Throws std::invalid_argument when some theta_a is
/// not a size-preserving permutation commuting with the power maps.
ClassFunction asai_char(const ClassFunction& chi, const ClassStructure& s, const std::vector<ClassMap>& autos);

/// Throws std::invalid_argument unless lambda has degree 1.
ClassFunction twist_char(const ClassFunction& chi, const ClassFunction& lambda, const ClassStructure& s);

/// Throws std::invalid_argument describing the first defect, if any.
void check_class_automorphism(const ClassMap& theta, const ClassStructure& s);

}  // namespace twistlab
