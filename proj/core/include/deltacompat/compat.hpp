#pragma once

#include <string>
#include <vector>

#include "deltacompat/ops.hpp"

namespace deltacompat {

/// Coefficients of the first-order system d_i z = u_i z, sigma_j z = v_j z,
/// tau_k z = w_k z.
struct CertificateSystem {
  ContextPtr ctx;
  std::vector<RatFunc> u;
  std::vector<RatFunc> v;
  std::vector<RatFunc> w;

  /// Checks lengths and contexts against the declared blocks.
  void validate() const;
  static CertificateSystem trivial(ContextPtr ctx);
};

enum class Condition : unsigned char { NONZERO, DD, SS, QQ, DS, DQ, SQ };
std::string condition_name(Condition c);

/// One failed condition. Indices are 0-based and refer to the operator
/// blocks named by the tag: DD (i, j) are derivation indices, DS (i, j) is
/// (derivation, shift), SQ is (shift, q-shift), and so on. For NONZERO,
/// `zero_kind` tells whether v_i or w_i vanished and j equals i.
/// The residual is lhs - rhs for additive conditions and lhs/rhs - 1 for
/// multiplicative ones; NONZERO reports the constant 1.
struct Violation {
  Condition condition;
  std::size_t i;
  std::size_t j;
  RatFunc residual;
  OpRef::Kind zero_kind = OpRef::Kind::Sigma;
};

struct CompatReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Evaluates the nonvanishing condition and all pairwise commutation
/// conditions exactly, reporting every failure in canonical order.
CompatReport check(const CertificateSystem& sys);

}  // namespace deltacompat
