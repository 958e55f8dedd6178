#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/report.hpp"

namespace qcong {

/// Executable catalog of the theta-function and eta-product identities the
/// congruence proofs rely on.  Each entry expands both sides independently
/// and compares them coefficient by coefficient.
enum class IdentityId {
  psi_p_dissection,          // PSI_PDISSECT: psi(q) split by residues mod an odd prime p
  f1_p_dissection,           // F1_PDISSECT: f1 split by residues mod a prime p >= 5
  f1_squared_2_dissection,   // F1SQ_2DISS
  inv_f1_squared_2_dissection,  // INV_F1SQ
  inv_f1_fourth_2_dissection,   // INV_F1_QUAD
  f1_fourth_2_dissection,       // F1_QUAD
  inv_phi_neg_4_dissection,     // INV_PHINEG_4
  inv_phi_5_dissection,         // INV_PHI_5 (cleared form)
  psi_3_dissection,             // PSI_3DISS
  phi_n_squared_dissection,     // PHI_NSQ
  phi_2_dissection_coefficient,  // PHI_NSQ_N2: which q-coefficient makes phi = phi(q^4) + c q psi(q^8)
  binomial_p,                   // BINOM_P: f_p == f1^p (mod p)
  binomial_p_squared,           // BINOM_P2: f1^{p^2} == f_p^p (mod p^2)
};

enum class IdentityParam { none, odd_prime, prime_at_least_5, prime, positive_n };

struct IdentityParams {
  long p = 0;
  long n = 0;
};

struct IdentityInfo {
  IdentityId id;
  std::string tag;
  std::string description;
  IdentityParam param;
};

struct IdentityInstance {
  IdentityId id;
  IdentityParams params;
  std::size_t order;
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(IdentityId id);
// Looks up a tag such as "F1SQ_2DISS" (case-insensitive); throws ArgumentError if unknown.
IdentityId identity_from_tag(std::string_view tag);

// Every instance run by `verify-lemma --all`, with its order.
std::vector<IdentityInstance> standard_identity_instances();

VerificationReport verify_identity(IdentityId id, const IdentityParams& params, std::size_t order);

}  // namespace qcong
