#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "macx/subset_fn.hpp"

namespace macx {

/// eps_k: adjoin the element k.
inline Subset epsilon_k(const Subset& a, int k) { return a.with(k); }

/// The k-th compression operator E_k(f) = f o eps_k, i.e. a -> f(a u {k}).
/// Linear; on the mu basis it acts by mu_a -> mu_{a \ {k}}.
SubsetFn compress_op(const SubsetFn& f, int k);

/// The conjugate operator E^_k = M o E_k o M, the linear extension of
/// delta_a -> delta_{a \ {k}} (pairs cancel mod 2 when they collide).
SubsetFn dual_compress_op(const SubsetFn& f, int k);

/// f is extendable at k iff f({k}) = 1 and M(f) x_k is not the zero
/// function. Requires f nice.
bool is_extendable(const SubsetFn& f, int k);

/// Tie-break rule for choosing among extendable coordinates.
enum class CompressionPolicy {
  smallest_k,     // smallest extendable coordinate
  greedy_support  // smallest resulting support, ties to smallest k
};

CompressionPolicy policy_from_string(const std::string& s);
std::string to_string(CompressionPolicy p);

/// Witness data for the lower bound |supp(M(f))| >= 2^{m-|a_0|}:
/// compressing f terminates at a function whose support is the full power
/// set of a face a_0 of the original complex.
struct CompressionCertificate {
  std::vector<int> steps;             // coordinates used, in order
  Subset final_face;                  // a_0
  std::uint64_t bound = 0;            // 2^{m - |a_0|}
  std::uint64_t mobius_support_size = 0;  // |supp(M(f))| of the ORIGINAL f

  bool holds() const { return mobius_support_size >= bound; }
};

/// Repeatedly applies E_k at extendable coordinates (chosen by policy) until
/// no coordinate is extendable; support strictly shrinks at every step, so
/// at most |supp(f)| steps happen. Requires f nice.
CompressionCertificate compress(const SubsetFn& f,
                                CompressionPolicy policy = CompressionPolicy::smallest_k);

/// Both directions of the characterization "f is non-extendable iff supp(f)
/// is the full power set of some a_0". Requires f nice.
bool check_non_extendable_characterization(const SubsetFn& f);

}  // namespace macx
