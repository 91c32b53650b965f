#include "macx/compress.hpp"

#include <algorithm>
#include <string>

namespace macx {

namespace {

void require_element(const SubsetFn& f, int k) {
  if (k < 1 || k > f.m())
    throw InputError("element " + std::to_string(k) + " outside [" +
                     std::to_string(f.m()) + "]");
}

void require_nice(const SubsetFn& f, const char* op) {
  if (!is_nice(f))
    throw NicenessError(std::string(op) + " requires a nice function");
}

bool value_at_singleton(const SubsetFn& f, int k) {
  return f.value_at(std::uint32_t{1} << (k - 1));
}

// M(f) x_k != 0, i.e. the transform is 1 somewhere on a subset containing k.
bool mobius_hits_coordinate(const SubsetFn& mob, int k) {
  for (std::uint32_t a = 0; a < mob.table_size(); ++a)
    if (((a >> (k - 1)) & 1u) && mob.value_at(a)) return true;
  return false;
}

std::vector<int> extendable_coordinates(const SubsetFn& f) {
  const SubsetFn mob = mobius(f);
  std::vector<int> out;
  for (int k = 1; k <= f.m(); ++k)
    if (value_at_singleton(f, k) && mobius_hits_coordinate(mob, k))
      out.push_back(k);
  return out;
}

}  // namespace

SubsetFn compress_op(const SubsetFn& f, int k) {
  require_element(f, k);
  const std::uint32_t bit = std::uint32_t{1} << (k - 1);
  SubsetFn out(f.m());
  for (std::uint32_t a = 0; a < f.table_size(); ++a)
    if (f.value_at(a | bit)) out.set_value(a, true);
  return out;
}

SubsetFn dual_compress_op(const SubsetFn& f, int k) {
  require_element(f, k);
  const std::uint32_t bit = std::uint32_t{1} << (k - 1);
  SubsetFn out(f.m());
  for (std::uint32_t a = 0; a < f.table_size(); ++a)
    if ((a & bit) == 0 && (f.value_at(a) != f.value_at(a | bit)))
      out.set_value(a, true);
  return out;
}

bool is_extendable(const SubsetFn& f, int k) {
  require_element(f, k);
  require_nice(f, "is_extendable");
  return value_at_singleton(f, k) && mobius_hits_coordinate(mobius(f), k);
}

CompressionPolicy policy_from_string(const std::string& s) {
  if (s == "smallest" || s == "smallest_k") return CompressionPolicy::smallest_k;
  if (s == "greedy" || s == "greedy_support") return CompressionPolicy::greedy_support;
  throw InputError("unknown compression policy '" + s +
                   "' (expected smallest or greedy)");
}

std::string to_string(CompressionPolicy p) {
  return p == CompressionPolicy::smallest_k ? "smallest" : "greedy";
}

CompressionCertificate compress(const SubsetFn& f, CompressionPolicy policy) {
  require_nice(f, "compress");
  CompressionCertificate cert;
  cert.mobius_support_size = mobius(f).support_size();

  SubsetFn current = f;
  for (;;) {
    const std::vector<int> ks = extendable_coordinates(current);
    if (ks.empty()) break;
    int chosen = ks.front();
    if (policy == CompressionPolicy::greedy_support) {
      std::uint64_t best = ~std::uint64_t{0};
      for (int k : ks) {
        const std::uint64_t size = compress_op(current, k).support_size();
        if (size < best) {
          best = size;
          chosen = k;
        }
      }
    }
    current = compress_op(current, chosen);
    cert.steps.push_back(chosen);
  }

  // A non-extendable nice function is the indicator of a full power
  // set 2^{a_0} with a_0 = {k : f({k}) = 1}.
  Subset a0 = Subset::empty(f.m());
  for (int k = 1; k <= f.m(); ++k)
    if (value_at_singleton(current, k)) a0 = a0.with(k);
  for (std::uint32_t a = 0; a < current.table_size(); ++a)
    if (current.value_at(a) != ((a & ~a0.bits()) == 0))
      throw Error("compression ended on a function that is not a full power set");
  if (!f.value_at(a0.bits()))
    throw Error("compression produced a face outside the original support");
  cert.final_face = a0;
  cert.bound = std::uint64_t{1} << (f.m() - a0.card());
  return cert;
}

bool check_non_extendable_characterization(const SubsetFn& f) {
  require_nice(f, "check_non_extendable_characterization");
  const bool non_extendable = extendable_coordinates(f).empty();
  // supp(f) = 2^{a_0} can only hold for a_0 the union of the support.
  std::uint32_t a0 = 0;
  for (std::uint32_t a = 0; a < f.table_size(); ++a)
    if (f.value_at(a)) a0 |= a;
  const bool full_power_set =
      f.support_size() == (std::uint64_t{1} << std::popcount(a0));
  return non_extendable == full_power_set;
}

}  // namespace macx
