#pragma once

#include <string>
#include <vector>

namespace agcodes {

/// A numerical semigroup given by generators with overall gcd 1.
///
/// Construction sieves membership over [0, 2c + 2*max(generator) + 64] where
/// c is the conductor; queries beyond the sieve window use n >= c => member.
/// rho(i) is the i-th smallest member (rho(1) = 0), nu(l) counts ordered
/// pairs of members (a, b) with a + b = rho(l+1), and r(d) counts the
/// indices l >= 0 with nu(l) < d.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<long long> generators);

  const std::vector<long long>& generators() const { return gens_; }
  std::vector<long long> minimal_generators() const;

  bool contains(long long n) const;
  long long genus() const { return static_cast<long long>(gaps_.size()); }
  long long conductor() const { return conductor_; }
  const std::vector<long long>& gaps() const { return gaps_; }

  long long rho(long long i) const;
  long long nu(long long ell) const;
  long long r(long long d) const;

  /// Same member set (generating sets may differ).
  bool operator==(const NumericalSemigroup& other) const;
  bool operator!=(const NumericalSemigroup& other) const { return !(*this == other); }

  std::string to_string() const;  // "<2,7>"

 private:
  std::vector<long long> gens_;
  std::vector<long long> gaps_;
  std::vector<long long> members_;  // members in [0, bound_], ascending
  std::vector<bool> member_;        // membership over [0, bound_]
  long long conductor_ = 0;
  long long bound_ = 0;
};

/// Parses the CLI generator syntax "a,b,c".
NumericalSemigroup parse_semigroup(const std::string& text);

}  // namespace agcodes
