#include "agcodes/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agcodes {

namespace {

constexpr long long kMaxSieve = 1LL << 27;

std::vector<bool> sieve(const std::vector<long long>& gens, long long bound) {
  std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
  member[0] = true;
  for (long long n = 1; n <= bound; ++n) {
    for (long long g : gens) {
      if (g <= n && member[static_cast<std::size_t>(n - g)]) {
        member[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return member;
}

// Smallest t such that [t, t + run) lies in the sieve, or -1.
long long find_full_run(const std::vector<bool>& member, long long run) {
  long long streak = 0;
  for (long long n = 0; n < static_cast<long long>(member.size()); ++n) {
    streak = member[static_cast<std::size_t>(n)] ? streak + 1 : 0;
    if (streak == run) return n - run + 1;
  }
  return -1;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<long long> generators) {
  if (generators.empty()) throw std::invalid_argument("no generators given");
  for (long long g : generators) {
    if (g <= 0) throw std::invalid_argument("generators must be positive");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  long long g = 0;
  for (long long v : generators) g = std::gcd(g, v);
  if (g != 1)
    throw std::invalid_argument("generator gcd is " + std::to_string(g) +
                                ", the gap set would be infinite");
  gens_ = std::move(generators);

  // Provisional sieve, doubled until a run of min-generator consecutive
  // members exists; everything at or past such a run is a member.
  const long long min_gen = gens_.front();
  const long long max_gen = gens_.back();
  long long bound = 4 * max_gen + 64;
  std::vector<bool> member;
  long long run_start = -1;
  for (;;) {
    if (bound > kMaxSieve) throw std::invalid_argument("generators too large to sieve");
    member = sieve(gens_, bound);
    run_start = find_full_run(member, min_gen);
    if (run_start >= 0 && run_start + min_gen - 1 < bound) break;
    bound *= 2;
  }
  long long largest_gap = -1;
  for (long long n = run_start; n-- > 0;) {
    if (!member[static_cast<std::size_t>(n)]) {
      largest_gap = n;
      break;
    }
  }
  conductor_ = largest_gap + 1;

  bound_ = 2 * conductor_ + 2 * max_gen + 64;
  member_ = sieve(gens_, bound_);
  for (long long n = 0; n <= bound_; ++n) {
    if (member_[static_cast<std::size_t>(n)])
      members_.push_back(n);
    else
      gaps_.push_back(n);
  }
}

bool NumericalSemigroup::contains(long long n) const {
  if (n < 0) return false;
  if (n <= bound_) return member_[static_cast<std::size_t>(n)];
  return true;  // n > bound_ >= conductor
}

std::vector<long long> NumericalSemigroup::minimal_generators() const {
  // Members above conductor + 2*rho_2 split off a smaller nonzero member.
  const long long rho2 = rho(2);
  std::vector<long long> out;
  for (long long m : members_) {
    if (m == 0) continue;
    if (m > conductor_ + 2 * rho2) break;
    bool splits = false;
    for (long long a = rho2; a + a <= m; ++a) {
      if (contains(a) && contains(m - a) && m - a > 0) {
        splits = true;
        break;
      }
    }
    if (!splits) out.push_back(m);
  }
  return out;
}

long long NumericalSemigroup::rho(long long i) const {
  if (i < 1)
    throw std::invalid_argument("rho index starts at 1 (rho_1 = 0)");
  const long long below_c = conductor_ - genus();  // members in [0, conductor)
  if (i <= below_c) return members_[static_cast<std::size_t>(i - 1)];
  return conductor_ + (i - below_c - 1);
}

long long NumericalSemigroup::nu(long long ell) const {
  if (ell < 0) throw std::invalid_argument("nu index must be >= 0");
  const long long target = rho(ell + 1);
  long long count = 0;
  for (long long a = 0; a <= target; ++a) {
    if (contains(a) && contains(target - a)) ++count;
  }
  return count;
}

long long NumericalSemigroup::r(long long d) const {
  if (d < 2) throw std::invalid_argument("r_d requires d >= 2");
  // Past max(2c-g-1, d+g-2) the sequence nu_l = l+1-g has left every value
  // below d, so scanning to 2c+d+g is exhaustive.
  const long long limit = 2 * conductor_ + d + genus();
  long long count = 0;
  for (long long ell = 0; ell <= limit; ++ell) {
    if (nu(ell) < d) ++count;
  }
  return count;
}

bool NumericalSemigroup::operator==(const NumericalSemigroup& other) const {
  return gaps_ == other.gaps_;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  const auto mg = minimal_generators();
  for (std::size_t i = 0; i < mg.size(); ++i) {
    if (i) os << ',';
    os << mg[i];
  }
  os << '>';
  return os.str();
}

NumericalSemigroup parse_semigroup(const std::string& text) {
  std::vector<long long> gens;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    long long v;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator '" + token + "'");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
      ++used;
    if (used != token.size())
      throw std::invalid_argument("bad generator '" + token + "'");
    gens.push_back(v);
  }
  if (gens.empty()) throw std::invalid_argument("no generators given");
  return NumericalSemigroup(std::move(gens));
}

}  // namespace agcodes
