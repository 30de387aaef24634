#include "newt/bigint.hpp"

#include <sstream>

namespace newt {

Int binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int multinomial_of_multiplicities(const std::vector<int>& mults) {
  int total = 0;
  for (int c : mults) total += c;
  Int r = factorial(total);
  for (int c : mults) {
    if (c > 1) r /= factorial(c);
  }
  return r;
}

std::string to_decimal(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace newt
