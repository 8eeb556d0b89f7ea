#include "khg/formulas.hpp"

#include <stdexcept>
#include <string>

namespace khg {

namespace {

void require_k(int k) {
  if (k < 2) throw std::domain_error("uniformity must be at least 2, got " + std::to_string(k));
}

void require_m(int m) {
  if (m < 1) throw std::domain_error("block count must be at least 1, got " + std::to_string(m));
}

}  // namespace

BigInt binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

BigInt blocks_meeting_all(int k, int l) {
  require_k(k);
  if (l < 1) throw std::domain_error("block count must be at least 1");
  BigInt sum = 0;
  for (int i = 0; i < l; ++i) {
    BigInt term = binomial(l, i) * binomial(static_cast<long>(k) * (l - i), k);
    if (i % 2) sum -= term; else sum += term;
  }
  return sum;
}

Coefficient coeff_b(int k, int l) {
  require_k(k);
  if (l < 1) throw std::domain_error("l must be at least 1, got " + std::to_string(l));
  if (l == 1) return {k, l, 1};
  if (l > k) return {k, l, 0};
  BigInt numerator = BigInt(l - 1) * blocks_meeting_all(k, l);
  if (numerator % l != 0) {
    throw std::logic_error("coeff_b: numerator not divisible by l for k=" + std::to_string(k) +
                           ", l=" + std::to_string(l));
  }
  return {k, l, numerator / l};
}

ExtremalValue f_theorem(int k, int m) {
  require_k(k);
  require_m(m);
  BigInt total = m;
  for (int l = 2; l <= k; ++l) total += coeff_b(k, l).value * binomial(m, l);
  return {k, m, total};
}

ExtremalValue f_telescoped(int k, int m) {
  require_k(k);
  require_m(m);
  BigInt a = 1;
  for (long i = 2; i <= m; ++i) {
    a += binomial(k * i - 1, k) - binomial(k * (i - 1), k) + 1;
  }
  return {k, m, a};
}

}  // namespace khg
