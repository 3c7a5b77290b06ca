#include "toricode/gfq.hpp"

#include <algorithm>

namespace toricode {

namespace {

// q = p^k with p prime, or (0,0) if q is not a prime power.
std::pair<int, int> factorPrimePower(int q) {
  int p = 0;
  int m = q;
  for (int f = 2; f * f <= m; ++f) {
    if (m % f == 0) { p = f; break; }
  }
  if (p == 0) p = m;  // q itself prime
  int k = 0;
  while (m % p == 0) { m /= p; ++k; }
  if (m != 1) return {0, 0};
  return {p, k};
}

int multiplicativeOrder(int g, int p) {
  int x = g % p, ord = 1;
  while (x != 1) {
    x = static_cast<int>((static_cast<long long>(x) * g) % p);
    ++ord;
    if (ord > p) return 0;  // g not a unit
  }
  return ord;
}

}  // namespace

Field::Field(int q) : q_(q) {
  if (q < 2) throw inputError("field size must be at least 2");
  if (q > (1 << 16)) throw unsupportedError("field size above 2^16");
  auto [p, k] = factorPrimePower(q);
  if (p == 0) throw inputError("field size is not a prime power");
  p_ = p;
  k_ = k;
  exp_.assign(static_cast<std::size_t>(q_), 0);
  log_.assign(static_cast<std::size_t>(q_), 0);

  if (k_ == 1) {
    int g = 1;
    if (p_ > 2) {
      for (g = 2; g < p_; ++g)
        if (multiplicativeOrder(g, p_) == p_ - 1) break;
    }
    eta_ = static_cast<Elem>(g);
    modulus_ = {(p_ - g) % p_, 1};
    int cur = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      exp_[static_cast<std::size_t>(i)] = static_cast<Elem>(cur);
      log_[static_cast<std::size_t>(cur)] = i;
      cur = static_cast<int>((static_cast<long long>(cur) * g) % p_);
    }
    exp_[static_cast<std::size_t>(q_ - 1)] = 1;
    return;
  }

  // Search monic candidates x^k + c_{k-1} x^{k-1} + ... + c_0 ascending in
  // sum c_i p^i; a candidate is primitive iff the class of x first returns
  // to 1 at power exactly q-1 (this also forces irreducibility).
  std::vector<int> coeffs(static_cast<std::size_t>(k_), 0);
  std::vector<Elem> exps(static_cast<std::size_t>(q_), 0);
  long long total = 1;
  for (int i = 0; i < k_; ++i) total *= p_;
  for (long long cand = 0; cand < total; ++cand) {
    long long t = cand;
    for (int i = 0; i < k_; ++i) { coeffs[static_cast<std::size_t>(i)] = static_cast<int>(t % p_); t /= p_; }
    // Walk powers of x modulo the candidate; cur holds coefficients.
    std::vector<int> cur(static_cast<std::size_t>(k_), 0);
    cur[0] = 1;  // x^0
    exps[0] = 1;
    bool ok = true;
    for (int e = 1; e <= q_ - 1; ++e) {
      // cur *= x, reduce by x^k = -sum c_i x^i.
      int top = cur[static_cast<std::size_t>(k_ - 1)];
      for (int i = k_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = 0;
      if (top != 0) {
        for (int i = 0; i < k_; ++i) {
          int v = cur[static_cast<std::size_t>(i)] - top * coeffs[static_cast<std::size_t>(i)];
          v %= p_;
          if (v < 0) v += p_;
          cur[static_cast<std::size_t>(i)] = v;
        }
      }
      long long packed = 0;
      for (int i = k_ - 1; i >= 0; --i) packed = packed * p_ + cur[static_cast<std::size_t>(i)];
      if (packed == 1 && e < q_ - 1) { ok = false; break; }
      if (e < q_ - 1) exps[static_cast<std::size_t>(e)] = static_cast<Elem>(packed);
      if (e == q_ - 1 && packed != 1) ok = false;
    }
    if (!ok) continue;
    modulus_ = coeffs;
    modulus_.push_back(1);
    exp_ = exps;
    exp_[static_cast<std::size_t>(q_ - 1)] = 1;
    for (int i = 0; i < q_ - 1; ++i) log_[exp_[static_cast<std::size_t>(i)]] = i;
    eta_ = exp_[1];
    return;
  }
  throw inputError("no primitive polynomial found");  // unreachable for prime powers
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((a + b) % p_);
  int x = a, y = b;
  int out = 0, base = 1;
  for (int i = 0; i < k_; ++i) {
    int d = (x % p_ + y % p_) % p_;
    out += d * base;
    base *= p_;
    x /= p_;
    y /= p_;
  }
  return static_cast<Elem>(out);
}

Field::Elem Field::neg(Elem a) const {
  if (a == 0) return 0;
  if (k_ == 1) return static_cast<Elem>((p_ - a) % p_);
  int x = a, out = 0, base = 1;
  for (int i = 0; i < k_; ++i) {
    int d = (p_ - x % p_) % p_;
    out += d * base;
    base *= p_;
    x /= p_;
  }
  return static_cast<Elem>(out);
}

Field::Elem Field::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw inputError("GF(q): negative power of zero");
    return 0;
  }
  long long l = (static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  if (l < 0) l += q_ - 1;
  return exp_[l];
}

}  // namespace toricode
