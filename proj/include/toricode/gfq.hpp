#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricode/errors.hpp"

namespace toricode {

// GF(q) for a prime power q = p^k, q <= 2^16, with Zech-style exp/log
// tables over a fixed multiplicative generator eta.
//
// Elements are handles in [0, q): handle 0 is the zero element; a nonzero
// handle encodes the polynomial representative sum c_i x^i (coefficients
// over GF(p)) packed as sum c_i p^i. For prime fields the handle is the
// residue itself.
//
// The modulus is the first primitive monic polynomial
// x^k + c_{k-1} x^{k-1} + ... + c_0 in ascending order of sum c_i p^i;
// eta is the class of x (k >= 2) or the smallest primitive root (k = 1).
class Field {
 public:
  using Elem = std::uint16_t;

  explicit Field(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int k() const { return k_; }
  Elem eta() const { return eta_; }
  // Modulus coefficients c_0..c_k (c_k = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<int>(log_[a]) + log_[b]) % (q_ - 1)];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw inputError("GF(q): division by zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Elem pow(Elem a, long long e) const;

  // Discrete log base eta, in [0, q-2].
  int dlog(Elem a) const {
    if (a == 0) throw inputError("GF(q): dlog of zero");
    return log_[a];
  }
  // eta^e for any integer e.
  Elem fromDlog(long long e) const {
    long long m = e % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[m];
  }
  // Handle constructor with range check.
  Elem fromInt(long long v) const {
    if (v < 0 || v >= q_) throw inputError("GF(q): handle out of range");
    return static_cast<Elem>(v);
  }

  std::string elemToString(Elem a) const { return std::to_string(a); }

 private:
  int q_, p_, k_;
  Elem eta_;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;  // exp_[i] = eta^i, i in [0, q-1); exp_[q-1] = 1
  std::vector<int> log_;   // log_[h] for h != 0
};

}  // namespace toricode
