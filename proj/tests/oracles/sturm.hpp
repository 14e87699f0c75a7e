#pragma once

// Distinct real root counts from Sturm sequences over dense rational
// coefficient vectors (index i holds the coefficient of t^i).

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace oracle {

using Dense = std::vector<mpq_class>;

inline void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Dense derivative(const Dense& p) {
  Dense d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

inline Dense remainder(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::vector<Dense> sturm_sequence(Dense p) {
  trim(p);
  std::vector<Dense> seq;
  if (p.empty()) return seq;
  seq.push_back(p);
  Dense d = derivative(p);
  if (d.empty()) return seq;
  seq.push_back(d);
  while (true) {
    Dense r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

inline std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Number of distinct real roots of a nonzero polynomial.
inline std::size_t sturm_root_count(const Dense& p) {
  const auto seq = sturm_sequence(p);
  std::vector<int> at_neg, at_pos;
  for (const auto& q : seq) {
    const int lc = sgn(q.back());
    const bool odd = (q.size() - 1) % 2 == 1;
    at_pos.push_back(lc);
    at_neg.push_back(odd ? -lc : lc);
  }
  return variations(at_neg) - variations(at_pos);
}

}  // namespace oracle
