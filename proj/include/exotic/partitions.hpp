#pragma once

// Partitions, double partitions, their orders and statistics.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "exotic/exact_algebra.hpp"

namespace exotic {

EXOTIC_ERROR(SizeMismatch);
EXOTIC_ERROR(InvalidPartition);
EXOTIC_ERROR(InvalidField);

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidPartition("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  // i-th part, zero past the length
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  // "(2,1)", "-" for the empty partition
  std::string to_string() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

 private:
  std::vector<int> parts_;
};

struct Bipartition {
  Partition first;
  Partition second;

  int size() const { return first.size() + second.size(); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

  // "(2,1;1)", "(1;-)" style
  std::string to_string() const { return "(" + first.to_string() + ";" + second.to_string() + ")"; }
};

// All partitions of n in increasing lexicographic order: (1^n) first, (n) last.
inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

inline int n_value(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.length(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

inline int a_value(const Bipartition& b) {
  return 2 * (n_value(b.first) + n_value(b.second)) + b.second.size();
}

inline Partition transpose(const Partition& p) {
  std::vector<int> t;
  for (int j = 1; j <= p[0]; ++j) {
    int c = 0;
    for (int x : p.parts()) c += (x >= j);
    t.push_back(c);
  }
  return Partition(std::move(t));
}

inline bool dominance_le(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw SizeMismatch("dominance order needs partitions of equal size");
  int sa = 0, sb = 0;
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

// (b1_1, b2_1, b1_2, b2_2, ...) of the given length
inline std::vector<int> interleaved(const Bipartition& b, std::size_t len) {
  std::vector<int> s;
  s.reserve(len);
  for (std::size_t i = 0; s.size() < len; ++i) {
    s.push_back(b.first[i]);
    if (s.size() < len) s.push_back(b.second[i]);
  }
  return s;
}

// Closure order on the exotic nilpotent cone: dominance of interleaved sequences.
inline bool exotic_le(const Bipartition& a, const Bipartition& b) {
  if (a.size() != b.size()) throw SizeMismatch("exotic order needs bipartitions of equal size");
  std::size_t len = 2 * std::max({a.first.length(), a.second.length(), b.first.length(), b.second.length()});
  auto sa = interleaved(a, len), sb = interleaved(b, len);
  int pa = 0, pb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    pa += sa[i];
    pb += sb[i];
    if (pa > pb) return false;
  }
  return true;
}

/*
  Bipartitions of n ordered so that smaller elements of the exotic order come
  first: a-value descending, ties broken lexicographically on the interleaved
  sequence. Larger a means a smaller orbit, so this refines exotic_le.
*/
inline std::vector<Bipartition> enumerate_bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& p : enumerate_partitions(k))
      for (const auto& q : enumerate_partitions(n - k)) out.push_back({p, q});
  std::size_t len = 2 * static_cast<std::size_t>(std::max(n, 1));
  std::stable_sort(out.begin(), out.end(), [len](const Bipartition& x, const Bipartition& y) {
    int ax = a_value(x), ay = a_value(y);
    if (ax != ay) return ax > ay;
    return interleaved(x, len) < interleaved(y, len);
  });
  return out;
}

// Partitions of n with dominance-smaller first: n-value descending, then lexicographic.
inline std::vector<Partition> partitions_in_dominance_refinement(int n) {
  auto out = enumerate_partitions(n);
  std::stable_sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    int nx = n_value(x), ny = n_value(y);
    if (nx != ny) return nx > ny;
    return x < y;
  });
  return out;
}

namespace detail {

// Reading word of a tableau: rows from bottom to top, each left to right.
inline std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
  std::vector<int> w;
  for (std::size_t r = rows.size(); r-- > 0;) w.insert(w.end(), rows[r].begin(), rows[r].end());
  return w;
}

/*
  Lascoux-Schuetzenberger charge of a word with partition content. Standard
  subwords are extracted by scanning leftwards (cyclically) for 1, 2, ...;
  within a subword the index rises by one each time the scan wraps around,
  i.e. each time letter r+1 sits to the right of letter r.
*/
inline int charge(std::vector<int> word) {
  int total = 0;
  while (!word.empty()) {
    int maxletter = *std::max_element(word.begin(), word.end());
    std::vector<bool> used(word.size(), false);
    // position to start scanning (we scan leftwards from pos-1)
    std::size_t pos = word.size();
    int index = 0;
    for (int letter = 1; letter <= maxletter; ++letter) {
      // search leftwards from pos-1, wrapping around
      bool found = false;
      for (std::size_t step = 1; step <= word.size(); ++step) {
        std::size_t i = (pos + word.size() - step) % word.size();
        bool wrapped = step > pos;
        if (!used[i] && word[i] == letter) {
          if (letter > 1 && wrapped) ++index;
          total += index;
          used[i] = true;
          pos = i;
          found = true;
          break;
        }
      }
      if (!found) break;
    }
    std::vector<int> rest;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (!used[i]) rest.push_back(word[i]);
    word = std::move(rest);
  }
  return total;
}

// All semistandard tableaux of the given shape and content, as row lists.
inline void semistandard_tableaux(const Partition& shape, const Partition& content,
                                  const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  // fill letters 1..k in turn: letter i occupies a horizontal strip
  std::vector<int> filled(shape.length(), 0);
  std::vector<std::vector<int>> rows(shape.length());
  std::function<void(std::size_t)> place = [&](std::size_t letter) {
    if (letter == content.length()) {
      visit(rows);
      return;
    }
    int count = content[letter];
    const std::vector<int> before = filled;
    // distribute `count` boxes of this letter over rows as a horizontal strip
    std::function<void(std::size_t, int)> strip = [&](std::size_t r, int left) {
      if (r == shape.length()) {
        if (left == 0) place(letter + 1);
        return;
      }
      int cap = shape[r] - filled[r];
      if (r > 0) cap = std::min(cap, before[r - 1] - filled[r]);  // column strictness
      for (int k = std::min(cap, left); k >= 0; --k) {
        filled[r] += k;
        rows[r].insert(rows[r].end(), static_cast<std::size_t>(k), static_cast<int>(letter) + 1);
        strip(r + 1, left - k);
        rows[r].resize(rows[r].size() - static_cast<std::size_t>(k));
        filled[r] -= k;
      }
    };
    strip(0, count);
  };
  place(0);
}

}  // namespace detail

/*
  Classical Kostka-Foulkes polynomial K_{lambda,mu}(t) as the charge
  generating function over semistandard tableaux of shape lambda and
  content mu. Independent of the matrix-equation route.
*/
inline ExactPoly classical_kostka_charge(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw SizeMismatch("Kostka polynomial needs partitions of equal size");
  std::vector<Rational> coeff;
  detail::semistandard_tableaux(lambda, mu, [&](const std::vector<std::vector<int>>& rows) {
    auto c = static_cast<std::size_t>(detail::charge(detail::reading_word(rows)));
    if (coeff.size() <= c) coeff.resize(c + 1);
    coeff[c] += 1;
  });
  return ExactPoly(std::move(coeff));
}

// t^{n(mu)} K_{lambda,mu}(1/t)
inline ExactPoly modified_classical_kostka(const Partition& lambda, const Partition& mu) {
  ExactPoly k = classical_kostka_charge(lambda, mu);
  auto nm = static_cast<std::size_t>(n_value(mu));
  std::vector<Rational> c(nm + 1);
  for (std::size_t i = 0; i < k.size(); ++i) c[nm - i] = k[i];
  return ExactPoly(std::move(c));
}

namespace detail {

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline int mobius(long n) {
  int m = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

// truncated power series product
inline std::vector<Integer> series_mul(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n) {
  std::vector<Integer> r(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace detail

// True for p^k with p an odd prime, k >= 1.
inline bool is_odd_prime_power(long q) {
  if (q < 3 || q % 2 == 0) return false;
  long p = 3;
  while (q % p) p += 2;
  while (q % p == 0) q /= p;
  return q == 1 && detail::is_prime(p);
}

/*
  Number of bipartition-valued functions on the Frobenius orbits of k^*
  (orbits of size d weighted by d) with total weight n. There are
  (1/d) sum_{e|d} mu(e) (q^{d/e} - 1) orbits of size d.
*/
inline Integer phi_count(int n, long q) {
  if (!is_odd_prime_power(q)) throw InvalidField("q must be an odd prime power, got " + std::to_string(q));
  if (n < 0) throw SizeMismatch("negative rank");
  auto N = static_cast<std::size_t>(n);
  std::vector<Integer> bip(N + 1);
  for (std::size_t k = 0; k <= N; ++k) bip[k] = static_cast<long>(enumerate_bipartitions(static_cast<int>(k)).size());
  std::vector<Integer> total(N + 1);
  total[0] = 1;
  for (std::size_t d = 1; d <= N; ++d) {
    Integer cnt = 0;
    for (long e = 1; e <= static_cast<long>(d); ++e) {
      if (static_cast<long>(d) % e) continue;
      Integer qp;
      mpz_ui_pow_ui(qp.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(static_cast<long>(d) / e));
      cnt += detail::mobius(e) * (qp - 1);
    }
    cnt /= static_cast<long>(d);
    // one factor sum_k bip[k] x^{dk} per orbit of size d
    std::vector<Integer> f(N + 1);
    for (std::size_t k = 0; k * d <= N; ++k) f[k * d] = bip[k];
    std::vector<Integer> pw(N + 1);
    pw[0] = 1;
    Integer e = cnt;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) pw = detail::series_mul(pw, f, N);
      e >>= 1;
      if (e > 0) f = detail::series_mul(f, f, N);
    }
    total = detail::series_mul(total, pw, N);
  }
  return total[N];
}

}  // namespace exotic
