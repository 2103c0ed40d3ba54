#pragma once

// Conjugacy classes and irreducible characters of W_n = S_n x| (Z/2)^n and S_n,
// plus the torus-order and group-order polynomials attached to them.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "exotic/exact_algebra.hpp"
#include "exotic/partitions.hpp"

namespace exotic {

EXOTIC_ERROR(RankTooLarge);

enum class GroupKind { Bn, Sn };

inline int reflection_rank(GroupKind k) { return k == GroupKind::Bn ? 2 : 1; }

// Signed cycle type: positive cycles alpha, negative cycles beta. For S_n beta is empty.
struct ClassLabel {
  Partition positive;
  Partition negative;

  int size() const { return positive.size() + negative.size(); }
  // cycle type of the image in S_n
  Partition cycle_type() const {
    std::vector<int> v = positive.parts();
    v.insert(v.end(), negative.parts().begin(), negative.parts().end());
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
  }
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
  std::string to_string() const { return "(" + positive.to_string() + ";" + negative.to_string() + ")"; }
};

struct ConjugacyClass {
  ClassLabel label;
  Integer size;
};

inline constexpr int kMaxCharacterRank = 10;

namespace detail {

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// z_p = prod k^{m_k} m_k!
inline Integer centralizer_order(const Partition& p) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int x : p.parts()) ++mult[x];
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return z;
}

}  // namespace detail

inline Integer group_order(GroupKind kind, int n) {
  Integer f = detail::factorial(n);
  if (kind == GroupKind::Sn) return f;
  Integer p2 = 1;
  p2 <<= static_cast<unsigned long>(n);
  return p2 * f;
}

/*
  Classes of W_n are pairs (alpha; beta) with |alpha| + |beta| = n and
  |C| = |W_n| / (2^{l(alpha)+l(beta)} z_alpha z_beta). Ordered by |alpha|
  descending, then lexicographically. For S_n the classes are (nu; -).
*/
inline std::vector<ConjugacyClass> conjugacy_classes(GroupKind kind, int n) {
  std::vector<ConjugacyClass> out;
  Integer w = group_order(kind, n);
  if (kind == GroupKind::Sn) {
    for (const auto& p : enumerate_partitions(n)) out.push_back({{p, {}}, w / detail::centralizer_order(p)});
    return out;
  }
  for (int a = n; a >= 0; --a)
    for (const auto& al : enumerate_partitions(a))
      for (const auto& be : enumerate_partitions(n - a)) {
        Integer z = detail::centralizer_order(al) * detail::centralizer_order(be);
        z <<= static_cast<unsigned long>(al.length() + be.length());
        out.push_back({{al, be}, w / z});
      }
  return out;
}

// det of w on the reflection representation
inline int sign_value(const ClassLabel& w) {
  int e = 0;
  for (int k : w.positive.parts()) e += k - 1;
  for (int k : w.negative.parts()) e += k;
  return e % 2 ? -1 : 1;
}

// det(t - w) on the n-dimensional reflection representation.
inline ExactPoly reflection_charpoly(GroupKind kind, const ClassLabel& w) {
  ExactPoly r(1);
  const Rational one(1);
  if (kind == GroupKind::Sn) {
    const Partition nu = w.cycle_type();
    for (int k : nu.parts()) r *= ExactPoly::monomial(one, static_cast<std::size_t>(k)) - ExactPoly(1);
    return r;
  }
  for (int k : w.positive.parts()) r *= ExactPoly::monomial(one, static_cast<std::size_t>(k)) - ExactPoly(1);
  for (int k : w.negative.parts()) r *= ExactPoly::monomial(one, static_cast<std::size_t>(k)) + ExactPoly(1);
  return r;
}

enum class TorusKind { theta, iota_theta };

// |T_w^{theta,F}| or |T_w^{iota theta,F}| as a polynomial in q.
inline ExactPoly torus_order(const ClassLabel& w, TorusKind which) {
  if (which == TorusKind::theta) return reflection_charpoly(GroupKind::Bn, w);
  return reflection_charpoly(GroupKind::Sn, w);
}

// Psi_nu(t) = prod (t^{nu_i} + 1)
inline ExactPoly psi_poly(const Partition& nu) {
  ExactPoly r(1);
  for (int k : nu.parts()) r *= ExactPoly::monomial(Rational(1), static_cast<std::size_t>(k)) + ExactPoly(1);
  return r;
}

// |Sp_2n(q)| and |GL_n(q)| as polynomials in q.
struct GroupOrders {
  ExactPoly sp;
  ExactPoly gl;
};

inline GroupOrders group_orders(int n) {
  const Rational one(1);
  ExactPoly sp = ExactPoly::monomial(one, static_cast<std::size_t>(n * n));
  ExactPoly gl = ExactPoly::monomial(one, static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) {
    sp *= ExactPoly::monomial(one, static_cast<std::size_t>(2 * i)) - ExactPoly(1);
    gl *= ExactPoly::monomial(one, static_cast<std::size_t>(i)) - ExactPoly(1);
  }
  return {sp, gl};
}

namespace detail {

// Border strips of size k removable from lambda, with their heights (beta-number method).
inline std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int k) {
  std::vector<std::pair<Partition, int>> out;
  const int len = static_cast<int>(lambda.length());
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  for (int i = 0; i < len; ++i) {
    int b = beta[static_cast<std::size_t>(i)];
    int nb = b - k;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int height = 0;
    for (int c : beta) height += (c > nb && c < b);
    std::vector<int> next = beta;
    next[static_cast<std::size_t>(i)] = nb;
    std::sort(next.rbegin(), next.rend());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
      int p = next[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (p > 0) parts.push_back(p);
    }
    out.emplace_back(Partition(std::move(parts)), height);
  }
  return out;
}

/*
  Wreath-product Murnaghan-Nakayama rule: each cycle of length k removes a
  border strip of size k from one component, with sign (-1)^height; a strip
  taken from the second component under a negative cycle picks up another -1.
*/
class CharacterEvaluator {
 public:
  long value(const Bipartition& irrep, std::vector<int> pos, std::vector<int> neg) {
    auto key = std::make_tuple(irrep, pos, neg);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long result = 0;
    if (pos.empty() && neg.empty()) {
      result = (irrep.first.empty() && irrep.second.empty()) ? 1 : 0;
    } else {
      bool negative = pos.empty();
      int k;
      if (!negative) {
        k = pos.back();
        pos.pop_back();
      } else {
        k = neg.back();
        neg.pop_back();
      }
      for (auto& [rest, h] : remove_border_strips(irrep.first, k))
        result += (h % 2 ? -1 : 1) * value({rest, irrep.second}, pos, neg);
      for (auto& [rest, h] : remove_border_strips(irrep.second, k))
        result += (h % 2 ? -1 : 1) * (negative ? -1 : 1) * value({irrep.first, rest}, pos, neg);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::tuple<Bipartition, std::vector<int>, std::vector<int>>, long> memo_;
};

}  // namespace detail

/*
  Character table with irreps labeled by bipartitions (for S_n the irrep
  lambda is stored as (lambda; -)). Convention: ((n); -) is trivial and
  (-; (1^n)) is the sign character on W_n.
*/
struct CharTable {
  GroupKind kind;
  int rank;
  std::vector<ConjugacyClass> classes;
  std::vector<Bipartition> irreps;
  std::vector<std::vector<long>> values;  // irrep x class

  Integer order() const { return group_order(kind, rank); }
  std::size_t class_index(const ClassLabel& c) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].label == c) return i;
    throw DimensionMismatch("unknown class " + c.to_string());
  }
  std::size_t irrep_index(const Bipartition& b) const {
    for (std::size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i] == b) return i;
    throw DimensionMismatch("unknown irrep " + b.to_string());
  }
  const std::vector<long>& row(const Bipartition& b) const { return values[irrep_index(b)]; }
  // value at the identity class
  long degree(std::size_t irrep) const { return values[irrep][class_index(identity())]; }
  ClassLabel identity() const {
    std::vector<int> ones(static_cast<std::size_t>(rank), 1);
    return {Partition(ones), {}};
  }
};

namespace detail {

inline CharTable build_character_table(GroupKind kind, int n) {
  CharTable t{kind, n, conjugacy_classes(kind, n), {}, {}};
  if (kind == GroupKind::Bn) {
    t.irreps = enumerate_bipartitions(n);
  } else {
    for (const auto& p : partitions_in_dominance_refinement(n)) t.irreps.push_back({p, {}});
  }
  CharacterEvaluator ev;
  for (const auto& irr : t.irreps) {
    std::vector<long> row;
    for (const auto& c : t.classes) {
      // consume cycles from the smallest end: vectors are popped from the back
      row.push_back(ev.value(irr, c.label.positive.parts(), c.label.negative.parts()));
    }
    t.values.push_back(std::move(row));
  }
  return t;
}

}  // namespace detail

// Memoized per (kind, n); the returned table is immutable and shared.
inline std::shared_ptr<const CharTable> character_table(GroupKind kind, int n) {
  if (n < 0) throw SizeMismatch("negative rank");
  if (n > kMaxCharacterRank) throw RankTooLarge("character tables are limited to rank " + std::to_string(kMaxCharacterRank));
  static std::mutex mu;
  static std::map<std::pair<GroupKind, int>, std::shared_ptr<const CharTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{kind, n}];
  if (!slot) slot = std::make_shared<const CharTable>(detail::build_character_table(kind, n));
  return slot;
}

}  // namespace exotic
