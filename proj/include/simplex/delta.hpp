#pragma once

// The simplicial category: finite ordinals (including the empty one) and
// monotone maps, with ordinal addition as the tensor.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simplex/error.hpp"

namespace simplex {

/// The ordinal n = {0, ..., n-1}. Objects of the simplicial category are bare naturals.
using ordinal = std::size_t;

/// A nondecreasing function between finite ordinals, stored by its values.
class MonotoneMap {
 public:
  MonotoneMap() = default;

  /// Throws index_error unless values is nondecreasing and bounded by cod.
  MonotoneMap(ordinal cod, std::vector<std::size_t> values) : cod_(cod), values_(std::move(values)) {
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (values_[k] >= cod_) {
        throw index_error("monotone map value " + std::to_string(values_[k]) + " at position " +
                          std::to_string(k) + " is out of range for codomain " + std::to_string(cod_));
      }
      if (k > 0 && values_[k] < values_[k - 1]) {
        throw index_error("monotone map values decrease at position " + std::to_string(k));
      }
    }
  }

  ordinal dom() const noexcept { return values_.size(); }
  ordinal cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t operator()(std::size_t k) const { return values_.at(k); }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  ordinal cod_ = 0;
  std::vector<std::size_t> values_;
};

inline MonotoneMap identity_map(ordinal n) {
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k;
  return MonotoneMap(n, std::move(v));
}

/// g after f.
inline MonotoneMap compose_maps(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod() != g.dom()) {
    throw boundary_error("cannot compose: codomain " + std::to_string(f.cod()) + " of the first map differs from domain " +
                         std::to_string(g.dom()) + " of the second");
  }
  std::vector<std::size_t> v(f.dom());
  for (std::size_t k = 0; k < f.dom(); ++k) v[k] = g(f(k));
  return MonotoneMap(g.cod(), std::move(v));
}

/// Ordinal addition: f's block first, g's block shifted past f's codomain.
inline MonotoneMap tensor_maps(const MonotoneMap& f, const MonotoneMap& g) {
  std::vector<std::size_t> v = f.values();
  v.reserve(f.dom() + g.dom());
  for (std::size_t x : g.values()) v.push_back(x + f.cod());
  return MonotoneMap(f.cod() + g.cod(), std::move(v));
}

enum class GenKind : std::uint8_t { eta, mu };

/// eta{n,i}: n -> n+1 skipping value i (0 <= i <= n).
/// mu{n,i}:  n+1 -> n merging i and i+1 (0 <= i <= n-1).
struct DeltaGen {
  GenKind kind = GenKind::eta;
  std::size_t sup = 0;
  std::size_t idx = 0;

  bool valid() const noexcept { return kind == GenKind::eta ? idx <= sup : (sup >= 1 && idx < sup); }
  ordinal dom() const noexcept { return kind == GenKind::eta ? sup : sup + 1; }
  ordinal cod() const noexcept { return kind == GenKind::eta ? sup + 1 : sup; }

  friend bool operator==(const DeltaGen&, const DeltaGen&) = default;
  friend auto operator<=>(const DeltaGen&, const DeltaGen&) = default;
};

constexpr DeltaGen eta(std::size_t n, std::size_t i) { return {GenKind::eta, n, i}; }
constexpr DeltaGen mu(std::size_t n, std::size_t i) { return {GenKind::mu, n, i}; }

inline std::string to_string(const DeltaGen& g) {
  return std::string(g.kind == GenKind::eta ? "eta{" : "mu{") + std::to_string(g.sup) + "," + std::to_string(g.idx) + "}";
}

inline void require_valid(const DeltaGen& g) {
  if (!g.valid()) throw index_error("generator " + to_string(g) + " has an index out of range");
}

inline MonotoneMap gen_to_map(const DeltaGen& g) {
  require_valid(g);
  std::vector<std::size_t> v(g.dom());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (g.kind == GenKind::eta) {
      v[k] = k < g.idx ? k : k + 1;
    } else {
      v[k] = k <= g.idx ? k : k - 1;
    }
  }
  return MonotoneMap(g.cod(), std::move(v));
}

/// Composite of a word in application order (leftmost applied first), starting at `start`.
inline MonotoneMap eval_word(ordinal start, std::span<const DeltaGen> word) {
  MonotoneMap acc = identity_map(start);
  for (std::size_t k = 0; k < word.size(); ++k) {
    require_valid(word[k]);
    if (word[k].dom() != acc.cod()) {
      throw boundary_error("word is not composable at position " + std::to_string(k) + ": " + to_string(word[k]) +
                           " expects domain " + std::to_string(word[k].dom()) + ", got " + std::to_string(acc.cod()));
    }
    acc = compose_maps(gen_to_map(word[k]), acc);
  }
  return acc;
}

/// f = faces[0] o ... o faces[s-1] o degeneracies[0] o ... o degeneracies[t-1] in
/// composition order, with degeneracies ascending and faces descending. In
/// application order the degeneracies run largest first, then the faces smallest first.
struct CanonicalFactorization {
  ordinal dom = 0;
  ordinal cod = 0;
  std::vector<std::size_t> degeneracies;
  std::vector<std::size_t> faces;

  /// The normal form as an application-order word of generators.
  std::vector<DeltaGen> to_word() const {
    std::vector<DeltaGen> word;
    std::size_t n = dom;
    for (auto it = degeneracies.rbegin(); it != degeneracies.rend(); ++it) {
      word.push_back(mu(n - 1, *it));
      --n;
    }
    for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
      word.push_back(eta(n, *it));
      ++n;
    }
    return word;
  }

  friend bool operator==(const CanonicalFactorization&, const CanonicalFactorization&) = default;
};

inline CanonicalFactorization factorize(const MonotoneMap& f) {
  CanonicalFactorization out{f.dom(), f.cod(), {}, {}};
  for (std::size_t p = 0; p + 1 < f.dom(); ++p) {
    if (f(p) == f(p + 1)) out.degeneracies.push_back(p);
  }
  std::vector<bool> hit(f.cod(), false);
  for (std::size_t x : f.values()) hit[x] = true;
  for (std::size_t j = f.cod(); j-- > 0;) {
    if (!hit[j]) out.faces.push_back(j);
  }
  return out;
}

inline MonotoneMap recompose(const CanonicalFactorization& fac) {
  auto word = fac.to_word();
  return eval_word(fac.dom, word);
}

/// |Delta(m, n)| = C(m+n-1, m), and 1 for m = n = 0.
inline std::uint64_t hom_count(ordinal m, ordinal n) {
  if (m == 0) return 1;
  if (n == 0) return 0;
  std::uint64_t top = m + n - 1;
  std::uint64_t k = std::min<std::uint64_t>(m, n - 1);
  std::uint64_t result = 1;
  for (std::uint64_t j = 1; j <= k; ++j) result = result * (top - k + j) / j;
  return result;
}

/// All monotone maps m -> n in lexicographic order of their value sequences.
inline std::vector<MonotoneMap> enumerate_homs(ordinal m, ordinal n) {
  std::vector<MonotoneMap> out;
  if (m > 0 && n == 0) return out;
  std::vector<std::size_t> v(m, 0);
  while (true) {
    out.emplace_back(n, v);
    // Advance to the next nondecreasing sequence.
    std::size_t k = m;
    while (k > 0 && v[k - 1] + 1 >= n) --k;
    if (k == 0) break;
    ++v[k - 1];
    for (std::size_t j = k; j < m; ++j) v[j] = v[k - 1];
  }
  return out;
}

}  // namespace simplex
