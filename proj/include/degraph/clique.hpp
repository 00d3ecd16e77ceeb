#pragma once

// Exact maximum clique via branch and bound with greedy-coloring bounds
// (Tomita-style ordering). Operates on dense bitset adjacency; callers keep
// instances at or below detail::kCliqueVertexCap vertices.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace degraph::detail {

inline constexpr std::size_t kCliqueVertexCap = 4096;

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool empty() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  void and_with(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  }

  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class MaxCliqueSolver {
 public:
  explicit MaxCliqueSolver(const std::vector<Bits>& adj) : adj_(adj), n_(adj.size()) {}

  // indices of one maximum clique, deterministic for a fixed adjacency
  std::vector<std::size_t> solve() {
    best_.clear();
    if (n_ == 0) return best_;
    Bits all(n_);
    for (std::size_t v = 0; v < n_; ++v) all.set(v);
    std::vector<std::size_t> r;
    expand(all, r);
    return best_;
  }

 private:
  void expand(Bits p, std::vector<std::size_t>& r) {
    // greedy coloring in ascending vertex order; a vertex's 1-based color
    // bounds the largest clique inside p that contains it
    std::vector<std::size_t> order;
    std::vector<std::size_t> color;
    std::vector<Bits> classes;
    p.for_each([&](std::size_t v) {
      std::size_t c = 0;
      while (c < classes.size() && classes[c].intersects(adj_[v])) ++c;
      if (c == classes.size()) classes.emplace_back(n_);
      classes[c].set(v);
      order.push_back(v);
      color.push_back(c + 1);
    });

    std::vector<std::size_t> idx(order.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });

    for (std::size_t k = idx.size(); k-- > 0;) {
      std::size_t v = order[idx[k]];
      if (r.size() + color[idx[k]] <= best_.size()) return;
      r.push_back(v);
      Bits p2 = p;
      p2.and_with(adj_[v]);
      if (p2.empty()) {
        if (r.size() > best_.size()) best_ = r;
      } else {
        expand(p2, r);
      }
      r.pop_back();
      p.reset(v);
    }
  }

  const std::vector<Bits>& adj_;
  std::size_t n_;
  std::vector<std::size_t> best_;
};

inline std::vector<std::size_t> max_clique_indices(const std::vector<Bits>& adj) {
  return MaxCliqueSolver(adj).solve();
}

}  // namespace degraph::detail
