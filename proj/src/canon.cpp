#include "brickforge/canon.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {

class CanonSearch {
 public:
  CanonSearch(const MultiGraph& g, std::span<const int> colours) : g_(g), n_(g.vertex_count()) {
    mult_.assign(static_cast<std::size_t>(n_ * n_), 0);
    for (const Edge& e : g.edges()) {
      ++mult_[idx(e.u, e.v)];
      ++mult_[idx(e.v, e.u)];
    }
    initial_.assign(static_cast<std::size_t>(n_), 0);
    if (!colours.empty()) {
      if (static_cast<int>(colours.size()) != n_) {
        throw GraphError(ErrorKind::VertexOutOfRange, "colour vector length differs from vertex count");
      }
      std::copy(colours.begin(), colours.end(), initial_.begin());
    }
  }

  void run() {
    std::vector<int> colour = rank_of(initial_);
    search(colour);
  }

  const std::string& best() const { return *best_; }
  const std::vector<VertexId>& best_order() const { return best_order_; }

 private:
  std::size_t idx(VertexId u, VertexId v) const { return static_cast<std::size_t>(u * n_ + v); }

  static std::vector<int> rank_of(const std::vector<int>& keys) {
    std::vector<int> sorted(keys);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    }
    return out;
  }

  static int cell_count(const std::vector<int>& colour) {
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  }

  // Colour refinement to the coarsest equitable partition finer than `colour`.
  // New colours are ranks of (old colour, neighbourhood signature), so the
  // order of cells depends only on the isomorphism type.
  void refine(std::vector<int>& colour) const {
    int cells = cell_count(colour);
    while (true) {
      std::vector<std::vector<int>> signature(static_cast<std::size_t>(n_));
      for (VertexId v = 0; v < n_; ++v) {
        auto& sig = signature[static_cast<std::size_t>(v)];
        sig.push_back(colour[static_cast<std::size_t>(v)]);
        std::vector<std::pair<int, int>> nb;
        for (VertexId w : g_.neighbours(v).members()) {
          nb.emplace_back(colour[static_cast<std::size_t>(w)], mult_[idx(v, w)]);
        }
        std::sort(nb.begin(), nb.end());
        for (auto [c, m] : nb) {
          sig.push_back(c);
          sig.push_back(m);
        }
      }
      std::vector<std::vector<int>> distinct(signature);
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (VertexId v = 0; v < n_; ++v) {
        colour[static_cast<std::size_t>(v)] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), signature[static_cast<std::size_t>(v)]) -
            distinct.begin());
      }
      const int now = static_cast<int>(distinct.size());
      if (now == cells) return;
      cells = now;
    }
  }

  bool twins(VertexId u, VertexId v) const {
    for (VertexId w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (mult_[idx(u, w)] != mult_[idx(v, w)]) return false;
    }
    return true;
  }

  void search(std::vector<int> colour) {
    refine(colour);
    const int cells = cell_count(colour);
    if (cells == n_) {
      emit(colour);
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : colour) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] == 1) ++target;

    std::vector<VertexId> reps;
    for (VertexId v = 0; v < n_; ++v) {
      if (colour[static_cast<std::size_t>(v)] != target) continue;
      const bool covered = std::any_of(reps.begin(), reps.end(), [&](VertexId r) { return twins(r, v); });
      if (!covered) reps.push_back(v);
    }
    for (VertexId rep : reps) {
      std::vector<int> next(static_cast<std::size_t>(n_));
      for (VertexId v = 0; v < n_; ++v) {
        const int c = colour[static_cast<std::size_t>(v)];
        next[static_cast<std::size_t>(v)] = 2 * c + ((c == target && v != rep) ? 1 : 0);
      }
      search(rank_of(next));
    }
  }

  void emit(const std::vector<int>& position) {
    std::vector<VertexId> order(static_cast<std::size_t>(n_));
    for (VertexId v = 0; v < n_; ++v) order[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] = v;
    std::string code;
    code.reserve(static_cast<std::size_t>(2 + 2 * n_ + n_ * (n_ - 1) / 2));
    code.push_back(static_cast<char>(n_ >> 8));
    code.push_back(static_cast<char>(n_ & 0xff));
    // Initial colours are part of the key so differently coloured graphs differ.
    for (VertexId v : order) {
      const int c = initial_[static_cast<std::size_t>(v)];
      code.push_back(static_cast<char>((c >> 8) & 0xff));
      code.push_back(static_cast<char>(c & 0xff));
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        code.push_back(static_cast<char>(mult_[idx(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])]));
      }
    }
    if (!best_ || code < *best_) {
      best_ = std::move(code);
      best_order_ = std::move(order);
    }
  }

  const MultiGraph& g_;
  int n_;
  std::vector<std::uint8_t> mult_;
  std::vector<int> initial_;
  std::optional<std::string> best_;
  std::vector<VertexId> best_order_;
};

}  // namespace

std::string CanonicalLabel::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

CanonicalLabel CanonicalLabel::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw GraphError(ErrorKind::ParseError, "bad hex digit in canonical label");
  };
  if (hex.size() % 2 != 0) throw GraphError(ErrorKind::ParseError, "odd-length canonical label");
  CanonicalLabel out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return out;
}

CanonicalLabel canonical_label(const MultiGraph& g) { return canonical_label(g, {}); }

CanonicalLabel canonical_label(const MultiGraph& g, std::span<const int> vertex_colours) {
  CanonSearch search(g, vertex_colours);
  search.run();
  return CanonicalLabel{search.best()};
}

std::vector<VertexId> canonical_order(const MultiGraph& g, std::span<const int> vertex_colours) {
  CanonSearch search(g, vertex_colours);
  search.run();
  return search.best_order();
}

MultiGraph canonical_form(const MultiGraph& g) {
  const auto order = canonical_order(g);
  std::vector<VertexId> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<VertexId>(i);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) {
    VertexId a = position[static_cast<std::size_t>(e.u)];
    VertexId b = position[static_cast<std::size_t>(e.v)];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  return MultiGraph::build(g.vertex_count(), pairs);
}

bool is_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_label(g) == canonical_label(h);
}

}  // namespace brickforge
