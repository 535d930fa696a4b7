#pragma once

// Bicirculant graphs BC(Z_n; R, T, S): input description, validation, family
// classification, connectivity and the explicit 2n-vertex realization.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include <json.hpp>

#include "bforest/errors.hpp"

namespace bforest {

/// Unvalidated connection data as read from user input.
struct RawSpec {
  std::int64_t n = 0;
  std::vector<std::int64_t> alphas;
  std::vector<std::int64_t> betas;
  std::vector<std::int64_t> gammas;
  bool half_r = false;
  bool half_t = false;
};

/// Normalized connection data: R = {+-alpha} (+ n/2), T = {+-beta} (+ n/2),
/// S = {gamma}. Only produced by validate_spec.
class ConnectionSpec {
 public:
  long n() const noexcept { return n_; }
  const std::vector<long>& alphas() const noexcept { return alphas_; }
  const std::vector<long>& betas() const noexcept { return betas_; }
  const std::vector<long>& gammas() const noexcept { return gammas_; }
  bool half_r() const noexcept { return half_r_; }
  bool half_t() const noexcept { return half_t_; }

  long r() const noexcept { return static_cast<long>(alphas_.size()); }
  long t() const noexcept { return static_cast<long>(betas_.size()); }
  long s() const noexcept { return static_cast<long>(gammas_.size()); }

  /// Same connection sets at a different group order. Range checks are
  /// skipped; used for the formal tau sequence, where n only indexes terms.
  ConnectionSpec with_order_unchecked(long n) const {
    ConnectionSpec c = *this;
    c.n_ = n;
    return c;
  }

  friend bool operator==(const ConnectionSpec&, const ConnectionSpec&) = default;

 private:
  friend ConnectionSpec validate_spec(const RawSpec& raw, bool require_spokes);

  long n_ = 1;
  std::vector<long> alphas_;
  std::vector<long> betas_;
  std::vector<long> gammas_;
  bool half_r_ = false;
  bool half_t_ = false;
};

namespace detail {

inline std::vector<long> normalize(const std::vector<std::int64_t>& in) {
  std::vector<long> out(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Sorts and deduplicates the lists, then range-checks them.
inline ConnectionSpec validate_spec(const RawSpec& raw, bool require_spokes = true) {
  if (raw.n < 1) throw Error(Errc::OutOfRange, "n must be positive, got " + std::to_string(raw.n));
  if ((raw.half_r || raw.half_t) && raw.n % 2 != 0)
    throw Error(Errc::HalfWithoutEvenN, "n/2 requested in R or T but n = " + std::to_string(raw.n) + " is odd");
  ConnectionSpec spec;
  spec.n_ = static_cast<long>(raw.n);
  spec.alphas_ = detail::normalize(raw.alphas);
  spec.betas_ = detail::normalize(raw.betas);
  spec.gammas_ = detail::normalize(raw.gammas);
  spec.half_r_ = raw.half_r;
  spec.half_t_ = raw.half_t;

  auto check_half_open = [&](const std::vector<long>& v, const char* name) {
    for (long x : v)
      if (x < 1 || 2 * x >= spec.n_)
        throw Error(Errc::OutOfRange, std::string(name) + " = " + std::to_string(x) +
                                          " outside [1, n/2) for n = " + std::to_string(spec.n_));
  };
  check_half_open(spec.alphas_, "alpha");
  check_half_open(spec.betas_, "beta");
  for (long g : spec.gammas_)
    if (g < 0 || g >= spec.n_)
      throw Error(Errc::OutOfRange, "gamma = " + std::to_string(g) + " outside [0, n-1] for n = " +
                                        std::to_string(spec.n_));
  if (require_spokes && spec.gammas_.empty())
    throw Error(Errc::EmptySpokes, "S is empty; the graph cannot be connected");
  return spec;
}

/// The same connection sets at group order n, validated afresh.
inline ConnectionSpec with_order(const ConnectionSpec& spec, long n, bool require_spokes = true) {
  RawSpec raw;
  raw.n = n;
  raw.alphas.assign(spec.alphas().begin(), spec.alphas().end());
  raw.betas.assign(spec.betas().begin(), spec.betas().end());
  raw.gammas.assign(spec.gammas().begin(), spec.gammas().end());
  raw.half_r = spec.half_r();
  raw.half_t = spec.half_t();
  return validate_spec(raw, require_spokes);
}

/// j in {1, 2, 3, 4}: 1 plain, 2 with n/2 in R, 3 with n/2 in T, 4 with both.
enum class Family : int { One = 1, Two = 2, Three = 3, Four = 4 };

inline Family classify_family(const ConnectionSpec& spec) noexcept {
  if (spec.half_r()) return spec.half_t() ? Family::Four : Family::Two;
  return spec.half_t() ? Family::Three : Family::One;
}

inline int family_index(Family f) noexcept { return static_cast<int>(f); }

struct GcdFlags {
  bool a = false;  // gcd(n, alphas) = 1 and s > 0
  bool b = false;  // gcd(n, betas) = 1 and s > 0
  bool c = false;  // gcd(n, gamma differences) = 1
};

struct Connectivity {
  GcdFlags flags;
  bool connected = false;
};

/// Simple undirected graph on 2n vertices: right part 0..n-1, left part n..2n-1.
class GraphRealization {
 public:
  explicit GraphRealization(std::size_t vertices)
      : size_(vertices), adj_(vertices * vertices, 0) {}

  std::size_t vertex_count() const noexcept { return size_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * size_ + v] != 0; }

  void connect(std::size_t u, std::size_t v) {
    adj_[u * size_ + v] = 1;
    adj_[v * size_ + u] = 1;
  }

  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < size_; ++v) d += adj_[u * size_ + v];
    return d;
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t u = 0; u < size_; ++u)
      for (std::size_t v = u + 1; v < size_; ++v) e += adj_[u * size_ + v];
    return e;
  }

  bool is_connected() const {
    if (size_ == 0) return true;
    std::vector<char> seen(size_, 0);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
      std::size_t u = todo.front();
      todo.pop();
      for (std::size_t v = 0; v < size_; ++v) {
        if (adjacent(u, v) && !seen[v]) {
          seen[v] = 1;
          ++reached;
          todo.push(v);
        }
      }
    }
    return reached == size_;
  }

 private:
  std::size_t size_;
  std::vector<std::uint8_t> adj_;
};

/// Adjacency of BC(Z_n; R, T, S): right block sum(Q^a + Q^-a) (+ Q^(n/2)),
/// left block likewise with beta, spoke block sum Q^gamma.
inline GraphRealization realize(const ConnectionSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.n());
  GraphRealization g(2 * n);
  auto mod = [n](long x) { return static_cast<std::size_t>(((x % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n)); };
  for (std::size_t i = 0; i < n; ++i) {
    const long li = static_cast<long>(i);
    for (long a : spec.alphas()) g.connect(i, mod(li + a));
    for (long b : spec.betas()) g.connect(n + i, n + mod(li + b));
    if (spec.half_r()) g.connect(i, mod(li + spec.n() / 2));
    if (spec.half_t()) g.connect(n + i, n + mod(li + spec.n() / 2));
    for (long c : spec.gammas()) g.connect(i, n + mod(li + c));
  }
  return g;
}

/// Connectivity of the realization by union-find over the edge list, without
/// materializing the 2n x 2n adjacency matrix.
inline bool is_connected(const ConnectionSpec& spec) {
  const long n = spec.n();
  std::vector<long> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0L);
  auto find = [&](long x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& px = parent[static_cast<std::size_t>(x)];
      px = parent[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  };
  long components = 2 * n;
  auto unite = [&](long u, long v) {
    u = find(u);
    v = find(v);
    if (u != v) {
      parent[static_cast<std::size_t>(u)] = v;
      --components;
    }
  };
  for (long i = 0; i < n; ++i) {
    for (long a : spec.alphas()) unite(i, (i + a) % n);
    for (long b : spec.betas()) unite(n + i, n + (i + b) % n);
    if (spec.half_r()) unite(i, (i + n / 2) % n);
    if (spec.half_t()) unite(n + i, n + (i + n / 2) % n);
    for (long c : spec.gammas()) unite(i, n + (i + c) % n);
  }
  return components == 1;
}

/// Sufficient gcd conditions (a), (b), (c) next to graph-search ground truth.
/// With fewer than two spokes the difference set is empty, its gcd is taken
/// as 0 and condition (c) fails.
inline Connectivity check_connectivity(const ConnectionSpec& spec) {
  Connectivity out;
  const bool spokes = spec.s() > 0;
  long ga = spec.n();
  for (long a : spec.alphas()) ga = std::gcd(ga, a);
  long gb = spec.n();
  for (long b : spec.betas()) gb = std::gcd(gb, b);
  long gd = 0;
  const auto& gs = spec.gammas();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) gd = std::gcd(gd, gs[j] - gs[i]);
  out.flags.a = spokes && ga == 1;
  out.flags.b = spokes && gb == 1;
  out.flags.c = gd != 0 && std::gcd(spec.n(), gd) == 1;
  out.connected = is_connected(spec);
  return out;
}

inline nlohmann::json to_json(const ConnectionSpec& spec) {
  return nlohmann::json{{"n", spec.n()},           {"alphas", spec.alphas()}, {"betas", spec.betas()},
                        {"gammas", spec.gammas()}, {"half_r", spec.half_r()}, {"half_t", spec.half_t()}};
}

/// Parses {"n":int,"alphas":[int],"betas":[int],"gammas":[int],"half_r":bool,"half_t":bool}.
/// Missing lists default to empty and missing flags to false.
inline RawSpec raw_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(Errc::InvalidArgument, "connection spec must be a JSON object");
  if (!j.contains("n")) throw Error(Errc::InvalidArgument, "connection spec lacks \"n\"");
  RawSpec raw;
  try {
    raw.n = j.at("n").get<std::int64_t>();
    raw.alphas = j.value("alphas", std::vector<std::int64_t>{});
    raw.betas = j.value("betas", std::vector<std::int64_t>{});
    raw.gammas = j.value("gammas", std::vector<std::int64_t>{});
    raw.half_r = j.value("half_r", false);
    raw.half_t = j.value("half_t", false);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed connection spec: ") + e.what());
  }
  return raw;
}

inline ConnectionSpec spec_from_json(const nlohmann::json& j, bool require_spokes = true) {
  return validate_spec(raw_spec_from_json(j), require_spokes);
}

}  // namespace bforest
