#include "hypoh/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hypoh {

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || hit[v]) throw DomainError("not a permutation");
    hit[v] = true;
  }
}

Perm Perm::identity(unsigned m) {
  std::vector<unsigned> im(m);
  std::iota(im.begin(), im.end(), 0u);
  return Perm(std::move(im));
}

Perm Perm::cycle(unsigned m) {
  std::vector<unsigned> im(m);
  for (unsigned i = 0; i < m; ++i) im[i] = (i + 1) % m;
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Perm(std::move(inv));
}

Perm Perm::operator*(const Perm& b) const {
  if (size() != b.size()) throw DomainError("permutation size mismatch");
  std::vector<unsigned> c(images_.size());
  for (unsigned i = 0; i < c.size(); ++i) c[i] = images_[b.images_[i]];
  return Perm(std::move(c));
}

std::vector<std::vector<unsigned>> Perm::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<unsigned> cyc;
    for (unsigned x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

FactType Perm::cycle_type() const {
  std::vector<unsigned> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<unsigned>(c.size()));
  return FactType(std::move(lens));
}

bool Perm::is_full_cycle() const { return cycles().size() == 1; }

OrbitSetup make_setup(unsigned n, const Perm& sigma) {
  if (n < 1) throw DomainError("inner degree n must be at least 1");
  if (sigma.size() < 1) throw DomainError("Omega must be nonempty");
  return {n, sigma, sigma.cycles()};
}

OrbitSetup setup_from_orbit_sizes(unsigned n, const std::vector<unsigned>& sizes) {
  std::vector<unsigned> im;
  unsigned base = 0;
  for (unsigned s : sizes) {
    if (s == 0) throw DomainError("orbit sizes must be positive");
    for (unsigned i = 0; i < s; ++i) im.push_back(base + (i + 1) % s);
    base += s;
  }
  return make_setup(n, Perm(std::move(im)));
}

WreathElem WreathElem::identity(unsigned n, unsigned nu) {
  return {std::vector<Perm>(nu, Perm::identity(n)), Perm::identity(nu)};
}

Point act(const WreathElem& w, Point x) {
  if (x.omega >= w.sigma.size() || x.k >= w.zeta.at(x.omega).size()) {
    throw DomainError("point outside [n] x Omega");
  }
  const unsigned target = w.sigma(x.omega);
  return {w.zeta[target](x.k), target};
}

WreathElem mul(const WreathElem& a, const WreathElem& b) {
  if (a.sigma.size() != b.sigma.size() || a.zeta.size() != b.zeta.size()) {
    throw DomainError("wreath elements from different setups");
  }
  const Perm a_inv = a.sigma.inverse();
  WreathElem c{std::vector<Perm>(a.zeta.size()), a.sigma * b.sigma};
  for (unsigned w = 0; w < a.zeta.size(); ++w) c.zeta[w] = a.zeta[w] * b.zeta[a_inv(w)];
  return c;
}

WreathElem inverse(const WreathElem& w) {
  WreathElem out{std::vector<Perm>(w.zeta.size()), w.sigma.inverse()};
  for (unsigned o = 0; o < w.zeta.size(); ++o) out.zeta[o] = w.zeta[w.sigma(o)].inverse();
  return out;
}

namespace {

void check_setup(const WreathElem& w, const OrbitSetup& setup) {
  if (w.sigma != setup.sigma || w.zeta.size() != setup.nu()) {
    throw DomainError("wreath element inconsistent with the orbit setup");
  }
  for (const auto& z : w.zeta) {
    if (z.size() != setup.n) throw DomainError("zeta entry of the wrong degree");
  }
}

}  // namespace

bool is_column_transitive(const WreathElem& w, const OrbitSetup& setup) {
  check_setup(w, setup);
  for (const auto& orbit : setup.orbits) {
    const Point start{0, orbit.front()};
    std::size_t steps = 0;
    Point x = start;
    do {
      x = act(w, x);
      ++steps;
    } while (!(x == start));
    if (steps != setup.n * orbit.size()) return false;
  }
  return true;
}

Perm orbit_product(const WreathElem& w, const OrbitSetup& setup, unsigned omega) {
  check_setup(w, setup);
  // w^len(k, omega) = (zeta(s^len w) ... zeta(s w) k, omega), s = sigma.
  Perm acc = Perm::identity(setup.n);
  unsigned cur = omega;
  do {
    cur = setup.sigma(cur);
    acc = w.zeta[cur] * acc;
  } while (cur != omega);
  return acc;
}

bool ncycle_criterion(const WreathElem& w, const OrbitSetup& setup) {
  for (const auto& orbit : setup.orbits) {
    if (!orbit_product(w, setup, orbit.front()).is_full_cycle()) return false;
  }
  return true;
}

FactType orbit_type(const WreathElem& w, const OrbitSetup& setup, unsigned orbit_index) {
  check_setup(w, setup);
  const auto& orbit = setup.orbits.at(orbit_index);
  std::vector<unsigned> lens;
  std::map<std::pair<unsigned, unsigned>, bool> seen;
  for (unsigned o : orbit) {
    for (unsigned k = 0; k < setup.n; ++k) {
      if (seen[{k, o}]) continue;
      unsigned len = 0;
      Point x{k, o};
      do {
        seen[{x.k, x.omega}] = true;
        x = act(w, x);
        ++len;
      } while (!(x == Point{k, o}));
      lens.push_back(len);
    }
  }
  return FactType(std::move(lens));
}

std::uint64_t sym_order_power(unsigned n, unsigned nu) {
  unsigned __int128 fact = 1;
  for (unsigned i = 2; i <= n; ++i) {
    fact *= i;
    if (fact > kEnumerationGuard) return kEnumerationGuard + 1;
  }
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < nu; ++i) {
    r *= fact;
    if (r > kEnumerationGuard) return kEnumerationGuard + 1;
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

void require_guard(const OrbitSetup& setup) {
  if (sym_order_power(setup.n, setup.nu()) > kEnumerationGuard) {
    throw DomainError("enumeration guard exceeded: (n!)^nu > 10^8");
  }
}

// All of S_n in lex order, flattened: perm r occupies [r*n, (r+1)*n).
struct SymList {
  unsigned n;
  std::size_t count = 0;
  std::vector<std::uint8_t> images;

  explicit SymList(unsigned n_) : n(n_) {
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    do {
      images.insert(images.end(), p.begin(), p.end());
      ++count;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const std::uint8_t* operator[](std::size_t r) const { return images.data() + r * n; }
  Perm perm(std::size_t r) const {
    return Perm(std::vector<unsigned>((*this)[r], (*this)[r] + n));
  }
  std::size_t rank(const Perm& p) const {
    std::size_t r = 0;
    for (unsigned i = 0; i < n; ++i) {
      std::size_t smaller = 0;
      for (unsigned j = i + 1; j < n; ++j) smaller += p(j) < p(i);
      r = r * (n - i) + smaller;
    }
    return r;
  }
};

// Cycle through (0, start) of zeta*sigma has length n * |orbit|.
bool orbit_transitive(const SymList& S, const std::vector<std::uint32_t>& zeta, const Perm& sigma,
                      unsigned start, std::size_t orbit_len) {
  unsigned k = 0;
  unsigned o = start;
  std::size_t steps = 0;
  do {
    o = sigma(o);
    k = S[zeta[o]][k];
    ++steps;
  } while (k != 0 || o != start);
  return steps == S.n * orbit_len;
}

bool all_transitive(const SymList& S, const std::vector<std::uint32_t>& zeta, const OrbitSetup& setup) {
  for (const auto& orbit : setup.orbits) {
    if (!orbit_transitive(S, zeta, setup.sigma, orbit.front(), orbit.size())) return false;
  }
  return true;
}

// Advances the mixed-radix counter over positions [from, nu); false on wrap.
bool advance(std::vector<std::uint32_t>& zeta, std::size_t from, std::size_t radix) {
  for (std::size_t i = zeta.size(); i-- > from;) {
    if (++zeta[i] < radix) return true;
    zeta[i] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t count_transitive(const OrbitSetup& setup, unsigned threads) {
  require_guard(setup);
  const SymList S(setup.n);
  const unsigned nu = setup.nu();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(S.count)));
  std::vector<std::uint64_t> partial(threads, 0);

  // Work is split by the value of zeta at omega = 0.
  auto worker = [&](unsigned tid) {
    std::uint64_t local = 0;
    std::vector<std::uint32_t> zeta(nu, 0);
    for (std::size_t first = tid; first < S.count; first += threads) {
      std::fill(zeta.begin(), zeta.end(), 0);
      zeta[0] = static_cast<std::uint32_t>(first);
      do {
        local += all_transitive(S, zeta, setup);
      } while (advance(zeta, 1, S.count));
    }
    partial[tid] = local;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

std::uint64_t transitive_formula(const OrbitSetup& setup) {
  require_guard(setup);
  std::uint64_t total = sym_order_power(setup.n, setup.nu());
  for (unsigned i = 0; i < setup.r(); ++i) total /= setup.n;
  return total;
}

std::uint64_t conjugation_orbits_on_T(const OrbitSetup& setup) {
  require_guard(setup);
  const SymList S(setup.n);
  const unsigned nu = setup.nu();
  const std::uint64_t total = sym_order_power(setup.n, nu);

  auto encode = [&](const std::vector<std::uint32_t>& z) {
    std::uint64_t c = 0;
    for (unsigned i = 0; i < nu; ++i) c = c * S.count + z[i];
    return c;
  };
  auto to_elem = [&](const std::vector<std::uint32_t>& z) {
    WreathElem w{std::vector<Perm>(nu), setup.sigma};
    for (unsigned i = 0; i < nu; ++i) w.zeta[i] = S.perm(z[i]);
    return w;
  };

  // Generators of S_n^Omega: a transposition and an n-cycle in each coordinate.
  std::vector<WreathElem> gens;
  std::vector<Perm> local_gens;
  if (setup.n >= 2) {
    std::vector<unsigned> tr(setup.n);
    std::iota(tr.begin(), tr.end(), 0u);
    std::swap(tr[0], tr[1]);
    local_gens.push_back(Perm(tr));
    if (setup.n >= 3) local_gens.push_back(Perm::cycle(setup.n));
  }
  for (unsigned o = 0; o < nu; ++o) {
    for (const auto& g : local_gens) {
      WreathElem z = WreathElem::identity(setup.n, nu);
      z.zeta[o] = g;
      gens.push_back(std::move(z));
    }
  }
  std::vector<WreathElem> gens_inv;
  for (const auto& g : gens) gens_inv.push_back(inverse(g));

  std::vector<bool> visited(total, false);
  std::uint64_t orbits = 0;
  std::vector<std::uint32_t> zeta(nu, 0);
  do {
    const std::uint64_t code = encode(zeta);
    if (visited[code] || !all_transitive(S, zeta, setup)) continue;
    ++orbits;
    visited[code] = true;
    std::vector<WreathElem> queue{to_elem(zeta)};
    while (!queue.empty()) {
      WreathElem w = std::move(queue.back());
      queue.pop_back();
      for (std::size_t g = 0; g < gens.size(); ++g) {
        WreathElem c = mul(gens_inv[g], mul(w, gens[g]));
        std::vector<std::uint32_t> cz(nu);
        for (unsigned i = 0; i < nu; ++i) cz[i] = static_cast<std::uint32_t>(S.rank(c.zeta[i]));
        const std::uint64_t cc = encode(cz);
        if (!visited[cc]) {
          visited[cc] = true;
          queue.push_back(std::move(c));
        }
      }
    }
  } while (advance(zeta, 0, S.count));
  return orbits;
}

std::vector<std::map<FactType, std::uint64_t>> orbit_type_distribution(const OrbitSetup& setup) {
  require_guard(setup);
  const SymList S(setup.n);
  const unsigned n = setup.n;
  std::vector<std::map<FactType, std::uint64_t>> out;
  for (const auto& orbit : setup.orbits) {
    const std::size_t len = orbit.size();
    // Local relabelling: position j in the orbit maps to position j+1.
    std::vector<std::uint32_t> zeta(len, 0);
    std::map<FactType, std::uint64_t> counts;
    std::vector<bool> seen(n * len);
    std::vector<unsigned> lens;
    do {
      std::fill(seen.begin(), seen.end(), false);
      lens.clear();
      for (std::size_t j0 = 0; j0 < len; ++j0) {
        for (unsigned k0 = 0; k0 < n; ++k0) {
          if (seen[j0 * n + k0]) continue;
          unsigned cyc = 0;
          std::size_t j = j0;
          unsigned k = k0;
          do {
            seen[j * n + k] = true;
            j = (j + 1) % len;
            k = S[zeta[j]][k];
            ++cyc;
          } while (j != j0 || k != k0);
          lens.push_back(cyc);
        }
      }
      ++counts[FactType(lens)];
    } while (advance(zeta, 0, S.count));
    out.push_back(std::move(counts));
  }
  return out;
}

Rational predict_density(const OrbitSetup& setup, const std::vector<FactType>& targets) {
  if (targets.size() != setup.r()) {
    throw DomainError("predict_density: one target per sigma-orbit required");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].total() != setup.n * setup.orbits[i].size()) {
      throw DomainError("target " + targets[i].str() + " does not partition n*|Omega_i| = " +
                        std::to_string(setup.n * setup.orbits[i].size()));
    }
  }
  const auto dist = orbit_type_distribution(setup);
  std::uint64_t n_fact = 1;
  for (unsigned i = 2; i <= setup.n; ++i) n_fact *= i;
  Rational density(1);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    std::int64_t denom = 1;
    for (std::size_t j = 0; j < setup.orbits[i].size(); ++j) denom *= static_cast<std::int64_t>(n_fact);
    auto it = dist[i].find(targets[i]);
    const std::int64_t hits = it == dist[i].end() ? 0 : static_cast<std::int64_t>(it->second);
    density *= Rational(hits, denom);
  }
  return density;
}

std::vector<FactType> all_transitive_targets(const OrbitSetup& setup) {
  std::vector<FactType> t;
  for (const auto& orbit : setup.orbits) {
    t.emplace_back(std::vector<unsigned>{setup.n * static_cast<unsigned>(orbit.size())});
  }
  return t;
}

}  // namespace hypoh
