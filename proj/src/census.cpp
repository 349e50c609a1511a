#include "hypoh/census.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "hypoh/disc_class.hpp"

namespace hypoh {

namespace {

std::uint64_t checked_power(std::uint64_t q, unsigned n, std::uint64_t limit) {
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < n; ++i) {
    r *= q;
    if (r > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TypeTuple default_targets(const CensusSpec& spec) {
  TypeTuple t;
  for (const auto& f : spec.fs) {
    t.emplace_back(std::vector<unsigned>{spec.n * static_cast<unsigned>(f.deg())});
  }
  return t;
}

template <class Body>
void run_parallel(unsigned threads, std::uint64_t work_items, Body body) {
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, work_items)));
  if (threads == 1) {
    body(0u, 1u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body, t, threads);
  for (auto& th : pool) th.join();
}

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t inseparable = 0;
  std::map<TypeTuple, std::uint64_t> histogram;
};

// Classifies one g (coefficients low-to-high, monic of degree n).
class Classifier {
 public:
  explicit Classifier(const CensusSpec& spec) : F_(*spec.ctx), fs_(spec.fs) {
    parts_.resize(fs_.size());
    types_.resize(fs_.size());
  }
  void classify(const kern::Coeffs& g, Tally& t) {
    ++t.total;
    for (std::size_t i = 0; i < fs_.size(); ++i) {
      const kern::Coeffs h = kern::compose(F_, fs_[i].coeffs(), g);
      if (!kern::fact_type_if_separable(F_, h, parts_[i])) {
        ++t.inseparable;
        return;
      }
      types_[i].parts = parts_[i];
    }
    ++t.histogram[types_];
  }

 private:
  const FieldCtx& F_;
  const std::vector<Poly>& fs_;
  std::vector<std::vector<unsigned>> parts_;
  TypeTuple types_;
};

void merge(Tally& into, const Tally& from) {
  into.total += from.total;
  into.inseparable += from.inseparable;
  for (const auto& [k, v] : from.histogram) into.histogram[k] += v;
}

Tally enumerate_exhaustive(const CensusSpec& spec) {
  const FieldCtx& F = *spec.ctx;
  const std::vector<Elem> elems = F.enumerate();
  const unsigned n = spec.n;
  std::vector<Tally> tallies(std::max(1u, spec.threads));
  run_parallel(spec.threads, elems.size(), [&](unsigned tid, unsigned stride) {
    Classifier cls(spec);
    Tally& t = tallies[tid];
    kern::Coeffs g(n + 1, 0);
    g[n] = 1;
    // idx[j] is the lex position of a_{j+1}; g[n-1-j] = a_{j+1}.
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t first = tid; first < elems.size(); first += stride) {
      std::fill(idx.begin(), idx.end(), 0);
      idx[0] = first;
      for (unsigned j = 0; j < n; ++j) g[n - 1 - j] = elems[idx[j]];
      while (true) {
        cls.classify(g, t);
        unsigned j = n;
        while (j-- > 1) {
          if (++idx[j] < elems.size()) {
            g[n - 1 - j] = elems[idx[j]];
            break;
          }
          idx[j] = 0;
          g[n - 1 - j] = elems[0];
        }
        if (j == 0 || n == 1) break;
      }
    }
  });
  Tally out;
  for (const auto& t : tallies) merge(out, t);
  return out;
}

Tally enumerate_sample(const CensusSpec& spec) {
  // Samples come in fixed blocks seeded from (seed, block) so the draw does
  // not depend on the worker count.
  constexpr std::uint64_t kBlock = 4096;
  const FieldCtx& F = *spec.ctx;
  const std::uint64_t blocks = (spec.samples + kBlock - 1) / kBlock;
  std::vector<Tally> tallies(std::max(1u, spec.threads));
  run_parallel(spec.threads, blocks, [&](unsigned tid, unsigned stride) {
    Classifier cls(spec);
    Tally& t = tallies[tid];
    std::uniform_int_distribution<Elem> dist(0, F.q() - 1);
    kern::Coeffs g(spec.n + 1, 0);
    g[spec.n] = 1;
    for (std::uint64_t b = tid; b < blocks; b += stride) {
      std::mt19937_64 rng(splitmix(spec.seed ^ splitmix(b)));
      const std::uint64_t end = std::min(spec.samples, (b + 1) * kBlock);
      for (std::uint64_t s = b * kBlock; s < end; ++s) {
        for (unsigned j = 0; j < spec.n; ++j) g[j] = dist(rng);
        cls.classify(g, t);
      }
    }
  });
  Tally out;
  for (const auto& t : tallies) merge(out, t);
  return out;
}

}  // namespace

void validate(const CensusSpec& spec) {
  if (!spec.ctx) throw DomainError("census: no field");
  if (spec.n < 1) throw DomainError("census: substitution degree n must be at least 1");
  if (spec.fs.empty()) throw DomainError("census: at least one f is required");
  for (std::size_t i = 0; i < spec.fs.size(); ++i) {
    const Poly& f = spec.fs[i];
    if (!f.ctx()->same_field(*spec.ctx)) throw DomainError("census: f over a different field");
    if (f.is_constant()) throw DomainError("census: f_" + std::to_string(i + 1) + " is constant");
    if (!f.is_monic()) throw DomainError("census: f_" + std::to_string(i + 1) + " is not monic");
    if (!is_separable(f)) throw DomainError("census: f_" + std::to_string(i + 1) + " is not separable");
    if (!spec.raw && !is_irreducible(f)) {
      throw DomainError("census: f_" + std::to_string(i + 1) + " is reducible (use raw mode)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.fs[j] == f) throw DomainError("census: f_" + std::to_string(j + 1) + " and f_" +
                                             std::to_string(i + 1) + " are associate");
    }
  }
  if (spec.sample) {
    if (spec.samples == 0) throw DomainError("census: sample mode needs at least one sample");
  } else if (checked_power(spec.ctx->q(), spec.n, kCensusGuard) > kCensusGuard) {
    throw DomainError("census: exhaustive mode requires q^n <= 10^8");
  }
  if (spec.targets) {
    if (spec.targets->size() != spec.fs.size()) {
      throw DomainError("census: one target per f is required");
    }
    for (std::size_t i = 0; i < spec.fs.size(); ++i) {
      const unsigned want = spec.n * static_cast<unsigned>(spec.fs[i].deg());
      if ((*spec.targets)[i].total() != want) {
        throw DomainError("census: target " + (*spec.targets)[i].str() + " does not sum to n*deg f_" +
                          std::to_string(i + 1) + " = " + std::to_string(want));
      }
    }
  }
}

OrbitSetup derive_setup(const CensusSpec& spec) {
  std::vector<unsigned> sizes;
  for (const auto& f : spec.fs) {
    if (!is_irreducible(f)) throw DomainError("derive_setup: every f_i must be irreducible");
    sizes.push_back(static_cast<unsigned>(f.deg()));
  }
  return setup_from_orbit_sizes(spec.n, sizes);
}

CensusReport run_census(const CensusSpec& spec) {
  validate(spec);
  const Tally t = spec.sample ? enumerate_sample(spec) : enumerate_exhaustive(spec);

  CensusReport rep;
  rep.total = t.total;
  rep.inseparable = t.inseparable;
  rep.separable_total = t.total - t.inseparable;
  rep.histogram = t.histogram;
  rep.targets = spec.targets ? *spec.targets : default_targets(spec);
  if (auto it = rep.histogram.find(rep.targets); it != rep.histogram.end()) rep.hits = it->second;
  rep.sampled = spec.sample;
  if (spec.sample) {
    rep.prng = kCensusPrng;
    rep.seed = spec.seed;
  }

  if (!spec.raw) {
    const OrbitSetup setup = derive_setup(spec);
    if (sym_order_power(setup.n, setup.nu()) <= kEnumerationGuard) {
      rep.predicted_density = predict_density(setup, rep.targets);
    }
  }
  if (rep.predicted_density) {
    const double dens = boost::rational_cast<double>(*rep.predicted_density);
    rep.expected_hits = dens * static_cast<double>(rep.total);
    rep.deviation = static_cast<double>(rep.hits) - rep.expected_hits;
    if (spec.sample) {
      const double se = std::sqrt(static_cast<double>(rep.total) * dens * (1 - dens));
      rep.normalized_deviation = se > 0 ? rep.deviation / se : 0;
      rep.normalization = "binomial-stderr";
    } else {
      const double q = static_cast<double>(spec.ctx->q());
      rep.normalized_deviation = rep.deviation / std::pow(q, spec.n - 0.5);
      rep.normalization = "q^(n-1/2)";
    }
  }
  return rep;
}

CensusReport type_census(const CensusSpec& spec) {
  if (!spec.targets) throw DomainError("type_census: targets are required");
  return run_census(spec);
}

ShadowReport orbit_shadow_check(const CensusSpec& spec, const CensusReport& report) {
  if (report.sampled) throw DomainError("orbit_shadow_check needs an exhaustive census");
  const OrbitSetup setup = derive_setup(spec);
  const auto dist = orbit_type_distribution(setup);
  std::vector<double> orbit_total(dist.size(), 0);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (const auto& [type, c] : dist[i]) orbit_total[i] += static_cast<double>(c);
  }
  auto density = [&](const TypeTuple& tuple) {
    double d = 1;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      auto it = dist[i].find(tuple[i]);
      d *= it == dist[i].end() ? 0.0 : static_cast<double>(it->second) / orbit_total[i];
    }
    return d;
  };
  ShadowReport out;
  // Types only exist for separable compositions, so frequencies are conditional on that.
  const double base = static_cast<double>(std::max<std::uint64_t>(report.separable_total, 1));
  auto consider = [&](const TypeTuple& tuple, std::uint64_t count) {
    const double gap =
        std::abs(static_cast<double>(count) / base - density(tuple));
    if (gap > out.max_gap || out.worst.empty()) {
      out.max_gap = gap;
      out.worst = tuple;
    }
  };
  for (const auto& [tuple, count] : report.histogram) {
    ++out.tuples_observed;
    if (density(tuple) == 0) ++out.unsupported;
    consider(tuple, count);
  }
  // Predicted tuples that never occurred count as observed frequency 0.
  std::vector<std::vector<FactType>> choices;
  for (const auto& d : dist) {
    std::vector<FactType> types;
    for (const auto& [type, c] : d) types.push_back(type);
    choices.push_back(std::move(types));
  }
  std::vector<std::size_t> pos(choices.size(), 0);
  while (true) {
    TypeTuple tuple;
    for (std::size_t i = 0; i < choices.size(); ++i) tuple.push_back(choices[i][pos[i]]);
    if (!report.histogram.count(tuple)) consider(tuple, 0);
    std::size_t i = choices.size();
    while (i-- > 0) {
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

SwanReport swan_mode(unsigned max_degree, unsigned threads) {
  if (max_degree < 1) throw DomainError("swan: degree bound must be at least 1");
  if (max_degree > 24) throw DomainError("swan: degree bound above 24 is not supported");
  FieldPtr F2 = make_field(2, 1);
  const FieldCtx& F = *F2;
  // Enumerate g by (degree, lower coefficient bits); index i <-> g of degree d
  // with bits i of the lower coefficients.
  std::vector<std::pair<unsigned, std::uint32_t>> work;
  for (unsigned d = 1; d <= max_degree; ++d) {
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << d); ++bits) work.emplace_back(d, bits);
  }
  std::vector<std::vector<std::size_t>> found(std::max(1u, threads));
  run_parallel(threads, work.size(), [&](unsigned tid, unsigned stride) {
    for (std::size_t w = tid; w < work.size(); w += stride) {
      const auto [d, bits] = work[w];
      // g^8 in characteristic 2 is g with each exponent multiplied by 8.
      kern::Coeffs h(8 * d + 1, 0);
      for (unsigned i = 0; i < d; ++i) h[8 * i] = (bits >> i) & 1U;
      h[8 * d] = 1;
      h[3] = F.add(h[3], 1);
      if (kern::is_irreducible(F, h)) found[tid].push_back(w);
    }
  });
  SwanReport rep;
  rep.max_degree = max_degree;
  rep.candidates = work.size();
  std::vector<std::size_t> all;
  for (const auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  for (std::size_t w : all) {
    const auto [d, bits] = work[w];
    kern::Coeffs g(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) g[i] = (bits >> i) & 1U;
    g[d] = 1;
    rep.witnesses.emplace_back(F2, g);
  }
  rep.counterexamples = rep.witnesses.size();
  return rep;
}

CorrelationReport correlation_mode(const FieldPtr& ctx, const std::vector<Elem>& omega) {
  const FieldCtx& F = *ctx;
  if (F.p() != 2) throw DomainError("corr: characteristic 2 required");
  if (omega.empty()) throw DomainError("corr: Omega must be nonempty");
  CorrelationReport rep;
  rep.q = F.q();
  rep.omega = omega;
  rep.even_sum = even_sum_criterion(F, omega);  // also rejects duplicates and |Omega| > 20
  const std::vector<Elem> elems = F.enumerate();
  kern::Coeffs h{0, 0, 1};
  const std::uint32_t all = (std::uint32_t{1} << omega.size()) - 1;
  for (Elem a : elems) {
    for (Elem b : elems) {
      h[1] = a;
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < omega.size(); ++i) {
        h[0] = F.sub(b, omega[i]);
        if (kern::is_irreducible(F, h)) mask |= std::uint32_t{1} << i;
      }
      ++rep.joint[mask];
      ++rep.total;
    }
  }
  if (auto it = rep.joint.find(all); it != rep.joint.end()) rep.all_irreducible = it->second;
  rep.independence_prediction =
      static_cast<double>(rep.total) / static_cast<double>(std::uint64_t{1} << omega.size());
  rep.relative_deviation =
      std::abs(static_cast<double>(rep.all_irreducible) - rep.independence_prediction) /
      rep.independence_prediction;
  return rep;
}

}  // namespace hypoh
