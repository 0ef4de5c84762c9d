#include "polarscope/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "polarscope/error.hpp"

namespace polarscope {
namespace {

// Calls fn(i) for i in [0, count) on up to `threads` workers. The first
// exception is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

PositiveResult evaluate_positive(const PolarSpace& space, const GeneratorSet& set) {
  PositiveResult r;
  r.size = set.size();
  r.strong = check_strong_pseudopolar(space, set).passed();
  r.pseudo = check_pseudopolar(space, set).passed();
  r.alt = check_alt(space, set).passed();
  r.embedded = verify_embedded(space, set);
  const auto& v = r.embedded;
  r.passed = r.strong && r.pseudo && r.alt && v.is_polar_space && v.rank == space.rank() &&
             v.param_half == space.spec().param_half - 2 && v.point_count == v.expected_point_count &&
             v.e_identity_holds;
  return r;
}

}  // namespace

bool HarnessSummary::all_positive_pass() const {
  return std::all_of(positives.begin(), positives.end(), [](const PositiveResult& p) { return p.passed; });
}

bool HarnessSummary::all_negative_fail() const {
  return std::all_of(negatives.begin(), negatives.end(), [](const NegativeResult& n) { return n.rejected(); });
}

unsigned default_threads() {
  if (const char* env = std::getenv("POLARSCOPE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("uniform_below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, std::uint32_t n, std::uint32_t k) {
  if (k > n) throw InvalidArgument("subset larger than the population");
  std::vector<std::uint32_t> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
  for (std::uint32_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::vector<Element>> hyperplane_covectors(const Field& field, int n) {
  const int cols = n + 1;
  const std::uint32_t q = field.order();
  std::vector<std::vector<Element>> out;
  std::vector<Element> c(cols);
  for (int lead = cols - 1; lead >= 0; --lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    while (true) {
      out.push_back(c);
      int pos = cols - 1;
      while (pos > lead) {
        if (++c[pos] < q) break;
        c[pos] = 0;
        --pos;
      }
      if (pos == lead) break;
    }
  }
  return out;
}

HarnessSummary equivalence_harness(const PolarSpace& space, const HarnessOptions& options) {
  const PolarSpaceSpec& spec = space.spec();
  const bool symplectic = spec.family == Family::symplectic;
  if (spec.family == Family::hyperbolic || spec.family == Family::hermitian_odd ||
      (symplectic && spec.field().p() != 2)) {
    throw InvalidArgument("equivalence harness covers Q(2d,q), W(2d-1,q) with q even, H(2d,q^2) and Q-(2d+1,q)");
  }
  const unsigned threads = options.threads ? options.threads : default_threads();
  HarnessSummary summary{spec};
  space.generators();

  if (symplectic) {
    PositiveResult r = evaluate_positive(space, quadric_in_symplectic(space));
    r.label = "quadric Q+(" + std::to_string(spec.ambient_dim()) + "," + std::to_string(spec.q()) + ")";
    summary.positives.push_back(std::move(r));
  } else {
    const auto covectors = hyperplane_covectors(space.field(), space.ambient_dim());
    summary.hyperplanes_total = covectors.size();
    std::vector<std::vector<Element>> chosen;
    for (const auto& c : covectors) {
      if (summary.same_rank >= options.max_sections) break;
      ++summary.hyperplanes_examined;
      switch (classify_hyperplane(space, hyperplane(space.field(), c)).tag) {
        case SectionTag::tangent: ++summary.tangent; break;
        case SectionTag::rank_drop: ++summary.rank_drop; break;
        case SectionTag::same_rank:
          ++summary.same_rank;
          chosen.push_back(c);
          break;
      }
    }
    summary.positives.resize(chosen.size());
    parallel_for(chosen.size(), threads, [&](std::size_t i) {
      PositiveResult r = evaluate_positive(space, section_set(space, hyperplane(space.field(), chosen[i])));
      r.covector = chosen[i];
      r.label = "hyperplane";
      summary.positives[i] = std::move(r);
    });
  }

  const auto size = static_cast<std::uint32_t>(to_u64(pseudo_set_size(spec)));
  const auto total = static_cast<std::uint32_t>(space.generator_count());
  summary.negatives.resize(size <= total ? options.samples : 0);
  parallel_for(summary.negatives.size(), threads, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    NegativeResult r;
    r.sample = i;
    r.members = random_subset(rng, total, size);
    std::vector<Subspace> members;
    for (auto g : r.members) members.push_back(space.generators()[g]);
    GeneratorSet set(spec, std::move(members));
    r.strong = check_strong_pseudopolar(space, set).passed();
    const CheckReport pseudo = check_pseudopolar(space, set);
    r.pseudo = pseudo.passed();
    for (const auto& c : pseudo.conditions) {
      if (!c.passed) {
        r.pseudo_failure = c.id;
        break;
      }
    }
    r.alt = check_alt(space, set).passed();
    if (options.embedded_on_negatives) r.embedded = verify_embedded(space, set).is_polar_space;
    summary.negatives[i] = std::move(r);
  });

  for (const auto& p : summary.positives) summary.implication_violations += p.strong && !(p.pseudo && p.alt);
  for (const auto& n : summary.negatives) summary.implication_violations += n.strong && !(n.pseudo && n.alt);
  return summary;
}

}  // namespace polarscope
