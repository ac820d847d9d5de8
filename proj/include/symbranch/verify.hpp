#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "symbranch/branching.hpp"
#include "symbranch/burge.hpp"
#include "symbranch/character.hpp"
#include "symbranch/lr.hpp"
#include "symbranch/partition.hpp"
#include "symbranch/path.hpp"
#include "symbranch/polytope.hpp"
#include "symbranch/sundaram.hpp"

namespace symbranch {

enum class LambdaFilter { stable, all };
enum class Format { json, csv };

struct SweepConfig {
  std::vector<int> n_values{2, 3};
  int max_lambda_size = 8;
  LambdaFilter lambda_filter = LambdaFilter::all;
  std::string output;  // empty: stdout
  Format format = Format::json;
  unsigned jobs = 0;   // 0: default_jobs()
  bool inject_fault = false;

  void validate() const {
    for (int n : n_values)
      if (n < 1) throw InvalidArgument("n must be at least 1");
    if (max_lambda_size < 0) throw InvalidArgument("maximum size must be nonnegative");
  }
};

/// SYMBRANCH_JOBS if set and positive, else the hardware concurrency.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("SYMBRANCH_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(k) for k in [0, count) on up to `jobs` threads. Exceptions are
/// rethrown on the calling thread after all workers stop.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs == 0) jobs = default_jobs();
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

struct SweepItem {
  int n;
  Partition lambda;
};

/// Every λ with at most 2n-1 rows (n rows when filtering to stable shapes)
/// and |λ| ≤ max size, for each n.
inline std::vector<SweepItem> sweep_items(const SweepConfig& config) {
  config.validate();
  std::vector<SweepItem> out;
  for (int n : config.n_values) {
    const int rows = config.lambda_filter == LambdaFilter::stable ? n : 2 * n - 1;
    for (auto& p : partitions_up_to(config.max_lambda_size, rows)) out.push_back({n, std::move(p)});
  }
  return out;
}

/// Outcome of one acceptance check.
struct CheckResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> messages;  // first few failures
  std::vector<std::string> notes;     // informational, never failures
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

namespace detail {

constexpr std::size_t kMaxMessages = 10;

/// Thread-safe accumulator for a CheckResult.
class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

  void pass() {
    std::lock_guard lock(mutex_);
    ++result_.cases;
  }
  void fail(const std::string& message) {
    std::lock_guard lock(mutex_);
    ++result_.cases;
    ++result_.failures;
    if (result_.messages.size() < kMaxMessages) result_.messages.push_back(message);
  }
  void check(bool ok, const std::function<std::string()>& message) { ok ? pass() : fail(message()); }
  void note(const std::string& text) {
    std::lock_guard lock(mutex_);
    result_.notes.push_back(text);
  }

  CheckResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::sort(result_.messages.begin(), result_.messages.end());
    std::sort(result_.notes.begin(), result_.notes.end());
    return result_;
  }

 private:
  std::mutex mutex_;
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

inline std::string item_label(int n, const Partition& lambda) { return "n=" + std::to_string(n) + " λ=" + lambda.to_string(); }

inline std::string item_label(int n, const Partition& lambda, const Partition& mu) {
  return item_label(n, lambda) + " μ=" + mu.to_string();
}

/// Stable μ that could occur in res L(λ): at most n rows, |μ| ≤ |λ| with
/// |λ| - |μ| even.
inline std::vector<Partition> candidate_endpoints(const Partition& lambda, int n) {
  std::vector<Partition> out;
  for (auto& mu : partitions_up_to(lambda.size(), n))
    if ((lambda.size() - mu.size()) % 2 == 0) out.push_back(std::move(mu));
  return out;
}

}  // namespace detail

/// Three branching tables for one λ and whether they and the dimension
/// count agree.
struct BranchingComparison {
  BranchingTable paths;
  BranchingTable sundaram;
  BranchingTable character;
  long long dim_sl = 0;
  long long dim_sum = 0;

  bool tables_agree() const { return paths.same_multiplicities(sundaram) && paths.same_multiplicities(character); }
  bool dimension_matches() const { return dim_sl == dim_sum; }
  bool agrees() const { return tables_agree() && dimension_matches(); }
};

inline BranchingComparison compare_branching(const Partition& lambda, int n) {
  BranchingComparison c{branch_by_paths(lambda, n), branch_by_sundaram(lambda, n), branch_by_character(lambda, n), 0, 0};
  c.dim_sl = weyl_dimension_sl(lambda, 2 * n);
  c.dim_sum = c.character.dimension(n);
  return c;
}

/// Triple agreement and Σ_μ N_{λ,μ} dim L̃(μ) = dim L(λ). With
/// inject_fault, the character table of the first nonempty item gets one
/// multiplicity bumped, which must be detected.
inline CheckResult check_triple_agreement(const SweepConfig& config) {
  detail::Recorder rec("triple agreement");
  const auto items = sweep_items(config);
  parallel_for(items.size(), config.jobs, [&](std::size_t k) {
    const auto& [n, lambda] = items[k];
    auto c = compare_branching(lambda, n);
    if (config.inject_fault && k == 0 && !c.character.multiplicities.empty())
      ++c.character.multiplicities.begin()->second;
    rec.check(c.tables_agree(), [&] { return detail::item_label(n, lambda) + ": branching tables differ"; });
    rec.check(c.dimension_matches(), [&] {
      return detail::item_label(n, lambda) + ": dimension " + std::to_string(c.dim_sum) + " != " + std::to_string(c.dim_sl);
    });
  });
  return rec.finish();
}

/// Evidence that φ: domres(λ, μ) → ⋃_η LRS(λ/μ, η) is a bijection.
struct BijectionCertificate {
  Partition lambda;
  Partition mu;
  int n = 0;
  std::size_t domres_count = 0;
  std::size_t lrs_count = 0;
  bool injective = true;
  bool image_equals_lrs = true;
  bool weights_even = true;
  bool left_roundtrip = true;   // phi_inverse ∘ phi
  bool right_roundtrip = true;  // phi ∘ phi_inverse

  bool ok() const { return injective && image_equals_lrs && weights_even && left_roundtrip && right_roundtrip; }
};

inline BijectionCertificate bijection_certificate(const Partition& lambda, const Partition& mu, int n) {
  BijectionCertificate cert{lambda, mu, n};
  const auto index = detail::phi_inverse_index(lambda, mu, n);
  const auto domres = enumerate_domres(lambda, n, mu);
  const auto lrs = enumerate_lrs_even(lambda, mu, n);
  cert.domres_count = domres.size();
  cert.lrs_count = lrs.size();
  cert.injective = index->injective();
  std::vector<SkewTableau> images = index->images();
  std::sort(images.begin(), images.end());
  cert.image_equals_lrs = images == lrs;
  for (const auto& l : images) cert.weights_even = cert.weights_even && is_even_shape(skew_weight(l));
  for (const auto& t : domres) cert.left_roundtrip = cert.left_roundtrip && index->invert(phi(t, n)) == t;
  for (const auto& l : lrs) {
    try {
      cert.right_roundtrip = cert.right_roundtrip && phi(index->invert(l), n) == l;
    } catch (const NotFound&) {
      cert.right_roundtrip = false;
    }
  }
  return cert;
}

inline CheckResult check_bijection(const SweepConfig& config) {
  detail::Recorder rec("bijection certificates");
  const auto items = sweep_items(config);
  parallel_for(items.size(), config.jobs, [&](std::size_t k) {
    const auto& [n, lambda] = items[k];
    for (const auto& mu : detail::candidate_endpoints(lambda, n)) {
      const auto cert = bijection_certificate(lambda, mu, n);
      rec.check(cert.ok(), [&] { return detail::item_label(n, lambda, mu) + ": certificate failed"; });
    }
  });
  return rec.finish();
}

/// Within each nonempty domres(λ, μ) every element has the same Q^p and the
/// same Q, and Q has shape λ (it is always the canonical numbering).
inline CheckResult check_q_rigidity(const SweepConfig& config) {
  detail::Recorder rec("Q-symbol rigidity");
  const auto items = sweep_items(config);
  parallel_for(items.size(), config.jobs, [&](std::size_t k) {
    const auto& [n, lambda] = items[k];
    const StandardTableau canonical = canonical_q(lambda);
    for (const auto& [mu, group] : domres_by_endpoint(lambda, n)) {
      const auto first = q_symbols(group.front(), n);
      bool ok = first.final_q.shape() == lambda && first.final_q == canonical;
      for (const auto& t : group) {
        const auto b = q_symbols(t, n);
        ok = ok && b.partial_q == first.partial_q && b.final_q == first.final_q;
      }
      rec.check(ok, [&] { return detail::item_label(n, lambda, mu) + ": Q-symbols differ"; });
    }
  });
  return rec.finish();
}

/// If j_s < j_t are removals coming from the same column of T, the entries
/// they bump out of the partial Q-symbol satisfy i_s > i_t.
inline CheckResult check_column_cancellations(const SweepConfig& config) {
  detail::Recorder rec("column cancellations");
  const auto items = sweep_items(config);
  parallel_for(items.size(), config.jobs, [&](std::size_t k) {
    const auto& [n, lambda] = items[k];
    for_each_domres(lambda, n, [&](const Tableau& t) {
      const auto b = q_symbols(t, n);
      std::map<int, int> last_bumped;  // column -> entry bumped by the latest removal there
      bool ok = true;
      for (const auto& r : b.removals) {
        auto it = last_bumped.find(r.cell.col);
        if (it != last_bumped.end() && r.bumped >= it->second) ok = false;
        last_bumped[r.cell.col] = r.bumped;
      }
      rec.check(ok, [&] { return detail::item_label(n, lambda) + ": column cancellations out of order"; });
    });
  });
  return rec.finish();
}

/// All special two-line arrays with entries in {1..max_entry} and at most
/// max_pairs pairs, in a fixed order.
inline std::vector<SpecialTwoLineArray> special_arrays(int max_entry, int max_pairs) {
  std::vector<SpecialTwoLineArray> out;
  std::vector<std::pair<int, int>> pairs;  // (j, i)
  std::vector<bool> used(static_cast<std::size_t>(max_entry) + 1, false);
  // Each array is a set of disjoint pairs i < j; add pairs in increasing
  // order of their smaller element to visit each set once.
  auto emit = [&] {
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> top, bottom;
    for (auto [j, i] : sorted) {
      top.push_back(j);
      bottom.push_back(i);
    }
    out.emplace_back(std::move(top), std::move(bottom));
  };
  auto rec = [&](auto&& self, int min_i) -> void {
    emit();
    if (static_cast<int>(pairs.size()) == max_pairs) return;
    for (int i = min_i; i <= max_entry; ++i) {
      if (used[i]) continue;
      for (int j = i + 1; j <= max_entry; ++j) {
        if (used[j]) continue;
        used[i] = used[j] = true;
        pairs.emplace_back(j, i);
        self(self, i + 1);
        pairs.pop_back();
        used[i] = used[j] = false;
      }
    }
  };
  rec(rec, 1);
  return out;
}

/// Number of standard tableaux of shape λ (hook length formula).
inline long long count_standard(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  // Multiply and divide alternately to stay exact: n!/Π hooks via rational.
  detail::Rational r{1, 1};
  int k = 0;
  for (int row = 0; row < lambda.length(); ++row)
    for (int col = 0; col < lambda[row]; ++col) r.mul(++k, (lambda[row] - col) + (conj[col] - row) - 1);
  if (r.den != 1) throw InternalInconsistency("hook length count is not an integer");
  return r.num;
}

/// Burge correspondence on all arrays with entries ⊆ {1..max_entry} and
/// r ≤ max_pairs: even shape, both round trips, and, per entry set, the
/// images are distinct and as many as the even-shape standard tableaux.
inline CheckResult check_burge(int max_entry = 12, int max_pairs = 4, unsigned jobs = 0) {
  detail::Recorder rec("Burge correspondence");
  const auto arrays = special_arrays(max_entry, max_pairs);
  std::vector<StandardTableau> images(arrays.size());
  parallel_for(arrays.size(), jobs, [&](std::size_t k) {
    const auto& a = arrays[k];
    const StandardTableau e = array_to_even_tableau(a);
    images[k] = e;
    bool ok = is_standard(e) && is_even_shape(e.shape());
    if (ok) {
      const auto back = even_tableau_to_array(e);
      ok = back == a && array_to_even_tableau(back) == e;
    }
    rec.check(ok, [&] {
      std::string s = "array top=";
      for (int v : a.top()) s += std::to_string(v) + " ";
      return s + "does not round-trip";
    });
  });
  // Surjectivity onto even-shape standard tableaux, counted per entry set
  // size: the images must be distinct and their number per entry set must
  // equal Σ_{even λ ⊢ 2r} f^λ.
  std::map<std::vector<int>, std::set<StandardTableau>> by_entries;
  for (const auto& e : images) by_entries[entries_of(e)].insert(e);
  std::map<int, long long> even_syt;
  for (int r = 0; r <= max_pairs; ++r)
    for (const auto& p : even_partitions_of(2 * r)) even_syt[r] += count_standard(p);
  std::size_t total = 0;
  for (const auto& [entries, set] : by_entries) {
    total += set.size();
    const int r = static_cast<int>(entries.size() / 2);
    rec.check(static_cast<long long>(set.size()) == even_syt[r], [&] {
      return "entry set of size " + std::to_string(entries.size()) + " is not covered";
    });
  }
  rec.check(total == arrays.size(), [] { return std::string("Burge images are not distinct"); });
  rec.note("arrays checked: " + std::to_string(arrays.size()));
  return rec.finish();
}

/// Lattice points of both polytopes against the direct enumerations for
/// stable λ, the printed LR forms against the reconstructed ones, and the
/// inequality characterizations of cancellation and dominance.
inline CheckResult check_polytopes(const SweepConfig& config) {
  detail::Recorder rec("polytope equivalence");
  SweepConfig stable = config;
  stable.lambda_filter = LambdaFilter::stable;
  const auto items = sweep_items(stable);
  parallel_for(items.size(), config.jobs, [&](std::size_t k) {
    const auto& [n, lambda] = items[k];
    for (const auto& mu : partitions_up_to(lambda.size(), n)) {
      if (!lambda.contains(mu)) continue;
      const auto label = detail::item_label(n, lambda, mu);

      std::set<Tableau> from_points, direct;
      std::set<VariableVector> point_set;
      for (const auto& v : lattice_points(domres_h_rep(lambda, mu, n))) {
        from_points.insert(variables_to_tableau(v, lambda, n));
        point_set.insert(v);
      }
      bool roundtrip = true;
      for (const auto& t : enumerate_domres(lambda, n, mu)) {
        direct.insert(t);
        const auto v = tableau_to_variables(t, n);
        roundtrip = roundtrip && variables_to_tableau(v, lambda, n) == t && point_set.count(v);
      }
      rec.check(from_points == direct && roundtrip, [&] { return label + ": domres polytope mismatch"; });

      std::set<SkewTableau> lr_points, lr_direct, printed_points;
      for (const auto& v : lattice_points(lr_h_rep(lambda, mu, n))) lr_points.insert(variables_to_skew_tableau(v, lambda, n));
      for (const auto& v : lattice_points(lr_h_rep(lambda, mu, n, LRForm::printed)))
        printed_points.insert(variables_to_skew_tableau(v, lambda, n));
      for (const auto& eta : partitions_of(lambda.size() - mu.size()))
        for (auto& l : enumerate_lr(lambda, mu, eta)) lr_direct.insert(std::move(l));
      rec.check(lr_points == lr_direct, [&] { return label + ": LR polytope mismatch"; });
      if (printed_points != lr_points) rec.note(label + ": printed LR forms give a different point set");
    }

    // Characterizations over every semistandard filling with the
    // triangular support pattern.
    const DomresLayout layout(n);
    const auto cancel = cancellation_inequalities(layout);
    const auto dominance = dominance_inequalities(layout);
    auto holds = [](const std::vector<Inequality>& qs, const VariableVector& v) {
      return std::all_of(qs.begin(), qs.end(), [&](const Inequality& q) { return q.satisfied_by(v); });
    };
    bool ok = true;
    for_each_ssyt(lambda, Alphabet::barred(n), [&](const Tableau& t) {
      if (!has_triangular_support(t)) return;
      const auto v = tableau_to_variables(t, n);
      const Word w = column_word(t);
      const bool cancels = has_cancellation(w);
      if (holds(cancel, v) != cancels) ok = false;
      if (cancels && holds(dominance, v) != is_dominant_word(w, n)) ok = false;
    });
    rec.check(ok, [&] { return detail::item_label(n, lambda) + ": inequality characterization fails"; });
  });
  return rec.finish();
}

/// Schur = bialternant for m ≤ max_vars and |λ| ≤ max_size; restricted
/// characters are invariant under signed permutations and have mass
/// dim L(λ); sp characters have mass equal to the Weyl dimension.
inline CheckResult check_characters(const SweepConfig& config, int max_vars = 4, int max_size = 6) {
  detail::Recorder rec("character sanity");
  for (int m = 1; m <= max_vars; ++m)
    for (const auto& lambda : partitions_up_to(max_size, m))
      rec.check(satisfies_bialternant_identity(lambda, m),
                [&] { return "m=" + std::to_string(m) + " λ=" + lambda.to_string() + ": bialternant identity fails"; });
  const auto items = sweep_items(config);
  parallel_for(items.size(), config.jobs, [&](std::size_t k) {
    const auto& [n, lambda] = items[k];
    const auto res = restricted_character(lambda, n);
    bool symmetric = true;
    for (const auto& [e, c] : res.terms())
      for (const auto& w : detail::signed_permutation_orbit(e)) symmetric = symmetric && res.coefficient(w) == c;
    rec.check(symmetric, [&] { return detail::item_label(n, lambda) + ": restricted character is not W-symmetric"; });
    rec.check(res.mass() == weyl_dimension_sl(lambda, 2 * n),
              [&] { return detail::item_label(n, lambda) + ": restricted mass differs from dim"; });
    if (lambda.length() <= n)
      rec.check(sp_weight_multiplicities(lambda, n).mass() == weyl_dimension_sp(lambda, n),
                [&] { return detail::item_label(n, lambda) + ": sp character mass differs from dim"; });
  });
  return rec.finish();
}

/// LR tableaux of even weight on which the all-i and limited-range readings
/// of the n-symplectic condition disagree. Informational only.
inline CheckResult report_symplectic_range(const SweepConfig& config) {
  detail::Recorder rec("symplectic range readings");
  const auto items = sweep_items(config);
  parallel_for(items.size(), config.jobs, [&](std::size_t k) {
    const auto& [n, lambda] = items[k];
    long long differing = 0;
    for (const auto& mu : partitions_up_to(lambda.size(), n)) {
      if (!lambda.contains(mu)) continue;
      for (const auto& eta : even_partitions_of(lambda.size() - mu.size()))
        for (const auto& l : enumerate_lr(lambda, mu, eta))
          if (is_n_symplectic(l, n) != is_n_symplectic_limited_range(l, n)) ++differing;
    }
    rec.pass();
    if (differing) rec.note(detail::item_label(n, lambda) + ": " + std::to_string(differing) + " tableaux differ");
  });
  return rec.finish();
}

/// Every check of the sweep in a fixed order.
inline std::vector<CheckResult> run_sweep(const SweepConfig& config) {
  return {check_triple_agreement(config), check_bijection(config),    check_q_rigidity(config),
          check_column_cancellations(config), check_burge(12, 4, config.jobs), check_polytopes(config),
          check_characters(config),       report_symplectic_range(config)};
}

}  // namespace symbranch
