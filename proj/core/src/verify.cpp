#include "ringprob/verify.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "ringprob/errors.hpp"
#include "ringprob/isoclinism.hpp"

namespace ringprob {
namespace {

struct Accumulator {
  std::map<std::string, CheckTally> tallies;
  std::vector<VerifyFailure> failures;
  std::size_t failed = 0;
  std::size_t records = 0;
  std::size_t limit = 0;

  void add(const std::string& ring, const std::string& context, CheckRecord rec) {
    ++records;
    auto& t = tallies[rec.name];
    if (!rec.applicable) {
      ++t.skipped;
      return;
    }
    ++t.applicable;
    if (rec.passed()) {
      ++t.passed;
      return;
    }
    ++t.failed;
    ++failed;
    if (failures.size() < limit) failures.push_back({ring, context, std::move(rec)});
  }

  void add_all(const std::string& ring, const std::string& context, std::vector<CheckRecord> recs) {
    for (auto& r : recs) add(ring, context, std::move(r));
  }

  // Records an operational exception raised by a check as a failure of `name`.
  void add_error(const std::string& ring, const std::string& context, const std::string& name,
                 const std::exception& e) {
    auto rec = CheckRecord::make(name, Rational(0), Relation::Eq, Rational(1));
    rec.witness = e.what();
    add(ring, context, std::move(rec));
  }
};

struct RingWork {
  const CatalogEntry* entry;
  std::vector<Subring> subrings;
  std::vector<std::size_t> ideals;  // indices into subrings
};

struct Item {
  std::size_t ring;
  std::size_t s;  // subring index; == subrings.size() for the ring-level item
};

std::string pair_context(const Subring& s, const Subring& k) {
  return "S=" + members_text(s.members()) + " K=" + members_text(k.members());
}

void run_pair_item(const RingWork& w, std::size_t si, BoundsEngine& engine, const VerifyOptions& opt,
                   Accumulator& acc) {
  const auto& name = w.entry->name;
  const auto& R = *w.entry->ring;
  const auto& subs = w.subrings;
  const Subring& s = subs[si];
  std::vector<Index> targets;
  if (opt.r_mode == RMode::Zero)
    targets.push_back(0);
  else
    for (Index r = 0; r < R.order(); ++r) targets.push_back(r);

  for (const Subring& k : subs) {
    const std::string ctx = pair_context(s, k);
    acc.add_all(name, ctx, engine.check_structure(s, k));
    acc.add_all(name, ctx, engine.characterize_quotients(s, k).checks);
    {
      const auto& dist = engine.pair(s, k).distribution;
      Rational total = 0;
      for (const auto& [r, v] : dist.entries) total += v.value();
      acc.add(name, ctx, CheckRecord::make("pr_r.distribution_sums_to_one", total, Relation::Eq, Rational(1)));
    }
    for (Index r : targets)
      acc.add_all(name, ctx + " r=" + std::to_string(r), engine.check_all(s, k, R.element(r)).checks);
    for (std::size_t ii : w.ideals) {
      const Subring& ideal = subs[ii];
      if (ideal.is_subset_of(s) && ideal.is_subset_of(k))
        acc.add(name, ctx + " I=" + members_text(ideal.members()),
                engine.check_factor_inequality(s, k, ideal));
    }
  }

  // Nested quadruples with S1 = s.
  for (const Subring& s2 : subs) {
    if (!s.is_subset_of(s2)) continue;
    for (const Subring& k1 : subs)
      for (const Subring& k2 : subs) {
        if (!k1.is_subset_of(k2)) continue;
        const std::string ctx = "S1=" + members_text(s.members()) + " S2=" + members_text(s2.members()) +
                                " K1=" + members_text(k1.members()) + " K2=" + members_text(k2.members());
        for (Index r : targets)
          acc.add_all(name, ctx + " r=" + std::to_string(r), engine.check_nested(s, s2, k1, k2, R.element(r)));
      }
  }

  for (std::size_t ni : w.ideals) {
    const Subring& n = subs[ni];
    if (!n.is_subset_of(s)) continue;
    const std::string ctx = "H=" + members_text(s.members()) + " N=" + members_text(n.members());
    for (Index x = 0; x < R.order(); ++x)
      acc.add_all(name, ctx + " x=" + std::to_string(x), engine.check_centralizer_quotient(s, n, R.element(x)));
  }
}

void run_isoclinism_item(const RingWork& w, Accumulator& acc) {
  const auto& name = w.entry->name;
  const RingPtr ring = w.entry->ring;
  const RingPtr z2 = share(builtin("zn", std::vector<std::uint64_t>{2}));
  const RingPtr product = share(direct_product(*ring, *z2));
  const Subring z2_whole = Subring::whole(z2);

  for (const Subring& s : w.subrings)
    for (const Subring& k : w.subrings) {
      const Subring s2 = product_subring(product, s, z2_whole);
      const Subring k2 = product_subring(product, k, z2_whole);
      const std::string ctx = pair_context(s, k) + " vs its product with Z2";
      try {
        if (s.is_subset_of(k)) {
          const auto witness = find_z_isoclinism(s, k, s2, k2);
          acc.add(name, ctx,
                  CheckRecord::make("isoclinism.witness_found", Rational(witness ? 1 : 0), Relation::Eq,
                                    Rational(1)));
          if (witness) {
            const bool ok = verify_witness(*witness) && verify_witness(inverse(*witness));
            acc.add(name, ctx,
                    CheckRecord::make("isoclinism.witness_verified", Rational(ok ? 1 : 0), Relation::Eq,
                                      Rational(1)));
            if (ok) acc.add_all(name, ctx, check_invariance(*witness));
          }
        }
        const auto maps = find_pairwise_maps(s, k, s2, k2);
        acc.add(name, ctx,
                CheckRecord::make("isoclinism.pairwise_maps_found", Rational(maps ? 1 : 0), Relation::Eq,
                                  Rational(1)));
        if (maps) acc.add_all(name, ctx, check_pairwise_isoclinism(*maps));
      } catch (const Error& e) {
        acc.add_error(name, ctx, "isoclinism.error", e);
      }
    }
}

}  // namespace

const CheckTally* VerifyReport::tally(const std::string& name) const {
  const auto it = tallies.find(name);
  return it == tallies.end() ? nullptr : &it->second;
}

Catalog default_catalog() {
  Catalog c;
  for (int n = 2; n <= 8; ++n) c.add_builtin("zn:" + std::to_string(n));
  c.add_builtin("nc4a");
  c.add_builtin("ut2:2");
  c.add_builtin("m2:2");
  c.add_builtin("nc4a*zn:2");
  return c;
}

Catalog acceptance_catalog() {
  Catalog c;
  for (std::size_t n = 1; n <= kDefaultGenerationCap; ++n) {
    std::size_t i = 0;
    for (auto& ring : generate_rings(n))
      c.add({"gen" + std::to_string(n) + "_" + std::to_string(i++), share(std::move(ring)),
             Provenance::Generated, ""});
  }
  c.add_builtin("nc4a");
  c.add_builtin("ut2:2");
  c.add_builtin("m2:2");
  c.add_builtin("nc4a*zn:2");
  return c;
}

VerifyReport verify_all(const Catalog& catalog, const VerifyOptions& options) {
  std::vector<RingWork> work;
  for (const auto& e : catalog.entries()) {
    if (e.ring->order() > options.max_order) continue;
    RingWork w{&e, enumerate_subrings(e.ring, options.subring_cap), {}};
    for (std::size_t i = 0; i < w.subrings.size(); ++i)
      if (is_ideal(w.subrings[i])) w.ideals.push_back(i);
    work.push_back(std::move(w));
  }
  std::vector<Item> items;
  for (std::size_t ri = 0; ri < work.size(); ++ri)
    for (std::size_t si = 0; si <= work[ri].subrings.size(); ++si) items.push_back({ri, si});

  std::vector<Accumulator> results(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    std::unordered_map<std::size_t, std::unique_ptr<BoundsEngine>> engines;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size() || aborted) return;
      const auto [ri, si] = items[i];
      const RingWork& w = work[ri];
      auto& acc = results[i];
      acc.limit = options.failure_detail_limit;
      try {
        if (si < w.subrings.size()) {
          auto& engine = engines[ri];
          if (!engine) engine = std::make_unique<BoundsEngine>(w.entry->ring);
          run_pair_item(w, si, *engine, options, acc);
        } else if (!w.entry->ring->is_commutative() &&
                   w.entry->ring->order() <= options.isoclinism_max_order) {
          run_isoclinism_item(w, acc);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        aborted = true;
        return;
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);

  VerifyReport report;
  std::size_t item = 0;
  for (const auto& w : work) {
    RingSummary summary{w.entry->name, w.entry->ring->order(), w.subrings.size(), 0};
    for (std::size_t si = 0; si <= w.subrings.size(); ++si, ++item) {
      auto& acc = results[item];
      summary.records += acc.records;
      report.failed_total += acc.failed;
      for (const auto& [name, t] : acc.tallies) {
        auto& dst = report.tallies[name];
        dst.applicable += t.applicable;
        dst.passed += t.passed;
        dst.failed += t.failed;
        dst.skipped += t.skipped;
      }
      for (auto& f : acc.failures)
        if (report.failures.size() < options.failure_detail_limit) report.failures.push_back(std::move(f));
      acc = {};
    }
    report.rings.push_back(std::move(summary));
  }
  return report;
}

}  // namespace ringprob
