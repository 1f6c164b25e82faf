#pragma once
// Verification sweeps shared by the command-line tool and the acceptance
// gate: exhaustive order/topology round trips, ladder-law sweeps over
// enumerated families, and randomized cut-oracle agreement. Work units are
// independent models; results land in per-model slots and merge in model
// order, so the output is deterministic at any thread count.

#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nicetop/alexandroff.hpp"
#include "nicetop/grid_oracle.hpp"
#include "nicetop/ladders.hpp"
#include "nicetop/order_core.hpp"
#include "nicetop/valuation.hpp"

namespace nicetop {

inline int thread_count_from_env(int fallback = 1) {
  const char* s = std::getenv("NICETOP_THREADS");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1 || v > 64)
    throw InvalidParameter("NICETOP_THREADS must be an integer in [1,64]");
  return static_cast<int>(v);
}

struct SweepTotals {
  long long models = 0;
  long long checked = 0;
  std::vector<ImplicationViolation> violations;
};

namespace detail {

template <class Fn>
void parallel_index(long long count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&fn, w, count, threads] {
      for (long long i = w; i < count; i += threads) fn(i);
    });
  for (std::thread& t : pool) t.join();
}

inline void merge_reports(SweepTotals& tot, std::vector<LadderReport>& slots) {
  for (LadderReport& rep : slots) {
    ++tot.models;
    tot.checked += rep.checked;
    tot.violations.insert(tot.violations.end(), rep.violations.begin(),
                          rep.violations.end());
  }
}

}  // namespace detail

// Every poset up to max_n, one per isomorphism class: order laws, the
// order->topology->order round trip, opens = upper sets, the topology's
// reconstruction from its own open list, and sobriety.
inline SweepTotals sweep_posets(int max_n, int threads = 1) {
  std::vector<FinitePoset> all;
  for (int n = 1; n <= max_n; ++n)
    for (FinitePoset& P : enumerate_posets(n)) all.push_back(std::move(P));
  std::vector<LadderReport> slots(all.size());
  detail::parallel_index(
      static_cast<long long>(all.size()), threads, [&](long long i) {
        const FinitePoset& P = all[static_cast<std::size_t>(i)];
        LadderReport rep = verify_poset_laws(P);
        AlexTopology T = topology_from_order(P);
        ++rep.checked;
        detail::note(rep, "whole model", "order-topology round trip",
                     specialization_order(T) == P);
        bool opens_are_upper = true;
        std::vector<Mask> opens = all_opens(T);
        for (Mask U : opens)
          opens_are_upper = opens_are_upper && is_upper_set(P, U);
        long long upper_count = 0;
        for (Mask U = 0; U <= full_mask(P.n); ++U)
          if (is_upper_set(P, U)) ++upper_count;
        ++rep.checked;
        detail::note(rep, "whole model", "opens are exactly the upper sets",
                     opens_are_upper &&
                         static_cast<long long>(opens.size()) == upper_count);
        ++rep.checked;
        detail::note(rep, "whole model", "topology rebuilt from its opens",
                     from_opens(P.n, opens) == T);
        ++rep.checked;
        detail::note(rep, "whole model", "space is sober",
                     is_sober(PosetSpace{P}));
        slots[static_cast<std::size_t>(i)] = std::move(rep);
      });
  SweepTotals tot;
  detail::merge_reports(tot, slots);
  return tot;
}

// Every labeled T0 topology on up to max_n points (max 4): the
// topology->order->topology round trip.
inline SweepTotals sweep_topologies(int max_n) {
  SweepTotals tot;
  for (int n = 1; n <= max_n; ++n) {
    for (const AlexTopology& T : enumerate_topologies(n, true)) {
      LadderReport rep;
      rep.model = "topology n=" + std::to_string(n);
      ++rep.checked;
      detail::note(rep, "whole model", "topology-order round trip",
                   topology_from_order(specialization_order(T)) == T);
      ++tot.models;
      tot.checked += rep.checked;
      tot.violations.insert(tot.violations.end(), rep.violations.begin(),
                            rep.violations.end());
    }
  }
  return tot;
}

// Every intersection-closed family within the caps, one per isomorphism
// class, through the full ladder-law battery.
inline SweepTotals sweep_families(int ground, int max_members,
                                  int threads = 1) {
  std::vector<NiceFamily> fams = enumerate_nice_families(ground, max_members);
  std::vector<LadderReport> slots(fams.size());
  detail::parallel_index(
      static_cast<long long>(fams.size()), threads, [&](long long i) {
        slots[static_cast<std::size_t>(i)] =
            verify_ladders(FamilySpace{fams[static_cast<std::size_t>(i)]});
      });
  SweepTotals tot;
  detail::merge_reports(tot, slots);
  return tot;
}

struct OracleAgreement {
  long long pairs = 0;
  std::vector<std::string> mismatches;
};

namespace detail {

inline gridcheck::CutDesc desc_of(const CutIdeal& I) {
  return gridcheck::CutDesc{I.zero, I.gamma, I.bound == Bound::Closed};
}

}  // namespace detail

// Random on-grid cut pairs: multiply, intersect, sum, and containment each
// recomputed from sampled value sets and compared with the closed forms.
// Products can leave the exactness margin but stay in the window, so they
// compare against the raw sampler.
inline OracleAgreement sweep_cut_oracle(int pairs, unsigned seed, int q = 64,
                                        int B = 16) {
  if (pairs < 1) throw InvalidParameter("pair count must be positive");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> num(-static_cast<long long>(B) * q / 2,
                                               static_cast<long long>(B) * q / 2);
  std::uniform_int_distribution<int> coin(0, 15);
  auto random_cut = [&]() {
    if (coin(rng) == 0) return CutIdeal::make_zero();
    return CutIdeal::make_cut(Rat{num(rng), q},
                              coin(rng) % 2 ? Bound::Closed : Bound::Open);
  };
  OracleAgreement res;
  for (int t = 0; t < pairs; ++t) {
    CutIdeal I = random_cut(), J = random_cut();
    auto di = detail::desc_of(I), dj = detail::desc_of(J);
    gridcheck::GridSet gi = gridcheck::project(di, q, B);
    gridcheck::GridSet gj = gridcheck::project(dj, q, B);
    auto complain = [&](const std::string& op) {
      res.mismatches.push_back(op + " on " + show_cut(I) + " and " +
                               show_cut(J));
    };
    if (gridcheck::minkowski_product(di, dj, q, B) !=
        gridcheck::sample_values(detail::desc_of(multiply(I, J)), q, B))
      complain("multiply");
    if (gridcheck::pointwise_meet(gi, gj) !=
        gridcheck::project(detail::desc_of(intersect(I, J)), q, B))
      complain("intersect");
    if (gridcheck::pointwise_join(gi, gj) !=
        gridcheck::project(detail::desc_of(sum(I, J)), q, B))
      complain("sum");
    if (contains(I, J) !=
        gridcheck::grid_subset(gridcheck::sample_values_half(dj, q, B),
                               gridcheck::sample_values_half(di, q, B)))
      complain("contains");
    ++res.pairs;
  }
  return res;
}

}  // namespace nicetop
