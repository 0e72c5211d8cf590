#pragma once

// Seeded generator of valid gluing configurations for the property suites.
// Produces a mix of identity gluings and multi-sheet gluings with merged
// point blocks and occasional node pairs; every output passes validate().

#include "zerocyc/config.hpp"

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using zerocyc::config::BranchRef;
using zerocyc::config::GluingConfiguration;
using zerocyc::config::Slot;

inline std::string two_digits(int i) {
  return (i < 10 ? "0" : "") + std::to_string(i);
}

inline GluingConfiguration random_configuration(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  GluingConfiguration cfg;
  cfg.name = "random";
  const int m1 = pick(2, 7);
  auto up = [&](int i) { return "U" + two_digits(i); };
  auto down = [&](int i) { return "D" + two_digits(i); };
  for (int i = 0; i < m1; ++i) cfg.upstream_components.push_back({up(i), ""});

  const bool identity = pick(0, 1) == 0;
  const int n1 = identity ? m1 : pick(1, m1);
  for (int i = 0; i < m1; ++i)
    cfg.component_map[up(i)] = identity ? up(i) : down(pick(0, n1 - 1));

  const int m2 = pick(1, 9);
  for (int q = 0; q < m2; ++q) {
    int a = pick(0, m1 - 1);
    int b = pick(0, m1 - 2);
    if (b >= a) ++b;
    cfg.upstream_points.push_back({"p" + two_digits(q), "", up(a), up(b)});
  }

  auto image = [&](int point, Slot slot) {
    const auto& p = cfg.upstream_points[point];
    return cfg.component_map.at(slot == Slot::A ? p.branch_a : p.branch_b);
  };
  auto branch = [&](int point, Slot slot) {
    return BranchRef{cfg.upstream_points[point].id, slot};
  };

  std::vector<bool> used(m2, false);
  for (int p = 0; p < m2; ++p) {
    if (used[p]) continue;
    used[p] = true;
    int partner = -1;
    std::vector<std::pair<Slot, Slot>> pairings;  // (branch of p, branch of q)
    if (pick(0, 99) < 45) {
      for (int q = p + 1; q < m2 && partner < 0; ++q) {
        if (used[q]) continue;
        for (Slot sp : {Slot::A, Slot::B})
          for (Slot sq : {Slot::A, Slot::B})
            if (image(p, sp) == image(q, sq)) pairings.push_back({sp, sq});
        if (!pairings.empty()) partner = q;
      }
    }
    if (partner < 0) {
      cfg.point_blocks.push_back(
          {"B" + two_digits(p), {cfg.upstream_points[p].id}});
      cfg.branch_classes.push_back({branch(p, Slot::A)});
      cfg.branch_classes.push_back({branch(p, Slot::B)});
      continue;
    }
    used[partner] = true;
    cfg.point_blocks.push_back(
        {"B" + two_digits(p),
         {cfg.upstream_points[p].id, cfg.upstream_points[partner].id}});
    auto [sp, sq] = pairings[pick(0, static_cast<int>(pairings.size()) - 1)];
    Slot op = sp == Slot::A ? Slot::B : Slot::A;
    Slot oq = sq == Slot::A ? Slot::B : Slot::A;
    cfg.branch_classes.push_back({branch(p, sp), branch(partner, sq)});
    if (image(p, op) == image(partner, oq) && pick(0, 1) == 0) {
      // two branch classes: both remaining branches glue as well
      cfg.branch_classes.push_back({branch(p, op), branch(partner, oq)});
    } else {
      cfg.branch_classes.push_back({branch(p, op)});
      cfg.branch_classes.push_back({branch(partner, oq)});
    }
  }
  return cfg;
}

}  // namespace testsupport
