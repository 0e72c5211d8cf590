#include "zerocyc/complexes.hpp"

#include "zerocyc/snf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace zerocyc::mv {

using config::Layout;

ComplexPair build_complexes(const config::GluingConfiguration& cfg) {
  Layout lay = config::analyze(cfg);
  ComplexPair pair;

  const std::size_t n1 = lay.down_names.size();
  const std::size_t n2 = lay.entries.size();
  const std::size_t n3 = lay.triples.size();
  const std::size_t m1 = lay.up_names.size();
  const std::size_t m2 = lay.points.size();

  pair.counts = {static_cast<long long>(n1), static_cast<long long>(n2),
                 static_cast<long long>(n3), static_cast<long long>(m1),
                 static_cast<long long>(m2)};
  pair.node_pairs = lay.node_pair_count;
  pair.down_components = lay.down_names;
  pair.up_components = lay.up_names;
  for (const auto& p : lay.points) pair.up_points.push_back(p.id);
  for (std::size_t e = 0; e < n2; ++e)
    pair.entries.push_back(lay.entry_label(e, cfg));
  for (std::size_t t = 0; t < n3; ++t)
    pair.triples.push_back(lay.triple_label(t, cfg));

  // phi_downstream: restriction difference, +1 on the lower component index.
  pair.phi_downstream = IntMatrix(n2, n1);
  for (std::size_t e = 0; e < n2; ++e) {
    pair.phi_downstream(e, lay.entries[e].comp_lo) = 1;
    pair.phi_downstream(e, lay.entries[e].comp_hi) = -1;
  }

  // dQ: Cech alternation +1/-1/+1 on the (jk), (ik), (ij) entries of the
  // triple's point.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t>
      entry_at;
  for (std::size_t e = 0; e < n2; ++e)
    entry_at[{lay.entries[e].block, lay.entries[e].class_lo,
              lay.entries[e].class_hi}] = e;
  pair.dQ = IntMatrix(n3, n2);
  for (std::size_t t = 0; t < n3; ++t) {
    const Layout::Triple& tr = lay.triples[t];
    auto entry = [&](std::size_t x, std::size_t y) {
      return entry_at.at({tr.block, std::min(tr.classes[x], tr.classes[y]),
                          std::max(tr.classes[x], tr.classes[y])});
    };
    pair.dQ(t, entry(1, 2)) = 1;   // (j,k)
    pair.dQ(t, entry(0, 2)) = -1;  // (i,k)
    pair.dQ(t, entry(0, 1)) = 1;   // (i,j)
  }

  // phi_upstream: signs follow the downstream order of the branch images;
  // node pairs break the tie by upstream component id. The pulled-back
  // value on a node pair is 0 either way.
  pair.phi_upstream = IntMatrix(m2, m1);
  for (std::size_t q = 0; q < m2; ++q) {
    const Layout::PointInfo& p = lay.points[q];
    std::size_t img_a = lay.up_image[p.comp_a];
    std::size_t img_b = lay.up_image[p.comp_b];
    std::size_t plus = p.comp_a, minus = p.comp_b;
    if (img_b < img_a || (img_a == img_b && p.comp_b < p.comp_a))
      std::swap(plus, minus);
    pair.phi_upstream(q, plus) = 1;
    pair.phi_upstream(q, minus) = -1;
  }

  pair.nu1 = IntMatrix(m1, n1);
  for (std::size_t r = 0; r < m1; ++r) pair.nu1(r, lay.up_image[r]) = 1;

  pair.eps3 = IntMatrix(m2, n2);
  for (std::size_t q = 0; q < m2; ++q)
    if (lay.point_entry[q] != Layout::npos)
      pair.eps3(q, lay.point_entry[q]) = 1;

  return pair;
}

std::size_t h0_Q_rank(const ComplexPair& pair) {
  const std::size_t n3 = pair.dQ.rows();
  exactalg::SmithDecomposition s = exactalg::smith_normal_form(pair.dQ);
  bool surjective = s.invariant_factors.size() == n3;
  for (const Int& f : s.invariant_factors)
    if (f != 1) surjective = false;
  if (!surjective)
    throw std::logic_error(
        "dQ is not surjective over the integers; the per-point block "
        "structure should make it so");
  return pair.dQ.cols() - n3;
}

std::size_t h0_kernel_rank(const ComplexPair& pair, Side side) {
  const IntMatrix& phi =
      side == Side::Upstream ? pair.phi_upstream : pair.phi_downstream;
  return phi.cols() - exactalg::rank(phi);
}

bool check_commutativity(const ComplexPair& pair) {
  if (!(pair.eps3 * pair.phi_downstream == pair.phi_upstream * pair.nu1))
    return false;
  return (pair.dQ * pair.phi_downstream).is_zero();
}

std::string dump_matrices(const ComplexPair& pair) {
  std::string out;
  out += dump_matrix("phi_downstream", pair.phi_downstream);
  out += dump_matrix("dQ", pair.dQ);
  out += dump_matrix("phi_upstream", pair.phi_upstream);
  out += dump_matrix("nu1", pair.nu1);
  out += dump_matrix("eps3", pair.eps3);
  return out;
}

}  // namespace zerocyc::mv
