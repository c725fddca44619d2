#include "qcmc/autgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace qcmc {

namespace {

bool is_shift_cycle(const Perm& g) {
  size_t p = g.size();
  for (size_t i = 0; i < p; ++i)
    if (g.images[i] != (i + 1) % p) return false;
  return true;
}

void finish_report(AutReport& rep) {
  rep.aut_size = rep.t_group.size();
  rep.bound_ok = rep.aut_size <= rep.p * (rep.p - 1);
  rep.k_size = 2 * static_cast<uint64_t>(rep.aut_size) * rep.aut_size;
  rep.contains_shift = false;
  for (const auto& g : rep.t_group)
    if (is_shift_cycle(g)) rep.contains_shift = true;
  bool any_moved = false;
  for (const auto& g : rep.full_perms)
    if (!g.is_identity()) any_moved = true;
  rep.min_moved = any_moved ? min_degree(rep.full_perms) : 0;
  rep.two_transitive = is_two_transitive(rep.t_group);
}

}  // namespace

AutReport enumerate_t_group(const ArraySpec& s, unsigned max_p) {
  if (s.p > max_p) fail_bound("permutation sweep limited to small p");
  AutReport rep;
  rep.orientation = "array";
  rep.p = s.p;
  rep.m = s.m;
  rep.l = s.l;
  Mat h = s.parity();
  size_t p = h.rows(), n = h.cols();
  std::map<std::vector<uint16_t>, uint32_t> colmap;
  for (size_t j = 0; j < n; ++j) {
    auto [it, fresh] = colmap.try_emplace(h.col(j).v, static_cast<uint32_t>(j));
    if (!fresh) fail_param("duplicate columns prevent unique matching");
  }
  Perm r = Perm::identity(p);
  std::vector<uint16_t> v(p);
  do {
    Perm full;
    full.images.resize(n);
    bool ok = true;
    for (size_t j = 0; j < n && ok; ++j) {
      for (size_t i = 0; i < p; ++i) v[i] = h.at(r.images[i], j);
      auto it = colmap.find(v);
      if (it == colmap.end())
        ok = false;
      else
        full.images[j] = it->second;
    }
    if (!ok) continue;
    rep.t_group.push_back(r);
    rep.full_perms.push_back(std::move(full));
  } while (std::next_permutation(r.images.begin(), r.images.end()));
  rep.block_diagonal = true;
  for (const auto& g : rep.full_perms)
    for (size_t i = 0; i < p; ++i)
      if (g.images[i] >= p) rep.block_diagonal = false;
  finish_report(rep);
  return rep;
}

AutReport enumerate_t_group(const StackSpec& s, unsigned max_p) {
  if (s.p > max_p) fail_bound("permutation sweep limited to small p");
  AutReport rep;
  rep.orientation = "stack";
  rep.p = s.p;
  rep.m = s.m;
  rep.l = 1;
  Mat c = s.stack();
  size_t rows = c.rows(), p = c.cols();
  std::map<std::vector<uint16_t>, uint32_t> rowmap;
  for (size_t i = 0; i < rows; ++i) {
    auto [it, fresh] = rowmap.try_emplace(c.row(i).v, static_cast<uint32_t>(i));
    if (!fresh) fail_param("duplicate rows prevent unique matching");
  }
  Perm pi2 = Perm::identity(p);
  std::vector<uint16_t> v(p);
  do {
    Perm rho;
    rho.images.resize(rows);
    bool ok = true;
    for (size_t i = 0; i < rows && ok; ++i) {
      for (size_t j = 0; j < p; ++j) v[pi2.images[j]] = c.at(i, j);
      auto it = rowmap.find(v);
      if (it == rowmap.end())
        ok = false;
      else
        rho.images[i] = it->second;
    }
    if (!ok) continue;
    Perm full;
    full.images.resize(rows + p);
    for (size_t i = 0; i < rows; ++i) full.images[i] = rho.images[i];
    for (size_t j = 0; j < p; ++j)
      full.images[rows + j] = static_cast<uint32_t>(rows) + pi2.images[j];
    rep.t_group.push_back(pi2);
    rep.full_perms.push_back(std::move(full));
  } while (std::next_permutation(pi2.images.begin(), pi2.images.end()));
  rep.block_diagonal = true;  // assembly splits identity-block and stack columns
  finish_report(rep);
  return rep;
}

bool is_two_transitive(const std::vector<Perm>& perms) {
  if (perms.empty()) fail_param("empty permutation set");
  size_t p = perms[0].size();
  if (p < 2) fail_param("need at least 2 points");
  std::set<std::vector<uint32_t>> members;
  for (const auto& g : perms) {
    if (g.size() != p || !perm_valid(g)) fail_param("malformed permutation");
    members.insert(g.images);
  }
  for (const auto& g : perms)
    for (const auto& h : perms)
      if (!members.count(perm_compose(g, h).images)) fail_param("set is not closed under composition");
  // orbit of the ordered pair (0, 1)
  std::vector<bool> seen(p * p, false);
  std::vector<std::pair<uint32_t, uint32_t>> frontier{{0, 1}};
  seen[0 * p + 1] = true;
  size_t count = 1;
  while (!frontier.empty()) {
    auto [x, y] = frontier.back();
    frontier.pop_back();
    for (const auto& g : perms) {
      uint32_t gx = g.images[x], gy = g.images[y];
      if (!seen[gx * p + gy]) {
        seen[gx * p + gy] = true;
        ++count;
        frontier.push_back({gx, gy});
      }
    }
  }
  return count == p * (p - 1);
}

size_t min_degree(const std::vector<Perm>& perms) {
  size_t best = SIZE_MAX;
  for (const auto& g : perms) {
    size_t moved = 0;
    for (size_t i = 0; i < g.size(); ++i)
      if (g.images[i] != i) ++moved;
    if (moved > 0) best = std::min(best, moved);
  }
  if (best == SIZE_MAX) fail_param("no non-identity permutation present");
  return best;
}

QuantumPremise quantum_premise(uint64_t p, unsigned m, unsigned l, double delta) {
  if (p < 2 || m < 2) fail_param("p and m must be at least 2");
  QuantumPremise q;
  q.p = p;
  q.m = m;
  q.l = l;
  q.delta = delta;
  double dp = static_cast<double>(p), dm = static_cast<double>(m);
  q.main_rhs = 0.25 * dm * (std::log2(dm) + std::log2(dp));
  q.main_holds = dp <= q.main_rhs;
  q.chain_lhs_exp = dp * dp;
  q.chain_rhs_exp = 0.25 * dm * dp * std::log2(dm * dp);
  q.chain_holds = q.chain_lhs_exp <= q.chain_rhs_exp;
  q.log2_info_bound = 2.0 + 8.0 * std::log2(dp) - delta * dp * std::log2(std::exp(1.0));
  return q;
}

std::string audit_report_text(const AutReport& rep, const QuantumPremise& qp) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "true" : "false"; };
  os << "orientation: " << rep.orientation << "\n";
  os << "p: " << rep.p << "\n";
  os << "m: " << rep.m << "\n";
  os << "l: " << rep.l << "\n";
  os << "aut_size: " << rep.aut_size << "\n";
  os << "aut_size_bound: " << rep.p * (rep.p - 1) << "\n";
  os << "aut_size_bound_ok: " << yn(rep.bound_ok) << "\n";
  os << "min_degree: " << rep.min_moved << "\n";
  os << "min_degree_floor: " << rep.p - 1 << "\n";
  os << "two_transitive: " << yn(rep.two_transitive) << "\n";
  os << "contains_cyclic_shift: " << yn(rep.contains_shift) << "\n";
  os << "block_diagonal: " << yn(rep.block_diagonal) << "\n";
  os << "k_size: " << rep.k_size << "\n";
  os << "qfs_main_rhs: " << qp.main_rhs << "\n";
  os << "qfs_main_holds: " << yn(qp.main_holds) << "\n";
  os << "qfs_chain_lhs_exp: " << qp.chain_lhs_exp << "\n";
  os << "qfs_chain_rhs_exp: " << qp.chain_rhs_exp << "\n";
  os << "qfs_chain_holds: " << yn(qp.chain_holds) << "\n";
  os << "qfs_delta: " << qp.delta << "\n";
  os << "qfs_log2_info_bound: " << qp.log2_info_bound << "\n";
  return os.str();
}

}  // namespace qcmc
