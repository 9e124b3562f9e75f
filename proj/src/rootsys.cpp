#include "rootleib/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rootleib/linalg.hpp"

namespace rootleib {

SLType sl_type_of(const std::string& s) {
  if (s == "A" || s == "a") return SLType::A;
  if (s == "D" || s == "d") return SLType::D;
  if (s == "E" || s == "e") return SLType::E;
  fail("UnsupportedType", "root system type must be A, D or E, got '" + s + "'");
}

std::string sl_type_str(SLType t) {
  switch (t) {
    case SLType::A: return "A";
    case SLType::D: return "D";
    default: return "E";
  }
}

namespace {

long dot(const IVec& a, const IVec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec reflect_vec(const IVec& v, const IVec& alpha, int scale) {
  long c = dot(v, alpha) / scale;  // ⟨v,α∨⟩ for (α,α)=2
  IVec out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

// The base Π in diagram order (α1−α2 always adjacent); see build notes below.
std::vector<IVec> base_of(SLType type, int rank) {
  std::vector<IVec> base;
  if (type == SLType::A) {
    check(rank >= 2, "UnsupportedRank", "type A needs rank >= 2");
    for (int i = 0; i < rank; ++i) {
      IVec v(rank + 1, 0);
      v[i] = 1;
      v[i + 1] = -1;
      base.push_back(v);
    }
    return base;
  }
  if (type == SLType::D) {
    check(rank >= 4, "UnsupportedRank", "type D needs rank >= 4");
    for (int i = 0; i + 1 < rank; ++i) {
      IVec v(rank, 0);
      v[i] = 1;
      v[i + 1] = -1;
      base.push_back(v);
    }
    IVec v(rank, 0);
    v[rank - 2] = 1;
    v[rank - 1] = 1;
    base.push_back(v);
    return base;
  }
  check(rank >= 6 && rank <= 8, "UnsupportedRank", "type E needs rank 6, 7 or 8");
  // Doubled-coordinate base of E8 (so every entry is an integer and the
  // pairing is dot/4); subsets give E7 and E6.
  std::vector<IVec> b = {
      {1, -1, -1, -1, -1, -1, -1, 1},   // b1
      {2, 2, 0, 0, 0, 0, 0, 0},         // b2
      {-2, 2, 0, 0, 0, 0, 0, 0},        // b3
      {0, -2, 2, 0, 0, 0, 0, 0},        // b4
      {0, 0, -2, 2, 0, 0, 0, 0},        // b5
      {0, 0, 0, -2, 2, 0, 0, 0},        // b6
      {0, 0, 0, 0, -2, 2, 0, 0},        // b7
      {0, 0, 0, 0, 0, -2, 2, 0},        // b8
  };
  b.resize(rank);
  // Relabel along the diagram so consecutive labels are adjacent: walk the
  // longest arm from its far end into the branch node, then the remaining
  // arms outward, longest first (far-end coordinates break ties).
  auto adj = [&](int i, int j) { return dot(b[i], b[j]) / 4 == -1; };
  int branch = -1;
  for (int i = 0; i < rank; ++i) {
    int deg = 0;
    for (int j = 0; j < rank; ++j)
      if (j != i && adj(i, j)) ++deg;
    if (deg == 3) branch = i;
  }
  invariant(branch >= 0, "type E diagram has a degree-3 node");
  std::vector<std::vector<int>> arms;
  for (int s = 0; s < rank; ++s) {
    if (s == branch || !adj(branch, s)) continue;
    std::vector<int> arm{s};
    int prev = branch, cur = s;
    for (;;) {
      int next = -1;
      for (int j = 0; j < rank; ++j)
        if (j != prev && j != cur && adj(cur, j)) next = j;
      if (next == -1) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return b[x.back()] < b[y.back()];
  });
  std::vector<IVec> out;
  for (auto it = arms[0].rbegin(); it != arms[0].rend(); ++it) out.push_back(b[*it]);
  out.push_back(b[branch]);
  for (std::size_t a = 1; a < arms.size(); ++a)
    for (int s : arms[a]) out.push_back(b[s]);
  return out;
}

}  // namespace

RootSystem build_root_system(SLType type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.scale = (type == SLType::E) ? 4 : 1;
  std::vector<IVec> base = base_of(type, rank);
  rs.amb = static_cast<int>(base[0].size());

  for (const auto& a : base)
    for (const auto& b : base) {
      long p = dot(a, b);
      invariant(p % rs.scale == 0, "base pairing not integral");
    }
  for (const auto& a : base) invariant(dot(a, a) / rs.scale == 2, "base root norm");

  // Reflection closure of the base generates the whole system.
  std::set<IVec> seen(base.begin(), base.end());
  std::deque<IVec> queue(base.begin(), base.end());
  while (!queue.empty()) {
    IVec v = queue.front();
    queue.pop_front();
    for (const auto& a : base) {
      IVec w = reflect_vec(v, a, rs.scale);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }

  std::vector<IVec> pos;
  for (const auto& v : seen) invariant(dot(v, v) / rs.scale == 2, "generated root norm");

  // Express every generated vector in the base to get heights and names.
  long l = rank;
  Mat bmat(rs.amb, l);
  for (long j = 0; j < l; ++j)
    for (long i = 0; i < rs.amb; ++i) bmat.at(i, j) = base[j][i];
  std::vector<std::pair<IVec, IVec>> with_coords;  // (root, base coords)
  for (const auto& v : seen) {
    QVec target(rs.amb);
    for (long i = 0; i < rs.amb; ++i) target[i] = v[i];
    auto sol = solve(bmat, target);
    invariant(sol.has_value(), "generated root outside base span");
    IVec c(l);
    for (long j = 0; j < l; ++j) {
      invariant((*sol)[j].get_den() == 1, "non-integral base coordinates");
      c[j] = static_cast<long>((*sol)[j].get_num().get_si());
    }
    with_coords.emplace_back(v, c);
  }
  auto height_of = [](const IVec& c) {
    long h = 0;
    for (long x : c) h += x;
    return h;
  };
  for (auto& [v, c] : with_coords) {
    long h = height_of(c);
    invariant(h != 0, "root of height zero");
    if (h > 0) pos.push_back(v);
  }
  std::map<IVec, IVec> coords_of;
  for (auto& [v, c] : with_coords) coords_of[v] = c;
  std::sort(pos.begin(), pos.end(), [&](const IVec& x, const IVec& y) {
    long hx = height_of(coords_of[x]), hy = height_of(coords_of[y]);
    if (hx != hy) return hx < hy;
    return x < y;
  });

  rs.roots = pos;
  for (const auto& v : pos) {
    IVec v2(v);
    for (auto& x : v2) x = -x;
    rs.roots.push_back(v2);
  }
  for (long i = 0; i < rs.nroots(); ++i) {
    rs.index_[rs.roots[i]] = i;
    rs.simple_coords_of.push_back(coords_of.count(rs.roots[i])
                                      ? coords_of[rs.roots[i]]
                                      : IVec());
  }
  // Negative roots were not in `seen` iff closure missed them; fill coords.
  for (long i = 0; i < rs.nroots(); ++i) {
    if (!rs.simple_coords_of[i].empty()) continue;
    IVec c = rs.simple_coords_of[rs.neg(i)];
    for (auto& x : c) x = -x;
    rs.simple_coords_of[i] = c;
  }

  for (const auto& a : base) {
    auto it = rs.index_.find(a);
    invariant(it != rs.index_.end(), "base root missing from closure");
    rs.simple_idx.push_back(it->second);
  }

  long expected = 0;
  if (type == SLType::A) expected = static_cast<long>(rank) * (rank + 1);
  if (type == SLType::D) expected = 2L * rank * (rank - 1);
  if (type == SLType::E) expected = (rank == 6) ? 72 : (rank == 7 ? 126 : 240);
  check(rs.nroots() == expected, "RootCountMismatch",
        "expected " + std::to_string(expected) + " roots, generated " +
            std::to_string(rs.nroots()));
  check((rs.pairing(rs.simple_idx[0], rs.simple_idx[1]) == -1), "InternalInvariant",
        "α1 and α2 must be adjacent in the diagram order");
  return rs;
}

long RootSystem::id_of(const IVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

long RootSystem::pairing(long a, long b) const {
  return dot(roots[a], roots[b]) / scale;
}

long RootSystem::height(long id) const {
  long h = 0;
  for (long x : simple_coords_of[id]) h += x;
  return h;
}

long RootSystem::reflect(long id, int simple_i) const {
  return reflect_by(id, simple_idx[simple_i]);
}

long RootSystem::reflect_by(long id, long by_root) const {
  IVec w = reflect_vec(roots[id], roots[by_root], scale);
  long r = id_of(w);
  invariant(r >= 0, "reflection left the root system");
  return r;
}

long RootSystem::sum_id(long a, long b) const {
  IVec s = roots[a];
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += roots[b][i];
  return id_of(s);
}

std::string RootSystem::name(long id) const {
  const IVec& c = simple_coords_of[id];
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] > 0 && !out.empty()) out += "+";
    if (c[i] == -1)
      out += "-";
    else if (c[i] != 1)
      out += std::to_string(c[i]);
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

long RootSystem::id_by_name(const std::string& nm) const {
  for (long i = 0; i < nroots(); ++i)
    if (name(i) == nm) return i;
  return -1;
}

std::pair<int, int> RootSystem::type_a_slots(long id) const {
  check(type == SLType::A, "UnsupportedType", "slot extraction is type A only");
  int i = -1, j = -1;
  for (int k = 0; k < amb; ++k) {
    if (roots[id][k] == 1) i = k;
    if (roots[id][k] == -1) j = k;
  }
  invariant(i >= 0 && j >= 0, "type A root shape");
  return {i, j};
}

long RootSystem::type_a_root(int i, int j) const {
  check(type == SLType::A, "UnsupportedType", "slot lookup is type A only");
  IVec v(amb, 0);
  v[i] = 1;
  v[j] = -1;
  return id_of(v);
}

std::vector<int> word_mapping_root(const RootSystem& rs, long from, long to) {
  // BFS over the root graph; generators tried in index order so the first
  // discovery is the lexicographically-least shortest word.
  std::vector<long> parent(rs.nroots(), -1);
  std::vector<int> gen(rs.nroots(), -1);
  std::vector<char> vis(rs.nroots(), 0);
  std::deque<long> queue{from};
  vis[from] = 1;
  while (!queue.empty()) {
    long v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int i = 0; i < rs.rank; ++i) {
      long w = rs.reflect(v, i);
      if (!vis[w]) {
        vis[w] = 1;
        parent[w] = v;
        gen[w] = i;
        queue.push_back(w);
      }
    }
  }
  check(vis[to], "NoWord", "no Weyl word maps " + rs.name(from) + " to " + rs.name(to));
  std::vector<int> word;
  for (long v = to; v != from; v = parent[v]) word.push_back(gen[v]);
  std::reverse(word.begin(), word.end());
  // Replay to confirm the convention: apply word[0] first.
  long v = from;
  for (int i : word) v = rs.reflect(v, i);
  invariant(v == to, "word replay mismatch");
  return word;
}

long A2PairSet::index_of(long beta, long gamma) const {
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k].beta == beta && pairs[k].gamma == gamma) return static_cast<long>(k);
  return -1;
}

A2PairSet enumerate_a2_pairs(const RootSystem& rs) {
  A2PairSet out;
  std::map<std::pair<long, long>, long> idx;
  for (long b = 0; b < rs.nroots(); ++b)
    for (long g = 0; g < rs.nroots(); ++g)
      if (rs.pairing(b, g) == -1) {
        idx[{b, g}] = static_cast<long>(out.pairs.size());
        out.pairs.push_back({b, g});
      }
  out.cls.assign(out.pairs.size(), PairClass::Positive);

  auto orbit = [&](std::pair<long, long> seed) {
    std::set<std::pair<long, long>> seen{seed};
    std::deque<std::pair<long, long>> queue{seed};
    while (!queue.empty()) {
      auto [b, g] = queue.front();
      queue.pop_front();
      for (int i = 0; i < rs.rank; ++i) {
        std::pair<long, long> nxt{rs.reflect(b, i), rs.reflect(g, i)};
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
    }
    return seen;
  };

  long a1 = rs.simple_idx[0], a2 = rs.simple_idx[1];
  invariant(rs.pairing(a1, a2) == -1, "(α1,α2) is an A2-pair");
  auto pos_orbit = orbit({a1, a2});

  if (rs.type == SLType::A) {
    auto neg_orbit = orbit({a2, a1});
    for (const auto& p : pos_orbit)
      check(!neg_orbit.count(p), "ClassOverlap",
            "positive and negative orbits intersect in type A");
    check(pos_orbit.size() + neg_orbit.size() == out.pairs.size(), "ClassCover",
          "the two orbits must partition the A2-pairs in type A");
    for (std::size_t k = 0; k < out.pairs.size(); ++k) {
      bool in_pos = pos_orbit.count({out.pairs[k].beta, out.pairs[k].gamma}) > 0;
      out.cls[k] = in_pos ? PairClass::Positive : PairClass::Negative;
    }
  } else {
    check(pos_orbit.size() == out.pairs.size(), "ClassCover",
          "types D and E must have a single diagonal Weyl orbit of A2-pairs");
  }
  for (auto c : out.cls)
    (c == PairClass::Positive ? out.positive_count : out.negative_count)++;
  return out;
}

}  // namespace rootleib
