#include "tecss/cuts.hpp"

#include <algorithm>
#include <numeric>

#include "tecss/errors.hpp"

namespace tecss {

const char* to_string(CutKind kind) {
  switch (kind) {
    case CutKind::OneCut: return "OneCut";
    case CutKind::TwoIsolating: return "TwoIsolating";
    case CutKind::TwoNonIsolating: return "TwoNonIsolating";
    case CutKind::ThreeSmall: return "ThreeSmall";
    case CutKind::ThreeLarge: return "ThreeLarge";
  }
  return "Unknown";
}

std::vector<std::vector<VertexId>> residual_components(const MultiGraph& g, const std::vector<VertexId>& removed) {
  const int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (VertexId v : removed) gone[v] = 1;
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    seen[s] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& inc : g.incident(queue[head]))
        if (!gone[inc.to] && !seen[inc.to]) {
          seen[inc.to] = 1;
          queue.push_back(inc.to);
        }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

namespace {

// Smallest grouping of residual components with at least 7 vertices whose
// complement is at least as large. Returns the chosen component indices.
std::optional<std::vector<int>> seven_seven_split(const std::vector<std::vector<VertexId>>& parts) {
  int total = 0;
  for (const auto& p : parts) total += static_cast<int>(p.size());
  if (total < 14) return std::nullopt;
  const int r = static_cast<int>(parts.size());
  // reach[i][s]: sum s reachable using components [0, i).
  std::vector<std::vector<char>> reach(r + 1, std::vector<char>(total + 1, 0));
  reach[0][0] = 1;
  for (int i = 0; i < r; ++i) {
    int sz = static_cast<int>(parts[i].size());
    for (int s = 0; s <= total; ++s) {
      if (!reach[i][s]) continue;
      reach[i + 1][s] = 1;
      if (s + sz <= total) reach[i + 1][s + sz] = 1;
    }
  }
  for (int s = 7; 2 * s <= total; ++s) {
    if (!reach[r][s]) continue;
    std::vector<int> chosen;
    int cur = s;
    for (int i = r; i > 0; --i) {
      int sz = static_cast<int>(parts[i - 1].size());
      if (reach[i - 1][cur]) continue;  // prefer leaving later components out
      chosen.push_back(i - 1);
      cur -= sz;
    }
    std::reverse(chosen.begin(), chosen.end());
    return chosen;
  }
  return std::nullopt;
}

std::vector<VertexId> flatten(const std::vector<std::vector<VertexId>>& parts, const std::vector<int>& pick) {
  std::vector<VertexId> out;
  for (int i : pick) out.insert(out.end(), parts[i].begin(), parts[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  std::vector<VertexId> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return;
  while (true) {
    if (visit(pick)) return;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::optional<CutCertificate> classify_cut(const MultiGraph& g, std::vector<VertexId> cut) {
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  const int k = static_cast<int>(cut.size());
  if (k < 1 || k > 3) throw Error(ErrorKind::InvalidArgument, "cuts have 1 to 3 vertices");
  auto parts = residual_components(g, cut);
  if (parts.size() < 2) return std::nullopt;

  CutCertificate cert;
  cert.cut = cut;
  cert.residual = parts;
  std::vector<int> all(parts.size());
  std::iota(all.begin(), all.end(), 0);
  auto assign_sides = [&](const std::vector<int>& a_parts) {
    std::vector<char> in_a(parts.size(), 0);
    for (int i : a_parts) in_a[i] = 1;
    std::vector<int> b_parts;
    for (int i : all)
      if (!in_a[i]) b_parts.push_back(i);
    cert.side_a = flatten(parts, a_parts);
    cert.side_b = flatten(parts, b_parts);
  };

  if (k == 1) {
    cert.kind = CutKind::OneCut;
    assign_sides({0});
  } else if (k == 2) {
    int single = -1;
    if (parts.size() == 2) {
      if (parts[0].size() == 1) single = 0;
      else if (parts[1].size() == 1) single = 1;
    }
    if (single >= 0) {
      cert.kind = CutKind::TwoIsolating;
      assign_sides({single});
    } else {
      cert.kind = CutKind::TwoNonIsolating;
      assign_sides({0});
    }
  } else {
    auto split = seven_seven_split(parts);
    cert.splittable = split.has_value();
    bool small = parts.size() == 2 && (parts[0].size() <= 6 || parts[1].size() <= 6);
    cert.kind = small ? CutKind::ThreeSmall : CutKind::ThreeLarge;
    if (split) {
      assign_sides(*split);
    } else if (parts.size() == 2) {
      assign_sides({parts[1].size() < parts[0].size() ? 1 : 0});
    } else {
      assign_sides({0});
    }
  }
  return cert;
}

std::vector<CutCertificate> enumerate_vertex_cuts(const MultiGraph& g, int k) {
  std::vector<CutCertificate> out;
  for_each_subset(g.vertex_count(), k, [&](const std::vector<VertexId>& pick) {
    if (auto c = classify_cut(g, pick)) out.push_back(std::move(*c));
    return false;
  });
  return out;
}

std::optional<CutCertificate> find_vertex_cut_of_kind(const MultiGraph& g, CutKind kind, bool require_split) {
  int k = 1;
  if (kind == CutKind::TwoIsolating || kind == CutKind::TwoNonIsolating) k = 2;
  if (kind == CutKind::ThreeSmall || kind == CutKind::ThreeLarge) k = 3;
  std::optional<CutCertificate> found;
  for_each_subset(g.vertex_count(), k, [&](const std::vector<VertexId>& pick) {
    auto c = classify_cut(g, pick);
    if (c && c->kind == kind && (!require_split || c->splittable)) {
      found = std::move(c);
      return true;
    }
    return false;
  });
  return found;
}

std::optional<CutCertificate> find_vertex_cut(const MultiGraph& g, int k) {
  if (k < 1 || k > 3) throw Error(ErrorKind::InvalidArgument, "k must be 1, 2 or 3");
  if (k == 1) return find_vertex_cut_of_kind(g, CutKind::OneCut);
  if (k == 2) {
    if (auto c = find_vertex_cut_of_kind(g, CutKind::TwoNonIsolating)) return c;
    return find_vertex_cut_of_kind(g, CutKind::TwoIsolating);
  }
  if (auto c = find_vertex_cut_of_kind(g, CutKind::ThreeLarge)) return c;
  return find_vertex_cut_of_kind(g, CutKind::ThreeSmall);
}

}  // namespace tecss
