#include "tecss/credits.hpp"

#include <algorithm>
#include <sstream>

#include "tecss/errors.hpp"

namespace tecss {

std::string quarters_to_string(std::int64_t quarters) { return Rational(quarters, 4).to_string(); }

std::int64_t parse_quarters(const std::string& text) {
  Rational r = Rational::parse(text) * Rational(4);
  if (r.den != 1) throw Error(ErrorKind::ParseError, "not a quarter-integer: " + text);
  return r.num;
}

const char* to_string(LedgerKind kind) {
  switch (kind) {
    case LedgerKind::Component: return "component";
    case LedgerKind::Block: return "block";
    case LedgerKind::Bridge: return "bridge";
  }
  return "unknown";
}

std::int64_t CreditLedger::total_quarters() const {
  std::int64_t total = 0;
  for (const auto& [key, q] : quarter_credits) total += q;
  return total;
}

CreditLedger credits_for_components(const TwoEdgeCover& h, const std::vector<int>& components) {
  const auto& d = h.decomposition;
  CreditLedger ledger;
  for (int c : components) {
    const auto key = LedgerKey{LedgerKind::Component, d.components[c].front()};
    const auto edges = static_cast<std::int64_t>(d.component_edges[c].size());
    switch (h.classes[c]) {
      case ComponentClass::Cycle: ledger.quarter_credits[key] = edges; break;
      case ComponentClass::Large: ledger.quarter_credits[key] = 8; break;
      case ComponentClass::Complex: {
        ledger.quarter_credits[key] = 4;
        for (std::size_t b = 0; b < d.blocks.size(); ++b)
          if (d.block_component[b] == c) ledger.quarter_credits[{LedgerKind::Block, d.blocks[b].front()}] = 4;
        for (EdgeId id : d.component_edges[c])
          if (set_contains(d.bridges, id)) ledger.quarter_credits[{LedgerKind::Bridge, id}] = 1;
        break;
      }
      case ComponentClass::Other: break;
    }
  }
  return ledger;
}

CreditLedger init_credits(const TwoEdgeCover& h) {
  auto violations = check_canonical(h);
  if (!violations.empty())
    throw Error(ErrorKind::NotCanonical, "credits are defined for canonical covers only", violations.front().vertices);
  std::vector<int> all(h.decomposition.components.size());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = static_cast<int>(c);
  return credits_for_components(h, all);
}

Cost cost(const TwoEdgeCover& h, const CreditLedger& ledger) {
  return Cost{4 * static_cast<std::int64_t>(h.size()) + ledger.total_quarters()};
}

namespace {

std::vector<int> touched_components(const TwoEdgeCover& h, const std::vector<VertexId>& touched) {
  std::vector<int> out;
  for (VertexId v : touched) out.push_back(h.decomposition.component_of_vertex[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CreditLedger update_ledger(const CreditLedger& ledger, const TwoEdgeCover& before, const TwoEdgeCover& after,
                           const std::vector<VertexId>& touched) {
  CreditLedger out = ledger;
  for (const auto& [key, q] : credits_for_components(before, touched_components(before, touched)).quarter_credits)
    out.quarter_credits.erase(key);
  for (const auto& [key, q] : credits_for_components(after, touched_components(after, touched)).quarter_credits)
    out.quarter_credits[key] = q;
  return out;
}

LedgerBound check_ledger_bound(const TwoEdgeCover& h, const CreditLedger& ledger) {
  LedgerBound out;
  std::ostringstream detail;
  // cost <= 5/4 |H|  <=>  4|H| + credits <= 5|H| (in quarters)
  if (cost(h, ledger).quarters > 5 * static_cast<std::int64_t>(h.size())) {
    out.cost_within = false;
    detail << "cost " << cost(h, ledger).to_string() << " exceeds 5/4 * " << h.size() << "; ";
  }
  const auto& d = h.decomposition;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    if (!d.component_complex[c]) continue;
    std::int64_t bridges = 0, pendant = 0, inner = 0;
    for (EdgeId id : d.component_edges[c]) bridges += set_contains(d.bridges, id);
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
      if (d.block_component[b] == static_cast<int>(c)) (d.pendant_flags[b] ? pendant : inner) += 1;
    if (static_cast<std::int64_t>(d.component_edges[c].size()) < bridges + 6 * pendant + 4 * inner) {
      out.complex_chain = false;
      detail << "complex component at vertex " << d.components[c].front() << " is too small; ";
    }
  }
  out.detail = detail.str();
  return out;
}

}  // namespace tecss
