#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tecss/cover.hpp"
#include "tecss/rational.hpp"

namespace tecss {

// All credits and costs are counted in quarters.
std::string quarters_to_string(std::int64_t quarters);
std::int64_t parse_quarters(const std::string& text);

enum class LedgerKind { Component, Block, Bridge };

const char* to_string(LedgerKind kind);

// Component: smallest vertex. Block: smallest edge id. Bridge: its edge id.
struct LedgerKey {
  LedgerKind kind;
  std::int64_t id;
  auto operator<=>(const LedgerKey&) const = default;
};

struct CreditLedger {
  std::map<LedgerKey, std::int64_t> quarter_credits;

  std::int64_t total_quarters() const;
  bool operator==(const CreditLedger&) const = default;
};

struct Cost {
  std::int64_t quarters = 0;
  std::string to_string() const { return quarters_to_string(quarters); }
  Rational value() const { return Rational(quarters, 4); }
  auto operator<=>(const Cost&) const = default;
};

// Credits of a canonical cover. Throws NotCanonical otherwise.
CreditLedger init_credits(const TwoEdgeCover& h);
// Credits of the listed components only (no canonical check).
CreditLedger credits_for_components(const TwoEdgeCover& h, const std::vector<int>& components);

Cost cost(const TwoEdgeCover& h, const CreditLedger& ledger);

// Replaces the entries of every component of `before` that contains a touched
// vertex by the entries of the matching components of `after`.
CreditLedger update_ledger(const CreditLedger& ledger, const TwoEdgeCover& before, const TwoEdgeCover& after,
                           const std::vector<VertexId>& touched);

struct LedgerBound {
  bool cost_within = true;      // cost <= 5/4 |H|
  bool complex_chain = true;    // |C| >= bridges + 6 pendant + 4 non-pendant blocks
  std::string detail;
};

LedgerBound check_ledger_bound(const TwoEdgeCover& h, const CreditLedger& ledger);

}  // namespace tecss
