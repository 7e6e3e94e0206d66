#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gclab/coloring.hpp"
#include "gclab/families.hpp"

namespace gclab {

enum class Quantity {
  kChi,            // chi(G)
  kChiLine,        // chi(L(G)) = chromatic index of G
  kSum,            // chi(G) + chi(L(G))
  kProduct,        // chi(G) * chi(L(G))
  kSumBounds,      // lo <= sum <= hi
  kProductBounds,  // lo <= product <= hi
};

std::string_view quantity_name(Quantity q);

struct Interval {
  long long lo = 0;
  long long hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// A single value, or an inclusive range for the bound claims.
using ClaimedValue = std::variant<long long, Interval>;

using ClaimFormula = std::function<ClaimedValue(std::span<const long long>)>;

// One closed-form assertion about a graph family.
struct Claim {
  std::string id;
  std::string family;  // generator family name, or "bipartite"
  Quantity quantity;
  std::vector<std::string> param_names;
  std::vector<long long> param_min;  // domain as printed with the claim
  std::string formula;               // human-readable closed form
  std::string citation;              // where the claim is made
  ClaimFormula evaluate;
};

// Fixed registry, in report order.
const std::vector<Claim>& registry();

const Claim* find_claim(std::string_view id);

// Absent when params fall outside the claim's domain (CLAIM_UNDEFINED).
std::optional<ClaimedValue> claimed_value(const Claim& c, std::span<const long long> params);

enum class Verdict { kMatch, kMismatch, kClaimUndefined, kBudgetExceeded };

std::string_view verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(std::string_view name);

struct AuditRow {
  std::string claim_id;
  std::vector<std::pair<std::string, long long>> params;
  std::optional<long long> exact;  // absent on budget errors
  std::optional<ClaimedValue> claimed;
  Verdict verdict = Verdict::kClaimUndefined;
  std::string citation;
  std::string witness;

  std::string params_text() const;  // "n=5", "m=2,n=3"
  std::string exact_text() const;   // "-" when absent
  std::string claimed_text() const; // "7", "[4,5]", "-"
};

// Exact chromatic number and chromatic index for one graph.
struct ExactValues {
  long long chi = 0;
  long long chi_line = 0;
};

long long quantity_value(Quantity q, const ExactValues& v);

// MATCH iff the exact value equals the claimed value (or lies in the claimed
// interval); CLAIM_UNDEFINED when claimed is absent.
Verdict judge(const std::optional<ClaimedValue>& claimed, long long exact);

struct AuditOptions {
  SolverOptions solver;
  int workers = 1;
};

// Smallest parameter at which every family graph has an edge.
int audit_min_param(Family family);

// Every parameter ranges over [lo, hi] (both parameters for the two-parameter
// families). Rows are ordered by parameter point, then registry order.
// Families without registered claims yield no rows. Throws DomainError when
// lo < audit_min_param(family).
std::vector<AuditRow> audit_family(Family family, int lo, int hi, const AuditOptions& opts = {});

// Every connected bipartite labeled graph with at least one edge and order
// in [2, max_order], checked against the two bipartite bound claims with
// (m, n) the sizes of its bipartition. max_order must be <= 7.
std::vector<AuditRow> audit_bipartite_bounds(int max_order, const AuditOptions& opts = {});

enum class ReportFormat { kMarkdown, kCsv, kJson };

// Columns: claim, params, exact, claimed, verdict, citation, witness.
std::string render_report(std::span<const AuditRow> rows, ReportFormat format);

// Known-errata fingerprint, one entry per line:
//   <claim-id> <params|*> <VERDICT>
// '#' starts a comment. '*' matches every parameter point.
struct Expectation {
  std::string claim_id;
  std::string params;  // "*" or params_text()
  Verdict verdict;
};

std::vector<Expectation> parse_expectations(std::istream& is);

// MISMATCH rows not covered by a MISMATCH expectation.
std::vector<AuditRow> unexplained_mismatches(std::span<const AuditRow> rows,
                                             std::span<const Expectation> expected);

}  // namespace gclab
