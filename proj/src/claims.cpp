#include "gclab/claims.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "gclab/errors.hpp"
#include "json.hpp"

namespace gclab {

namespace {

using P = std::span<const long long>;

ClaimFormula parity(std::function<long long(long long)> even, std::function<long long(long long)> odd) {
  return [even = std::move(even), odd = std::move(odd)](P p) -> ClaimedValue {
    return p[0] % 2 == 0 ? even(p[0]) : odd(p[0]);
  };
}

ClaimFormula of_n(std::function<long long(long long)> f) {
  return [f = std::move(f)](P p) -> ClaimedValue { return f(p[0]); };
}

ClaimFormula of_mn(std::function<long long(long long, long long)> f) {
  return [f = std::move(f)](P p) -> ClaimedValue { return f(p[0], p[1]); };
}

Claim one(std::string id, std::string family, Quantity q, long long n_min, std::string formula,
          std::string citation, ClaimFormula f) {
  return {std::move(id), std::move(family), q, {"n"}, {n_min}, std::move(formula),
          std::move(citation), std::move(f)};
}

Claim two(std::string id, std::string family, Quantity q, long long m_min, long long n_min,
          std::string formula, std::string citation, ClaimFormula f) {
  return {std::move(id), std::move(family), q, {"m", "n"}, {m_min, n_min}, std::move(formula),
          std::move(citation), std::move(f)};
}

std::vector<Claim> build_registry() {
  using Q = Quantity;
  std::vector<Claim> r;

  // Complete graphs.
  r.push_back(one("complete.chi", "complete", Q::kChi, 2, "n",
                  "complete graph proposition, proof: chi(K_n) = n", of_n([](auto n) { return n; })));
  r.push_back(one("complete.chi_line", "complete", Q::kChiLine, 2, "n-1 if n even; n if n odd",
                  "complete graph edge-chromatic theorem: Delta if n even, Delta+1 if n odd",
                  parity([](auto n) { return n - 1; }, [](auto n) { return n; })));
  r.push_back(one("complete.sum", "complete", Q::kSum, 2, "2n-1 if n even; 2n if n odd",
                  "complete graph proposition: chi(K_n) + chi(L(K_n))",
                  parity([](auto n) { return 2 * n - 1; }, [](auto n) { return 2 * n; })));
  r.push_back(one("complete.product", "complete", Q::kProduct, 2, "n(n-1) if n even; n^2 if n odd",
                  "complete graph proposition: chi(K_n) . chi(L(K_n))",
                  parity([](auto n) { return n * (n - 1); }, [](auto n) { return n * n; })));

  // Complete bipartite graphs; the domain is printed as m,n >= 0.
  r.push_back(two("complete_bipartite.chi", "complete_bipartite", Q::kChi, 0, 0, "2",
                  "complete bipartite proposition, proof: chi(K_{m,n}) = 2",
                  of_mn([](auto, auto) { return 2LL; })));
  r.push_back(two("complete_bipartite.chi_line", "complete_bipartite", Q::kChiLine, 0, 0,
                  "max(m,n)", "complete bipartite proposition, proof: chi'(K_{m,n}) = max(m,n)",
                  of_mn([](auto m, auto n) { return std::max(m, n); })));
  r.push_back(two("complete_bipartite.sum", "complete_bipartite", Q::kSum, 0, 0, "2+max(m,n)",
                  "complete bipartite proposition: chi(K_{m,n}) + chi(L(K_{m,n}))",
                  of_mn([](auto m, auto n) { return 2 + std::max(m, n); })));
  r.push_back(two("complete_bipartite.product", "complete_bipartite", Q::kProduct, 0, 0,
                  "2 max(m,n)", "complete bipartite proposition: chi(K_{m,n}) . chi(L(K_{m,n}))",
                  of_mn([](auto m, auto n) { return 2 * std::max(m, n); })));

  // Stars.
  r.push_back(one("star.chi", "star", Q::kChi, 1, "2", "star corollary, proof: chi(K_{1,n}) = 2",
                  of_n([](auto) { return 2LL; })));
  r.push_back(one("star.chi_line", "star", Q::kChiLine, 1, "n",
                  "star corollary, proof: chi(L(K_{1,n})) = n", of_n([](auto n) { return n; })));
  r.push_back(one("star.sum", "star", Q::kSum, 1, "n+2",
                  "star corollary: chi(K_{1,n}) + chi(L(K_{1,n}))", of_n([](auto n) { return n + 2; })));
  r.push_back(one("star.product", "star", Q::kProduct, 1, "2n",
                  "star corollary: chi(K_{1,n}) . chi(L(K_{1,n}))", of_n([](auto n) { return 2 * n; })));

  // Bistars.
  r.push_back(two("bistar.chi_line", "bistar", Q::kChiLine, 1, 1, "m if m>n; n otherwise",
                  "bistar proposition, proof: line graph as one-point union of K_m and K_n",
                  of_mn([](auto m, auto n) { return m > n ? m : n; })));
  r.push_back(two("bistar.sum", "bistar", Q::kSum, 1, 1, "2+max(m,n)",
                  "bistar proposition: chi(B_{m,n}) + chi(L(B_{m,n}))",
                  of_mn([](auto m, auto n) { return 2 + std::max(m, n); })));
  r.push_back(two("bistar.product", "bistar", Q::kProduct, 1, 1, "2 max(m,n)",
                  "bistar proposition: chi(B_{m,n}) . chi(L(B_{m,n}))",
                  of_mn([](auto m, auto n) { return 2 * std::max(m, n); })));

  // Connected bipartite graphs with sides of sizes m and n.
  r.push_back(two("bipartite.sum_bounds", "bipartite", Q::kSumBounds, 1, 1, "4 <= sum <= 2+max(m,n)",
                  "bipartite proposition: sum bounds",
                  [](P p) -> ClaimedValue { return Interval{4, 2 + std::max(p[0], p[1])}; }));
  r.push_back(two("bipartite.product_bounds", "bipartite", Q::kProductBounds, 1, 1,
                  "4 <= product <= 2 max(m,n)", "bipartite proposition: product bounds",
                  [](P p) -> ClaimedValue { return Interval{4, 2 * std::max(p[0], p[1])}; }));

  // Wheels W_n, n vertices.
  r.push_back(one("wheel.chi", "wheel", Q::kChi, 4, "4 if n even; 3 if n odd",
                  "wheel proposition, proof: chi(W_n)",
                  parity([](auto) { return 4LL; }, [](auto) { return 3LL; })));
  r.push_back(one("wheel.chi_line", "wheel", Q::kChiLine, 4, "n-1",
                  "wheel chromatic index theorem", of_n([](auto n) { return n - 1; })));
  r.push_back(one("wheel.sum", "wheel", Q::kSum, 4, "n+3 if n even; n+2 if n odd",
                  "wheel proposition: chi(W_n) + chi(L(W_n))",
                  parity([](auto n) { return n + 3; }, [](auto n) { return n + 2; })));
  r.push_back(one("wheel.product", "wheel", Q::kProduct, 4, "4(n-1) if n even; 3(n-1) if n odd",
                  "wheel proposition: chi(W_n) . chi(L(W_n))",
                  parity([](auto n) { return 4 * (n - 1); }, [](auto n) { return 3 * (n - 1); })));

  // Helms H_n over an n-cycle. The chi formula is stated for n >= 4, the
  // proposition for n >= 3.
  r.push_back(one("helm.chi", "helm", Q::kChi, 4, "4 if n even; 3 if n odd",
                  "helm proposition, proof: chi(H_n)",
                  parity([](auto) { return 4LL; }, [](auto) { return 3LL; })));
  r.push_back(one("helm.chi_line", "helm", Q::kChiLine, 3, "n", "helm chromatic index theorem",
                  of_n([](auto n) { return n; })));
  r.push_back(one("helm.sum", "helm", Q::kSum, 3, "n+4 if n even; n+3 if n odd",
                  "helm proposition: chi(H_n) + chi(L(H_n))",
                  parity([](auto n) { return n + 4; }, [](auto n) { return n + 3; })));
  r.push_back(one("helm.product", "helm", Q::kProduct, 3, "4n if n even; 3n if n odd",
                  "helm proposition: chi(H_n) . chi(L(H_n))",
                  parity([](auto n) { return 4 * n; }, [](auto n) { return 3 * n; })));

  // Fans F_{1,n}, n+1 vertices. Statement and proof disagree on sum and
  // product; both versions are kept.
  r.push_back(one("fan.chi", "fan", Q::kChi, 2, "3", "fan proposition, proof: chi(F_{1,n}) = 3",
                  of_n([](auto) { return 3LL; })));
  r.push_back(one("fan.chi_line", "fan", Q::kChiLine, 2, "n", "fan chromatic index theorem",
                  of_n([](auto n) { return n; })));
  r.push_back(one("fan.sum.statement", "fan", Q::kSum, 2, "n+4",
                  "fan proposition, statement: chi(F_{1,n}) + chi(L(F_{1,n}))",
                  of_n([](auto n) { return n + 4; })));
  r.push_back(one("fan.product.statement", "fan", Q::kProduct, 2, "3(n+1)",
                  "fan proposition, statement: chi(F_{1,n}) . chi(L(F_{1,n}))",
                  of_n([](auto n) { return 3 * (n + 1); })));
  r.push_back(one("fan.sum.proof", "fan", Q::kSum, 2, "n+3",
                  "fan proposition, proof: 3+n = n+3", of_n([](auto n) { return n + 3; })));
  r.push_back(one("fan.product.proof", "fan", Q::kProduct, 2, "3n",
                  "fan proposition, proof: 3n", of_n([](auto n) { return 3 * n; })));
  return r;
}

std::string join_edges(const Graph& g) {
  std::string out = "order " + std::to_string(g.order()) + ":";
  for (const auto& e : g.edges()) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out;
}

// Runs job(i) for i in [0, count) on up to `workers` threads and returns the
// results in index order.
template <typename Job>
auto run_indexed(std::size_t count, int workers, Job job) {
  using R = decltype(job(std::size_t{}));
  std::vector<R> out(count);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = job(i);
    return out;
  }
  const auto nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  std::vector<std::future<void>> tasks;
  for (std::size_t t = 0; t < nthreads; ++t) {
    tasks.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < count; i += nthreads) out[i] = job(i);
    }));
  }
  for (auto& f : tasks) f.get();
  return out;
}

std::optional<ExactValues> exact_values(const Graph& g, const SolverOptions& opts) {
  try {
    ExactValues v;
    v.chi = chromatic_number(g, opts).value;
    v.chi_line = chromatic_index(g, opts).value;
    return v;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

AuditRow make_row(const Claim& c, std::span<const long long> params,
                  const std::optional<ExactValues>& exact, std::string witness) {
  AuditRow row;
  row.claim_id = c.id;
  for (std::size_t i = 0; i < params.size(); ++i) row.params.emplace_back(c.param_names[i], params[i]);
  row.claimed = claimed_value(c, params);
  row.citation = c.citation;
  row.witness = std::move(witness);
  if (!exact) {
    row.verdict = Verdict::kBudgetExceeded;
    return row;
  }
  row.exact = quantity_value(c.quantity, *exact);
  row.verdict = judge(row.claimed, *row.exact);
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kChi: return "chi";
    case Quantity::kChiLine: return "chi_line";
    case Quantity::kSum: return "sum";
    case Quantity::kProduct: return "product";
    case Quantity::kSumBounds: return "sum_bounds";
    case Quantity::kProductBounds: return "product_bounds";
  }
  return "?";
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = build_registry();
  return claims;
}

const Claim* find_claim(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::optional<ClaimedValue> claimed_value(const Claim& c, std::span<const long long> params) {
  if (params.size() != c.param_min.size()) return std::nullopt;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i] < c.param_min[i]) return std::nullopt;
  }
  return c.evaluate(params);
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kMatch: return "MATCH";
    case Verdict::kMismatch: return "MISMATCH";
    case Verdict::kClaimUndefined: return "CLAIM_UNDEFINED";
    case Verdict::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

std::optional<Verdict> verdict_from_name(std::string_view name) {
  for (auto v : {Verdict::kMatch, Verdict::kMismatch, Verdict::kClaimUndefined,
                 Verdict::kBudgetExceeded}) {
    if (verdict_name(v) == name) return v;
  }
  return std::nullopt;
}

std::string AuditRow::params_text() const {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ',';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::string AuditRow::exact_text() const { return exact ? std::to_string(*exact) : "-"; }

std::string AuditRow::claimed_text() const {
  if (!claimed) return "-";
  if (const auto* v = std::get_if<long long>(&*claimed)) return std::to_string(*v);
  const auto& iv = std::get<Interval>(*claimed);
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

long long quantity_value(Quantity q, const ExactValues& v) {
  switch (q) {
    case Quantity::kChi: return v.chi;
    case Quantity::kChiLine: return v.chi_line;
    case Quantity::kSum:
    case Quantity::kSumBounds: return v.chi + v.chi_line;
    case Quantity::kProduct:
    case Quantity::kProductBounds: return v.chi * v.chi_line;
  }
  return 0;
}

Verdict judge(const std::optional<ClaimedValue>& claimed, long long exact) {
  if (!claimed) return Verdict::kClaimUndefined;
  if (const auto* v = std::get_if<long long>(&*claimed)) {
    return *v == exact ? Verdict::kMatch : Verdict::kMismatch;
  }
  const auto& iv = std::get<Interval>(*claimed);
  return iv.lo <= exact && exact <= iv.hi ? Verdict::kMatch : Verdict::kMismatch;
}

int audit_min_param(Family family) {
  // complete(1) has no edges, so its chromatic index is undefined.
  return family == Family::kComplete ? 2 : family_min_param(family);
}

std::vector<AuditRow> audit_family(Family family, int lo, int hi, const AuditOptions& opts) {
  const std::string name(family_name(family));
  if (lo < audit_min_param(family)) {
    throw DomainError(name + ": audit range must start at >= " +
                      std::to_string(audit_min_param(family)));
  }
  std::vector<std::vector<long long>> points;
  for (long long a = lo; a <= hi; ++a) {
    if (family_arity(family) == 1) {
      points.push_back({a});
    } else {
      for (long long b = lo; b <= hi; ++b) points.push_back({a, b});
    }
  }
  std::vector<const Claim*> claims;
  for (const auto& c : registry()) {
    if (c.family == name) claims.push_back(&c);
  }
  if (claims.empty()) return {};

  auto per_point = run_indexed(points.size(), opts.workers, [&](std::size_t i) {
    FamilySpec spec{family, std::vector<int>(points[i].begin(), points[i].end())};
    const Graph g = generate(spec);
    const auto exact = exact_values(g, opts.solver);
    std::vector<AuditRow> rows;
    for (const Claim* c : claims) rows.push_back(make_row(*c, points[i], exact, spec.label()));
    return rows;
  });

  std::vector<AuditRow> rows;
  for (auto& chunk : per_point) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AuditRow> audit_bipartite_bounds(int max_order, const AuditOptions& opts) {
  if (max_order > 7) throw DomainError("bipartite bounds audit: max order must be <= 7");
  std::vector<Graph> graphs;
  for (int order = 2; order <= max_order; ++order) {
    const std::uint64_t masks = std::uint64_t{1} << (order * (order - 1) / 2);
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
      Graph g = graph_from_mask(order, mask);
      if (is_connected(g) && bipartition(g)) graphs.push_back(std::move(g));
    }
  }
  const Claim* sum_claim = find_claim("bipartite.sum_bounds");
  const Claim* product_claim = find_claim("bipartite.product_bounds");

  auto per_graph = run_indexed(graphs.size(), opts.workers, [&](std::size_t i) {
    const Graph& g = graphs[i];
    const auto sides = bipartition(g);
    const long long params[] = {sides->x_size(), sides->y_size()};
    const auto exact = exact_values(g, opts.solver);
    return std::vector<AuditRow>{make_row(*sum_claim, params, exact, join_edges(g)),
                                 make_row(*product_claim, params, exact, join_edges(g))};
  });

  std::vector<AuditRow> rows;
  for (auto& chunk : per_graph) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_report(std::span<const AuditRow> rows, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::kCsv:
      os << "claim,params,exact,claimed,verdict,citation,witness\n";
      for (const auto& r : rows) {
        os << csv_field(r.claim_id) << ',' << csv_field(r.params_text()) << ','
           << csv_field(r.exact_text()) << ',' << csv_field(r.claimed_text()) << ','
           << verdict_name(r.verdict) << ',' << csv_field(r.citation) << ','
           << csv_field(r.witness) << '\n';
      }
      break;
    case ReportFormat::kMarkdown:
      os << "| claim | params | exact | claimed | verdict | citation | witness |\n"
         << "|---|---|---|---|---|---|---|\n";
      for (const auto& r : rows) {
        os << "| " << md_cell(r.claim_id) << " | " << md_cell(r.params_text()) << " | "
           << r.exact_text() << " | " << r.claimed_text() << " | " << verdict_name(r.verdict)
           << " | " << md_cell(r.citation) << " | " << md_cell(r.witness) << " |\n";
      }
      break;
    case ReportFormat::kJson: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        nlohmann::ordered_json row;
        row["claim"] = r.claim_id;
        row["params"] = params;
        row["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nlohmann::ordered_json(nullptr);
        if (!r.claimed) {
          row["claimed"] = nullptr;
        } else if (const auto* v = std::get_if<long long>(&*r.claimed)) {
          row["claimed"] = *v;
        } else {
          const auto& iv = std::get<Interval>(*r.claimed);
          row["claimed"] = {iv.lo, iv.hi};
        }
        row["verdict"] = verdict_name(r.verdict);
        row["citation"] = r.citation;
        row["witness"] = r.witness;
        arr.push_back(std::move(row));
      }
      os << arr.dump() << '\n';
      break;
    }
  }
  return os.str();
}

std::vector<Expectation> parse_expectations(std::istream& is) {
  std::vector<Expectation> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string id, params, verdict, extra;
    if (!(ss >> id)) continue;
    if (!(ss >> params >> verdict) || (ss >> extra)) {
      throw ParseError(line_no, "expected '<claim-id> <params|*> <VERDICT>'");
    }
    auto v = verdict_from_name(verdict);
    if (!v) throw ParseError(line_no, "unknown verdict '" + verdict + "'");
    if (!find_claim(id)) throw ParseError(line_no, "unknown claim '" + id + "'");
    out.push_back({id, params, *v});
  }
  return out;
}

std::vector<AuditRow> unexplained_mismatches(std::span<const AuditRow> rows,
                                             std::span<const Expectation> expected) {
  std::vector<AuditRow> out;
  for (const auto& r : rows) {
    if (r.verdict != Verdict::kMismatch) continue;
    const auto params = r.params_text();
    const bool covered = std::any_of(expected.begin(), expected.end(), [&](const Expectation& e) {
      return e.claim_id == r.claim_id && e.verdict == Verdict::kMismatch &&
             (e.params == "*" || e.params == params);
    });
    if (!covered) out.push_back(r);
  }
  return out;
}

}  // namespace gclab
