#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scindex/indices.hpp"
#include "scindex/record.hpp"

namespace scindex {

/// Quantifier bounds for the exhaustive axiom harnesses. The default covers
/// all 924 records with length <= 6 and entries <= 6, and scale/stretch
/// factors {1,2,3}.
struct EnumerationDomain {
  int max_len = 6;
  int max_cite = 6;
  std::vector<std::int64_t> scale_factors{1, 2, 3};
  std::vector<std::int64_t> stretch_factors{1, 2, 3};
};

struct AxiomWitness {
  std::vector<CitationRecord> records;
  std::int64_t k = 1, m = 1;
  std::string detail;
};

/// Outcome of one (axiom, index) check. "holds" is a bounded claim: the check
/// is a falsification harness over the domain, not a proof.
struct AxiomReport {
  std::string axiom;
  std::string index;
  EnumerationDomain domain;
  bool holds = true;
  std::optional<AxiomWitness> witness;
};

AxiomReport check_mon(const IndexDescriptor& g, const EnumerationDomain& dom);
AxiomReport check_sym(const IndexDescriptor& g, const EnumerationDomain& dom);
AxiomReport check_sinv(const IndexDescriptor& g, const EnumerationDomain& dom);
AxiomReport check_ssinv(const IndexDescriptor& g, const EnumerationDomain& dom);
AxiomReport check_maxb(const IndexDescriptor& g, const EnumerationDomain& dom);
AxiomReport check_wresp(const IndexDescriptor& g);
AxiomReport check_sqrtresp(const IndexDescriptor& g);
AxiomReport check_sresp(const IndexDescriptor& g);

/// Linear growth against the deterministic model with integer parameters.
/// For h, hprime, w, wprime the strip slopes/widths are exact; for other
/// indices the report carries an empirical strip-width bound (grows without
/// bound iff the index escapes every strip).
AxiomReport check_lgr(const IndexDescriptor& g, std::int64_t p, std::int64_t c, int horizon);

/// The characterization counterexamples plus the a=1 Hirsch power.
std::vector<IndexDescriptor> counterexample_indices();

/// Runs the six-column battery (Mon, Sym, SSInv, MaxB, WResp, SqrtResp) plus
/// SInv for one index.
std::vector<AxiomReport> run_battery(const IndexDescriptor& g, const EnumerationDomain& dom);

struct IndependenceMatrix {
  std::vector<std::string> rows;                 // index names
  std::vector<std::string> cols;                 // axiom names
  std::vector<std::vector<AxiomReport>> cells;   // [row][col]
};

/// Rows: hprime, h_a=1, t_half, d_index, wprime, f_index, const_one, h, w, e.
/// Columns: Mon, Sym, SSInv, MaxB, WResp, SqrtResp.
IndependenceMatrix independence_matrix(const EnumerationDomain& dom);

}  // namespace scindex
