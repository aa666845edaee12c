#pragma once

#include <optional>
#include <string>

#include "bfan/lattice.hpp"
#include "bfan/rational.hpp"

namespace bfan {

/// One toric valuation w together with its boundary coefficient d, the
/// ramification index r = 1/(1-d) and the three discrepancies. The exact
/// identities b = r*b', b+1 = r*(a+1) and b' = a+d are enforced at
/// construction.
struct DiscrepancyRecord {
  LatticeVector w;
  Rat d;
  Rat r;
  Rat a;
  Rat b_prime;
  Rat b;

  static DiscrepancyRecord make(LatticeVector w, Rat d, Rat r, Rat b_prime);

  friend bool operator==(const DiscrepancyRecord&, const DiscrepancyRecord&) = default;
};

/// Number of records constructed so far in this process (each one passed the
/// exact identity checks).
unsigned long long discrepancy_record_count();

/// Threshold classes: minimal discrepancy over exceptional valuations
/// > 0 / >= 0 / > -1 / >= -1 / below.
enum class SingularityClass {
  Terminal,
  Canonical,
  LogTerminal,
  LogCanonical,
  NotLogCanonical,
};

/// True when `have` is at least as good as `want` (terminal implies
/// canonical implies log terminal implies log canonical).
bool class_at_least(SingularityClass have, SingularityClass want);

std::string class_name(SingularityClass c, bool b_prefix);

struct Classification {
  SingularityClass b_class;
  SingularityClass ordinary_class;
  std::optional<DiscrepancyRecord> b_witness;         // argmin when any b <= 0 exists
  std::optional<DiscrepancyRecord> ordinary_witness;  // same for the zero boundary
};

}  // namespace bfan
