#include "bfan/classification.hpp"

#include <atomic>

#include "bfan/errors.hpp"

namespace bfan {

namespace {
std::atomic<unsigned long long> g_record_count{0};
}

DiscrepancyRecord DiscrepancyRecord::make(LatticeVector w, Rat d, Rat r, Rat b_prime) {
  if (d < 0 || d >= 1) throw InvalidCoefficientError("coefficient outside [0,1)");
  DiscrepancyRecord rec;
  rec.w = std::move(w);
  rec.d = std::move(d);
  rec.r = std::move(r);
  rec.b_prime = std::move(b_prime);
  rec.b = rec.r * rec.b_prime;
  rec.a = rec.b_prime - rec.d;
  if (rec.r * (Rat(1) - rec.d) != 1)
    throw VerificationFailedError("ramification index does not invert 1-d");
  if (rec.b + 1 != rec.r * (rec.a + 1))
    throw VerificationFailedError("b+1 != r*(a+1)");
  if (rec.b_prime != rec.a + rec.d)
    throw VerificationFailedError("b' != a+d");
  g_record_count.fetch_add(1, std::memory_order_relaxed);
  return rec;
}

unsigned long long discrepancy_record_count() {
  return g_record_count.load(std::memory_order_relaxed);
}

bool class_at_least(SingularityClass have, SingularityClass want) {
  return static_cast<int>(have) <= static_cast<int>(want);
}

std::string class_name(SingularityClass c, bool b_prefix) {
  std::string base;
  switch (c) {
    case SingularityClass::Terminal: base = "terminal"; break;
    case SingularityClass::Canonical: base = "canonical"; break;
    case SingularityClass::LogTerminal: base = "log-terminal"; break;
    case SingularityClass::LogCanonical: base = "log-canonical"; break;
    case SingularityClass::NotLogCanonical: base = "not-log-canonical"; break;
  }
  if (!b_prefix) return base;
  if (c == SingularityClass::NotLogCanonical) return "not-b-log-canonical";
  return "b-" + base;
}

}  // namespace bfan
