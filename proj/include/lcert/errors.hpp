#pragma once

#include <stdexcept>
#include <string>

namespace lcert {

enum class errc {
  non_positive_input,
  pole_at_integer,
  out_of_range,
  division_by_zero,
  not_coprime,
  non_coprime_moduli,
  invalid_index,
  invariant_violation,
  nonzero_period_sum,
  not_odd_character,
  not_dirichlet_type,
  too_large,
  precision_too_low,
  values_too_uncertain,
  precision_exhausted,
  unit_sum_vanishes,
  hypothesis_failed,
  corrupt_entry,
  usage,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_positive_input: return "NonPositiveInput";
    case errc::pole_at_integer: return "PoleAtInteger";
    case errc::out_of_range: return "OutOfRange";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_coprime: return "NotCoprime";
    case errc::non_coprime_moduli: return "NonCoprimeModuli";
    case errc::invalid_index: return "InvalidIndex";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::nonzero_period_sum: return "NonzeroPeriodSum";
    case errc::not_odd_character: return "NotOddCharacter";
    case errc::not_dirichlet_type: return "NotDirichletType";
    case errc::too_large: return "TooLarge";
    case errc::precision_too_low: return "PrecisionTooLow";
    case errc::values_too_uncertain: return "ValuesTooUncertain";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::unit_sum_vanishes: return "UnitSumVanishes";
    case errc::hypothesis_failed: return "HypothesisFailed";
    case errc::corrupt_entry: return "CorruptEntry";
    case errc::usage: return "Usage";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) {
  throw error(c, what);
}

}  // namespace lcert
