#include "dhankel/moments.hpp"

namespace dhankel {

SymbolSeq moment_sequence(const MeasureSpec& spec) { return SymbolSeq::moments(spec); }

ClassReport classify_measure(const MeasureSpec& spec, OperatorKind kind, const ClassifyConfig& cfg) {
  ClassReport rep = classify(moment_sequence(spec), kind, cfg);
  rep.applicability = Applicability::theorem_exact;
  return rep;
}

}  // namespace dhankel
