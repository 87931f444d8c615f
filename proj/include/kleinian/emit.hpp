#pragma once

#include "kleinian/chartable.hpp"
#include "kleinian/graph.hpp"
#include "kleinian/orbifold.hpp"
#include "kleinian/roots.hpp"
#include "kleinian/spectrum.hpp"
#include "kleinian/verify.hpp"

#include <string>

namespace kleinian {

/// Output formats of the CLI. Every emitter is deterministic: equal inputs
/// produce byte-identical output. Asking for a format an artifact does not
/// support (e.g. dot for a spectrum) raises UsageError.
enum class Format { Json, Tsv, Dot, Text };

Format parse_format(const std::string& name);

std::string emit_group(const FiniteSubgroup& group, const std::vector<ConjugacyClass>& classes,
                       Format format);
std::string emit_chartable(const CharacterTable& table, Format format);
std::string emit_quiver(const std::string& label, const McKayGraph& mckay, Format format);
std::string emit_spectrum(const std::string& type, const SingularityAnalysis& analysis,
                          Format format);
std::string emit_coxeter(const std::string& type, const CoxeterElement& element,
                         const std::vector<Rational>& exponents, Format format);
std::string emit_orbifold(const OrbifoldComparison& report, Format format);
std::string emit_verification(const std::vector<VerificationCase>& cases, Format format);

} // namespace kleinian
