#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agreement.hpp"
#include "conllulex.hpp"
#include "eval.hpp"
#include "stats.hpp"

namespace snacs {

enum class OutputFormat { Text, Records };
std::optional<OutputFormat> output_format_from_string(std::string_view s);

// Every table has two renderings: an aligned plain-text view and a single
// machine-readable JSON document ("records"). Records are emitted as one
// compact document per table with deterministic key order.

std::string render_summary(const SummaryStats& s, OutputFormat format);
std::string render_distribution(const CountDistribution& d, const std::string& title,
                                long denominator, OutputFormat format);
std::string render_entropy_table(const std::vector<EntropyRow>& rows, OutputFormat format);
std::string render_agreement(double kappa_scene, double kappa_function, double kappa_construal,
                             const std::vector<AgreementRow>& per_lemma, long n_pairs,
                             OutputFormat format);
std::string render_eval(const EvalReport& report, OutputFormat format);
std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics, OutputFormat format);
std::string render_split(const Split& split, OutputFormat format);

}  // namespace snacs
