#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permchar/catalog.hpp"
#include "permchar/sweep.hpp"
#include "permchar/theorems.hpp"

namespace permchar {

enum class Format { Text, Json };

/// "text" or "json"; throws Error(ParseError) otherwise.
Format parse_format(std::string_view name);

struct KlingenReport {
  std::string group;
  std::string u;
  std::string n;
  std::optional<KlingenWitness> witness;
};

struct GassmannReport {
  std::string group;
  std::size_t order = 0;
  std::vector<GassmannPair> pairs;
};

struct CatalogListing {
  std::vector<const CatalogEntry*> entries;
};

struct ParseReport {
  std::string canonical;
  std::size_t degree = 0;
  std::size_t order = 0;
};

// JSON output is one document with sorted keys and a trailing newline; text
// output is aligned key=value columns. Both are byte-stable for equal input.
std::string render_report(const std::vector<LemmaCheck>& checks, Format format);
std::string render_report(const std::vector<FgsCheck>& checks, Format format);
std::string render_report(const TheoremCheck& check, Format format);
std::string render_report(const KlingenReport& report, Format format);
std::string render_report(const GassmannReport& report, Format format);
std::string render_report(const CatalogListing& listing, Format format);
std::string render_report(const ParseReport& report, Format format);
/// Wall time is left out unless `include_timing`, so repeated runs match byte for byte.
std::string render_report(const SweepReport& report, Format format, bool include_timing = false);

}  // namespace permchar
