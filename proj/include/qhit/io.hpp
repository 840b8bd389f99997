#pragma once

#include <qhit/error.hpp>
#include <qhit/markov_chain.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace qhit {

/// Shortest text with 17 significant digits; parses back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Parses {"n": int, "graph": "complete", "marked": [1-based ints]}.
inline MarkovChain chain_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw error(errc::invalid_chain, "chain descriptor needs an integer \"n\"");
  const std::string graph = j.value("graph", std::string("complete"));
  if (graph != "complete") throw error(errc::invalid_chain, "unsupported graph \"" + graph + "\"");
  std::vector<int> marked;
  if (j.contains("marked")) {
    if (!j.at("marked").is_array()) throw error(errc::invalid_chain, "\"marked\" must be an array");
    for (const auto& v : j.at("marked")) {
      if (!v.is_number_integer()) throw error(errc::invalid_chain, "marked vertices must be integers");
      marked.push_back(v.get<int>());
    }
  }
  return complete_graph(j.at("n").get<int>()).with_marked(std::move(marked));
}

inline nlohmann::json chain_to_json(const MarkovChain& chain) {
  return {{"n", chain.n()}, {"graph", "complete"}, {"marked", chain.marked()}};
}

/// Minimal CSV writer: header row, comma separated, LF endings, doubles at 17 digits.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
    for (std::size_t i = 0; i < header.size(); ++i) os_ << (i ? "," : "") << header[i];
    os_ << '\n';
  }

  CsvWriter& cell(double v) { return raw(format_double(v)); }
  CsvWriter& cell(long long v) { return raw(std::to_string(v)); }
  CsvWriter& cell(int v) { return raw(std::to_string(v)); }
  CsvWriter& cell(const std::string& v) { return raw(v); }

  void end_row() {
    os_ << '\n';
    first_ = true;
  }

 private:
  CsvWriter& raw(const std::string& s) {
    if (!first_) os_ << ',';
    os_ << s;
    first_ = false;
    return *this;
  }

  std::ostream& os_;
  bool first_ = true;
};

}  // namespace qhit
