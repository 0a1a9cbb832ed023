#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace albtwist {

/// Deterministic JSON report envelope. Keys are emitted sorted and rationals
/// are printed canonically ("p/q" or "p"), so identical inputs produce
/// byte-identical output. Wall-clock timing is deliberately excluded from
/// the serialized form.
class ReportDocument {
  public:
    ReportDocument(std::string command, nlohmann::json inputs);

    nlohmann::json& results() { return doc_["results"]; }
    void add_caveat(const std::string& caveat);
    void add_caveats(const std::vector<std::string>& caveats);

    std::string to_json() const;  // byte-deterministic
    const nlohmann::json& raw() const { return doc_; }

    static constexpr const char* kSchema = "albtwist-report/1";

  private:
    nlohmann::json doc_;
};

}  // namespace albtwist
