#include "albtwist/report.hpp"

#include <algorithm>

namespace albtwist {

ReportDocument::ReportDocument(std::string command, nlohmann::json inputs) {
    doc_["schema"] = kSchema;
    doc_["command"] = std::move(command);
    doc_["inputs"] = std::move(inputs);
    doc_["results"] = nlohmann::json::object();
    doc_["caveats"] = nlohmann::json::array();
}

void ReportDocument::add_caveat(const std::string& caveat) {
    auto& arr = doc_["caveats"];
    for (const auto& c : arr)
        if (c.get<std::string>() == caveat) return;
    arr.push_back(caveat);
}

void ReportDocument::add_caveats(const std::vector<std::string>& caveats) {
    for (const auto& c : caveats) add_caveat(c);
}

std::string ReportDocument::to_json() const {
    // nlohmann::json objects keep keys sorted (std::map storage), so dump()
    // is already canonical for identical inputs.
    return doc_.dump(2) + "\n";
}

}  // namespace albtwist
