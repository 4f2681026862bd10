#include "explab/harness/report.hpp"

#include <algorithm>
#include <sstream>

namespace explab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

InstanceRecord& CampaignReport::add(std::string descriptor) {
  InstanceRecord& r = instances.emplace_back();
  r.index = instances.size() - 1;
  r.descriptor = std::move(descriptor);
  return r;
}

namespace {

std::size_t count_verdict(const std::vector<InstanceRecord>& xs, Verdict v) {
  return static_cast<std::size_t>(
      std::count_if(xs.begin(), xs.end(), [v](const auto& r) { return r.verdict == v; }));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::size_t CampaignReport::passed() const { return count_verdict(instances, Verdict::pass); }
std::size_t CampaignReport::failed() const { return count_verdict(instances, Verdict::fail); }
std::size_t CampaignReport::skipped() const {
  return count_verdict(instances, Verdict::skipped);
}

nlohmann::json CampaignReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : instances) {
    nlohmann::json entry = {{"index", r.index},
                            {"descriptor", r.descriptor},
                            {"verdict", to_string(r.verdict)},
                            {"data", r.data}};
    if (!r.note.empty()) entry["note"] = r.note;
    list.push_back(std::move(entry));
  }
  return {{"campaign", campaign},
          {"seed", seed},
          {"parameters", parameters},
          {"totals",
           {{"instances", instances.size()},
            {"passed", passed()},
            {"failed", failed()},
            {"skipped", skipped()}}},
          {"instances", std::move(list)}};
}

std::string CampaignReport::to_csv() const {
  std::ostringstream os;
  os << "campaign,seed,index,descriptor,verdict,note,data\n";
  for (const auto& r : instances) {
    os << csv_field(campaign) << ',' << seed << ',' << r.index << ','
       << csv_field(r.descriptor) << ',' << to_string(r.verdict) << ','
       << csv_field(r.note) << ',' << csv_field(r.data.dump()) << '\n';
  }
  return os.str();
}

}  // namespace explab
