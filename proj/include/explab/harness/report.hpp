#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace explab {

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct InstanceRecord {
  std::size_t index = 0;
  std::string descriptor;
  Verdict verdict = Verdict::pass;
  // Inputs and the exact quantities compared; enough to replay a failure.
  nlohmann::json data = nlohmann::json::object();
  std::string note;
};

struct CampaignReport {
  std::string campaign;
  std::uint64_t seed = 0;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<InstanceRecord> instances;

  InstanceRecord& add(std::string descriptor);

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }

  nlohmann::json to_json() const;
  // One line per instance: index,descriptor,verdict,note,data.
  std::string to_csv() const;
};

}  // namespace explab
