#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clifftype/core.hpp"
#include "clifftype/rep.hpp"

namespace cliff {

// One row of machine output. Field order is the CSV column contract.
struct OutputRecord {
  long long p = 0;
  long long q = 0;
  long long n = 0;
  std::string group;   // pin | spin
  std::string method;  // closed | brute | matrix | structural
  int type_value = 0;
  std::string type_label;
  std::optional<std::uint64_t> spinor_dim;
  std::optional<std::uint64_t> num_spinor;
  std::optional<std::uint64_t> class_count;
  int pq_mod8 = 0;
};

OutputRecord make_type_record(long long p, long long q, GroupKind kind, const std::string& method,
                              TypeValue type);

std::string records_to_json(const std::vector<OutputRecord>& records);
std::string records_to_csv(const std::vector<OutputRecord>& records);
std::string records_to_text(const std::vector<OutputRecord>& records);

}  // namespace cliff
