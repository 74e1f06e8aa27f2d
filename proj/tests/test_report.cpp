#include <doctest.h>

#include <json.hpp>

#include "clifftype/report.hpp"

using namespace cliff;

TEST_CASE("record fields and label mapping") {
  auto rec = make_type_record(3, 1, GroupKind::Pin, "closed",
                              fs_indicator_closed(3, 1, GroupKind::Pin));
  CHECK(rec.n == 4);
  CHECK(rec.group == "pin");
  CHECK(rec.type_value == 1);
  CHECK(rec.type_label == "real");
  CHECK(rec.pq_mod8 == 2);
  REQUIRE(rec.spinor_dim.has_value());
  CHECK(*rec.spinor_dim == 4);

  auto complex_rec = make_type_record(0, 1, GroupKind::Pin, "closed",
                                      fs_indicator_closed(0, 1, GroupKind::Pin));
  CHECK(complex_rec.type_value == 0);
  CHECK(complex_rec.type_label == "complex");
}

TEST_CASE("json contract") {
  auto rec = make_type_record(4, 0, GroupKind::Spin, "brute",
                              fs_indicator_brute(Signature{4, 0}, GroupKind::Spin));
  auto parsed = nlohmann::json::parse(records_to_json({rec}));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  const auto& obj = parsed[0];
  for (const char* key : {"p", "q", "n", "group", "method", "type_value", "type_label",
                          "spinor_dim", "num_spinor", "class_count", "pq_mod8"}) {
    CHECK(obj.contains(key));
  }
  CHECK(obj["type_value"] == -1);
  CHECK(obj["type_label"] == "quaternionic");
  CHECK(obj["num_spinor"] == 2);
  CHECK(obj["spinor_dim"] == 2);
}

TEST_CASE("csv header and determinism") {
  std::vector<OutputRecord> recs;
  for (int n = 0; n <= 5; ++n) {
    recs.push_back(make_type_record(n, 0, GroupKind::Pin, "closed",
                                    fs_indicator_closed(n, 0, GroupKind::Pin)));
  }
  auto csv = records_to_csv(recs);
  CHECK(csv.starts_with(
      "p,q,n,group,method,type_value,type_label,spinor_dim,num_spinor,class_count,pq_mod8\n"));
  CHECK(csv == records_to_csv(recs));
  CHECK(records_to_json(recs) == records_to_json(recs));
}
