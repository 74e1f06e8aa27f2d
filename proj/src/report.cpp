#include "clifftype/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cliff {

OutputRecord make_type_record(long long p, long long q, GroupKind kind, const std::string& method,
                              TypeValue type) {
  OutputRecord rec;
  rec.p = p;
  rec.q = q;
  rec.n = p + q;
  rec.group = kind_name(kind);
  rec.method = method;
  rec.type_value = type.value;
  rec.type_label = type.label();
  rec.pq_mod8 = static_cast<int>((((p - q) % 8) + 8) % 8);
  if (rec.n <= 62) {  // group order fits in 64 bits
    auto info = burnside_spinor_solve(Signature{static_cast<int>(p), static_cast<int>(q)}, kind);
    rec.spinor_dim = info.spinor_dim;
    rec.num_spinor = info.num_spinor;
    rec.class_count = info.class_count;
  }
  return rec;
}

std::string records_to_json(const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["p"] = r.p;
    obj["q"] = r.q;
    obj["n"] = r.n;
    obj["group"] = r.group;
    obj["method"] = r.method;
    obj["type_value"] = r.type_value;
    obj["type_label"] = r.type_label;
    if (r.spinor_dim) obj["spinor_dim"] = *r.spinor_dim;
    if (r.num_spinor) obj["num_spinor"] = *r.num_spinor;
    if (r.class_count) obj["class_count"] = *r.class_count;
    obj["pq_mod8"] = r.pq_mod8;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string records_to_csv(const std::vector<OutputRecord>& records) {
  std::ostringstream out;
  out << "p,q,n,group,method,type_value,type_label,spinor_dim,num_spinor,class_count,pq_mod8\n";
  for (const auto& r : records) {
    out << r.p << ',' << r.q << ',' << r.n << ',' << r.group << ',' << r.method << ','
        << r.type_value << ',' << r.type_label << ',';
    if (r.spinor_dim) out << *r.spinor_dim;
    out << ',';
    if (r.num_spinor) out << *r.num_spinor;
    out << ',';
    if (r.class_count) out << *r.class_count;
    out << ',' << r.pq_mod8 << '\n';
  }
  return out.str();
}

std::string records_to_text(const std::vector<OutputRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    out << r.group << "(" << r.p << "," << r.q << ")  type " << (r.type_value >= 0 ? "+" : "")
        << r.type_value << " (" << r.type_label << ")  (p-q) mod 8 = " << r.pq_mod8;
    if (r.spinor_dim) out << "  spinor irreps " << *r.num_spinor << " x dim " << *r.spinor_dim;
    out << " [" << r.method << "]\n";
  }
  return out.str();
}

}  // namespace cliff
