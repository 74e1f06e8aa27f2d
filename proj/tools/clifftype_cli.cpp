#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clifftype/core.hpp"
#include "clifftype/group.hpp"
#include "clifftype/oracle.hpp"
#include "clifftype/rep.hpp"
#include "clifftype/report.hpp"

namespace {

using namespace cliff;

constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitMismatch = 3;

int global_cap() {
  if (const char* env = std::getenv("CLIFFTYPE_NMAX")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("CLIFFTYPE_NMAX is not an integer");
    }
  }
  return kDefaultMaxGenerators;
}

GroupKind parse_kind(const std::string& s) {
  if (s == "pin") return GroupKind::Pin;
  if (s == "spin") return GroupKind::Spin;
  throw CLI::ValidationError("--group must be pin or spin");
}

void emit(const std::vector<OutputRecord>& records, const std::string& format) {
  if (format == "json") {
    std::cout << records_to_json(records);
  } else if (format == "csv") {
    std::cout << records_to_csv(records);
  } else {
    std::cout << records_to_text(records);
  }
}

TypeValue type_by_method(int p, int q, GroupKind kind, const std::string& method) {
  if (method == "closed") return fs_indicator_closed(p, q, kind);
  if (method == "brute") return fs_indicator_brute(make_signature(p, q, global_cap()), kind);
  if (method == "matrix") {
    Signature sig = make_signature(p, q, global_cap());
    Rational r = fs_sum_matrix(sig, kind);
    int cc = constituent_count(sig, kind);
    if (r.den != 1 || r.num % cc != 0) throw std::logic_error("matrix FS sum is not integral");
    return {static_cast<int>(r.num / cc)};
  }
  throw CLI::ValidationError("--method must be closed, brute or matrix");
}

int cmd_type(int p, int q, const std::string& group, const std::string& method,
             const std::string& format) {
  GroupKind kind = parse_kind(group);
  TypeValue t = type_by_method(p, q, kind, method);
  emit({make_type_record(p, q, kind, method, t)}, format);
  return 0;
}

int cmd_table(std::optional<int> max_n, std::optional<std::string> grid, const std::string& group,
              const std::string& format) {
  GroupKind kind = parse_kind(group);
  std::vector<OutputRecord> records;
  if (grid) {
    auto x = grid->find('x');
    if (x == std::string::npos) throw CLI::ValidationError("--grid expects PxQ, e.g. 9x9");
    int pc = std::stoi(grid->substr(0, x));
    int qc = std::stoi(grid->substr(x + 1));
    if (pc <= 0 || qc <= 0) throw CLI::ValidationError("--grid sizes must be positive");
    for (const auto& cell : type_table(pc - 1, qc - 1, kind)) {
      records.push_back(make_type_record(cell.p, cell.q, kind, "closed", cell.type));
    }
  } else {
    if (!max_n || *max_n < 0) throw CLI::ValidationError("need --max-n >= 0 or --grid PxQ");
    for (int n = 0; n <= *max_n; ++n) {
      records.push_back(make_type_record(n, 0, kind, "closed", fs_indicator_closed(n, 0, kind)));
    }
  }
  emit(records, format);
  return 0;
}

int cmd_burnside(int p, int q, const std::string& group, const std::string& method,
                 const std::string& format) {
  GroupKind kind = parse_kind(group);
  Signature sig = make_signature(p, q, global_cap());
  auto info = burnside_spinor_solve(sig, kind);
  if (method == "brute") {
    if (sig.n() > 12) throw cap_error("brute class count capped at p+q <= 12");
    info.class_count = conjugacy_classes_brute(sig, kind).class_count;
  } else if (method != "structural") {
    throw CLI::ValidationError("--method must be structural or brute");
  }

  if (format == "json") {
    nlohmann::ordered_json obj;
    obj["p"] = p;
    obj["q"] = q;
    obj["n"] = sig.n();
    obj["group"] = kind_name(kind);
    obj["method"] = method;
    obj["order"] = info.group_order;
    obj["class_count"] = info.class_count;
    obj["num_one_dim"] = info.num_one_dim;
    obj["num_spinor"] = info.num_spinor;
    obj["spinor_dim"] = info.spinor_dim;
    std::cout << obj.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "p,q,n,group,method,order,class_count,num_one_dim,num_spinor,spinor_dim\n"
              << p << ',' << q << ',' << sig.n() << ',' << kind_name(kind) << ',' << method << ','
              << info.group_order << ',' << info.class_count << ',' << info.num_one_dim << ','
              << info.num_spinor << ',' << info.spinor_dim << '\n';
  } else {
    std::cout << kind_name(kind) << "(" << p << "," << q << ")  |G| = " << info.group_order
              << ", classes " << info.class_count << ": " << info.num_one_dim << " x 1-dim + "
              << info.num_spinor << " x dim " << info.spinor_dim << " spinor\n";
  }
  return 0;
}

int cmd_classes(int p, int q, const std::string& group, const std::string& format) {
  GroupKind kind = parse_kind(group);
  Signature sig = make_signature(p, q, global_cap());
  if (sig.n() > 12) throw cap_error("class enumeration capped at p+q <= 12");
  auto report = conjugacy_classes_brute(sig, kind);
  std::uint64_t singletons = report.central_count;
  std::uint64_t pairs = report.class_count - singletons;

  if (format == "json") {
    nlohmann::ordered_json obj;
    obj["p"] = p;
    obj["q"] = q;
    obj["n"] = sig.n();
    obj["group"] = kind_name(kind);
    obj["order"] = describe_group(sig, kind).order;
    obj["class_count"] = report.class_count;
    obj["central_count"] = report.central_count;
    obj["size_1_classes"] = singletons;
    obj["size_2_classes"] = pairs;
    std::cout << obj.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "p,q,n,group,order,class_count,central_count,size_1_classes,size_2_classes\n"
              << p << ',' << q << ',' << sig.n() << ',' << kind_name(kind) << ','
              << describe_group(sig, kind).order << ',' << report.class_count << ','
              << report.central_count << ',' << singletons << ',' << pairs << '\n';
  } else {
    std::cout << kind_name(kind) << "(" << p << "," << q << ")  " << report.class_count
              << " conjugacy classes (" << singletons << " central, " << pairs
              << " of size 2)\n";
  }
  return 0;
}

int cmd_verify(int max_brute, int max_matrix, const std::string& format) {
  if (max_brute > global_cap()) throw cap_error("--max-brute exceeds generator cap");
  if (max_matrix > 12) throw cap_error("--max-matrix capped at 12");

  struct Failure {
    int p, q;
    GroupKind kind;
    std::string method;
  };
  std::optional<Failure> first_failure;
  int checks = 0;

  auto run_suite = [&](const char* name, int max_n, auto&& check) {
    std::uint64_t cases = 0;
    bool ok = true;
    for (int n = 0; n <= max_n; ++n) {
      for (int p = 0; p <= n; ++p) {
        for (GroupKind kind : {GroupKind::Pin, GroupKind::Spin}) {
          ++cases;
          if (!check(p, n - p, kind)) {
            ok = false;
            if (!first_failure) first_failure = {p, n - p, kind, name};
          }
        }
      }
    }
    ++checks;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << " (" << cases << " cases)\n";
  };

  run_suite("brute=closed", max_brute, [](int p, int q, GroupKind kind) {
    return fs_indicator_brute(Signature{p, q}, kind) == fs_indicator_closed(p, q, kind);
  });
  run_suite("matrix-oracle", max_matrix, [](int p, int q, GroupKind kind) {
    Signature sig{p, q};
    Rational r = fs_sum_matrix(sig, kind);
    int cc = constituent_count(sig, kind);
    return r.den == 1 && r.num == cc * fs_indicator_closed(p, q, kind).value &&
           character_norm(sig, kind) == cc;
  });
  run_suite("classes-structural=brute", std::min(max_brute, 12), [](int p, int q, GroupKind kind) {
    Signature sig{p, q};
    return conjugacy_classes_brute(sig, kind).class_count ==
           conjugacy_class_count_structural(sig, kind);
  });

  (void)format;
  if (first_failure) {
    std::cerr << "mismatch at (" << first_failure->p << "," << first_failure->q << ","
              << kind_name(first_failure->kind) << "," << first_failure->method << ")\n";
    return kExitMismatch;
  }
  std::cout << "all " << checks << " suites passed\n";
  return 0;
}

int cmd_export_gammas(int p, int q) {
  Signature sig = make_signature(p, q, global_cap());
  auto gammas = build_gammas(sig);
  nlohmann::ordered_json obj;
  obj["p"] = p;
  obj["q"] = q;
  obj["dim"] = gammas.empty() ? 1 : gammas[0].dim();
  nlohmann::ordered_json mats = nlohmann::ordered_json::array();
  for (const auto& g : gammas) {
    nlohmann::ordered_json flat = nlohmann::ordered_json::array();
    for (int r = 0; r < g.dim(); ++r)
      for (int c = 0; c < g.dim(); ++c)
        flat.push_back({g.at(r, c).re, g.at(r, c).im});
    mats.push_back(std::move(flat));
  }
  obj["gammas"] = std::move(mats);
  std::cout << obj.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Clifford group representation types for signature (p,q)"};
  app.require_subcommand(1);

  int p = 0, q = 0;
  std::string group = "pin";
  std::string method = "closed";
  std::string format = "text";
  std::optional<int> max_n;
  std::optional<std::string> grid;
  int max_brute = 12, max_matrix = 8;

  auto add_common = [&](CLI::App* sub, bool with_pq = true) {
    if (with_pq) {
      sub->add_option("-p", p, "positive-metric directions")->check(CLI::NonNegativeNumber);
      sub->add_option("-q", q, "negative-metric directions")->check(CLI::NonNegativeNumber);
    }
    sub->add_option("--group", group, "pin or spin")->check(CLI::IsMember({"pin", "spin"}));
    sub->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* t = app.add_subcommand("type", "representation type of one signature");
  add_common(t);
  t->add_option("--method", method, "closed, brute or matrix")
      ->check(CLI::IsMember({"closed", "brute", "matrix"}));

  auto* tab = app.add_subcommand("table", "type sequence or signature grid");
  add_common(tab, false);
  tab->add_option("--max-n", max_n, "Euclidean sequence n = 0..max");
  tab->add_option("--grid", grid, "PxQ signature grid");

  auto* b = app.add_subcommand("burnside", "irrep counts and dimensions");
  add_common(b);
  b->add_option("--method", method, "structural or brute class count")
      ->check(CLI::IsMember({"structural", "brute"}));

  auto* c = app.add_subcommand("classes", "brute-force conjugacy class report");
  add_common(c);

  auto* v = app.add_subcommand("verify", "cross-method verification suite");
  v->add_option("--max-brute", max_brute, "brute-vs-closed up to p+q = N");
  v->add_option("--max-matrix", max_matrix, "matrix oracle up to p+q = N");
  v->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* e = app.add_subcommand("export-gammas", "gamma matrices as JSON");
  e->add_option("-p", p, "positive-metric directions")->check(CLI::NonNegativeNumber);
  e->add_option("-q", q, "negative-metric directions")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  }

  try {
    if (b->parsed() && method == "closed") method = "structural";
    if (t->parsed()) return cmd_type(p, q, group, method, format);
    if (tab->parsed()) return cmd_table(max_n, grid, group, format);
    if (b->parsed()) return cmd_burnside(p, q, group, method, format);
    if (c->parsed()) return cmd_classes(p, q, group, format);
    if (v->parsed()) return cmd_verify(max_brute, max_matrix, format);
    if (e->parsed()) return cmd_export_gammas(p, q);
  } catch (const cliff::cap_error& err) {
    std::cerr << "cap exceeded: " << err.what() << "\n";
    return kExitCap;
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
