// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. argv[1] is the path to the CLI binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clifftype/core.hpp"
#include "clifftype/group.hpp"
#include "clifftype/oracle.hpp"
#include "clifftype/rep.hpp"

using namespace cliff;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, double seconds) {
  if (!ok) ++g_failures;
  std::printf("criterion %d %-38s %s  (%.2fs)\n", criterion, name.c_str(),
              ok ? "PASS" : "FAIL", seconds);
}

template <typename Fn>
void run(int criterion, const std::string& name, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d threw: %s\n", criterion, e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(criterion, name, ok, secs);
}

std::string run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

// type_value column of CSV table output, one entry per data row
std::vector<int> csv_type_column(const std::string& csv) {
  std::vector<int> values;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string field;
    for (int i = 0; i <= 5 && std::getline(row, field, ','); ++i) {}
    values.push_back(std::stoi(field));
  }
  return values;
}

bool sequence_criterion(const std::string& cli, const std::string& group,
                        const std::vector<int>& expected) {
  auto values = csv_type_column(
      run_cli(cli, "table --max-n 10 --group " + group + " --format csv"));
  return values == expected;
}

template <typename Fn>
bool for_all_signatures(int max_n, Fn&& fn) {
  for (int n = 0; n <= max_n; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (GroupKind kind : {GroupKind::Pin, GroupKind::Spin}) {
        if (!fn(Signature{p, n - p}, kind)) {
          std::fprintf(stderr, "  mismatch at (%d,%d,%s)\n", p, n - p, kind_name(kind));
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "./clifftype";

  run(1, "Euclidean Pin sequence (CLI)", [&] {
    return sequence_criterion(cli, "pin", {1, 1, 1, 0, -1, -1, -1, 0, 1, 1, 1});
  });

  run(2, "Euclidean Spin sequence (CLI)", [&] {
    return sequence_criterion(cli, "spin", {1, 1, 0, -1, -1, -1, 0, 1, 1, 1, 0});
  });

  run(3, "brute = closed, p+q <= 12 and <= 16", [&] {
    int cases = 0;
    bool ok = for_all_signatures(12, [&](const Signature& sig, GroupKind kind) {
      ++cases;
      return fs_indicator_brute(sig, kind) == fs_indicator_closed(sig, kind);
    });
    if (!ok || cases != 182) return false;
    return for_all_signatures(16, [&](const Signature& sig, GroupKind kind) {
      return fs_indicator_brute(sig, kind) == fs_indicator_closed(sig, kind);
    });
  });

  run(4, "matrix oracle, p+q <= 10", [&] {
    return for_all_signatures(10, [&](const Signature& sig, GroupKind kind) {
      int cc = constituent_count(sig, kind);
      if (character_norm(sig, kind) != cc) return false;
      Rational r = fs_sum_matrix(sig, kind);
      return r.den == 1 && r.num == cc * fs_indicator_closed(sig, kind).value;
    });
  });

  run(5, "Burnside counts, p+q <= 10", [&] {
    bool ok = for_all_signatures(10, [&](const Signature& sig, GroupKind kind) {
      auto info = burnside_spinor_solve(sig, kind);
      if (info.num_one_dim + info.num_spinor * info.spinor_dim * info.spinor_dim !=
          info.group_order) {
        return false;
      }
      return conjugacy_classes_brute(sig, kind).class_count == info.class_count;
    });
    for (int n = 2; n <= 10 && ok; n += 2) {
      auto info = burnside_spinor_solve(Signature{n, 0}, GroupKind::Pin);
      ok = info.class_count == (1ull << n) + 1 && info.num_spinor == 1 &&
           info.spinor_dim == (1ull << (n / 2));
    }
    return ok;
  });

  run(6, "signature laws via closed form, p,q <= 32", [&] {
    for (long long p = 0; p <= 32; ++p) {
      for (long long q = 0; q <= 32; ++q) {
        for (GroupKind kind : {GroupKind::Pin, GroupKind::Spin}) {
          auto t = fs_indicator_closed(p, q, kind);
          if (t != fs_indicator_closed((p - q) % 8 + 16, 16, kind)) return false;
          if (t != fs_indicator_closed(p + 1, q + 1, kind)) return false;
        }
        if (fs_indicator_closed(p, q, GroupKind::Spin) !=
            fs_indicator_closed(q, p, GroupKind::Spin)) {
          return false;
        }
        if (fs_indicator_closed(p, p, GroupKind::Pin).value != 1) return false;
        if (fs_indicator_closed(p + 1, p, GroupKind::Spin).value != 1) return false;
      }
    }
    if (fs_indicator_closed(1, 0, GroupKind::Pin) == fs_indicator_closed(0, 1, GroupKind::Pin)) {
      return false;
    }
    for (long long p = 1; p <= 32; ++p) {
      for (GroupKind kind : {GroupKind::Pin, GroupKind::Spin}) {
        if (fs_indicator_closed(p, 1, kind) != fs_indicator_closed(p - 1, 0, kind)) return false;
      }
    }
    return fs_indicator_closed(25, 1, GroupKind::Pin).value == 1 &&
           fs_indicator_closed(9, 1, GroupKind::Pin).value == 1 &&
           fs_indicator_closed(32, 0, GroupKind::Pin).value == 1;
  });

  run(7, "core algebra properties", [&] {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100000; ++trial) {
      int n = static_cast<int>(rng() % 13);
      int p = n == 0 ? 0 : static_cast<int>(rng() % (n + 1));
      Signature sig{p, n - p};
      std::uint32_t full = sig.full_mask();
      SignedMonomial a{rng() % 2 ? +1 : -1, static_cast<std::uint32_t>(rng()) & full};
      SignedMonomial b{rng() % 2 ? +1 : -1, static_cast<std::uint32_t>(rng()) & full};
      SignedMonomial c{rng() % 2 ? +1 : -1, static_cast<std::uint32_t>(rng()) & full};
      if (!(mono_mul(sig, mono_mul(sig, a, b), c) == mono_mul(sig, a, mono_mul(sig, b, c)))) {
        return false;
      }
    }
    for (int n = 0; n <= 16; ++n) {
      for (int p = 0; p <= n; p += (n > 12 ? n : 1)) {  // all splits for small n
        Signature sig{p, n - p};
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
          auto mask = static_cast<std::uint32_t>(m);
          SignedMonomial mono{+1, mask};
          if (!(mono_mul(sig, mono, mono) ==
                SignedMonomial{mono_square_sign(sig, mask), 0})) {
            return false;
          }
        }
      }
    }
    std::mt19937 rng2(31337);
    for (int n = 0; n <= 8; ++n) {
      for (int p = 0; p <= n; ++p) {
        Signature sig{p, n - p};
        auto gammas = build_gammas(sig);
        std::uint32_t full = sig.full_mask();
        for (int trial = 0; trial < 1000; ++trial) {
          SignedMonomial a{rng2() % 2 ? +1 : -1, static_cast<std::uint32_t>(rng2()) & full};
          SignedMonomial b{rng2() % 2 ? +1 : -1, static_cast<std::uint32_t>(rng2()) & full};
          if (!(rep_element(gammas, mono_mul(sig, a, b)) ==
                rep_element(gammas, a) * rep_element(gammas, b))) {
            return false;
          }
        }
      }
    }
    return true;
  });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
