// Timing harness for the exhaustive searches; prints one line per case.
// Usage: zsum-bench [spec ...]   (defaults to a mixed batch)

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/oracle.hpp"
#include "zsum/rational.hpp"

using namespace zsum;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void bench_one(const std::string& spec) {
  GroupSpec G = GroupSpec::parse(spec);
  SearchOptions opts;
  opts.max_order = 64;
  opts.max_order_cross = 64;

  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t d = davenport_exact(G, opts);
  double td = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  std::uint64_t e = eta_exact(G, opts);
  double te = ms_since(t0);

  std::string kpart = "k=skip";
  double tk = 0.0;
  if (G.order() <= 32) {
    t0 = std::chrono::steady_clock::now();
    LittleCrossResult k = little_cross_exact(G, opts);
    tk = ms_since(t0);
    kpart = "k=" + to_fraction_string(k.value) + " (" + std::to_string(k.witnesses.size()) +
            " witnesses)";
  }

  std::printf("%-10s D=%-3llu %8.1fms   eta=%-3llu %8.1fms   %-28s %8.1fms\n", spec.c_str(),
              static_cast<unsigned long long>(d), td, static_cast<unsigned long long>(e), te,
              kpart.c_str(), tk);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> specs;
  for (int i = 1; i < argc; ++i) specs.emplace_back(argv[i]);
  if (specs.empty())
    specs = {"8", "12", "2,2", "2,4", "3,3", "16", "24", "2,12", "2,2,2", "2,2,6", "32", "47", "48", "2,24"};
  for (const auto& s : specs) bench_one(s);
  return 0;
}
