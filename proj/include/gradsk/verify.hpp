#pragma once

#include <cstdint>

#include "gradsk/io.hpp"

namespace gradsk {

struct SuiteReport {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> details;
  bool pass() const { return failures == 0 && cases > 0; }
};

// deterministic splitmix64; identical on every platform for a given seed
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long below(long n) { return n <= 1 ? 0 : static_cast<long>(next() % n); }
  Int int_in(long lo, long hi) { return Int(lo + below(hi - lo + 1)); }

private:
  std::uint64_t state_;
};

SuiteReport suite_snf(std::uint64_t seed, int count = 1000);
SuiteReport suite_group_laws(std::uint64_t seed, int count = 150);
SuiteReport suite_lembe(std::uint64_t seed, int min_samples_per_family = 500);
SuiteReport suite_toex_worked();
SuiteReport suite_toex_inverse_family();
SuiteReport suite_toex_quaternion_family();
SuiteReport suite_sktotal_random(std::uint64_t seed, int count = 200);
SuiteReport suite_trtot(std::uint64_t seed, int count = 60);
SuiteReport suite_gendihedral();
SuiteReport suite_cross_formula(std::uint64_t seed, int min_instances = 50);
SuiteReport suite_exponent_law(std::uint64_t seed, int min_count = 500);
SuiteReport suite_determinism(std::uint64_t seed);

std::vector<std::string> suite_names();
// run the named suites (all of them when names is empty)
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names,
                                    std::uint64_t seed);

// random-instance generators shared by the suites
AlgebraPresentation random_trex_presentation(Rng& rng, int pairs,
                                             InvolutionDescriptor& tau_out);
ValuedSymbolInput random_toex_input(Rng& rng);

}  // namespace gradsk
