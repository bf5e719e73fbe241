#include "redlab/machina.hpp"
#include "redlab/pi1.hpp"

namespace redlab::pi1 {

std::map<std::uint64_t, std::uint64_t> tabulate_candidate(const machina::Machine& m,
                                                          std::uint64_t e, long long max_stage,
                                                          long long budget) {
  std::map<std::uint64_t, std::uint64_t> phi;
  for (long long s = 0; s <= max_stage + 2; ++s) {
    const auto code = cantor_pair(e, static_cast<std::uint64_t>(s));
    const auto r = machina::run(m, machina::unary(static_cast<long long>(code)), budget);
    if (r.halt == machina::Halt::Halted)
      phi[static_cast<std::uint64_t>(s)] = static_cast<std::uint64_t>(machina::output_value(r));
  }
  return phi;
}

}  // namespace redlab::pi1
