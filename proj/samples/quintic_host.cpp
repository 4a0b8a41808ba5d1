// Builds the Fano hosts of the quintic threefold and prints the SOD bookkeeping.

#include "fanohost/cayley_builder.hpp"
#include "fanohost/sod_ledger.hpp"

#include <iostream>

int main() {
  using namespace fanohost;
  const auto quintic = make_ci(4, {5});
  std::cout << quintic.label() << ": dim " << quintic.dimension() << ", chi " << euler_char_ci(quintic)
            << ", h^{2,1} " << hodge_numbers(quintic).at(2, 1) << "\n";

  for (const auto& host : candidate_hosts(quintic)) {
    const auto euler = euler_consistency(host);
    std::cout << to_string(host.kind) << " over " << host.base.label() << ": dim X = " << host.dim_x
              << ", -K_X = " << host.anti_canonical.str() << ", Fano " << (host.fano ? "yes" : "no")
              << ", chi(X) = " << *euler.lhs << " = " << *euler.rhs << " (blocks)\n";
  }
  std::cout << "Fano dimension <= " << fano_dimension_upper_bound(quintic).bound << "\n";
}
