#pragma once

#include <string>
#include <vector>

namespace qprofile::verify {

struct CheckResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string detail;  // first counterexample or error

  void fail(const std::string& d) {
    if (pass) {
      pass = false;
      detail = d;
    }
  }
};

using Report = std::vector<CheckResult>;

bool all_pass(const Report& report);

// Symbolic identity checks. max_n bounds the degree swept.
CheckResult check_closed_form_regnil(int max_n);
// full_size_only restricts the simple-type comparison to |mu| in {0, n},
// the range on which the product formula counts stabilized profiles.
CheckResult check_closed_form_simple(int max_n, bool full_size_only);
CheckResult check_whittaker_expansions(int max_n);
CheckResult check_dualities(int max_n);
CheckResult check_omega_whittaker(int max_n);
CheckResult check_dual_whittaker_routes(int max_n);
CheckResult check_modified_transform(int max_n);
CheckResult check_w_specializations(int max_n);
CheckResult check_pieri(int max_n);
CheckResult check_b_scalar_product(int max_n);
CheckResult check_whittaker_product(int max_n);
CheckResult check_route_consistency(int max_n);
CheckResult check_diagonal_theorem(int max_n);
CheckResult check_bcrr_residuals(int max_n);
CheckResult check_psisum(int max_size);
CheckResult check_bcrr_determinant(int max_n);
CheckResult check_partial_symbolic(int max_n);
CheckResult check_positivity(int max_n, const std::vector<long long>& primes);

// Differential checks against the finite-field oracle.
CheckResult check_sigma_oracle(int max_n, const std::vector<long long>& primes);
CheckResult check_flags_oracle(int max_n, const std::vector<long long>& primes);
CheckResult check_partial_oracle(int max_n, const std::vector<long long>& primes);
CheckResult check_diagonal_oracle(int max_n, const std::vector<long long>& primes);
CheckResult check_krylov_oracle(int max_n, const std::vector<long long>& primes,
                                int max_k, int max_ell);

// Named suites used by the command line tool.
Report identities_suite(int max_n);
Report sigma_suite(int max_n, const std::vector<long long>& primes);
Report flags_suite(int max_n, const std::vector<long long>& primes);
Report partial_suite(int max_n, const std::vector<long long>& primes);
Report krylov_suite(int max_n, const std::vector<long long>& primes);

}  // namespace qprofile::verify
