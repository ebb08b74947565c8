#include "qprofile/verify.hpp"

#include <algorithm>
#include <functional>

#include "qprofile/fforacle.hpp"
#include "qprofile/profiles.hpp"
#include "qprofile/tableaux.hpp"

namespace qprofile::verify {

namespace {

std::vector<Partition> mu_up_to(int n) {
  return partitions_up_to(n, IdealBound::inclusive);
}

std::string case_tag(const Partition& mu, const std::string& context) {
  return context + ", mu=" + mu.to_string();
}

// Wraps a check body so a thrown contract violation becomes a failed check
// rather than an aborted suite.
CheckResult run_check(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult result;
  result.name = name;
  try {
    body(result);
  } catch (const std::exception& e) {
    result.fail(std::string("exception: ") + e.what());
  }
  return result;
}

}  // namespace

bool all_pass(const Report& report) {
  return std::all_of(report.begin(), report.end(),
                     [](const CheckResult& c) { return c.pass; });
}

CheckResult check_closed_form_regnil(int max_n) {
  return run_check("closed-form: regular nilpotent product", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      SimilarityType tau({{1, Partition{n}}});
      for (const auto& mu : mu_up_to(n)) {
        ++r.cases;
        if (sigma(mu, tau) != sigma_regnil(mu, n))
          r.fail(case_tag(mu, "n=" + std::to_string(n)));
      }
    }
  });
}

CheckResult check_closed_form_simple(int max_n, bool full_size_only) {
  std::string name = full_size_only
                         ? "closed-form: simple product (|mu| = n and empty mu)"
                         : "closed-form: simple product (all |mu| <= n, as stated)";
  return run_check(name, [&, full_size_only](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      SimilarityType tau({{n, Partition{1}}});
      for (const auto& mu : mu_up_to(n)) {
        if (full_size_only && !(mu.empty() || mu.sum() == n)) continue;
        ++r.cases;
        RatFunc product = sigma_simple(mu, n);
        RatFunc actual(sigma(mu, tau));
        if (actual != product)
          r.fail(case_tag(mu, "n=" + std::to_string(n)) + ": sigma=" + actual.to_string() +
                 " vs product=" + product.to_string());
      }
    }
  });
}

CheckResult check_whittaker_expansions(int max_n) {
  return run_check("q-Whittaker expansions of h_n and p_n", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      SymFunc h_rhs(n), p_rhs(n);
      for (const auto& mu : partitions_of(n)) {
        PolyT hc = PolyT::one();
        RatFunc pc = RatFunc(PolyT::monomial(n) - PolyT::one()) /
                     RatFunc(PolyT::monomial(mu.first()) - PolyT::one());
        for (std::size_t i = 1; i < mu.length(); ++i) {
          PolyT binom = q_binomial(mu[i - 1], mu[i]);
          hc *= PolyT::monomial(static_cast<int>(binom2(mu[i] + 1))) * binom;
          pc *= RatFunc(PolyT::monomial(static_cast<int>(binom2(mu[i]))) * binom);
        }
        SymFunc w = q_whittaker(mu);
        int sign = (n - mu.first()) % 2 == 0 ? 1 : -1;
        h_rhs = h_rhs + (RatFunc(sign) * RatFunc(hc)) * w;
        p_rhs = p_rhs + (RatFunc(sign) * pc) * w;
      }
      ++r.cases;
      if (from_basis(BasisId::h, Partition{n}) != h_rhs)
        r.fail("h expansion at n=" + std::to_string(n));
      ++r.cases;
      if (from_basis(BasisId::p, Partition{n}) != p_rhs)
        r.fail("p expansion at n=" + std::to_string(n));
    }
  });
}

CheckResult check_dualities(int max_n) {
  return run_check("Hall dualities <P,H> and <W,W~>", [&](CheckResult& r) {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& lam : partitions_of(n)) {
        SymFunc p = hl_p(lam);
        SymFunc w = q_whittaker(lam);
        for (const auto& mu : partitions_of(n)) {
          ++r.cases;
          RatFunc expected = lam == mu ? RatFunc::one() : RatFunc::zero();
          if (hall_inner(p, transformed_hl(mu)) != expected)
            r.fail("<P,H> at " + lam.to_string() + "," + mu.to_string());
          if (hall_inner(w, dual_q_whittaker(mu)) != expected)
            r.fail("<W,W~> at " + lam.to_string() + "," + mu.to_string());
        }
      }
    }
  });
}

CheckResult check_omega_whittaker(int max_n) {
  return run_check("omega H_{lambda'} = W_lambda", [&](CheckResult& r) {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& lam : partitions_of(n)) {
        ++r.cases;
        if (omega(transformed_hl(conjugate(lam))) != q_whittaker(lam))
          r.fail(lam.to_string());
      }
    }
  });
}

CheckResult check_dual_whittaker_routes(int max_n) {
  return run_check("dual q-Whittaker: omega-P route vs alphabet route", [&](CheckResult& r) {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& lam : partitions_of(n)) {
        ++r.cases;
        PolyT onemt(std::vector<BigQ>{BigQ(1), BigQ(-1)});
        RatFunc scale = RatFunc::one() / RatFunc(onemt.pow(lam.first()));
        for (std::size_t i = 0; i < lam.length(); ++i) {
          scale /= RatFunc(q_factorial(lam[i] - lam[i + 1]));
        }
        SymFunc via_alphabet = scale * pleth_times_onem(q_whittaker(lam));
        if (via_alphabet != dual_q_whittaker(lam)) r.fail(lam.to_string());
      }
    }
  });
}

CheckResult check_modified_transform(int max_n) {
  return run_check("modified HL = t^{n(lambda)} H(x; 1/t)", [&](CheckResult& r) {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& lam : partitions_of(n)) {
        ++r.cases;
        RatFunc power = RatFunc::t_power(n_stat(lam));
        SymFunc transformed = map_coeffs(transformed_hl(lam), [&](const RatFunc& c) {
          return power * c.subst_invert();
        });
        if (transformed != modified_hl(lam)) r.fail(lam.to_string());
      }
    }
  });
}

CheckResult check_w_specializations(int max_n) {
  return run_check("W at t=0 is Schur, at t=1 is elementary", [&](CheckResult& r) {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& lam : partitions_of(n)) {
        ++r.cases;
        SymFunc w = q_whittaker(lam);
        if (specialize_t(w, BigQ(0)) != from_basis(BasisId::s, lam))
          r.fail("t=0 at " + lam.to_string());
        if (specialize_t(w, BigQ(1)) != from_basis(BasisId::e, conjugate(lam)))
          r.fail("t=1 at " + lam.to_string());
      }
    }
  });
}

CheckResult check_pieri(int max_n) {
  return run_check("Pieri rule for Hall-Littlewood P", [&](CheckResult& r) {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& mu : mu_up_to(n)) {
        ++r.cases;
        SymFunc lhs = multiply(hl_p(conjugate(mu)),
                               from_basis(BasisId::e, Partition{n - mu.sum()}));
        SymFunc rhs(n);
        for (const auto& eta : partitions_of(n)) {
          PolyT psi = pieri_psi(eta, mu);
          if (psi.is_zero()) continue;
          rhs = rhs + RatFunc(psi) * hl_p(conjugate(eta));
        }
        if (lhs != rhs) r.fail(case_tag(mu, "n=" + std::to_string(n)));
      }
    }
  });
}

CheckResult check_b_scalar_product(int max_n) {
  return run_check("b recurrence vs <W,h> scalar-product route", [&](CheckResult& r) {
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& mu : partitions_of(n)) {
        PolyT drops = PolyT::one();
        for (std::size_t i = 0; i < mu.length(); ++i)
          drops *= q_factorial(mu[i] - mu[i + 1]);
        SymFunc w = q_whittaker(mu);
        for (const auto& nu : partitions_of(n)) {
          ++r.cases;
          PolyT parts = PolyT::one();
          for (std::size_t i = 0; i < nu.length(); ++i) parts *= q_factorial(nu[i]);
          RatFunc lhs = RatFunc(b_poly(mu, nu)) * RatFunc(drops);
          RatFunc rhs = RatFunc(parts) * hall_inner(w, from_basis(BasisId::h, nu));
          if (lhs != rhs) r.fail(mu.to_string() + "," + nu.to_string());
        }
      }
    }
  });
}

CheckResult check_whittaker_product(int max_n) {
  return run_check("one-row W product expands with b coefficients", [&](CheckResult& r) {
    PolyT onemt(std::vector<BigQ>{BigQ(1), BigQ(-1)});
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& nu : partitions_of(n)) {
        ++r.cases;
        SymFunc lhs = SymFunc::unit();
        for (int part : nu.parts()) lhs = multiply(lhs, q_whittaker(Partition{part}));
        SymFunc rhs(n);
        for (const auto& mu : partitions_of(n)) {
          PolyT b = b_poly(mu, nu);
          if (b.is_zero()) continue;
          rhs = rhs + RatFunc(onemt.pow(mu.sum() - mu.first()) * b) * q_whittaker(mu);
        }
        if (lhs != rhs) r.fail(nu.to_string());
      }
    }
  });
}

CheckResult check_route_consistency(int max_n) {
  return run_check("sigma main route vs inverse-transition route", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& tau : all_types_of_size(n)) {
        for (const auto& mu : partitions_of(n)) {
          ++r.cases;
          if (sigma(mu, tau) != sigma_full_via_atilde(mu, tau))
            r.fail(case_tag(mu, tau.to_string()));
        }
      }
    }
  });
}

CheckResult check_diagonal_theorem(int max_n) {
  return run_check("diagonalizable types match the b-polynomial product", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& nu : partitions_of(n)) {
        SimilarityType tau = diagonalizable_type(nu);
        for (const auto& mu : partitions_of(n)) {
          ++r.cases;
          if (sigma(mu, tau) != sigma_diagonal(mu, nu))
            r.fail(mu.to_string() + "," + nu.to_string());
        }
      }
    }
  });
}

CheckResult check_bcrr_residuals(int max_n) {
  return run_check("linear relations among sigma values", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& tau : all_types_of_size(n)) {
        for (const auto& nu : partitions_up_to(n, IdealBound::strict)) {
          ++r.cases;
          if (!bcrr_residual(tau, nu).is_zero())
            r.fail(tau.to_string() + ", nu=" + nu.to_string());
        }
      }
    }
  });
}

CheckResult check_psisum(int max_size) {
  return run_check("alternating psi-sum closed form", [&](CheckResult& r) {
    for (int a = 0; a <= max_size; ++a) {
      for (const auto& eta : partitions_of(a)) {
        for (int b = 0; b <= max_size; ++b) {
          for (const auto& nu : partitions_of(b)) {
            ++r.cases;
            if (!psisum_check(eta, nu))
              r.fail("eta=" + eta.to_string() + ", nu=" + nu.to_string());
          }
        }
      }
    }
  });
}

CheckResult check_bcrr_determinant(int max_n) {
  return run_check("order-ideal determinant is nonzero with product form", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      ++r.cases;
      if (!bcrr_determinant_check(n)) r.fail("n=" + std::to_string(n));
    }
  });
}

CheckResult check_partial_symbolic(int max_n) {
  return run_check("partial profiles: binomial case and anti-invariant reduction",
                   [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& tau : all_types_of_size(n)) {
        for (int m = 1; m <= n; ++m) {
          ++r.cases;
          if (pi_partial(ProfileTuple{m}, tau) != q_binomial(n, m))
            r.fail(tau.to_string() + ", m=" + std::to_string(m));
        }
        for (int m = 1; m <= n; ++m) {
          for (int fold = 1; m * (fold + 1) <= n; ++fold) {
            ++r.cases;
            if (anti_invariant_count(m, fold, tau) !=
                pi_partial(ProfileTuple(fold + 1, m), tau))
              r.fail(tau.to_string() + ", m=" + std::to_string(m) +
                     ", fold=" + std::to_string(fold));
          }
        }
      }
    }
  });
}

CheckResult check_positivity(int max_n, const std::vector<long long>& primes) {
  return run_check("integrality and positivity across the type suite", [&](CheckResult& r) {
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& tau : all_types_of_size(n)) {
        for (const auto& lam : partitions_of(n)) {
          ++r.cases;
          // x_coeff itself enforces nonnegative integer coefficients.
          (void)x_coeff(lam, tau);
        }
        for (const auto& mu : mu_up_to(n)) {
          ++r.cases;
          PolyT s = sigma(mu, tau);  // integrality enforced inside
          for (long long p : primes) {
            if (!is_realizable(tau, p)) continue;
            if (s.eval(to_bigq(p)) < 0)
              r.fail(case_tag(mu, tau.to_string()) + " at t=" + std::to_string(p));
          }
        }
      }
    }
  });
}

namespace {

struct RealizedType {
  SimilarityType tau;
  FpMatrix matrix;
};

std::vector<RealizedType> realized_types(int n, long long p) {
  std::vector<RealizedType> out;
  for (const auto& tau : all_types_of_size(n)) {
    if (!is_realizable(tau, p)) continue;
    out.push_back({tau, build_matrix_of_type(tau, p)});
  }
  return out;
}

}  // namespace

CheckResult check_sigma_oracle(int max_n, const std::vector<long long>& primes) {
  return run_check("sigma vs exhaustive subspace counts", [&](CheckResult& r) {
    for (long long p : primes) {
      for (int n = 1; n <= max_n; ++n) {
        std::vector<RealizedType> suite = realized_types(n, p);
        // A scalar matrix realizes the same type as the zero matrix; check
        // both concrete operators.
        suite.push_back({diagonalizable_type(Partition{n}), FpMatrix::scalar(p, n, 1)});
        for (const auto& [tau, delta] : suite) {
          for (const auto& mu : mu_up_to(n)) {
            ++r.cases;
            BigQ expected = sigma(mu, tau).eval(to_bigq(p));
            if (expected != to_bigq(sigma_bruteforce(mu, delta)))
              r.fail(case_tag(mu, tau.to_string()) + " at p=" + std::to_string(p));
          }
        }
      }
    }
  });
}

CheckResult check_flags_oracle(int max_n, const std::vector<long long>& primes) {
  return run_check("monomial coefficients vs exhaustive flag counts", [&](CheckResult& r) {
    for (long long p : primes) {
      for (int n = 1; n <= max_n; ++n) {
        for (const auto& [tau, delta] : realized_types(n, p)) {
          for (const auto& lam : partitions_of(n)) {
            BigQ expected = x_coeff(lam, tau).eval(to_bigq(p));
            std::vector<int> comp = lam.parts();
            std::sort(comp.begin(), comp.end());
            do {
              ++r.cases;
              if (expected != to_bigq(flag_count_bruteforce(WeakComposition(comp), delta))) {
                r.fail(tau.to_string() + ", alpha=" + WeakComposition(comp).to_string() +
                       " at p=" + std::to_string(p));
              }
            } while (std::next_permutation(comp.begin(), comp.end()));
          }
        }
      }
    }
  });
}

CheckResult check_partial_oracle(int max_n, const std::vector<long long>& primes) {
  return run_check("partial profiles and anti-invariants vs oracle", [&](CheckResult& r) {
    for (long long p : primes) {
      for (int n = 1; n <= max_n; ++n) {
        // Tuples with entries in [0, n], nonzero last entry, sum <= n.
        std::vector<ProfileTuple> tuples;
        std::function<void(ProfileTuple&, int)> gen = [&](ProfileTuple& cur, int sum) {
          if (!cur.empty() && cur.back() != 0) tuples.push_back(cur);
          if (static_cast<int>(cur.size()) >= n) return;
          for (int v = 0; v <= n - sum; ++v) {
            cur.push_back(v);
            gen(cur, sum + v);
            cur.pop_back();
          }
        };
        ProfileTuple cur;
        gen(cur, 0);
        for (const auto& [tau, delta] : realized_types(n, p)) {
          for (const auto& rho : tuples) {
            ++r.cases;
            BigQ expected = pi_partial(rho, tau).eval(to_bigq(p));
            if (expected != to_bigq(partial_profile_bruteforce(rho, delta))) {
              std::string desc;
              for (int v : rho) desc += std::to_string(v) + ",";
              r.fail(tau.to_string() + ", rho=(" + desc + ") at p=" + std::to_string(p));
            }
          }
          for (int m = 1; m <= n; ++m) {
            for (int fold = 1; m * (fold + 1) <= n; ++fold) {
              ++r.cases;
              BigQ expected = anti_invariant_count(m, fold, tau).eval(to_bigq(p));
              if (expected != to_bigq(anti_invariant_bruteforce(m, fold, delta)))
                r.fail(tau.to_string() + ", anti m=" + std::to_string(m) +
                       " fold=" + std::to_string(fold) + " at p=" + std::to_string(p));
            }
          }
        }
      }
    }
  });
}

CheckResult check_diagonal_oracle(int max_n, const std::vector<long long>& primes) {
  return run_check("diagonal operators vs oracle", [&](CheckResult& r) {
    for (long long p : primes) {
      for (int n = 1; n <= max_n; ++n) {
        for (const auto& nu : partitions_of(n)) {
          if (static_cast<long long>(nu.length()) > p) continue;  // not enough eigenvalues
          FpMatrix delta(p, n);
          int pos = 0;
          for (std::size_t i = 0; i < nu.length(); ++i) {
            for (int k = 0; k < nu[i]; ++k) {
              delta.set(pos, pos, static_cast<long long>(i));
              ++pos;
            }
          }
          for (const auto& mu : partitions_of(n)) {
            ++r.cases;
            if (sigma_diagonal(mu, nu).eval(to_bigq(p)) != to_bigq(sigma_bruteforce(mu, delta)))
              r.fail(mu.to_string() + "," + nu.to_string() + " at p=" + std::to_string(p));
          }
        }
      }
    }
  });
}

CheckResult check_krylov_oracle(int max_n, const std::vector<long long>& primes,
                                int max_k, int max_ell) {
  return run_check("Krylov spanning probability vs oracle", [&](CheckResult& r) {
    for (long long p : primes) {
      for (int n = 1; n <= max_n; ++n) {
        for (const auto& [tau, delta] : realized_types(n, p)) {
          for (int k = 1; k <= max_k; ++k) {
            for (int ell = 1; ell <= max_ell; ++ell) {
              ++r.cases;
              BigQ expected = krylov_prob(k, ell, tau).eval_at(to_bigq(p));
              if (expected != krylov_bruteforce(k, ell, delta))
                r.fail(tau.to_string() + ", k=" + std::to_string(k) +
                       ", ell=" + std::to_string(ell) + " at p=" + std::to_string(p));
            }
          }
        }
      }
    }
  });
}

Report identities_suite(int max_n) {
  return {
      check_closed_form_regnil(max_n),
      check_closed_form_simple(max_n, true),
      check_whittaker_expansions(max_n),
      check_dualities(max_n),
      check_omega_whittaker(max_n),
      check_dual_whittaker_routes(std::min(max_n, 5)),
      check_modified_transform(max_n),
      check_w_specializations(max_n),
      check_pieri(max_n),
      check_b_scalar_product(std::min(max_n, 5)),
      check_whittaker_product(max_n),
      check_route_consistency(std::min(max_n, 5)),
      check_diagonal_theorem(std::min(max_n, 5)),
      check_bcrr_residuals(std::min(max_n, 4)),
      check_psisum(std::min(max_n, 5)),
      check_bcrr_determinant(std::min(max_n, 4)),
      check_partial_symbolic(std::min(max_n, 5)),
  };
}

Report sigma_suite(int max_n, const std::vector<long long>& primes) {
  return {check_sigma_oracle(max_n, primes),
          check_positivity(max_n, primes)};
}

Report flags_suite(int max_n, const std::vector<long long>& primes) {
  return {check_flags_oracle(max_n, primes)};
}

Report partial_suite(int max_n, const std::vector<long long>& primes) {
  return {check_partial_symbolic(max_n),
          check_partial_oracle(max_n, primes)};
}

Report krylov_suite(int max_n, const std::vector<long long>& primes) {
  return {check_krylov_oracle(max_n, primes, 3, 3)};
}

}  // namespace qprofile::verify
