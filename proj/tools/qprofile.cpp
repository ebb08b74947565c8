// Command line front end: expansions, profile counts, partial profiles,
// anti-invariant counts, Krylov probabilities and verification suites.
//
// Exit codes: 0 success, 2 validation error, 3 verification failure,
// 4 enumeration budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qprofile/config.hpp"
#include "qprofile/json_io.hpp"
#include "qprofile/profiles.hpp"
#include "qprofile/verify.hpp"

using nlohmann::json;
using namespace qprofile;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;
constexpr int kExitBudget = 4;

json parse_json_or_file(const std::string& text) {
  std::string trimmed = text;
  std::size_t first = trimmed.find_first_not_of(" \t\n");
  if (first != std::string::npos && (trimmed[first] == '{' || trimmed[first] == '[')) {
    return json::parse(trimmed);
  }
  std::ifstream in(text);
  if (!in) throw std::invalid_argument("cannot open file: " + text);
  json j;
  in >> j;
  return j;
}

SimilarityType parse_type(const std::string& text) {
  return type_from_json(parse_json_or_file(text));
}

Partition parse_partition(const std::string& text) {
  return partition_from_json(json::parse(text));
}

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_realizable(const SimilarityType& tau, long long p) {
  if (!is_prime_ll(p)) throw std::invalid_argument("--at-prime expects a prime");
  if (!is_realizable(tau, p)) {
    throw std::invalid_argument("type " + tau.to_string() + " is not realizable over F_" +
                                std::to_string(p));
  }
}

void emit(const json& payload, const std::string& json_path) {
  if (json_path.empty()) return;
  std::ofstream out(json_path);
  if (!out) throw std::invalid_argument("cannot write: " + json_path);
  out << payload.dump(2) << "\n";
}

json poly_payload(const std::string& kind, const PolyT& p) {
  return json{{"kind", kind}, {"value", to_json(RatFunc(p))}, {"pretty", p.to_string()}};
}

void print_expansion(const std::map<Partition, RatFunc>& coeffs, const std::string& tag) {
  if (coeffs.empty()) {
    std::cout << "  0\n";
    return;
  }
  for (const auto& [part, value] : coeffs) {
    std::cout << "  " << to_json(part).dump() << ": " << value.to_string() << "\n";
  }
  (void)tag;
}

std::vector<long long> parse_primes(const std::string& csv) {
  std::vector<long long> primes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long long p = std::stoll(item);
    if (!is_prime_ll(p)) throw std::invalid_argument("--primes: " + item + " is not prime");
    primes.push_back(p);
  }
  if (primes.empty()) throw std::invalid_argument("--primes: empty list");
  return primes;
}

int report_and_exit_code(const verify::Report& report) {
  bool ok = true;
  for (const auto& check : report) {
    std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << " (" << check.cases
              << " cases)";
    if (!check.pass) std::cout << " -- first counterexample: " << check.detail;
    std::cout << "\n";
    ok = ok && check.pass;
  }
  return ok ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subspace-profile counts over finite fields"};
  app.require_subcommand(1);

  std::string type_text, mu_text, rho_text, part_text, to_basis_tag = "s";
  std::string json_path, primes_text = "2,3";
  int n_arg = -1, k_arg = 1, l_arg = 1, m_arg = 0, fold_arg = 1, max_n = 4;
  long long at_prime = 0;

  auto* expand = app.add_subcommand("expand", "expand a named symmetric function in a basis");
  std::string func;
  expand->add_option("func", func,
                     "one of hn, pn, W, Wdual, P, H, Hmod, flaggf")->required();
  expand->add_option("--n", n_arg, "degree for hn/pn");
  expand->add_option("--part", part_text, "index partition as a JSON array");
  expand->add_option("--type", type_text, "similarity type (JSON or file) for flaggf");
  expand->add_option("--to", to_basis_tag, "target basis tag (m,e,h,p,s,P,H,Hmod,W,Wdual)");
  expand->add_option("--json", json_path, "write the expansion as JSON to this path");

  auto* profile = app.add_subcommand("profile", "count subspaces with a given profile");
  profile->add_option("--type", type_text, "similarity type (JSON or file)")->required();
  profile->add_option("--mu", mu_text, "profile partition as a JSON array")->required();
  profile->add_option("--at-prime", at_prime, "evaluate at t = p (checks realizability)");
  profile->add_option("--json", json_path, "write the result as JSON to this path");

  auto* table = app.add_subcommand("profile-table", "sigma for every profile of size <= n");
  table->add_option("--type", type_text, "similarity type (JSON or file)")->required();
  table->add_option("--at-prime", at_prime, "evaluate at t = p (checks realizability)");
  table->add_option("--json", json_path, "write the table as JSON to this path");

  auto* partial = app.add_subcommand("partial", "count subspaces with a partial profile");
  partial->add_option("--type", type_text, "similarity type (JSON or file)")->required();
  partial->add_option("--rho", rho_text, "partial profile as a JSON array")->required();
  partial->add_option("--at-prime", at_prime, "evaluate at t = p (checks realizability)");
  partial->add_option("--json", json_path, "write the result as JSON to this path");

  auto* anti = app.add_subcommand("anti-invariant", "count anti-invariant subspaces");
  anti->add_option("--type", type_text, "similarity type (JSON or file)")->required();
  anti->add_option("--m", m_arg, "subspace dimension")->required();
  anti->add_option("--fold", fold_arg, "number of applications of the operator");
  anti->add_option("--at-prime", at_prime, "evaluate at t = p (checks realizability)");
  anti->add_option("--json", json_path, "write the result as JSON to this path");

  auto* krylov = app.add_subcommand("krylov", "truncated Krylov spanning probability");
  krylov->add_option("--type", type_text, "similarity type (JSON or file)")->required();
  krylov->add_option("--k", k_arg, "number of random vectors");
  krylov->add_option("--l", l_arg, "polynomial degree bound");
  krylov->add_option("--at-prime", at_prime, "evaluate at t = p (checks realizability)");
  krylov->add_option("--json", json_path, "write the result as JSON to this path");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify_cmd->add_option("suite", suite, "sigma | flags | partial | krylov | identities | all")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "largest dimension swept (default 4)");
  verify_cmd->add_option("--primes", primes_text, "comma separated primes (default 2,3)");
  verify_cmd->add_option("--json", json_path, "write the report as JSON to this path");

  auto* selftest = app.add_subcommand("selftest", "fast built-in verification");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand) {
      SymFunc f = SymFunc::unit();
      if (func == "hn" || func == "pn") {
        if (n_arg < 0) throw std::invalid_argument("expand " + func + " needs --n");
        f = from_basis(func == "hn" ? BasisId::h : BasisId::p, Partition{n_arg});
      } else if (func == "flaggf") {
        if (type_text.empty()) throw std::invalid_argument("expand flaggf needs --type");
        f = flag_gf(parse_type(type_text));
      } else {
        if (part_text.empty()) throw std::invalid_argument("expand " + func + " needs --part");
        f = basis_element(basis_from_string(func), parse_partition(part_text));
      }
      BasisId target = basis_from_string(to_basis_tag);
      auto coeffs = expand_in(f, target);
      std::cout << func << " in basis " << to_basis_tag << ":\n";
      print_expansion(coeffs, to_basis_tag);
      json terms = json::array();
      for (const auto& [part, value] : coeffs) {
        terms.push_back(json{{"part", to_json(part)}, {"value", to_json(value)}});
      }
      emit(json{{"basis", to_basis_tag}, {"degree", f.degree()}, {"coeffs", terms}}, json_path);
      return 0;
    }

    if (*profile) {
      SimilarityType tau = parse_type(type_text);
      Partition mu = parse_partition(mu_text);
      PolyT result = sigma(mu, tau);
      if (at_prime > 0) {
        require_realizable(tau, at_prime);
        BigQ value = result.eval(to_bigq(at_prime));
        std::cout << bigq_to_string(value) << "\n";
        emit(json{{"kind", "sigma"}, {"at", at_prime}, {"value", bigq_to_string(value)}},
             json_path);
      } else {
        std::cout << result.to_string() << "\n";
        emit(poly_payload("sigma", result), json_path);
      }
      return 0;
    }

    if (*table) {
      SimilarityType tau = parse_type(type_text);
      if (at_prime > 0) require_realizable(tau, at_prime);
      json rows = json::array();
      for (int m = 0; m <= tau.size(); ++m) {
        for (const auto& mu : partitions_of(m)) {
          PolyT value = sigma(mu, tau);
          std::string shown = at_prime > 0 ? bigq_to_string(value.eval(to_bigq(at_prime)))
                                           : value.to_string();
          std::cout << to_json(mu).dump() << ": " << shown << "\n";
          rows.push_back(json{{"mu", to_json(mu)}, {"value", shown}});
        }
      }
      emit(json{{"kind", "sigma-table"}, {"rows", rows}}, json_path);
      return 0;
    }

    if (*partial) {
      SimilarityType tau = parse_type(type_text);
      json arr = json::parse(rho_text);
      ProfileTuple rho;
      for (const auto& e : arr) rho.push_back(e.get<int>());
      PolyT result = pi_partial(rho, tau);
      if (at_prime > 0) {
        require_realizable(tau, at_prime);
        std::cout << bigq_to_string(result.eval(to_bigq(at_prime))) << "\n";
      } else {
        std::cout << result.to_string() << "\n";
      }
      emit(poly_payload("partial", result), json_path);
      return 0;
    }

    if (*anti) {
      SimilarityType tau = parse_type(type_text);
      PolyT result = anti_invariant_count(m_arg, fold_arg, tau);
      if (at_prime > 0) {
        require_realizable(tau, at_prime);
        std::cout << bigq_to_string(result.eval(to_bigq(at_prime))) << "\n";
      } else {
        std::cout << result.to_string() << "\n";
      }
      emit(poly_payload("anti-invariant", result), json_path);
      return 0;
    }

    if (*krylov) {
      SimilarityType tau = parse_type(type_text);
      RatFunc result = krylov_prob(k_arg, l_arg, tau);
      if (at_prime > 0) {
        require_realizable(tau, at_prime);
        std::cout << bigq_to_string(result.eval_at(to_bigq(at_prime))) << "\n";
      } else {
        std::cout << result.to_string() << "\n";
      }
      emit(json{{"kind", "krylov"}, {"value", to_json(result)}, {"pretty", result.to_string()}},
           json_path);
      return 0;
    }

    if (*verify_cmd) {
      std::vector<long long> primes = parse_primes(primes_text);
      verify::Report report;
      auto append = [&report](const verify::Report& r) {
        report.insert(report.end(), r.begin(), r.end());
      };
      if (suite == "identities") {
        append(verify::identities_suite(max_n));
      } else if (suite == "sigma") {
        append(verify::sigma_suite(max_n, primes));
      } else if (suite == "flags") {
        append(verify::flags_suite(max_n, primes));
      } else if (suite == "partial") {
        append(verify::partial_suite(max_n, primes));
      } else if (suite == "krylov") {
        append(verify::krylov_suite(max_n, primes));
      } else if (suite == "all") {
        append(verify::identities_suite(max_n));
        append(verify::sigma_suite(max_n, primes));
        append(verify::flags_suite(max_n, primes));
        append(verify::partial_suite(max_n, primes));
        append(verify::krylov_suite(std::min(max_n, 3), primes));
      } else {
        throw std::invalid_argument("unknown suite: " + suite);
      }
      json checks = json::array();
      for (const auto& check : report) {
        checks.push_back(json{{"name", check.name},
                              {"pass", check.pass},
                              {"cases", check.cases},
                              {"counterexample", check.detail}});
      }
      emit(json{{"suite", suite}, {"max_n", max_n}, {"checks", checks}}, json_path);
      return report_and_exit_code(report);
    }

    if (*selftest) {
      verify::Report report = verify::identities_suite(3);
      auto sigma_r = verify::sigma_suite(3, {2});
      report.insert(report.end(), sigma_r.begin(), sigma_r.end());
      auto krylov_r = verify::krylov_suite(2, {2});
      report.insert(report.end(), krylov_r.begin(), krylov_r.end());
      return report_and_exit_code(report);
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::logic_error& e) {
    // an internal exactness contract failed; treat as a verification failure
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
