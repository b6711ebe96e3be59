#pragma once

#include "green/greenring.hpp"

namespace green {

struct CheckReport {
  std::string id;
  int n = 0;
  std::string inputs;
  std::string status;  // "pass" | "fail" | "inconclusive"
  std::string lhs, rhs;
  double elapsed_sec = 0.0;

  bool passed() const { return status == "pass"; }
  std::string to_json_line() const;
};

/// Aggregate exit code: 0 all pass, 1 any fail, 2 any inconclusive (no fail).
int report_exit_code(const std::vector<CheckReport>& reports);

class Verifier {
public:
  Verifier(ModCat& cat, const Presentation& P, const DerivedTables& T)
      : cat_(&cat), P_(&P), T_(&T) {}

  /// The bounded label catalog used by the cross-check sweep.
  std::vector<IndecLabel> bounded_catalog(int syz_m, int band_s,
                                          const std::vector<EtaParam>& etas) const;

  CheckReport crosscheck_product(const IndecLabel& A, const IndecLabel& B);

  /// Names: L3.3.1, L3.3.2, L3.3.3, L3.4.1, L3.4.2, L3.6.1 .. L3.6.5, T3.10.U.
  CheckReport verify_named_relation(const std::string& name, int max_m = 2);

  CheckReport verify_basis(int max_m);
  CheckReport verify_omega_band(int s_max);
  CheckReport verify_identities();  // the binomial-identity sweep

  /// Suites: identities | relations | crosscheck | basis | omega | all.
  std::vector<CheckReport> run_suite(const std::string& name);

  static const std::vector<std::string>& relation_names();
  std::vector<EtaParam> default_etas() const;

private:
  RingElement cls(const IndecLabel& lab) const;
  CheckReport make_report(const std::string& id, const std::string& inputs,
                          const RingElement& lhs, const RingElement& rhs,
                          double elapsed) const;

  ModCat* cat_;
  const Presentation* P_;
  const DerivedTables* T_;
};

}  // namespace green
