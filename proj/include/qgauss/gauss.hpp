#pragma once

#include "qgauss/qgroup.hpp"
#include "qgauss/qlinalg.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qgauss {

/// T = T_L T_D T_U with T_plus = T_D T_U, T_minus = T_L T_D, W_L T = T_plus and
/// T W_U = T_minus.
struct GaussFactors {
  LMatrix TL, TD, TU, Tplus, Tminus, WL, WU;
  /// (T_D)_kk^{-1}
  std::vector<LocalizedElement> TD_inverse;
};

/// One verified identity. residual is set when the check fails.
struct CheckResult {
  std::string id;
  std::string ref;
  bool pass = false;
  std::string residual;
};

/// (I - N)^{-1} = I + N + N^2 + ... for W = I - N unitriangular.
LMatrix invert_unitriangular(Localizer& loc, const LMatrix& w);

/// Gauss decomposition of a quantum group's generator matrix, with a
/// localization at the pivots and a table of named factor entries.
class GaussDecomposition {
public:
  explicit GaussDecomposition(std::shared_ptr<const QuantumGroup> g);

  const QuantumGroup& group() const { return *g_; }
  Localizer& localizer() { return loc_; }
  Algebra& algebra() { return loc_.algebra(); }
  const GaussFactors& factors() const { return f_; }
  /// Registered ids of the principal minors D_1..D_n (GL and C type); empty otherwise.
  const std::vector<int>& principal_minor_ids() const { return principal_; }

  /// Evaluates an expression over generators, factor symbols, q, lambda,
  /// integers, [n] (q-number), [X,Y] (commutator), D[rows|cols] (q-minor),
  /// Dsp[k] (symplectic determinant), with juxtaposition or '*' for products,
  /// '/' and ^-1 for inverses.
  LocalizedElement eval(const std::string& expr);
  /// Checks "lhs = rhs" (several '='-separated sides allowed).
  CheckResult check(const std::string& equation, const std::string& ref);

  /// Factor symbol names: l<ij>, A<ii>, u<ij>, w<ij> (W_L), plus the group's aliases.
  const std::map<std::string, LocalizedElement>& symbols() const { return symbols_; }
  std::string str(const LocalizedElement& x) const { return loc_.str(x); }

  /// Roundtrips T = T_L T_D T_U = T_L T_plus = T_minus T_U, the Neumann
  /// inverse of W_L, and agreement of the row and column elimination paths.
  std::vector<CheckResult> roundtrip_checks();

private:
  void register_principal_minors();
  void eliminate();
  void build_symbols();
  void define(const std::string& name, const LocalizedElement& v, const LocalizedElement* inverse = nullptr);

  std::shared_ptr<const QuantumGroup> g_;
  Localizer loc_;
  GaussFactors f_;
  std::vector<int> principal_;
  std::vector<int> pivot_ids_;
  std::map<std::string, LocalizedElement> symbols_;
  std::map<std::string, LocalizedElement> inverses_;
  // column elimination results, for cross-checks
  LMatrix TL_col_, TU_col_, TD_col_;
};

/// Exchange relations between factor matrices written with R, R_D and
/// Kronecker embeddings X_1 = X (x) 1, X_2 = 1 (x) X. Even groups only.
std::vector<CheckResult> verify_rmatrix_exchange(GaussDecomposition& gd);

/// Relation lists in the Gauss basis for the preset groups.
std::vector<CheckResult> verify_factor_relations(GaussDecomposition& gd);

/// det_q T = prod (T_D)_ii (GL type) or the superdeterminant centrality.
std::vector<CheckResult> det_product_checks(GaussDecomposition& gd);

/// (T_D)_ii (T_D)_i'i' = 1 and the dependent-generator substitutions.
std::vector<CheckResult> constraint_check_bcd(GaussDecomposition& gd);

/// Dependent Gauss generators expressed through independent ones.
std::map<std::string, std::string> eliminate_dependents(const std::string& group_name);

/// Number of Gauss generators (off-diagonal entries of T_L and T_U plus the
/// diagonal) minus the eliminated ones.
std::size_t independent_generator_count(const QuantumGroup& g);

} // namespace qgauss
