#include "qgauss/report.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qgauss {

namespace {

bool is_super(const QuantumGroup& g) {
  return std::any_of(g.grading().begin(), g.grading().end(), [](int p) { return p != 0; });
}

CheckResult flag(std::string id, std::string ref, bool pass, std::string residual = {}) {
  return {std::move(id), std::move(ref), pass, pass ? std::string{} : std::move(residual)};
}

std::vector<CheckResult> frt_suite(const QuantumGroup& g, const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  std::string residual;
  for (const auto& r : canon_all(g.frt_algebra(), frt_polynomials(g.rmatrix(), g.alphabet())))
    if (!r.is_zero() && residual.empty()) residual = r.str(g.alphabet());
  out.push_back(flag("R T1 T2 = T2 T1 R", "frt", residual.empty(), residual));
  std::size_t degree = std::max<std::size_t>(3, 2 * g.system()->max_head_length() - 1);
  if (opt.long_run) ++degree;
  const auto pairs = check_confluence(*g.system(), degree, opt.budget);
  out.push_back(flag("confluent through degree " + std::to_string(degree), "rewriting", pairs.empty(),
                     std::to_string(pairs.size()) + " unresolved critical pairs"));
  return out;
}

std::vector<CheckResult> central_suite(const QuantumGroup& g, GaussDecomposition* gd) {
  std::vector<CheckResult> out;
  if (is_super(g)) {
    for (auto& c : det_product_checks(*gd))
      if (c.id == "sdet_q T is central") out.push_back(c);
    return out;
  }
  if (g.rmatrix().series == Series::GL) {
    Algebra alg = g.frt_algebra();
    out.push_back(flag("det_q T is central", "determinant", centrality_check(alg, qdet(alg, g.T()))));
    return out;
  }
  const CStructureReport rep = c_structure(g);
  out.push_back(flag("T C T^t = Q C", "c-condition", rep.tct_is_q_c));
  out.push_back(flag("C T^t C^-1 T = Q", "c-condition", rep.ctct_is_q));
  out.push_back(flag("Q is central", "c-condition", rep.q_central));
  return out;
}

std::vector<CheckResult> gauss_suite(const QuantumGroup& g, GaussDecomposition& gd) {
  std::vector<CheckResult> out = gd.roundtrip_checks();
  for (auto* part : {&verify_factor_relations, &det_product_checks}) {
    auto more = (*part)(gd);
    out.insert(out.end(), more.begin(), more.end());
  }
  if (!is_super(g)) {
    auto more = verify_rmatrix_exchange(gd);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

// so(N) has dimension N(N-1)/2, sp(N) has N(N+1)/2.
std::size_t classical_dimension(const QuantumGroup& g) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  return g.rmatrix().series == Series::C ? n * (n + 1) / 2 : n * (n - 1) / 2;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "frt", "gauss", "central", "ybe", "bcd"};
  return names;
}

std::string canonical_group_name(const std::string& name) {
  std::string s;
  for (char c : name)
    if (c != '(' && c != ')' && c != ' ' && c != '_') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<SuiteCheck> run_suite(const std::string& group, const std::string& suite, const SuiteOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  const auto g = preset(canonical_group_name(group), opt.budget);
  const bool bcd = g->rmatrix().bcd.has_value();
  if (suite == "bcd" && !bcd) throw std::invalid_argument("suite bcd needs an orthogonal or symplectic group");

  std::vector<SuiteCheck> out;
  auto add = [&](const std::string& name, const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) out.push_back({name, r});
  };
  const bool all = suite == "all";
  if (all || suite == "frt") add("frt", frt_suite(*g, opt));
  if (all || suite == "ybe")
    add("ybe", {flag("R12 R13 R23 = R23 R13 R12", "yang-baxter", yang_baxter_check(g->rmatrix()))});

  std::unique_ptr<GaussDecomposition> gd;
  if (all || suite == "gauss" || suite == "bcd" || (suite == "central" && is_super(*g)))
    gd = std::make_unique<GaussDecomposition>(g);
  if (all || suite == "central") add("central", central_suite(*g, gd.get()));
  if (all || suite == "gauss") add("gauss", gauss_suite(*g, *gd));
  if ((all && bcd) || suite == "bcd") {
    std::vector<CheckResult> rs;
    const CStructureReport rep = c_structure(*g);
    rs.push_back(flag("zero-RHS C-conditions hold in A(R)", "c-condition", rep.homogeneous_in_frt == rep.homogeneous,
                      std::to_string(rep.homogeneous - rep.homogeneous_in_frt) + " do not"));
    auto more = constraint_check_bcd(*gd);
    rs.insert(rs.end(), more.begin(), more.end());
    const std::size_t count = independent_generator_count(*g), expected = classical_dimension(*g);
    rs.push_back(flag("independent generators = " + std::to_string(expected), "elimination", count == expected,
                      std::to_string(count)));
    add("bcd", rs);
  }
  return out;
}

} // namespace qgauss
