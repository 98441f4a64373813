#include "qgauss/qgroup.hpp"

#include <stdexcept>

namespace qgauss {

Alphabet make_alphabet(int n, const std::vector<int>& grading, const std::vector<std::string>& names) {
  if (!names.empty() && static_cast<int>(names.size()) != n * n)
    throw std::invalid_argument("need one name per generator");
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Generator g;
      g.row = i;
      g.col = j;
      g.parity = (grading[i - 1] + grading[j - 1]) % 2;
      g.name = names.empty() ? "t" + std::to_string(i) + std::to_string(j) : names[(i - 1) * n + (j - 1)];
      gens.push_back(std::move(g));
    }
  return Alphabet(std::move(gens));
}

std::vector<NCPolynomial> frt_polynomials(const RMatrixSpec& r, const Alphabet& alpha) {
  const int n = r.dimension;
  const auto& p = r.grading;
  auto sign = [](int e) { return e % 2 ? QScalar(-1) : QScalar(1); };
  auto tt = [&](int a, int b, int c, int d) {
    return NCPolynomial::word(Word{alpha.at(a, b), alpha.at(c, d)});
  };
  std::vector<NCPolynomial> out;
  for (int m = 1; m <= n; ++m)
    for (int i = 1; i <= n; ++i)
      for (int pp = 1; pp <= n; ++pp)
        for (int rr = 1; rr <= n; ++rr) {
          NCPolynomial e;
          // (R T1 T2)_{mi,pr} = sum_jk R_{mi,jk} (-1)^{p(k)(p(j)+p(p))} t_jp t_kr
          for (const auto& [col, v] : r.entries.row(pair_index(m, i, n))) {
            const int j = static_cast<int>(col) / n + 1, k = static_cast<int>(col) % n + 1;
            e += tt(j, pp, k, rr) * (v * sign(p[k - 1] * (p[j - 1] + p[pp - 1])));
          }
          // (T2 T1 R)_{mi,pr} = sum_jk (-1)^{p(k)(p(m)+p(j))} t_ik t_mj R_{jk,pr}
          for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
              QScalar v = r.entries.at(pair_index(j, k, n), pair_index(pp, rr, n));
              if (v.is_zero()) continue;
              e -= tt(i, k, m, j) * (v * sign(p[k - 1] * (p[m - 1] + p[j - 1])));
            }
          if (!e.is_zero()) out.push_back(std::move(e));
        }
  return out;
}

std::vector<Relation> frt_relations(const RMatrixSpec& r, const Alphabet& alpha) {
  Echelon ech;
  for (const auto& e : frt_polynomials(r, alpha)) ech.insert(e);
  std::vector<Relation> out;
  for (const auto& row : ech.rows()) {
    Relation rel;
    rel.lhs = NCPolynomial::word(row.leading_word());
    rel.rhs = rel.lhs - row;
    out.push_back(std::move(rel));
  }
  return out;
}

OrientReport orient(const Alphabet& alpha, const std::vector<Relation>& relations, bool check_confluent,
                    std::uint64_t step_budget) {
  std::vector<NCPolynomial> polys;
  for (const auto& r : relations) polys.push_back(r.poly());
  OrientReport rep;
  auto sys = std::make_shared<const RewriteSystem>(orient_polynomials(alpha, polys));
  rep.uncovered = sys->uncovered_pairs();
  if (check_confluent) rep.unresolved = check_confluence(*sys, 3, step_budget);
  rep.system = std::move(sys);
  return rep;
}

std::vector<Weight> letter_weights(const RMatrixSpec& r, const Alphabet& alpha) {
  const int n = r.dimension;
  auto h = [&](int i) {
    Weight w(n, 0);
    w[i - 1] += 1;
    if (r.bcd) w[n - i] -= 1;
    return w;
  };
  std::vector<Weight> out;
  for (const auto& g : alpha.generators()) {
    Weight w = h(g.row), c = h(g.col);
    w.insert(w.end(), c.begin(), c.end());
    out.push_back(std::move(w));
  }
  return out;
}

QuantumGroup::QuantumGroup(std::string name, RMatrixSpec r, std::vector<std::string> names,
                           std::uint64_t step_budget)
    : name_(std::move(name)), r_(std::move(r)), alpha_(make_alphabet(r_.dimension, r_.grading, names)),
      budget_(step_budget) {
  if (!r_.is_even()) throw std::invalid_argument("R-matrix is not even");
  relations_ = frt_relations(r_, alpha_);
  OrientReport rep = orient(alpha_, relations_, false, step_budget);
  if (!rep.uncovered.empty()) {
    std::string msg = "incomplete rewrite system for " + name_ + "; uncovered:";
    for (const auto& w : rep.uncovered) msg += " " + word_str(w, alpha_);
    throw RewriteError(msg);
  }
  // Overlaps of heads of length h have length at most 2h - 1.
  std::size_t degree = 3;
  CompletionResult done = complete_system(*rep.system, degree, step_budget);
  std::size_t added = done.rules_added;
  while (done.complete && 2 * done.system->max_head_length() - 1 > degree) {
    degree = 2 * done.system->max_head_length() - 1;
    done = complete_system(*done.system, degree, step_budget);
    added += done.rules_added;
  }
  if (!done.complete) throw RewriteError("completion of " + name_ + " did not terminate");
  system_ = done.system;
  completion_rules_ = added;
  weights_ = letter_weights(r_, alpha_);
  if (r_.bcd) {
    c_ = build_c_matrix(r_);
    // Q from the (1,1') entry of T C T^t = Q C
    const int np = n();
    NCPolynomial e;
    for (int k = 1; k <= np; ++k)
      for (int l = 1; l <= np; ++l) {
        QScalar c = c_->entries.at(k - 1, l - 1);
        if (!c.is_zero()) e += t(1, k) * t(np, l) * c;
      }
    Algebra a = frt_algebra();
    q_ = a.normal_form(e * c_->entries.at(0, np - 1).inverse());
  }
}

NCPolynomial QuantumGroup::t(int i, int j) const { return NCPolynomial::letter(alpha_.at(i, j)); }

QMatrix QuantumGroup::T() const {
  const std::size_t np = static_cast<std::size_t>(n());
  QMatrix m(np, np);
  m.set_parity(r_.grading, r_.grading);
  for (int i = 1; i <= n(); ++i)
    for (int j = 1; j <= n(); ++j) m(i - 1, j - 1) = t(i, j);
  return m;
}

Algebra QuantumGroup::frt_algebra() const { return Algebra(system_, weights_, budget_); }

Algebra QuantumGroup::algebra() const {
  Algebra a = frt_algebra();
  if (q_) a.set_central_unit(*q_);
  return a;
}

QMatrix tct(const QuantumGroup& g) {
  const int n = g.n();
  const auto& c = g.c_matrix().entries;
  QMatrix out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPolynomial e;
      for (int k = 1; k <= n; ++k)
        for (const auto& [l0, v] : c.row(k - 1)) e += g.t(i, k) * g.t(j, static_cast<int>(l0) + 1) * v;
      out(i - 1, j - 1) = e;
    }
  return out;
}

QMatrix ctct(const QuantumGroup& g) {
  const int n = g.n();
  const auto& c = g.c_matrix().entries;
  const ScalarMatrix ci = inverse(c);
  // (C T^t C^-1 T)_ij = sum C_ik t_lk (C^-1)_lm t_mj
  QMatrix out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPolynomial e;
      for (const auto& [k0, cik] : c.row(i - 1))
        for (int l = 1; l <= n; ++l)
          for (const auto& [m0, clm] : ci.row(l - 1))
            e += g.t(l, static_cast<int>(k0) + 1) * g.t(static_cast<int>(m0) + 1, j) * (cik * clm);
      out(i - 1, j - 1) = e;
    }
  return out;
}

std::vector<Relation> c_conditions(const QuantumGroup& g) {
  const int n = g.n();
  const auto& c = g.c_matrix().entries;
  const ScalarMatrix ci = inverse(c);
  std::vector<Relation> out;
  // T C T^t = C
  const QMatrix a = tct(g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Relation r{a(i, j), NCPolynomial(c.at(i, j)), false};
      r.independent = !r.rhs.is_zero();
      out.push_back(std::move(r));
    }
  // T^t C^-1 T = C^-1
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPolynomial e;
      for (int k = 1; k <= n; ++k)
        for (const auto& [l0, v] : ci.row(k - 1)) e += g.t(k, i) * g.t(static_cast<int>(l0) + 1, j) * v;
      Relation r{e, NCPolynomial(ci.at(i - 1, j - 1)), false};
      r.independent = !r.rhs.is_zero();
      out.push_back(std::move(r));
    }
  return out;
}

CStructureReport c_structure(const QuantumGroup& g) {
  CStructureReport rep;
  Algebra a = g.frt_algebra();
  const NCPolynomial& q = g.q_element();
  const int n = g.n();
  const auto& c = g.c_matrix().entries;
  const QMatrix x = tct(g), y = ctct(g);
  rep.tct_is_q_c = rep.ctct_is_q = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!a.normal_form(x(i, j) - q * c.at(i, j)).is_zero()) rep.tct_is_q_c = false;
      if (!a.normal_form(y(i, j) - (i == j ? q : NCPolynomial())).is_zero()) rep.ctct_is_q = false;
    }
  rep.q_central = true;
  for (std::size_t s = 0; s < g.alphabet().size(); ++s) {
    NCPolynomial t = NCPolynomial::letter(static_cast<Symbol>(s));
    if (!a.normal_form(q * t - t * q).is_zero()) rep.q_central = false;
  }
  for (const auto& r : c_conditions(g)) {
    if (r.independent) {
      ++rep.independent;
      continue;
    }
    ++rep.homogeneous;
    if (a.normal_form(r.poly()).is_zero()) ++rep.homogeneous_in_frt;
  }
  return rep;
}

std::vector<std::string> preset_names() { return {"gl1", "gl2", "gl3", "gl4", "so3", "sp2", "gl1|1", "gl2|1"}; }

std::shared_ptr<const QuantumGroup> preset(const std::string& name, std::uint64_t step_budget) {
  if (name == "gl2")
    return std::make_shared<const QuantumGroup>(name, build_gl(2), std::vector<std::string>{"a", "b", "c", "d"},
                                                step_budget);
  if (name.size() == 3 && name.rfind("gl", 0) == 0 && name[2] >= '1' && name[2] <= '4')
    return std::make_shared<const QuantumGroup>(name, build_gl(name[2] - '0'), std::vector<std::string>{},
                                                step_budget);
  if (name == "so3") return std::make_shared<const QuantumGroup>(name, build_bcd(Series::B, 1), std::vector<std::string>{}, step_budget);
  if (name == "sp2") return std::make_shared<const QuantumGroup>(name, build_bcd(Series::C, 2), std::vector<std::string>{}, step_budget);
  if (name == "gl1|1")
    return std::make_shared<const QuantumGroup>(name, build_super_gl(1, 1),
                                                std::vector<std::string>{"a", "beta", "gamma", "d"}, step_budget);
  if (name == "gl2|1")
    return std::make_shared<const QuantumGroup>(
        name, build_super_gl(2, 1),
        std::vector<std::string>{"a", "b", "alpha", "c", "d", "beta", "gamma", "delta", "f"}, step_budget);
  throw std::invalid_argument("unknown group '" + name + "'");
}

} // namespace qgauss
