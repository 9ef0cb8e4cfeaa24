#include "chib/bounds.hpp"

#include <algorithm>

#include "chib/errors.hpp"

namespace chib {

std::vector<GettickConstants> gettick_ladder(const BoundBuilder& b, unsigned j, const BoundExpr& k,
                                             const BoundExpr& m, const BoundExpr& c, const BoundExpr& kappa) {
  std::vector<GettickConstants> levels;
  BoundExpr one = b.constant(1), two = b.constant(2), zero = b.constant(0);
  levels.push_back({b.label("m_0", one), b.label("c_0", one), zero, zero, zero});
  for (unsigned level = 1; level <= j; ++level) {
    const auto& prev = levels.back();
    std::string tag = "_" + std::to_string(level);
    BoundExpr mj = b.label("m" + tag, b.mul(b.mul(two, k), b.mul(m, prev.m_j)));
    BoundExpr p = b.pow(two, mj);
    BoundExpr d2 = b.label("d2" + tag, b.add(b.mul(b.mul(mj, p), prev.c_j), b.mul(p, c)));
    BoundExpr d1 = b.label("d1" + tag, b.add(d2, b.mul(mj, kappa)));
    BoundExpr d0 = b.label("d0" + tag, b.mul(b.mul(k, p), d1));
    BoundExpr cj = b.label("c" + tag, b.add(d0, b.mul(k, kappa)));
    levels.push_back({mj, cj, d2, d1, d0});
  }
  return levels;
}

GettickConstants gettick_constants(const BoundBuilder& b, unsigned j, const BoundExpr& k, const BoundExpr& m,
                                   const BoundExpr& c, const BoundExpr& kappa) {
  return gettick_ladder(b, j, k, m, c, kappa).back();
}

GettickConstants gettick_constants(const BoundBuilder& b, unsigned j, unsigned long k, unsigned long m,
                                   unsigned long c, unsigned long kappa) {
  return gettick_constants(b, j, b.constant(k), b.constant(m), b.constant(c), b.constant(kappa));
}

BoundExpr ramsey_upper(const BoundBuilder& b, const BoundExpr& h, const BoundExpr& m) {
  if ((h.exact() && h.value() < 1) || (m.exact() && m.value() < 1)) {
    throw InputError("ramsey_upper: h and m must be at least 1");
  }
  if (h.exact() && h.value() == 1) return b.label("ramsey", m);
  // h(m-1)+1 = hm - h + 1, kept nonnegative by building it as h*(m-1) with m >= 1.
  BoundExpr m_minus_1 = m.exact() ? b.constant(m.value() - 1) : b.ladder("minus_1", {m});
  return b.label("ramsey", b.pow(h, b.add(b.mul(h, m_minus_1), b.constant(1))));
}

BoundExpr ramsey_upper(const BoundBuilder& b, unsigned long h, unsigned long m) {
  return ramsey_upper(b, b.constant(h), b.constant(m));
}

SigmaLadder sigma_ladder(const BoundBuilder& b, const BoundExpr& t, const BoundExpr& c, const BoundExpr& tau,
                         const BoundExpr& kappa, const BoundExpr& h, const BoundFunction& phi) {
  SigmaLadder out;
  BoundExpr floor = b.add(tau, b.mul(h, kappa));
  BoundExpr phi_ref = b.ladder(phi.name, {});
  if (!t.exact() || t.value() > kExplicitLadderCap) {
    out.c_prime = b.label("sigma_ladder", b.ladder("sigma", {t, c, tau, kappa, h, phi_ref}));
    return out;
  }
  const unsigned long len = t.value().get_ui();
  out.sigma.resize(len + 1);
  out.sigma[len] = b.label("sigma_" + std::to_string(len), b.max(c, floor));
  BoundExpr h1 = b.add(h, b.constant(1));
  for (unsigned long s = len; s-- > 0;) {
    BoundExpr se = b.constant(s);
    BoundExpr arg = b.mul(b.pow(h1, se), out.sigma[s + 1]);
    BoundExpr grown = b.mul(b.pow(b.constant(2), se), phi(arg));
    out.sigma[s] = b.label("sigma_" + std::to_string(s), b.max(grown, floor));
  }
  out.c_prime = b.label("sigma_ladder", out.sigma[0]);
  return out;
}

BoundExpr phi1(const BoundBuilder& b, const BoundExpr& x, unsigned long ell, const BoundExpr& kappa) {
  if (ell < 4) throw InputError("phi1: ell must be at least 4");
  BoundExpr coeff = b.constant(2 * (ell - 3));
  return b.label("phi_1", b.add(b.mul(coeff, b.add(kappa, x)), b.constant(1)));
}

BoundFunction phi1_function(const BoundBuilder& b, unsigned long ell, const BoundExpr& kappa) {
  return {"phi_1", [b, ell, kappa](const BoundExpr& x) { return phi1(b, x, ell, kappa); }};
}

CableConstants mainthm2_constants(const BoundBuilder& b, unsigned long k, const BoundExpr& kappa, const BoundExpr& tau,
                                  unsigned long ell, unsigned long h, const BoundFunction& phi) {
  if (h < 1) throw InputError("mainthm2_constants: h must be at least 1");
  CableConstants out;
  const unsigned long n = (ell + 1) / 2;
  const BoundExpr kb = b.constant(k);
  // n rounds of tick growth, each at j = k, worked backwards from |X'| = n, chi >= 1.
  BoundExpr m = b.constant(n), c = b.constant(1);
  for (unsigned long round = 0; round < n; ++round) {
    GettickConstants g = gettick_constants(b, static_cast<unsigned>(k), kb, m, c, kappa);
    m = g.m_j;
    c = g.c_j;
  }
  out.m_si = b.label("m_stableimpression", m);
  out.c_si = b.label("c_stableimpression", c);
  out.m_imp = b.label("m_impression", out.m_si);
  out.c_imp = b.label("c_impression", b.mul(out.c_si, b.pow(kappa, out.m_si)));
  out.t1 = b.label("t_type1", ramsey_upper(b, b.constant(h), out.m_imp));
  out.c1 = b.label("c_type1", out.c_imp);
  const unsigned long ell2 = std::max<unsigned long>(ell, 5);
  BoundExpr len2 = b.constant(ell2 - 3);
  out.t_cable = b.label("t_cable", ramsey_upper(b, b.constant(2), b.max(out.t1, len2)));
  out.c_cable = b.label("c_cable", b.max(out.c1, b.mul(len2, tau)));
  out.c_tau = b.label("c(tau)",
                      sigma_ladder(b, out.t_cable, out.c_cable, tau, kappa, b.constant(h), phi).c_prime);
  return out;
}

std::vector<BoundFunction> phi_ladder(const BoundBuilder& b, unsigned long k, unsigned long ell, const BoundExpr& kappa,
                                      unsigned long h_max) {
  if (h_max > k) throw InputError("phi_ladder: h_max must not exceed k");
  if (ell < 4) throw InputError("phi_ladder: ell must be at least 4");
  std::vector<BoundFunction> phis;
  if (h_max == 0) return phis;
  phis.push_back(phi1_function(b, ell, kappa));
  for (unsigned long h = 1; h < h_max; ++h) {
    BoundFunction prev = phis.back();
    std::string name = "phi_" + std::to_string(h + 1);
    auto c_of = [b, k, kappa, ell, h, prev](const BoundExpr& tau) {
      return mainthm2_constants(b, k, kappa, tau, ell, h, prev).c_tau;
    };
    phis.push_back({name, [b, c_of, name](const BoundExpr& n) {
                      if (n.exact() && n.value() <= kExplicitMaxCap) {
                        BoundExpr best = c_of(b.constant(0));
                        for (unsigned long tau = 1; tau <= n.value().get_ui(); ++tau)
                          best = b.max(best, c_of(b.constant(tau)));
                        return b.label(name, best);
                      }
                      // c(tau) is nondecreasing in tau, so the max is attained at tau = n.
                      return b.label(name, c_of(n));
                    }});
  }
  return phis;
}

BoundExpr main_bound(const BoundBuilder& b, unsigned long k, unsigned long ell) {
  if (k < 1 || ell < 1) throw InputError("main_bound: k and ell must be at least 1");
  const unsigned long ell_eff = std::max<unsigned long>(ell, 4);
  std::string name = "n(" + std::to_string(k) + "," + std::to_string(ell) + ")";
  if (k == 1) return b.label(name, b.constant(1));
  BoundExpr kappa = main_bound(b, k - 1, ell);
  auto phis = phi_ladder(b, k, ell_eff, kappa, k);
  return b.label(name, phis.back()(b.constant(0)));
}

}  // namespace chib
