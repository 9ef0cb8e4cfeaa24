#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chib/bound_expr.hpp"

namespace chib {

struct GettickConstants {
  BoundExpr m_j;
  BoundExpr c_j;
  // Intermediates of the last level; zero when j = 0.
  BoundExpr d2;
  BoundExpr d1;
  BoundExpr d0;
};

// Levels 0..j of the tick recurrence with k, m, c, kappa held fixed across levels.
std::vector<GettickConstants> gettick_ladder(const BoundBuilder& b, unsigned j, const BoundExpr& k,
                                             const BoundExpr& m, const BoundExpr& c, const BoundExpr& kappa);
GettickConstants gettick_constants(const BoundBuilder& b, unsigned j, const BoundExpr& k, const BoundExpr& m,
                                   const BoundExpr& c, const BoundExpr& kappa);
GettickConstants gettick_constants(const BoundBuilder& b, unsigned j, unsigned long k, unsigned long m,
                                   unsigned long c, unsigned long kappa);

// m when h = 1, else h^(h(m-1)+1).
BoundExpr ramsey_upper(const BoundBuilder& b, const BoundExpr& h, const BoundExpr& m);
BoundExpr ramsey_upper(const BoundBuilder& b, unsigned long h, unsigned long m);

// Nondecreasing N -> N map on bound expressions.
struct BoundFunction {
  std::string name;
  std::function<BoundExpr(const BoundExpr&)> apply;

  BoundExpr operator()(const BoundExpr& x) const { return apply(x); }
};

inline constexpr unsigned long kExplicitLadderCap = 64;

struct SigmaLadder {
  // sigma[s] for s = 0..t when the ladder was expanded; empty when t is symbolic or
  // larger than kExplicitLadderCap, in which case c_prime is an opaque ladder node.
  std::vector<BoundExpr> sigma;
  BoundExpr c_prime;
};

SigmaLadder sigma_ladder(const BoundBuilder& b, const BoundExpr& t, const BoundExpr& c, const BoundExpr& tau,
                         const BoundExpr& kappa, const BoundExpr& h, const BoundFunction& phi);

// 2(ell-3)(kappa+x)+1. Requires ell >= 4.
BoundExpr phi1(const BoundBuilder& b, const BoundExpr& x, unsigned long ell, const BoundExpr& kappa);
BoundFunction phi1_function(const BoundBuilder& b, unsigned long ell, const BoundExpr& kappa);

// Labelled pieces of the cable constants; every field is a node of c_tau.
struct CableConstants {
  BoundExpr m_si, c_si;      // stable-multicover threshold
  BoundExpr m_imp, c_imp;    // multicover threshold
  BoundExpr t1, c1;          // type-1 cables
  BoundExpr t_cable, c_cable;
  BoundExpr c_tau;           // sigma-ladder output
};

CableConstants mainthm2_constants(const BoundBuilder& b, unsigned long k, const BoundExpr& kappa, const BoundExpr& tau,
                                  unsigned long ell, unsigned long h, const BoundFunction& phi);

inline constexpr unsigned long kExplicitMaxCap = 16;

// phi_1..phi_hmax (index 0 holds phi_1).
std::vector<BoundFunction> phi_ladder(const BoundBuilder& b, unsigned long k, unsigned long ell, const BoundExpr& kappa,
                                      unsigned long h_max);

// Chromatic bound for graphs with clique number <= k and no hole of length >= ell.
BoundExpr main_bound(const BoundBuilder& b, unsigned long k, unsigned long ell);

}  // namespace chib
