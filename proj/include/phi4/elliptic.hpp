#pragma once

namespace phi4::elliptic {

// sn, cn, dn at a common argument.  For real u and m in [0,1]:
// sn^2+cn^2 = 1, dn^2+m*sn^2 = 1, |sn|,|cn| <= 1, sqrt(1-m) <= dn <= 1.
struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// Complete elliptic integral of the first kind, K(m), m in [0,1).
// Throws DivergentPeriod at m = 1 and DomainError outside [0,1).
double complete_k(double m);

// Jacobi elliptic functions sn(u,m), cn(u,m), dn(u,m) for finite real u and
// m in [0,1].  m = 0 and m = 1 use the circular/hyperbolic closed forms.
JacobiTriple jacobi(double u, double m);

}  // namespace phi4::elliptic
