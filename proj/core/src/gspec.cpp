#include "virw/gspec.hpp"

#include "virw/ring.hpp"  // CatalogError

namespace virw {
namespace {

std::string idx3(int s, int p, int q) {
  return "(" + std::to_string(s) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

const Scalar& GSpec::cc(int s, int p, int q) const {
  return c.at((static_cast<size_t>(s) * dim + p) * dim + q);
}

const Scalar& GSpec::form_at(int s, int p) const {
  return form->at(static_cast<size_t>(s) * dim + p);
}

bool GSpec::all_beta_zero() const {
  for (const Scalar& b : beta)
    if (!b.is_zero()) return false;
  return true;
}

void GSpec::validate() const {
  const size_t n = static_cast<size_t>(dim);
  if (dim <= 0) throw CatalogError("gspec: dimension must be positive");
  if (parity.size() != n || beta.size() != n || c.size() != n * n * n)
    throw CatalogError("gspec '" + label + "': field sizes do not match dim");
  if (form && form->size() != n * n)
    throw CatalogError("gspec '" + label + "': form size does not match dim");
  for (int p : parity)
    if (p != 0 && p != 1) throw CatalogError("gspec '" + label + "': parity entries must be 0 or 1");

  for (int s = 0; s < dim; ++s)
    for (int p = 0; p < dim; ++p)
      for (int q = 0; q < dim; ++q) {
        const Scalar& v = cc(s, p, q);
        if (v.is_zero()) continue;
        // Parity closure and the derivation property ride on nonzero entries.
        if ((parity[s] ^ parity[p]) != parity[q])
          throw CatalogError("gspec '" + label + "': parity mismatch at c" + idx3(s, p, q));
        if (beta[s] + beta[p] != beta[q])
          throw CatalogError("gspec '" + label + "': derivation property fails at c" + idx3(s, p, q) +
                             " (beta_s + beta_p != beta_q)");
        // Super-antisymmetry c(p,s,q) = -(-1)^{|s||p|} c(s,p,q).
        Scalar expect = (parity[s] && parity[p]) ? v : -v;
        if (cc(p, s, q) != expect)
          throw CatalogError("gspec '" + label + "': super-antisymmetry fails at c" + idx3(s, p, q));
      }

  // Super Jacobi: [s,[p,q]] = [[s,p],q] + (-1)^{|s||p|} [p,[s,q]].
  for (int s = 0; s < dim; ++s)
    for (int p = 0; p < dim; ++p)
      for (int q = 0; q < dim; ++q)
        for (int u = 0; u < dim; ++u) {
          Scalar lhs(0), rhs(0);
          for (int r = 0; r < dim; ++r) {
            lhs = lhs + cc(p, q, r) * cc(s, r, u);
            rhs = rhs + cc(s, p, r) * cc(r, q, u);
            Scalar t = cc(s, q, r) * cc(p, r, u);
            rhs = rhs + ((parity[s] && parity[p]) ? -t : t);
          }
          if (lhs != rhs)
            throw CatalogError("gspec '" + label + "': Jacobi fails at " + idx3(s, p, q) +
                               " component " + std::to_string(u));
        }

  if (form) {
    for (int s = 0; s < dim; ++s)
      for (int p = 0; p < dim; ++p) {
        const Scalar& v = form_at(s, p);
        Scalar expect = (parity[s] && parity[p]) ? -form_at(p, s) : form_at(p, s);
        if (v != expect)
          throw CatalogError("gspec '" + label + "': form is not supersymmetric at (" +
                             std::to_string(s) + "," + std::to_string(p) + ")");
        if (!v.is_zero() && parity[s] != parity[p])
          throw CatalogError("gspec '" + label + "': form pairs generators of different parity");
      }
    // Invariance ([s,p],q) = (s,[p,q]).
    for (int s = 0; s < dim; ++s)
      for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q) {
          Scalar lhs(0), rhs(0);
          for (int r = 0; r < dim; ++r) {
            lhs = lhs + cc(s, p, r) * form_at(r, q);
            rhs = rhs + cc(p, q, r) * form_at(s, r);
          }
          if (lhs != rhs)
            throw CatalogError("gspec '" + label + "': form invariance fails at " + idx3(s, p, q));
        }
  }
}

GSpec gspec_one_dim(const Scalar& beta) {
  GSpec g;
  g.dim = 1;
  g.parity = {0};
  g.beta = {beta};
  g.c = {Scalar(0)};
  g.names = {"x"};
  g.label = "one_dim";
  return g;
}

GSpec gspec_heisenberg(const Scalar& beta) {
  GSpec g;
  g.dim = 3;
  g.parity = {0, 0, 0};
  g.beta = {beta, -beta, Scalar(0)};
  g.c.assign(27, Scalar(0));
  auto set = [&](int s, int p, int q, int v) { g.c[(static_cast<size_t>(s) * 3 + p) * 3 + q] = Scalar(v); };
  set(0, 1, 2, 1);   // [x, y] = z
  set(1, 0, 2, -1);
  g.names = {"x", "y", "z"};
  g.label = "heisenberg";
  return g;
}

GSpec gspec_sl2(const Scalar& t) {
  GSpec g;
  g.dim = 3;
  g.parity = {0, 0, 0};
  g.beta = {Scalar(2) * t, Scalar(0), Scalar(-2) * t};
  g.c.assign(27, Scalar(0));
  auto set = [&](int s, int p, int q, int v) { g.c[(static_cast<size_t>(s) * 3 + p) * 3 + q] = Scalar(v); };
  set(1, 0, 0, 2);   // [h, e] = 2e
  set(0, 1, 0, -2);
  set(1, 2, 2, -2);  // [h, f] = -2f
  set(2, 1, 2, 2);
  set(0, 2, 1, 1);   // [e, f] = h
  set(2, 0, 1, -1);
  g.form = std::vector<Scalar>(9, Scalar(0));
  (*g.form)[0 * 3 + 2] = Scalar(1);  // (e, f)
  (*g.form)[2 * 3 + 0] = Scalar(1);
  (*g.form)[1 * 3 + 1] = Scalar(2);  // (h, h)
  g.names = {"e", "h", "f"};
  g.label = "sl2";
  return g;
}

GSpec gspec_super_hv() {
  GSpec g;
  g.dim = 2;
  g.parity = {0, 1};
  g.beta = {Scalar(0), Rational(-1, 2)};
  g.c.assign(8, Scalar(0));
  g.c[(0 * 2 + 1) * 2 + 1] = Scalar(1);   // [x, y] = y
  g.c[(1 * 2 + 0) * 2 + 1] = Scalar(-1);
  g.names = {"x", "y"};
  g.label = "super_pair";
  return g;
}

}  // namespace virw
