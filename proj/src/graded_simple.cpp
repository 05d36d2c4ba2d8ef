#include <algorithm>

#include "gpi/algebra.hpp"

namespace gpi {

namespace {

// Span of the homogeneous components whose degree lies in the indicator.
Subspace components_in(const GradedAlgebra &a, const std::vector<bool> &in_ideal,
                       const std::vector<long> &to_closure) {
  std::vector<Vec> vs;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    long c = to_closure[a.degree(b)];
    if (c >= 0 && in_ideal[static_cast<std::size_t>(c)]) vs.push_back(a.algebra().basis_vec(b));
  }
  return Subspace::span(a.dim(), a.field(), std::move(vs));
}

} // namespace

ReducedGrading reduce_grading(const GradedAlgebra &a) {
  ReducedGrading out;
  auto supp = a.support();
  if (supp.empty()) {
    out.status = ReducedGrading::unsupported;
    out.note = "empty support";
    return out;
  }
  SubSemigroup cl = support_closure(a.semigroup(), supp);
  const FiniteSemigroup &s = cl.semigroup;
  std::size_t th = *s.zero();
  std::vector<long> to_closure(a.semigroup().size(), -1);
  for (std::size_t i = 0; i < cl.original_index.size(); ++i)
    if (cl.original_index[i] >= 0) to_closure[static_cast<std::size_t>(cl.original_index[i])] = static_cast<long>(i);

  // every principal ideal carries either no component or all of A
  std::vector<bool> null_part(s.size(), false);
  null_part[th] = true;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (x == th) continue;
    auto ideal = principal_ideal(s, x);
    Subspace span = components_in(a, ideal, to_closure);
    if (span.dim() == 0) {
      for (std::size_t y = 0; y < s.size(); ++y)
        if (ideal[y]) null_part[y] = true;
    } else if (span.dim() < a.dim()) {
      out.status = ReducedGrading::proper_ideal;
      out.note = "components over the ideal generated by " + s.label(x) + " span a proper graded ideal";
      return out;
    }
  }
  SubSemigroup quo = rees_quotient(s, null_part);
  const FiniteSemigroup &r = quo.semigroup;
  if (r.size() < 2 || !is_zero_simple(r)) {
    out.status = ReducedGrading::unsupported;
    out.note = "reduced semigroup is not 0-simple";
    return out;
  }
  GreenResult g = green_trivial_rees_coordinates(r);
  if (g.nontrivial_subgroups) {
    out.status = ReducedGrading::unsupported;
    out.note = "reduced semigroup has nontrivial subgroups";
    return out;
  }
  std::vector<long> to_quo(s.size(), -1);
  for (std::size_t i = 0; i < quo.original_index.size(); ++i)
    if (quo.original_index[i] >= 0) to_quo[static_cast<std::size_t>(quo.original_index[i])] = static_cast<long>(i);
  out.pres = g.rees.pres;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    long c = to_closure[a.degree(b)];
    long q = c < 0 ? -1 : to_quo[static_cast<std::size_t>(c)];
    if (q < 0) throw Error("internal: supported degree collapsed in the reduction");
    out.cell.push_back(g.rees.coord[static_cast<std::size_t>(q)]);
  }
  return out;
}

GradedSimplicity is_graded_simple(const GradedAlgebra &a) {
  GradedSimplicity out;
  const Algebra &alg = a.algebra();
  if (a.dim() == 0) {
    out.certificate = "zero algebra";
    return out;
  }
  Subspace sq = square(alg);
  if (sq.dim() == 0) {
    out.certificate = "A^2 = 0";
    return out;
  }
  if (sq.dim() != a.dim()) {
    out.certificate = "A^2 != A";
    return out;
  }
  ReducedGrading red = reduce_grading(a);
  if (red.status == ReducedGrading::proper_ideal) {
    out.certificate = red.note;
    return out;
  }
  Subspace j = jacobson_radical(alg);
  for (auto t : a.support())
    if (intersect(a.component_space(t), j).dim() > 0) {
      out.certificate = "component " + a.semigroup().label(t) + " meets J(A)";
      return out;
    }
  if (red.status == ReducedGrading::unsupported) {
    out.verdict = GradedSimplicity::unsupported;
    out.certificate = "unsupported: " + red.note;
    return out;
  }
  Quotient q = radical_quotient(alg, j);
  std::size_t zd = center(q.q).dim();
  if (zd == 1) {
    out.verdict = GradedSimplicity::yes;
    out.certificate = "A^2 = A, components meet J(A) trivially, A/J(A) has 1-dimensional center";
    return out;
  }
  if (central_idempotent(q.q)) {
    out.certificate = "A/J(A) has a nontrivial central idempotent";
    return out;
  }
  out.verdict = GradedSimplicity::indeterminate;
  out.certificate = "indeterminate: non-split quotient";
  return out;
}

bool is_faithful(const GradedAlgebra &a) {
  return left_annihilator(a.algebra()).dim() == 0 && right_annihilator(a.algebra()).dim() == 0;
}

GradedSimplicity is_simple(const Algebra &a) { return is_graded_simple(trivially_graded(a)); }

} // namespace gpi
