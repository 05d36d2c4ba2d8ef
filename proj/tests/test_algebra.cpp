#include <random>

#include "doctest.h"

#include "gpi/constructions.hpp"

#include "generators.hpp"

using namespace gpi;

namespace {

Mat ones(std::size_t r, std::size_t c) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(1);
  return m;
}

GradedAlgebra zero_algebra() { return trivially_graded(Algebra(Field{}, 1)); }

Subspace span_of(const GradedAlgebra &a, std::vector<std::size_t> idx) {
  std::vector<Vec> vs;
  for (auto i : idx) vs.push_back(a.algebra().basis_vec(i));
  return Subspace::span(a.dim(), a.field(), vs);
}

Subspace matrices(std::size_t k, std::vector<std::pair<std::size_t, std::size_t>> units) {
  std::vector<Vec> vs;
  for (auto [a, b] : units) vs.push_back(matrix_to_vec(gen::unit(k, a, b)));
  return Subspace::span(k * k, Field{}, vs);
}

Vec vec(std::vector<long> v) {
  Vec out;
  for (auto x : v) out.push_back(Scalar(x));
  return out;
}

} // namespace

TEST_SUITE("algebra-core") {

TEST_CASE("validate") {
  auto ut2 = fixture("ut2-z2");
  CHECK(validate(ut2).empty());
  // everything in degree 0 is the trivial Z2 grading, still valid
  CHECK(validate(ut2.regraded(ut2.semigroup(), {0, 0, 0})).empty());
  // e11 in degree 1 forces e11 e11 = e11 into degree 0
  auto bad = validate(ut2.regraded(ut2.semigroup(), {1, 0, 1}));
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().kind == Violation::grading);
  CHECK(validate(fixture("m2-trivial")).empty());

  Algebra broken(Field{}, 2); // xy = x, other products 0: (xy)y = x but x(yy) = 0
  broken.set_product(0, 1, broken.basis_vec(0));
  auto v = validate(trivially_graded(broken));
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == Violation::associativity);
}

TEST_CASE("jacobson_radical") {
  CHECK(jacobson_radical(fixture("m2-trivial")).dim() == 0);
  auto ut2 = fixture("ut2-z2");
  CHECK(jacobson_radical(ut2) == span_of(ut2, {2}));
  auto munn = munn_algebra(2, 2, ones(2, 2));
  auto j = jacobson_radical(munn);
  CHECK(j.dim() == 3);
  // P N P = 0 with P all ones: the entries of N sum to zero
  for (const auto &v : j.basis()) {
    Scalar s;
    for (const auto &x : v) s += x;
    CHECK(s.is_zero());
  }
  Algebra small(Field::prime(3), 4);
  CHECK_THROWS_AS(jacobson_radical(small), Error);
  Algebra big(Field::prime(5), 4);
  CHECK(jacobson_radical(big).dim() == 4);
}

TEST_CASE("components against the radical") {
  CHECK(homogeneous_components_meet_radical(fixture("ft-rzb2")));
  CHECK_FALSE(homogeneous_components_meet_radical(fixture("m2-dual-numbers")));
  CHECK(homogeneous_components_meet_radical(fixture("m2-trivial")));
}

TEST_CASE("graded simplicity and faithfulness") {
  CHECK(is_graded_simple(fixture("ft-rzb2")).holds());
  auto dual = is_graded_simple(fixture("m2-dual-numbers"));
  CHECK(dual.verdict == GradedSimplicity::no);
  CHECK_FALSE(dual.certificate.empty());
  CHECK(is_graded_simple(fixture("m2-trivial")).holds());

  CHECK_FALSE(is_faithful(fixture("ft-rzb2")));
  CHECK(is_faithful(fixture("m2-trivial")));
  CHECK_FALSE(is_faithful(zero_algebra()));
}

TEST_CASE("simple iff graded-simple and faithful, on every fixture") {
  for (const auto &name : fixture_names()) {
    CAPTURE(name);
    auto a = fixture(name);
    bool lhs = is_simple(a.algebra()).holds();
    bool rhs = is_graded_simple(a).holds() && is_faithful(a);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("graded Wedderburn-Malcev") {
  auto ft = fixture("ft-rzb2");
  auto r = wm_graded_decomposition(ft);
  REQUIRE(r.decomposition);
  CHECK(r.decomposition->B.dim() == 1);
  CHECK(r.decomposition->B.contains(vec({1, 0})));
  CHECK(r.decomposition->radical == Subspace::span(2, Field{}, {vec({1, -1})}));
  auto lay = radical_square_layers(ft, *r.decomposition);
  CHECK(lay.ok);
  CHECK(lay.radical_dim == 1);

  CHECK_FALSE(wm_graded_decomposition(fixture("m2-dual-numbers")).decomposition);

  auto m2 = fixture("m2-trivial");
  auto w = wm_graded_decomposition(m2);
  REQUIRE(w.decomposition);
  CHECK(w.decomposition->B.dim() == 4);
  CHECK(w.decomposition->radical.dim() == 0);
  auto l2 = radical_square_layers(m2, *w.decomposition);
  CHECK(l2.ok);
  CHECK(l2.j2_dim == 0);
  for (auto d : l2.j10_dims) CHECK(d == 0);
  for (auto d : l2.j01_dims) CHECK(d == 0);
}

TEST_CASE("decomposition invariants on graded-simple fixtures") {
  for (const auto &name : fixture_names()) {
    auto a = fixture(name);
    if (!is_graded_simple(a).holds()) continue;
    CAPTURE(name);
    auto r = wm_graded_decomposition(a);
    REQUIRE(r.decomposition);
    const auto &d = *r.decomposition;
    const auto &alg = a.algebra();
    auto sum = [&](const std::vector<Vec> &fam) {
      Vec s = alg.zero();
      for (const auto &f : fam) s = add(s, f);
      return s;
    };
    for (const auto *fam : {&d.row_idempotents, &d.column_idempotents}) {
      CHECK(sum(*fam) == d.unit_of_B);
      for (std::size_t i = 0; i < fam->size(); ++i)
        for (std::size_t j = 0; j < fam->size(); ++j) {
          Vec p = alg.mul((*fam)[i], (*fam)[j]);
          CHECK(p == (i == j ? (*fam)[i] : alg.zero()));
        }
    }
    CHECK(intersect(d.B, d.radical).dim() == 0);
    CHECK((d.B + d.radical).dim() == a.dim());
    auto full = Subspace::full(a.dim(), a.field());
    auto j2 = products_span(alg, d.radical, d.radical);
    CHECK(products_span(alg, j2, full).dim() == 0);
    CHECK(products_span(alg, full, j2).dim() == 0);
    std::size_t nm = d.grading.pres.n * d.grading.pres.m;
    CHECK(d.radical.dim() <= (nm - 1) * d.B.dim());
    CHECK(radical_square_layers(a, d).ok);
  }
}

TEST_CASE("ann_duality examples") {
  CHECK(ann_duality(2, Subspace(2, Field{})).dim() == 4);
  CHECK(ann_duality(2, Subspace::full(2, Field{})).dim() == 0);
  auto i = ann_duality(2, Subspace::span(2, Field{}, {vec({0, 1})}));
  CHECK(i == matrices(2, {{0, 0}, {1, 0}}));
}

TEST_CASE("ann_duality lattice laws") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    auto w1 = gen::random_subspace(rng, k), w2 = gen::random_subspace(rng, k);
    auto a1 = ann_duality(k, w1), a2 = ann_duality(k, w2);
    CHECK(a1.dim() == k * (k - w1.dim()));
    CHECK(ann_duality_inverse(k, a1) == w1);
    CHECK(ann_duality(k, intersect(w1, w2)) == a1 + a2);
    CHECK(ann_duality(k, w1 + w2) == intersect(a1, a2));
  }
}

TEST_CASE("product of a right and a left ideal") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 30; ++t) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    auto i = gen::random_left_ideal(rng, k);
    auto v = gen::random_right_ideal(rng, k);
    REQUIRE(is_left_ideal(k, i));
    REQUIRE(is_right_ideal(k, v));
    auto vi = products_span(matrix_algebra(k), v, i);
    CHECK(vi.dim() * k * k == v.dim() * i.dim());
  }
}

TEST_CASE("simultaneous_column_form") {
  auto check_form = [](std::size_t k, const std::vector<Subspace> &ideals) {
    Mat p = simultaneous_column_form(k, ideals);
    Mat pinv = inverse(p);
    std::size_t off = 0;
    for (const auto &ideal : ideals) {
      std::size_t w = ideal.dim() / k;
      for (const auto &x : ideal.basis()) {
        Mat y = pinv * vec_to_matrix(x, k) * p;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c)
            if (c < off || c >= off + w) CHECK(y.at(r, c).is_zero());
      }
      off += w;
    }
  };
  auto col1 = matrices(2, {{0, 0}, {1, 0}}), col2 = matrices(2, {{0, 1}, {1, 1}});
  CHECK(simultaneous_column_form(2, {col1, col2}) == Mat::identity(2));
  check_form(2, {ann_duality(2, Subspace::span(2, Field{}, {vec({1, 1})})),
                 ann_duality(2, Subspace::span(2, Field{}, {vec({1, -1})}))});
  CHECK(simultaneous_column_form(3, {Subspace::full(9, Field{})}) == Mat::identity(3));
  CHECK_THROWS_AS(simultaneous_column_form(2, {col1, col1}), Error);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    Mat s = gen::random_invertible(rng, k);
    std::vector<Subspace> ideals;
    std::size_t from = 0;
    while (from < k) {
      std::size_t to = std::uniform_int_distribution<std::size_t>(from + 1, k)(rng);
      ideals.push_back(gen::left_ideal_generated(k, {gen::conjugated_projection(s, from, to)}));
      from = to;
    }
    check_form(k, ideals);
  }
}

TEST_CASE("minimal_left_ideal_row") {
  CHECK(minimal_left_ideal_row(matrices(2, {{0, 0}, {1, 0}}), 2) == vec({1, 0}));
  CHECK(minimal_left_ideal_row(ann_duality(2, Subspace::span(2, Field{}, {vec({1, -1})})), 2) == vec({1, 1}));
  CHECK(minimal_left_ideal_row(matrices(2, {{0, 1}, {1, 1}}), 2) == vec({0, 1}));
  CHECK_THROWS_AS(minimal_left_ideal_row(matrices(2, {{0, 0}, {0, 1}}), 2), Error);
  CHECK_THROWS_AS(minimal_left_ideal_row(Subspace::full(4, Field{}), 2), Error);
}

TEST_CASE("split_iso_to_matrix") {
  auto m2 = fixture("m2-trivial").algebra();
  auto psi = split_iso_to_matrix(m2);
  CHECK(psi.k == 2);
  CHECK(psi.psi_inv * psi.psi == Mat::identity(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(vec_to_matrix(psi.apply(m2.product(i, j)), 2) ==
            vec_to_matrix(psi.apply(m2.basis_vec(i)), 2) * vec_to_matrix(psi.apply(m2.basis_vec(j)), 2));

  auto ut2 = fixture("ut2-z2").algebra();
  CHECK_THROWS_AS(split_iso_to_matrix(radical_quotient(ut2).q), Error);

  auto munn = munn_algebra(2, 2, ones(2, 2));
  auto q = radical_quotient(munn.algebra());
  auto p1 = split_iso_to_matrix(q.q);
  CHECK(p1.k == 1);
}

TEST_CASE("graded_iso_check") {
  auto ft = fixture("ft-rzb2");
  auto qdim = radical_quotient(ft.algebra()).q.dim();
  CHECK(graded_iso_check(ft, ft, Mat::identity(qdim)));
  // the same algebra with the band labels swapped
  auto swapped = ft.regraded(ft.semigroup(), {1, 0});
  CHECK(graded_iso_check(ft, swapped, Mat::identity(qdim)));

  auto a = fixture("two-b");
  auto b1 = graded_subalgebra(a, {a.algebra().basis_vec(0), a.algebra().basis_vec(1), a.algebra().basis_vec(2),
                                  a.algebra().basis_vec(3)});
  auto b2 = graded_subalgebra(a, {a.algebra().basis_vec(0), a.algebra().basis_vec(2), a.algebra().basis_vec(4),
                                  a.algebra().basis_vec(5)});
  CHECK(is_graded_simple(a).holds());
  CHECK_FALSE(graded_iso_check(b1, b2, Mat::identity(4)));
}

} // TEST_SUITE
