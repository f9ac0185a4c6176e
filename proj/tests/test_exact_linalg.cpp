#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace verona;
using verona::oracle::Rng;

namespace {

QVector e(std::size_t n, std::size_t k) {
  QVector v(n);
  v[k] = 1;
  return v;
}

Subspace span(std::initializer_list<QVector> vs, std::size_t n) { return span_of(std::vector<QVector>(vs), n); }

}  // namespace

TEST(Scalar, ParsesAndFormats) {
  EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(to_string(parse_scalar("-10/5")), "-2");
  EXPECT_EQ(to_string(Scalar(-3, 4)), "-3/4");
  for (const char* bad : {"1/0", "", "a", "1/", "/2", "1.5", "1/-2"}) {
    try {
      parse_scalar(bad);
      FAIL() << bad;
    } catch (const Error& err) {
      EXPECT_EQ(err.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Canonicalize, ScalesRows) {
  const Subspace s = canonicalize(QMatrix{{2, 0, 0}, {0, 3, 0}});
  EXPECT_EQ(s.basis(), (QMatrix{{1, 0, 0}, {0, 1, 0}}));
}

TEST(Canonicalize, DropsDependentRows) {
  const Subspace s = canonicalize(QMatrix{{1, 1}, {2, 2}});
  EXPECT_EQ(s.basis(), (QMatrix{{1, 1}}));
}

TEST(Canonicalize, ThreeRowExampleHasRankTwo) {
  // (1,0,1) = (1,2,3) - 2 (0,1,1), so the span is a plane; the Leibniz oracle agrees.
  const QMatrix m{{1, 2, 3}, {0, 1, 1}, {1, 0, 1}};
  EXPECT_TRUE(is_zero(oracle::leibniz_determinant(m)));
  EXPECT_EQ(canonicalize(m).basis(), (QMatrix{{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(canonicalize(QMatrix{{1, 2, 3}, {0, 1, 1}, {1, 0, 2}}), Subspace::full(3));
}

TEST(Canonicalize, EmptyAmbientIsAnError) {
  try {
    canonicalize(QMatrix(2, 0));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::EmptyAmbient);
  }
}

TEST(Canonicalize, RowEquivalentInputsAgree) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const QMatrix m = rng.integer_matrix(3, 5);
    const QMatrix mix = rng.integer_matrix(3, 3);
    if (is_zero(determinant(mix))) continue;
    EXPECT_EQ(canonicalize(m), canonicalize(mix * m));
    EXPECT_EQ(canonicalize(canonicalize(m).basis()), canonicalize(m));
  }
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(span({e(3, 0), e(3, 1)}, 3), span({e(3, 1), e(3, 2)}, 3)), span({e(3, 1)}, 3));
  EXPECT_EQ(intersect(span({e(3, 0)}, 3), span({e(3, 1)}, 3)).dim(), 0u);
  // Kernel-of-stacked-matrix oracle: a(1,1,0) + b(0,0,1) = c(1,0,0) + d(0,1,0) forces b = 0, a = c = d.
  EXPECT_EQ(intersect(span({{1, 1, 0}, e(3, 2)}, 3), span({e(3, 0), e(3, 1)}, 3)), span({{1, 1, 0}}, 3));
}

TEST(Intersect, DimensionMismatch) {
  try {
    intersect(Subspace::full(2), Subspace::full(3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Sum, Examples) {
  EXPECT_EQ(sum(span({e(2, 0)}, 2), span({e(2, 1)}, 2)), Subspace::full(2));
  const Subspace a = span({{1, 2, 3}}, 3);
  EXPECT_EQ(sum(a, a), a);
  EXPECT_EQ(sum(span({{1, 1}}, 2), span({{1, -1}}, 2)), Subspace::full(2));
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(annihilator(span({e(2, 0)}, 2)), span({e(2, 1)}, 2));
  EXPECT_EQ(annihilator(Subspace::zero(4)), Subspace::full(4));
  EXPECT_EQ(annihilator(span({{1, 1, 0}}, 3)), span({{1, -1, 0}, e(3, 2)}, 3));
}

TEST(Subspaces, GrassmannFormulaAndDuality) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 6));
    const Subspace a = canonicalize(rng.integer_matrix(static_cast<std::size_t>(rng.integer(1, 4)), n, 2));
    const Subspace b = canonicalize(rng.integer_matrix(static_cast<std::size_t>(rng.integer(1, 4)), n, 2));
    const Subspace cap = intersect(a, b);
    EXPECT_EQ(a.dim() + b.dim(), cap.dim() + sum(a, b).dim());
    EXPECT_TRUE(a.contains(cap) && b.contains(cap));
    EXPECT_EQ(annihilator(annihilator(a)), a);
    EXPECT_EQ(annihilator(a).dim(), n - a.dim());
    // Inclusion reversal.
    EXPECT_TRUE(annihilator(cap).contains(annihilator(a)));
    // Every annihilator vector kills every basis vector.
    const Subspace ann = annihilator(a);
    for (std::size_t i = 0; i < ann.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Scalar dot = 0;
        for (std::size_t k = 0; k < n; ++k) dot += ann.basis()(i, k) * a.basis()(j, k);
        EXPECT_TRUE(is_zero(dot));
      }
  }
}

TEST(Determinant, MatchesLeibniz) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const QMatrix m = rng.integer_matrix(4, 4);
    EXPECT_EQ(determinant(m), oracle::leibniz_determinant(m));
    EXPECT_EQ(ring_determinant(m), oracle::leibniz_determinant(m));
    if (auto inv = try_inverse(m)) {
      EXPECT_EQ(m * *inv, QMatrix::identity(4));
    } else {
      EXPECT_TRUE(is_zero(determinant(m)));
    }
  }
}

TEST(Minors, AdjugateIdentity) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const QMatrix m = rng.integer_matrix(4, 4);
    EXPECT_EQ(m * adjugate(m), QMatrix::identity(4) * determinant(m));
  }
}

TEST(GeneralPosition, Examples) {
  const Subspace f1 = span({e(2, 1)}, 2), f2 = span({e(2, 0)}, 2), f3 = span({{1, -1}}, 2);
  EXPECT_TRUE(check_general_position({f1, f2, f3}, 1));
  EXPECT_FALSE(check_general_position({f1, f2, f2}, 1));
  // Three coordinate planes and x+y+z = 0: every triple of normals (1,0,0),(0,1,0),(0,0,1),(1,1,1) has rank 3.
  const Subspace yz = span({e(3, 1), e(3, 2)}, 3), xz = span({e(3, 0), e(3, 2)}, 3), xy = span({e(3, 0), e(3, 1)}, 3);
  const Subspace plane = annihilator(span({{1, 1, 1}}, 3));
  EXPECT_TRUE(check_general_position({yz, xz, xy, plane}, 1));
}

TEST(GeneralPosition, PermutationInvariant) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Subspace> list;
    for (int k = 0; k < 4; ++k) list.push_back(canonicalize(rng.integer_matrix(4, 6, 1)));
    bool ok = std::all_of(list.begin(), list.end(), [](const Subspace& s) { return s.codim() == 2; });
    if (!ok) continue;
    const bool verdict = check_general_position(list, 2);
    std::shuffle(list.begin(), list.end(), rng.engine());
    EXPECT_EQ(check_general_position(list, 2), verdict);
  }
}

TEST(GeneralPosition, RejectsWrongCodimension) {
  try {
    check_general_position({Subspace::full(2), Subspace::zero(2), Subspace::zero(2)}, 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Subspace, MapsOntoAgreesWithImage) {
  Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const QMatrix m = rng.integer_matrix(5, 5, 1);
    const Subspace source = canonicalize(rng.integer_matrix(3, 5, 2));
    const Subspace target = trial % 2 ? image(m, source) : canonicalize(rng.integer_matrix(3, 5, 1));
    EXPECT_EQ(maps_onto(m, source, target), image(m, source) == target);
  }
}
