#include <gtest/gtest.h>

#include <random>

#include "polyrep/errors.hpp"
#include "polyrep/verify.hpp"
#include "test_support.hpp"

using namespace polyrep;

namespace {

struct Built {
  HPolytope h;
  FaceLattice lattice;
  PRepresentation prep;
};

const Built& dodecahedron() {
  static const Built b = [] {
    const auto h = fixtures::skew_dodecahedron();
    auto c = construct(h);
    return Built{h, std::move(c.lattice), std::move(c.prep)};
  }();
  return b;
}

Built build(const HPolytope& h) {
  auto c = construct(h);
  return Built{h, std::move(c.lattice), std::move(c.prep)};
}

// The same representation with some products removed.
PRepresentation without(const PRepresentation& prep, const std::function<bool(const ProductPoly&)>& drop) {
  PRepresentation out = prep;
  out.products.clear();
  for (const auto& pp : prep.products)
    if (!drop(pp)) out.products.push_back(pp);
  return out;
}

std::size_t mutation_disagreements(const Built& b, const PRepresentation& mutated) {
  return equivalence_test(b.h, b.lattice, mutated, SampleConfig::with_total(4000, 7)).disagreements.size();
}

RatVec jitter(std::mt19937_64& rng, const RatVec& x, long den) {
  RatVec y = x;
  for (auto& e : y) e += make_rat(Int(static_cast<long>(rng() % 201) - 100), Int(den));
  return y;
}

}  // namespace

TEST(Membership, SquareExamplePoint) {
  const auto prep = construct_prep(fixtures::square());
  const RatVec x{Rat(3, 2), Rat(0)};
  const auto vh = member_hrep(fixtures::square(), x);
  EXPECT_FALSE(vh.inside);
  ASSERT_EQ(vh.violated.size(), 1u);
  EXPECT_EQ(vh.violated[0].id, "row_1");
  EXPECT_EQ(*vh.violated[0].value, Rat(-1, 2));
  MemberOptions o;
  o.all_violations = true;
  o.values = true;
  const auto vp = member_prep(prep, x, o);
  EXPECT_FALSE(vp.inside);
  ASSERT_FALSE(vp.violated.empty());
  EXPECT_EQ(vp.violated[0].id, "p_1");
  EXPECT_EQ(*vp.violated[0].value, Rat(-5, 4));
}

TEST(Membership, FirstViolationOnlyByDefault) {
  const auto prep = construct_prep(fixtures::square());
  const auto v = member_prep(prep, {Rat(5), Rat(5)});
  EXPECT_FALSE(v.inside);
  EXPECT_EQ(v.violated.size(), 1u);
  EXPECT_FALSE(v.violated[0].value);
}

TEST(Membership, VerticesAndCenterAreInside) {
  const auto& b = dodecahedron();
  for (const auto& v : b.lattice.vertices) EXPECT_TRUE(member_prep(b.prep, v.coords).inside);
  EXPECT_TRUE(member_prep(b.prep, zeros(3)).inside);
  EXPECT_FALSE(member_prep(b.prep, {Rat(100), Rat(0), Rat(0)}).inside);
}

TEST(Membership, PolysUseDefaultIds) {
  const auto v = member_polys({SparsePoly::constant(1, Rat(1)), SparsePoly::variable(1, 0)}, {Rat(-1)});
  EXPECT_FALSE(v.inside);
  ASSERT_EQ(v.violated.size(), 1u);
  EXPECT_EQ(v.violated[0].id, "q_2");
}

TEST(Evaluation, ProductSignMatchesExactValue) {
  const auto& b = dodecahedron();
  std::mt19937_64 rng(31);
  for (int n = 0; n < 300; ++n) {
    const auto& v = b.lattice.vertices[rng() % b.lattice.vertices.size()].coords;
    const auto x = jitter(rng, v, n % 2 ? 50 : 1000);
    for (const auto& pp : b.prep.products) EXPECT_EQ(product_sign(pp, x), sgn(eval_product(pp, x)));
  }
  // Exactly on a vertex several factors vanish.
  for (const auto& pp : b.prep.products) EXPECT_EQ(product_sign(pp, b.lattice.vertices[0].coords), 0);
}

int exact_cmp_one(const EpsilonPoly& ep, const RatVec& x) {
  const Rat v = eval_epsilon_exact(ep, x);
  return v < 1 ? -1 : (v > 1 ? 1 : 0);
}

TEST(Evaluation, GuardedAgreesWithExactAroundVertices) {
  const auto& b = dodecahedron();
  const auto& ep = b.prep.epsilon;
  std::mt19937_64 rng(32);
  std::size_t certified = 0;
  for (int n = 0; n < 400; ++n) {
    const auto& v = b.lattice.vertices[rng() % b.lattice.vertices.size()].coords;
    const Rat t = make_rat(Int(static_cast<long>(rng() % 2001) - 1000), Int(10000));
    RatVec x = add(v, scale(sub(v, b.prep.shift), t));
    if (n % 3 == 0) x = jitter(rng, x, 20000);
    const int truth = exact_cmp_one(ep, x);
    const auto guarded = compare_epsilon(ep, x, EvalMode::guarded);
    EXPECT_EQ(guarded.cmp, truth) << to_string(x);
    EXPECT_EQ(compare_epsilon(ep, x, EvalMode::exact).cmp, truth);
    if (const auto g = guarded_epsilon_compare(ep, x)) EXPECT_EQ(*g, truth);
    certified += guarded.float_certified;
  }
  EXPECT_GT(certified, 350u);
}

TEST(Evaluation, GuardedAgreesWithExactAtTheLevelSet) {
  // Bisect for p_eps = 1 along rays from the center, then probe at relative
  // offsets down to 2^-50 where the float margin cannot decide.
  const auto& b = dodecahedron();
  const auto& ep = b.prep.epsilon;
  std::mt19937_64 rng(33);
  std::size_t fallbacks = 0;
  for (int n = 0; n < 12; ++n) {
    RatVec u(3);
    for (auto& e : u) e = Rat(static_cast<long>(rng() % 21) - 10);
    if (sgn(norm_sq(u)) == 0) continue;
    Rat lo = 0, hi = 1;
    while (compare_epsilon(ep, add(b.prep.shift, scale(u, hi))).cmp <= 0) hi *= 2;
    for (int it = 0; it < 60; ++it) {
      const Rat mid = (lo + hi) / 2;
      (compare_epsilon(ep, add(b.prep.shift, scale(u, mid))).cmp <= 0 ? lo : hi) = mid;
    }
    for (int j = 10; j <= 50; j += 4) {
      for (int side : {-1, 1}) {
        const Rat s = lo * (1 + Rat(side) / pow(Rat(2), j));
        const RatVec x = add(b.prep.shift, scale(u, s));
        const int truth = exact_cmp_one(ep, x);
        EXPECT_EQ(truth, side) << j;
        const auto g = guarded_epsilon_compare(ep, x);
        if (g) EXPECT_EQ(*g, truth);
        fallbacks += !g;
        EXPECT_EQ(compare_epsilon(ep, x).cmp, truth);
      }
    }
  }
  EXPECT_GT(fallbacks, 0u);
}

TEST(Evaluation, ExactBitLimit) {
  auto ep = construct_prep(fixtures::square()).epsilon;
  ep.two_p = 100000000;
  const RatVec x{Rat(1, 3), Rat(-1, 7)};
  EXPECT_THROW(eval_epsilon_exact(ep, x), ResourceError);
  const auto v = compare_epsilon(ep, x);
  EXPECT_EQ(v.cmp, -1);
  EXPECT_TRUE(v.float_certified);
  EXPECT_EQ(compare_epsilon(ep, {Rat(3, 2), Rat(0)}).cmp, 1);
}

TEST(Sampling, ClassesAreWhatTheyClaim) {
  const auto& b = dodecahedron();
  const auto samples = generate_samples(b.h, b.lattice.vertices, sample_faces(b.lattice), b.prep.metadata.eps_bar,
                                        SampleConfig::with_total(1000, 3));
  std::array<std::size_t, kSampleClasses> counts{};
  for (const auto& s : samples) {
    ++counts[static_cast<std::size_t>(s.cls)];
    const bool inside = member_hrep(b.h, s.point, false).inside;
    switch (s.cls) {
      case SampleClass::interior:
        for (const auto& row : b.h.rows) EXPECT_GT(row.slack(s.point), 0);
        break;
      case SampleClass::boundary: {
        EXPECT_TRUE(inside);
        bool tight = false;
        for (const auto& row : b.h.rows) tight = tight || sgn(row.slack(s.point)) == 0;
        EXPECT_TRUE(tight);
        break;
      }
      case SampleClass::near_outside:
      case SampleClass::far_outside:
        EXPECT_FALSE(inside);
        break;
      case SampleClass::random_box:
        break;
    }
  }
  for (auto c : counts) EXPECT_GT(c, 0u);
  EXPECT_GE(counts[0], 300u);
}

TEST(Sampling, DeterministicPerSeed) {
  const auto& b = dodecahedron();
  const auto faces = sample_faces(b.lattice);
  const auto a = generate_samples(b.h, b.lattice.vertices, faces, Rat(1, 64), SampleConfig::with_total(500, 9));
  const auto c = generate_samples(b.h, b.lattice.vertices, faces, Rat(1, 64), SampleConfig::with_total(500, 9));
  const auto d = generate_samples(b.h, b.lattice.vertices, faces, Rat(1, 64), SampleConfig::with_total(500, 10));
  ASSERT_EQ(a.size(), c.size());
  bool same = true, differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && a[i].point == c[i].point && a[i].cls == c[i].cls;
    differs = differs || (i < d.size() && a[i].point != d[i].point);
  }
  EXPECT_TRUE(same);
  EXPECT_TRUE(differs);
}

TEST(Sampling, SplitOfTheTotal) {
  const auto c = SampleConfig::with_total(10000, 0);
  EXPECT_EQ(c.interior, 3000u);
  EXPECT_EQ(c.boundary, 1000u);
  EXPECT_EQ(c.near_outside, 2000u);
  EXPECT_EQ(c.random_box, 4000u);
}

TEST(Equivalence, ConstructedRepresentationsAgree) {
  const auto& b = dodecahedron();
  const auto report = equivalence_test(b.h, b.lattice, b.prep, SampleConfig::with_total(3000, 1));
  EXPECT_TRUE(report.passed()) << report.summary();
  for (const auto& h : {fixtures::square(), fixtures::cube(3), fixtures::load_data("hexagon.hrep")}) {
    const auto x = build(h);
    EXPECT_TRUE(equivalence_test(x.h, x.lattice, x.prep, SampleConfig::with_total(2000, 2)).passed());
  }
}

TEST(Equivalence, RandomPolygons) {
  for (const auto& h : fixtures::random_polygons(5, 77)) {
    const auto b = build(h);
    const auto r = equivalence_test(b.h, b.lattice, b.prep, SampleConfig::with_total(1500, 4));
    EXPECT_TRUE(r.passed()) << emit_hrep(h) << r.summary();
    EXPECT_TRUE(structural_checks(b.h, b.lattice, b.prep, 4).passed());
  }
}

TEST(Structural, DodecahedronPasses) {
  const auto& b = dodecahedron();
  const auto r = structural_checks(b.h, b.lattice, b.prep, 5);
  EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(Structural, DetectsAWrongFactor) {
  const auto& b = dodecahedron();
  auto bad = b.prep;
  bad.products[0].factors[0].constant += 1;
  const auto r = structural_checks(b.h, b.lattice, bad, 5);
  EXPECT_FALSE(r.facet_factor);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.failures.empty());
}

TEST(Mutations, DroppingFacetOrEdgeProductIsDetected) {
  const auto& b = dodecahedron();
  EXPECT_GT(mutation_disagreements(b, without(b.prep, [](const ProductPoly& p) { return p.k == 2; })), 0u);
  EXPECT_GT(mutation_disagreements(b, without(b.prep, [](const ProductPoly& p) { return p.k == 1; })), 0u);
  EXPECT_GT(mutation_disagreements(b, without(b.prep, [](const ProductPoly& p) { return p.k == 0; })), 0u);
}

TEST(Mutations, SingleVertexProductIsRedundantInDimensionThree) {
  // Near a vertex, a point passing the facet and edge products violates two
  // facets (s_i, s_j < 0) with one more negative edge sum (s_i + s_l < 0);
  // then two of the three weighted vertex forms are negative.
  const auto& b = dodecahedron();
  for (std::size_t j = 2; j < b.prep.products.size(); ++j) {
    const auto id = b.prep.products[j].id();
    EXPECT_EQ(mutation_disagreements(b, without(b.prep, [&](const ProductPoly& p) { return p.id() == id; })), 0u)
        << id;
  }
}

TEST(Mutations, PlanarVertexProductIsDetected) {
  const auto b = build(fixtures::load_data("hexagon.hrep"));
  EXPECT_GT(mutation_disagreements(b, without(b.prep, [](const ProductPoly& p) { return p.k == 0; })), 0u);
}

TEST(Mutations, NeutralizedEpsilonIsDetected) {
  const auto& b = dodecahedron();
  auto m = b.prep;
  m.epsilon.weight = 0;
  EXPECT_GT(mutation_disagreements(b, m), 0u);
}

TEST(OutwardPoints, AreOutsideByTheRequestedDistance) {
  const auto& b = dodecahedron();
  const Rat dist(1, 1000);
  const auto pts = outward_points(b.h, b.lattice, dist, 200, 8);
  ASSERT_EQ(pts.size(), 200u);
  for (const auto& x : pts) {
    bool far = false;
    for (const auto& row : b.h.rows) {
      const Rat s = -row.slack(x);
      far = far || (sgn(s) > 0 && s * s >= dist * dist * norm_sq(row.normal));
    }
    EXPECT_TRUE(far) << to_string(x);
    EXPECT_FALSE(member_prep(b.prep, x).inside);
  }
}
