#include <gtest/gtest.h>

#include "pfactor/audit.hpp"
#include "pfactor/serialize.hpp"

using namespace pfactor;
using audit::Section;
using audit::Status;

namespace {

std::int64_t built_size(std::int64_t n, std::int64_t s) { return static_cast<std::int64_t>(build_extremal(n, s).size()); }

Rational value(const std::string& poly, std::int64_t n, std::int64_t d, Rational s) {
  return parse_polynomial(poly).eval({Rational(n), Rational(d), s});
}

}  // namespace

TEST(Claims, TablesCoverEverySubcase) {
  EXPECT_EQ(audit::size_claims().size(), 6U);
  EXPECT_EQ(audit::spectral_claims().size(), 3U);
  EXPECT_EQ(audit::find_claim(Section::Size, 1, 2).endpoint.printed, "6n-22d-26");
  EXPECT_EQ(audit::find_claim(Section::Spectral, 1).star_offset, 2);
  EXPECT_THROW(audit::find_claim(Section::Size, 0, 0), Error);
  for (const auto& c : audit::size_claims()) {
    EXPECT_NO_THROW(parse_polynomial(c.quadratic));
    EXPECT_NO_THROW(parse_polynomial(c.display.printed));
  }
}

// The defined quadratics against differences of directly counted edges.
TEST(Claims, QuadraticsMatchCountedEdges) {
  for (const auto& c : audit::size_claims()) {
    for (std::int64_t d = 1; d <= 8; ++d) {
      if (d % 3 != c.d_class) continue;
      for (std::int64_t n = (5 * d) / 3 + 2; n <= 70; ++n) {
        for (std::int64_t s = d + 1; (5 * s) / 3 + 2 <= n; ++s) {
          if (s % 3 != c.s_class) continue;
          ASSERT_EQ(value(c.quadratic, n, d, Rational(s)), Rational(18 * (built_size(n, d) - built_size(n, s))))
              << c.id() << " n=" << n << " d=" << d << " s=" << s;
        }
      }
    }
  }
}

TEST(Claims, SpectralQuadraticsMatchHongRadicand) {
  for (const auto& c : audit::spectral_claims()) {
    for (std::int64_t s = 1; s <= 12; ++s) {
      if (s % 3 != c.s_class) continue;
      for (std::int64_t n = (5 * s) / 3 + 2; n <= 80; ++n) {
        const std::int64_t radicand = 2 * built_size(n, s) - n + 1;
        ASSERT_EQ(value(c.quadratic, n, 1, Rational(s)), Rational(9 * radicand)) << c.id();
      }
    }
  }
}

TEST(Difference, SpecExamples) {
  const auto e = audit::verify_difference_identity(audit::find_claim(Section::Size, 0, 1), 60, 4, 6);
  EXPECT_EQ(e.status, Status::Verified);

  const auto t = audit::verify_difference_identity(audit::find_claim(Section::Size, 1, 1), 60, 4, 7);
  EXPECT_EQ(t.status, Status::TypoResolved);
  EXPECT_EQ(t.resolved, "-16s^2+(12n-16)s-12nd+16d^2+16d");
  EXPECT_EQ(t.printed, "-16s^2-(12n-16)s+12nd+16d^2+16d");

  try {
    audit::verify_difference_identity(audit::find_claim(Section::Size, 0, 1), 60, 4, 7);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::InvalidSubcaseParams);
  }
  EXPECT_THROW(audit::verify_difference_identity(audit::find_claim(Section::Size, 1, 1), 60, 4, 4), Error);
}

TEST(Difference, CalibrationAtEqualArguments) {
  EXPECT_EQ(edge_count_closed_form(40, 4) - edge_count_closed_form(40, 4), 0);
}

TEST(Factorization, SpecExamples) {
  EXPECT_EQ(audit::verify_factorization(audit::find_claim(Section::Size, 0, 1), 60, 4).status, Status::Verified);
  EXPECT_EQ(audit::verify_factorization(audit::find_claim(Section::Size, 2, 1), 60, 4).status, Status::Verified);
  EXPECT_EQ(audit::verify_factorization(audit::find_claim(Section::Spectral, 0), 60, 4).status, Status::Verified);
  const auto t = audit::verify_factorization(audit::find_claim(Section::Size, 1, 1), 60, 4);
  EXPECT_EQ(t.status, Status::TypoResolved);
  EXPECT_EQ(t.resolved, "-4/25(3n-20d-36)(3n-5d-6)");
}

TEST(Endpoint, SpecExamples) {
  const auto& c21 = audit::find_claim(Section::Size, 0, 1);
  EXPECT_EQ(value(c21.quadratic, 25, 1, Rational(2)), Rational(482));
  EXPECT_EQ(audit::verify_endpoint_value(c21, 25, 1).status, Status::Verified);

  const auto& c26 = audit::find_claim(Section::Size, 2, 2);
  EXPECT_EQ(value(c26.quadratic, 31, 2, Rational(3)), Rational(266));
  EXPECT_EQ(audit::verify_endpoint_value(c26, 31, 2).status, Status::Verified);

  const auto& g0 = audit::find_claim(Section::Spectral, 0);
  EXPECT_EQ(value(g0.quadratic, 26, 1, Rational(2)),
            Rational(9 * 26 * 26 - 12 * 26 - 48 * 26 + 16 + 68 + 79));
  EXPECT_EQ(audit::verify_endpoint_value(g0, 26, 1).status, Status::Verified);
}

TEST(Endpoint, NegativeValueBelowBoundIsNotFlagged) {
  // n below the order bound: the value may be negative without contradicting anything.
  const auto e = audit::verify_endpoint_value(audit::find_claim(Section::Size, 0, 1), 3, 1);
  EXPECT_EQ(e.status, Status::Verified);
}

TEST(Extremum, SpecExamples) {
  const auto a = audit::verify_minimum_location(audit::find_claim(Section::Size, 0, 1), 60, 4);
  EXPECT_EQ(a.status, Status::Verified);
  EXPECT_NE(a.detail.find("outside the class"), std::string::npos);
  EXPECT_EQ(audit::verify_minimum_location(audit::find_claim(Section::Size, 1, 2), 60, 2).status, Status::Verified);
  EXPECT_EQ(audit::verify_minimum_location(audit::find_claim(Section::Spectral, 2), 60, 4).status, Status::Verified);
  EXPECT_EQ(audit::verify_minimum_location(audit::find_claim(Section::Size, 0, 1), 8, 4).status, Status::Empty);
}

TEST(Chain, SpecExamples) {
  const auto a = audit::verify_spectral_chain(audit::find_claim(Section::Spectral, 0), 26, 1);
  EXPECT_EQ(a.status, Status::Verified);
  const auto b = audit::verify_spectral_chain(audit::find_claim(Section::Spectral, 2), 32, 2);
  EXPECT_EQ(b.status, Status::Verified);
  ASSERT_TRUE(b.margin);
  EXPECT_GT(*b.margin, 0.0);
  const auto c = audit::verify_spectral_chain(audit::find_claim(Section::Spectral, 1), 80, 7);
  EXPECT_EQ(c.status, Status::Verified);
  EXPECT_THROW(audit::verify_spectral_chain(audit::find_claim(Section::Spectral, 0), 25, 1), Error);

  // The radical at s = 3 equals Hong's bound on the built graph.
  const double radical = std::sqrt(value("9n^2-12ns-36n+16s^2+36s+27", 26, 1, Rational(3)).to_double()) / 3.0;
  EXPECT_NEAR(radical, hong_bound(build_extremal(26, 3)), 1e-12);
}

TEST(Sweep, SmallGridStatuses) {
  audit::AuditConfig cfg;
  cfg.max_n = 80;
  cfg.max_delta = 5;
  cfg.rho_max_n = 90;
  const auto entries = audit::run_identity_audit(cfg);
  ASSERT_FALSE(entries.empty());
  EXPECT_TRUE(std::is_sorted(entries.begin(), entries.end(), audit::detail::entry_less));
  for (const auto& e : entries) {
    if (e.claim == "size.s1d1.difference" || e.claim == "size.s1d1.factorization" || e.claim == "spectral.s2.chain-rewrite") {
      EXPECT_EQ(e.status, Status::TypoResolved) << e.claim;
    } else {
      EXPECT_EQ(e.status, Status::Verified) << e.claim << ": " << e.detail;
    }
  }
  // Deterministic output.
  const auto again = audit::run_identity_audit(cfg);
  ASSERT_EQ(again.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) EXPECT_EQ(audit::to_json(again[i]), audit::to_json(entries[i]));
}

TEST(Sweep, FormTallyFlagsAmbiguity) {
  // Two alternatives that both hold cannot resolve a failing printed form.
  const audit::Form form{"n+1", {"n+2-1", "1+n"}};
  audit::detail::FormTally t(form);
  t.record_equal({Rational(3), Rational(1), Rational(0)}, Rational(4), "here");
  audit::Entry e;
  t.fill(e);
  EXPECT_EQ(e.status, Status::Verified);

  const audit::Form wrong{"n", {"n+1", "1+n"}};
  audit::detail::FormTally w(wrong);
  w.record_equal({Rational(3), Rational(1), Rational(0)}, Rational(4), "here");
  audit::Entry f;
  w.fill(f);
  EXPECT_EQ(f.status, Status::Mismatch);
}

TEST(Sampling, ExtremalGraphSitsOnBothThresholds) {
  audit::SampleStats st;
  const auto e = audit::contrapositive_sample(25, 1, 1, 9, 1e-8, &st);
  EXPECT_EQ(e.status, Status::Verified);
  EXPECT_EQ(st.max_deleted, 0U);
  EXPECT_NEAR(st.max_rho, st.rho_threshold, 1e-8);
}

TEST(Sampling, SeededAndReproducible) {
  const auto a = audit::contrapositive_sample(25, 1, 30, 5);
  const auto b = audit::contrapositive_sample(25, 1, 30, 5);
  EXPECT_EQ(a.status, Status::Verified);
  EXPECT_EQ(audit::to_json(a), audit::to_json(b));
  EXPECT_THROW(audit::contrapositive_sample(70, 1, 1, 1), Error);
}

TEST(Remark, SmallestExtremalGraphHasAFactor) {
  const auto r = audit::remark_audit(7, 1);
  EXPECT_TRUE(r.witness_holds);
  EXPECT_EQ(r.witness.isolated, 1U);
  ASSERT_TRUE(r.search.factor);
  EXPECT_TRUE(r.certificate_check);
  EXPECT_TRUE(r.entry.certificate.has_value());
  EXPECT_EQ(r.entry.status, Status::Mismatch);
  EXPECT_THROW(audit::remark_audit(25, 1), Error);
  EXPECT_THROW(audit::remark_audit(10, 3), Error);
}
