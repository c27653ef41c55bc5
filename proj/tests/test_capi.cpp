#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "classa/classa.h"

namespace {

struct Spec {
  classa_spec* ptr = nullptr;
  ~Spec() { classa_spec_free(ptr); }
};

struct Cert {
  classa_certification* ptr = nullptr;
  ~Cert() { classa_certification_free(ptr); }
};

struct Audit {
  classa_audit* ptr = nullptr;
  ~Audit() { classa_audit_free(ptr); }
};

constexpr const char* kQuintic =
    "matrix = 3/2 -1.299038105676658 0 3/4\n"
    "seed = 0.2679491924311228 -1\n"
    "degree = 5\n";

} // namespace

TEST_CASE("c api: parse, inspect, evaluate") {
  Spec spec;
  REQUIRE(classa_spec_parse(kQuintic, &spec.ptr) == CLASSA_OK);
  CHECK(classa_spec_degree(spec.ptr) == 5);
  CHECK(classa_spec_is_degenerate(spec.ptr) == 0);

  double m[4];
  classa_spec_generator(spec.ptr, m);
  CHECK(m[0] == 1.5);
  CHECK(m[3] == 0.75);

  size_t count = 0;
  double xy[12];
  REQUIRE(classa_control_points(spec.ptr, xy, 6, &count) == CLASSA_OK);
  CHECK(count == 6);
  CHECK(xy[0] == 0.0);

  double p[2];
  REQUIRE(classa_point_at(spec.ptr, 0.0, p) == CLASSA_OK);
  CHECK(p[0] == xy[0]);

  double k0 = 0, k1 = 0, kc = 0;
  REQUIRE(classa_endpoint_curvatures(spec.ptr, &k0, &k1) == CLASSA_OK);
  REQUIRE(classa_curvature_at(spec.ptr, 0.0, &kc) == CLASSA_OK);
  CHECK(kc == doctest::Approx(k0).epsilon(1e-12));

  double dk = 0;
  REQUIRE(classa_curvature_derivative_at(spec.ptr, 0.5, &dk) == CLASSA_OK);
  CHECK(dk < 0.0); // certified decreasing curve
}

TEST_CASE("c api: error reporting carries a message") {
  Spec spec;
  CHECK(classa_spec_parse("matrix = 1 2\nseed = 1 0\ndegree = 3\n", &spec.ptr) ==
        CLASSA_ERR_PARSE);
  CHECK(std::strlen(classa_last_error()) > 0);
  CHECK(classa_spec_parse(nullptr, &spec.ptr) == CLASSA_ERR_BAD_ARGUMENT);
  CHECK(classa_spec_load("/nonexistent/path.curve", &spec.ptr) == CLASSA_ERR_IO);
}

TEST_CASE("c api: certification surfaces certificates and the verdict") {
  Spec spec;
  REQUIRE(classa_spec_parse(kQuintic, &spec.ptr) == CLASSA_OK);
  Cert cert;
  REQUIRE(classa_certify(spec.ptr, 501, &cert.ptr) == CLASSA_OK);

  REQUIRE(classa_certificate_count(cert.ptr) == 6);
  bool positive_real_found = false;
  for (int i = 0; i < 6; ++i) {
    const std::string name = classa_certificate_name(cert.ptr, i);
    if (name == "PositiveRealSeed") {
      positive_real_found = true;
      CHECK(classa_certificate_holds(cert.ptr, i) == 1);
      CHECK(std::string(classa_certificate_direction(cert.ptr, i)) ==
            "decreasing-if-kappa0-positive");
      CHECK(classa_certificate_detail_count(cert.ptr, i) == 4);
    }
  }
  CHECK(positive_real_found);
  CHECK(classa_any_certificate_holds(cert.ptr) == 1);
  CHECK(classa_verdict(cert.ptr) == CLASSA_MONOTONE_DECREASING);
  CHECK(classa_soundness_alarm(cert.ptr) == 0);
  CHECK(classa_verdict_extrema_count(cert.ptr) == 0);
}

TEST_CASE("c api: gallery round trip") {
  REQUIRE(classa_example_count() == 16);
  int mismatches = 0;
  for (int i = 0; i < classa_example_count(); ++i) {
    Spec spec;
    REQUIRE(classa_example_spec(i, &spec.ptr) == CLASSA_OK);
    Cert cert;
    REQUIRE(classa_certify(spec.ptr, 2001, &cert.ptr) == CLASSA_OK);
    if (classa_verdict(cert.ptr) != classa_example_expected(i)) ++mismatches;
    CHECK(std::strlen(classa_example_id(i)) > 0);
    CHECK(std::strlen(classa_example_note(i)) > 0);
  }
  CHECK(mismatches == 0);

  Spec out_of_range;
  CHECK(classa_example_spec(99, &out_of_range.ptr) == CLASSA_ERR_UNKNOWN_ID);
}

TEST_CASE("c api: rendering produces deterministic text") {
  Spec spec;
  REQUIRE(classa_spec_parse(kQuintic, &spec.ptr) == CLASSA_OK);

  char* csv1 = nullptr;
  char* csv2 = nullptr;
  REQUIRE(classa_render_csv(spec.ptr, 101, &csv1) == CLASSA_OK);
  REQUIRE(classa_render_csv(spec.ptr, 101, &csv2) == CLASSA_OK);
  CHECK(std::strcmp(csv1, csv2) == 0);
  CHECK(std::strstr(csv1, "t,x,y,kappa") != nullptr);
  classa_string_free(csv1);
  classa_string_free(csv2);

  char* svg = nullptr;
  REQUIRE(classa_render_svg(spec.ptr, 101, &svg) == CLASSA_OK);
  CHECK(std::strstr(svg, "<svg") != nullptr);
  classa_string_free(svg);
}

TEST_CASE("c api: audit handles both construction paths") {
  const double zhao[4] = {1.2545, -2.9594, 1.5576, 2.3836};
  const double seed[2] = {0.9724, 0.2333};
  Audit audit;
  REQUIRE(classa_audit_matrix(zhao, 2, seed, 3, 1001, &audit.ptr) == CLASSA_OK);
  CHECK(classa_audit_has_expansion(audit.ptr) == 1);
  CHECK(classa_audit_expansion_holds(audit.ptr) == 0);
  CHECK(classa_audit_min_symmetric_eigenvalue(audit.ptr) == doctest::Approx(0.919).epsilon(1e-3));
  CHECK(classa_audit_has_seed_ratio(audit.ptr) == 1);
  CHECK(classa_audit_seed_ratio(audit.ptr) == doctest::Approx(0.9979).epsilon(5e-4));
  CHECK(classa_audit_singular_value_count(audit.ptr) == 2);
  CHECK(classa_audit_has_proposition(audit.ptr) == 1);

  Audit sig;
  REQUIRE(classa_audit_sigmas(1.5, 3.0, 1001, &sig.ptr) == CLASSA_OK);
  CHECK(classa_audit_has_expansion(sig.ptr) == 0);
  CHECK(classa_audit_profile_slope0(sig.ptr) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(classa_audit_has_witness(sig.ptr) == 1);
  CHECK(classa_audit_witness_t(sig.ptr) > 0.0);
  CHECK(classa_audit_witness_t(sig.ptr) <= 0.1);
  CHECK(classa_audit_misprint_holds(sig.ptr) == 0);
  CHECK(classa_audit_corrected_holds(sig.ptr) == 1);

  // 3x3 path embeds the planar matrix with a unit third axis.
  const double spatial[9] = {1.2, 0.1, 0.0, -0.1, 1.3, 0.05, 0.0, 0.02, 1.1};
  const double seed3[3] = {1.0, 0.4, -0.3};
  Audit a3;
  REQUIRE(classa_audit_matrix(spatial, 3, seed3, 4, 501, &a3.ptr) == CLASSA_OK);
  CHECK(classa_audit_singular_value_count(a3.ptr) == 3);
  CHECK(classa_audit_has_seed_ratio(a3.ptr) == 1);

  Audit bad;
  CHECK(classa_audit_matrix(zhao, 4, nullptr, 3, 101, &bad.ptr) == CLASSA_ERR_BAD_ARGUMENT);
}

TEST_CASE("c api: degenerate specs flagged, curvature still queryable") {
  Spec spec;
  REQUIRE(classa_spec_parse("matrix = 1 0 0 1\nseed = 1 0\ndegree = 3\n", &spec.ptr) ==
          CLASSA_OK);
  CHECK(classa_spec_is_degenerate(spec.ptr) == 1);
  double kappa = 1.0;
  REQUIRE(classa_curvature_at(spec.ptr, 0.5, &kappa) == CLASSA_OK);
  CHECK(kappa == 0.0);

  Cert cert;
  REQUIRE(classa_certify(spec.ptr, 501, &cert.ptr) == CLASSA_OK);
  CHECK(classa_verdict(cert.ptr) == CLASSA_DEGENERATE_LINE);
  CHECK(classa_any_certificate_holds(cert.ptr) == 0);
}
