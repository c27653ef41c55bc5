#include "classa/classa.h"

#include <cstring>
#include <memory>
#include <string>
#include <tuple>

#include "classa/certify.hpp"
#include "classa/curvature_model.hpp"
#include "classa/document.hpp"
#include "classa/error.hpp"
#include "classa/farin.hpp"
#include "classa/gallery.hpp"
#include "classa/render.hpp"

using namespace classa;

struct classa_spec {
  SpecDocument doc;
  CurveSpec curve;
  CurvatureModel model;
};

struct classa_certification {
  std::vector<Certificate> certificates;
  MonotonicityVerdict verdict;
  bool alarm = false;
};

struct classa_audit {
  ClassAReport report;
  bool has_expansion = false;
};

namespace {

thread_local std::string g_last_error;

classa_status status_from(Errc code) {
  switch (code) {
    case Errc::ZeroSeed: return CLASSA_ERR_ZERO_SEED;
    case Errc::ZeroVector: return CLASSA_ERR_ZERO_VECTOR;
    case Errc::SingularSubdivision: return CLASSA_ERR_SINGULAR_SUBDIVISION;
    case Errc::VanishingSpeed: return CLASSA_ERR_VANISHING_SPEED;
    case Errc::CollinearPair: return CLASSA_ERR_COLLINEAR;
    case Errc::WrongVariant: return CLASSA_ERR_WRONG_VARIANT;
    case Errc::DegenerateLine: return CLASSA_ERR_DEGENERATE;
    case Errc::BadArgument: return CLASSA_ERR_BAD_ARGUMENT;
    case Errc::ParseError: return CLASSA_ERR_PARSE;
    case Errc::UnknownId: return CLASSA_ERR_UNKNOWN_ID;
    case Errc::Io: return CLASSA_ERR_IO;
  }
  return CLASSA_ERR_INTERNAL;
}

template <typename Fn>
classa_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CLASSA_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CLASSA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return CLASSA_ERR_INTERNAL;
  }
}

classa_monotonicity to_c(MonotonicityKind kind) {
  switch (kind) {
    case MonotonicityKind::MonotoneDecreasing: return CLASSA_MONOTONE_DECREASING;
    case MonotonicityKind::MonotoneIncreasing: return CLASSA_MONOTONE_INCREASING;
    case MonotonicityKind::NonMonotone: return CLASSA_NON_MONOTONE;
    case MonotonicityKind::DegenerateLine: return CLASSA_DEGENERATE_LINE;
  }
  return CLASSA_DEGENERATE_LINE;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

classa_spec* make_spec(const SpecDocument& doc) {
  auto spec = std::make_unique<classa_spec>();
  spec->doc = doc;
  spec->curve = to_curve_spec(doc);
  spec->model = build_model(spec->curve);
  return spec.release();
}

const Certificate* cert_at(const classa_certification* c, int i) {
  if (c == nullptr || i < 0 || static_cast<size_t>(i) >= c->certificates.size()) return nullptr;
  return &c->certificates[static_cast<size_t>(i)];
}

} // namespace

extern "C" {

const char* classa_status_name(classa_status status) {
  switch (status) {
    case CLASSA_OK: return "ok";
    case CLASSA_ERR_PARSE: return "parse error";
    case CLASSA_ERR_IO: return "io error";
    case CLASSA_ERR_BAD_ARGUMENT: return "bad argument";
    case CLASSA_ERR_ZERO_SEED: return "zero seed";
    case CLASSA_ERR_ZERO_VECTOR: return "zero vector";
    case CLASSA_ERR_SINGULAR_SUBDIVISION: return "singular subdivision";
    case CLASSA_ERR_VANISHING_SPEED: return "vanishing speed";
    case CLASSA_ERR_COLLINEAR: return "collinear pair";
    case CLASSA_ERR_WRONG_VARIANT: return "wrong spectral variant";
    case CLASSA_ERR_DEGENERATE: return "degenerate curve";
    case CLASSA_ERR_UNKNOWN_ID: return "unknown id";
    case CLASSA_ERR_INTERNAL: return "internal error";
  }
  return "?";
}

const char* classa_monotonicity_name(classa_monotonicity kind) {
  switch (kind) {
    case CLASSA_MONOTONE_DECREASING: return "monotone-decreasing";
    case CLASSA_MONOTONE_INCREASING: return "monotone-increasing";
    case CLASSA_NON_MONOTONE: return "non-monotone";
    case CLASSA_DEGENERATE_LINE: return "degenerate-line";
  }
  return "?";
}

const char* classa_last_error(void) { return g_last_error.c_str(); }

void classa_string_free(char* text) { delete[] text; }

classa_status classa_spec_parse(const char* text, classa_spec** out) {
  if (text == nullptr || out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] { *out = make_spec(parse_document(text)); });
}

classa_status classa_spec_load(const char* path, classa_spec** out) {
  if (path == nullptr || out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] { *out = make_spec(load_document(path)); });
}

void classa_spec_free(classa_spec* spec) { delete spec; }

int classa_spec_degree(const classa_spec* spec) { return spec ? spec->curve.degree : 0; }

void classa_spec_generator(const classa_spec* spec, double out[4]) {
  if (spec == nullptr || out == nullptr) return;
  out[0] = spec->curve.generator.a11;
  out[1] = spec->curve.generator.a12;
  out[2] = spec->curve.generator.a21;
  out[3] = spec->curve.generator.a22;
}

void classa_spec_seed(const classa_spec* spec, double out[2]) {
  if (spec == nullptr || out == nullptr) return;
  out[0] = spec->curve.seed.x;
  out[1] = spec->curve.seed.y;
}

int classa_spec_is_degenerate(const classa_spec* spec) {
  return (spec != nullptr && spec->model.degenerate) ? 1 : 0;
}

classa_status classa_control_points(const classa_spec* spec, double* xy, size_t capacity,
                                    size_t* count) {
  if (spec == nullptr || count == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] {
    const auto poly = generate_polygon(spec->curve);
    *count = poly.size();
    if (xy == nullptr) return;
    if (capacity < poly.size()) fail(Errc::BadArgument, "control point buffer too small");
    for (size_t j = 0; j < poly.size(); ++j) {
      xy[2 * j] = poly[j].x;
      xy[2 * j + 1] = poly[j].y;
    }
  });
}

classa_status classa_point_at(const classa_spec* spec, double t, double out[2]) {
  if (spec == nullptr || out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] {
    const Vec2 p = evaluate(generate_polygon(spec->curve), t);
    out[0] = p.x;
    out[1] = p.y;
  });
}

classa_status classa_curvature_at(const classa_spec* spec, double t, double* kappa) {
  if (spec == nullptr || kappa == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] { *kappa = kappa_closed(spec->model, t); });
}

classa_status classa_curvature_derivative_at(const classa_spec* spec, double t, double* out) {
  if (spec == nullptr || out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] { *out = dkappa(spec->model, t); });
}

classa_status classa_endpoint_curvatures(const classa_spec* spec, double* kappa0,
                                         double* kappa1) {
  if (spec == nullptr || kappa0 == nullptr || kappa1 == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] { std::tie(*kappa0, *kappa1) = endpoint_curvatures(spec->curve); });
}

classa_status classa_render_csv(const classa_spec* spec, int samples, char** out) {
  if (spec == nullptr || out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] { *out = copy_string(render_csv(spec->curve, samples)); });
}

classa_status classa_render_svg(const classa_spec* spec, int samples, char** out) {
  if (spec == nullptr || out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] { *out = copy_string(render_svg(spec->curve, samples)); });
}

classa_status classa_certify(const classa_spec* spec, int grid, classa_certification** out) {
  if (spec == nullptr || out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] {
    auto c = std::make_unique<classa_certification>();
    c->certificates = certify(spec->curve);
    c->verdict = numeric_monotonicity(spec->curve, grid);
    c->alarm = soundness_alarm(c->certificates, spec->model.kappa0, c->verdict);
    *out = c.release();
  });
}

void classa_certification_free(classa_certification* c) { delete c; }

int classa_certificate_count(const classa_certification* c) {
  return c ? static_cast<int>(c->certificates.size()) : 0;
}

const char* classa_certificate_name(const classa_certification* c, int i) {
  const auto* cert = cert_at(c, i);
  return cert ? certificate_name(cert->kind) : "";
}

int classa_certificate_holds(const classa_certification* c, int i) {
  const auto* cert = cert_at(c, i);
  return (cert != nullptr && cert->holds) ? 1 : 0;
}

int classa_certificate_applicable(const classa_certification* c, int i) {
  const auto* cert = cert_at(c, i);
  return (cert != nullptr && cert->applicable) ? 1 : 0;
}

const char* classa_certificate_direction(const classa_certification* c, int i) {
  const auto* cert = cert_at(c, i);
  return cert ? direction_name(cert->direction) : "";
}

const char* classa_certificate_reason(const classa_certification* c, int i) {
  const auto* cert = cert_at(c, i);
  return cert ? cert->reason.c_str() : "";
}

int classa_certificate_detail_count(const classa_certification* c, int i) {
  const auto* cert = cert_at(c, i);
  return cert ? static_cast<int>(cert->details.size()) : 0;
}

const char* classa_certificate_detail_name(const classa_certification* c, int i, int j) {
  const auto* cert = cert_at(c, i);
  if (cert == nullptr || j < 0 || static_cast<size_t>(j) >= cert->details.size()) return "";
  return cert->details[static_cast<size_t>(j)].first.c_str();
}

double classa_certificate_detail_value(const classa_certification* c, int i, int j) {
  const auto* cert = cert_at(c, i);
  if (cert == nullptr || j < 0 || static_cast<size_t>(j) >= cert->details.size()) return 0.0;
  return cert->details[static_cast<size_t>(j)].second;
}

classa_monotonicity classa_verdict(const classa_certification* c) {
  return c ? to_c(c->verdict.kind) : CLASSA_DEGENERATE_LINE;
}

int classa_verdict_extrema_count(const classa_certification* c) {
  return c ? static_cast<int>(c->verdict.extrema.size()) : 0;
}

double classa_verdict_extremum(const classa_certification* c, int i) {
  if (c == nullptr || i < 0 || static_cast<size_t>(i) >= c->verdict.extrema.size()) return -1.0;
  return c->verdict.extrema[static_cast<size_t>(i)];
}

int classa_any_certificate_holds(const classa_certification* c) {
  if (c == nullptr) return 0;
  for (const auto& cert : c->certificates)
    if (cert.holds) return 1;
  return 0;
}

int classa_soundness_alarm(const classa_certification* c) {
  return (c != nullptr && c->alarm) ? 1 : 0;
}

int classa_example_count(void) { return static_cast<int>(example_gallery().size()); }

const char* classa_example_id(int i) {
  const auto& g = example_gallery();
  if (i < 0 || static_cast<size_t>(i) >= g.size()) return "";
  return g[static_cast<size_t>(i)].id.c_str();
}

const char* classa_example_note(int i) {
  const auto& g = example_gallery();
  if (i < 0 || static_cast<size_t>(i) >= g.size()) return "";
  return g[static_cast<size_t>(i)].note.c_str();
}

classa_monotonicity classa_example_expected(int i) {
  const auto& g = example_gallery();
  if (i < 0 || static_cast<size_t>(i) >= g.size()) return CLASSA_DEGENERATE_LINE;
  return to_c(g[static_cast<size_t>(i)].expected);
}

classa_status classa_example_spec(int i, classa_spec** out) {
  if (out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] {
    const auto& g = example_gallery();
    if (i < 0 || static_cast<size_t>(i) >= g.size())
      fail(Errc::UnknownId, "gallery index out of range");
    *out = make_spec(g[static_cast<size_t>(i)].doc);
  });
}

classa_status classa_audit_matrix(const double* matrix, int dim, const double* seed, int degree,
                                  int grid, classa_audit** out) {
  if (matrix == nullptr || out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] {
    ClassAReport report;
    if (dim == 2) {
      const Mat2 m{matrix[0], matrix[1], matrix[2], matrix[3]};
      std::optional<Vec2> w;
      if (seed != nullptr) w = Vec2{seed[0], seed[1]};
      report = class_a_report(m, w, degree, grid);
    } else if (dim == 3) {
      Mat3 m;
      for (int i = 0; i < 9; ++i) m.m[static_cast<size_t>(i)] = matrix[i];
      const auto sv = sv_condition(m);
      report = class_a_report(sv.sv.back(), sv.sv.front(), grid);
      report.expansion = expansion_condition(m);
      report.sv = sv;
      if (seed != nullptr) {
        const Vec3 v{seed[0], seed[1], seed[2]};
        report.seed_ratio = zhao_ratio(m, v);
        if (degree >= 3) {
          try {
            report.prop1 = proposition1(m, v, degree);
          } catch (const Error&) {
            // Collinear chains leave the proposition unevaluated.
          }
        }
      }
    } else {
      fail(Errc::BadArgument, "audit: dim must be 2 or 3");
    }
    auto audit = std::make_unique<classa_audit>();
    audit->report = std::move(report);
    audit->has_expansion = true;
    *out = audit.release();
  });
}

classa_status classa_audit_sigmas(double sigma_min, double sigma_max, int grid,
                                  classa_audit** out) {
  if (out == nullptr) return CLASSA_ERR_BAD_ARGUMENT;
  return guarded([&] {
    auto audit = std::make_unique<classa_audit>();
    audit->report = class_a_report(sigma_min, sigma_max, grid);
    audit->has_expansion = false;
    *out = audit.release();
  });
}

void classa_audit_free(classa_audit* audit) { delete audit; }

int classa_audit_has_expansion(const classa_audit* a) {
  return (a != nullptr && a->has_expansion) ? 1 : 0;
}

int classa_audit_expansion_holds(const classa_audit* a) {
  return (a != nullptr && a->report.expansion.holds) ? 1 : 0;
}

double classa_audit_min_symmetric_eigenvalue(const classa_audit* a) {
  return a ? a->report.expansion.min_symmetric_eigenvalue : 0.0;
}

int classa_audit_singular_value_count(const classa_audit* a) {
  return a ? static_cast<int>(a->report.sv.sv.size()) : 0;
}

double classa_audit_singular_value(const classa_audit* a, int i) {
  if (a == nullptr || i < 0 || static_cast<size_t>(i) >= a->report.sv.sv.size()) return 0.0;
  return a->report.sv.sv[static_cast<size_t>(i)];
}

int classa_audit_corrected_holds(const classa_audit* a) {
  return (a != nullptr && a->report.sv.corrected_holds) ? 1 : 0;
}

int classa_audit_misprint_holds(const classa_audit* a) {
  return (a != nullptr && a->report.sv.misprint_holds) ? 1 : 0;
}

double classa_audit_profile_min(const classa_audit* a) { return a ? a->report.f_min : 0.0; }

double classa_audit_profile_min_t(const classa_audit* a) { return a ? a->report.f_min_t : 0.0; }

double classa_audit_profile_slope0(const classa_audit* a) {
  return a ? a->report.f_prime_at_zero : 0.0;
}

int classa_audit_has_witness(const classa_audit* a) {
  return (a != nullptr && a->report.witness_t.has_value()) ? 1 : 0;
}

double classa_audit_witness_t(const classa_audit* a) {
  return (a != nullptr && a->report.witness_t) ? *a->report.witness_t : -1.0;
}

int classa_audit_has_seed_ratio(const classa_audit* a) {
  return (a != nullptr && a->report.seed_ratio.has_value()) ? 1 : 0;
}

double classa_audit_seed_ratio(const classa_audit* a) {
  return (a != nullptr && a->report.seed_ratio) ? *a->report.seed_ratio : 0.0;
}

int classa_audit_has_proposition(const classa_audit* a) {
  return (a != nullptr && a->report.prop1.has_value()) ? 1 : 0;
}

double classa_audit_proposition_lhs(const classa_audit* a) {
  return (a != nullptr && a->report.prop1) ? a->report.prop1->lhs : 0.0;
}

double classa_audit_proposition_rhs(const classa_audit* a) {
  return (a != nullptr && a->report.prop1) ? a->report.prop1->rhs : 0.0;
}

int classa_audit_proposition_hypothesis(const classa_audit* a) {
  return (a != nullptr && a->report.prop1 && a->report.prop1->hypothesis_holds) ? 1 : 0;
}

int classa_audit_proposition_conclusion(const classa_audit* a) {
  return (a != nullptr && a->report.prop1 && a->report.prop1->conclusion_holds) ? 1 : 0;
}

} // extern "C"
