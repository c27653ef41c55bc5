// Command-line front end over the shared-library C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classa/classa.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitAlarm = 4;

int fail_with(classa_status status) {
  std::cerr << "error: " << classa_status_name(status);
  const char* detail = classa_last_error();
  if (detail != nullptr && detail[0] != '\0') std::cerr << ": " << detail;
  std::cerr << "\n";
  switch (status) {
    case CLASSA_ERR_DEGENERATE: return kExitDegenerate;
    case CLASSA_ERR_UNKNOWN_ID: return kExitUsage;
    default: return kExitUsage;
  }
}

struct SpecHandle {
  classa_spec* ptr = nullptr;
  ~SpecHandle() { classa_spec_free(ptr); }
};

struct CertHandle {
  classa_certification* ptr = nullptr;
  ~CertHandle() { classa_certification_free(ptr); }
};

struct AuditHandle {
  classa_audit* ptr = nullptr;
  ~AuditHandle() { classa_audit_free(ptr); }
};

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitUsage;
  }
  out << text;
  return 0;
}

int render_command(const std::string& input, const std::string& out_path,
                   const std::string& format, int samples, bool refuse_degenerate) {
  SpecHandle spec;
  if (const auto st = classa_spec_load(input.c_str(), &spec.ptr); st != CLASSA_OK)
    return fail_with(st);
  if (refuse_degenerate && classa_spec_is_degenerate(spec.ptr) != 0) {
    std::cerr << "error: spec generates a straight segment (zero curvature everywhere)\n";
    return kExitDegenerate;
  }

  char* text = nullptr;
  const auto st = (format == "svg") ? classa_render_svg(spec.ptr, samples, &text)
                                    : classa_render_csv(spec.ptr, samples, &text);
  if (st != CLASSA_OK) return fail_with(st);
  const std::string body(text);
  classa_string_free(text);
  return write_output(body, out_path);
}

int certify_command(const std::string& input, int grid) {
  SpecHandle spec;
  if (const auto st = classa_spec_load(input.c_str(), &spec.ptr); st != CLASSA_OK)
    return fail_with(st);

  CertHandle cert;
  if (const auto st = classa_certify(spec.ptr, grid, &cert.ptr); st != CLASSA_OK)
    return fail_with(st);

  const int count = classa_certificate_count(cert.ptr);
  for (int i = 0; i < count; ++i) {
    std::printf("%-18s %-5s direction=%-31s", classa_certificate_name(cert.ptr, i),
                classa_certificate_holds(cert.ptr, i) ? "holds" : "fails",
                classa_certificate_direction(cert.ptr, i));
    const int details = classa_certificate_detail_count(cert.ptr, i);
    for (int j = 0; j < details; ++j)
      std::printf(" %s=%.12g", classa_certificate_detail_name(cert.ptr, i, j),
                  classa_certificate_detail_value(cert.ptr, i, j));
    const char* reason = classa_certificate_reason(cert.ptr, i);
    if (reason[0] != '\0') std::printf("  (%s)", reason);
    std::printf("\n");
  }

  const classa_monotonicity verdict = classa_verdict(cert.ptr);
  std::printf("oracle: %s", classa_monotonicity_name(verdict));
  const int extrema = classa_verdict_extrema_count(cert.ptr);
  for (int i = 0; i < extrema; ++i)
    std::printf(" extremum@%.12g", classa_verdict_extremum(cert.ptr, i));
  std::printf(" (grid %d)\n", grid);

  if (classa_spec_is_degenerate(spec.ptr) != 0) {
    std::cerr << "error: spec generates a straight segment, nothing to certify\n";
    return kExitDegenerate;
  }
  if (classa_soundness_alarm(cert.ptr) != 0) {
    std::cerr << "soundness alarm: a certificate holds but the sampled verdict disagrees\n";
    return kExitAlarm;
  }
  return classa_any_certificate_holds(cert.ptr) != 0 ? 0 : 1;
}

int examples_command(int filter, int grid) {
  const int count = classa_example_count();
  int shown = 0, passed = 0;
  std::printf("%-5s %-7s %-20s %-20s %s\n", "id", "degree", "expected", "actual", "result");
  for (int i = 0; i < count; ++i) {
    const std::string id = classa_example_id(i);
    if (filter >= 0 && std::stoi(id) != filter) continue;

    SpecHandle spec;
    if (const auto st = classa_example_spec(i, &spec.ptr); st != CLASSA_OK) return fail_with(st);
    CertHandle cert;
    if (const auto st = classa_certify(spec.ptr, grid, &cert.ptr); st != CLASSA_OK)
      return fail_with(st);

    const classa_monotonicity expected = classa_example_expected(i);
    const classa_monotonicity actual = classa_verdict(cert.ptr);
    const bool pass = expected == actual;
    std::printf("%-5s %-7d %-20s %-20s %s\n", id.c_str(), classa_spec_degree(spec.ptr),
                classa_monotonicity_name(expected), classa_monotonicity_name(actual),
                pass ? "pass" : "FAIL");
    ++shown;
    if (pass) ++passed;
  }
  if (shown == 0) {
    std::cerr << "error: no example with id " << filter << "\n";
    return kExitUsage;
  }
  std::printf("%d/%d passed\n", passed, shown);
  return passed == shown ? 0 : 1;
}

int audit_print(const AuditHandle& audit) {
  if (classa_audit_has_expansion(audit.ptr) != 0) {
    std::printf("expansion condition: %s (min symmetric eigenvalue %.12g)\n",
                classa_audit_expansion_holds(audit.ptr) != 0 ? "holds" : "fails",
                classa_audit_min_symmetric_eigenvalue(audit.ptr));
  }
  const int nsv = classa_audit_singular_value_count(audit.ptr);
  std::printf("singular values:");
  for (int i = 0; i < nsv; ++i) std::printf(" %.12g", classa_audit_singular_value(audit.ptr, i));
  std::printf("\n");
  std::printf("corrected gap condition (sigma_min^3 >= sigma_max): %s\n",
              classa_audit_corrected_holds(audit.ptr) != 0 ? "holds" : "fails");
  std::printf("misprinted gap condition (sigma_min^2 >= sigma_max): %s\n",
              classa_audit_misprint_holds(audit.ptr) != 0 ? "holds" : "fails");
  std::printf("subdivision profile: min f = %.12g at t = %.12g, f'(0) = %.12g\n",
              classa_audit_profile_min(audit.ptr), classa_audit_profile_min_t(audit.ptr),
              classa_audit_profile_slope0(audit.ptr));
  if (classa_audit_has_witness(audit.ptr) != 0)
    std::printf("profile failure witness: f(t) < 0 at t = %.12g\n",
                classa_audit_witness_t(audit.ptr));
  else
    std::printf("profile failure witness: none in (0, 0.1]\n");
  if (classa_audit_has_seed_ratio(audit.ptr) != 0)
    std::printf("seed ratio v.Mv/(v.v): %.12g\n", classa_audit_seed_ratio(audit.ptr));
  if (classa_audit_has_proposition(audit.ptr) != 0) {
    std::printf("area-chain bound: lhs = %.12g, rhs = %.12g, hypothesis %s, conclusion %s\n",
                classa_audit_proposition_lhs(audit.ptr),
                classa_audit_proposition_rhs(audit.ptr),
                classa_audit_proposition_hypothesis(audit.ptr) != 0 ? "holds" : "fails",
                classa_audit_proposition_conclusion(audit.ptr) != 0 ? "holds" : "fails");
  }
  return 0;
}

int farin_audit_command(const std::string& input, const std::vector<double>& sigmas, int grid) {
  AuditHandle audit;
  if (!sigmas.empty()) {
    if (const auto st = classa_audit_sigmas(sigmas[0], sigmas[1], grid, &audit.ptr);
        st != CLASSA_OK)
      return fail_with(st);
    return audit_print(audit);
  }

  SpecHandle spec;
  if (const auto st = classa_spec_load(input.c_str(), &spec.ptr); st != CLASSA_OK)
    return fail_with(st);
  double generator[4], seed[2];
  classa_spec_generator(spec.ptr, generator);
  classa_spec_seed(spec.ptr, seed);
  if (const auto st = classa_audit_matrix(generator, 2, seed, classa_spec_degree(spec.ptr),
                                          grid, &audit.ptr);
      st != CLASSA_OK)
    return fail_with(st);
  return audit_print(audit);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar Bezier curves generated by matrix iteration: construction, closed-form "
               "curvature, monotonicity certificates, Class A matrix audits"};
  app.require_subcommand(1);

  std::string input, out_path;
  std::string format_generate = "csv", format_plot = "svg";
  int grid = 2001;
  const int samples = 1001;
  std::vector<double> sigmas;

  auto* generate = app.add_subcommand("generate", "sample a curve to CSV");
  generate->add_option("input", input, "curve spec file")->required();
  generate->add_option("--out", out_path, "output path (default: stdout)");
  generate->add_option("--format", format_generate, "csv|svg")
      ->check(CLI::IsMember({"csv", "svg"}));

  auto* certify = app.add_subcommand("certify", "evaluate monotonicity certificates");
  certify->add_option("input", input, "curve spec file")->required();
  certify->add_option("--grid", grid, "oracle grid size (default 2001)");

  auto* examples = app.add_subcommand("examples", "run the bundled example gallery");
  examples->add_option("--grid", grid, "oracle grid size (default 2001)");
  int filter_value = -1;
  examples->add_option("filter", filter_value, "restrict to one numeric id");

  auto* farin = app.add_subcommand("farin-audit", "audit the Class A matrix conditions");
  farin->add_option("input", input, "curve spec file (raw matrix form)");
  farin->add_option("--sigma", sigmas, "extreme singular values sigma_min sigma_max")
      ->expected(2);
  farin->add_option("--grid", grid, "profile grid size (default 2001)");

  auto* plot = app.add_subcommand("plot", "render curve and curvature graph as SVG");
  plot->add_option("input", input, "curve spec file")->required();
  plot->add_option("--out", out_path, "output path (default: stdout)");
  plot->add_option("--format", format_plot, "csv|svg")->check(CLI::IsMember({"csv", "svg"}));

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed()) return render_command(input, out_path, format_generate, samples, true);
  if (certify->parsed()) return certify_command(input, grid);
  if (examples->parsed()) return examples_command(filter_value, grid);
  if (plot->parsed()) return render_command(input, out_path, format_plot, samples, false);
  if (farin->parsed()) {
    if (sigmas.empty() && input.empty()) {
      std::cerr << "error: farin-audit needs a spec file or --sigma values\n";
      return kExitUsage;
    }
    return farin_audit_command(input, sigmas, grid);
  }
  return kExitUsage;
}
