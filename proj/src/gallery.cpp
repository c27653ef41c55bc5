#include "classa/gallery.hpp"

#include <cmath>

#include "classa/error.hpp"

namespace classa {

namespace {

SpecDocument raw(double a11, double a12, double a21, double a22, Vec2 seed, int degree) {
  SpecDocument d;
  d.form = SpecDocument::Form::Raw;
  d.matrix = {a11, a12, a21, a22};
  d.seed = seed;
  d.degree = degree;
  return d;
}

SpecDocument eigen(double h, double phi, double gamma, Vec2 seed, int degree) {
  SpecDocument d;
  d.form = SpecDocument::Form::Eigen;
  d.h = h;
  d.phi = phi;
  d.gamma = gamma;
  d.seed = seed;
  d.degree = degree;
  return d;
}

std::vector<ExampleRecord> make_gallery() {
  const double r3 = std::sqrt(3.0);
  const double pi = M_PI;
  constexpr auto dec = MonotonicityKind::MonotoneDecreasing;
  constexpr auto non = MonotonicityKind::NonMonotone;

  std::vector<ExampleRecord> g;
  g.push_back({"1", raw(1.25, 0, 0, 0.1, {1, -1}, 3), non,
               "cubic, eigenvalue sum 1.35 below 2; curvature dips and recovers"});
  g.push_back({"2", raw(4, 0, 0, 1, {0.4, -5}, 3), non,
               "cubic with |mu1| < |mu2|; seed leans on the slow eigenvector"});
  g.push_back({"3", raw(1.5, -3.0 * r3 / 4.0, 0, 0.75, {2.0 - r3, -1}, 5), dec,
               "quintic, eigenvalue sum 2.25 and balanced seed coordinates"});
  g.push_back({"4", raw(1.5, 2.0 * r3 / 5.0, 0, 0.3, {1.25, -r3 / 4.0}, 4), dec,
               "quartic, monotone although the eigenvalue sum is only 1.8"});
  g.push_back({"5", raw(1.5, 0, 0, 0.7, {1, -1.1}, 3), dec,
               "cubic, monotone although |mu1| < |mu2|"});
  g.push_back({"6", raw(0.7, 0, 1, 0.7, {10, 1}, 3), non,
               "repeated eigenvalue 0.7 below 1"});
  g.push_back({"7", raw(1, 0, 1, 1, {1, -1}, 3), non,
               "repeated eigenvalue 1 with mu1 mu2 < 0"});
  g.push_back({"8", raw(1, 0, 1, 1, {3, 1}, 3), dec,
               "repeated eigenvalue 1 with same-sign seed coordinates"});
  g.push_back({"9", raw(0.5, -2, 0, 0.5, {1.5, -1}, 3), dec,
               "repeated eigenvalue 0.5, monotone although below 1"});
  g.push_back({"10", raw(1.5, -2, 0, 1.5, {3.5, 0.75}, 4), MonotonicityKind::MonotoneIncreasing,
               "repeated eigenvalue 1.5, monotone (increasing) although mu1 mu2 < 0"});
  g.push_back({"11", eigen(1.8, 0.925, pi / 2.0, {0.4, 0.1}, 7), dec,
               "rotation-scaling with h above 1/cos(phi)"});
  g.push_back({"12", eigen(1.2, 0.925, pi / 2.0, {0.4, 0.1}, 7), non,
               "rotation-scaling with h strictly between cos(phi) and 1/cos(phi)"});
  g.push_back({"13",
               eigen(3.0, -pi / 12.0, 5.0 * pi / 12.0,
                     {10.0 * std::cos(5.0 * pi / 12.0), 10.0 * std::sin(5.0 * pi / 12.0)}, 5),
               dec, "complex pair within the degree-free angle bound"});
  g.push_back({"14", eigen(2.0, pi / 4.0, pi / 3.0, {2, 2.0 * r3}, 3), non,
               "complex pair outside the angle bound despite h cos(phi) > 1"});
  g.push_back({"15a", eigen(4.0, pi / 6.0, 2.0 * pi / 3.0, {4, 0}, 3), dec,
               "complex pair inside the degree bound for degrees up to 5"});
  g.push_back({"15b", eigen(4.0, pi / 6.0, 2.0 * pi / 3.0, {4, 0}, 8), non,
               "same generator beyond the degree bound"});
  return g;
}

} // namespace

const std::vector<ExampleRecord>& example_gallery() {
  static const std::vector<ExampleRecord> gallery = make_gallery();
  return gallery;
}

std::vector<ExampleRun> run_gallery(int filter, int grid) {
  std::vector<ExampleRun> runs;
  for (const auto& record : example_gallery()) {
    const int numeric_id = std::stoi(record.id);
    if (filter >= 0 && numeric_id != filter) continue;
    ExampleRun run;
    run.record = &record;
    run.actual = numeric_monotonicity(to_curve_spec(record.doc), grid).kind;
    run.pass = run.actual == record.expected;
    runs.push_back(run);
  }
  if (runs.empty()) fail(Errc::UnknownId, "no gallery entry with id " + std::to_string(filter));
  return runs;
}

} // namespace classa
