#include "classa/document.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "classa/error.hpp"

namespace classa {

namespace {

double parse_number(std::string_view token) {
  const auto parse_plain = [](std::string_view s) {
    double value = 0.0;
    const auto* end = s.data() + s.size();
    const auto result = std::from_chars(s.data(), end, value);
    if (result.ec != std::errc{} || result.ptr != end)
      fail(Errc::ParseError, "not a number: '" + std::string(s) + "'");
    return value;
  };

  const size_t slash = token.find('/');
  if (slash == std::string_view::npos) return parse_plain(token);
  const double num = parse_plain(token.substr(0, slash));
  const double den = parse_plain(token.substr(slash + 1));
  if (den == 0.0) fail(Errc::ParseError, "fraction with zero denominator");
  return num / den;
}

std::vector<double> parse_numbers(std::string_view text, size_t expected,
                                  const std::string& key) {
  std::vector<double> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(parse_number(token));
  if (out.size() != expected)
    fail(Errc::ParseError,
         "key '" + key + "' expects " + std::to_string(expected) + " numbers");
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

SpecDocument parse_document(std::string_view text) {
  std::map<std::string, std::string> kv;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    const size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(Errc::ParseError, "expected 'key = value': '" + std::string(line) + "'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (key.empty() || value.empty()) fail(Errc::ParseError, "empty key or value");
    if (!kv.emplace(key, value).second)
      fail(Errc::ParseError, "duplicate key '" + key + "'");
  }

  const bool has_matrix = kv.count("matrix") > 0;
  const bool has_eigen = kv.count("h") > 0 || kv.count("phi") > 0 || kv.count("gamma") > 0;
  if (has_matrix == has_eigen)
    fail(Errc::ParseError, "document must contain either 'matrix' or 'h'/'phi', not both");
  if (!kv.count("seed")) fail(Errc::ParseError, "missing key 'seed'");
  if (!kv.count("degree")) fail(Errc::ParseError, "missing key 'degree'");

  SpecDocument doc;
  const auto seed = parse_numbers(kv["seed"], 2, "seed");
  doc.seed = {seed[0], seed[1]};

  const double deg = parse_number(kv["degree"]);
  if (deg != std::floor(deg) || deg < 2.0 || deg > 64.0)
    fail(Errc::ParseError, "degree must be an integer in [2, 64]");
  doc.degree = static_cast<int>(deg);

  if (kv.count("base")) {
    const auto base = parse_numbers(kv["base"], 2, "base");
    doc.base = {base[0], base[1]};
  }

  if (has_matrix) {
    doc.form = SpecDocument::Form::Raw;
    const auto m = parse_numbers(kv["matrix"], 4, "matrix");
    doc.matrix = {m[0], m[1], m[2], m[3]};
  } else {
    doc.form = SpecDocument::Form::Eigen;
    if (!kv.count("h") || !kv.count("phi"))
      fail(Errc::ParseError, "eigen form needs both 'h' and 'phi'");
    doc.h = parse_number(kv["h"]);
    doc.phi = parse_number(kv["phi"]);
    doc.gamma = kv.count("gamma") ? parse_number(kv["gamma"]) : M_PI / 2.0;
    if (doc.h <= 0.0) fail(Errc::ParseError, "h must be positive");
    if (doc.phi == 0.0) fail(Errc::ParseError, "phi must be nonzero");
    if (!(doc.gamma > 0.0 && doc.gamma < M_PI) || std::sin(doc.gamma) <= 1e-12)
      fail(Errc::ParseError, "gamma must lie strictly inside (0, pi)");
  }

  if (doc.seed.norm() == 0.0) fail(Errc::ParseError, "seed must be nonzero");

  for (double v : {doc.seed.x, doc.seed.y, doc.base.x, doc.base.y, doc.matrix.a11, doc.matrix.a12,
                   doc.matrix.a21, doc.matrix.a22, doc.h, doc.phi, doc.gamma})
    if (!std::isfinite(v)) fail(Errc::ParseError, "non-finite value in document");

  return doc;
}

SpecDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string print_document(const SpecDocument& doc) {
  std::string out;
  if (doc.form == SpecDocument::Form::Raw) {
    out += "matrix = " + format_number(doc.matrix.a11) + " " + format_number(doc.matrix.a12) +
           " " + format_number(doc.matrix.a21) + " " + format_number(doc.matrix.a22) + "\n";
  } else {
    out += "h = " + format_number(doc.h) + "\n";
    out += "phi = " + format_number(doc.phi) + "\n";
    out += "gamma = " + format_number(doc.gamma) + "\n";
  }
  out += "seed = " + format_number(doc.seed.x) + " " + format_number(doc.seed.y) + "\n";
  out += "degree = " + std::to_string(doc.degree) + "\n";
  if (doc.form == SpecDocument::Form::Raw)
    out += "base = " + format_number(doc.base.x) + " " + format_number(doc.base.y) + "\n";
  return out;
}

Mat2 matrix_from_eigen_form(double h, double phi, double gamma) {
  if (h <= 0.0) fail(Errc::BadArgument, "matrix_from_eigen_form: h must be positive");
  const double sg = std::sin(gamma);
  if (std::abs(sg) <= 1e-12)
    fail(Errc::BadArgument, "matrix_from_eigen_form: eigenvector parts are collinear");

  // Basis columns (re_v | im_v) = ((1, 0), (cos gamma, sin gamma)); the matrix
  // acts on them as the conjugate pair h e^{-+ i |phi|} acts on v = re_v + i im_v.
  const double c = h * std::cos(phi);
  const double s = h * std::abs(std::sin(phi));
  const double cg = std::cos(gamma);

  // M = B [[c, -s], [s, c]] B^{-1} with B = [[1, cg], [0, sg]].
  const Mat2 bc{c + cg * s, -s + cg * c, sg * s, sg * c};
  const Mat2 binv{1.0, -cg / sg, 0.0, 1.0 / sg};
  return bc * binv;
}

CurveSpec to_curve_spec(const SpecDocument& doc) {
  CurveSpec spec;
  spec.degree = doc.degree;
  spec.seed = doc.seed;
  spec.base = doc.base;
  spec.generator = (doc.form == SpecDocument::Form::Raw)
                       ? doc.matrix
                       : matrix_from_eigen_form(doc.h, doc.phi, doc.gamma);
  return spec;
}

} // namespace classa
