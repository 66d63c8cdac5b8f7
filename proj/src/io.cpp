#include "ctx/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string_view>

namespace ctx {

namespace {

// Lines with comments stripped and blanks dropped, tokenized on whitespace.
std::vector<std::vector<std::string>> content_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (const std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> line;
    std::string tok;
    while (tokens >> tok) line.push_back(tok);
    if (!line.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

double parse_double(std::string_view text, const std::string& context) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(context + ": bad number '" + std::string(text) + "'");
  }
  return value;
}

// `<re>` or `<re>,<im>`
complexd parse_component(std::string_view text, const std::string& context) {
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) return complexd(parse_double(text, context), 0.0);
  return complexd(parse_double(text.substr(0, comma), context),
                  parse_double(text.substr(comma + 1), context));
}

std::size_t parse_dimension(const std::string& text, const std::string& context) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 2) {
    throw ParseError(context + ": bad dimension '" + text + "'");
  }
  return value;
}

Vector parse_vector_tokens(const std::vector<std::string>& tokens, std::size_t first,
                           std::size_t d, const std::string& context) {
  if (tokens.size() - first != d) {
    throw ParseError(context + ": expected " + std::to_string(d) + " components, got " +
                     std::to_string(tokens.size() - first));
  }
  Vector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = parse_component(tokens[first + i], context);
  return v;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

RaySet parse_ray_file(std::istream& in, const RayFileOptions& opt) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("ray file: empty");
  if (lines[0].size() != 2 || lines[0][0] != "dim") {
    throw ParseError("ray file: first line must be 'dim <d>'");
  }
  const std::size_t d = parse_dimension(lines[0][1], "ray file header");

  std::vector<Ray> rays;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line[0] == "dim") throw ParseError("ray file: duplicate 'dim' header");
    if (line[0] != "ray" || line.size() < 2) {
      throw ParseError("ray file: expected 'ray <label> <components>', got '" + line[0] + "'");
    }
    const std::string& label = line[1];
    rays.push_back({label, parse_vector_tokens(line, 2, d, "ray '" + label + "'")});
  }
  if (rays.empty()) throw ParseError("ray file: no rays");
  return RaySet(d, std::move(rays), opt.tol, opt.auto_normalize);
}

RaySet load_ray_file(const std::string& path, const RayFileOptions& opt) {
  std::ifstream in = open_or_throw(path);
  return parse_ray_file(in, opt);
}

std::string emit_ray_file(const RaySet& rays) {
  std::string out = "dim " + std::to_string(rays.dimension()) + "\n";
  for (const Ray& r : rays.rays()) {
    out += "ray " + r.label;
    for (std::size_t i = 0; i < rays.dimension(); ++i) {
      const complexd z = r.vec[i];
      out += ' ' + format_sig17(z.real());
      if (z.imag() != 0.0) out += ',' + format_sig17(z.imag());
    }
    out += '\n';
  }
  return out;
}

DensityMatrix parse_state_file(std::istream& in, const Tolerances& tol) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("state file: empty");
  const auto& head = lines[0];

  if (head[0] == "matrix") {
    if (head.size() != 1) throw ParseError("state file: 'matrix' takes no arguments");
    if (lines.size() < 2) throw ParseError("state file: missing matrix rows");
    const std::size_t d = lines[1].size();
    if (d < 2) throw ParseError("state file: matrix must be at least 2x2");
    if (lines.size() != 1 + d) {
      throw ParseError("state file: expected " + std::to_string(d) + " matrix rows, got " +
                       std::to_string(lines.size() - 1));
    }
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
      const Vector row = parse_vector_tokens(lines[1 + i], 0, d,
                                             "matrix row " + std::to_string(i + 1));
      for (std::size_t j = 0; j < d; ++j) m(i, j) = row[j];
    }
    return DensityMatrix(m, tol);
  }

  if (head[0] == "spectrum") {
    const std::size_t d = head.size() - 1;
    if (d < 2) throw ParseError("state file: spectrum needs at least two entries");
    std::vector<double> probs;
    probs.reserve(d);
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      probs.push_back(parse_double(head[1 + i], "spectrum"));
      if (probs.back() < -tol.psd) {
        throw InvalidObject("spectrum entry " + std::to_string(probs.back()) + " is negative");
      }
      sum += probs.back();
    }
    if (std::abs(sum - 1.0) > tol.trace) {
      throw InvalidObject("spectrum sums to " + std::to_string(sum) + ", expected 1");
    }

    std::vector<Vector> basis;
    if (lines.size() == 1) {
      for (std::size_t k = 0; k < d; ++k) basis.push_back(Vector::basis(d, k));
    } else {
      if (lines[1].size() != 1 || lines[1][0] != "basis") {
        throw ParseError("state file: expected 'basis' after the spectrum line");
      }
      if (lines.size() != 2 + d) {
        throw ParseError("state file: expected " + std::to_string(d) + " basis rows, got " +
                         std::to_string(lines.size() - 2));
      }
      for (std::size_t k = 0; k < d; ++k) {
        basis.push_back(parse_vector_tokens(lines[2 + k], 0, d,
                                            "basis row " + std::to_string(k + 1)));
      }
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
          const double expect = (i == j) ? 1.0 : 0.0;
          if (std::abs(inner_product(basis[i], basis[j]) - complexd(expect)) > 1e-9) {
            throw InvalidObject("state file: basis rows are not orthonormal");
          }
        }
      }
    }
    return DensityMatrix::from_spectrum(probs, basis, tol);
  }

  throw ParseError("state file: expected 'matrix' or 'spectrum', got '" + head[0] + "'");
}

DensityMatrix load_state_file(const std::string& path, const Tolerances& tol) {
  std::ifstream in = open_or_throw(path);
  return parse_state_file(in, tol);
}

std::vector<std::pair<std::string, std::string>> parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& line : content_lines(in)) {
    if (line.size() != 2) throw ParseError("edge list: expected '<label> <label>' per line");
    out.emplace_back(line[0], line[1]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> load_edge_list(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return parse_edge_list(in);
}

double round_sig12(double x) {
  return std::strtod(format_sig12(x).c_str(), nullptr);
}

std::string format_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_sig17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace ctx
