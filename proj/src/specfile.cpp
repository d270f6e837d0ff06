#include "lieframe/specfile.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace lieframe {

namespace {

std::string strip_comments(std::istream& in) {
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    out << line << '\n';
  }
  return out.str();
}

[[noreturn]] void fail(const std::string& msg) {
  throw DimensionError("spec file: " + msg);
}

}  // namespace

GroupSpecFile parse_spec_text(std::istream& in) {
  std::istringstream tokens(strip_comments(in));
  GroupSpecFile out;
  LieSplitSpec& spec = out.spec;
  spec.n_dim = -1;
  spec.r_dim = -1;
  bool allocated = false;
  std::string key;

  auto require_dims = [&] {
    if (spec.n_dim < 0 || spec.r_dim < 0) fail("n_dim and r_dim must come first");
    if (!allocated) {
      spec.allocate();
      allocated = true;
    }
  };

  while (tokens >> key) {
    if (key == "name") {
      tokens >> spec.name;
    } else if (key == "n_dim") {
      tokens >> spec.n_dim;
    } else if (key == "r_dim") {
      tokens >> spec.r_dim;
    } else if (key == "h_solvable") {
      int v;
      tokens >> v;
      spec.h_solvable = v != 0;
    } else if (key == "h_exponential") {
      int v;
      tokens >> v;
      spec.h_exponential = v != 0;
    } else if (key == "nilpotency_step_n") {
      int v;
      tokens >> v;
      spec.nilpotency_step_n = v;
    } else if (key == "nilpotency_step_h") {
      int v;
      tokens >> v;
      spec.nilpotency_step_h = v;
    } else if (key == "bracket" || key == "c") {
      require_dims();
      int i, j, k;
      double v;
      if (!(tokens >> i >> j >> k >> v)) fail("malformed '" + key + "' line");
      if (i < 1 || j < 1 || k < 1 || i > spec.dim() || j > spec.dim() || k > spec.dim())
        fail("bracket index out of range");
      if (key == "bracket")
        spec.set_bracket(i - 1, j - 1, k - 1, v);
      else
        spec.c[(static_cast<std::size_t>(i - 1) * spec.dim() + (j - 1)) * spec.dim() + (k - 1)] = v;
    } else if (key == "matrix") {
      require_dims();
      int idx, d;
      if (!(tokens >> idx >> d)) fail("malformed 'matrix' line");
      if (idx < 1 || idx > spec.dim()) fail("matrix index out of range");
      if (spec.matrix_realization.empty())
        spec.matrix_realization.assign(spec.dim(), Mat());
      Mat m(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (!(tokens >> m(r, c))) fail("matrix entries truncated");
      spec.matrix_realization[idx - 1] = m;
    } else if (key == "lambda") {
      require_dims();
      out.lambda = Vec(spec.n_dim);
      for (int i = 0; i < spec.n_dim; ++i)
        if (!(tokens >> out.lambda[i])) fail("lambda entries truncated");
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (spec.n_dim < 0 || spec.r_dim < 0) fail("missing n_dim/r_dim");
  if (!allocated) spec.allocate();
  if (out.lambda.size() == 0) out.lambda = Vec::Zero(spec.n_dim);
  if (!spec.matrix_realization.empty())
    for (const Mat& m : spec.matrix_realization)
      if (m.size() == 0) fail("matrix realization must cover every basis element");
  return out;
}

GroupSpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  return parse_spec_text(in);
}

std::string serialize_spec(const LieSplitSpec& spec, const Vec& lambda) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "name " << (spec.name.empty() ? std::string("unnamed") : spec.name) << "\n";
  os << "n_dim " << spec.n_dim << "\n";
  os << "r_dim " << spec.r_dim << "\n";
  os << "h_solvable " << (spec.h_solvable ? 1 : 0) << "\n";
  os << "h_exponential " << (spec.h_exponential ? 1 : 0) << "\n";
  if (spec.nilpotency_step_n) os << "nilpotency_step_n " << *spec.nilpotency_step_n << "\n";
  if (spec.nilpotency_step_h) os << "nilpotency_step_h " << *spec.nilpotency_step_h << "\n";
  for (int i = 0; i < spec.dim(); ++i)
    for (int j = i + 1; j < spec.dim(); ++j)
      for (int k = 0; k < spec.dim(); ++k) {
        double v = spec.bracket_coeff(i, j, k);
        if (v != 0.0) os << "bracket " << i + 1 << " " << j + 1 << " " << k + 1 << " " << v << "\n";
      }
  for (std::size_t i = 0; i < spec.matrix_realization.size(); ++i) {
    const Mat& m = spec.matrix_realization[i];
    os << "matrix " << i + 1 << " " << m.rows();
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) os << " " << m(r, c);
    os << "\n";
  }
  os << "lambda";
  for (int i = 0; i < lambda.size(); ++i) os << " " << lambda[i];
  os << "\n";
  return os.str();
}

void save_spec_file(const LieSplitSpec& spec, const Vec& lambda, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot write '" + path + "'");
  out << serialize_spec(spec, lambda);
}

}  // namespace lieframe
