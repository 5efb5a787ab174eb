#include "grass/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "grass/errors.hpp"

namespace grass {

namespace {

void put_block(std::ostringstream& o, const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) o << static_cast<int>(m(r, c));
    o << "\n";
  }
}

struct Lines {
  std::vector<std::string> text;
  std::size_t at = 0;

  explicit Lines(std::string_view s) {
    std::istringstream in{std::string(s)};
    for (std::string l; std::getline(in, l);) {
      if (!l.empty() && l.back() == '\r') l.pop_back();
      text.push_back(l);
    }
  }
  int lineno() const { return static_cast<int>(at) + 1; }
  bool done() const { return at >= text.size(); }
  [[noreturn]] void fail(const std::string& why, int line = 0) const {
    throw Error(Errc::ParseError, "line " + std::to_string(line ? line : lineno()) + ": " + why);
  }
  void skip_blank() {
    while (!done() && text[at].find_first_not_of(" \t") == std::string::npos) ++at;
  }
};

std::map<std::string, std::string> header(Lines& in, const std::string& magic, const std::vector<std::string>& keys) {
  in.skip_blank();
  if (in.done()) in.fail("empty input");
  std::istringstream h(in.text[in.at]);
  std::string tag, ver;
  h >> tag >> ver;
  if (tag != magic || ver != "v1") in.fail("expected header `" + magic + " v1 ...`");
  std::map<std::string, std::string> kv;
  for (std::string w; h >> w;) {
    const auto eq = w.find('=');
    if (eq == std::string::npos) in.fail("malformed header field '" + w + "'");
    kv[w.substr(0, eq)] = w.substr(eq + 1);
  }
  for (const auto& k : keys)
    if (!kv.count(k)) in.fail("header lacks " + k + "=");
  ++in.at;
  return kv;
}

int number(const Lines& in, const std::map<std::string, std::string>& kv, const std::string& key, int line) {
  const std::string& v = kv.at(key);
  if (v.empty() || v.size() > 9 || v.find_first_not_of("0123456789") != std::string::npos)
    in.fail(key + "= is not a non-negative integer", line);
  return std::stoi(v);
}

Matrix block(Lines& in, int rows, int cols, int q, const std::string& what) {
  in.skip_blank();
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r, ++in.at) {
    if (in.done()) in.fail("unexpected end of input inside " + what);
    const std::string& l = in.text[in.at];
    if (static_cast<int>(l.size()) != cols) in.fail("expected " + std::to_string(cols) + " digits in " + what);
    for (int c = 0; c < cols; ++c) {
      const int v = l[c] - '0';
      if (v < 0 || v >= q) in.fail("'" + std::string(1, l[c]) + "' is not an element of GF(" + std::to_string(q) + ")");
      m(r, c) = static_cast<Elem>(v);
    }
  }
  return m;
}

void no_trailing(Lines& in) {
  in.skip_blank();
  if (!in.done()) in.fail("trailing content after the declared count");
}

}  // namespace

std::string format_cdc(const Cdc& c) {
  std::ostringstream o;
  o << "cdc v1 q=" << c.q() << " n=" << c.n() << " k=" << c.k() << " d=" << c.d() << " count=" << c.size() << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) o << "\n";
    put_block(o, c.members()[i].gen());
  }
  return o.str();
}

Cdc parse_cdc(std::string_view text) {
  Lines in(text);
  const int hl = [&] { in.skip_blank(); return in.lineno(); }();
  auto kv = header(in, "cdc", {"q", "n", "k", "d", "count"});
  const int q = number(in, kv, "q", hl), n = number(in, kv, "n", hl), k = number(in, kv, "k", hl);
  const int d = number(in, kv, "d", hl), count = number(in, kv, "count", hl);
  if (!supported_order(q)) in.fail("unsupported field order " + std::to_string(q), hl);
  if (k < 1 || k > n || n > 4096) in.fail("bad dimensions n=" + std::to_string(n) + " k=" + std::to_string(k), hl);
  const Field f(q);
  Cdc c(q, n, k, d);
  for (int i = 0; i < count; ++i) {
    in.skip_blank();
    const int start = in.lineno();
    Matrix g = block(in, k, n, q, "codeword " + std::to_string(i + 1));
    try {
      c.insert(Subspace::from_rref(f, std::move(g)));
    } catch (const Error& e) {
      if (e.code() == Errc::NotRref) in.fail("codeword " + std::to_string(i + 1) + " is not a full-rank RREF generator", start);
      if (e.code() == Errc::DuplicateCodeword) in.fail("codeword " + std::to_string(i + 1) + " repeats an earlier one", start);
      throw;
    }
  }
  no_trailing(in);
  return c;
}

std::string format_fdrm(const FdrmCode& c) {
  std::ostringstream o;
  o << "fdrm v1 q=" << c.code.q << " m=" << c.code.m << " n=" << c.code.n << " delta=" << c.code.delta
    << " dim=" << c.code.dim() << " F=" << c.diagram.str() << "\n";
  for (std::size_t i = 0; i < c.code.basis.size(); ++i) {
    if (i) o << "\n";
    put_block(o, c.code.basis[i]);
  }
  return o.str();
}

FdrmCode parse_fdrm(std::string_view text) {
  Lines in(text);
  const int hl = [&] { in.skip_blank(); return in.lineno(); }();
  auto kv = header(in, "fdrm", {"q", "m", "n", "delta", "dim", "F"});
  const int q = number(in, kv, "q", hl), m = number(in, kv, "m", hl), n = number(in, kv, "n", hl);
  const int delta = number(in, kv, "delta", hl), dim = number(in, kv, "dim", hl);
  if (!supported_order(q)) in.fail("unsupported field order " + std::to_string(q), hl);
  FdrmCode c;
  try {
    c.diagram = FerrersDiagram::parse(kv.at("F"));
  } catch (const Error& e) {
    in.fail(std::string("bad diagram: ") + e.what(), hl);
  }
  if (c.diagram.rows() != m || c.diagram.columns() != n) in.fail("diagram shape differs from m x n", hl);
  const Field f(q);
  std::vector<Matrix> basis;
  for (int i = 0; i < dim; ++i) basis.push_back(block(in, m, n, q, "basis matrix " + std::to_string(i + 1)));
  no_trailing(in);
  try {
    c.code = make_linear_code(f, m, n, delta, std::move(basis));
  } catch (const Error& e) {
    in.fail(std::string("invalid basis: ") + e.what(), hl);
  }
  for (std::size_t i = 0; i < c.code.basis.size(); ++i)
    if (!support_ok(c.diagram, c.code.basis[i]))
      in.fail("basis matrix " + std::to_string(i + 1) + " leaves the diagram", hl);
  c.optimal = dim == singleton_bound(c.diagram, delta);
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::BadArguments, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::BadArguments, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::BadArguments, "write failed for " + path);
}

}  // namespace grass
