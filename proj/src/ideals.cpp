#include "scarf/ideals.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "scarf/errors.hpp"
#include "scarf/hypersurface.hpp"
#include "scarf/neighborly.hpp"
#include "scarf/topology.hpp"

namespace scarf {

PointSet MonomialIdeal::generator_points() const {
  if (generators.empty()) throw InputError("ideal has no generators");
  std::vector<ExtendedPoint> pts;
  std::vector<std::string> labels;
  pts.reserve(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    pts.push_back(ExtendedPoint::from_ints(generators[g]));
    labels.push_back(monomial_string(static_cast<int>(g)));
  }
  return PointSet(nvars(), std::move(pts), std::move(labels));
}

std::string MonomialIdeal::monomial_string(int g) const {
  const auto& e = generators.at(g);
  std::ostringstream out;
  bool any = false;
  for (int v = 0; v < nvars(); ++v) {
    if (e[v] == 0) continue;
    if (any) out << "*";
    out << variables[v];
    if (e[v] != 1) out << "^" << e[v];
    any = true;
  }
  if (!any) out << "1";
  return out.str();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() { return pos >= text.size(); }
  char peek() { return text[pos]; }

  [[noreturn]] void fail(const std::string& what) {
    throw InputError("ideal parse error at position " + std::to_string(pos) + ": " + what);
  }

  std::string identifier() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) fail("expected a variable name");
    return text.substr(start, pos - start);
  }

  long long integer() {
    skip_ws();
    bool negative = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an exponent");
    long long v = std::stoll(text.substr(start, pos - start));
    return negative ? -v : v;
  }
};

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& variables) {
  if (variables.empty()) throw InputError("parse_ideal: no variables given");
  std::map<std::string, int> var_index;
  for (std::size_t v = 0; v < variables.size(); ++v) {
    if (variables[v].empty()) throw InputError("parse_ideal: empty variable name");
    if (!var_index.emplace(variables[v], static_cast<int>(v)).second)
      throw InputError("parse_ideal: repeated variable '" + variables[v] + "'");
  }

  MonomialIdeal I;
  I.variables = variables;
  Parser p{text};
  p.skip_ws();
  while (!p.done()) {
    std::vector<long long> exponents(variables.size(), 0);
    bool saw_factor = false;
    while (true) {
      p.skip_ws();
      if (p.done()) break;
      if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
        // Only the unit monomial is allowed as a bare number.
        long long c = p.integer();
        if (c != 1) p.fail("coefficients are not allowed; only the monomial 1");
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(p.peek())) || p.peek() == '_') {
        std::size_t name_pos = p.pos;
        std::string name = p.identifier();
        auto it = var_index.find(name);
        if (it == var_index.end()) {
          p.pos = name_pos;
          p.fail("unknown variable '" + name + "'");
        }
        long long e = 1;
        p.skip_ws();
        if (!p.done() && p.peek() == '^') {
          ++p.pos;
          e = p.integer();
        }
        if (e < 0) p.fail("negative exponent");
        exponents[it->second] += e;
        saw_factor = true;
      } else {
        p.fail(std::string("unexpected character '") + p.peek() + "'");
      }
      p.skip_ws();
      if (!p.done() && p.peek() == '*') {
        ++p.pos;
        continue;
      }
      break;
    }
    if (!saw_factor) p.fail("empty monomial");
    I.generators.push_back(std::move(exponents));
    p.skip_ws();
    if (p.done()) break;
    if (p.peek() == ',' || p.peek() == ';') {
      ++p.pos;
      p.skip_ws();
      if (p.done()) p.fail("trailing separator");
      continue;
    }
    p.fail(std::string("unexpected character '") + p.peek() + "'");
  }
  return I;
}

MonomialIdeal minimize(const MonomialIdeal& I) {
  MonomialIdeal out;
  out.variables = I.variables;
  if (I.generators.empty()) return out;
  std::vector<ExtendedPoint> pts;
  for (const auto& e : I.generators) pts.push_back(ExtendedPoint::from_ints(e));
  for (const auto& m : minimal_elements(pts)) {
    std::vector<long long> e;
    for (int v = 0; v < I.nvars(); ++v)
      e.push_back(static_cast<long long>(numerator(m[v].value())));
    out.generators.push_back(std::move(e));
  }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

bool is_minimized(const MonomialIdeal& I) {
  for (std::size_t i = 0; i < I.generators.size(); ++i)
    for (std::size_t j = 0; j < I.generators.size(); ++j) {
      if (i == j) continue;
      bool divides = true;
      for (int v = 0; v < I.nvars() && divides; ++v)
        divides = I.generators[i][v] <= I.generators[j][v];
      if (divides) return false;
    }
  return true;
}

namespace {

/// Literal membership test: every generator keeps some exponent >= lcm(B).
bool literal_test(const MonomialIdeal& I, const std::vector<long long>& lcm) {
  for (const auto& g : I.generators) {
    bool covers = false;
    for (std::size_t v = 0; v < lcm.size() && !covers; ++v) covers = g[v] >= lcm[v];
    if (!covers) return false;
  }
  return true;
}

}  // namespace

SimplicialComplex buchberger_complex(const MonomialIdeal& I, int max_dim) {
  if (!is_minimized(I)) throw InputError("buchberger_complex: ideal is not minimized");
  if (I.generators.empty()) return SimplicialComplex(0);
  PointSet G = I.generator_points();
  SimplicialComplex K = enumerate_complex(G, max_dim);
  // Cross-check the literal membership test on every face and on every
  // rejected single-step extension.
  for (int k = 1; k <= K.max_dim() + 1; ++k) {
    for (const auto& f : K.faces_with_size(k)) {
      std::vector<long long> lcm(I.nvars(), 0);
      for (int g : f)
        for (int v = 0; v < I.nvars(); ++v) lcm[v] = std::max(lcm[v], I.generators[g][v]);
      if (!literal_test(I, lcm))
        throw InternalError("buchberger_complex: literal and join tests disagree on a face");
    }
  }
  return K;
}

GeometricMesh buchberger_graph(const MonomialIdeal& I) {
  if (I.nvars() != 3) throw InputError("buchberger_graph: exactly three variables required");
  if (!is_minimized(I)) throw InputError("buchberger_graph: ideal is not minimized");
  PointSet G = I.generator_points();
  if (!is_generic(G).generic) throw InputError("buchberger_graph: ideal is not generic");
  SimplicialComplex K = enumerate_complex(G, 1);

  GeometricMesh mesh;
  mesh.dim = 3;
  mesh.cells.resize(2);
  std::map<ExtendedPoint, int, ExtendedPointLexLess> vertex_of;
  auto vertex = [&](const ExtendedPoint& p) {
    auto [it, inserted] = vertex_of.emplace(p, static_cast<int>(mesh.vertices.size()));
    if (inserted) mesh.vertices.push_back(p);
    return it->second;
  };
  for (const auto& f : K.faces_with_size(1)) {
    mesh.cells[0].push_back({vertex(G.point(f[0]))});
  }
  for (const auto& f : K.faces_with_size(2)) {
    ExtendedPoint lcm = face_join(G, f);
    int m = vertex(lcm);
    int a = vertex(G.point(f[0]));
    int b = vertex(G.point(f[1]));
    std::vector<int> left{std::min(a, m), std::max(a, m)};
    std::vector<int> right{std::min(b, m), std::max(b, m)};
    mesh.cells[1].push_back(std::move(left));
    mesh.cells[1].push_back(std::move(right));
  }
  std::sort(mesh.cells[1].begin(), mesh.cells[1].end());
  return mesh;
}

std::vector<long long> GradedChainComplex::ranks() const {
  std::vector<long long> out;
  for (std::size_t d = 1; d < faces.size(); ++d)
    out.push_back(static_cast<long long>(faces[d].size()));
  return out;
}

GradedChainComplex scarf_chain_complex(const MonomialIdeal& I) {
  if (!is_minimized(I)) throw InputError("scarf_chain_complex: ideal is not minimized");
  GradedChainComplex C;
  if (I.generators.empty()) {
    C.faces.push_back({{}});
    C.multidegrees.push_back({ExtendedPoint::from_ints(std::vector<long long>(
        std::max(1, I.nvars()), 0))});
    C.boundaries.push_back({});
    return C;
  }
  PointSet G = I.generator_points();
  C.minimality_claimed = is_generic(G).generic;
  SimplicialComplex K = enumerate_complex(G);

  const int top = K.max_dim() + 1;
  C.faces.resize(top + 1);
  C.multidegrees.resize(top + 1);
  C.boundaries.resize(top + 1);
  C.faces[0] = {{}};
  C.multidegrees[0] = {ExtendedPoint::from_ints(std::vector<long long>(I.nvars(), 0))};
  std::map<std::vector<int>, int> index_in_degree;
  for (int d = 1; d <= top; ++d) {
    std::map<std::vector<int>, int> next_index;
    int idx = 0;
    for (const auto& f : K.faces_with_size(d)) {
      C.faces[d].push_back(f);
      C.multidegrees[d].push_back(face_join(G, f));
      next_index[f] = idx++;
    }
    // Incidence into degree d-1 with alternating signs on sorted members.
    const std::size_t rows = d == 1 ? 1 : C.faces[d - 1].size();
    C.boundaries[d].assign(rows, std::vector<int>(C.faces[d].size(), 0));
    int col = 0;
    for (const auto& f : C.faces[d]) {
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        int sign = (drop % 2 == 0) ? 1 : -1;
        if (d == 1) {
          C.boundaries[d][0][col] = sign;
          continue;
        }
        std::vector<int> sub;
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != drop) sub.push_back(f[j]);
        C.boundaries[d][index_in_degree.at(sub)][col] = sign;
      }
      ++col;
    }
    index_in_degree = std::move(next_index);
  }
  // d(d) = 0, verified by exact multiplication.
  for (int d = 2; d <= top; ++d) {
    const auto& B1 = C.boundaries[d - 1];
    const auto& B2 = C.boundaries[d];
    for (std::size_t r = 0; r < B1.size(); ++r)
      for (std::size_t c = 0; c < (B2.empty() ? 0 : B2[0].size()); ++c) {
        long long sum = 0;
        for (std::size_t k = 0; k < B2.size(); ++k) sum += static_cast<long long>(B1[r][k]) * B2[k][c];
        if (sum != 0) throw InternalError("scarf_chain_complex: boundary squared is nonzero");
      }
  }
  return C;
}

long long BettiTable::rank(int index, const ExtendedPoint& degree) const {
  for (const auto& e : entries)
    if (e.index == index && e.degree == degree) return e.rank;
  return 0;
}

BettiTable betti_oracle(const MonomialIdeal& I, int max_generators, int max_vars) {
  if (!is_minimized(I)) throw InputError("betti_oracle: ideal is not minimized");
  if (static_cast<int>(I.generators.size()) > max_generators ||
      I.nvars() > max_vars)
    throw ScaleError("betti_oracle: " + std::to_string(I.generators.size()) + " generators in " +
                     std::to_string(I.nvars()) + " variables exceeds the guard (" +
                     std::to_string(max_generators) + ", " + std::to_string(max_vars) + ")");
  BettiTable table;
  if (I.generators.empty()) return table;
  PointSet G = I.generator_points();
  FinitePoset L = lcm_lattice(G);
  for (int b = 0; b < L.size(); ++b) {
    FinitePoset interval = L.induced(L.strictly_below(b));
    BettiVector betti = reduced_homology(order_complex(interval));
    for (int d = -1; d + 1 < static_cast<int>(betti.reduced.size()); ++d) {
      long long rank = betti.at_dim(d);
      if (rank != 0)
        table.entries.push_back({d + 1, L.label(b), rank});
    }
  }
  std::sort(table.entries.begin(), table.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
    if (a.index != b.index) return a.index < b.index;
    return lex_less(a.degree, b.degree);
  });
  return table;
}

}  // namespace scarf
