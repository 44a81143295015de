#include "heisenberg/chain.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace heis {

namespace {

std::vector<std::string> param_names(int dim) {
  std::vector<std::string> names;
  for (int i = 1; i <= dim; ++i) names.push_back("u" + std::to_string(i));
  return names;
}

} // namespace

ParamSimplex::ParamSimplex(int dim, Domain domain, std::vector<Expr> map, int multiplicity, int quadrature_order)
    : dim_(dim), domain_(domain), map_(std::move(map)), multiplicity_(multiplicity), quadrature_order_(quadrature_order) {
  if (dim < 0) throw std::invalid_argument("negative simplex dimension");
  if (map_.size() % 2 == 0 || map_.size() < 3 || map_.size() > 2 * kMaxRank + 1)
    throw std::invalid_argument("map must have 2n+1 components for 1 <= n <= " + std::to_string(kMaxRank));
  if (dim > static_cast<int>(map_.size())) throw std::invalid_argument("simplex dimension exceeds the group dimension");
  if (quadrature_order < 1) throw std::invalid_argument("quadrature order must be positive");
  const std::vector<Interval> box(static_cast<std::size_t>(dim), Interval{0, 1});
  std::vector<Polynomial> polys;
  bool polynomial = true;
  for (const auto& e : map_) {
    check_smooth_on(e, box);
    std::vector<Expr> row;
    for (int j = 0; j < dim; ++j) {
      row.push_back(e.derivative(j));
      check_smooth_on(row.back(), box);
    }
    jacobian_.push_back(std::move(row));
    if (polynomial) {
      auto p = e.to_polynomial(dim);
      if (p) polys.push_back(std::move(*p));
      else polynomial = false;
    }
  }
  if (polynomial) poly_ = std::move(polys);
}

ParamSimplex ParamSimplex::parse(int dim, Domain domain, const std::vector<std::string>& map, int multiplicity,
                                 int quadrature_order) {
  std::vector<Expr> exprs;
  const auto names = param_names(dim);
  for (const auto& text : map) exprs.push_back(parse_expression(text, names));
  return ParamSimplex(dim, domain, std::move(exprs), multiplicity, quadrature_order);
}

std::vector<double> ParamSimplex::point(const std::vector<double>& u) const {
  std::vector<double> p;
  p.reserve(map_.size());
  for (const auto& e : map_) p.push_back(e.evaluate(u));
  return p;
}

std::vector<std::vector<double>> ParamSimplex::frame_jacobian(const std::vector<double>& u) const {
  const int n = rank();
  const auto p = point(u);
  std::vector<std::vector<double>> J(map_.size(), std::vector<double>(static_cast<std::size_t>(dim_)));
  for (std::size_t i = 0; i < map_.size(); ++i)
    for (int j = 0; j < dim_; ++j) J[i][static_cast<std::size_t>(j)] = jacobian_[i][static_cast<std::size_t>(j)].evaluate(u);
  // Z component: dt - 1/2 sum (x dy - y dx)
  auto& z = J[static_cast<std::size_t>(2 * n)];
  for (int j = 0; j < dim_; ++j) {
    const auto c = static_cast<std::size_t>(j);
    double corr = 0;
    for (int i = 0; i < n; ++i) {
      const auto xi = static_cast<std::size_t>(i), yi = static_cast<std::size_t>(n + i);
      corr += p[xi] * J[yi][c] - p[yi] * J[xi][c];
    }
    z[c] -= 0.5 * corr;
  }
  return J;
}

std::vector<std::vector<Polynomial>> ParamSimplex::frame_jacobian_exact() const {
  if (!poly_) throw std::logic_error("exact Jacobian needs a polynomial map");
  const int n = rank();
  const auto& F = *poly_;
  std::vector<std::vector<Polynomial>> J(F.size());
  for (std::size_t i = 0; i < F.size(); ++i)
    for (int j = 0; j < dim_; ++j) J[i].push_back(F[i].derivative(j));
  const Rational half(1, 2);
  for (int j = 0; j < dim_; ++j) {
    const auto c = static_cast<std::size_t>(j);
    Polynomial corr(dim_);
    for (int i = 0; i < n; ++i) {
      const auto xi = static_cast<std::size_t>(i), yi = static_cast<std::size_t>(n + i);
      corr += F[xi] * J[yi][c] - F[yi] * J[xi][c];
    }
    J[static_cast<std::size_t>(2 * n)][c] -= half * corr;
  }
  return J;
}

ParamSimplex ParamSimplex::with_map(std::vector<Expr> map) const {
  return ParamSimplex(dim_, domain_, std::move(map), multiplicity_, quadrature_order_);
}

bool Chain::is_polynomial() const {
  for (const auto& p : pieces_)
    if (!p.simplex.is_polynomial()) return false;
  return true;
}

void Chain::add(long coefficient, ParamSimplex simplex) {
  if (simplex.dim() != dim_) throw std::invalid_argument("all pieces of a chain share one dimension");
  if (simplex.rank() != n_) throw std::invalid_argument("piece maps into a group of different rank");
  pieces_.push_back({coefficient, std::move(simplex)});
}

Chain boundary(const Chain& T) {
  if (T.dim() == 0) throw std::invalid_argument("a 0-chain has no boundary");
  const int k = T.dim();
  Chain out(T.rank(), k - 1);
  out.embedded_disjoint = false;
  for (const auto& piece : T.pieces()) {
    const auto& s = piece.simplex;
    if (s.domain() == Domain::cube) {
      for (int i = 1; i <= k; ++i)
        for (int e = 0; e <= 1; ++e) {
          std::vector<Expr> subs;
          for (int j = 1; j <= k; ++j) {
            if (j < i) subs.push_back(Expr::variable(j - 1));
            else if (j == i) subs.push_back(Expr::constant(e));
            else subs.push_back(Expr::variable(j - 2));
          }
          std::vector<Expr> face;
          for (const auto& c : s.map()) face.push_back(c.substitute(subs));
          const long sign = (i + e) % 2 == 0 ? 1 : -1;
          out.add(sign * piece.coefficient,
                  ParamSimplex(k - 1, Domain::cube, std::move(face), s.multiplicity(), s.quadrature_order()));
        }
    } else {
      // vertices v_0 = 0, v_j = e_j; face i drops v_i
      for (int i = 0; i <= k; ++i) {
        std::vector<int> verts;
        for (int v = 0; v <= k; ++v)
          if (v != i) verts.push_back(v);
        // u_m = [v_{a0}]_m + sum_j s_j ([v_{aj}]_m - [v_{a0}]_m)
        std::vector<Expr> subs;
        for (int m = 1; m <= k; ++m) {
          auto coord = [m](int v) { return v == m ? 1 : 0; };
          Expr u = Expr::constant(coord(verts[0]));
          for (int j = 1; j < static_cast<int>(verts.size()); ++j) {
            const int c = coord(verts[static_cast<std::size_t>(j)]) - coord(verts[0]);
            if (c != 0) u = u + Expr::constant(c) * Expr::variable(j - 1);
          }
          subs.push_back(u);
        }
        std::vector<Expr> face;
        for (const auto& c : s.map()) face.push_back(c.substitute(subs));
        const long sign = i % 2 == 0 ? 1 : -1;
        out.add(sign * piece.coefficient,
                ParamSimplex(k - 1, Domain::simplex, std::move(face), s.multiplicity(), s.quadrature_order()));
      }
    }
  }
  return out;
}

Chain pushforward_dilation(const Rational& lambda, const Chain& T) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("dilation factor must be positive");
  Chain out(T.rank(), T.dim());
  out.embedded_disjoint = T.embedded_disjoint;
  const Expr l = Expr::constant(lambda), l2 = Expr::constant(lambda * lambda);
  for (const auto& piece : T.pieces()) {
    std::vector<Expr> map;
    const auto& m = piece.simplex.map();
    for (std::size_t i = 0; i + 1 < m.size(); ++i) map.push_back(l * m[i]);
    map.push_back(l2 * m.back());
    out.add(piece.coefficient, piece.simplex.with_map(std::move(map)));
  }
  return out;
}

namespace {

SourcePos offset_to_pos(const std::string& text, std::size_t offset) {
  SourcePos pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

} // namespace

Chain chain_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    // drop the library's own "[json.exception...] parse error at line L, column C: " prefix
    if (const auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError("invalid JSON: " + what, offset_to_pos(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  auto fail = [](const std::string& what) { throw std::invalid_argument("chain configuration: " + what); };
  if (!j.is_object()) fail("top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) fail("missing integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxRank) fail("'n' must be between 1 and " + std::to_string(kMaxRank));
  if (!j.contains("simplices") || !j["simplices"].is_array()) fail("missing array 'simplices'");
  const auto& list = j["simplices"];
  int dim = 0;
  if (!list.empty()) {
    if (!list[0].contains("dim") || !list[0]["dim"].is_number_integer()) fail("simplices[0]: missing integer 'dim'");
    dim = list[0]["dim"].get<int>();
  } else if (j.contains("dim") && j["dim"].is_number_integer()) {
    dim = j["dim"].get<int>();
  }
  Chain chain(n, dim);
  chain.embedded_disjoint = j.value("embedded_disjoint", true);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& s = list[i];
    const std::string where = "simplices[" + std::to_string(i) + "]";
    if (!s.is_object()) fail(where + " must be an object");
    if (!s.contains("dim") || !s["dim"].is_number_integer()) fail(where + ": missing integer 'dim'");
    if (!s.contains("map") || !s["map"].is_array()) fail(where + ": missing array 'map'");
    const int d = s["dim"].get<int>();
    if (d != dim) fail(where + ": dimension differs from the first simplex");
    const std::string dom = s.value("domain", std::string("cube"));
    if (dom != "cube" && dom != "simplex") fail(where + ": domain must be \"cube\" or \"simplex\"");
    std::vector<std::string> map;
    for (const auto& m : s["map"]) {
      if (m.is_string()) map.push_back(m.get<std::string>());
      else if (m.is_number()) map.push_back(m.dump());
      else fail(where + ": map entries must be strings");
    }
    if (static_cast<int>(map.size()) != 2 * n + 1)
      fail(where + ": map needs " + std::to_string(2 * n + 1) + " components");
    const long coefficient = s.value("coefficient", 1L);
    const int multiplicity = s.value("multiplicity", 1);
    const int order = s.value("quadrature_order", 8);
    std::vector<Expr> exprs;
    const auto names = param_names(d);
    for (std::size_t c = 0; c < map.size(); ++c) {
      try {
        exprs.push_back(parse_expression(map[c], names));
      } catch (const ParseError& e) {
        throw ParseError(where + ".map[" + std::to_string(c) + "] \"" + map[c] + "\": " + e.message(),
                         {e.line(), e.column()});
      }
    }
    try {
      chain.add(coefficient, ParamSimplex(d, dom == "cube" ? Domain::cube : Domain::simplex, std::move(exprs),
                                          multiplicity, order));
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.message(), {e.line(), e.column()});
    }
  }
  return chain;
}

Chain load_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return chain_from_json(ss.str());
}

namespace chains {

namespace {
Chain single(int n, int dim, const std::vector<std::string>& map) {
  Chain c(n, dim);
  c.add(1, ParamSimplex::parse(dim, Domain::cube, map));
  return c;
}
std::vector<std::string> zeros_with(int n, std::vector<std::pair<int, std::string>> set) {
  std::vector<std::string> map(static_cast<std::size_t>(2 * n + 1), "0");
  for (auto& [i, s] : set) map[static_cast<std::size_t>(i)] = s;
  return map;
}
} // namespace

Chain horizontal_segment(int n) { return single(n, 1, zeros_with(n, {{0, "u1"}})); }
Chain vertical_segment(int n) { return single(n, 1, zeros_with(n, {{2 * n, "u1"}})); }
Chain vertical_square() { return single(1, 2, {"u1", "0", "u2"}); }
Chain graph_square() { return single(1, 2, {"u1", "u2", "0"}); }
Chain colegendrian_plane() { return single(2, 3, {"u1", "u2", "0", "0", "u3"}); }
Chain symplectic_plane() { return single(2, 3, {"u1", "0", "u2", "0", "u3"}); }

} // namespace chains

} // namespace heis
