#include <catch_amalgamated.hpp>

#include "bgg/algebra_io.hpp"
#include "bgg/hwcat.hpp"
#include "bgg/resolution.hpp"
#include "bgg/spectral.hpp"

using bgg::ChainComplex;
using bgg::Filtration;
using bgg::Matrix;
using bgg::Module;
using bgg::ModuleMap;
using bgg::Rational;
using bgg::SSPage;
using bgg::SSResult;
using bgg::VertexSpaces;

namespace {

bgg::AlgebraData a1_data() {
  return bgg::load_algebra_file(std::string(BGG_REPO_DIR) + "/data/a1_block.json");
}

template <class F>
VertexSpaces<F> full_spaces(const Module<F>& m) {
  VertexSpaces<F> s;
  for (std::size_t d : m.dims) s.push_back(Matrix<F>::identity(d));
  return s;
}

/// Subcomplex carried by d-stable spaces, together with the quotient complex.
template <class F>
std::pair<ChainComplex<F>, ChainComplex<F>> sub_and_quotient(
    const ChainComplex<F>& c, const std::vector<VertexSpaces<F>>& spaces) {
  std::vector<bgg::SubQuot<F>> sq;
  for (std::size_t k = 0; k < c.terms.size(); ++k)
    sq.push_back(bgg::split_by_spaces(c.terms[k], spaces[k]));
  ChainComplex<F> sub, quot;
  sub.alg = c.alg;
  quot.alg = c.alg;
  sub.min_deg = c.min_deg;
  quot.min_deg = c.min_deg;
  for (const auto& s : sq) {
    sub.terms.push_back(s.sub);
    quot.terms.push_back(s.quot);
  }
  for (std::size_t k = 0; k + 1 < sq.size(); ++k) {
    ModuleMap<F> ds = ModuleMap<F>::zero(sq[k].sub, sq[k + 1].sub);
    ModuleMap<F> dq = ModuleMap<F>::zero(sq[k].quot, sq[k + 1].quot);
    for (std::size_t v = 0; v < c.terms[k].dims.size(); ++v) {
      const Matrix<F>& d = c.diffs[k].mats[v];
      ds.mats[v] = bgg::solve_matrix(sq[k + 1].incl.mats[v],
                                     d * sq[k].incl.mats[v])
                       .value();
      Matrix<F> section =
          bgg::solve_matrix(sq[k].proj.mats[v],
                            Matrix<F>::identity(sq[k].quot.dims[v]))
              .value();
      dq.mats[v] = sq[k + 1].proj.mats[v] * d * section;
    }
    sub.diffs.push_back(std::move(ds));
    quot.diffs.push_back(std::move(dq));
  }
  sub.check();
  quot.check();
  return {sub, quot};
}

std::size_t cell_total(const SSPage& pg, int p, int q) {
  auto it = pg.cells.find({p, q});
  if (it == pg.cells.end()) return 0;
  std::size_t t = 0;
  for (std::size_t d : it->second) t += d;
  return t;
}

std::size_t rank_at(const SSPage& pg, int p, int q) {
  auto it = pg.dr_rank.find({p, q});
  return it == pg.dr_rank.end() ? 0 : it->second;
}

/// Every consecutive pair of pages satisfies
///   dim E_{r+1}(p,q) = dim E_r(p,q) - rank out of (p,q) - rank into (p,q).
void check_rank_bookkeeping(const SSResult& ss) {
  for (std::size_t i = 0; i + 1 < ss.pages.size(); ++i) {
    const SSPage& cur = ss.pages[i];
    const SSPage& nxt = ss.pages[i + 1];
    int r = cur.r;
    auto at = [&](const SSPage& pg) {
      std::vector<std::pair<int, int>> keys;
      for (const auto& kv : pg.cells) keys.push_back(kv.first);
      return keys;
    };
    std::vector<std::pair<int, int>> keys = at(cur);
    for (const auto& k : at(nxt)) keys.push_back(k);
    for (const auto& [p, q] : keys) {
      std::size_t expect = cell_total(cur, p, q) - rank_at(cur, p, q) -
                           rank_at(cur, p - r, q + r - 1);
      CHECK(cell_total(nxt, p, q) == expect);
    }
  }
}

/// The last page totals per total degree n match the cohomology of the
/// filtered complex.
void check_convergence(const ChainComplex<Rational>& c,
                       const Filtration<Rational>& f, const SSResult& ss) {
  auto h = c.cohomology_dims();
  for (int n = c.min_deg; n <= c.max_deg(); ++n) {
    std::size_t infinity = 0;
    for (int p = f.p_min; p <= f.p_max(); ++p)
      infinity += cell_total(ss.pages.back(), p, n - p);
    std::size_t want = h.count(n) ? h.at(n) : 0;
    CHECK(infinity == want);
  }
}

}  // namespace

TEST_CASE("filtration validation", "[spectral]") {
  bgg::BlockContext<Rational> ctx(a1_data());
  ChainComplex<Rational> c = bgg::proj_resolution(bgg::simple(ctx.alg, 1)).to_chain();
  REQUIRE(c.min_deg == -2);

  Filtration<Rational> f = bgg::trace_filtration(c, 0, {{0, 1}, {1}});
  CHECK(f.p_min == 0);
  CHECK(f.p_max() == 1);
  bgg::check_filtration(c, f);

  // Levels out of order are not nested.
  Filtration<Rational> swapped = f;
  std::swap(swapped.levels[0], swapped.levels[1]);
  CHECK_THROWS_AS(bgg::check_filtration(c, swapped), std::logic_error);

  // A top level that misses part of the complex is rejected.
  Filtration<Rational> partial = bgg::trace_filtration(c, 0, {{1}, {1}});
  CHECK_THROWS_AS(bgg::check_filtration(c, partial), std::logic_error);

  // Hand-built spaces that the differential leaves are rejected: the span of
  // the generator of the degree -2 term maps onto a line not inside it.
  Filtration<Rational> unstable = f;
  unstable.levels[1][0] = bgg::empty_spaces(c.term(-2));
  unstable.levels[1][0][1] = Matrix<Rational>::identity(1);
  unstable.levels[1][1] = bgg::empty_spaces(c.term(-1));
  CHECK_THROWS_AS(bgg::check_filtration(c, unstable), std::logic_error);
}

TEST_CASE("first page is cohomology of the associated graded", "[spectral]") {
  bgg::BlockContext<Rational> ctx(a1_data());
  ChainComplex<Rational> c = bgg::proj_resolution(bgg::simple(ctx.alg, 1)).to_chain();
  Filtration<Rational> f = bgg::trace_filtration(c, 0, {{0, 1}, {1}});
  SSResult ss = bgg::compute_spectral(c, f);

  auto [sub, quot] = sub_and_quotient(c, f.levels[1]);
  auto h_sub = sub.cohomology_vertex_dims();
  auto h_quot = quot.cohomology_vertex_dims();

  std::size_t expected_cells = h_sub.size() + h_quot.size();
  CHECK(ss.pages[0].cells.size() == expected_cells);
  for (const auto& [n, dims] : h_sub) CHECK(ss.pages[0].cells.at({1, n - 1}) == dims);
  for (const auto& [n, dims] : h_quot) CHECK(ss.pages[0].cells.at({0, n}) == dims);
}

TEST_CASE("two level trace filtration of a simple resolution", "[spectral]") {
  bgg::BlockContext<Rational> ctx(a1_data());
  ChainComplex<Rational> c = bgg::proj_resolution(bgg::simple(ctx.alg, 1)).to_chain();
  Filtration<Rational> f = bgg::trace_filtration(c, 0, {{0, 1}, {1}});
  SSResult ss = bgg::compute_spectral(c, f);

  REQUIRE(ss.pages.size() == 3);

  // E_1: the quotient contributes the vertex-e simple in inner degree -1, the
  // trace subcomplex contributes its degree-zero cohomology.
  using Cells = std::map<std::pair<int, int>, std::vector<std::size_t>>;
  CHECK(ss.pages[0].cells ==
        Cells{{{0, -1}, {1, 0}}, {{1, -1}, {1, 1}}});
  CHECK(ss.pages[0].dr_rank ==
        std::map<std::pair<int, int>, std::size_t>{{{0, -1}, 1}});

  // d_1 cancels the quotient class against the vertex-e part of the trace
  // cell; what survives is the simple at the far vertex.
  CHECK(ss.pages[1].cells == Cells{{{1, -1}, {0, 1}}});
  CHECK(ss.pages[1].dr_rank.empty());
  CHECK(ss.pages[2].cells == ss.pages[1].cells);
  CHECK(ss.stable_page == 2);

  check_rank_bookkeeping(ss);
  check_convergence(c, f, ss);
}

TEST_CASE("three level filtration with a second page differential", "[spectral]") {
  bgg::BlockContext<Rational> ctx(a1_data());
  ChainComplex<Rational> c = bgg::proj_resolution(bgg::simple(ctx.alg, 1)).to_chain();

  Filtration<Rational> f;
  f.p_min = 0;
  std::vector<VertexSpaces<Rational>> lvl0, lvl1, lvl2;
  for (int d = c.min_deg; d <= c.max_deg(); ++d) {
    lvl0.push_back(full_spaces(c.term(d)));
    lvl1.push_back(bgg::trace_spaces(c.term(d), {1}));
    lvl2.push_back(d == 0 ? bgg::radical_spaces(c.term(d))
                          : bgg::empty_spaces(c.term(d)));
  }
  f.levels = {lvl0, lvl1, lvl2};
  bgg::check_filtration(c, f);

  SSResult ss = bgg::compute_spectral(c, f);
  REQUIRE(ss.pages.size() == 4);

  using Cells = std::map<std::pair<int, int>, std::vector<std::size_t>>;
  // Three one-dimensional classes on the first page, no d_1 anywhere.
  CHECK(ss.pages[0].cells == Cells{{{0, -1}, {1, 0}},
                                   {{1, -1}, {0, 1}},
                                   {{2, -2}, {1, 0}}});
  CHECK(ss.pages[0].dr_rank.empty());

  // The jump happens on page two: the class at (0,-1) hits the deep level.
  CHECK(ss.pages[1].cells == ss.pages[0].cells);
  CHECK(ss.pages[1].dr_rank ==
        std::map<std::pair<int, int>, std::size_t>{{{0, -1}, 1}});

  CHECK(ss.pages[2].cells == Cells{{{1, -1}, {0, 1}}});
  CHECK(ss.pages[2].dr_rank.empty());
  CHECK(ss.pages[3].cells == ss.pages[2].cells);
  CHECK(ss.stable_page == 3);

  check_rank_bookkeeping(ss);
  check_convergence(c, f, ss);
}

TEST_CASE("degenerate filtration stabilizes immediately", "[spectral]") {
  bgg::BlockContext<Rational> ctx(a1_data());
  ChainComplex<Rational> c = bgg::proj_resolution(bgg::simple(ctx.alg, 0)).to_chain();
  Filtration<Rational> f = bgg::trace_filtration(c, 5, {{0, 1}});
  bgg::check_filtration(c, f);

  SSResult ss = bgg::compute_spectral(c, f);
  REQUIRE(ss.pages.size() == 2);
  CHECK(ss.stable_page == 1);
  CHECK(ss.pages[0].dr_rank.empty());
  CHECK(ss.pages[0].cells == ss.pages[1].cells);

  auto h = c.cohomology_vertex_dims();
  CHECK(ss.pages[0].cells.size() == h.size());
  for (const auto& [n, dims] : h) CHECK(ss.pages[0].cells.at({5, n - 5}) == dims);

  check_rank_bookkeeping(ss);
  check_convergence(c, f, ss);
}

TEST_CASE("page cap and zero complex", "[spectral]") {
  bgg::BlockContext<Rational> ctx(a1_data());
  ChainComplex<Rational> c = bgg::proj_resolution(bgg::simple(ctx.alg, 1)).to_chain();
  Filtration<Rational> f = bgg::trace_filtration(c, 0, {{0, 1}, {1}});

  SSResult capped = bgg::compute_spectral(c, f, 1);
  REQUIRE(capped.pages.size() == 1);
  CHECK(capped.pages[0].cells == bgg::compute_spectral(c, f).pages[0].cells);

  ChainComplex<Rational> z = ChainComplex<Rational>::zero(ctx.alg);
  SSResult ss = bgg::compute_spectral(z, bgg::trace_filtration(z, 0, {{0, 1}}));
  REQUIRE(ss.pages.size() == 1);
  CHECK(ss.pages[0].cells.empty());
  CHECK(ss.stable_page == 1);
}

TEST_CASE("spectral sequences in prime characteristic", "[spectral]") {
  bgg::AlgebraData d = a1_data();
  d.rational_field = false;
  d.prime = 7;
  bgg::BlockContext<bgg::Fp> ctx(d);
  ChainComplex<bgg::Fp> c = bgg::proj_resolution(bgg::simple(ctx.alg, 1)).to_chain();
  Filtration<bgg::Fp> f = bgg::trace_filtration(c, 0, {{0, 1}, {1}});
  bgg::check_filtration(c, f);

  SSResult ss = bgg::compute_spectral(c, f);
  CHECK(ss.stable_page == 2);
  CHECK(ss.pages.back().cells ==
        std::map<std::pair<int, int>, std::vector<std::size_t>>{
            {{1, -1}, {0, 1}}});
}
