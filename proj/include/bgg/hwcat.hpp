#ifndef BGG_HWCAT_HPP
#define BGG_HWCAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "bgg/module.hpp"

namespace bgg {

/// One block: the algebra, its opposite, and the cached standard and
/// costandard families.
template <class F>
struct BlockContext {
  QuiverAlgebra<F> alg;
  QuiverAlgebra<F> op;
  std::vector<StandardData<F>> std_data;
  std::vector<Module<F>> costd;

  explicit BlockContext(const AlgebraData& d) : alg(d), op(alg.opposite()) {
    for (std::size_t w = 0; w < alg.vertex_count(); ++w) {
      std_data.push_back(standard_data(alg, w));
      costd.push_back(costandard(alg, op, w));
    }
  }

  const WeightPoset& poset() const { return alg.poset(); }
  const Module<F>& standard_mod(std::size_t w) const { return std_data[w].mod; }
  const Module<F>& costandard_mod(std::size_t w) const { return costd[w]; }
};

/// Quotient of the standard module at w by the images of the standard
/// modules at the given lower vertices (each must embed uniquely).
template <class F>
Module<F> m_with_divisors(const BlockContext<F>& ctx, std::size_t w,
                          const std::vector<std::size_t>& lower) {
  const Module<F>& mw = ctx.standard_mod(w);
  VertexSpaces<F> acc = empty_spaces(mw);
  for (std::size_t y : lower) {
    if (y == w || !ctx.poset().le(y, w))
      throw InputError("m_I: " + ctx.poset().name(y) + " is not strictly below " +
                       ctx.poset().name(w));
    auto maps = hom_space(ctx.standard_mod(y), mw);
    if (maps.size() != 1)
      throw InputError("m_I: embedding of standard module at " + ctx.poset().name(y) +
                       " is not unique");
    for (std::size_t x = 0; x < acc.size(); ++x)
      acc[x] = span_sum(acc[x], maps[0].mats[x]);
  }
  return split_by_spaces(mw, submodule_closure(mw, acc)).quot;
}

/// Greedy top-down peeling of a filtration by standard modules.
/// Returns (vertex, multiplicity) layers from the top of the order
/// downward, or nullopt if no such filtration exists.
template <class F>
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> standard_filtration(
    const BlockContext<F>& ctx, Module<F> x) {
  std::vector<std::pair<std::size_t, std::size_t>> layers;
  while (!x.is_zero()) {
    std::size_t best = SIZE_MAX;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
      if (x.dims[v] == 0) continue;
      if (best == SIZE_MAX || ctx.poset().length(v) > ctx.poset().length(best)) best = v;
    }
    std::size_t m = x.dims[best];
    // Each generator of the top vertex space must induce a map from the
    // standard module, i.e. kill the kernel of P_best -> M_best.
    ProjSum<F> ps = proj_sum(ctx.alg, std::vector<std::size_t>{best});
    const StandardData<F>& sd = ctx.std_data[best];
    for (std::size_t g = 0; g < m; ++g) {
      std::vector<F> gen(x.dims[best], F(0));
      gen[g] = F(1);
      ModuleMap<F> f = map_from_proj(ps, x, {gen});
      for (std::size_t v = 0; v < x.dims.size(); ++v)
        if (!(f.mats[v] * sd.kernel[v]).is_zero()) return std::nullopt;
    }
    VertexSpaces<F> tr = trace_spaces(x, {best});
    std::size_t tr_dim = 0;
    for (const auto& s : tr) tr_dim += s.cols();
    if (tr_dim != m * sd.mod.total_dim()) return std::nullopt;
    layers.emplace_back(best, m);
    x = split_by_spaces(x, tr).quot;
  }
  return layers;
}

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> problems;

  void fail(const std::string& p) {
    ok = false;
    problems.push_back(p);
  }
};

/// Structural highest-weight checks on a block: scalar endomorphisms of
/// standard modules, order-compatible homomorphisms between them, and
/// standard filtrations of the projective kernels with higher factors.
template <class F>
AxiomReport verify_hw_axioms(const BlockContext<F>& ctx) {
  AxiomReport rep;
  const WeightPoset& p = ctx.poset();
  for (std::size_t w = 0; w < p.size(); ++w) {
    const Module<F>& mw = ctx.standard_mod(w);
    if (mw.dims[w] != 1)
      rep.fail("standard module at " + p.name(w) + " has head dimension " +
               std::to_string(mw.dims[w]));
    std::size_t e = hom_dim(mw, mw);
    if (e != 1)
      rep.fail("End of standard module at " + p.name(w) + " has dimension " +
               std::to_string(e));
  }
  for (std::size_t y = 0; y < p.size(); ++y)
    for (std::size_t w = 0; w < p.size(); ++w) {
      if (p.le(y, w)) continue;
      if (hom_dim(ctx.standard_mod(y), ctx.standard_mod(w)) > 0)
        rep.fail("standard module at " + p.name(y) + " maps to the one at " + p.name(w) +
                 " although " + p.name(y) + " is not below " + p.name(w));
    }
  for (std::size_t w = 0; w < p.size(); ++w) {
    const StandardData<F>& sd = ctx.std_data[w];
    Module<F> k = split_by_spaces(sd.proj, sd.kernel).sub;
    auto fil = standard_filtration(ctx, k);
    if (!fil) {
      rep.fail("kernel of P(" + p.name(w) + ") -> standard has no standard filtration");
      continue;
    }
    for (const auto& [v, mult] : *fil)
      if (!p.lt(w, v))
        rep.fail("kernel of P(" + p.name(w) + ") has standard factor at " + p.name(v) +
                 " which is not above " + p.name(w));
  }
  return rep;
}

}  // namespace bgg

#endif
