#ifndef BGG_ALGEBRA_HPP
#define BGG_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bgg/errors.hpp"
#include "bgg/field.hpp"
#include "bgg/matrix.hpp"
#include "bgg/poset.hpp"

namespace bgg {

/// Field-independent description of a quiver algebra with relations, as
/// read from a file. Coefficients stay as strings until a field is
/// chosen.
struct AlgebraData {
  bool rational_field = true;
  std::int64_t prime = 0;

  struct Vertex {
    std::string name;
    int length = 0;
  };
  struct Arrow {
    std::string name, from, to;
  };
  struct RelTerm {
    std::string coeff;
    std::vector<std::string> path;  // arrow names, composed left to right
  };

  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> order;  // covering pairs, lower first
  std::vector<Arrow> arrows;
  std::vector<std::vector<RelTerm>> relations;
  int path_bound = 0;
};

namespace detail {

template <class F>
F parse_coeff(const std::string& s, std::int64_t prime);

template <>
inline Rational parse_coeff<Rational>(const std::string& s, std::int64_t) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw InputError("bad coefficient: " + s);
  }
}

template <>
inline Fp parse_coeff<Fp>(const std::string& s, std::int64_t prime) {
  auto slash = s.find('/');
  auto to_int = [](const std::string& t) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      throw InputError("bad coefficient: " + t);
    }
    if (pos != t.size()) throw InputError("bad coefficient: " + t);
    return v;
  };
  if (slash == std::string::npos) return Fp(to_int(s), prime);
  return Fp(to_int(s.substr(0, slash)), prime) / Fp(to_int(s.substr(slash + 1)), prime);
}

}  // namespace detail

/// Basic quiver algebra with relations over a field, presented by a
/// weight poset, arrows between comparable vertices, and a homogeneous
/// admissible ideal. A monomial basis of the quotient is computed degree
/// by degree together with right-multiplication tables, and must vanish
/// at or before `path_bound`.
template <class F>
class QuiverAlgebra {
 public:
  struct Arrow {
    std::string name;
    std::size_t from, to;
  };
  struct BasisPath {
    std::size_t src, tgt;
    std::vector<std::size_t> word;  // arrow indices, applied left to right
  };
  using SparseVec = std::vector<std::pair<std::size_t, F>>;

  explicit QuiverAlgebra(const AlgebraData& data) : data_(data) {
    if (!data.rational_field && !is_prime_modulus(data.prime))
      throw InputError("field must be Q or a prime");
    if (!data.rational_field && data.prime >= (std::int64_t{1} << 31))
      throw InputError("prime modulus too large");
    build_poset();
    build_arrows();
    build_relations();
    build_basis();
  }

  const AlgebraData& data() const { return data_; }
  const WeightPoset& poset() const { return poset_; }
  std::size_t vertex_count() const { return poset_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const Arrow& arrow(std::size_t i) const { return arrows_[i]; }

  std::size_t arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].name == name) return i;
    throw InputError("unknown arrow " + name);
  }

  int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<BasisPath>& basis(int degree) const { return basis_[degree]; }

  std::size_t total_dim() const {
    std::size_t n = 0;
    for (const auto& b : basis_) n += b.size();
    return n;
  }

  /// Expansion of basis element (degree, idx) times an arrow over the
  /// degree+1 basis. The arrow must start at the element's target.
  const SparseVec& step(int degree, std::size_t idx, std::size_t arrow) const {
    return steps_[degree][idx * arrow_count() + arrow];
  }

  /// Normal form of an arbitrary arrow word, as a vector over the basis
  /// in its degree (empty once the word length exceeds the top degree).
  SparseVec path_nf(const std::vector<std::size_t>& word) const {
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (arrows_[word[k]].to != arrows_[word[k + 1]].from)
        throw InputError("path is not composable");
    if (word.empty()) throw InputError("path_nf needs a nonempty word");
    std::size_t v = arrows_[word[0]].from;
    SparseVec cur{{trivial_index(v), F(1)}};
    int deg = 0;
    for (std::size_t a : word) {
      if (deg + 1 > top_degree()) return {};
      SparseVec next = fold_arrow(deg, cur, a);
      cur = std::move(next);
      ++deg;
    }
    return cur;
  }

  std::size_t trivial_index(std::size_t vertex) const {
    for (std::size_t i = 0; i < basis_[0].size(); ++i)
      if (basis_[0][i].src == vertex) return i;
    throw std::logic_error("missing trivial path");
  }

  /// One multiplication step in quotient coordinates.
  SparseVec fold_arrow(int degree, const SparseVec& v, std::size_t arrow) const {
    std::map<std::size_t, F> acc;
    for (const auto& [i, c] : v) {
      if (basis_[degree][i].tgt != arrows_[arrow].from)
        throw std::logic_error("fold_arrow: not composable");
      for (const auto& [j, d] : step(degree, i, arrow)) acc[j] += c * d;
    }
    SparseVec out;
    for (auto& [j, c] : acc)
      if (!(c == F(0))) out.emplace_back(j, c);
    return out;
  }

  /// The same algebra with all arrows reversed (relation words reversed
  /// too). Arrow i of the opposite algebra is arrow i reversed.
  QuiverAlgebra opposite() const {
    AlgebraData d = data_;
    for (auto& a : d.arrows) std::swap(a.from, a.to);
    for (auto& rel : d.relations)
      for (auto& term : rel) std::reverse(term.path.begin(), term.path.end());
    // Covers keep their orientation: the weight poset does not flip.
    return QuiverAlgebra(d);
  }

  std::int64_t prime() const { return data_.prime; }

  /// Relations resolved to arrow indices with parsed coefficients.
  const std::vector<std::vector<std::pair<F, std::vector<std::size_t>>>>& relations() const {
    return relations_;
  }

 private:
  void build_poset() {
    std::vector<std::string> names;
    std::vector<int> lengths;
    for (const auto& v : data_.vertices) {
      names.push_back(v.name);
      lengths.push_back(v.length);
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names.size(); ++i) idx[names[i]] = i;
    if (idx.size() != names.size()) throw InputError("duplicate vertex name");
    for (const auto& [a, b] : data_.order) {
      if (!idx.count(a)) throw InputError("order references unknown vertex " + a);
      if (!idx.count(b)) throw InputError("order references unknown vertex " + b);
      covers.emplace_back(idx[a], idx[b]);
    }
    poset_ = WeightPoset::from_covers(names, lengths, covers);
  }

  void build_arrows() {
    std::set<std::string> seen;
    for (const auto& a : data_.arrows) {
      if (!seen.insert(a.name).second) throw InputError("duplicate arrow name " + a.name);
      std::size_t from = poset_.index_of(a.from);
      std::size_t to = poset_.index_of(a.to);
      if (from == to || !poset_.comparable(from, to))
        throw InputError("arrow " + a.name + " joins non-comparable vertices");
      arrows_.push_back({a.name, from, to});
    }
  }

  void build_relations() {
    for (const auto& rel : data_.relations) {
      std::vector<std::pair<F, std::vector<std::size_t>>> terms;
      std::size_t len = 0, src = 0, tgt = 0;
      bool first = true;
      for (const auto& term : rel) {
        F c = detail::parse_coeff<F>(term.coeff, data_.prime);
        if (c == F(0)) continue;
        if (term.path.size() < 2)
          throw InputError("relation path shorter than 2 arrows");
        std::vector<std::size_t> word;
        for (const auto& name : term.path) word.push_back(arrow_index(name));
        for (std::size_t k = 0; k + 1 < word.size(); ++k)
          if (arrows_[word[k]].to != arrows_[word[k + 1]].from)
            throw InputError("relation path is not composable");
        std::size_t s = arrows_[word.front()].from, t = arrows_[word.back()].to;
        if (first) {
          len = word.size();
          src = s;
          tgt = t;
          first = false;
        } else {
          if (word.size() != len)
            throw InputError("relation mixes path lengths; only homogeneous relations are supported");
          if (s != src || t != tgt) throw InputError("relation has inconsistent endpoints");
        }
        terms.emplace_back(c, std::move(word));
      }
      if (!terms.empty()) relations_.push_back(std::move(terms));
    }
  }

  void build_basis() {
    if (data_.path_bound < 1) throw InputError("path_bound must be positive");
    basis_.clear();
    steps_.clear();
    std::vector<BasisPath> b0;
    for (std::size_t v = 0; v < vertex_count(); ++v) b0.push_back({v, v, {}});
    basis_.push_back(std::move(b0));

    if (vertex_count() == 0) throw InputError("algebra has no vertices");
    for (int d = 0;; ++d) {
      const auto& bd = basis_[d];
      // Candidate spanning symbols (i, a) for degree d + 1.
      std::vector<std::pair<std::size_t, std::size_t>> symbols;
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> symbol_index;
      for (std::size_t i = 0; i < bd.size(); ++i)
        for (std::size_t a = 0; a < arrow_count(); ++a)
          if (bd[i].tgt == arrows_[a].from) {
            symbol_index[{i, a}] = symbols.size();
            symbols.emplace_back(i, a);
          }
      // Relation placements b' * r landing in degree d + 1, expanded in
      // symbol coordinates through the existing tables.
      std::vector<std::vector<F>> rows;
      for (const auto& rel : relations_) {
        std::size_t len = rel.front().second.size();
        if (static_cast<std::size_t>(d) + 1 < len) continue;
        int pre = d + 1 - static_cast<int>(len);
        if (pre > top_degree()) continue;
        std::size_t rel_src = arrows_[rel.front().second.front()].from;
        for (std::size_t bi = 0; bi < basis_[pre].size(); ++bi) {
          if (basis_[pre][bi].tgt != rel_src) continue;
          std::vector<F> row(symbols.size(), F(0));
          bool nonzero = false;
          for (const auto& [c, word] : rel) {
            SparseVec cur{{bi, F(1)}};
            int deg = pre;
            for (std::size_t k = 0; k + 1 < word.size(); ++k) {
              cur = fold_arrow(deg, cur, word[k]);
              ++deg;
            }
            for (const auto& [i, cc] : cur) {
              auto it = symbol_index.find({i, word.back()});
              if (it == symbol_index.end()) throw std::logic_error("missing symbol");
              row[it->second] += c * cc;
              nonzero = true;
            }
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
      Matrix<F> rmat(rows.size(), symbols.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < symbols.size(); ++c) rmat.at(r, c) = rows[r][c];
      Rref<F> rr = rref(rmat);
      std::vector<char> is_pivot(symbols.size(), 0);
      for (std::size_t p : rr.pivots) is_pivot[p] = 1;

      std::vector<BasisPath> next;
      std::vector<std::size_t> new_index(symbols.size(), SIZE_MAX);
      for (std::size_t s = 0; s < symbols.size(); ++s) {
        if (is_pivot[s]) continue;
        auto [i, a] = symbols[s];
        BasisPath bp;
        bp.src = bd[i].src;
        bp.tgt = arrows_[a].to;
        bp.word = bd[i].word;
        bp.word.push_back(a);
        new_index[s] = next.size();
        next.push_back(std::move(bp));
      }
      // Right-multiplication table for degree d.
      std::vector<SparseVec> table(bd.size() * arrow_count());
      for (std::size_t s = 0; s < symbols.size(); ++s) {
        auto [i, a] = symbols[s];
        SparseVec nf;
        if (!is_pivot[s]) {
          nf.emplace_back(new_index[s], F(1));
        } else {
          std::size_t prow = 0;
          while (rr.pivots[prow] != s) ++prow;
          for (std::size_t c = 0; c < symbols.size(); ++c) {
            if (is_pivot[c] || rr.mat.at(prow, c) == F(0)) continue;
            nf.emplace_back(new_index[c], -rr.mat.at(prow, c));
          }
        }
        table[i * arrow_count() + a] = std::move(nf);
      }
      steps_.push_back(std::move(table));
      if (next.empty()) break;
      if (d + 1 >= data_.path_bound)
        throw InputError("path basis does not stabilize by path_bound");
      basis_.push_back(std::move(next));
    }
  }

  AlgebraData data_;
  WeightPoset poset_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::pair<F, std::vector<std::size_t>>>> relations_;
  std::vector<std::vector<BasisPath>> basis_;     // by degree
  std::vector<std::vector<SparseVec>> steps_;     // degree -> (idx * arrows + a)
};

}  // namespace bgg

#endif
