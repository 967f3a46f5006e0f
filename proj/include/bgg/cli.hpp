#pragma once

/// Command line front end.  Every subcommand computes a JSON value first and
/// renders text from that value, so `--format json` and `--format text` always
/// carry the same information and the text view is reproducible from the JSON.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bgg/algebra_io.hpp"
#include "bgg/errors.hpp"
#include "bgg/hwcat.hpp"
#include "bgg/klpoly.hpp"
#include "bgg/weyl.hpp"

namespace bgg {
namespace cli {

using nlohmann::json;

/// Exit codes: 0 = success, 1 = a mathematical check answered "no",
/// 2 = unusable input (bad flags, unreadable file, invalid presentation).
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

// ---------------------------------------------------------------------------
// rendering helpers

inline std::string render_poly(const std::vector<long long>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    long long c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += (k == 1) ? "q" : "q^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

inline std::vector<long long> poly_coeffs(const KLPolynomial& p) {
  std::vector<long long> c;
  for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k));
  if (p.is_zero()) c.clear();
  return c;
}

// ---------------------------------------------------------------------------
// kl

inline json compute_kl_pair(const std::string& type, const std::string& ys,
                            const std::string& ws) {
  WeylGroup w_grp = WeylGroup::of_type(type);
  auto y = w_grp.parse(ys), w = w_grp.parse(ws);
  if (!y) throw InputError("kl: cannot parse element '" + ys + "'");
  if (!w) throw InputError("kl: cannot parse element '" + ws + "'");
  KLTable table(w_grp);
  const KLPolynomial& p = table.kl(*y, *w);
  json j;
  j["type"] = type;
  j["y"] = w_grp.word(*y);
  j["w"] = w_grp.word(*w);
  j["coefficients"] = poly_coeffs(p);
  j["polynomial"] = render_poly(poly_coeffs(p));
  return j;
}

inline std::string render_kl_pair(const json& j) {
  return j.at("polynomial").get<std::string>() + "\n";
}

inline json compute_kl_census(const std::string& type) {
  WeylGroup w_grp = WeylGroup::of_type(type);
  KLTable table(w_grp);
  json nontrivial = json::array();
  long long comparable = 0, trivial = 0;
  for (WeylGroup::Elt w = 0; w < w_grp.size(); ++w) {
    for (WeylGroup::Elt y = 0; y < w_grp.size(); ++y) {
      if (!w_grp.bruhat_leq(y, w)) continue;
      ++comparable;
      const KLPolynomial& p = table.kl(y, w);
      if (p.is_one()) {
        ++trivial;
        continue;
      }
      json item;
      item["y"] = w_grp.word(y);
      item["w"] = w_grp.word(w);
      item["coefficients"] = poly_coeffs(p);
      item["polynomial"] = render_poly(poly_coeffs(p));
      nontrivial.push_back(item);
    }
  }
  // Order rows by the poset position of w, then of y.
  std::vector<json> rows(nontrivial.begin(), nontrivial.end());
  auto key = [&](const json& r) {
    auto y = *w_grp.parse(r.at("y").get<std::string>());
    auto w = *w_grp.parse(r.at("w").get<std::string>());
    return std::tuple<int, WeylGroup::Elt, int, WeylGroup::Elt>(
        w_grp.length(w), w, w_grp.length(y), y);
  };
  std::sort(rows.begin(), rows.end(),
            [&](const json& a, const json& b) { return key(a) < key(b); });
  json singular = json::array();
  for (WeylGroup::Elt w : w_grp.by_length())
    if (!table.rationally_smooth(w)) singular.push_back(w_grp.word(w));
  json j;
  j["type"] = type;
  j["group_size"] = w_grp.size();
  j["comparable_pairs"] = comparable;
  j["trivial_pairs"] = trivial;
  j["nontrivial"] = rows;
  j["not_rationally_smooth"] = singular;
  return j;
}

inline std::string render_kl_census(const json& j) {
  std::string out;
  out += "type: " + j.at("type").get<std::string>() + "\n";
  out += "elements: " + std::to_string(j.at("group_size").get<long long>()) +
         "   comparable pairs y <= w: " +
         std::to_string(j.at("comparable_pairs").get<long long>()) + "\n";
  if (j.at("nontrivial").empty()) {
    out += "every Kazhdan-Lusztig polynomial P[y,w] with y <= w equals 1\n";
  } else {
    out += "nontrivial Kazhdan-Lusztig polynomials:\n";
    for (const auto& r : j.at("nontrivial")) {
      out += "  P[" + r.at("y").get<std::string>() + "," +
             r.at("w").get<std::string>() + "] = " +
             r.at("polynomial").get<std::string>() + "\n";
    }
    out += "all " + std::to_string(j.at("trivial_pairs").get<long long>()) +
           " other comparable pairs have P[y,w] = 1\n";
  }
  out += "not rationally smooth (" +
         std::to_string(j.at("not_rationally_smooth").size()) + "):";
  for (const auto& w : j.at("not_rationally_smooth"))
    out += " " + w.get<std::string>();
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// verify

template <class F>
json verify_impl(const AlgebraData& data, const std::string& path) {
  BlockContext<F> ctx(data);
  AxiomReport rep = verify_hw_axioms(ctx);
  json j;
  j["algebra"] = path;
  j["field"] = data.rational_field ? std::string("Q")
                                   : "F_" + std::to_string(data.prime);
  j["vertices"] = ctx.poset().size();
  j["total_dimension"] = ctx.alg.total_dim();
  json standards = json::array();
  for (std::size_t w = 0; w < ctx.poset().size(); ++w) {
    json item;
    item["vertex"] = ctx.poset().name(w);
    item["dimension"] = ctx.standard_mod(w).total_dim();
    standards.push_back(item);
  }
  j["standards"] = standards;
  j["ok"] = rep.ok;
  j["problems"] = rep.problems;
  return j;
}

inline json compute_verify(const std::string& path) {
  AlgebraData data = load_algebra_file(path);
  return data.rational_field ? verify_impl<Rational>(data, path)
                             : verify_impl<Fp>(data, path);
}

inline std::string render_verify(const json& j) {
  std::string out;
  out += "algebra: " + j.at("algebra").get<std::string>() + "\n";
  out += "field: " + j.at("field").get<std::string>() +
         "   vertices: " + std::to_string(j.at("vertices").get<long long>()) +
         "   total dimension: " +
         std::to_string(j.at("total_dimension").get<long long>()) + "\n";
  out += "standard dimensions:";
  for (const auto& s : j.at("standards"))
    out += " " + s.at("vertex").get<std::string>() + ":" +
           std::to_string(s.at("dimension").get<long long>());
  out += "\n";
  if (j.at("ok").get<bool>()) {
    out += "axioms: ok\n";
  } else {
    out += "axioms: FAILED\n";
    for (const auto& p : j.at("problems"))
      out += "  - " + p.get<std::string>() + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// driver

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact homological calculator for finite highest weight categories"};
  app.name("bgg");
  app.require_subcommand(1);

  std::string type, algebra_flag, format = "text";
  std::vector<std::string> kl_pair;
  std::string verify_path;

  CLI::App* kl = app.add_subcommand(
      "kl", "Kazhdan-Lusztig polynomials and rational smoothness");
  kl->add_option("--type", type, "Weyl group type, e.g. A3")->required();
  kl->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  kl->add_option("elements", kl_pair,
                 "optional pair y w; omitted lists the nontrivial table")
      ->expected(0, 2);

  CLI::App* verify = app.add_subcommand(
      "verify", "check the highest weight axioms for an algebra file");
  verify->add_option("path", verify_path, "algebra description file");
  verify->add_option("--algebra", algebra_flag, "algebra description file");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    json result;
    std::string text;
    int rc = kOk;
    if (kl->parsed()) {
      if (kl_pair.size() == 1)
        throw InputError("kl: give both elements y and w, or neither");
      if (kl_pair.size() == 2) {
        result = compute_kl_pair(type, kl_pair[0], kl_pair[1]);
        text = render_kl_pair(result);
      } else {
        result = compute_kl_census(type);
        text = render_kl_census(result);
      }
    } else if (verify->parsed()) {
      if (!verify_path.empty() && !algebra_flag.empty() &&
          verify_path != algebra_flag)
        throw InputError("verify: path given twice");
      std::string path = verify_path.empty() ? algebra_flag : verify_path;
      if (path.empty()) throw InputError("verify: no algebra file given");
      result = compute_verify(path);
      rc = result.at("ok").get<bool>() ? kOk : kNegative;
      text = render_verify(result);
    }
    if (format == "json")
      out << result.dump(2) << "\n";
    else
      out << text;
    return rc;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace cli
}  // namespace bgg
