#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpasym/report.hpp"
#include "mpasym/verification.hpp"

namespace {

using namespace mpasym;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rational> parse_direction(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& tok : split(text, ',')) {
    try {
      out.push_back(rational_from_string(tok));
    } catch (const std::invalid_argument& e) {
      throw InputError("--direction: " + std::string(e.what()));
    }
  }
  if (out.size() < 2) throw InputError("--direction needs at least two components");
  if (out.back() <= 0) throw InputError("--direction: last component must be positive");
  return out;
}

// "a..b" or "a..b..step"
std::vector<long> parse_scales(const std::string& text) {
  long a = 0, b = 0, step = 1;
  int n = std::sscanf(text.c_str(), "%ld..%ld..%ld", &a, &b, &step);
  if (n < 2 || step <= 0 || b < a) throw InputError("--scales: expected a..b or a..b..step");
  std::vector<long> out;
  for (long s = a; s <= b; s += step) out.push_back(s);
  return out;
}

std::vector<long> integer_direction(const std::vector<Rational>& dir) {
  Integer l = 1;
  for (const Rational& q : dir) l = boost::multiprecision::lcm(l, denominator(q));
  std::vector<long> r;
  for (const Rational& q : dir)
    r.push_back(Integer(numerator(q) * (l / denominator(q))).convert_to<long>());
  return r;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot write " + out_path);
  f << text;
}

PointSpec resolve_point(const Problem& prob) {
  if (prob.point) return *prob.point;
  if (prob.gf.nvars() != 2)
    throw InputError("no [point] given; automatic discovery only works for two variables");
  DoublePointSearch s = find_double_points_2d(prob.gf.denominator);
  if (s.positive_dimensional)
    throw UnsupportedError("the singular system is positive-dimensional; give [point] explicitly");
  if (s.positive_real.empty())
    throw UnsupportedError("no positive real double point found; give [point] explicitly");
  return s.positive_real.front();
}

int cmd_classify(const std::string& file, const std::string& out_path) {
  Problem prob = load_problem(file);
  PointSpec pt = resolve_point(prob);
  MultiplePointData mp = analyze_multiple_point(prob.gf, pt, prob.options);
  DirectionMatrix C = direction_matrix(mp.sheets, pt);
  Classification cl = classify(C, prob.options.rank_tolerance);
  emit(dump_report(classify_report(prob.gf, mp, cl, cone_hull(C))), out_path);
  return mp.minimality.kind == MinimalityStatus::Kind::Fail ? 4 : 0;
}

int cmd_asym(const std::string& file, const std::string& direction, const std::string& out_path) {
  Problem prob = load_problem(file);
  PointSpec pt = resolve_point(prob);
  MultiplePointData mp = analyze_multiple_point(prob.gf, pt, prob.options);
  std::vector<Rational> dir = parse_direction(direction);
  if (int(dir.size()) != prob.gf.nvars())
    throw InputError("--direction arity does not match the variable count");
  DirectionMatrix C = direction_matrix(mp.sheets, pt);
  Classification cl = classify(C, prob.options.rank_tolerance);
  AsymptoticResult res = leading_term(prob.gf, mp, dir, Dispatch::Auto,
                                      prob.options.rank_tolerance);
  emit(dump_report(asym_report(prob.gf, mp, cl, res, integer_direction(dir))), out_path);
  return mp.minimality.kind == MinimalityStatus::Kind::Fail ? 4 : 0;
}

int cmd_coeffs(const std::string& file, int max_total_degree, const std::string& out_path) {
  if (max_total_degree < 0) throw InputError("--max-total-degree must be nonnegative");
  Problem prob = load_problem(file);
  const int k = prob.gf.nvars();
  std::vector<int> shape(size_t(k), max_total_degree);
  SeriesTable box = coefficients_box(prob.gf.numerator, prob.gf.denominator, shape);
  std::string csv;
  for (int v = 0; v < k; ++v) csv += "r" + std::to_string(v + 1) + ",";
  csv += "exact,decimal\n";
  Monomial r(size_t(k), 0);
  for (;;) {
    if (total_degree(r) <= max_total_degree) {
      Rational a = box.at(r);
      for (int e : r) csv += std::to_string(e) + ",";
      csv += rational_to_string(a) + "," + float_str(to_double(a)) + "\n";
    }
    int i = k - 1;
    while (i >= 0) {
      if (++r[size_t(i)] <= max_total_degree) break;
      r[size_t(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  emit(csv, out_path);
  return 0;
}

int cmd_compare(const std::string& file, const std::string& direction, const std::string& scales,
                const std::string& out_path) {
  Problem prob = load_problem(file);
  PointSpec pt = resolve_point(prob);
  MultiplePointData mp = analyze_multiple_point(prob.gf, pt, prob.options);
  std::vector<Rational> dir = parse_direction(direction);
  if (int(dir.size()) != prob.gf.nvars())
    throw InputError("--direction arity does not match the variable count");
  AsymptoticResult res = leading_term(prob.gf, mp, dir, Dispatch::Auto,
                                      prob.options.rank_tolerance);
  ComparisonTable t = compare_direction(prob.gf, res, dir, parse_scales(scales));
  emit(comparison_csv(t), out_path);
  return 0;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rational(num(rng)) / Rational(den(rng));
}

int cmd_check(const std::string& file, const std::string& out_path) {
  Problem prob = load_problem(file);
  PointSpec pt = resolve_point(prob);
  MultiplePointData mp = analyze_multiple_point(prob.gf, pt, prob.options);
  const int d = prob.gf.nvars() - 1;
  const int n = mp.multiplicity - 1;
  bool ok = true;
  Json j;

  {
    // exact divided-difference identity on random instances
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick_n(1, 3), deg(0, 5);
    int instances = 50;
    bool pass = true;
    for (int i = 0; i < instances && pass; ++i) {
      int m = pick_n(rng);
      std::vector<Rational> v;
      for (int t = 0; t <= m; ++t) v.push_back(random_rational(rng));
      if (i % 5 == 0 && m >= 1) v[1] = v[0];  // exercise the confluent case
      QPolyU h;
      int dh = deg(rng);
      for (int t = 0; t <= dh; ++t) h.push_back(random_rational(rng));
      pass = divided_difference_identity_check(v, h);
    }
    j["divided_difference"] = Json{{"instances", instances}, {"status", pass ? "pass" : "fail"}};
    ok = ok && pass;
  }

  // interior direction: barycentric mix of the rows of C
  DirectionMatrix C = direction_matrix(mp.sheets, pt);
  std::vector<Rational> delta(size_t(d), Rational(0));
  for (const auto& row : C.rows)
    for (int k = 0; k < d; ++k) delta[size_t(k)] += row[size_t(k)] / Rational(C.nplus1());
  std::vector<Rational> alpha(size_t(n) + 1, Rational(1) / Rational(n + 1));

  if (prob.gf.has_factors() && n >= 1) {
    CriticalSetReport rep = critical_set_check(prob.gf, mp, delta);
    j["critical_set"] = Json{{"grad_norm_at_A", float_str(rep.grad_norm_at_A)},
                             {"min_grad_off_A", float_str(rep.min_grad_off_A)},
                             {"min_re_f", float_str(rep.min_re_f)},
                             {"status", rep.pass ? "pass" : "fail"}};
    ok = ok && rep.pass;

    std::vector<RPoly> vanishing;
    for (const RPoly& f : prob.gf.factors)
      if (poly_eval(f, pt.coordinates) == 0) vanishing.push_back(f);
    double err = hessian_fd_check(vanishing, alpha, pt);
    bool pass = err <= 1e-6;
    j["hessian_fd"] = Json{{"max_rel_err", float_str(err)}, {"status", pass ? "pass" : "fail"}};
    ok = ok && pass;
  } else {
    j["critical_set"] = Json{{"status", "skipped"}};
    j["hessian_fd"] = Json{{"status", "skipped"}};
  }

  bool fl_applicable = d == 1 && prob.gf.has_factors();
  for (const Rational& c : pt.coordinates) fl_applicable = fl_applicable && c == 1;
  if (fl_applicable) {
    ComparisonTable t = fl_quadrature_check(prob.gf, mp, delta[0], {20, 40}, 256);
    // monotone decay, except when both rows already sit at the
    // quadrature noise floor
    bool pass = t.rows.back().rel_err <= 1e-5 &&
                (t.rows.back().rel_err <= t.rows.front().rel_err ||
                 t.rows.back().rel_err <= 1e-6);
    Json rows = Json::array();
    for (const auto& row : t.rows)
      rows.push_back(Json{{"r", row.r},
                          {"oracle", rational_to_string(row.oracle)},
                          {"predicted", float_str(row.predicted)},
                          {"rel_err", float_str(row.rel_err)}});
    j["fl_quadrature"] = Json{{"rows", rows}, {"status", pass ? "pass" : "fail"}};
    ok = ok && pass;
  } else {
    j["fl_quadrature"] = Json{{"status", "skipped"}};
  }

  Json out;
  out["checks"] = j;
  out["status"] = ok ? "pass" : "fail";
  emit(dump_report(out), out_path);
  return ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"leading-term coefficient asymptotics of rational generating functions"};
  app.require_subcommand(1);

  std::string file, direction, scales, out_path;
  int max_total_degree = 10;

  CLI::App* classify = app.add_subcommand("classify", "locate/verify the point and classify it");
  classify->add_option("file", file, "problem file (TOML)")->required();
  classify->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* asym = app.add_subcommand("asym", "leading-term asymptotics in a direction");
  asym->add_option("file", file, "problem file (TOML)")->required();
  asym->add_option("--direction", direction, "r1,...,r_{d+1}")->required();
  asym->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* coeffs = app.add_subcommand("coeffs", "dump exact Taylor coefficients as CSV");
  coeffs->add_option("file", file, "problem file (TOML)")->required();
  coeffs->add_option("--max-total-degree", max_total_degree, "total-degree cutoff")->required();
  coeffs->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* compare = app.add_subcommand("compare", "prediction vs exact coefficients (CSV)");
  compare->add_option("file", file, "problem file (TOML)")->required();
  compare->add_option("--direction", direction, "r1,...,r_{d+1}")->required();
  compare->add_option("--scales", scales, "a..b or a..b..step")->required();
  compare->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* check = app.add_subcommand("check", "run internal consistency checks");
  check->add_option("file", file, "problem file (TOML)")->required();
  check->add_option("--out", out_path, "write output here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(file, out_path);
    if (asym->parsed()) return cmd_asym(file, direction, out_path);
    if (coeffs->parsed()) return cmd_coeffs(file, max_total_degree, out_path);
    if (compare->parsed()) return cmd_compare(file, direction, scales, out_path);
    if (check->parsed()) return cmd_check(file, out_path);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
