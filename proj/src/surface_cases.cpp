#include <functional>
#include <stdexcept>

#include "hamfix/classifier.hpp"

namespace hamfix {

namespace {

long param(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument("missing parameter " + name);
  return it->second;
}

long param_or(const Params& p, const std::string& name, long fallback) {
  auto it = p.find(name);
  return it == p.end() ? fallback : it->second;
}

SurfaceFixedComponent sphere(const std::string& id, long phi, long genus, std::vector<NormalPair> normal) {
  return SurfaceFixedComponent{id, Rational(phi), genus, std::move(normal)};
}

// Coefficient of the single monomial an integral of a homogeneous word can have.
Rational top_coefficient(const LaurentPoly& v, int exponent) {
  for (const auto& [k, c] : v.terms())
    if (k != exponent) throw std::logic_error("inhomogeneous localization sum");
  return v.coefficient(exponent);
}

}  // namespace

FixedPointData surface_case_data(const std::string& case_id, const Params& p) {
  std::vector<FixedComponent> cs;
  if (case_id == "I" || case_id == "I-shared") {
    long m = param(p, "m"), n = param(p, "n"), a = param(p, "a"), b = param(p, "b"), l = param(p, "l");
    cs.emplace_back(sphere("S0", 0, param_or(p, "g", 0), {{m, a}, {n, b}}));
    if (case_id == "I") {
      cs.emplace_back(IsolatedFixedPoint{"p2", Rational(2), {-m, -m, l}});
      cs.emplace_back(IsolatedFixedPoint{"p3", Rational(3), {-n, -n, -l}});
    } else {
      cs.emplace_back(IsolatedFixedPoint{"p2", Rational(2), {-m, -n, l}});
      cs.emplace_back(IsolatedFixedPoint{"p3", Rational(3), {-m, -n, -l}});
    }
  } else if (case_id == "II") {
    long a = param(p, "a"), b = param(p, "b");
    if (p.count("l1")) {
      long l1 = param(p, "l1"), l2 = param(p, "l2"), l3 = param(p, "l3");
      cs.emplace_back(IsolatedFixedPoint{"p0", Rational(0), {l1, l2, l3}});
      cs.emplace_back(sphere("S1", 1, param_or(p, "g", 0), {{1, a}, {-1, b}}));
      cs.emplace_back(IsolatedFixedPoint{"p3", Rational(3), {-l1, -l2, -l3}});
    } else {
      long m = param(p, "m"), n = param(p, "n"), l = param(p, "l");
      cs.emplace_back(IsolatedFixedPoint{"p0", Rational(0), {n, n, l}});
      cs.emplace_back(sphere("S1", 1, param_or(p, "g", 0), {{m, a}, {-n, b}}));
      cs.emplace_back(IsolatedFixedPoint{"p3", Rational(3), {-m, -m, -l}});
    }
  } else if (case_id == "III") {
    long m = param(p, "m"), n = param(p, "n");
    cs.emplace_back(sphere("S0", 0, param_or(p, "g0", 0), {{m, param(p, "a")}, {n, param(p, "b")}}));
    cs.emplace_back(sphere("S2", 1, param_or(p, "g2", 0), {{-m, param(p, "c")}, {-n, param(p, "d")}}));
  } else {
    throw std::invalid_argument("unknown surface case " + case_id);
  }
  return FixedPointData(3, std::move(cs));
}

std::vector<std::pair<std::string, Rational>> verify_surface_equations(const std::string& case_id, const Params& p) {
  FixedPointData data = surface_case_data(case_id, p);
  std::vector<std::pair<std::string, Rational>> out;
  out.emplace_back("int[1]", top_coefficient(abbv_integrate(data, {}), -3));
  out.emplace_back("int[c1]", top_coefficient(abbv_integrate(data, {{1, 1}}), -2));
  if (case_id == "III") {
    LaurentPoly v = abbv_integrate(data, {{1, 2}}) - Rational(2) * abbv_integrate(data, {{2, 1}});
    out.emplace_back("int[c1^2-2c2]", top_coefficient(v, -1));
  }
  return out;
}

EulerRelation fourdim_euler_check(const std::string& config, const Params& p) {
  // Integral of 1 as a function of the unknown degrees (a, b).
  std::function<Rational(long, long)> integral;
  if (config == "surface+1pt") {
    long w1 = param_or(p, "w1", -1), w2 = param_or(p, "w2", -1);
    integral = [=](long a, long) {
      std::vector<FixedComponent> cs;
      cs.emplace_back(sphere("S", 0, 0, {{1, a}}));
      cs.emplace_back(IsolatedFixedPoint{"p", Rational(1), {w1, w2}});
      return top_coefficient(abbv_integrate(FixedPointData(2, std::move(cs)), {}), -2);
    };
  } else if (config == "surface+2pts") {
    long l = param(p, "l");
    integral = [=](long a, long) {
      std::vector<FixedComponent> cs;
      cs.emplace_back(sphere("S", 0, 0, {{1, a}}));
      cs.emplace_back(IsolatedFixedPoint{"p", Rational(1), {-1, l}});
      cs.emplace_back(IsolatedFixedPoint{"q", Rational(2), {-1, -l}});
      return top_coefficient(abbv_integrate(FixedPointData(2, std::move(cs)), {}), -2);
    };
  } else if (config == "surface+surface") {
    integral = [](long a, long b) {
      std::vector<FixedComponent> cs;
      cs.emplace_back(sphere("S", 0, 0, {{1, a}}));
      cs.emplace_back(sphere("T", 1, 0, {{-1, b}}));
      return top_coefficient(abbv_integrate(FixedPointData(2, std::move(cs)), {}), -2);
    };
  } else {
    throw std::invalid_argument("unknown four-dimensional configuration " + config);
  }
  Rational f0 = integral(0, 0);
  Rational fa = integral(1, 0) - f0;
  Rational fb = integral(0, 1) - f0;
  if (fa.is_zero()) throw std::invalid_argument("integral does not determine the Euler number");
  return {-f0 / fa, -fb / fa};
}

}  // namespace hamfix
