#include "xxness/params.hpp"

#include <cmath>
#include <sstream>

#include "xxness/errors.hpp"

namespace xxness {

std::string ValidationReport::joined(const char* sep) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << sep;
    os << violations[i];
  }
  return os.str();
}

SquareCoords to_square(const DrivingParams& p) {
  if (!inside_rhombus(p.mu, p.mu_bar, 1e-12)) {
    std::ostringstream os;
    os << "driving (mu=" << p.mu << ", mu_bar=" << p.mu_bar
       << ") outside the admissible rhombus";
    throw InvalidParamsError(os.str());
  }
  return {p.mu / 2.0 - p.mu_bar, p.mu / 2.0 + p.mu_bar};
}

DrivingParams from_square(const SquareCoords& s, double gamma_left,
                          double gamma_right) {
  if (std::abs(s.c) > 1.0 + 1e-12 || std::abs(s.d) > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "(c=" << s.c << ", d=" << s.d << ") outside the unit square";
    throw InvalidParamsError(os.str());
  }
  DrivingParams p;
  p.gamma_left = gamma_left;
  p.gamma_right = gamma_right;
  p.mu = s.c + s.d;
  p.mu_bar = (s.d - s.c) / 2.0;
  return p;
}

DrivingParams mirrored(const DrivingParams& p) {
  DrivingParams m = p;
  std::swap(m.gamma_left, m.gamma_right);
  m.mu = -p.mu;
  return m;
}

ValidationReport validate_driving(const DrivingParams& p) {
  ValidationReport rep;
  auto add = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  if (p.gamma_left < 0.0) add("gamma_left must be >= 0");
  if (p.gamma_right < 0.0) add("gamma_right must be >= 0");
  if (p.gamma_left <= 0.0 && p.gamma_right <= 0.0)
    add("at least one bath coupling must be > 0 (no bath: steady state not unique)");
  if (!inside_rhombus(p.mu, p.mu_bar, 1e-12)) {
    std::ostringstream os;
    os << "(mu=" << p.mu << ", mu_bar=" << p.mu_bar
       << ") violates 1 +- mu/2 +- mu_bar >= 0";
    add(os.str());
  }
  return rep;
}

ValidationReport validate(const DrivingParams& p, const DephasingSpec& d,
                          const ChainSpec& c) {
  ValidationReport rep = validate_driving(p);
  if (c.n < 2) rep.violations.push_back("chain size n must be >= 2");
  if (d.gamma < 0.0) rep.violations.push_back("dephasing gamma must be >= 0");
  return rep;
}

void require_valid_driving(const DrivingParams& p) {
  ValidationReport rep = validate_driving(p);
  if (!rep.ok()) throw InvalidParamsError(rep.joined());
}

void require_valid(const DrivingParams& p, const DephasingSpec& d,
                   const ChainSpec& c) {
  ValidationReport rep = validate(p, d, c);
  if (!rep.ok()) throw InvalidParamsError(rep.joined());
}

}  // namespace xxness
