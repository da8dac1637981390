#include "efimov/potential.hpp"

#include "efimov/off_unitarity.hpp"
#include "efimov/specfun.hpp"
#include "efimov/two_center.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace efimov::spectrum {

namespace {

double unitary_tail(double r) {
  const double w = specfun::omega();
  return -w * w / (r * r);
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

}  // namespace

double truncation_radius(int k) {
  if (k < 0) throw std::domain_error("truncation index k must be >= 0");
  return std::sqrt(2.0) * (0.75 * specfun::kPi + k * specfun::kPi);
}

PotentialSpec PotentialSpec::nonlocal_unitary() { return {}; }

PotentialSpec PotentialSpec::nonlocal_finite(double t_theta) {
  if (!(t_theta < 1.0)) throw std::domain_error("nonlocal_finite needs t_theta < 1");
  PotentialSpec p;
  p.kind_ = PotentialKind::NonlocalFinite;
  p.t_ = t_theta;
  return p;
}

PotentialSpec PotentialSpec::local(double alpha) {
  if (!(alpha <= 0.0)) throw std::domain_error("local potential needs alpha <= 0");
  PotentialSpec p;
  p.kind_ = PotentialKind::Local;
  p.alpha_ = alpha;
  return p;
}

PotentialSpec PotentialSpec::truncated(int k) {
  PotentialSpec p;
  p.kind_ = PotentialKind::TruncatedVk;
  p.k_ = k;
  p.r0_ = truncation_radius(k);
  return p;
}

PotentialSpec PotentialSpec::auxiliary_core(double lambda, double r0) {
  if (!(lambda <= 0.0)) throw std::domain_error("auxiliary core depth Lambda must be <= 0");
  if (!(r0 > 0.0)) throw std::domain_error("auxiliary core radius r0 must be > 0");
  PotentialSpec p;
  p.kind_ = PotentialKind::AuxiliaryCore;
  p.lambda_ = lambda;
  p.r0_ = r0;
  return p;
}

PotentialSpec PotentialSpec::shifted(double t_theta) {
  if (!(t_theta < 1.0)) throw std::domain_error("shifted potential needs t_theta < 1");
  PotentialSpec p;
  p.kind_ = PotentialKind::Shifted;
  p.t_ = t_theta;
  return p;
}

PotentialSpec PotentialSpec::theta_glued(double t_theta) {
  if (!(t_theta < 1.0) || !(t_theta >= 0.0)) {
    throw std::domain_error("glued potential needs 0 <= t_theta < 1");
  }
  PotentialSpec p;
  p.kind_ = PotentialKind::ThetaGlued;
  p.t_ = t_theta;
  p.r0_ = two_center::a0_from_t(t_theta);
  return p;
}

PotentialSpec PotentialSpec::cutoff_unitary(double cutoff) {
  if (!(cutoff > 0.0)) throw std::domain_error("cutoff radius must be > 0");
  PotentialSpec p;
  p.kind_ = PotentialKind::CutoffUnitary;
  p.r0_ = cutoff;
  return p;
}

PotentialSpec PotentialSpec::with_strength(double strength) const {
  if (!(strength > 0.0)) throw std::domain_error("potential strength must be > 0");
  PotentialSpec p = *this;
  p.strength_ = strength_ * strength;
  return p;
}

double PotentialSpec::inner(double r) const {
  double v = 0.0;
  switch (kind_) {
    case PotentialKind::NonlocalUnitary:
    case PotentialKind::TruncatedVk:
    case PotentialKind::CutoffUnitary:
      v = two_center::effective_eigenvalue(1.0, r);
      break;
    case PotentialKind::NonlocalFinite:
      v = two_center::effective_eigenvalue(t_, r);
      break;
    case PotentialKind::Local:
      v = two_center::local_effective_eigenvalue(alpha_, r);
      break;
    case PotentialKind::AuxiliaryCore:
      v = lambda_;
      break;
    case PotentialKind::Shifted:
    case PotentialKind::ThetaGlued:
      v = off_unitarity::shifted_potential(t_, r);
      break;
  }
  return strength_ * v;
}

double PotentialSpec::outer(double r) const {
  double v = 0.0;
  switch (kind_) {
    case PotentialKind::TruncatedVk:
    case PotentialKind::AuxiliaryCore:
      v = unitary_tail(r);
      break;
    case PotentialKind::CutoffUnitary:
      v = 0.0;
      break;
    case PotentialKind::ThetaGlued:
      v = off_unitarity::theta_outer_branch(t_, r);
      break;
    default:
      return inner(r);
  }
  return strength_ * v;
}

double PotentialSpec::operator()(double r) const {
  const auto b = breakpoint();
  if (b && r > *b) return outer(r);
  return inner(r);
}

std::optional<double> PotentialSpec::breakpoint() const {
  switch (kind_) {
    case PotentialKind::TruncatedVk:
    case PotentialKind::AuxiliaryCore:
    case PotentialKind::ThetaGlued:
    case PotentialKind::CutoffUnitary:
      return r0_;
    default:
      return std::nullopt;
  }
}

double PotentialSpec::threshold() const {
  switch (kind_) {
    case PotentialKind::NonlocalFinite:
      return -0.5 * strength_ * (1.0 - t_) * (1.0 - t_);
    case PotentialKind::Local: {
      const double b = 4.0 * specfun::kPi * alpha_;
      return -strength_ * b * b;
    }
    default:
      return 0.0;
  }
}

bool PotentialSpec::inverse_square_tail() const {
  switch (kind_) {
    case PotentialKind::NonlocalUnitary:
    case PotentialKind::TruncatedVk:
    case PotentialKind::AuxiliaryCore:
      return true;
    case PotentialKind::Local:
      return alpha_ == 0.0;
    default:
      return false;
  }
}

double PotentialSpec::tail_coefficient() const {
  if (!inverse_square_tail()) return 0.0;
  const double w = specfun::omega();
  return strength_ * w * w;
}

bool PotentialSpec::bounded_below() const { return kind_ != PotentialKind::Local; }

double PotentialSpec::reference_length() const {
  switch (kind_) {
    case PotentialKind::AuxiliaryCore:
      return r0_;
    case PotentialKind::TruncatedVk:
    case PotentialKind::CutoffUnitary:
      // The inner branch is -lambda_1, whose structure sits at r ~ 1.
      return std::min(1.0, r0_);
    case PotentialKind::NonlocalFinite:
    case PotentialKind::Shifted:
    case PotentialKind::ThetaGlued:
      return std::min(1.0, two_center::a0_from_t(t_));
    default:
      return 1.0;
  }
}

std::string PotentialSpec::describe() const {
  std::string s;
  switch (kind_) {
    case PotentialKind::NonlocalUnitary:
      s = "nonlocal_unitary";
      break;
    case PotentialKind::NonlocalFinite:
      s = fmt("nonlocal_finite(t_theta=%.17g)", t_);
      break;
    case PotentialKind::Local:
      s = fmt("local(alpha=%.17g)", alpha_);
      break;
    case PotentialKind::TruncatedVk:
      s = "truncated(k=" + std::to_string(k_) + ")";
      break;
    case PotentialKind::AuxiliaryCore:
      s = fmt("auxiliary_core(Lambda=%.17g, r0=%.17g)", lambda_, r0_);
      break;
    case PotentialKind::Shifted:
      s = fmt("shifted(t_theta=%.17g)", t_);
      break;
    case PotentialKind::ThetaGlued:
      s = fmt("theta_glued(t_theta=%.17g)", t_);
      break;
    case PotentialKind::CutoffUnitary:
      s = fmt("cutoff_unitary(R=%.17g)", r0_);
      break;
  }
  if (strength_ != 1.0) s += fmt(" x %.17g", strength_);
  return s;
}

}  // namespace efimov::spectrum
