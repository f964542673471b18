#include "levydual/gh_params.hpp"

#include <cmath>

#include "levydual/errors.hpp"

namespace levydual {

std::string to_string(GHSubclass s) {
  switch (s) {
    case GHSubclass::NIG:
      return "nig";
    case GHSubclass::VG:
      return "vg";
    case GHSubclass::GeneralGH:
      return "general";
  }
  return "unknown";
}

void GHParams::validate() const {
  if (beta.size() != 2 || mu.size() != 2 || Delta.rows() != 2 || Delta.cols() != 2) {
    throw DimensionMismatch("GH parameters must be bivariate");
  }
  if (!(alpha >= 0.0) || !(delta >= 0.0)) {
    throw InvalidArgument("GH alpha and delta must be nonnegative");
  }
  if (std::abs(Delta(0, 1) - Delta(1, 0)) > 1e-12) {
    throw InvalidArgument("GH Delta must be symmetric");
  }
  if (!(Delta(0, 0) > 0.0) || !(Delta.determinant() > 0.0)) {
    throw InvalidArgument("GH Delta must be positive definite");
  }
  if (std::abs(Delta.determinant() - 1.0) > 1e-10) {
    throw InvalidArgument("GH Delta must have unit determinant");
  }
  if (!(gamma_squared() > 0.0)) {
    throw InvalidArgument("GH moment condition alpha^2 - beta' Delta beta > 0 violated");
  }
  switch (subclass) {
    case GHSubclass::NIG:
      if (std::abs(lambda + 0.5) > 1e-12 || !(delta > 0.0)) {
        throw InvalidArgument("NIG requires lambda = -1/2 and delta > 0");
      }
      break;
    case GHSubclass::VG:
      if (delta != 0.0 || !(lambda > 0.0)) {
        throw InvalidArgument("VG requires delta = 0 and lambda > 0");
      }
      break;
    case GHSubclass::GeneralGH:
      if (delta == 0.0 && !(lambda > 0.0)) {
        throw InvalidArgument("GH with delta = 0 requires lambda > 0");
      }
      break;
  }
}

double GHParams::gamma_squared() const { return alpha * alpha - beta.dot(Delta * beta); }

GHParams GHParams::nig(double alpha, Vector beta, double delta, Vector mu, Matrix Delta) {
  GHParams p;
  p.lambda = -0.5;
  p.alpha = alpha;
  p.beta = std::move(beta);
  p.delta = delta;
  p.mu = std::move(mu);
  p.Delta = std::move(Delta);
  p.subclass = GHSubclass::NIG;
  p.validate();
  return p;
}

GHParams GHParams::vg(double lambda, double alpha, Vector beta, Vector mu, Matrix Delta) {
  GHParams p;
  p.lambda = lambda;
  p.alpha = alpha;
  p.beta = std::move(beta);
  p.delta = 0.0;
  p.mu = std::move(mu);
  p.Delta = std::move(Delta);
  p.subclass = GHSubclass::VG;
  p.validate();
  return p;
}

void GH1DParams::validate() const {
  if (!(alpha >= std::abs(beta))) throw InvalidArgument("GH1D requires alpha >= |beta|");
  if (!(delta >= 0.0)) throw InvalidArgument("GH1D requires delta >= 0");
}

}  // namespace levydual
