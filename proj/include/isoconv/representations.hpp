#pragma once

// Energy representations of an objective, isotropic energy on GL+(2) and the
// exact conversions between them:
//
//   W(F) = g(l1, l2) = h(l1/l2) = f(log^2(l1/l2)) = ftilde(||dev2 log U||^2) = z(K(F))
//
// Conversions are lazy compositions. When the source carries analytic first
// and second derivatives, the result carries chain-rule derivatives too.

#include <string>
#include <string_view>
#include <variant>

#include "isoconv/mat2.hpp"
#include "isoconv/scalar_fn.hpp"

namespace isoconv {

enum class RepKind { MatrixW, SymmetricG, RatioH, LogSqF, StrainFTilde, DistortionZ };

std::string_view to_string(RepKind kind);

class EnergyRep {
 public:
  using Payload = std::variant<ScalarFn, SymmetricFn2, MatrixFn>;

  /// isochoric = true triggers the scaling check W(aF) = W(F).
  static EnergyRep matrix(std::string name, MatrixFn w, bool isochoric);
  static EnergyRep symmetric_g(std::string name, SymmetricFn2 g, bool isochoric);
  /// Checks h(t) = h(1/t) on a log grid over [1.0001, 1e3].
  static EnergyRep ratio_h(std::string name, ScalarFn h);
  static EnergyRep log_sq_f(std::string name, ScalarFn f);
  static EnergyRep strain_ftilde(std::string name, ScalarFn ftilde);
  static EnergyRep distortion_z(std::string name, ScalarFn z);

  RepKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool isochoric_declared() const { return isochoric_; }

  const ScalarFn& scalar() const;
  const SymmetricFn2& g() const;
  const MatrixFn& matrix_fn() const;

 private:
  EnergyRep(RepKind kind, std::string name, Payload payload, bool isochoric)
      : kind_(kind), name_(std::move(name)), payload_(std::move(payload)), isochoric_(isochoric) {}

  RepKind kind_;
  std::string name_;
  Payload payload_;
  bool isochoric_;
};

/// h(t) = W(diag(t, 1)); raises NotIsochoric if W(aF) != W(F) on the sample.
EnergyRep h_from_matrix(const EnergyRep& w);
/// h(t) = g(sqrt t, 1/sqrt t).
EnergyRep h_from_g(const SymmetricFn2& g);

ScalarFn f_from_h(const ScalarFn& h);
ScalarFn h_from_f(const ScalarFn& f);
ScalarFn ftilde_from_f(const ScalarFn& f);
ScalarFn f_from_ftilde(const ScalarFn& ftilde);
ScalarFn z_from_h(const ScalarFn& h);
ScalarFn h_from_z(const ScalarFn& z);

/// g(x, y) = h(x / y).
SymmetricFn2 g_from_h(const ScalarFn& h);
/// g(x, y) = W(diag(x, y)).
SymmetricFn2 g_from_matrix(const MatrixFn& w);

/// Numerical check of g(ax, ay) = g(x, y) on a fixed sample.
bool looks_isochoric(const SymmetricFn2& g);

/// The four scalar forms of one isochoric energy.
struct ScalarForms {
  ScalarFn h;
  ScalarFn f;
  ScalarFn ftilde;
  ScalarFn z;
};

/// Raises NotIsochoric for energies not declared isochoric.
ScalarFn to_ratio_h(const EnergyRep& e);
ScalarForms scalar_forms(const EnergyRep& e);

double eval_at_matrix(const EnergyRep& e, const Mat2& F);

}  // namespace isoconv
